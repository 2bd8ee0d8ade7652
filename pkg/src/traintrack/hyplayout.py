"""Hyperbolic realization of a spine: triangulate, pack circles, draw.

Cutting the once-punctured surface open along its spine leaves a single
``2n``-gon (``n`` = number of edges) whose boundary spells the boundary word
and whose interior contains the puncture.  Coning the puncture to the polygon
corners triangulates the closed surface; a Thurston circle packing makes the
triangulation geodesic for the surface's hyperbolic metric; developing the
triangle fan around the puncture then draws the whole picture inside the
Poincare disk, ready for SVG output.
"""

import math
from dataclasses import dataclass

from .errors import (
    GraphStructureError,
    InternalInvariantError,
    PackingDidNotConverge,
)

__all__ = [
    "ConeTriangulation",
    "PackingRadii",
    "DiskLayout",
    "cone_triangulation",
    "circle_pack",
    "develop",
    "emit_svg",
]

_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# cone triangulation


@dataclass(frozen=True)
class ConeTriangulation:
    """The cut-open polygon, coned to the puncture.

    ``sides[i]`` is the oriented edge labelling the polygon side from corner
    ``i`` to corner ``i + 1``; read in order the sides spell the boundary
    word.  ``corner_vertex[i]`` is the graph vertex each corner descends to in
    the quotient.  Triangle ``i`` has the apex (the puncture) and corners
    ``i`` and ``i + 1``.
    """

    graph: object
    sides: tuple
    corner_vertex: tuple

    @property
    def triangle_count(self):
        return len(self.sides)

    def side_partner(self, i):
        """Index of the side carrying the reversed oriented edge."""
        return self.sides.index(-self.sides[i])


def cone_triangulation(graph):
    """Triangulate the closed surface by coning the puncture.

    The polygon has one side per boundary-word letter and one corner between
    consecutive letters; connecting an interior apex to every corner gives
    ``2n`` triangles.  The quotient Euler count is ``(1 + V) - 3n + 2n =
    2 - 2g``, the closed surface with one marked point.
    """
    sides = graph.rho
    corner_vertex = tuple(graph.tail(d) for d in sides)
    return ConeTriangulation(graph, sides, corner_vertex)


# ---------------------------------------------------------------------------
# circle packing


@dataclass(frozen=True)
class PackingRadii:
    """Hyperbolic circle radii: one for the apex, one per graph vertex."""

    apex: float
    vertex: dict

    def of_corner(self, tri, i):
        return self.vertex[tri.corner_vertex[i % len(tri.corner_vertex)]]


def _corner_angle(r0, r1, r2):
    """Angle at the radius-``r0`` vertex of the triangle of tangent circles.

    The triangle has geodesic side lengths ``r0+r1``, ``r0+r2`` and ``r1+r2``;
    the hyperbolic law of cosines gives the angle enclosed by the two sides
    meeting at the ``r0`` vertex.
    """
    b = r0 + r1
    c = r0 + r2
    a = r1 + r2
    x = (math.cosh(b) * math.cosh(c) - math.cosh(a)) / (
        math.sinh(b) * math.sinh(c))
    return math.acos(min(1.0, max(-1.0, x)))


def circle_pack(tri, tol=1e-10, max_sweeps=100000):
    """Radii making every angle sum ``2*pi``, by per-vertex bisection sweeps.

    Increasing a vertex's radius strictly decreases its angle sum, so each
    sweep solves every vertex's one-dimensional problem by bisection with the
    other radii held fixed (Gauss-Seidel); for genus at least two the sweeps
    contract to the unique packing.
    """
    graph = tri.graph
    if graph.genus < 2:
        raise GraphStructureError(
            "hyperbolic circle packing needs a surface of genus >= 2, "
            f"got genus {graph.genus}")
    corners = tri.corner_vertex
    m = len(corners)
    occurrences = {v: [] for v in graph.vertices}
    for i, v in enumerate(corners):
        occurrences[v].append(i)
    for v, occ in occurrences.items():
        if len(occ) < 3:
            raise GraphStructureError(
                f"vertex {v} has angle deficit: fewer than three polygon "
                "corners descend to it")

    radius = {v: 0.5 for v in graph.vertices}
    apex = 0.5

    def apex_sum(r):
        return sum(
            _corner_angle(r, radius[corners[i]], radius[corners[(i + 1) % m]])
            for i in range(m))

    def vertex_sum(v, r):
        total = 0.0
        for i in occurrences[v]:
            left = corners[(i - 1) % m]
            right = corners[(i + 1) % m]
            total += _corner_angle(r, apex, r if left == v else radius[left])
            total += _corner_angle(r, apex, r if right == v else radius[right])
        return total

    def solve(angle_sum, start):
        lo = hi = start
        while angle_sum(lo) <= _TWO_PI and lo > 1e-12:
            lo *= 0.5
        while angle_sum(hi) >= _TWO_PI and hi < 64.0:
            hi *= 2.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if angle_sum(mid) > _TWO_PI:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    for _ in range(max_sweeps):
        apex = solve(apex_sum, apex)
        for v in graph.vertices:
            radius[v] = solve(lambda r, v=v: vertex_sum(v, r), radius[v])
        residual = abs(apex_sum(apex) - _TWO_PI)
        for v in graph.vertices:
            residual = max(residual, abs(vertex_sum(v, radius[v]) - _TWO_PI))
        if residual < tol:
            return PackingRadii(apex, dict(sorted(radius.items())))
    raise PackingDidNotConverge(
        f"angle sums still off by {residual:.3e} after {max_sweeps} sweeps")


# ---------------------------------------------------------------------------
# development into the disk


@dataclass(frozen=True)
class DiskLayout:
    """Coordinates of the developed fan in the Poincare disk.

    The apex sits at the origin; ``corners[i]`` is the Euclidean coordinate
    pair of polygon corner ``i``; ``geodesics[i]`` describes the side from
    corner ``i`` to corner ``i + 1`` as either ``("line",)`` or
    ``("arc", cx, cy, r, sweep)`` for the circular arc orthogonal to the unit
    circle.
    """

    sides: tuple
    corner_vertex: tuple
    corners: tuple
    geodesics: tuple
    side_lengths: tuple
    closure_defect: float
    pair_defect: float


def _hyp_dist(p, q):
    dd = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
    den = (1.0 - p[0] ** 2 - p[1] ** 2) * (1.0 - q[0] ** 2 - q[1] ** 2)
    return math.acosh(1.0 + 2.0 * dd / den)


def _geodesic(p, q):
    """Geodesic from ``p`` to ``q``: diameter segment or orthogonal arc."""
    det = p[0] * q[1] - p[1] * q[0]
    if abs(det) < 1e-12:
        return ("line",)
    np2 = 1.0 + p[0] ** 2 + p[1] ** 2
    nq2 = 1.0 + q[0] ** 2 + q[1] ** 2
    cx = (np2 * q[1] - nq2 * p[1]) / (2.0 * det)
    cy = (nq2 * p[0] - np2 * q[0]) / (2.0 * det)
    r = math.sqrt(max(cx * cx + cy * cy - 1.0, 0.0))
    a1 = math.atan2(p[1] - cy, p[0] - cx)
    a2 = math.atan2(q[1] - cy, q[0] - cx)
    turn = math.remainder(a2 - a1, _TWO_PI)
    return ("arc", cx, cy, r, 1 if turn > 0 else 0)


def develop(tri, radii):
    """Lay the triangle fan out around the apex at the disk origin.

    Corner ``i`` goes at hyperbolic distance ``r_apex + r_vertex`` from the
    origin, at the accumulated apex angle of the preceding triangles; the
    packing's apex condition makes the fan close up again.
    """
    corners = tri.corner_vertex
    m = len(corners)
    apex_angles = [
        _corner_angle(radii.apex, radii.vertex[corners[i]],
                      radii.vertex[corners[(i + 1) % m]])
        for i in range(m)
    ]
    closure = abs(sum(apex_angles) - _TWO_PI)
    if closure > 1e-8:
        raise PackingDidNotConverge(
            f"developed fan misses closing up by {closure:.3e}")
    points = []
    theta = 0.0
    for i in range(m):
        rho = math.tanh(0.5 * (radii.apex + radii.vertex[corners[i]]))
        points.append((rho * math.cos(theta), rho * math.sin(theta)))
        theta += apex_angles[i]
    lengths = tuple(
        _hyp_dist(points[i], points[(i + 1) % m]) for i in range(m))
    pair_defect = 0.0
    for i in range(m):
        j = tri.side_partner(i)
        pair_defect = max(pair_defect, abs(lengths[i] - lengths[j]))
    if pair_defect > 1e-6:
        raise InternalInvariantError(
            f"identified sides developed to unequal lengths ({pair_defect:.3e})")
    geodesics = tuple(
        _geodesic(points[i], points[(i + 1) % m]) for i in range(m))
    return DiskLayout(tri.sides, corners, tuple(points), geodesics, lengths,
                      closure, pair_defect)


# ---------------------------------------------------------------------------
# SVG emission


def _fmt(x):
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _path(p, q, geo):
    if geo[0] == "line":
        return (f"M {_fmt(p[0])} {_fmt(p[1])} L {_fmt(q[0])} {_fmt(q[1])}")
    _, _, _, r, sweep = geo
    return (f"M {_fmt(p[0])} {_fmt(p[1])} A {_fmt(r)} {_fmt(r)} 0 0 {sweep} "
            f"{_fmt(q[0])} {_fmt(q[1])}")

_STYLE = """\
<style>
.disk-boundary{fill:none;stroke:#202020;stroke-width:0.008}
.polygon-side{fill:none;stroke:#1f3d7a;stroke-width:0.012;stroke-linecap:round}
.edge-label{font-size:0.08px;font-family:monospace;fill:#1f3d7a;text-anchor:middle}
.inf-polygon{fill:#b5b5cf;fill-opacity:0.85;stroke:#41415e;stroke-width:0.005}
.inf-label{font-size:0.07px;font-family:monospace;fill:#30303c;text-anchor:middle}
.puncture{fill:#000000}
</style>"""


def emit_svg(layout, report, structure=()):
    """Deterministic SVG of the developed polygon and train track data.

    Draws the unit-circle boundary, every polygon side as a geodesic with its
    edge label (each label appears twice, once per side of the identified
    pair), one shaded schematic ``k``-gon per infinitesimal polygon near its
    vertex, and the puncture at the origin.  Identical inputs yield identical
    bytes.
    """
    m = len(layout.sides)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="600" height="600" viewBox="-1.05 -1.05 2.1 2.1">',
        _STYLE,
        '<circle class="disk-boundary" cx="0" cy="0" r="1"/>',
    ]
    for i in range(m):
        p = layout.corners[i]
        q = layout.corners[(i + 1) % m]
        out.append(f'<path class="polygon-side" '
                   f'd="{_path(p, q, layout.geodesics[i])}"/>')
    for i in range(m):
        p = layout.corners[i]
        q = layout.corners[(i + 1) % m]
        mx = 0.5 * (p[0] + q[0])
        my = 0.5 * (p[1] + q[1])
        norm = math.hypot(mx, my)
        if norm > 1e-9:
            mx += 0.085 * mx / norm
            my += 0.085 * my / norm
        out.append(f'<text class="edge-label" x="{_fmt(mx)}" y="{_fmt(my)}">'
                   f'e{abs(layout.sides[i])}</text>')
    polys = tuple(structure or ())
    seen_at = {}
    for label, poly in enumerate(polys):
        spot = next(i for i, v in enumerate(layout.corner_vertex)
                    if v == poly.vertex)
        nth = seen_at.get(poly.vertex, 0)
        seen_at[poly.vertex] = nth + 1
        scale = 0.80 - 0.12 * nth
        cx = scale * layout.corners[spot][0]
        cy = scale * layout.corners[spot][1]
        phi0 = math.atan2(cy, cx)
        pts = " ".join(
            f"{_fmt(cx + 0.055 * math.cos(phi0 + _TWO_PI * j / poly.k))},"
            f"{_fmt(cy + 0.055 * math.sin(phi0 + _TWO_PI * j / poly.k))}"
            for j in range(poly.k))
        out.append(f'<polygon class="inf-polygon" points="{pts}"/>')
        out.append(f'<text class="inf-label" x="{_fmt(cx)}" y="{_fmt(cy)}">'
                   f'{label}</text>')
    out.append('<circle class="puncture" cx="0" cy="0" r="0.015"/>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
