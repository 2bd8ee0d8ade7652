"""Dehn twists as graph self-maps on a standard one-vertex spine.

A twist about a simple closed curve ``c`` drags everything that crosses the
annulus around ``c`` once around the curve.  Combinatorially, on a spine that
carries ``c`` as an embedded cycle: every direction landing in the *twisting
sector* at a curve visit gets the curve word appended to its image.  Which of
the two sectors at a visit is the twisting one, and with which orientation the
curve word is inserted, are global handedness conventions; they are fixed once
by the two module constants below, calibrated so that composites of the
standard generators reproduce known growth rates, and then apply uniformly to
every curve and every sign.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CurveNotRealizable, GraphStructureError, InternalInvariantError
from .graphs import EmbeddedGraph, GraphSelfMap, compose, identity_map, reverse_path, tighten

# Handedness of the construction, frozen by calibration (see the regression
# test pinning generator words and growth rates).  _TWIST_SIDE selects which
# sector at a curve visit receives insertions: +1 walks the rotation from the
# reversed incoming direction to the outgoing one, -1 walks the other way
# around.  _INSERT_SIGN is the orientation of the inserted curve word for a
# positive twist.
_TWIST_SIDE = 1
_INSERT_SIGN = 1


class CurveOnGraph:
    """A closed curve carried by a spine, as a cyclic word of oriented edges.

    The word must be a closed walk, cyclically tight, and may use each
    oriented edge at most once; those checks run against a concrete graph in
    :meth:`validate`, since the curve object itself stores only the word.
    """

    __slots__ = ("path", "name")

    def __init__(self, path, name=None):
        self.path = tuple(path)
        self.name = name

    def validate(self, graph):
        p = self.path
        if not p:
            raise CurveNotRealizable("a curve needs at least one edge")
        n = len(p)
        for i, d in enumerate(p):
            if abs(d) not in graph.edges:
                raise CurveNotRealizable(f"curve uses unknown edge {abs(d)}")
            if graph.head(d) != graph.tail(p[(i + 1) % n]):
                raise CurveNotRealizable("curve word is not a closed walk")
            if p[(i + 1) % n] == -d:
                raise CurveNotRealizable("curve word is not cyclically tight")
        if len(set(p)) != n:
            raise CurveNotRealizable("curve repeats an oriented edge")

    def __eq__(self, other):
        if not isinstance(other, CurveOnGraph):
            return NotImplemented
        return self.path == other.path

    def __hash__(self):
        return hash(self.path)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"CurveOnGraph({list(self.path)}{label})"


def standard_rose(genus):
    """The one-vertex spine of the once-punctured genus-``g`` surface.

    Edges come in handle pairs ``x_i = 2i+1``, ``y_i = 2i+2`` for
    ``i < genus``, all loops at vertex 0, and the boundary word is the product
    of commutators ``x_i y_i x_i^-1 y_i^-1``.
    """
    if genus < 1:
        raise GraphStructureError("genus must be at least 1")
    edges = {e: (0, 0) for e in range(1, 2 * genus + 1)}
    rho = []
    for i in range(genus):
        x, y = 2 * i + 1, 2 * i + 2
        rho.extend((x, y, -x, -y))
    return EmbeddedGraph(edges, rho)


def _visits(graph, curve):
    """One entry per pass of the curve through a vertex.

    Each visit is ``(vertex, rev_in, out)``: the direction pointing back along
    the arrival edge and the direction of departure.  Both are *chord germs* —
    slots in the vertex rotation occupied by the curve itself.
    """
    p = curve.path
    n = len(p)
    visits = []
    for i, step in enumerate(p):
        rev_in = -p[(i - 1) % n]
        visits.append((graph.tail(step), rev_in, step))
    return visits


def _in_arc(pos, size, start, stop, d):
    # strictly between start and stop, walking in rotation direction
    a = (pos[d] - pos[start]) % size
    b = (pos[stop] - pos[start]) % size
    return 0 < a < b


def _twist_sectors(graph, curve):
    """The germ -> visit-index assignment for the twisting sectors.

    Raises :class:`CurveNotRealizable` when the visits cannot be disjoint
    arcs: a germ serving two visits, two chords interleaving at a vertex, or a
    chord germ landing inside another visit's sector all mean the curve word
    is not embeddable as a simple closed curve on this spine.
    """
    visits = _visits(graph, curve)
    chord_germs = []
    for v, rev_in, out in visits:
        if rev_in == out:
            raise InternalInvariantError("degenerate visit on a tight curve")
        chord_germs.extend((rev_in, out))
    if len(set(chord_germs)) != len(chord_germs):
        raise CurveNotRealizable("two curve strands share a direction")
    by_vertex = {}
    for i, (v, rev_in, out) in enumerate(visits):
        by_vertex.setdefault(v, []).append(i)
    for v, idxs in by_vertex.items():
        order = graph.rotation_order(v)
        pos = {d: k for k, d in enumerate(order)}
        size = len(order)
        for i, j in combinations(idxs, 2):
            _, a1, b1 = visits[i]
            _, a2, b2 = visits[j]
            inside = sum(1 for t in (a2, b2) if _in_arc(pos, size, a1, b1, t))
            if inside == 1:
                raise CurveNotRealizable(
                    f"curve strands cross at vertex {v}")
    chord_set = set(chord_germs)
    sector_of = {}
    for i, (v, rev_in, out) in enumerate(visits):
        start, stop = (rev_in, out) if _TWIST_SIDE > 0 else (out, rev_in)
        d = graph.successor(start)
        steps = 0
        while d != stop:
            if d in chord_set:
                raise CurveNotRealizable(
                    "curve strands nest inside a twisting sector "
                    f"at vertex {v}")
            if d in sector_of:
                raise InternalInvariantError(
                    "twisting sectors overlap on a simple curve")
            sector_of[d] = i
            d = graph.successor(d)
            steps += 1
            if steps > graph.valence(v):
                raise InternalInvariantError("rotation walk did not close")
    return visits, sector_of


def dehn_twist(graph, curve, sign=1):
    """The twist about ``curve`` as a self-map of ``graph``.

    ``sign`` +1 or -1 picks the twist or its inverse.  Every direction in a
    twisting sector drags its edge once around the curve: the edge arriving
    through a sector germ has a rotated copy of the curve word appended to its
    image.  Vertices stay put.
    """
    if sign not in (1, -1):
        raise ValueError(f"twist sign must be +1 or -1, got {sign!r}")
    curve.validate(graph)
    visits, sector_of = _twist_sectors(graph, curve)
    p = curve.path
    n = len(p)
    orient = sign * _INSERT_SIGN
    suffix = {}
    for germ, i in sector_of.items():
        gamma = p[i:] + p[:i]
        suffix[germ] = gamma if orient > 0 else reverse_path(gamma)
    images = {}
    for e in graph.edges:
        img = (e,)
        tail_in = suffix.get(-e)  # arriving at head(e) through germ -e
        if tail_in is not None:
            img = img + tail_in
        head_in = suffix.get(e)  # arriving at tail(e) through germ +e
        if head_in is not None:
            img = reverse_path(head_in) + img
        images[e] = tighten(img)
    f = GraphSelfMap(graph, {v: v for v in graph.vertices}, images)
    if not f.preserves_boundary():
        raise InternalInvariantError(
            f"twist about {curve!r} does not preserve the boundary word")
    return f


def _generator_curves(genus):
    """Twist curves a_i, d_i, c_i on ``standard_rose(genus)``.

    ``a_i`` and ``d_i`` are the two loops of handle ``i``.  The ``c_i`` are
    chain curves crossing several handles; together with the a's and d's they
    fill the surface, and twists about curves of the system pairwise satisfy
    braid or commutation relations.  The exact words are pinned by regression
    tests on known growth rates:

    * genus 2: ``c0 = x0 x1`` and the short chain ``c1 = y0~ x1``;
    * genus >= 3: ``c_i = y_i~ x_{i+1} x_{i+2}`` (indices mod genus) for
      ``i < genus - 1``, closed up by the short chain
      ``c_{genus-1} = y0~ x1``.

    At genus 1 only ``a0``, ``d0`` exist (no chain curve fits on one handle).
    """
    if genus < 1:
        raise GraphStructureError("genus must be at least 1")
    curves = {}
    for i in range(genus):
        x, y = 2 * i + 1, 2 * i + 2
        curves[f"a{i}"] = CurveOnGraph((x,), name=f"a{i}")
        curves[f"d{i}"] = CurveOnGraph((y,), name=f"d{i}")
    if genus == 2:
        curves["c0"] = CurveOnGraph((1, 3), name="c0")
        curves["c1"] = CurveOnGraph((-2, 3), name="c1")
    elif genus >= 3:
        for i in range(genus - 1):
            word = (-(2 * i + 2),
                    2 * ((i + 1) % genus) + 1,
                    2 * ((i + 2) % genus) + 1)
            curves[f"c{i}"] = CurveOnGraph(word, name=f"c{i}")
        curves[f"c{genus - 1}"] = CurveOnGraph((-2, 3), name=f"c{genus - 1}")
    return curves


def standard_generators(genus):
    """Name -> curve for the standard twist generators at this genus.

    Provides ``a0..a{g-1}``, ``d0..d{g-1}`` and the chain curves
    ``c0..c{g-1}``; genus must be at least 2 (use :func:`compose_word` with
    ``allow_low_genus`` for torus experiments).
    """
    if genus < 2:
        raise GraphStructureError(
            "standard generators are defined for genus >= 2")
    return _generator_curves(genus)


def compose_word(genus, word, *, allow_low_genus=False):
    """The composite twist map of a word in the standard generators.

    ``word`` is a sequence of ``(name, sign)`` pairs, leftmost letter
    outermost: the rightmost twist acts first.  An empty word gives the
    identity map of the rose.
    """
    if genus < 1:
        raise GraphStructureError("genus must be at least 1")
    if genus < 2 and not allow_low_genus:
        raise GraphStructureError(
            "genus 1 needs allow_low_genus=True (chain generators are "
            "missing there)")
    graph = standard_rose(genus)
    curves = _generator_curves(genus)
    f = identity_map(graph)
    for name, sign in word:
        try:
            curve = curves[name]
        except KeyError:
            known = ", ".join(sorted(curves))
            raise ValueError(
                f"unknown generator {name!r} at genus {genus} "
                f"(have: {known})") from None
        f = compose(f, dehn_twist(graph, curve, sign))
    return f
