"""Independent re-computations used to cross-check the library.

Everything here is deliberately written from first principles (exact
rational arithmetic, direct combinatorial traces) rather than by calling
back into the code under test, so agreement is meaningful evidence:

* characteristic-polynomial / Sturm-sequence spectral radius (exact
  bisection, no floating point until the final answer);
* ribbon-graph face tracing (Euler characteristic / genus without using
  the stored boundary word);
* action on first homology of a rose, with the symplectic form of the
  once-punctured surface;
* raw (untightened) edge-path substitution, for immersion checks;
* direct cusp count of the puncture region along the boundary word;
* hyperbolic law of cosines for tangent-circle corner angles.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


# ---------------------------------------------------------------------------
# Exact polynomials (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def char_poly(matrix) -> list[Fraction]:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recurrence."""
    m = [[Fraction(int(x)) for x in row] for row in np.asarray(matrix)]
    n = len(m)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def mat_mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    def mat_add_scalar(a, c):
        return [[a[i][j] + (c if i == j else 0) for j in range(n)]
                for i in range(n)]

    coeffs = [Fraction(1)]          # c_0 = 1 (monic), then c_1 ... c_n
    mk = [row[:] for row in ident]
    for k in range(1, n + 1):
        mk = mat_mul(m, mk)
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
        mk = mat_add_scalar(mk, ck)
    # p(x) = x^n + c_1 x^(n-1) + ... + c_n ; return lowest-first
    return list(reversed(coeffs))


def poly_val(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [c * k for k, c in enumerate(p)][1:] or [Fraction(0)]


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def poly_divmod(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    if b == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = a[:]
    while len(r) >= len(b) and _poly_trim(r) != [Fraction(0)]:
        shift = len(r) - len(b)
        factor = r[-1] / b[-1]
        if factor == 0:
            r = r[:-1]
            continue
        q[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] -= factor * c
        r = r[:-1]
        if not r:
            r = [Fraction(0)]
    return _poly_trim(q), _poly_trim(r)


def poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while _poly_trim(b) != [Fraction(0)]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a] if lead != 0 else a


def square_free_part(p):
    g = poly_gcd(p, poly_derivative(p))
    q, r = poly_divmod(p, g)
    assert _poly_trim(r) == [Fraction(0)]
    return q


def sturm_chain(q):
    chain = [_poly_trim(list(q)), _poly_trim(poly_derivative(q))]
    while _poly_trim(chain[-1]) != [Fraction(0)]:
        _, r = poly_divmod(chain[-2], chain[-1])
        chain.append([-c for c in _poly_trim(r)])
    return chain[:-1]


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_val(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def roots_in(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def largest_real_root(matrix, eps: Fraction = Fraction(1, 10**12)) -> float:
    """Largest real eigenvalue of a nonnegative integer matrix, by exact
    bisection on the square-free characteristic polynomial using Sturm
    counts.  For a nonnegative matrix this equals the spectral radius."""
    m = np.asarray(matrix)
    if (m < 0).any():
        raise ValueError("oracle expects a nonnegative matrix")
    p = char_poly(m)
    q = square_free_part(p)
    chain = sturm_chain(q)
    bound = Fraction(int(m.sum(axis=1).max()) + 1)
    lo, hi = -bound, bound
    if roots_in(chain, lo, hi) < 1:
        raise ValueError("matrix has no real eigenvalue (not nonnegative?)")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if poly_val(q, mid) == 0:
            if roots_in(chain, mid, hi) == 0:
                return float(mid)
            lo = mid
            continue
        if roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# Ribbon-graph combinatorics
# ---------------------------------------------------------------------------

def face_count(graph) -> int:
    """Number of complementary faces, traced from the rotation system only."""
    darts = set()
    for e in graph.edges:
        darts.add(e)
        darts.add(-e)
    faces = 0
    seen = set()
    for start in sorted(darts):
        if start in seen:
            continue
        faces += 1
        d = start
        while d not in seen:
            seen.add(d)
            d = graph.successor(-d)
    return faces


def genus_via_euler(graph) -> int:
    v = len(graph.vertices)
    e = len(graph.edges)
    f = face_count(graph)
    chi = v - e + f
    assert (2 - chi) % 2 == 0
    return (2 - chi) // 2


# ---------------------------------------------------------------------------
# Homology action of a rose self-map
# ---------------------------------------------------------------------------

def abelianization(f) -> np.ndarray:
    """Signed edge-count matrix of a self-map of a one-vertex graph.
    Row i gives the image of edge ids[i] in the basis of all edges."""
    graph = f.graph
    if len(graph.vertices) != 1:
        raise ValueError("abelianization oracle needs a one-vertex graph")
    ids = sorted(graph.edges)
    index = {e: i for i, e in enumerate(ids)}
    n = len(ids)
    a = np.zeros((n, n), dtype=object)
    for i, e in enumerate(ids):
        for d in f.image(e):
            a[i][index[abs(d)]] += 1 if d > 0 else -1
    return a.astype(int)


def symplectic_form(genus: int) -> np.ndarray:
    """Intersection form in the basis (x0, y0, x1, y1, ...) of the standard
    rose: each handle contributes a 2x2 block [[0, 1], [-1, 0]]."""
    j = np.zeros((2 * genus, 2 * genus), dtype=int)
    for i in range(genus):
        j[2 * i][2 * i + 1] = 1
        j[2 * i + 1][2 * i] = -1
    return j


def is_symplectic(a: np.ndarray, j: np.ndarray) -> bool:
    return np.array_equal(a @ j @ a.T, j)


def h1_spectral_radius(f) -> float:
    """Largest eigenvalue modulus of the (signed) homology action."""
    return float(np.abs(np.linalg.eigvals(abelianization(f).astype(float))).max())


# ---------------------------------------------------------------------------
# Path substitution without tightening
# ---------------------------------------------------------------------------

def raw_apply(f, path) -> tuple:
    """Concatenate the letter images without any cancellation."""
    out = []
    for d in path:
        out.extend(f.image(d))
    return tuple(out)


def has_cancellation(path) -> bool:
    return any(a == -b for a, b in zip(path, path[1:]))


# ---------------------------------------------------------------------------
# Direct puncture-region cusp count
# ---------------------------------------------------------------------------

def puncture_index_direct(f, gate_of, inf_edges) -> Fraction:
    """Index of the puncture singularity, counted along the boundary word.

    The complementary region of the track at the puncture is bounded by
    the boundary word rho.  At the corner between consecutive boundary
    letters d, d' the region is smooth exactly when the two gates reached
    (the gate of -d and the gate of d') are distinct and connected by an
    infinitesimal edge; every other corner is a cusp (prong).  A region
    with k cusps has index 1 - k/2.
    """
    rho = f.graph.rho
    cusps = 0
    for i, d in enumerate(rho):
        nxt = rho[(i + 1) % len(rho)]
        g_in, g_out = gate_of[-d], gate_of[nxt]
        pair = frozenset((g_in, g_out))
        if not (len(pair) == 2 and pair in inf_edges):
            cusps += 1
    return Fraction(1) - Fraction(cusps, 2)


# ---------------------------------------------------------------------------
# Hyperbolic trigonometry
# ---------------------------------------------------------------------------

def corner_angle(r_at: float, r_b: float, r_c: float) -> float:
    """Angle at the first circle of a triangle of pairwise tangent
    hyperbolic circles with the given radii (law of cosines)."""
    b = r_at + r_b
    c = r_at + r_c
    a = r_b + r_c
    num = math.cosh(b) * math.cosh(c) - math.cosh(a)
    den = math.sinh(b) * math.sinh(c)
    return math.acos(max(-1.0, min(1.0, num / den)))


def disk_distance(p: complex, q: complex) -> float:
    """Hyperbolic distance between two points of the unit disk."""
    num = 2 * abs(p - q) ** 2
    den = (1 - abs(p) ** 2) * (1 - abs(q) ** 2)
    return math.acosh(1 + num / den)


# ---------------------------------------------------------------------------
# Misc
# ---------------------------------------------------------------------------

def maps_equal(f, g) -> bool:
    return (f.graph.edges == g.graph.edges
            and f.graph.rho == g.graph.rho
            and dict(f.vertex_image) == dict(g.vertex_image)
            and {e: f.image(e) for e in f.graph.edges}
                == {e: g.image(e) for e in g.graph.edges})
