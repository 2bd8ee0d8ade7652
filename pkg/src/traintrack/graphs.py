"""Embedded graphs and their self-maps, encoded through the boundary word.

An oriented edge is a nonzero integer: ``+e`` traverses edge ``e`` forwards,
``-e`` traverses it backwards, so reversal is negation.  An edge path is a
tuple of oriented edges.

A graph sitting as a spine inside a once-punctured orientable surface is
stored as its edge set together with the *boundary word* ``rho``: the closed
walk around the puncture, which crosses every edge exactly twice, once per
direction.  The cyclic order of directions around each vertex (the rotation
system) is not stored separately — it is recovered from ``rho``: if ``d`` is
immediately followed by ``d'`` on the boundary walk, then ``d'`` is the
rotation successor of the reversed direction ``-d`` at their common vertex.
Conversely a graph with a rotation system has a well-defined boundary walk,
so ``rho`` carries exactly the embedding data and nothing more.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .errors import GraphStructureError, MapCompatibilityError


def reverse_path(path):
    """Reverse an edge path: negate every step and flip their order."""
    return tuple(-d for d in reversed(path))


def tighten(path):
    """Reduce a path to its unique tight representative (rel endpoints).

    Backtracking pairs ``(d, -d)`` are cancelled with a stack scan, which
    resolves cascades of cancellations in a single pass.
    """
    out = []
    for d in path:
        if out and out[-1] == -d:
            out.pop()
        else:
            out.append(d)
    return tuple(out)


def cyclic_tighten(path):
    """Tighten a closed path as a cyclic word (cancel across the seam too)."""
    p = list(tighten(path))
    while len(p) >= 2 and p[0] == -p[-1]:
        p = p[1:-1]
    return tuple(p)


def is_cyclic_rotation(p, q):
    """Whether two tuples agree up to a cyclic rotation."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        return False
    if not p:
        return True
    dbl = q + q
    n = len(p)
    return any(dbl[i:i + n] == p for i in range(len(q)))


class EmbeddedGraph:
    """A finite graph together with its embedding in a once-punctured surface.

    Parameters
    ----------
    edges:
        Mapping from positive integer edge ids to ``(tail, head)`` vertex
        pairs.  Loops (``tail == head``) are allowed.
    rho:
        The boundary word: a closed walk, as a tuple of oriented edges,
        crossing every edge exactly twice, once per direction.

    Construction validates that ``rho`` really is such a walk and that the
    rotation it induces at each vertex is a single cycle; together these force
    the complement of the graph in the surface to be one disk containing the
    puncture.  The genus then comes out of the Euler count and must be a
    positive integer.  Instances are immutable; algorithm moves build new
    graphs rather than mutating.
    """

    __slots__ = ("edges", "rho", "_succ", "_dirs")

    def __init__(self, edges, rho):
        self.edges = {e: (u, v) for e, (u, v) in dict(edges).items()}
        self.rho = tuple(rho)
        if not self.edges:
            raise GraphStructureError("a spine needs at least one edge")
        for e in self.edges:
            if not isinstance(e, int) or isinstance(e, bool) or e <= 0:
                raise GraphStructureError(
                    f"edge ids must be positive integers, got {e!r}")
        counts = Counter(self.rho)
        expected = {d for e in self.edges for d in (e, -e)}
        if set(counts) != expected or any(c != 1 for c in counts.values()):
            raise GraphStructureError(
                "boundary word must cross every oriented edge exactly once")
        n = len(self.rho)
        for i, d in enumerate(self.rho):
            if self.head(d) != self.tail(self.rho[(i + 1) % n]):
                raise GraphStructureError("boundary word is not a closed walk")
        # Rotation system: consecutive boundary steps (d, d') turn the corner
        # between the directions -d and d', so d' succeeds -d at that vertex.
        succ = {}
        for i, d in enumerate(self.rho):
            succ[-d] = self.rho[(i + 1) % n]
        self._succ = succ
        dirs = {}
        for d in succ:
            dirs.setdefault(self.tail(d), []).append(d)
        self._dirs = {v: tuple(sorted(ds)) for v, ds in dirs.items()}
        for v, ds in self._dirs.items():
            d = self._succ[ds[0]]
            seen = {ds[0]}
            while d not in seen:
                seen.add(d)
                d = self._succ[d]
            if seen != set(ds):
                raise GraphStructureError(
                    f"rotation at vertex {v} splits into several cycles")
        two_genus = 1 - len(self._dirs) + len(self.edges)
        if two_genus < 2 or two_genus % 2:
            raise GraphStructureError(
                "boundary word does not give a once-punctured surface of "
                f"genus >= 1 (V={len(self._dirs)}, E={len(self.edges)})")

    def tail(self, d):
        """Vertex an oriented edge leaves from."""
        e = abs(d)
        if e not in self.edges:
            raise GraphStructureError(f"unknown edge in direction {d}")
        u, v = self.edges[e]
        return u if d > 0 else v

    def head(self, d):
        """Vertex an oriented edge arrives at."""
        return self.tail(-d)

    @property
    def vertices(self):
        """Sorted tuple of vertex ids (every vertex meets an edge)."""
        return tuple(sorted(self._dirs))

    @property
    def genus(self):
        """Genus of the once-punctured surface this graph is a spine of."""
        return (1 - len(self._dirs) + len(self.edges)) // 2

    def directions(self, v):
        """All directions based at ``v`` (sorted, not in rotation order)."""
        try:
            return self._dirs[v]
        except KeyError:
            raise GraphStructureError(f"unknown vertex {v}") from None

    def valence(self, v):
        return len(self.directions(v))

    def successor(self, d):
        """The next direction after ``d`` in the rotation at its base vertex."""
        try:
            return self._succ[d]
        except KeyError:
            raise GraphStructureError(f"unknown direction {d}") from None

    def rotation_order(self, v):
        """Directions at ``v`` in rotation order, starting from the smallest."""
        ds = self.directions(v)
        out = [min(ds)]
        while len(out) < len(ds):
            out.append(self._succ[out[-1]])
        return tuple(out)

    def rotation_system(self):
        """The full rotation system, vertex id -> tuple in rotation order."""
        return {v: self.rotation_order(v) for v in self.vertices}

    def __eq__(self, other):
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self.edges == other.edges and self.rho == other.rho

    def __hash__(self):
        return hash((tuple(sorted(self.edges.items())), self.rho))

    def __repr__(self):
        return (f"EmbeddedGraph(V={len(self._dirs)}, E={len(self.edges)}, "
                f"genus={self.genus})")


def genus_of(graph):
    """Genus of the once-punctured surface encoded by the graph."""
    return graph.genus


class GraphSelfMap:
    """A self-map of an embedded graph, combinatorially: vertices to vertices,
    edges to edge paths.

    ``edge_image[e]`` is the image path of the forward orientation; the
    reverse orientation maps to the reversed path.  Images need not be tight.
    Construction checks that images are genuine paths with the right
    endpoints.  It deliberately does *not* require the boundary word to be
    preserved — see :meth:`preserves_boundary` — because maps that reverse the
    surface orientation are still useful self-maps of the graph.
    """

    __slots__ = ("graph", "vertex_image", "edge_image")

    def __init__(self, graph, vertex_image, edge_image):
        self.graph = graph
        self.vertex_image = dict(vertex_image)
        self.edge_image = {e: tuple(p) for e, p in dict(edge_image).items()}
        verts = set(graph.vertices)
        if set(self.vertex_image) != verts:
            raise MapCompatibilityError(
                "vertex_image must cover exactly the vertices")
        for v, w in self.vertex_image.items():
            if w not in verts:
                raise MapCompatibilityError(
                    f"vertex {v} maps to unknown vertex {w}")
        if set(self.edge_image) != set(graph.edges):
            raise MapCompatibilityError(
                "edge_image must cover exactly the edges")
        for e, p in self.edge_image.items():
            want_from = self.vertex_image[graph.tail(e)]
            want_to = self.vertex_image[graph.head(e)]
            if not p:
                if want_from != want_to:
                    raise MapCompatibilityError(
                        f"edge {e} has a trivial image but its endpoints "
                        "map to distinct vertices")
                continue
            for d in p:
                if abs(d) not in graph.edges:
                    raise MapCompatibilityError(
                        f"image of edge {e} uses unknown edge {abs(d)}")
            for a, b in zip(p, p[1:]):
                if graph.head(a) != graph.tail(b):
                    raise MapCompatibilityError(
                        f"image of edge {e} is not a path")
            if graph.tail(p[0]) != want_from or graph.head(p[-1]) != want_to:
                raise MapCompatibilityError(
                    f"image of edge {e} has the wrong endpoints")

    def image(self, d):
        """Image path of an oriented edge."""
        p = self.edge_image[abs(d)]
        return p if d > 0 else reverse_path(p)

    def apply(self, path):
        """Image of an edge path: concatenate step images, then tighten."""
        out = []
        for d in path:
            out.extend(self.image(d))
        return tighten(out)

    def derivative(self, d):
        """First step of the image of ``d`` (the direction map)."""
        p = self.image(d)
        if not p:
            raise MapCompatibilityError(
                f"direction {d} has a trivial image, no derivative")
        return p[0]

    def preserves_boundary(self):
        """Whether the map fixes the puncture loop up to free homotopy.

        True iff the cyclic reduction of the image of ``rho`` is a cyclic
        rotation of the cyclic reduction of ``rho`` itself.  Every map built
        from Dehn twists satisfies this, and every move of the train track
        algorithm keeps it; it doubles as a cheap integrity check between
        moves.
        """
        want = cyclic_tighten(self.graph.rho)
        got = cyclic_tighten(self.apply(self.graph.rho))
        return is_cyclic_rotation(got, want)

    def transition_matrix(self):
        """Unsigned crossing counts, rows/columns in sorted edge-id order.

        Entry ``[i, j]`` counts how often the image of edge ``j`` crosses
        edge ``i``, in either direction.
        """
        order = sorted(self.graph.edges)
        index = {e: i for i, e in enumerate(order)}
        m = np.zeros((len(order), len(order)), dtype=np.int64)
        for e, p in self.edge_image.items():
            j = index[e]
            for d in p:
                m[index[abs(d)], j] += 1
        return m

    def __eq__(self, other):
        if not isinstance(other, GraphSelfMap):
            return NotImplemented
        return (self.graph == other.graph
                and self.vertex_image == other.vertex_image
                and self.edge_image == other.edge_image)

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self.vertex_image.items())),
                     tuple(sorted(self.edge_image.items()))))

    def __repr__(self):
        total = sum(len(p) for p in self.edge_image.values())
        return f"GraphSelfMap({self.graph!r}, image size {total})"


def identity_map(graph):
    """The identity self-map of a graph."""
    return GraphSelfMap(graph, {v: v for v in graph.vertices},
                        {e: (e,) for e in graph.edges})


def compose(g, f):
    """The composite ``g ∘ f`` (f first); both maps must share one graph."""
    if g.graph != f.graph:
        raise MapCompatibilityError("compose needs maps on the same graph")
    vertex_image = {v: g.vertex_image[w] for v, w in f.vertex_image.items()}
    edge_image = {e: g.apply(p) for e, p in f.edge_image.items()}
    return GraphSelfMap(f.graph, vertex_image, edge_image)
