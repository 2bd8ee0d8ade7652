"""The train track algorithm for self-maps of punctured-surface spines.

Moves are pure functions: each takes a :class:`GraphSelfMap` and returns a
new one (or the input object itself when nothing applies).  After every move
the boundary word must still be preserved and the genus unchanged; these
checks are cheap and always on.  The main loop alternates simplification
(tightening, collapsing invariant forests, removing low-valence vertices)
with folding away illegal turns, and stops at one of three outcomes:

* :class:`TrainTrack` — every turn taken by an edge image is legal and the
  transition matrix is irreducible with growth > 1,
* :class:`GrowthOne` — the transition matrix became a permutation matrix,
* :class:`Reducible` — an essential invariant subgraph remains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError, IterationLimitExceeded
from .graphs import EmbeddedGraph, GraphSelfMap, reverse_path, tighten
from .growth import _crossing_digraph, _sccs, is_irreducible, is_permutation_matrix, spectral_radius


@dataclass(frozen=True)
class TrainTrack:
    """Terminal state: an efficient representative with its growth rate."""
    map: GraphSelfMap
    growth: float


@dataclass(frozen=True)
class Reducible:
    """Terminal state: ``invariant_edges`` span an essential invariant subgraph."""
    map: GraphSelfMap
    invariant_edges: frozenset


@dataclass(frozen=True)
class GrowthOne:
    """Terminal state: the map permutes edges up to orientation (growth 1)."""
    map: GraphSelfMap


def _noop_hook(name, f, **info):
    return None


def _check_move(move, old, new):
    # every move must fix the puncture loop and the surface
    if new.graph.genus != old.graph.genus:
        raise InternalInvariantError(f"{move} changed the genus")
    if not new.preserves_boundary():
        raise InternalInvariantError(f"{move} broke the boundary word")
    return new


def _full_table(edge_ids, replacements):
    # letter-for-path substitution table covering every direction
    table = {}
    for e in edge_ids:
        table[e] = (e,)
        table[-e] = (-e,)
    for d, rep in replacements.items():
        table[d] = tuple(rep)
        table[-d] = reverse_path(rep)
    return table


def _subst(path, table):
    out = []
    for d in path:
        out.extend(table[d])
    return tuple(out)


def pull_tight(f):
    """Tighten every edge image; returns ``f`` itself when already tight."""
    images = {e: tighten(p) for e, p in f.edge_image.items()}
    if images == f.edge_image:
        return f
    new = GraphSelfMap(f.graph, dict(f.vertex_image), images)
    return _check_move("pull_tight", f, new)


def _find_invariant_forest(f):
    """A collapsible edge set, or None.

    Sink components of the crossing digraph are exactly the minimal invariant
    edge sets; a sink whose edges form a forest can be collapsed.  Sinks are
    tried in order of smallest edge id, and the whole edge set never counts
    (an invariant everything is just an irreducible matrix).
    """
    order = sorted(f.graph.edges)
    m = f.transition_matrix()
    adj = _crossing_digraph(m)
    comps = _sccs(adj)
    if len(comps) <= 1:
        return None
    sinks = []
    for comp in comps:
        members = set(comp)
        if len(members) == len(order):
            continue
        if all(w in members for j in comp for w in adj[j]):
            sinks.append(sorted(comp))
    sinks.sort(key=lambda c: order[c[0]])
    for comp in sinks:
        edges = {order[j] for j in comp}
        if _is_forest(f.graph, edges):
            return edges
    return None


def _is_forest(graph, edges):
    parent = {}

    def find(v):
        root = v
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for e in edges:
        u, v = graph.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _collapse_edges(f, forest, move="collapse"):
    """Collapse a forest of edges whose images stay inside the forest."""
    g = f.graph
    for e in forest:
        for d in f.edge_image[e]:
            if abs(d) not in forest:
                raise InternalInvariantError(
                    "collapse target is not invariant under the map")
    parent = {v: v for v in g.vertices}

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for e in forest:
        u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InternalInvariantError("collapse target contains a cycle")
        parent[ru] = rv
    groups = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    rep = {}
    for members in groups.values():
        keep = min(members)
        for v in members:
            rep[v] = keep
    edges = {e: (rep[u], rep[v])
             for e, (u, v) in g.edges.items() if e not in forest}
    rho = tuple(d for d in g.rho if abs(d) not in forest)
    graph = EmbeddedGraph(edges, rho)
    vertex_image = {}
    for v in g.vertices:
        r, w = rep[v], rep[f.vertex_image[v]]
        if vertex_image.setdefault(r, w) != w:
            raise InternalInvariantError(
                "collapse merged vertices with different images")
    edge_image = {e: tighten(tuple(d for d in p if abs(d) not in forest))
                  for e, p in f.edge_image.items() if e not in forest}
    new = GraphSelfMap(graph, vertex_image, edge_image)
    return _check_move(move, f, new)


def collapse_invariant_forest(f):
    """Collapse invariant forests until none remain; no-op when none exist.

    Edges with trivial image are the common case (they form invariant
    forests all by themselves, when not loops).  An invariant subgraph that
    is *not* a forest is left alone — the main loop reads that situation off
    the transition matrix and reports reducibility instead.
    """
    while True:
        forest = _find_invariant_forest(f)
        if forest is None:
            return f
        f = _collapse_edges(f, forest)


def remove_valence_one(f):
    """Retract the lowest-id valence-one vertex; ``f`` itself when none exist."""
    g = f.graph
    leaves = [v for v in g.vertices if g.valence(v) == 1]
    if not leaves:
        return f
    v = min(leaves)
    (germ,) = g.directions(v)
    u = abs(germ)
    w = g.head(germ)
    # rho turns around at a leaf: it holds the consecutive pair (-germ, germ),
    # and dropping both letters removes exactly that corner
    rho = tuple(d for d in g.rho if abs(d) != u)
    edges = {e: uv for e, uv in g.edges.items() if e != u}
    graph = EmbeddedGraph(edges, rho)
    vertex_image = {}
    for z in g.vertices:
        if z == v:
            continue
        fz = f.vertex_image[z]
        vertex_image[z] = w if fz == v else fz
    edge_image = {e: tighten(tuple(d for d in p if abs(d) != u))
                  for e, p in f.edge_image.items() if e != u}
    new = GraphSelfMap(graph, vertex_image, edge_image)
    return _check_move("valence_one", f, new)


def remove_valence_two(f):
    """Merge the two edges at the lowest-id valence-two vertex.

    Vertices mapping onto the doomed vertex are first slid off it across one
    of the two incident edges, then the straight path through the vertex
    becomes a single fresh edge.  Sliding is a homotopy of the map, so it can
    change the growth rate; both slide directions are tried and the one with
    the smaller resulting rate is kept, which keeps the rate non-increasing
    across the move.  Returns ``f`` itself when no valence-two vertex
    exists.
    """
    g = f.graph
    candidates = [v for v in g.vertices if g.valence(v) == 2]
    if not candidates:
        return f
    v = min(candidates)
    a, b = g.rotation_order(v)
    if abs(a) == abs(b):
        # both germs of one loop: the component would be a lone circle
        raise InternalInvariantError("valence-two loop cannot exist at genus >= 1")
    x, y = g.head(a), g.head(b)
    if x == v or y == v:
        raise InternalInvariantError("valence-two edge loops back unexpectedly")

    m = max(g.edges) + 1
    abs_old = (abs(a), abs(b))

    def merged(path, what):
        out = []
        i = 0
        while i < len(path):
            pair = tuple(path[i:i + 2])
            if pair == (-a, b):
                out.append(m)
                i += 2
            elif pair == (-b, a):
                out.append(-m)
                i += 2
            else:
                if abs(path[i]) in abs_old:
                    raise InternalInvariantError(
                        f"stray half-edge while merging through vertex {v} ({what})")
                out.append(path[i])
                i += 1
        return tuple(out)

    edges = {e: uv for e, uv in g.edges.items() if e not in abs_old}
    edges[m] = (x, y)
    i0 = g.rho.index(-a)
    rho = merged(g.rho[i0:] + g.rho[:i0], "boundary word")
    graph = EmbeddedGraph(edges, rho)

    def build(through, target):
        # slide every vertex mapping to v across ``through`` (a direction
        # based at v), so its image becomes ``target``, then merge
        vertex_image = dict(f.vertex_image)
        edge_image = dict(f.edge_image)
        movers = {z for z in g.vertices if vertex_image[z] == v}
        if movers:
            slid = {}
            for e, p in edge_image.items():
                q = p
                if g.tail(e) in movers:
                    q = (-through,) + q
                if g.head(e) in movers:
                    q = q + (through,)
                slid[e] = tighten(q)
            edge_image = slid
            for z in movers:
                vertex_image[z] = target

        def oriented(d):
            p = edge_image[abs(d)]
            return p if d > 0 else reverse_path(p)

        new_images = {}
        for e, p in edge_image.items():
            if e in abs_old:
                continue
            new_images[e] = tighten(merged(p, f"image of {e}"))
        new_images[m] = tighten(merged(tighten(oriented(-a) + oriented(b)),
                                       "image of the merged edge"))
        new_vertex_image = {z: vertex_image[z] for z in g.vertices if z != v}
        return GraphSelfMap(graph, new_vertex_image, new_images)

    new = build(b, y)
    if any(f.vertex_image[z] == v for z in g.vertices):
        # the slide direction matters: keep the candidate with the smaller
        # growth rate (ties keep the rotation-successor side for determinism)
        other = build(a, x)
        lam_new = spectral_radius(new.transition_matrix(), tol=1e-10)
        lam_other = spectral_radius(other.transition_matrix(), tol=1e-10)
        if lam_other < lam_new - 1e-12:
            new = other
    return _check_move("valence_two", f, new)


def subdivide(f, e, k):
    """Split edge ``e`` at position ``k`` of its image path.

    The new halves get ids ``max+1``, ``max+2`` and the new vertex maps to
    the endpoint of the image prefix of length ``k``; the growth rate is
    untouched.  ``k`` must satisfy ``0 < k < len(image)``.
    """
    g = f.graph
    if e not in g.edges:
        raise ValueError(f"unknown edge {e!r}")
    p = f.edge_image[e]
    if not 0 < k < len(p):
        raise ValueError(
            f"subdivision point {k} out of range for image of length {len(p)}")
    t, h = g.edges[e]
    e1, e2 = max(g.edges) + 1, max(g.edges) + 2
    z = max(g.vertices) + 1
    table = _full_table(g.edges, {e: (e1, e2)})
    edges = {x: uv for x, uv in g.edges.items() if x != e}
    edges[e1] = (t, z)
    edges[e2] = (z, h)
    rho = _subst(g.rho, table)
    graph = EmbeddedGraph(edges, rho)
    vertex_image = dict(f.vertex_image)
    vertex_image[z] = g.head(p[k - 1])
    edge_image = {x: _subst(q, table)
                  for x, q in f.edge_image.items() if x != e}
    edge_image[e1] = _subst(p[:k], table)
    edge_image[e2] = _subst(p[k:], table)
    new = GraphSelfMap(graph, vertex_image, edge_image)
    return _check_move("subdivide", f, new)


def fold(f, d1, d2):
    """Identify two rotation-adjacent directions with identical image paths.

    The two edges merge into a fresh edge and their far endpoints merge into
    one vertex.  Preconditions (violations raise
    :class:`InternalInvariantError`, since the main loop is responsible for
    preparing them): ``d1``/``d2`` live at one vertex on distinct edges, have
    equal nonempty image paths, are adjacent in the rotation through exactly
    one of their two corners, and their far endpoints differ.
    """
    g = f.graph
    if abs(d1) == abs(d2):
        raise InternalInvariantError("fold needs two distinct edges")
    v = g.tail(d1)
    if g.tail(d2) != v:
        raise InternalInvariantError("fold needs directions at one vertex")
    p1, p2 = f.image(d1), f.image(d2)
    if not p1 or p1 != p2:
        raise InternalInvariantError("fold needs equal nonempty images")
    adj12 = g.successor(d1) == d2
    adj21 = g.successor(d2) == d1
    if adj12 == adj21:
        raise InternalInvariantError(
            "fold needs directions adjacent through exactly one corner")
    w1, w2 = g.head(d1), g.head(d2)
    if w1 == w2:
        raise InternalInvariantError(
            "parallel fold: far endpoints already agree")
    w = min(w1, w2)

    def vmap(z):
        return w if z in (w1, w2) else z

    fused = max(g.edges) + 1
    table = _full_table(g.edges, {d1: (fused,), d2: (fused,)})
    # the corner being sewn shut shows up in rho as (-first, second); rotate
    # rho so the pair sits at the front and drop it, every other occurrence
    # of the two edges becomes the fused edge
    first, second = (d1, d2) if adj12 else (d2, d1)
    i0 = g.rho.index(-first)
    rotated = g.rho[i0:] + g.rho[:i0]
    if rotated[1] != second:
        raise InternalInvariantError("rotation and boundary word disagree")
    rho = _subst(rotated[2:], table)
    edges = {e: (vmap(t), vmap(h))
             for e, (t, h) in g.edges.items() if e not in (abs(d1), abs(d2))}
    edges[fused] = (vmap(v), w)
    graph = EmbeddedGraph(edges, rho)
    vertex_image = {}
    for z in g.vertices:
        r, img = vmap(z), vmap(f.vertex_image[z])
        if vertex_image.setdefault(r, img) != img:
            raise InternalInvariantError(
                "fold merged vertices with different images")
    edge_image = {e: tighten(_subst(p, table))
                  for e, p in f.edge_image.items()
                  if e not in (abs(d1), abs(d2))}
    edge_image[fused] = tighten(_subst(p1, table))
    new = GraphSelfMap(graph, vertex_image, edge_image)
    return _check_move("fold", f, new)


def gates(f):
    """Partition directions by eventual collision under the direction map.

    Two directions at a vertex belong to one gate iff some iterate of the
    direction map sends them to the same direction; on ``n`` directions,
    ``n`` iterations decide this.  Returns direction -> gate (a frozenset of
    directions, one shared object per gate).
    """
    g = f.graph
    dirs = [d for e in sorted(g.edges) for d in (e, -e)]
    deriv = {d: f.derivative(d) for d in dirs}
    power = dict(deriv)
    for _ in range(len(dirs) - 1):
        power = {d: deriv[power[d]] for d in dirs}
    groups = {}
    for d in dirs:
        groups.setdefault((g.tail(d), power[d]), []).append(d)
    gate_of = {}
    for members in groups.values():
        gate = frozenset(members)
        for d in members:
            gate_of[d] = gate
    return gate_of


def gate_map(f, gate_of=None):
    """The induced map on gates (well-defined because gates are D-coherent)."""
    if gate_of is None:
        gate_of = gates(f)
    out = {}
    for gate in set(gate_of.values()):
        images = {gate_of[f.derivative(d)] for d in gate}
        if len(images) != 1:
            raise InternalInvariantError("direction map tears a gate apart")
        out[gate] = images.pop()
    return out


def _first_illegal_turn(f, gate_of):
    # deterministic scan: smallest edge id, earliest position in its image
    for e in sorted(f.graph.edges):
        p = f.edge_image[e]
        for a, b in zip(p, p[1:]):
            if gate_of[-a] == gate_of[b]:
                return (-a, b)
    return None


def is_train_track(f):
    """Whether no edge image takes a turn inside a single gate.

    Equivalent to every iterate of every edge image being tight, which is the
    efficiency the main loop drives toward.
    """
    return _first_illegal_turn(f, gates(f)) is None


def _no_pretrivial_loops(f):
    for e, p in f.edge_image.items():
        if not p and f.graph.tail(e) == f.graph.head(e):
            # collapsing would change the fundamental group and subdividing
            # needs a nonempty image; a homotopy equivalence never does this
            raise InternalInvariantError(f"loop {e} has a trivial image")


def _simplify(f, hook):
    """Drive tightening/collapsing/valence moves to a joint fixed point."""
    while True:
        new = pull_tight(f)
        if new is not f:
            f = new
            hook("pull_tight", f)
            continue
        _no_pretrivial_loops(f)
        forest = _find_invariant_forest(f)
        if forest is not None:
            f = _collapse_edges(f, forest)
            hook("collapse", f, edges=sorted(forest))
            continue
        new = remove_valence_one(f)
        if new is not f:
            f = new
            hook("valence_one", f)
            continue
        new = remove_valence_two(f)
        if new is not f:
            f = new
            hook("valence_two", f)
            continue
        return f


def _adjacent_fold_pair(f, t1, t2):
    """Pick the rotation-adjacent pair of directions that the fold acts on.

    If the walked pair is already adjacent, use it.  Otherwise scan the two
    rotation arcs between them for one whose directions all share a
    derivative, and fold its first two members.  Failing both, any adjacent
    pair with equal derivatives does (one exists whenever the image of the
    boundary word cancels, which is forced while the matrix is irreducible
    and not a permutation).
    """
    g = f.graph
    if g.successor(t1) == t2:
        return t1, t2
    if g.successor(t2) == t1:
        return t2, t1
    for a, b in ((t1, t2), (t2, t1)):
        arc = [a]
        d = g.successor(a)
        steps = 0
        while d != b:
            arc.append(d)
            d = g.successor(d)
            steps += 1
            if steps > g.valence(g.tail(t1)):
                raise InternalInvariantError("rotation walk did not close")
        arc.append(b)
        want = f.derivative(a)
        if all(f.derivative(x) == want for x in arc):
            return arc[0], arc[1]
    for v in sorted(g.vertices):
        order = g.rotation_order(v)
        for i, x in enumerate(order):
            y = order[(i + 1) % len(order)]
            if x != y and f.derivative(x) == f.derivative(y):
                return x, y
    raise InternalInvariantError("no adjacent foldable pair exists")


def _common_prefix_len(p, q):
    n = 0
    for a, b in zip(p, q):
        if a != b:
            break
        n += 1
    return n


def _subdivide_towards(f, d, length, tracked, hook):
    """Subdivide ``|d|`` so the direction ``d`` keeps an image of ``length``.

    Returns the new map, the renamed ``d`` and the renames of every
    direction in ``tracked`` (directions on other edges are unchanged).
    """
    e = abs(d)
    n = len(f.edge_image[e])
    k = length if d > 0 else n - length
    top = max(f.graph.edges)
    f = subdivide(f, e, k)
    hook("subdivide", f, edge=e, at=k, into=[top + 1, top + 2])

    def track(t):
        if abs(t) != e:
            return t
        return top + 1 if t > 0 else -(top + 2)

    return f, track(d), [track(t) for t in tracked]


def _fold_pass(f, o1, o2, hook):
    """Walk the turn's derivative orbit to its merge point and fold there.

    Returns the new map together with the images of ``o1``/``o2`` under the
    renaming that the preparing subdivisions and the fold introduce.
    """
    t1, t2 = o1, o2
    guard = 2 * len(f.graph.edges) + 2
    while f.derivative(t1) != f.derivative(t2):
        t1, t2 = f.derivative(t1), f.derivative(t2)
        guard -= 1
        if guard < 0:
            raise InternalInvariantError("derivative orbit never merged")
    d1, d2 = _adjacent_fold_pair(f, t1, t2)
    if f.graph.valence(f.graph.tail(d1)) == 2:
        # earlier folds left the pair's vertex with no other directions, so
        # no single corner separates them and folding is meaningless there;
        # merging the two edges through the vertex cancels their common
        # image prefix instead, which the simplification pass performs
        return f, None, None
    for _ in range(8):
        p1, p2 = f.image(d1), f.image(d2)
        if p1 == p2:
            if f.graph.head(d1) != f.graph.head(d2):
                break
            # parallel pair: identifying the whole edges would seal the strip
            # between them and change the surface, so split off the first
            # image letter on both sides and fold those initial segments
            if len(p1) == 1:
                raise InternalInvariantError(
                    "parallel fold pair with unsplittable images")
            shared = 1
        else:
            shared = _common_prefix_len(p1, p2)
        if shared < 1:
            raise InternalInvariantError("fold pair lost its common prefix")
        if len(p1) > shared:
            f, d1, (d2, o1, o2) = _subdivide_towards(
                f, d1, shared, (d2, o1, o2), hook)
        else:
            f, d2, (d1, o1, o2) = _subdivide_towards(
                f, d2, shared, (d1, o1, o2), hook)
    else:
        raise InternalInvariantError("fold preparation did not settle")
    folded_ids = sorted((abs(d1), abs(d2)))
    f = fold(f, d1, d2)
    fused = max(f.graph.edges)
    hook("fold", f, edges=folded_ids, into=fused)

    def track(t):
        if t in (d1, d2):
            return fused
        if -t in (d1, d2):
            return -fused
        return t

    return f, track(o1), track(o2)


def _fold_away(f, turn, hook, complete=False):
    """Remove one illegal turn, folding at its derivative orbit's merge point.

    By default one fold is performed per call and the simplification moves
    run again before the next turn is chosen; that is the cheap policy and
    it suffices for almost every input.  With ``complete`` the turn is
    resolved fully: folding continues until the turn's own two directions
    are identified, which changes which turns later rounds see.  The main
    loop switches to the complete policy when it detects that the cheap one
    has started reproducing earlier maps, since each policy escapes
    constant-growth cycles that trap the other.  A turn formed by an edge
    against its own reverse cannot end with its directions identified; for
    such turns each call performs one fold at the orbit's merge point.
    """
    o1, o2 = turn
    budget = (2 * len(f.graph.edges) + 2) ** 2
    while True:
        f, o1, o2 = _fold_pass(f, o1, o2, hook)
        if not complete or o1 is None or o1 == o2 or abs(o1) == abs(o2):
            return f
        budget -= 1
        if budget < 0:
            raise InternalInvariantError(
                "illegal turn resolution did not settle")


def _canonical_key(f):
    """A relabeling-invariant encoding of a map, for detecting repeats.

    Walking the boundary word from each starting position induces a
    renaming of edges and vertices by first appearance; the smallest of the
    resulting encodings is identical for two maps exactly when some
    rotation-preserving relabeling carries one to the other.
    """
    g = f.graph
    n = len(g.rho)
    best = None
    for i in range(n):
        ren = {}
        vren = {}
        for j in range(n):
            d = g.rho[(i + j) % n]
            if abs(d) not in ren:
                ren[abs(d)] = (len(ren) + 1, 1 if d > 0 else -1)
            vren.setdefault(g.tail(d), len(vren) + 1)

        def rd(d):
            new, sgn = ren[abs(d)]
            return new * sgn * (1 if d > 0 else -1)

        rho_c = tuple(rd(g.rho[(i + j) % n]) for j in range(n))
        by_new = sorted((new, e, sgn) for e, (new, sgn) in ren.items())
        edges_c = []
        images_c = []
        for new, e, sgn in by_new:
            t, h = g.edges[e] if sgn > 0 else reversed(g.edges[e])
            edges_c.append((vren[t], vren[h]))
            images_c.append(tuple(rd(x) for x in f.image(e * sgn)))
        vimg_c = tuple(sorted(
            (vren[v], vren[f.vertex_image[v]]) for v in g.vertices))
        key = (rho_c, tuple(edges_c), vimg_c, tuple(images_c))
        if best is None or key < best:
            best = key
    return best


def bestvina_handel(f, max_rounds=10000, hook=None, tol=1e-12):
    """Run the train track algorithm on a boundary-preserving self-map.

    ``hook(name, map, **details)`` is called after every individual move with
    the map *after* the move; pass one to trace or audit a run.  ``tol`` is
    handed to the growth computation of a :class:`TrainTrack` outcome.
    Raises :class:`IterationLimitExceeded` after ``max_rounds`` fold rounds.
    """
    hook = hook or _noop_hook
    if not f.preserves_boundary():
        raise InternalInvariantError(
            "input map does not preserve the boundary word")
    seen = set()
    complete = False
    for _ in range(max_rounds):
        f = _simplify(f, hook)
        m = f.transition_matrix()
        # permutation first: the identity matrix is also reducible, but a
        # permutation means a finite-order (growth one) class, not a reduction
        if is_permutation_matrix(m):
            return GrowthOne(f)
        if not is_irreducible(m):
            witness = _reduction_witness(f, m)
            return Reducible(f, frozenset(witness))
        gate_of = gates(f)
        turn = _first_illegal_turn(f, gate_of)
        if turn is None:
            return TrainTrack(f, spectral_radius(m, tol=tol))
        if not complete:
            key = _canonical_key(f)
            if key in seen:
                # one fold per round has started reproducing earlier maps;
                # resolving each turn fully breaks out of such cycles
                complete = True
            else:
                seen.add(key)
        f = _fold_away(f, turn, hook, complete)
    raise IterationLimitExceeded(
        f"no train track representative within {max_rounds} rounds")


def _reduction_witness(f, m):
    # the lowest sink component of the crossing digraph; simplification has
    # already collapsed every invariant forest, so this one is essential
    order = sorted(f.graph.edges)
    adj = _crossing_digraph(m)
    sinks = []
    for comp in _sccs(adj):
        members = set(comp)
        if len(members) == len(order):
            continue
        if all(w in members for j in comp for w in adj[j]):
            sinks.append(sorted(comp))
    if not sinks:
        raise InternalInvariantError(
            "reducible matrix without a proper sink component")
    sinks.sort(key=lambda c: order[c[0]])
    witness = {order[j] for j in sinks[0]}
    if _is_forest(f.graph, witness):
        raise InternalInvariantError(
            "invariant forest survived simplification")
    return witness
