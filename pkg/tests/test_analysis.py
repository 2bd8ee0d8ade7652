"""Gates, infinitesimal structure, and singularity reports."""
from __future__ import annotations

from fractions import Fraction

import pytest

from traintrack import (
    GraphSelfMap,
    SingularityReport,
    bestvina_handel,
    compose_word,
    full_report,
    gate_map,
    gates,
    infinitesimal_edges,
    is_train_track,
    orbit_permutation,
    polygons,
    puncture_index,
    standard_rose,
)

import oracles

PA_NAMES = ("ex1", "ex2", "ex3", "ex4")


def torus_track():
    rose = standard_rose(1)
    return GraphSelfMap(rose, {0: 0}, {1: (2,), 2: (2, 1)})


# ---------------------------------------------------------------------------
# Gates
# ---------------------------------------------------------------------------

def test_torus_track_gates():
    f = torus_track()
    assert is_train_track(f)
    gate_of = gates(f)
    assert set(gate_of) == {1, -1, 2, -2}
    assert gate_of[1] == gate_of[2] == frozenset({1, 2})
    assert gate_of[-1] == frozenset({-1})
    assert gate_of[-2] == frozenset({-2})


def test_gates_partition_directions(reference_runs):
    for name in PA_NAMES:
        f = reference_runs[name].final
        gate_of = gates(f)
        dirs = {d for e in f.graph.edges for d in (e, -e)}
        assert set(gate_of) == dirs
        for d, gate in gate_of.items():
            assert d in gate
            # all members of a gate are based at the same vertex
            assert len({f.graph.tail(x) for x in gate}) == 1


def test_gate_map_commutes_with_derivative(reference_runs):
    for name in PA_NAMES:
        f = reference_runs[name].final
        gate_of = gates(f)
        gm = gate_map(f)
        for d, gate in gate_of.items():
            assert gm[gate] == gate_of[f.derivative(d)]


# ---------------------------------------------------------------------------
# Infinitesimal edges
# ---------------------------------------------------------------------------

def test_torus_track_infinitesimal_star():
    f = torus_track()
    inf = infinitesimal_edges(f)
    hub = frozenset({1, 2})
    assert inf == {frozenset({hub, frozenset({-1})}),
                   frozenset({hub, frozenset({-2})})}
    assert len(polygons(f, inf)) == 0
    assert puncture_index(1, polygons(f, inf)) == 0


def test_infinitesimal_edges_contain_taken_turns(reference_runs):
    for name in PA_NAMES:
        f = reference_runs[name].final
        gate_of = gates(f)
        inf = infinitesimal_edges(f)
        for e in f.graph.edges:
            image = f.image(e)
            for a, b in zip(image, image[1:]):
                pair = frozenset((gate_of[-a], gate_of[b]))
                assert len(pair) == 2 and pair in inf, (name, e)


def test_infinitesimal_edges_closed_under_gate_map(reference_runs):
    for name in PA_NAMES:
        f = reference_runs[name].final
        gm = gate_map(f)
        inf = infinitesimal_edges(f)
        for pair in inf:
            g1, g2 = tuple(pair)
            image = frozenset((gm[g1], gm[g2]))
            assert len(image) == 2 and image in inf, name


def test_infinitesimal_edges_join_gates_at_one_vertex(reference_runs):
    for name in PA_NAMES:
        f = reference_runs[name].final
        for pair in infinitesimal_edges(f):
            vertices = {f.graph.tail(d) for gate in pair for d in gate}
            assert len(vertices) == 1, name


# ---------------------------------------------------------------------------
# Polygons and indices
# ---------------------------------------------------------------------------

def test_polygon_shapes(reference_runs):
    expected = {"ex1": [], "ex2": [], "ex3": [3, 3, 3, 3], "ex4": [6, 6]}
    for name in PA_NAMES:
        f = reference_runs[name].final
        polys = polygons(f, infinitesimal_edges(f))
        assert sorted(p.k for p in polys) == expected[name], name
        for p in polys:
            assert p.k == len(p.cycle)
            assert p.index == 1 - Fraction(p.k, 2)
            # a polygon lives at a single vertex
            vertices = {f.graph.tail(d) for gate in p.cycle for d in gate}
            assert vertices == {p.vertex}
        # no two polygons share an infinitesimal edge
        edge_sets = [p.edge_set() for p in polys]
        for i, s in enumerate(edge_sets):
            for t in edge_sets[i + 1:]:
                assert not (s & t)


def test_polygon_cycles_are_real_cycles(reference_runs):
    for name in ("ex3", "ex4"):
        f = reference_runs[name].final
        inf = infinitesimal_edges(f)
        for p in polygons(f, inf):
            cyc = p.cycle
            for i, gate in enumerate(cyc):
                nxt = cyc[(i + 1) % len(cyc)]
                assert frozenset((gate, nxt)) in inf


def test_orbit_permutations(reference_runs):
    expected = {"ex1": (), "ex2": (), "ex3": (1, 0, 3, 2), "ex4": (1, 0)}
    for name in PA_NAMES:
        f = reference_runs[name].final
        polys = polygons(f, infinitesimal_edges(f))
        orbit = orbit_permutation(f, polys)
        assert orbit == expected[name], name
        assert sorted(orbit) == list(range(len(polys)))


def test_puncture_index_arithmetic():
    assert puncture_index(2, ()) == Fraction(-2)
    assert isinstance(puncture_index(2, ()), Fraction)


def test_index_sum_is_euler_characteristic(reference_runs):
    for name in PA_NAMES:
        run = reference_runs[name]
        f = run.final
        polys = polygons(f, infinitesimal_edges(f))
        total = puncture_index(run.genus, polys) + sum(
            (p.index for p in polys), Fraction(0))
        assert total == 2 - 2 * run.genus, name


def test_puncture_index_matches_direct_cusp_count(reference_runs):
    """Two independent computations of the puncture singularity index:
    subtraction from the Euler characteristic, and a direct count of
    boundary-word cusps.  They must agree."""
    for name in PA_NAMES:
        run = reference_runs[name]
        f = run.final
        gate_of = gates(f)
        inf = infinitesimal_edges(f)
        direct = oracles.puncture_index_direct(f, gate_of, inf)
        assert direct == run.report.puncture_index, name


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def test_report_fields_pseudo_anosov(reference_runs):
    run = reference_runs["ex3"]
    rep = run.report
    assert isinstance(rep, SingularityReport)
    assert rep.verdict == "PseudoAnosov"
    assert rep.growth == pytest.approx(2.0153571812809963, abs=1e-9)
    assert rep.polygons == ((3, Fraction(-1, 2), 1), (3, Fraction(-1, 2), 0),
                            (3, Fraction(-1, 2), 3), (3, Fraction(-1, 2), 2))
    assert rep.puncture_index == 0
    assert rep.orbit == (1, 0, 3, 2)


def test_report_without_genus_matches(reference_runs):
    run = reference_runs["ex4"]
    assert full_report(run.outcome) == run.report


def test_report_growth_one():
    outcome = bestvina_handel(compose_word(2, [("a1", 1), ("a1", -1)]))
    rep = full_report(outcome, genus=2)
    assert rep.verdict == "GrowthOne"
    assert rep.growth == 1.0
    assert rep.polygons is None
    assert rep.puncture_index is None
    assert rep.orbit is None


def test_report_reducible(reference_runs):
    rep = reference_runs["ex5"].report
    assert rep.verdict == "Reducible"
    assert rep.growth is None
    assert rep.polygons is None


def test_hexagon_word_regression(reference_runs):
    """Pins the computed data for the genus-2 word -a1 d1 -c0 d0: its
    six-pronged singularity sits at the puncture for this generator
    realization (consistent across the subtraction formula and the direct
    boundary cusp count above)."""
    rep = reference_runs["ex2"].report
    assert rep.verdict == "PseudoAnosov"
    assert rep.polygons == ()
    assert rep.puncture_index == -2
    # the homology action already realizes the full growth, so the
    # invariant foliations are orientable
    h1 = oracles.h1_spectral_radius(reference_runs["ex2"].start)
    assert h1 == pytest.approx(rep.growth, abs=1e-6)
