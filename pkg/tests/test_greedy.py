import random
from fractions import Fraction

import pytest

from qbc.bigraph import BipartiteGraph, induced_stats
from qbc.errors import HeuristicFailureError
from qbc.exact import SIZE, SearchParams, sweep_oracle
from qbc.greedy import (default_tau, greedy_augment, greedy_build,
                        greedy_quasi_biclique, repair_selection, replay_trace)
from qbc.quasidef import is_delta_quasi_biclique

from support import iter_graphs, random_graph


def _k23():
    return BipartiteGraph.from_edges(2, 3, [(i, j) for i in range(2) for j in range(3)])


def test_build_toy_delta0(toy3x3):
    sel = greedy_build(toy3x3, 0, tau=2)
    assert sel.u_set == (0, 1)
    assert sel.v_set == (0, 1, 2)
    assert sel.edges == 6
    assert sel.density == 1


def test_build_toy_delta04(toy3x3):
    sel = greedy_build(toy3x3, "0.4", tau=3)
    assert sel.u_set == (0, 1, 2)
    assert sel.v_set == (0, 1, 2)  # v2 kept: d = 2 >= 1.8


def test_build_empty_graph_fails():
    g = BipartiteGraph.from_edges(0, 0, [])
    with pytest.raises(HeuristicFailureError):
        greedy_build(g, 0, tau=1)


def test_build_edgeless_graph_fails():
    g = BipartiteGraph.from_edges(2, 2, [])
    with pytest.raises(HeuristicFailureError) as err:
        greedy_build(g, 0, tau=1)
    assert err.value.last_selection is None


def test_build_failure_carries_last_state():
    # u0 and u1 have disjoint neighborhoods; delta=0 empties V' at the
    # second pick
    g = BipartiteGraph.from_edges(2, 3, [(0, 0), (0, 1), (1, 2)])
    with pytest.raises(HeuristicFailureError) as err:
        greedy_build(g, 0, tau=2)
    last = err.value.last_selection
    assert last is not None
    assert last.u_set == (0,) and last.v_set == (0, 1)


def test_augment_toy_fixpoint(toy3x3):
    built = greedy_build(toy3x3, 0, tau=2)
    assert greedy_augment(toy3x3, built, 0).key() == built.key()


def test_augment_grows_complete_graph():
    g = _k23()
    grown = greedy_augment(g, induced_stats(g, [0], [0]), 0)
    assert grown.u_set == (0, 1)
    assert grown.v_set == (0, 1, 2)


def test_augment_full_graph_fixpoint():
    g = _k23()
    full = induced_stats(g, range(2), range(3))
    assert greedy_augment(g, full, 0).key() == full.key()


def test_augment_rejects_invalid_input(toy3x3):
    full = induced_stats(toy3x3, range(3), range(3))
    with pytest.raises(ValueError):
        greedy_augment(toy3x3, full, 0)


def test_repair_selection(toy3x3):
    full = induced_stats(toy3x3, range(3), range(3))
    repaired = repair_selection(toy3x3, full, 0)
    assert is_delta_quasi_biclique(toy3x3, repaired, 0)
    assert repaired.total_size < full.total_size


def test_composite_k33():
    g = BipartiteGraph.from_edges(3, 3, [(i, j) for i in range(3) for j in range(3)])
    res = greedy_quasi_biclique(g, 0, tau=3)
    assert res.total_size == 6
    assert res.delta_valid and res.gamma_valid


def test_composite_toy(toy3x3):
    res = greedy_quasi_biclique(toy3x3, 0, tau=2)
    assert res.total_size == 5


def test_composite_southern_women(southern_women):
    res = greedy_quasi_biclique(southern_women, "0.4")
    assert res.delta_valid and res.gamma_valid


def test_default_tau(southern_women, toy3x3):
    assert default_tau(southern_women) == 2  # smallest woman degree
    assert default_tau(toy3x3) == 2


def test_determinism(southern_women):
    a = greedy_quasi_biclique(southern_women, "0.4", tau=4, both_sides=True)
    b = greedy_quasi_biclique(southern_women, "0.4", tau=4, both_sides=True)
    assert a.selection.key() == b.selection.key()
    assert [s for s in a.trace.steps] == [s for s in b.trace.steps]


def test_replay_trace(southern_women):
    for tau in (2, 5, 9):
        res = greedy_quasi_biclique(southern_women, "0.4", tau=tau)
        assert replay_trace(southern_women, res.trace).key() == res.selection.key()


def test_output_always_delta_valid_random():
    rng = random.Random(12)
    deltas = [Fraction(0), Fraction(1, 4), Fraction(2, 5), Fraction(1, 2)]
    for _ in range(60):
        g = random_graph(rng, max_side=6)
        for delta in deltas:
            for tau in (1, 2):
                if tau > g.u_count:
                    continue
                try:
                    res = greedy_quasi_biclique(g, delta, tau=tau, both_sides=True)
                except HeuristicFailureError:
                    continue
                assert is_delta_quasi_biclique(g, res.selection, delta)


def test_never_beats_exact_optimum():
    rng = random.Random(13)
    for _ in range(40):
        g = random_graph(rng, max_side=4)
        for delta in (Fraction(0), Fraction(2, 5), Fraction(1, 2)):
            try:
                res = greedy_quasi_biclique(g, delta, both_sides=True)
            except HeuristicFailureError:
                continue
            pool = sweep_oracle(g, SearchParams(gamma=1 - delta, objective=SIZE))
            assert pool.best is not None
            assert res.total_size <= pool.best.objective_value


def test_never_beats_exact_optimum_exhaustive_2x2():
    for g in iter_graphs(2, 2):
        for delta in (Fraction(0), Fraction(1, 2)):
            try:
                res = greedy_quasi_biclique(g, delta)
            except HeuristicFailureError:
                continue
            pool = sweep_oracle(g, SearchParams(gamma=1 - delta, objective=SIZE))
            assert pool.best is not None
            assert res.total_size <= pool.best.objective_value
