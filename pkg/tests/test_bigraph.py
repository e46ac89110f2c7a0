from fractions import Fraction

import pytest

from qbc.bigraph import (BipartiteGraph, U_SIDE, V_SIDE, degree, density,
                         induced_stats, load_edge_list, load_pajek_two_mode,
                         restricted_degree)
from qbc.errors import EmptySideError, GraphParseError

from support import DATA_DIR


def test_load_edge_list_numeric():
    g = load_edge_list("0 0\n0 1\n1 0")
    assert (g.u_count, g.v_count, g.edge_count) == (2, 2, 3)


def test_load_edge_list_duplicates_collapse():
    g = load_edge_list("0 0\n0 0")
    assert g.edge_count == 1


def test_load_edge_list_separators_and_comments():
    g = load_edge_list("# header\na,x\nb,y\n")
    assert (g.u_count, g.v_count, g.edge_count) == (2, 2, 2)
    assert g.u_labels == ("a", "b")
    assert g.v_labels == ("x", "y")


def test_load_edge_list_malformed_line():
    with pytest.raises(GraphParseError) as err:
        load_edge_list("0 0\n0 1 2\n")
    assert err.value.line_no == 2


def test_load_edge_list_negative_id():
    with pytest.raises(GraphParseError):
        load_edge_list("0 0\n-1 0\n")


def test_southern_women_counts(southern_women):
    g = southern_women
    assert (g.u_count, g.v_count, g.edge_count) == (18, 14, 89)


def test_load_pajek_minimal():
    g = load_pajek_two_mode("*Vertices 3 1\n*Edges\n1 2\n1 3\n")
    assert (g.u_count, g.v_count, g.edge_count) == (1, 2, 2)


def test_load_pajek_same_mode_edge():
    with pytest.raises(GraphParseError):
        load_pajek_two_mode("*Vertices 3 1\n*Edges\n2 3\n")


def test_load_pajek_missing_header():
    with pytest.raises(GraphParseError):
        load_pajek_two_mode("1 2\n")


def test_load_pajek_labels():
    text = '*Vertices 3 1\n1 "alpha"\n2 "beta"\n3 "gamma"\n*Edges\n1 2\n'
    g = load_pajek_two_mode(text)
    assert g.u_labels == ("alpha",)
    assert g.v_labels == ("beta", "gamma")


def test_bundled_pajek_toy_matches_edge_list(toy3x3):
    g = load_pajek_two_mode((DATA_DIR / "toy3x3.net").read_text())
    assert g.adj == toy3x3.adj


def test_density_complete():
    g = BipartiteGraph.from_edges(2, 3, [(i, j) for i in range(2) for j in range(3)])
    assert density(g) == 1


def test_density_empty_edges():
    g = BipartiteGraph.from_edges(2, 2, [])
    assert density(g) == 0


def test_density_southern_women(southern_women):
    assert density(southern_women) == Fraction(89, 252)


def test_density_empty_side():
    g = BipartiteGraph.from_edges(0, 2, [])
    with pytest.raises(EmptySideError):
        density(g)


def test_induced_stats_full_selection(southern_women):
    g = southern_women
    sel = induced_stats(g, range(g.u_count), range(g.v_count))
    assert sel.edges == g.edge_count
    assert sel.density == density(g)


def test_induced_stats_toy(toy3x3):
    sel = induced_stats(toy3x3, [0, 1], [0, 1, 2])
    assert sel.edges == 6
    assert sel.density == 1


def test_induced_stats_empty_side(toy3x3):
    sel = induced_stats(toy3x3, [], [0])
    assert sel.edges == 0
    assert sel.density is None


def test_induced_stats_out_of_range(toy3x3):
    with pytest.raises(ValueError):
        induced_stats(toy3x3, [0], [7])


def test_degree():
    g = BipartiteGraph.from_edges(2, 3, [(i, j) for i in range(2) for j in range(3)])
    assert degree(g, U_SIDE, 0) == 3
    assert degree(g, V_SIDE, 2) == 2
    with pytest.raises(ValueError):
        degree(g, U_SIDE, 5)


def test_restricted_degree(toy3x3):
    assert restricted_degree(toy3x3, U_SIDE, 2, [0, 1, 2]) == 2
    assert restricted_degree(toy3x3, U_SIDE, 0, []) == 0


def test_degree_sums_match_edge_count(southern_women):
    g = southern_women
    assert sum(degree(g, U_SIDE, i) for i in range(g.u_count)) == g.edge_count
    assert sum(degree(g, V_SIDE, j) for j in range(g.v_count)) == g.edge_count


def test_deterministic_loading():
    text = (DATA_DIR / "southern_women.tsv").read_text()
    assert load_edge_list(text) == load_edge_list(text)


def test_transpose_roundtrip(toy3x3):
    assert toy3x3.transpose().transpose().adj == toy3x3.adj
    assert toy3x3.transpose().edge_count == toy3x3.edge_count
