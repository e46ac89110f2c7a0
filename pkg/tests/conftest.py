import pytest

from qbc.bigraph import load_edge_list

from support import DATA_DIR


@pytest.fixture(scope="session")
def southern_women():
    return load_edge_list((DATA_DIR / "southern_women.tsv").read_text())


@pytest.fixture(scope="session")
def toy3x3():
    """3x3 complete bipartite graph minus the edge (u2, v2); 8 edges."""
    return load_edge_list((DATA_DIR / "toy3x3.tsv").read_text())
