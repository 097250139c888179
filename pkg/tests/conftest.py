import pytest

from psdforce import enumerate_graphs, write_graph6


@pytest.fixture(scope="session")
def classes_by_order():
    """Canonical graph6 labels of every isomorphism class, orders 1..6."""
    return {
        n: [write_graph6(g) for g in enumerate_graphs(n)] for n in range(1, 7)
    }
