import numpy as np
import pytest

from qclique.graphs import Graph, graph_from_edges

DEMO6_EDGES = [(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


@pytest.fixture(scope="session")
def demo6() -> Graph:
    """Six vertices, nine edges, five triangles, unique 4-clique {1,2,3,4}."""
    return graph_from_edges(6, DEMO6_EDGES)


@pytest.fixture(scope="session")
def k3() -> Graph:
    return graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture(scope="session")
def one_triangle4() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges)


def seeded_corpus(count: int, sizes, densities=(0.35, 0.55, 0.8), base_seed: int = 90210):
    """Deterministic list of small random graphs cycling through sizes/densities."""
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = densities[i % len(densities)]
        out.append(random_graph(n, p, base_seed + i))
    return out
