import pytest

from graphtheta.graphs import Graph, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def spider(*leg_lengths: int) -> Graph:
    """Trees made of paths glued at a common center (vertex 0)."""
    edges = []
    nxt = 1
    for L in leg_lengths:
        prev = 0
        for _ in range(L):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


@pytest.fixture(scope="session")
def universes_1_to_6():
    from graphtheta.smallgraphs import internal_universe

    return [internal_universe(n) for n in range(1, 7)]


@pytest.fixture(scope="session")
def universes_5_to_7():
    from graphtheta.smallgraphs import internal_universe

    return [internal_universe(n) for n in range(5, 8)]
