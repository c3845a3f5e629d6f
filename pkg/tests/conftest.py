from __future__ import annotations

from cubicaug.graph import Multigraph

K4_EDGES = ((0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3))


def cycle(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def k4() -> Multigraph:
    return Multigraph(4, K4_EDGES)


def k23() -> Multigraph:
    return Multigraph(5, tuple((a, b) for a in (0, 1) for b in (2, 3, 4)))


def k33() -> Multigraph:
    return Multigraph(6, tuple((a, b) for a in (0, 1, 2) for b in (3, 4, 5)))


def k4_two_opposite_subdivided() -> Multigraph:
    # 0-1 split by 4, 2-3 split by 5
    return Multigraph(6, ((0, 4), (4, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 5), (5, 3)))


def theta(a: int, b: int, c: int) -> Multigraph:
    """Two degree-3 vertices 0 and 1 joined by paths with a, b, c edges."""
    edges = []
    n = 2
    for length in (a, b, c):
        path = [0] + list(range(n, n + length - 1)) + [1]
        n += length - 1
        edges += list(zip(path, path[1:]))
    return Multigraph(n, tuple(edges))


def disjoint(*gs: Multigraph) -> Multigraph:
    n, edges = 0, []
    for g in gs:
        edges += [(a + n, b + n) for a, b in g.edges]
        n += g.n
    return Multigraph(n, tuple(edges))
