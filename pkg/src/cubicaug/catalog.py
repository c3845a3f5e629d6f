"""Exhaustive lists of small graphs, one per isomorphism class.

2-connected subcubic multigraphs are grown by open ears: start from a cycle
(a 2-gon counts) and repeatedly add a path between two distinct vertices of
degree 2. Every 2-connected graph arises this way, and all intermediate
graphs are subgraphs of the final one, so simple targets need only simple
intermediates.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

import networkx as nx

from .graph import Multigraph, planarity_embed


def _nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class _Classes:
    def __init__(self) -> None:
        self.buckets: dict[tuple, list[nx.MultiGraph]] = {}

    def add(self, g: Multigraph) -> bool:
        h = _nx(g)
        simple = nx.Graph(h)
        for u, v in simple.edges:
            simple[u][v]["w"] = str(h.number_of_edges(u, v))
        key = (g.n, g.m, tuple(sorted(g.degrees)), nx.weisfeiler_lehman_graph_hash(simple, edge_attr="w"))
        for other in self.buckets.get(key, []):
            if nx.is_isomorphic(h, other):
                return False
        self.buckets.setdefault(key, []).append(h)
        return True


def _ears(g: Multigraph, max_n: int, max_m: int, simple: bool) -> Iterator[Multigraph]:
    twos = [v for v in range(g.n) if g.degrees[v] == 2]
    adj = {frozenset(e) for e in g.edges}
    for a, b in itertools.combinations(twos, 2):
        for inner in range(0, max_n - g.n + 1):
            if g.m + inner + 1 > max_m:
                break
            if inner == 0 and simple and frozenset((a, b)) in adj:
                continue
            path = [a] + list(range(g.n, g.n + inner)) + [b]
            yield g.extend(inner, zip(path, path[1:]))


def biconnected_subcubic(max_n: int, max_m: int, simple: bool = False, planar: bool = True) -> list[Multigraph]:
    """All 2-connected graphs with max degree 3, at most ``max_n`` vertices and ``max_m`` edges."""
    seen = _Classes()
    frontier = []
    for k in range(2 if not simple else 3, min(max_n, max_m) + 1):
        c = Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))
        if seen.add(c):
            frontier.append(c)
    out = list(frontier)
    while frontier:
        nxt = []
        for g in frontier:
            for h in _ears(g, max_n, max_m, simple):
                if seen.add(h):
                    nxt.append(h)
        out.extend(nxt)
        frontier = nxt
    if planar:
        out = [g for g in out if planarity_embed(g) is not None]
    return sorted(out, key=lambda g: (g.n, g.m, g.edges))


def connected_multigraphs(max_m: int) -> list[Multigraph]:
    """Connected loopless multigraphs with 1..``max_m`` edges, up to isomorphism."""
    seen = _Classes()
    out = []
    for simple in nx.graph_atlas_g():
        k = simple.number_of_edges()
        if k == 0 or k > max_m or not nx.is_connected(simple):
            continue
        es = list(simple.edges)
        for extra in range(0, max_m - k + 1):
            for mult in itertools.combinations_with_replacement(range(k), extra):
                edges = list(es) + [es[i] for i in mult]
                g = Multigraph(simple.number_of_nodes(), tuple(edges))
                if seen.add(g):
                    out.append(g)
    return out


def face_multigraphs(max_m: int) -> list[Multigraph]:
    """Loopless multigraphs without isolated nodes and with 1..``max_m`` edges, up to isomorphism."""
    comps = sorted(connected_multigraphs(max_m), key=lambda c: c.m)
    out = []

    def grow(start: int, budget: int, chosen: list[Multigraph]) -> None:
        if chosen:
            n = 0
            edges = []
            for c in chosen:
                edges += [(a + n, b + n) for a, b in c.edges]
                n += c.n
            out.append(Multigraph(n, tuple(edges)))
        for i in range(start, len(comps)):
            if comps[i].m > budget:
                break
            grow(i, budget - comps[i].m, chosen + [comps[i]])

    grow(0, max_m, [])
    return out
