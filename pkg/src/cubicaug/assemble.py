"""Top-level driver for arbitrary input graphs.

Every vertex lies in exactly one unit: a block with at least two edges, or
(when all its edges are bridges) a singleton. Blocks are augmented on their
own, singletons become a corner of a fresh K4. Bridges are then restored one
at a time by trading one added edge on each side for the bridge plus one
new edge between the freed ends. In biconnected mode the components are
finally hung off a shared K4 chain.
"""

from __future__ import annotations

import itertools
from typing import Optional, Union

from .antifactor import brute_force_solve, build_instance
from .fixed import AugmentationResult, augment_fixed, k4_chain
from .graph import Embedding, Multigraph, blocks, bridges, induced_on_edges, is_biconnected, planarity_embed
from .labels import variable_augment
from .outcomes import Infeasible, PreconditionError
from .verify import VerificationReport, verify

__all__ = ["augment", "augment_embedded", "oracle_decide", "verify", "VerificationReport", "MODES"]

MODES = ("any", "biconnected")
ORACLE_MAX_VERTICES = 14


class _Pool:
    """Added edges of the growing supergraph, with per-vertex lookup."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.edges: dict[int, tuple[int, int]] = {}
        self.at: dict[int, set[int]] = {}
        self._next = 0

    def new_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add(self, a: int, b: int) -> int:
        k = self._next
        self._next += 1
        self.edges[k] = (a, b)
        self.at.setdefault(a, set()).add(k)
        self.at.setdefault(b, set()).add(k)
        return k

    def remove(self, k: int) -> tuple[int, int]:
        a, b = self.edges.pop(k)
        self.at[a].discard(k)
        self.at[b].discard(k)
        return a, b

    def spare(self, v: int) -> int:
        return min(self.at.get(v, ()))

    def other(self, k: int, v: int) -> int:
        a, b = self.edges[k]
        return b if a == v else a


def _add_result(pool: _Pool, res: AugmentationResult, vmap: list[int], emap: list[int]) -> None:
    """Copy the added part of a block augmentation into ``pool``."""
    h = res.graph
    where = [-1] * h.n
    for i, x in enumerate(res.vertex_map):
        where[x] = vmap[i]
    for x in range(h.n):
        if where[x] < 0:
            where[x] = pool.new_vertex()
    original = set(res.edge_map)
    for e, (a, b) in enumerate(h.edges):
        if e not in original:
            pool.add(where[a], where[b])


def _singleton(pool: _Pool, v: int) -> None:
    a, b, c = (pool.new_vertex() for _ in range(3))
    for x, y in ((v, a), (v, b), (v, c), (a, b), (b, c), (c, a)):
        pool.add(x, y)


def _hub(pool: _Pool, g: Multigraph) -> Optional[Infeasible]:
    comps = [c for c in g.components()]
    if len(comps) < 2:
        return None
    spares = []
    for comp in comps:
        k = next((min(pool.at[v]) for v in comp if pool.at.get(v)), None)
        if k is None:
            return Infeasible("cubic-component", f"component containing vertex {comp[0]} is already 3-regular")
        spares.append(k)
    chain = k4_chain(2 * len(comps))
    off = pool.n
    pool.n += chain.graph.n
    for a, b in chain.graph.edges:
        pool.add(a + off, b + off)
    slots = [s + off for s in chain.attach]
    for i, k in enumerate(spares):
        x, y = pool.remove(k)
        pool.add(x, slots[2 * i])
        pool.add(y, slots[2 * i + 1])
    return None


def augment(g: Multigraph, mode: str = "any") -> Union[AugmentationResult, Infeasible]:
    """3-augmentation of ``g`` (connected in ``biconnected`` mode), or the reason none exists."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if g.max_degree > 3:
        return Infeasible("degree", "maximum degree exceeds 3")
    if g.n == 0:
        empty = Multigraph(0, ())
        return AugmentationResult(empty, Embedding(empty, ()), (), ())
    if planarity_embed(g) is None:
        return Infeasible("nonplanar", "graph is not planar")
    pool = _Pool(g.n)
    covered = [False] * g.n
    bd = blocks(g)
    for bi, bedges in enumerate(bd.blocks):
        if len(bedges) < 2:
            continue
        sub, vmap, emap = induced_on_edges(g, bedges)
        res = variable_augment(sub)
        if isinstance(res, Infeasible):
            return Infeasible(res.reason, f"block {bi} (vertices {sorted(vmap)}): {res.detail}")
        _add_result(pool, res, vmap, emap)
        for v in vmap:
            covered[v] = True
    for v in range(g.n):
        if not covered[v]:
            _singleton(pool, v)
    for j in sorted(bridges(g)):
        u, v = g.edges[j]
        e1, e2 = pool.spare(u), pool.spare(v)
        a = pool.other(e1, u)
        b = pool.other(e2, v)
        pool.remove(e1)
        pool.remove(e2)
        pool.add(a, b)
    if mode == "biconnected":
        bad = _hub(pool, g)
        if bad is not None:
            return bad
    added = [pool.edges[k] for k in sorted(pool.edges)]
    h = Multigraph(pool.n, tuple(g.edges) + tuple(added))
    emb = planarity_embed(h)
    if emb is None:
        raise RuntimeError("recombined supergraph is not planar")
    return AugmentationResult(h, emb, tuple(range(g.n)), tuple(range(g.m)))


def augment_embedded(g: Multigraph, emb: Embedding) -> Union[AugmentationResult, Infeasible]:
    """Fixed-embedding variant; ``g`` must be 2-connected with maximum degree 3."""
    if g.max_degree > 3:
        return Infeasible("degree", "maximum degree exceeds 3")
    if not (emb.is_planar() and emb.euler_global()):
        return Infeasible("nonplanar", "the given rotation system is not planar")
    return augment_fixed(g, emb)


def rotation_systems(g: Multigraph):
    """All rotation systems up to global mirror image (the first degree-3 vertex is fixed)."""
    d3 = [v for v in range(g.n) if g.degrees[v] == 3]
    base = [tuple(g.darts_at[v]) for v in range(g.n)]
    for bits in itertools.product((False, True), repeat=max(0, len(d3) - 1)):
        rot = list(base)
        for v, b in zip(d3[1:], bits):
            if b:
                r = rot[v]
                rot[v] = (r[0], r[2], r[1])
        yield Embedding(g, tuple(rot))


def oracle_decide(g: Multigraph) -> bool:
    """Exhaustive decision for small 2-connected graphs: some planar rotation system is augmentable."""
    if g.n > ORACLE_MAX_VERTICES:
        raise PreconditionError(f"oracle limited to {ORACLE_MAX_VERTICES} vertices")
    if g.max_degree > 3:
        raise PreconditionError("maximum degree exceeds 3")
    if not is_biconnected(g):
        raise PreconditionError("oracle expects a 2-connected graph")
    for emb in rotation_systems(g):
        if emb.is_planar() and brute_force_solve(build_instance(emb)) is not None:
            return True
    return False
