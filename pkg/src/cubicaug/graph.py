"""Multigraphs, rotation-system embeddings, faces, bridges and blocks.

Edges carry dense ids ``0..m-1``. Each edge ``e = (u, v)`` owns two darts:
``2*e`` leaves ``u`` and ``2*e + 1`` leaves ``v``. The twin of a dart is
``d ^ 1``. An embedding stores, for each vertex, the clockwise cyclic order
of the darts leaving it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx


def twin(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


def dart(e: int, side: int) -> int:
    return 2 * e + side


@dataclass(frozen=True)
class Multigraph:
    """Loop-free multigraph on vertices ``0..n-1``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for e, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError(f"edge {e} is a loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} = ({u}, {v}) leaves the vertex range 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def darts_at(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            out[u].append(2 * e)
            out[v].append(2 * e + 1)
        return tuple(tuple(ds) for ds in out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ds) for ds in self.darts_at)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    def dart_from(self, e: int, v: int) -> int:
        """The dart of edge ``e`` leaving ``v``."""
        u, w = self.edges[e]
        if u == v:
            return 2 * e
        if w == v:
            return 2 * e + 1
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.darts_at[v]]

    def extend(self, n_new: int, new_edges: Iterable[tuple[int, int]] = ()) -> Multigraph:
        """Append ``n_new`` vertices and the given edges; existing ids are kept."""
        return Multigraph(self.n + n_new, self.edges + tuple(new_edges))

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        comp = [-1] * self.n
        c = 0
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            comp[s] = c
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for d in self.darts_at[v]:
                    w = self.head(d)
                    if comp[w] < 0:
                        comp[w] = c
                        queue.append(w)
            c += 1
        return tuple(comp)

    @property
    def n_components(self) -> int:
        return max(self.component_of, default=-1) + 1

    def components(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_components)]
        for v, c in enumerate(self.component_of):
            out[c].append(v)
        return out

    def is_connected(self) -> bool:
        return self.n_components <= 1


def induced_on_edges(g: Multigraph, edge_ids: Iterable[int]) -> tuple[Multigraph, list[int], list[int]]:
    """Subgraph spanned by ``edge_ids`` with compact ids.

    Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
    ``edge_map[j]`` give the ids in ``g`` of local vertex ``i`` and edge ``j``.
    Local ids follow increasing order of the original ids.
    """
    eids = sorted(set(edge_ids))
    verts = sorted({x for e in eids for x in g.edges[e]})
    local = {v: i for i, v in enumerate(verts)}
    sub = Multigraph(len(verts), tuple((local[g.edges[e][0]], local[g.edges[e][1]]) for e in eids))
    return sub, verts, eids


@dataclass(frozen=True)
class Embedding:
    """A rotation system on ``graph`` plus a designated outer face.

    Rotations are normalised so each starts with its smallest dart, which
    makes equality of embeddings an exact comparison.
    """

    graph: Multigraph
    rotation: tuple[tuple[int, ...], ...]
    outer: int = 0

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise ValueError("rotation system must list every vertex")
        norm = []
        for v, rot in enumerate(self.rotation):
            rot = tuple(int(d) for d in rot)
            if sorted(rot) != list(g.darts_at[v]):
                raise ValueError(f"rotation at {v} is not a permutation of its darts")
            if rot:
                i = rot.index(min(rot))
                rot = rot[i:] + rot[:i]
            norm.append(rot)
        object.__setattr__(self, "rotation", tuple(norm))
        if self.outer < 0 or (self.faces and self.outer >= len(self.faces)):
            raise ValueError(f"outer face {self.outer} out of range")

    @cached_property
    def succ(self) -> list[int]:
        """``succ[d]``: the dart after ``d`` in the rotation at its tail."""
        s = [0] * (2 * self.graph.m)
        for rot in self.rotation:
            k = len(rot)
            for i, d in enumerate(rot):
                s[d] = rot[(i + 1) % k]
        return s

    @cached_property
    def pred(self) -> list[int]:
        p = [0] * (2 * self.graph.m)
        for d, s in enumerate(self.succ):
            p[s] = d
        return p

    def face_next(self, d: int) -> int:
        return self.succ[d ^ 1]

    @cached_property
    def _traced(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        return trace_faces(self.rotation, self.graph.m)

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self._traced[0]

    @property
    def face_of(self) -> tuple[int, ...]:
        return self._traced[1]

    def face_vertices(self, f: int) -> list[int]:
        return [self.graph.tail(d) for d in self.faces[f]]

    def is_planar(self) -> bool:
        """Genus-0 test: ``v - e + f = 2`` on every component with an edge."""
        g = self.graph
        comp = g.component_of
        nc = g.n_components
        count = [0] * nc
        for v in range(g.n):
            count[comp[v]] += 1
        for u, _ in g.edges:
            count[comp[u]] -= 1
        for walk in self.faces:
            count[comp[g.tail(walk[0])]] += 1
        has_edge = [False] * nc
        for u, _ in g.edges:
            has_edge[comp[u]] = True
        return all(count[c] == 2 for c in range(nc) if has_edge[c])

    def euler_global(self) -> bool:
        """``v - e + f = 1 + c`` with the outer faces of all components merged."""
        g = self.graph
        with_edges = len({g.component_of[u] for u, _ in g.edges})
        f = len(self.faces) - with_edges + 1
        return g.n - g.m + f == 1 + g.n_components

    def assert_planar(self) -> None:
        if not (self.is_planar() and self.euler_global()):
            raise AssertionError("embedding violates the Euler relation")


def trace_faces(rotation: tuple[tuple[int, ...], ...], m: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Facial walks of a rotation system, in order of their smallest dart."""
    succ = [0] * (2 * m)
    for rot in rotation:
        k = len(rot)
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % k]
    face_of = [-1] * (2 * m)
    faces: list[tuple[int, ...]] = []
    for start in range(2 * m):
        if face_of[start] >= 0:
            continue
        f = len(faces)
        walk = []
        d = start
        while face_of[d] < 0:
            face_of[d] = f
            walk.append(d)
            d = succ[d ^ 1]
        faces.append(tuple(walk))
    return tuple(faces), tuple(face_of)


def flip(emb: Embedding) -> Embedding:
    """Mirror image: every rotation reversed, the same outer face kept."""
    rot = tuple(tuple(reversed(r)) for r in emb.rotation)
    if not emb.faces:
        return Embedding(emb.graph, rot, 0)
    d = emb.faces[emb.outer][0] ^ 1
    _, face_of = trace_faces(rot, emb.graph.m)
    return Embedding(emb.graph, rot, face_of[d])


def restrict(emb: Embedding, edge_ids: Iterable[int], n: Optional[int] = None) -> Embedding:
    """Embedding induced on a subset of edges.

    Kept edges are renumbered in increasing id order; when they form a prefix
    ``0..k-1`` every dart keeps its id. Vertices ``0..n-1`` are kept (default:
    all), so ``n`` must cover every endpoint of a kept edge.
    """
    g = emb.graph
    keep = sorted(set(edge_ids))
    if keep and (keep[0] < 0 or keep[-1] >= g.m):
        raise ValueError("edge id outside the embedded graph")
    n = g.n if n is None else n
    new_id = {e: i for i, e in enumerate(keep)}
    sub = Multigraph(n, tuple(g.edges[e] for e in keep))
    rot = []
    for v in range(n):
        rot.append(tuple(2 * new_id[d >> 1] + (d & 1) for d in emb.rotation[v] if (d >> 1) in new_id))
    for v in range(n, g.n):
        if any((d >> 1) in new_id for d in g.darts_at[v]):
            raise ValueError(f"kept edge touches dropped vertex {v}")
    outer = 0
    if emb.faces:
        for d in emb.faces[emb.outer]:
            if (d >> 1) in new_id:
                nd = 2 * new_id[d >> 1] + (d & 1)
                outer = trace_faces(tuple(rot), len(keep))[1][nd]
                break
    return Embedding(sub, tuple(rot), outer)


def planarity_embed(g: Multigraph) -> Optional[Embedding]:
    """A planar embedding of ``g``, or ``None`` when ``g`` is not planar.

    Parallel edges beyond the first between a vertex pair are subdivided for
    the simple-graph test and restored afterwards. Face 0 is the outer face.
    """
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    first: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        key = (u, v) if u < v else (v, u)
        if key not in first:
            first[key] = e
            h.add_edge(u, v)
        else:
            s = g.n + e
            h.add_edge(u, s)
            h.add_edge(s, v)
    ok, pe = nx.check_planarity(h)
    if not ok:
        return None
    rot = []
    for v in range(g.n):
        ds = []
        if h.degree(v):
            for w in pe.neighbors_cw_order(v):
                if w >= g.n:
                    e = w - g.n
                else:
                    e = first[(v, w) if v < w else (w, v)]
                ds.append(g.dart_from(e, v))
        rot.append(tuple(ds))
    emb = Embedding(g, tuple(rot), 0)
    emb.assert_planar()
    return emb


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (edge-id tuples), their vertices, cut vertices and the block-cut tree."""

    blocks: tuple[tuple[int, ...], ...]
    block_vertices: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    tree: tuple[tuple[int, int], ...]  # (block index, cut vertex) incidences


def _lowpoint_blocks(g: Multigraph) -> tuple[list[list[int]], list[int]]:
    """Iterative DFS returning (blocks as edge lists, bridge edge ids)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    bridges: list[int] = []
    estack: list[int] = []
    timer = 0
    darts_at = g.darts_at
    edges = g.edges
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            ds = darts_at[v]
            if i < len(ds):
                stack[-1] = (v, pe, i + 1)
                d = ds[i]
                e = d >> 1
                if e == pe:
                    continue
                w = edges[e][1 - (d & 1)]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append(e)
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    estack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                blk = []
                while True:
                    x = estack.pop()
                    blk.append(x)
                    if x == pe:
                        break
                blocks.append(blk)
                if low[v] > disc[p]:
                    bridges.append(pe)
    return blocks, bridges


def bridges(g: Multigraph) -> set[int]:
    """Edge ids lying on no cycle."""
    return set(_lowpoint_blocks(g)[1])


def blocks(g: Multigraph) -> BlockDecomposition:
    raw, _ = _lowpoint_blocks(g)
    raw = sorted((sorted(b) for b in raw), key=lambda b: b[0])
    bverts = [tuple(sorted({x for e in b for x in g.edges[e]})) for b in raw]
    seen: dict[int, int] = {}
    for vs in bverts:
        for v in vs:
            seen[v] = seen.get(v, 0) + 1
    cuts = tuple(sorted(v for v, c in seen.items() if c > 1))
    cutset = set(cuts)
    tree = tuple((i, v) for i, vs in enumerate(bverts) for v in vs if v in cutset)
    return BlockDecomposition(tuple(tuple(b) for b in raw), tuple(bverts), cuts, tree)


def is_biconnected(g: Multigraph) -> bool:
    """Connected, at least two edges, and a single block."""
    if g.n < 2 or g.m < 2 or not g.is_connected():
        return False
    return len(_lowpoint_blocks(g)[0]) == 1


class RotationBuilder:
    """Mutable rotation system used to grow embeddings by appending.

    Existing vertex, edge and dart ids never change.
    """

    def __init__(self, emb: Optional[Embedding] = None):
        if emb is None:
            self.edges: list[tuple[int, int]] = []
            self.rot: list[list[int]] = []
        else:
            self.edges = list(emb.graph.edges)
            self.rot = [list(r) for r in emb.rotation]

    @property
    def n(self) -> int:
        return len(self.rot)

    def add_vertex(self) -> int:
        self.rot.append([])
        return len(self.rot) - 1

    def add_vertices(self, k: int) -> list[int]:
        return [self.add_vertex() for _ in range(k)]

    def _place(self, v: int, d: int, after: Optional[int]) -> None:
        r = self.rot[v]
        if after is None:
            r.append(d)
        else:
            r.insert(r.index(after) + 1, d)

    def add_edge(self, u: int, v: int, after_u: Optional[int] = None, after_v: Optional[int] = None) -> int:
        """New edge ``u-v``; its darts go right after ``after_u`` / ``after_v`` (or last)."""
        if u == v:
            raise ValueError(f"loop at {u}")
        e = len(self.edges)
        self.edges.append((u, v))
        self._place(u, 2 * e, after_u)
        self._place(v, 2 * e + 1, after_v)
        return e

    def add_embedding(self, emb: Embedding) -> tuple[int, int]:
        """Copy a disjoint embedded graph in; returns (vertex offset, edge offset)."""
        voff, eoff = self.n, len(self.edges)
        for u, v in emb.graph.edges:
            self.edges.append((u + voff, v + voff))
        for r in emb.rotation:
            self.rot.append([d + 2 * eoff for d in r])
        return voff, eoff

    def build(self, outer_dart: Optional[int] = None) -> Embedding:
        g = Multigraph(len(self.rot), tuple(self.edges))
        rot = tuple(tuple(r) for r in self.rot)
        outer = 0
        if outer_dart is not None:
            outer = trace_faces(rot, g.m)[1][outer_dart]
        return Embedding(g, rot, outer)
