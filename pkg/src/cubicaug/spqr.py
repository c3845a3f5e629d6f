"""SPQR trees of 2-connected multigraphs with maximum degree 3.

Construction runs in linear time and relies on the degree bound:

* Two edges are in series (every cycle through one passes through the other)
  iff they carry the same cycle-space fingerprint. Each non-tree edge of a
  DFS tree gets a random 128-bit tag; a tree edge's fingerprint is the XOR of
  the tags of non-tree edges crossing its subtree boundary.
* Every series class with at least two edges is the real-edge set of one
  S-node. Walking the class around its cycle gives the skeleton; stretches
  between consecutive class edges become virtual edges.
* What remains (edges in singleton classes plus one virtual edge per
  stretch) splits into connected pieces on the degree-3 vertices; a piece
  on two vertices is a P-node, anything larger an R-node.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .graph import Multigraph, is_biconnected
from .outcomes import PreconditionError

FINGERPRINT_SEED = 0x5EED_C0DE


@dataclass(frozen=True)
class SkelEdge:
    """Skeleton edge ``u-v`` (graph vertex ids).

    ``real`` is the graph edge id when the neighbour across the edge is a
    Q-leaf (or, inside a Q-leaf, for both of its edges). ``node``/``twin``
    give the neighbouring tree node and the slot of the paired edge there;
    ``node == -1`` marks the real edge inside a Q-leaf.
    """

    u: int
    v: int
    real: int = -1
    node: int = -1
    twin: int = -1


@dataclass
class SpqrNode:
    kind: str  # "S", "P", "R" or "Q"
    edges: list[SkelEdge]

    def vertices(self) -> list[int]:
        return sorted({x for e in self.edges for x in (e.u, e.v)})


@dataclass
class SpqrTree:
    graph: Multigraph
    nodes: list[SpqrNode]
    q_of_edge: list[int]
    root: int = -1
    parent: list[int] = field(default_factory=list)
    parent_slot: list[int] = field(default_factory=list)
    children: list[list[int]] = field(default_factory=list)  # child slots in canonical order
    min_edge: list[int] = field(default_factory=list)

    @property
    def root_edge(self) -> int:
        return self.nodes[self.root].edges[0].real

    def neighbor(self, node: int, slot: int) -> int:
        return self.nodes[node].edges[slot].node

    def postorder(self) -> list[int]:
        """Non-leaf nodes below the root, children before parents."""
        out = []
        stack = [(self.neighbor(self.root, 1), False)]
        while stack:
            x, done = stack.pop()
            if self.nodes[x].kind == "Q":
                continue
            if done:
                out.append(x)
                continue
            stack.append((x, True))
            for s in reversed(self.children[x]):
                stack.append((self.neighbor(x, s), False))
        return out

    def poles(self, node: int) -> tuple[int, int]:
        e = self.nodes[node].edges[self.parent_slot[node]]
        return e.u, e.v


def _dfs(g: Multigraph):
    n = g.n
    parent_edge = [-1] * n
    depth = [-1] * n
    order: list[int] = []
    tree = [False] * g.m
    depth[0] = 0
    stack = [(0, 0)]
    order.append(0)
    while stack:
        v, i = stack[-1]
        ds = g.darts_at[v]
        if i == len(ds):
            stack.pop()
            continue
        stack[-1] = (v, i + 1)
        d = ds[i]
        w = g.head(d)
        if depth[w] < 0:
            depth[w] = depth[v] + 1
            parent_edge[w] = d >> 1
            tree[d >> 1] = True
            order.append(w)
            stack.append((w, 0))
    return parent_edge, depth, order, tree


def build_spqr(g: Multigraph) -> SpqrTree:
    """Unrooted SPQR tree; call :func:`root_at` before traversals."""
    if g.max_degree > 3:
        raise PreconditionError("SPQR construction here assumes maximum degree 3")
    if g.n < 3 or not is_biconnected(g):
        raise PreconditionError("SPQR tree needs a 2-connected graph on at least 3 vertices")
    parent_edge, depth, order, tree = _dfs(g)
    rng = random.Random(FINGERPRINT_SEED)
    tag = [0] * g.m
    acc = [0] * g.n
    for e in range(g.m):
        if not tree[e]:
            t = rng.getrandbits(128)
            tag[e] = t
            a, b = g.edges[e]
            acc[a] ^= t
            acc[b] ^= t
    for v in reversed(order):
        pe = parent_edge[v]
        if pe >= 0:
            tag[pe] = acc[v]
            a, b = g.edges[pe]
            acc[a if b == v else b] ^= acc[v]
    if any(t == 0 for t in tag):
        raise PreconditionError("graph has a bridge")

    classes: dict[int, list[int]] = {}
    for e in range(g.m):
        classes.setdefault(tag[e], []).append(e)

    def child_end(e: int) -> int:
        a, b = g.edges[e]
        return a if depth[a] > depth[b] else b

    def parent_end(e: int) -> int:
        a, b = g.edges[e]
        return b if depth[a] > depth[b] else a

    nodes: list[SpqrNode] = []
    host_of_edge = [-1] * g.m
    slot_of_edge = [-1] * g.m
    # pending virtual edges: (entry, exit, s-node, slot)
    pending: list[tuple[int, int, int, int]] = []
    singles: list[int] = []
    for cls in sorted(classes.values(), key=lambda c: c[0]):
        if len(cls) == 1:
            singles.append(cls[0])
            continue
        ts = sorted((e for e in cls if tree[e]), key=lambda e: depth[child_end(e)])
        backs = [e for e in cls if not tree[e]]
        if len(backs) > 1 or not ts:
            raise AssertionError("fingerprint collision in series classes")
        seq: list[tuple[str, int, int, int]] = []  # (kind, a, b, edge)
        for i, t in enumerate(ts):
            seq.append(("real", parent_end(t), child_end(t), t))
            if i + 1 < len(ts):
                seq.append(("seg", child_end(t), parent_end(ts[i + 1]), -1))
        if backs:
            b = backs[0]
            lo, hi = child_end(b), parent_end(b)
            seq.append(("seg", child_end(ts[-1]), lo, -1))
            seq.append(("real", lo, hi, b))
            seq.append(("seg", hi, parent_end(ts[0]), -1))
        else:
            seq.append(("seg", child_end(ts[-1]), parent_end(ts[0]), -1))
        sid = len(nodes)
        sk: list[SkelEdge] = []
        for kind, a, b, e in seq:
            if kind == "real":
                u, v = g.edges[e]
                slot_of_edge[e] = len(sk)
                sk.append(SkelEdge(u, v, real=e))
                host_of_edge[e] = sid
            elif a != b:
                pending.append((a, b, sid, len(sk)))
                sk.append(SkelEdge(a, b))
        nodes.append(SpqrNode("S", sk))

    # P/R pieces: union-find over degree-3 vertices
    uf = list(range(g.n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for e in singles:
        a, b = g.edges[e]
        uf[find(a)] = find(b)
    for a, b, _, _ in pending:
        uf[find(a)] = find(b)
    piece_of: dict[int, int] = {}
    members: list[list[tuple[str, int]]] = []

    def piece(x: int) -> int:
        r = find(x)
        if r not in piece_of:
            piece_of[r] = len(members)
            members.append([])
        return piece_of[r]

    for e in singles:
        members[piece(g.edges[e][0])].append(("real", e))
    for i, (a, _, _, _) in enumerate(pending):
        members[piece(a)].append(("seg", i))
    base = len(nodes)
    for k, items in enumerate(members):
        nid = base + k
        sk = []
        verts = set()
        for kind, i in items:
            if kind == "real":
                u, v = g.edges[i]
                slot_of_edge[i] = len(sk)
                sk.append(SkelEdge(u, v, real=i))
                host_of_edge[i] = nid
            else:
                a, b, sid, slot = pending[i]
                sk.append(SkelEdge(a, b, node=sid, twin=slot))
                nodes[sid].edges[slot] = SkelEdge(a, b, node=nid, twin=len(sk) - 1)
            verts.update((sk[-1].u, sk[-1].v))
        nodes.append(SpqrNode("P" if len(verts) == 2 else "R", sk))

    q_of_edge = [-1] * g.m
    for e in range(g.m):
        h = host_of_edge[e]
        slot = slot_of_edge[e]
        u, v = g.edges[e]
        q = len(nodes)
        nodes.append(SpqrNode("Q", [SkelEdge(u, v, real=e), SkelEdge(u, v, real=e, node=h, twin=slot)]))
        nodes[h].edges[slot] = SkelEdge(u, v, real=e, node=q, twin=1)
        q_of_edge[e] = q
    return SpqrTree(g, nodes, q_of_edge)


def root_at(t: SpqrTree, e: int) -> SpqrTree:
    """Root the tree at the Q-leaf of edge ``e`` (in place; returns ``t``)."""
    nn = len(t.nodes)
    t.root = t.q_of_edge[e]
    t.parent = [-1] * nn
    t.parent_slot = [-1] * nn
    t.children = [[] for _ in range(nn)]
    order = [t.root]
    seen = [False] * nn
    seen[t.root] = True
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for slot, s in enumerate(t.nodes[x].edges):
            y = s.node
            if y < 0 or seen[y]:
                continue
            seen[y] = True
            t.parent[y] = x
            t.parent_slot[y] = s.twin
            order.append(y)
    t.min_edge = [nn * 4] * nn
    for x in reversed(order):
        if t.nodes[x].kind == "Q":
            t.min_edge[x] = t.nodes[x].edges[0].real
        p = t.parent[x]
        if p >= 0 and t.min_edge[x] < t.min_edge[p]:
            t.min_edge[p] = t.min_edge[x]
    for x in order:
        slots = [s for s, se in enumerate(t.nodes[x].edges) if se.node >= 0 and se.node != t.parent[x]]
        t.children[x] = sorted(slots, key=lambda s: t.min_edge[t.nodes[x].edges[s].node])
    return t


@dataclass(frozen=True)
class PertinentGraph:
    edges: tuple[int, ...]  # graph edge ids
    u: int
    v: int


def pertinent(t: SpqrTree, node: int) -> PertinentGraph:
    if node == t.root:
        raise PreconditionError("the root has no pertinent graph of its own")
    out = []
    stack = [node]
    while stack:
        x = stack.pop()
        if t.nodes[x].kind == "Q":
            out.append(t.nodes[x].edges[0].real)
            continue
        stack.extend(t.neighbor(x, s) for s in t.children[x])
    u, v = t.poles(node)
    return PertinentGraph(tuple(sorted(out)), u, v)


def glue(t: SpqrTree) -> list[tuple[int, int, int]]:
    """Real edges recovered from all skeletons: ``(edge id, u, v)`` sorted."""
    out = []
    for node in t.nodes:
        if node.kind == "Q":
            s = node.edges[0]
            out.append((s.real, s.u, s.v))
    return sorted(out)


def skeleton_multigraph(node: SpqrNode) -> tuple[Multigraph, list[int]]:
    """Skeleton on compact ids; returns (graph, local-to-graph vertex list)."""
    verts = node.vertices()
    idx = {v: i for i, v in enumerate(verts)}
    return Multigraph(len(verts), tuple((idx[e.u], idx[e.v]) for e in node.edges)), verts


def format_tree(t: SpqrTree) -> str:
    rows = []
    for i, node in enumerate(t.nodes):
        parts = []
        for s in node.edges:
            if s.node < 0:
                parts.append(f"{s.u}-{s.v}#{s.real}")
            elif t.nodes[s.node].kind == "Q":
                parts.append(f"{s.u}-{s.v}#{s.real}")
            else:
                parts.append(f"{s.u}-{s.v}~{s.node}")
        par = t.parent[i] if t.parent else -1
        rows.append(f"{i} {node.kind} {par} [{' '.join(parts)}]")
    return "\n".join(rows) + "\n"


def check_tree(t: SpqrTree) -> Optional[str]:
    """First violated structural invariant, or ``None``."""
    kinds = [n.kind for n in t.nodes]
    for i, node in enumerate(t.nodes):
        for slot, s in enumerate(node.edges):
            if s.node >= 0:
                back = t.nodes[s.node].edges[s.twin]
                if back.node != i or back.twin != slot or {back.u, back.v} != {s.u, s.v}:
                    return f"unpaired virtual edge at node {i} slot {slot}"
                if kinds[i] == kinds[s.node] and kinds[i] in "SP":
                    return f"adjacent {kinds[i]}-nodes {i} and {s.node}"
        if node.kind == "S":
            k = len(node.edges)
            if k < 3:
                return f"S-node {i} has fewer than 3 edges"
            deg: dict[int, int] = {}
            for s in node.edges:
                deg[s.u] = deg.get(s.u, 0) + 1
                deg[s.v] = deg.get(s.v, 0) + 1
            if any(d != 2 for d in deg.values()) or len(deg) != k:
                return f"S-node {i} is not a cycle"
        elif node.kind == "P":
            if len(node.edges) != 3 or len(node.vertices()) != 2:
                return f"P-node {i} is not three parallel edges"
        elif node.kind == "Q":
            if len(node.edges) != 2:
                return f"Q-node {i} malformed"
    return None
