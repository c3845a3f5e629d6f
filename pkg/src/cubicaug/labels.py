"""Variable-embedding augmentation by dynamic programming over the SPQR tree.

Bottom-up, every inner node gets the label set of its pertinent graph: its
skeleton is embedded, each child's virtual edge is replaced by the gadget of
the child's set, and the three label checks decide the node's own set. The
root check asks whether the label 00 survives once the root edge is put
back. Top-down, each node re-solves one check for the label its parent asks
for, flips itself if the solution lands on the wrong side, and hands
normalised labels to its children. The skeleton embeddings with those flips
compose into an embedding of the whole graph, which the fixed-embedding
routine then augments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .antifactor import solve
from .fixed import AugmentationResult, augment_fixed
from .gadgets import gadget_for
from .graph import Embedding, Multigraph, is_biconnected, planarity_embed
from .outcomes import Infeasible, PreconditionError
from .spqr import SpqrTree, build_spqr, root_at, skeleton_multigraph
from .uvgraph import CHECKS, Label, LabelSet, UvBuilder, gadget_counts, run_check


@dataclass
class NodeFrame:
    """Embedded skeleton of one inner node, on local vertex ids."""

    verts: list[int]
    local: dict[int, int]
    rot: list[list[int]]  # darts 2*slot + side


def _frame(t: SpqrTree, node: int) -> NodeFrame:
    sk, verts = skeleton_multigraph(t.nodes[node])
    local = {x: i for i, x in enumerate(verts)}
    kind = t.nodes[node].kind
    if kind == "R":
        emb = planarity_embed(sk)
        if emb is None:
            raise PreconditionError("skeleton is not planar")
        rot = [list(r) for r in emb.rotation]
    elif kind == "P":
        rot = [list(sk.darts_at[0]), list(sk.darts_at[1])]
        if not Embedding(sk, tuple(map(tuple, rot))).is_planar():
            rot[1] = [rot[1][0], rot[1][2], rot[1][1]]
    else:
        rot = [list(sk.darts_at[x]) for x in range(sk.n)]
    Embedding(sk, tuple(map(tuple, rot))).assert_planar()
    return NodeFrame(verts, local, rot)


@dataclass
class DpState:
    graph: Multigraph
    tree: SpqrTree
    frames: dict[int, NodeFrame] = field(default_factory=dict)
    sets: dict[int, LabelSet] = field(default_factory=dict)
    checks: dict[int, tuple[bool, bool, bool]] = field(default_factory=dict)
    root_ok: Optional[bool] = None

    @property
    def top(self) -> int:
        return self.tree.neighbor(self.tree.root, 1)

    def child_set(self, child: int) -> LabelSet:
        if self.tree.nodes[child].kind == "Q":
            return LabelSet.of("00")
        return self.sets[child]


def _base(st: DpState, node: int):
    """Skeleton with child gadgets spliced in and saturated series vertices."""
    t, g = st.tree, st.graph
    fr = st.frames[node]
    b = UvBuilder(None, t.parent_slot[node])
    b.add_vertices(len(fr.verts))
    for s in t.nodes[node].edges:
        b.edges.append((fr.local[s.u], fr.local[s.v]))
    b.rot = [list(r) for r in fr.rot]
    splices = []
    for slot in t.children[node]:
        c = t.neighbor(node, slot)
        if t.nodes[c].kind == "Q":
            continue
        splices.append((c, b.splice(slot, *gadget_for(st.sets[c]).splice_args)))
    if t.nodes[node].kind == "S":
        pu, pv = (fr.local[x] for x in t.poles(node))
        for i, x in enumerate(fr.verts):
            if i not in (pu, pv) and g.degrees[x] == 3:
                b.diamond(i)
    return b, splices


def _root_base(st: DpState):
    """Cycle U-X-[gadget of the top node]-Y-V closed by U-V."""
    g, t = st.graph, st.tree
    x, y = g.edges[t.root_edge]
    b = UvBuilder(None, 3)
    U, X, Y, V = b.add_vertices(4)
    for p, q in ((U, X), (X, Y), (Y, V), (U, V)):
        b.edges.append((p, q))
    b.rot = [[0, 6], [1, 2], [3, 4], [5, 7]]
    sp = b.splice(1, *gadget_for(st.sets[st.top]).splice_args)
    for loc, w in ((X, x), (Y, y)):
        if g.degrees[w] == 3:
            b.diamond(loc)
    return b, [(st.top, sp)]


def _closed(b: UvBuilder, check: str) -> tuple[UvBuilder, Optional[int]]:
    c = b.copy()
    w = c.close(check, gadget_for(LabelSet.of("11")).splice_args)
    return c, w


def node_label_set(st: DpState, node: int) -> LabelSet:
    """Label set of the node's pertinent graph from its children's sets (one path for S, P and R)."""
    b, _ = _base(st, node)
    res = tuple(run_check(_closed(b, chk)[0])[2] is not None for chk in CHECKS)
    st.checks[node] = res
    return LabelSet.from_checks(*res)


def run_dp(g: Multigraph, root_edge: int = 0) -> DpState:
    t = root_at(build_spqr(g), root_edge)
    st = DpState(g, t)
    for node in t.postorder():
        st.frames[node] = _frame(t, node)
        ls = node_label_set(st, node)
        st.sets[node] = ls
        if not ls:
            st.root_ok = False
            return st
    b, _ = _root_base(st)
    st.root_ok = run_check(_closed(b, "00")[0])[2] is not None
    return st


def _normalise(counts: list[int], face: int, raw: int) -> int:
    if raw < 2:
        return raw
    rest = counts[face] - raw
    pick = 1 if rest == 1 else 0
    counts[face] = rest + pick
    return pick


def _child_targets(b: UvBuilder, splices, check: str):
    c, w = _closed(b, check)
    emb, inst, a = run_check(c)
    if a is None:
        raise RuntimeError(f"check {check} expected to succeed during reconstruction")
    counts = a.counts(inst.n_faces)
    out = {}
    for child, sp in splices:
        ra, rb = gadget_counts(emb, inst, a, sp)
        la = _normalise(counts, emb.face_of[sp.l_marker], ra)
        lb = _normalise(counts, emb.face_of[sp.r_marker], rb)
        out[child] = (la, lb)
    side = None
    if w is not None:
        where = dict(zip(inst.vertices, a.faces))
        side = (1, 0) if where[w] == emb.face_of[2 * c.ref] else (0, 1)
    return out, side


def realize(st: DpState) -> dict[int, bool]:
    """Relative flip of every inner node such that the composed embedding is augmentable."""
    t = st.tree
    flips: dict[int, bool] = {}
    b, sp = _root_base(st)
    targets, _ = _child_targets(b, sp, "00")
    stack = [(st.top, targets[st.top])]
    while stack:
        node, lab = stack.pop()
        check = "00" if lab == (0, 0) else "11" if lab == (1, 1) else "01|10"
        if lab not in st.sets[node]:
            raise RuntimeError(f"label {lab} requested outside the set of node {node}")
        b, sp = _base(st, node)
        targets, side = _child_targets(b, sp, check)
        flips[node] = side is not None and side != lab
        for child, clab in targets.items():
            stack.append((child, clab))
    return flips


def compose_embedding(st: DpState, flips: dict[int, bool]) -> Embedding:
    """Glue the flipped skeleton embeddings into a rotation system of the whole graph."""
    t, g = st.tree, st.graph
    absflip: dict[int, bool] = {}
    order = [st.top]
    absflip[st.top] = flips[st.top]
    home: dict[int, int] = {}
    i = 0
    while i < len(order):
        node = order[i]
        i += 1
        for x in st.frames[node].verts:
            home.setdefault(x, node)
        for slot in t.children[node]:
            c = t.neighbor(node, slot)
            if t.nodes[c].kind != "Q":
                absflip[c] = absflip[node] ^ flips[c]
                order.append(c)

    def expand(node: int, x: int, full: bool) -> list[int]:
        fr = st.frames[node]
        lx = fr.local[x]
        r = list(reversed(fr.rot[lx])) if absflip[node] else list(fr.rot[lx])
        if not full:
            ps = t.parent_slot[node]
            k = next(j for j, d in enumerate(r) if d >> 1 == ps)
            r = r[k + 1 :] + r[:k]
        out = []
        for d in r:
            s = t.nodes[node].edges[d >> 1]
            if t.nodes[s.node].kind == "Q":
                out.append(g.dart_from(s.real, x))
            else:
                out.extend(expand(s.node, x, False))
        return out

    rot = [expand(home[x], x, True) for x in range(g.n)]
    return Embedding(g, tuple(map(tuple, rot)))


def variable_augment(g: Multigraph) -> Union[AugmentationResult, Infeasible]:
    """3-augmentation of a 2-connected subcubic graph over all its planar embeddings."""
    if g.max_degree > 3:
        raise PreconditionError("maximum degree exceeds 3")
    if not is_biconnected(g):
        raise PreconditionError("graph is not 2-connected")
    emb = planarity_embed(g)
    if emb is None:
        return Infeasible("nonplanar", "graph is not planar")
    if g.n == 2:
        return augment_fixed(g, emb)
    st = run_dp(g)
    if not st.root_ok:
        return Infeasible("structural", "no planar embedding admits a 3-augmentation")
    emb = compose_embedding(st, realize(st))
    res = augment_fixed(g, emb)
    if isinstance(res, Infeasible):
        raise RuntimeError("reconstructed embedding is not augmentable")
    return res


def format_label_sets(st: DpState) -> str:
    rows = []
    for node in st.tree.postorder():
        if node in st.sets:
            rows.append(f"{node} {st.tree.nodes[node].kind} {st.sets[node]}")
    return "\n".join(rows) + "\n"
