"""Exact solver for vertex-face antifactor instances.

Each degree-2 vertex (an A-node) picks one of its two incident faces
(B-nodes) and no face may be picked exactly once. Viewing faces as nodes and
A-nodes as edges gives the face multigraph; an assignment is then an
orientation of it in which no node has in-degree 1.

Solver outline: a connected component with an even edge count is always
solvable by pairing edges along a DFS tree. An odd component is solvable iff
some node ``c`` and three edges ``S`` at ``c`` leave only even components in
``component - S``; such a claw is located in linear time from lowpoint data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph import Embedding
from .outcomes import PreconditionError

FORBIDDEN_A = frozenset({0, 2})
FORBIDDEN_B = frozenset({1})


@dataclass(frozen=True)
class AntifactorInstance:
    """Incidence instance: A-node ``i`` touches faces ``incidences[i]``.

    ``vertices[i]`` is the graph vertex behind A-node ``i`` (``i`` itself for
    hand-built instances).
    """

    n_faces: int
    incidences: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        inc = tuple((int(f), int(g)) for f, g in self.incidences)
        object.__setattr__(self, "incidences", inc)
        if not self.vertices:
            object.__setattr__(self, "vertices", tuple(range(len(inc))))
        if len(self.vertices) != len(inc):
            raise ValueError("one graph vertex per A-node required")
        for i, (f, g) in enumerate(inc):
            if f == g:
                raise ValueError(f"A-node {i} must touch two distinct faces")
            if not (0 <= f < self.n_faces and 0 <= g < self.n_faces):
                raise ValueError(f"A-node {i} touches a face outside 0..{self.n_faces - 1}")

    @property
    def n_a(self) -> int:
        return len(self.incidences)


@dataclass(frozen=True)
class Assignment:
    """``faces[i]`` is the face chosen by A-node ``i``."""

    faces: tuple[int, ...]

    def counts(self, n_faces: int) -> list[int]:
        c = [0] * n_faces
        for f in self.faces:
            c[f] += 1
        return c


def is_valid(inst: AntifactorInstance, a: Assignment) -> bool:
    """Every A-node picks an incident face and no face is picked exactly once."""
    if len(a.faces) != inst.n_a:
        return False
    if any(f not in pair for f, pair in zip(a.faces, inst.incidences)):
        return False
    return all(c != 1 for c in a.counts(inst.n_faces))


def build_instance(emb: Embedding) -> AntifactorInstance:
    """A-nodes are the degree-2 vertices of the embedded graph, B-nodes its faces."""
    g = emb.graph
    inc = []
    verts = []
    face_of = emb.face_of
    for v in range(g.n):
        deg = g.degrees[v]
        if deg == 2:
            d1, d2 = g.darts_at[v]
            f1, f2 = face_of[d1], face_of[d2]
            if f1 == f2:
                raise PreconditionError(f"degree-2 vertex {v} sees a single face; graph is not 2-connected")
            inc.append((min(f1, f2), max(f1, f2)))
            verts.append(v)
        elif deg < 2:
            raise PreconditionError(f"vertex {v} has degree {deg}; a 2-connected graph is required")
        elif deg > 3:
            raise PreconditionError(f"vertex {v} has degree {deg} > 3")
    return AntifactorInstance(len(emb.faces), tuple(inc), tuple(verts))


def format_instance(inst: AntifactorInstance) -> str:
    rows = [f"faces {inst.n_faces}", f"verts {inst.n_a}"]
    rows += [f"{a}: {f} {g}" for a, (f, g) in zip(inst.vertices, inst.incidences)]
    return "\n".join(rows) + "\n"


def parse_instance(text: str) -> AntifactorInstance:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        k = int(lines[0].split()[1]) if lines[0].startswith("faces") else None
        m = int(lines[1].split()[1]) if lines[1].startswith("verts") else None
        if k is None or m is None:
            raise ValueError("expected 'faces k' and 'verts m' headers")
        inc, verts = [], []
        for ln in lines[2:]:
            a, rest = ln.split(":")
            f, g = (int(x) for x in rest.split())
            verts.append(int(a))
            inc.append((f, g))
        if len(inc) != m:
            raise ValueError(f"header announces {m} A-nodes, found {len(inc)}")
        return AntifactorInstance(k, tuple(inc), tuple(verts))
    except (IndexError, ValueError) as exc:
        raise ValueError(f"malformed antifactor instance: {exc}") from exc


# ---------------------------------------------------------------- oracle

BRUTE_FORCE_LIMIT = 20


def brute_force_solve(inst: AntifactorInstance) -> Optional[Assignment]:
    """Exhaustive search over all ``2**n_a`` choices (vectorised in chunks)."""
    k = inst.n_a
    if k > BRUTE_FORCE_LIMIT:
        raise PreconditionError(f"brute force limited to {BRUTE_FORCE_LIMIT} A-nodes, got {k}")
    if k == 0:
        return Assignment(())
    first = np.zeros((k, inst.n_faces), dtype=np.int8)
    second = np.zeros((k, inst.n_faces), dtype=np.int8)
    for i, (f, g) in enumerate(inst.incidences):
        first[i, f] = 1
        second[i, g] = 1
    shifts = np.arange(k, dtype=np.int64)
    base = second.sum(axis=0, dtype=np.int32)
    diff = (first - second).astype(np.int32)
    chunk = 1 << 16
    total = 1 << k
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int32)
        counts = base + bits @ diff
        ok = np.flatnonzero((counts != 1).all(axis=1))
        if ok.size:
            mask = int(masks[ok[0]])
            return Assignment(tuple(f if (mask >> i) & 1 else g for i, (f, g) in enumerate(inst.incidences)))
    return None


# ---------------------------------------------------------------- solver


class _FaceGraph:
    """Adjacency of the face multigraph: ``adj[x]`` lists ``(edge, other)``."""

    def __init__(self, n: int, ends: Sequence[tuple[int, int]]):
        self.n = n
        self.ends = ends
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (x, y) in enumerate(ends):
            self.adj[x].append((e, y))
            self.adj[y].append((e, x))

    def components(self, alive: list[bool]) -> list[tuple[list[int], list[int]]]:
        """(nodes, edges) of each component spanned by alive edges, nodes with no alive edge skipped."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s] or not any(alive[e] for e, _ in self.adj[s]):
                continue
            seen[s] = True
            nodes = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for e, y in self.adj[x]:
                    if alive[e] and not seen[y]:
                        seen[y] = True
                        nodes.append(y)
                        stack.append(y)
            edges = sorted({e for x in nodes for e, _ in self.adj[x] if alive[e]})
            out.append((sorted(nodes), edges))
        return out


def _pair(fg: _FaceGraph, root: int, alive: list[bool], choice: list[int]) -> None:
    """Assign every alive edge of ``root``'s component so each node gets an even count.

    Requires an even number of alive edges in the component. Edges are
    consumed: ``alive`` is cleared for them.
    """
    adj = fg.adj
    visited: dict[int, bool] = {root: True}
    used = set()
    pending: dict[int, list[int]] = {root: []}
    stack = [(root, -1, 0)]
    while stack:
        x, pe, i = stack[-1]
        if i < len(adj[x]):
            stack[-1] = (x, pe, i + 1)
            e, y = adj[x][i]
            if not alive[e] or e in used:
                continue
            used.add(e)
            if y in visited:
                pending[x].append(e)
            else:
                visited[y] = True
                pending[y] = []
                stack.append((y, e, 0))
            continue
        stack.pop()
        mine = pending.pop(x)
        if pe >= 0:
            parent = stack[-1][0]
            if len(mine) % 2:
                mine.append(pe)
            else:
                pending[parent].append(pe)
        elif len(mine) % 2:
            raise PreconditionError("component has an odd number of edges")
        for e in mine:
            choice[e] = x
            alive[e] = False


def pair_even_component(n_nodes: int, ends: Sequence[tuple[int, int]]) -> list[int]:
    """Pair the edges of a connected multigraph with an even edge count.

    Returns ``choice[e]``: the endpoint receiving edge ``e``. Every node
    receives an even number of edges.
    """
    if len(ends) % 2:
        raise PreconditionError("pair_even_component needs an even edge count")
    fg = _FaceGraph(n_nodes, ends)
    alive = [True] * len(ends)
    choice = [-1] * len(ends)
    if ends:
        _pair(fg, ends[0][0], alive, choice)
        if any(alive):
            raise PreconditionError("pair_even_component needs a connected multigraph")
    return choice


def _claw_center(fg: _FaceGraph, nodes: list[int], n_edges: int) -> Optional[int]:
    """Smallest node c with three edges whose removal leaves only even components.

    Works per component in linear time. For each child subtree hanging off c
    (lowpoint >= disc[c]) we know its internal edge count and the number of
    edges it sends to c; the rest of the component forms one more piece.
    """
    adj = fg.adj
    root = nodes[0]
    disc: dict[int, int] = {root: 0}
    depth: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    below: dict[int, int] = {root: 0}  # edges whose deeper end lies in the subtree
    to_parent: dict[int, int] = {root: 0}  # edges from the subtree to the parent
    pieces: dict[int, list[tuple[int, int]]] = {x: [] for x in nodes}  # (t, m) of separated children
    timer = 1
    path = [root]
    seen_edges = set()
    stack = [(root, -1, 0)]
    while stack:
        x, pe, i = stack[-1]
        if i < len(adj[x]):
            stack[-1] = (x, pe, i + 1)
            e, y = adj[x][i]
            if e == pe or e in seen_edges:
                continue
            seen_edges.add(e)
            if y not in disc:
                disc[y] = low[y] = timer
                timer += 1
                depth[y] = depth[x] + 1
                below[y] = 1
                to_parent[y] = 1
                path.append(y)
                stack.append((y, e, 0))
            else:
                # back edge from x up to ancestor y
                below[x] += 1
                if disc[y] < low[x]:
                    low[x] = disc[y]
                to_parent[path[depth[y] + 1]] += 1
            continue
        stack.pop()
        path.pop()
        if not stack:
            break
        p = stack[-1][0]
        below[p] += below[x]
        if low[x] < low[p]:
            low[p] = low[x]
        if low[x] >= disc[p]:
            t = to_parent[x]
            pieces[p].append((t, below[x] - t))
    best = None
    for c in nodes:
        deg = len(adj[c])
        if deg < 3:
            continue
        cap = 0
        sep_t = sep_m = 0
        for t, m in pieces[c]:
            cap += t if m % 2 == 0 else t - 1
            sep_t += t
            sep_m += m
        if c != root:
            t0 = deg - sep_t
            m0 = n_edges - deg - sep_m
            if t0 > 0:
                cap += t0 if m0 % 2 == 0 else t0 - 1
        if cap >= 3:
            best = c
            break
    return best


def _claw_edges(fg: _FaceGraph, c: int, alive: list[bool], nodes: list[int]) -> list[int]:
    """Three edges at ``c`` whose removal leaves only even components."""
    label: dict[int, int] = {c: -1}
    groups: list[tuple[list[int], int]] = []  # (edges to c, internal edge count)
    for e0, y0 in fg.adj[c]:
        if not alive[e0] or y0 in label:
            continue
        gid = len(groups)
        label[y0] = gid
        stack = [y0]
        internal = set()
        while stack:
            x = stack.pop()
            for e, y in fg.adj[x]:
                if not alive[e] or y == c:
                    continue
                internal.add(e)
                if y not in label:
                    label[y] = gid
                    stack.append(y)
        groups.append(([], len(internal)))
    for e, y in fg.adj[c]:
        if alive[e]:
            groups[label[y]][0].append(e)
    chosen: list[int] = []
    for to_c, m in groups:
        cap = len(to_c) if m % 2 == 0 else len(to_c) - 1
        take = min(cap, 3 - len(chosen))
        chosen.extend(sorted(to_c)[:take])
        if len(chosen) == 3:
            return chosen
    raise AssertionError("claw center without a valid claw")


def solve(inst: AntifactorInstance) -> Optional[Assignment]:
    """An assignment with no face picked exactly once, or ``None`` if none exists."""
    fg = _FaceGraph(inst.n_faces, inst.incidences)
    alive = [True] * inst.n_a
    choice = [-1] * inst.n_a
    for nodes, edges in fg.components(alive):
        if len(edges) % 2:
            c = _claw_center(fg, nodes, len(edges))
            if c is None:
                return None
            for e in _claw_edges(fg, c, alive, nodes):
                choice[e] = c
                alive[e] = False
        for x in nodes:
            if any(alive[e] for e, _ in fg.adj[x]):
                _pair(fg, x, alive, choice)
    return Assignment(tuple(choice))


def component_sizes(inst: AntifactorInstance) -> list[tuple[int, int, int]]:
    """(node count, edge count, max degree) per component of the face multigraph."""
    fg = _FaceGraph(inst.n_faces, inst.incidences)
    out = []
    for nodes, edges in fg.components([True] * inst.n_a):
        out.append((len(nodes), len(edges), max(len(fg.adj[x]) for x in nodes)))
    return out
