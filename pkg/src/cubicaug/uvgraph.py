"""Labels, label sets and the editable closed uv-graphs they are checked on.

A closed uv-graph is an embedded graph with a reference edge ``ref`` running
from pole ``u`` to pole ``v``. Its left face ``L`` is the face containing the
dart of ``ref`` at ``u``; the right face ``R`` contains the dart at ``v``.
A label ``(a, b)`` says how many degree-1 vertices an inner augmentation
leaves towards ``L`` and ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .antifactor import AntifactorInstance, Assignment, build_instance, solve
from .graph import Embedding, RotationBuilder

Label = tuple[int, int]
LABELS: tuple[Label, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))
CHECKS = ("00", "01|10", "11")

Solver = Callable[[AntifactorInstance], Optional[Assignment]]


def label_str(lab: Label) -> str:
    return f"{lab[0]}{lab[1]}"


@dataclass(frozen=True)
class LabelSet:
    labels: frozenset[Label]

    @classmethod
    def of(cls, *names: str) -> LabelSet:
        return cls(frozenset((int(s[0]), int(s[1])) for s in names))

    @classmethod
    def from_checks(cls, ok00: bool, ok0110: bool, ok11: bool) -> LabelSet:
        out = set()
        if ok00:
            out.add((0, 0))
        if ok0110:
            out.update({(0, 1), (1, 0)})
        if ok11:
            out.add((1, 1))
        return cls(frozenset(out))

    @property
    def symmetric(self) -> bool:
        return all((b, a) in self.labels for a, b in self.labels)

    def checks(self) -> tuple[bool, bool, bool]:
        if not self.symmetric:
            raise ValueError(f"{self} is not symmetric")
        return (0, 0) in self.labels, (0, 1) in self.labels, (1, 1) in self.labels

    def __contains__(self, lab: Label) -> bool:
        return lab in self.labels

    def __bool__(self) -> bool:
        return bool(self.labels)

    @property
    def name(self) -> str:
        return _NAMES.get(self.labels) or "{" + ",".join(sorted(label_str(x) for x in self.labels)) + "}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> LabelSet:
        for k, v in _NAMES.items():
            if v == text.strip():
                return cls(k)
        body = text.strip().strip("{}")
        return cls.of(*[s for s in body.split(",") if s])


_NAMES = {
    frozenset(): "{}",
    frozenset({(0, 0)}): "{00}",
    frozenset({(0, 1), (1, 0)}): "{01,10}",
    frozenset({(1, 1)}): "{11}",
    frozenset({(0, 0), (1, 1)}): "{00,11}",
    frozenset({(0, 0), (0, 1), (1, 0)}): "{0*,*0}",
    frozenset({(0, 1), (1, 0), (1, 1)}): "{1*,*1}",
    frozenset(LABELS): "{**}",
}
SYMMETRIC_SETS: tuple[LabelSet, ...] = tuple(LabelSet(k) for k in _NAMES)


@dataclass(frozen=True)
class Splice:
    """Where a spliced gadget sits: its white vertices and one dart in each of its two host faces."""

    whites: tuple[int, ...]
    l_marker: int
    r_marker: int


class UvBuilder(RotationBuilder):
    """Rotation builder with a reference edge and local surgery on uv-graphs."""

    def __init__(self, emb: Optional[Embedding] = None, ref: int = -1):
        super().__init__(emb)
        self.ref = ref

    def copy(self) -> UvBuilder:
        out = UvBuilder(None, self.ref)
        out.edges = list(self.edges)
        out.rot = [list(r) for r in self.rot]
        return out

    @property
    def poles(self) -> tuple[int, int]:
        return self.edges[self.ref]

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def _swap_dart(self, v: int, old: int, new: int) -> None:
        r = self.rot[v]
        r[r.index(old)] = new

    def subdivide(self, e: int) -> int:
        """Split ``e = (u, v)`` by a new vertex ``w``; ``e`` becomes ``u-w`` keeping its dart at ``u``."""
        u, v = self.edges[e]
        w = self.add_vertex()
        f = len(self.edges)
        self.edges.append((w, v))
        self.edges[e] = (u, w)
        self._swap_dart(v, 2 * e + 1, 2 * f + 1)
        self.rot[w] = [2 * e + 1, 2 * f]
        return w

    def splice(self, e: int, gadget: Embedding, gref: int) -> Splice:
        """Replace edge ``e = (u, v)`` by the closed gadget minus its reference edge ``gref``.

        The gadget's reference tail is identified with ``u`` and its head with
        ``v``; at each pole the gadget darts that follow ``gref`` take the place
        of the dart of ``e``.
        """
        yg = gadget.graph
        up, vp = yg.edges[gref]
        ru, rv = gadget.rotation[up], gadget.rotation[vp]
        if len(ru) != 2 or len(rv) != 2:
            raise ValueError("gadget poles must have degree 1 outside the reference edge")
        pu = ru[(ru.index(2 * gref) + 1) % 2]
        pv = rv[(rv.index(2 * gref + 1) + 1) % 2]
        u, v = self.edges[e]
        if u == v:
            raise ValueError("splice would create a loop")
        vmap: dict[int, int] = {up: u, vp: v}
        for x in range(yg.n):
            if x not in vmap:
                vmap[x] = self.add_vertex()
        dmap: dict[int, int] = {}
        for f, (a, b) in enumerate(yg.edges):
            if f == gref:
                continue
            if f == pu >> 1:
                dmap[pu] = 2 * e
                dmap[pu ^ 1] = 2 * e + 1
                self.edges[e] = (u, vmap[yg.head(pu)])
            else:
                k = len(self.edges)
                self.edges.append((vmap[a], vmap[b]))
                dmap[2 * f] = 2 * k
                dmap[2 * f + 1] = 2 * k + 1
        for x in range(yg.n):
            if x not in (up, vp):
                self.rot[vmap[x]] = [dmap[d] for d in gadget.rotation[x]]
        if pv != pu ^ 1:
            self._swap_dart(v, 2 * e + 1, dmap[pv])
        whites = tuple(vmap[x] for x in range(yg.n) if x not in (up, vp) and yg.degrees[x] == 2)
        return Splice(whites, dmap[pv], dmap[pu])

    def diamond(self, w: int) -> tuple[int, int, int, int]:
        """Degree-3 replacement: ``w`` becomes four degree-3 vertices ``(w, q, s, t)``."""
        if len(self.rot[w]) != 2:
            raise ValueError(f"vertex {w} does not have degree 2")
        da, db = self.rot[w]
        q, s, t = self.add_vertices(3)
        eb = db >> 1
        a, b = self.edges[eb]
        self.edges[eb] = (q, b) if db & 1 == 0 else (a, q)
        ps = self.add_edge(w, s)
        pt = self.add_edge(w, t)
        qs = self.add_edge(q, s)
        qt = self.add_edge(q, t)
        st = self.add_edge(s, t)
        self.rot[w] = [da, 2 * ps, 2 * pt]
        self.rot[q] = [2 * qt, 2 * qs, db]
        self.rot[s] = [2 * qs + 1, 2 * st, 2 * ps + 1]
        self.rot[t] = [2 * pt + 1, 2 * st + 1, 2 * qt + 1]
        return w, q, s, t

    def close(self, check: str, gadget11: Optional[tuple[Embedding, int]] = None) -> Optional[int]:
        """Apply one label check's closure to ``ref``, then saturate degree-2 poles.

        ``"00"`` keeps ``ref`` as an edge, ``"01|10"`` subdivides it (the new
        vertex is returned), ``"11"`` splices the given {11} gadget into it.
        """
        u, v = self.poles
        w = None
        if check == "01|10":
            w = self.subdivide(self.ref)
        elif check == "11":
            if gadget11 is None:
                raise ValueError("the 11-check needs the {11} gadget")
            self.splice(self.ref, *gadget11)
        elif check != "00":
            raise ValueError(f"unknown check {check!r}")
        for p in (u, v):
            if self.degree(p) == 2:
                self.diamond(p)
        return w


def run_check(b: UvBuilder, solver: Solver = solve) -> tuple[Embedding, AntifactorInstance, Optional[Assignment]]:
    emb = b.build()
    inst = build_instance(emb)
    return emb, inst, solver(inst)


def gadget_counts(emb: Embedding, inst: AntifactorInstance, a: Assignment, sp: Splice) -> tuple[int, int]:
    """Whites of a spliced gadget assigned to its left and right host faces."""
    fl, fr = emb.face_of[sp.l_marker], emb.face_of[sp.r_marker]
    where = dict(zip(inst.vertices, a.faces))
    return sum(where[x] == fl for x in sp.whites), sum(where[x] == fr for x in sp.whites)
