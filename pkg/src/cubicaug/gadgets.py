"""Constant-size uv-gadgets, one per non-empty symmetric label set.

Each gadget is drawn with straight lines from explicit coordinates, so its
rotation system is read off by sorting neighbours by angle. The reference
edge is then added between the two pendant poles. Every gadget is certified
when first requested: its label set is computed twice, once by enumerating
face assignments of its white vertices and once through the three label
checks with the brute-force solver, and both must match the declared set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .antifactor import brute_force_solve
from .graph import Embedding, RotationBuilder
from .io import format_embedding, format_graph
from .uvgraph import CHECKS, LabelSet, UvBuilder, run_check

Point = tuple[float, float]

# name -> (coordinates, edges); the poles are always "u" and "v"
_LAYOUTS: dict[str, tuple[dict[str, Point], list[tuple[str, str]]]] = {
    "{00}": ({"u": (0, 0), "v": (1, 0)}, [("u", "v")]),
    "{01,10}": ({"u": (0, 0), "x": (1, 0), "v": (2, 0)}, [("u", "x"), ("x", "v")]),
    "{**}": (
        {"u": (0, 0), "x": (1, 0), "y": (2, 0), "z": (3, 0), "v": (4, 0)},
        [("u", "x"), ("x", "y"), ("y", "z"), ("z", "v")],
    ),
    "{00,11}": (
        {"u": (-2, 0), "a": (-1, 0), "l": (0, 1), "r": (0, -1), "b": (1, 0), "v": (2, 0)},
        [("u", "a"), ("a", "l"), ("l", "b"), ("a", "r"), ("r", "b"), ("b", "v")],
    ),
    "{11}": (
        {
            "u": (-2, 0), "a": (-1, 0), "p1": (0, 1), "l": (1, 1), "p2": (2, 1), "p3": (3, 1),
            "q1": (0, -1), "q2": (2, -1), "r": (2.5, -1), "q3": (3, -1), "b": (4, 0), "v": (5, 0),
        },
        [
            ("u", "a"), ("a", "p1"), ("p1", "l"), ("l", "p2"), ("p2", "p3"), ("p3", "b"),
            ("a", "q1"), ("q1", "q2"), ("q2", "r"), ("r", "q3"), ("q3", "b"), ("b", "v"),
            ("p1", "q1"), ("p2", "q2"), ("p3", "q3"),
        ],
    ),
    "{0*,*0}": (
        {
            "u": (-2, 0), "a": (-1, 0), "p": (0, 1), "l": (1, 1), "b": (2, 0),
            "c": (0, -1), "r": (1, -1), "x": (0, 0), "v": (3, 0),
        },
        [
            ("u", "a"), ("a", "p"), ("p", "l"), ("l", "b"), ("a", "c"), ("c", "r"),
            ("r", "b"), ("b", "v"), ("c", "x"), ("x", "p"),
        ],
    ),
    "{1*,*1}": (
        {
            "u": (-3, 0), "a": (-2, 0), "p0": (-1, 1), "p1": (0, 1), "l": (1, 2), "p2": (2, 1),
            "b": (3, 0), "q0": (-1, -1), "q1": (0, -1), "r": (1, -2), "q2": (2, -1),
            "x": (1, 0.5), "z": (1, -0.5), "y": (-1, 0), "v": (4, 0),
        },
        [
            ("u", "a"), ("a", "p0"), ("p0", "p1"), ("p1", "l"), ("l", "p2"), ("p2", "b"),
            ("a", "q0"), ("q0", "q1"), ("q1", "r"), ("r", "q2"), ("q2", "b"), ("b", "v"),
            ("p1", "x"), ("x", "p2"), ("q1", "z"), ("z", "q2"), ("p0", "y"), ("y", "q0"),
        ],
    ),
}


@dataclass(frozen=True)
class LabelGadget:
    """Closed gadget: ``embedding`` includes the reference edge ``ref`` from ``u`` to ``v``."""

    declared: LabelSet
    embedding: Embedding
    ref: int
    names: tuple[str, ...]

    @property
    def u(self) -> int:
        return self.embedding.graph.edges[self.ref][0]

    @property
    def v(self) -> int:
        return self.embedding.graph.edges[self.ref][1]

    @property
    def whites(self) -> tuple[int, ...]:
        g = self.embedding.graph
        return tuple(x for x in range(g.n) if x not in (self.u, self.v) and g.degrees[x] == 2)

    @property
    def splice_args(self) -> tuple[Embedding, int]:
        return self.embedding, self.ref


def _draw(pos: dict[str, Point], edges: list[tuple[str, str]]) -> tuple[Embedding, int, tuple[str, ...]]:
    names = tuple(pos)
    idx = {s: i for i, s in enumerate(names)}
    b = RotationBuilder()
    b.add_vertices(len(names))
    for s, t in edges:
        b.add_edge(idx[s], idx[t])
    for x, name in enumerate(names):
        px, py = pos[name]

        def angle(d: int) -> float:
            e = b.edges[d >> 1]
            qx, qy = pos[names[e[1 - (d & 1)]]]
            return math.atan2(qy - py, qx - px)

        b.rot[x] = sorted(b.rot[x], key=angle, reverse=True)
    ref = b.add_edge(idx["u"], idx["v"])
    emb = b.build(outer_dart=2 * ref)
    emb.assert_planar()
    return emb, ref, names


def direct_label_set(g: LabelGadget) -> LabelSet:
    """Enumerate face choices of the white vertices; inner faces must not receive exactly one."""
    emb = g.embedding
    gr = emb.graph
    fl, fr = emb.face_of[2 * g.ref], emb.face_of[2 * g.ref + 1]
    options = []
    for x in g.whites:
        d1, d2 = gr.darts_at[x]
        options.append((emb.face_of[d1], emb.face_of[d2]))
    found = set()
    for pick in itertools.product(*options):
        cnt: dict[int, int] = {}
        for f in pick:
            cnt[f] = cnt.get(f, 0) + 1
        if any(c == 1 for f, c in cnt.items() if f not in (fl, fr)):
            continue
        sides = []
        for f in (fl, fr):
            c = cnt.get(f, 0)
            sides.append((c,) if c < 2 else (0, 1))
        found.update(itertools.product(*sides))
    return LabelSet(frozenset(found))


def check_results(g: LabelGadget, solver=brute_force_solve) -> tuple[bool, bool, bool]:
    """Outcome of the 00, 01|10 and 11 checks on the gadget itself."""
    out = []
    for check in CHECKS:
        b = UvBuilder(g.embedding, g.ref)
        b.close(check, None if check != "11" else _raw("{11}").splice_args)
        out.append(run_check(b, solver)[2] is not None)
    return out[0], out[1], out[2]


def checked_label_set(g: LabelGadget) -> LabelSet:
    return LabelSet.from_checks(*check_results(g))


@lru_cache(maxsize=None)
def _raw(name: str) -> LabelGadget:
    pos, edges = _LAYOUTS[name]
    emb, ref, names = _draw(pos, edges)
    return LabelGadget(LabelSet.parse(name), emb, ref, names)


class CertificationError(RuntimeError):
    pass


def certify(g: LabelGadget) -> None:
    direct = direct_label_set(g)
    checked = checked_label_set(g)
    if direct != g.declared or checked != g.declared:
        raise CertificationError(f"gadget {g.declared}: enumeration gives {direct}, checks give {checked}")
    gr = g.embedding.graph
    for x in range(gr.n):
        want = 2 if x in (g.u, g.v) else None
        d = gr.degrees[x]
        if (want is not None and d != want) or (want is None and d not in (2, 3)):
            raise CertificationError(f"gadget {g.declared}: bad degree {d} at vertex {x}")


@lru_cache(maxsize=None)
def gadget_for(ls: LabelSet) -> LabelGadget:
    if not ls:
        raise ValueError("no gadget realises the empty label set")
    if not ls.symmetric:
        raise ValueError(f"label set {ls} is not symmetric")
    g = _raw(ls.name)
    certify(g)
    return g


def format_gadget(g: LabelGadget) -> str:
    head = f"# gadget {g.declared} u={g.u} v={g.v} ref={g.ref}\n"
    head += "# names " + " ".join(f"{i}={s}" for i, s in enumerate(g.names)) + "\n"
    return head + format_graph(g.embedding.graph) + format_embedding(g.embedding)
