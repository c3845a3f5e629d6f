"""Augmentation of a plane 2-connected subcubic multigraph with its embedding kept."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .antifactor import build_instance, solve
from .graph import Embedding, Multigraph, RotationBuilder, is_biconnected
from .outcomes import Infeasible, PreconditionError


@dataclass(frozen=True)
class K4Chain:
    """K4 on corners 0..3 whose edge 0-1 is subdivided ``k`` times.

    The subdivision vertices ``attach`` run from corner 0 to corner 1 and all
    lie on face ``embedding.outer``, which also serves as the face that faces
    the host.
    """

    k: int
    embedding: Embedding
    attach: tuple[int, ...]

    @property
    def graph(self) -> Multigraph:
        return self.embedding.graph


@lru_cache(maxsize=256)
def k4_chain(k: int) -> K4Chain:
    if k < 0:
        raise ValueError("k must be non-negative")
    b = RotationBuilder()
    a0, a1, a2, a3 = b.add_vertices(4)
    path = [a0] + b.add_vertices(k) + [a1]
    # corners 0,1,2 on the outer triangle, 3 in the middle
    first = b.add_edge(path[0], path[1])
    for x, y in zip(path[1:-1], path[2:]):
        b.add_edge(x, y)
    last_dart = 2 * (len(b.edges) - 1) + 1
    e12 = b.add_edge(a1, a2)
    e20 = b.add_edge(a2, a0)
    e03 = b.add_edge(a0, a3)
    e13 = b.add_edge(a1, a3)
    e23 = b.add_edge(a2, a3)
    b.rot[a0] = [2 * first, 2 * e03, 2 * e20 + 1]
    b.rot[a1] = [last_dart, 2 * e12, 2 * e13]
    b.rot[a2] = [2 * e20, 2 * e23, 2 * e12 + 1]
    b.rot[a3] = [2 * e03 + 1, 2 * e13 + 1, 2 * e23 + 1]
    emb = b.build(outer_dart=2 * e20)
    emb.assert_planar()
    attach = tuple(path[1:-1])
    face = emb.faces[emb.outer]
    for s in attach:
        assert any(emb.graph.tail(d) == s for d in face)
    return K4Chain(k, emb, attach)


def _corner_after(emb: Embedding, face: int) -> dict[int, int]:
    """For each vertex visited once by ``face``: the dart after which a new dart lands in that face."""
    out: dict[int, int] = {}
    seen: set[int] = set()
    g = emb.graph
    for d in emb.faces[face]:
        # d leaves v; the face corner at v lies between pred(d) and d
        v = g.tail(d)
        if v in seen:
            out.pop(v, None)
        else:
            out[v] = emb.pred[d]
        seen.add(v)
    return out


def walk_order(emb: Embedding, face: int, vertices: Sequence[int]) -> list[int]:
    """``vertices`` sorted by first appearance along the facial walk of ``face``."""
    pos: dict[int, int] = {}
    for i, d in enumerate(emb.faces[face]):
        pos.setdefault(emb.graph.tail(d), i)
    missing = [v for v in vertices if v not in pos]
    if missing:
        raise PreconditionError(f"vertices {missing} are not on face {face}")
    return sorted(vertices, key=pos.__getitem__)


@dataclass(frozen=True)
class GadgetOccurrence:
    face: int
    k: int
    matching: tuple[tuple[int, int], ...]  # (host vertex, chain vertex) in H ids


def _insert_chains(emb: Embedding, plan: Sequence[tuple[int, Sequence[int]]], reverse: bool = True):
    """Insert one K4 chain per ``(face, attach)`` entry. Faces refer to ``emb``."""
    b = RotationBuilder(emb)
    occurrences = []
    for face, attach in plan:
        corners = _corner_after(emb, face)
        for v in attach:
            if v not in corners:
                raise PreconditionError(f"vertex {v} does not appear exactly once on face {face}")
        ordered = walk_order(emb, face, attach)
        chain = k4_chain(len(ordered))
        voff, _ = b.add_embedding(chain.embedding)
        ch_corners = _corner_after(chain.embedding, chain.embedding.outer)
        ch_order = walk_order(chain.embedding, chain.embedding.outer, chain.attach)
        if reverse:
            ch_order = ch_order[::-1]
        pairs = []
        eoff_darts = 2 * (len(b.edges) - chain.graph.m)
        for x, s in zip(ordered, ch_order):
            b.add_edge(x, s + voff, after_u=corners[x], after_v=ch_corners[s] + eoff_darts)
            pairs.append((x, s + voff))
        occurrences.append(GadgetOccurrence(face, len(ordered), tuple(pairs)))
    return b, occurrences


def insert_gadget_into_face(emb: Embedding, face: int, attach: Sequence[int], reverse: bool = True) -> Embedding:
    """Embed a K4 chain inside ``face`` and match it to ``attach`` without crossings.

    ``reverse=False`` produces the crossing matching and exists for negative tests.
    """
    b, _ = _insert_chains(emb, [(face, attach)], reverse)
    out = b.build(outer_dart=emb.faces[emb.outer][0] if emb.faces else None)
    return out


@dataclass(frozen=True)
class AugmentationResult:
    """A 3-augmentation ``graph`` with ``embedding``.

    Input vertex ``i`` is ``vertex_map[i]`` in ``graph`` and input edge ``j``
    is ``edge_map[j]``.
    """

    graph: Multigraph
    embedding: Embedding
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    gadgets: tuple[GadgetOccurrence, ...] = ()


def check_fixed_input(g: Multigraph) -> None:
    if g.max_degree > 3:
        raise PreconditionError("maximum degree exceeds 3")
    if not is_biconnected(g):
        raise PreconditionError("graph is not 2-connected")


def augment_fixed(g: Multigraph, emb: Embedding) -> Union[AugmentationResult, Infeasible]:
    """3-augmentation whose embedding restricts to ``emb``, or ``Infeasible``."""
    if emb.graph != g:
        raise PreconditionError("embedding belongs to another graph")
    check_fixed_input(g)
    inst = build_instance(emb)
    a = solve(inst)
    if a is None:
        return Infeasible("structural", "no valid face assignment for this embedding")
    by_face: dict[int, list[int]] = {}
    for v, f in zip(inst.vertices, a.faces):
        by_face.setdefault(f, []).append(v)
    plan = sorted(by_face.items())
    b, occ = _insert_chains(emb, plan)
    h = b.build(outer_dart=emb.faces[emb.outer][0])
    h.assert_planar()
    return AugmentationResult(h.graph, h, tuple(range(g.n)), tuple(range(g.m)), tuple(occ))
