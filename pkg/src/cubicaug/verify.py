"""Independent checks of a claimed 3-augmentation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .fixed import AugmentationResult
from .graph import Embedding, Multigraph, bridges, planarity_embed


@dataclass
class VerificationReport:
    is_supergraph: bool
    is_3_regular: bool
    is_bridgeless: bool
    is_planar: bool
    embedding_restriction_ok: Optional[bool] = None
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        flags = [self.is_supergraph, self.is_3_regular, self.is_bridgeless, self.is_planar]
        if self.embedding_restriction_ok is not None:
            flags.append(self.embedding_restriction_ok)
        return all(flags)

    def lines(self) -> list[str]:
        rows = [
            f"supergraph {self.is_supergraph}",
            f"3-regular {self.is_3_regular}",
            f"bridgeless {self.is_bridgeless}",
            f"planar {self.is_planar}",
        ]
        if self.embedding_restriction_ok is not None:
            rows.append(f"restriction {self.embedding_restriction_ok}")
        return rows + [f"detail {d}" for d in self.details]


def _supergraph(g: Multigraph, h: Multigraph, vmap, emap, details: list[str]) -> bool:
    if len(vmap) != g.n or len(emap) != g.m:
        details.append("injection tables have the wrong length")
        return False
    if len(set(vmap)) != g.n or len(set(emap)) != g.m:
        details.append("injection is not one-to-one")
        return False
    if any(not (0 <= x < h.n) for x in vmap) or any(not (0 <= e < h.m) for e in emap):
        details.append("injection points outside H")
        return False
    for j, (u, v) in enumerate(g.edges):
        a, b = h.edges[emap[j]]
        if {a, b} != {vmap[u], vmap[v]} or (a, b) not in ((vmap[u], vmap[v]), (vmap[v], vmap[u])):
            details.append(f"edge {j} is not mapped onto an edge with the same ends")
            return False
    return True


def _restriction_ok(g: Multigraph, res: AugmentationResult, emb: Embedding) -> bool:
    back = {e: j for j, e in enumerate(res.edge_map)}
    hg = res.graph
    for v in range(g.n):
        hv = res.vertex_map[v]
        seq = []
        for d in res.embedding.rotation[hv]:
            j = back.get(d >> 1)
            if j is None:
                continue
            seq.append(g.dart_from(j, v))
        want = list(emb.rotation[v])
        if len(seq) != len(want):
            return False
        if seq:
            i = seq.index(min(seq))
            seq = seq[i:] + seq[:i]
        if seq != want:
            return False
    return hg is res.embedding.graph or hg == res.embedding.graph


def verify(g: Multigraph, res: AugmentationResult, emb: Optional[Embedding] = None) -> VerificationReport:
    details: list[str] = []
    h = res.graph
    sup = _supergraph(g, h, res.vertex_map, res.edge_map, details)
    reg = all(d == 3 for d in h.degrees)
    if not reg:
        details.append("some vertex of H does not have degree 3")
    br = bridges(h)
    if br:
        details.append(f"H has {len(br)} bridge(s)")
    if res.embedding is not None and res.embedding.graph == h:
        planar = res.embedding.is_planar() and res.embedding.euler_global()
    else:
        planar = planarity_embed(h) is not None
    if not planar:
        details.append("H embedding is not planar")
    restr = None
    if emb is not None:
        restr = sup and _restriction_ok(g, res, emb)
        if not restr:
            details.append("H embedding does not restrict to the input embedding")
    return VerificationReport(sup, reg, not br, planar, restr, details)
