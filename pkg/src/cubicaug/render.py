"""DOT and SVG output. Added vertices and edges are drawn in a second style."""

from __future__ import annotations

from typing import Optional

import networkx as nx

from .fixed import AugmentationResult
from .graph import Multigraph


def _parts(g: Multigraph, res: Optional[AugmentationResult]):
    if res is None:
        return g, set(range(g.n)), set(range(g.m))
    return res.graph, set(res.vertex_map), set(res.edge_map)


def to_dot(g: Multigraph, res: Optional[AugmentationResult] = None) -> str:
    h, old_v, old_e = _parts(g, res)
    rows = ["graph G {", "  node [shape=circle, fontsize=10];"]
    for v in range(h.n):
        style = "" if v in old_v else ' [style=filled, fillcolor="#f4c7c3"]'
        rows.append(f"  {v}{style};")
    for e, (a, b) in enumerate(h.edges):
        style = "" if e in old_e else ' [style=dashed, color="#c0392b"]'
        rows.append(f"  {a} -- {b}{style};")
    rows.append("}")
    return "\n".join(rows) + "\n"


def to_svg(g: Multigraph, res: Optional[AugmentationResult] = None, size: int = 600) -> str:
    h, old_v, old_e = _parts(g, res)
    simple = nx.Graph()
    simple.add_nodes_from(range(h.n))
    simple.add_edges_from(h.edges)
    pos = nx.planar_layout(simple) if h.n else {}
    if pos:
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        x0, y0 = min(xs), min(ys)
        span = max(max(xs) - x0, max(ys) - y0) or 1.0
    pad = 30

    def at(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return pad + (x - x0) / span * (size - 2 * pad), pad + (y - y0) / span * (size - 2 * pad)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    seen: dict[tuple[int, int], int] = {}
    for e, (a, b) in enumerate(h.edges):
        key = (min(a, b), max(a, b))
        k = seen.get(key, 0)
        seen[key] = k + 1
        (ax, ay), (bx, by) = at(a), at(b)
        style = 'stroke="#222"' if e in old_e else 'stroke="#c0392b" stroke-dasharray="5,3"'
        if k == 0:
            out.append(f'<line x1="{ax:.1f}" y1="{ay:.1f}" x2="{bx:.1f}" y2="{by:.1f}" {style}/>')
        else:
            # parallel copies bow out to alternating sides
            off = 18 * ((k + 1) // 2) * (1 if k % 2 else -1)
            mx, my = (ax + bx) / 2, (ay + by) / 2
            dx, dy = by - ay, ax - bx
            norm = (dx * dx + dy * dy) ** 0.5 or 1.0
            cx, cy = mx + off * dx / norm, my + off * dy / norm
            out.append(f'<path d="M {ax:.1f} {ay:.1f} Q {cx:.1f} {cy:.1f} {bx:.1f} {by:.1f}" fill="none" {style}/>')
    for v in range(h.n):
        x, y = at(v)
        fill = "#ffffff" if v in old_v else "#f4c7c3"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="9" fill="{fill}" stroke="#222"/>')
        out.append(f'<text x="{x:.1f}" y="{y + 3:.1f}" font-size="9" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
