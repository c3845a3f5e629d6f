"""Plain-text formats for graphs, embeddings and result bundles.

Graph: a header line ``n m`` followed by ``m`` lines ``u v``.
Embedding: one line ``v: d1 d2 ...`` per vertex (clockwise darts, dart =
``2*edge + side``) and a line ``outer: f``.
Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

from .graph import Embedding, Multigraph


class FormatError(ValueError):
    """Malformed input text."""


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise FormatError(f"expected integers, got {line!r}") from exc
    if count is not None and len(vals) != count:
        raise FormatError(f"expected {count} integers, got {line!r}")
    return vals


def parse_graph(text: str) -> Multigraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("missing 'n m' header")
    n, m = _ints(lines[0], 2)
    if n < 0 or m < 0:
        raise FormatError("negative size in header")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = [tuple(_ints(line, 2)) for line in body]
    try:
        return Multigraph(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_graph(g: Multigraph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"


def parse_embedding(text: str, g: Multigraph) -> Embedding:
    rot: dict[int, tuple[int, ...]] = {}
    outer = 0
    for line in _lines(text):
        key, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"expected 'v: darts' or 'outer: f', got {line!r}")
        key = key.strip()
        if key == "outer":
            outer = _ints(rest, 1)[0]
            continue
        try:
            v = int(key)
        except ValueError as exc:
            raise FormatError(f"bad vertex label {key!r}") from exc
        if v in rot:
            raise FormatError(f"vertex {v} listed twice")
        rot[v] = tuple(_ints(rest))
    try:
        return Embedding(g, tuple(rot.get(v, ()) for v in range(g.n)), outer)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_embedding(emb: Embedding) -> str:
    rows = []
    for v, r in enumerate(emb.rotation):
        rows.append(f"{v}: " + " ".join(str(d) for d in r) if r else f"{v}:")
    rows.append(f"outer: {emb.outer}")
    return "\n".join(rows) + "\n"


def split_sections(text: str) -> dict[str, str]:
    """Split a bundle with ``[NAME]`` header lines into named sections."""
    sections: dict[str, list[str]] = {}
    current = None
    for raw in text.splitlines():
        s = raw.strip()
        if s.startswith("[") and s.endswith("]") and len(s) > 2:
            current = s[1:-1].strip().upper()
            sections[current] = []
        elif current is not None:
            sections[current].append(raw)
    return {k: "\n".join(v) + "\n" for k, v in sections.items()}
