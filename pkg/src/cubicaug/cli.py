"""Command-line front end.

Exit codes: 0 feasible / verified, 1 infeasible / rejected, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import render as render_mod
from .assemble import MODES, augment, augment_embedded, oracle_decide, verify
from .fixed import AugmentationResult
from .generate import random_feasible_subcubic_planar, random_subcubic_planar
from .graph import Multigraph, blocks, induced_on_edges, planarity_embed
from .io import FormatError, format_embedding, format_graph, parse_embedding, parse_graph, split_sections
from .outcomes import Infeasible, PreconditionError

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    mode: str = "any"
    embedding: Optional[Path] = None
    bundle: Optional[Path] = None
    n: int = 0
    seed: Optional[int] = None
    feasible: bool = False
    fmt: str = "dot"


class InputError(Exception):
    pass


def _read(path: Optional[Path]) -> str:
    if path is None:
        raise InputError("missing input path")
    try:
        return path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        cfg.output.write_text(text)


def format_bundle(res: AugmentationResult) -> str:
    inj = "vertices: " + " ".join(map(str, res.vertex_map)) + "\n"
    inj += "edges: " + " ".join(map(str, res.edge_map)) + "\n"
    return (
        "[GRAPH]\n" + format_graph(res.graph)
        + "[EMBEDDING]\n" + format_embedding(res.embedding)
        + "[INJECTION]\n" + inj
    )


def parse_bundle(text: str) -> AugmentationResult:
    sec = split_sections(text)
    for name in ("GRAPH", "EMBEDDING", "INJECTION"):
        if name not in sec:
            raise FormatError(f"bundle lacks a [{name}] section")
    h = parse_graph(sec["GRAPH"])
    emb = parse_embedding(sec["EMBEDDING"], h)
    maps: dict[str, tuple[int, ...]] = {}
    for line in sec["INJECTION"].splitlines():
        key, sep, rest = line.partition(":")
        if not sep:
            continue
        try:
            maps[key.strip()] = tuple(int(x) for x in rest.split())
        except ValueError as exc:
            raise FormatError(f"bad injection line {line!r}") from exc
    if "vertices" not in maps or "edges" not in maps:
        raise FormatError("injection needs 'vertices:' and 'edges:' lines")
    return AugmentationResult(h, emb, maps["vertices"], maps["edges"])


def _load_graph(cfg: RunConfig) -> Multigraph:
    return parse_graph(_read(cfg.input))


def cmd_solve(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.embedding is not None:
        emb = parse_embedding(_read(cfg.embedding), g)
        res = augment_embedded(g, emb)
    else:
        res = augment(g, cfg.mode)
    if isinstance(res, Infeasible):
        _emit(cfg, f"INFEASIBLE {res.reason}\n")
        if res.detail:
            print(f"# {res.detail}", file=sys.stderr)
        return EXIT_NO
    _emit(cfg, "FEASIBLE\n" + format_bundle(res))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    text = _read(cfg.bundle)
    if text.lstrip().startswith("FEASIBLE"):
        text = text.lstrip()[len("FEASIBLE"):]
    res = parse_bundle(text)
    emb = parse_embedding(_read(cfg.embedding), g) if cfg.embedding is not None else None
    rep = verify(g, res, emb)
    _emit(cfg, "\n".join(rep.lines() + ["OK" if rep.ok else "FAIL"]) + "\n")
    return EXIT_OK if rep.ok else EXIT_NO


def cmd_oracle(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if g.max_degree > 3:
        verdict, why = False, "degree"
    elif planarity_embed(g) is None:
        verdict, why = False, "nonplanar"
    else:
        verdict, why = True, ""
        for b in blocks(g).blocks:
            if len(b) >= 2 and not oracle_decide(induced_on_edges(g, b)[0]):
                verdict, why = False, "structural"
                break
    _emit(cfg, "FEASIBLE\n" if verdict else f"INFEASIBLE {why}\n")
    return EXIT_OK if verdict else EXIT_NO


def cmd_generate(cfg: RunConfig) -> int:
    if cfg.seed is None:
        raise InputError("generate needs --seed")
    try:
        if cfg.feasible:
            g = random_feasible_subcubic_planar(cfg.n, cfg.seed)
        else:
            g = random_subcubic_planar(cfg.n, cfg.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(cfg, f"# generated n={cfg.n} seed={cfg.seed}{' feasible' if cfg.feasible else ''}\n" + format_graph(g))
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    res = None
    if cfg.bundle is not None:
        text = _read(cfg.bundle).lstrip()
        if text.startswith("FEASIBLE"):
            text = text[len("FEASIBLE"):]
        res = parse_bundle(text)
    if cfg.fmt == "dot":
        out = render_mod.to_dot(g, res)
    else:
        out = render_mod.to_svg(g, res)
    _emit(cfg, out)
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "generate": cmd_generate,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicaug", description="Bridgeless cubic planar supergraphs of subcubic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="find a 3-augmentation or report why none exists")
    s.add_argument("input", type=Path)
    s.add_argument("--mode", choices=MODES, default="any")
    s.add_argument("--embedding", type=Path, help="keep this rotation system fixed")
    s.add_argument("-o", "--output", type=Path)

    v = sub.add_parser("verify", help="check a solve bundle against its input graph")
    v.add_argument("input", type=Path)
    v.add_argument("bundle", type=Path)
    v.add_argument("--embedding", type=Path, help="also require the result to extend this embedding")
    v.add_argument("-o", "--output", type=Path)

    o = sub.add_parser("oracle", help="exhaustive decision for small graphs")
    o.add_argument("input", type=Path)
    o.add_argument("-o", "--output", type=Path)

    gen = sub.add_parser("generate", help="random 2-connected subcubic planar graph")
    gen.add_argument("n", type=int)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--feasible", action="store_true", help="only graphs known to have a 3-augmentation (even n)")
    gen.add_argument("-o", "--output", type=Path)

    r = sub.add_parser("render", help="DOT or SVG drawing of a graph and optionally its augmentation")
    r.add_argument("input", type=Path)
    r.add_argument("--bundle", type=Path)
    r.add_argument("--format", dest="fmt", choices=("dot", "svg"), default="dot")
    r.add_argument("-o", "--output", type=Path)
    return p


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[cfg.command](cfg)
    except (InputError, FormatError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
