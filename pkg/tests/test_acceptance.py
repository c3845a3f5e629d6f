"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import math
import os
import random
import statistics
import subprocess
import sys
import time

import pytest

from conftest import disjoint, k4, k4_two_opposite_subdivided, k23
from cubicaug.antifactor import (
    AntifactorInstance,
    brute_force_solve,
    build_instance,
    is_valid,
    pair_even_component,
    solve,
)
from cubicaug.assemble import augment, oracle_decide, rotation_systems
from cubicaug.catalog import biconnected_subcubic, face_multigraphs
from cubicaug.fixed import augment_fixed
from cubicaug.gadgets import check_results, direct_label_set, gadget_for
from cubicaug.generate import random_feasible_subcubic_planar, random_subcubic_planar
from cubicaug.graph import Multigraph, blocks, induced_on_edges, planarity_embed
from cubicaug.labels import variable_augment
from cubicaug.outcomes import Infeasible
from cubicaug.uvgraph import SYMMETRIC_SETS, LabelSet
from cubicaug.verify import verify

# pinned budgets and thresholds
KNOWN_BUDGET_S = 1.0
ANTIFACTOR_BUDGET_S = 60.0
ANTIFACTOR_RANDOM = 10_000
ANTIFACTOR_MAX_EDGES = 12
LAW_SAMPLES = 1_000
GADGET_BUDGET_S = 10.0
FIXED_MAX_EDGES = 10
VARIABLE_MAX_VERTICES = 8
VARIABLE_RANDOM = 500
VARIABLE_RANDOM_MAX_N = 14
VARIABLE_BUDGET_S = 600.0
DECOMP_SAMPLES = 500
WITNESS_SAMPLES = 1_000
WITNESS_MAX_N = 500
SCALING_SIZES = (1024, 2048, 4096, 8192, 16384)
SCALING_REPEATS = 3
SCALING_MAX_SLOPE = 2.5
SCALING_BUDGET_S = 1800.0


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def test_criterion_01_known_instances(report):
    t0 = time.perf_counter()
    r_k23 = augment(k23())
    r_k4 = augment(k4())
    r_sub = augment(k4_two_opposite_subdivided())
    dt = time.perf_counter() - t0
    ok = (
        isinstance(r_k23, Infeasible)
        and not isinstance(r_k4, Infeasible)
        and r_k4.graph == k4()
        and isinstance(r_sub, Infeasible)
        and oracle_decide(k4_two_opposite_subdivided()) is False
        and dt < KNOWN_BUDGET_S
    )
    report(1, ok, f"K23 infeasible, K4 -> K4, subdivided K4 infeasible in {dt:.3f}s")


def _random_face_multigraph(rng: random.Random) -> AntifactorInstance:
    k = rng.randint(2, 10)
    ends = []
    for _ in range(rng.randint(1, ANTIFACTOR_MAX_EDGES)):
        a, b = rng.sample(range(k), 2)
        ends.append((a, b))
    return AntifactorInstance(k, tuple(ends))


def test_criterion_02_antifactor_equivalence(report):
    t0 = time.perf_counter()
    exhaustive = face_multigraphs(6)
    bad = 0
    for g in exhaustive:
        inst = AntifactorInstance(g.n, g.edges)
        if (solve(inst) is None) != (brute_force_solve(inst) is None):
            bad += 1
    rng = random.Random(0xA17)
    for _ in range(ANTIFACTOR_RANDOM):
        inst = _random_face_multigraph(rng)
        a = solve(inst)
        if (a is None) != (brute_force_solve(inst) is None) or (a is not None and not is_valid(inst, a)):
            bad += 1
    dt = time.perf_counter() - t0
    report(
        2,
        bad == 0 and dt < ANTIFACTOR_BUDGET_S,
        f"{len(exhaustive)} exhaustive + {ANTIFACTOR_RANDOM} random, {bad} disagreements, {dt:.1f}s",
    )


def _random_connected(rng: random.Random, m: int) -> list[tuple[int, int]]:
    n = rng.randint(2, m + 1)
    ends = [(rng.randrange(i), i) for i in range(1, n)]
    while len(ends) < m:
        a, b = rng.sample(range(n), 2)
        ends.append((a, b))
    return ends[:m] if len(ends) > m else ends


def test_criterion_03_structural_laws(report):
    rng = random.Random(0x1A3)
    violations = 0
    for _ in range(LAW_SAMPLES):
        m = 2 * rng.randint(1, 15)
        ends = _random_connected(rng, m)
        if len(ends) != m:
            continue
        n = 1 + max(max(e) for e in ends)
        choice = pair_even_component(n, ends)
        counts = [0] * n
        for (a, b), c in zip(ends, choice):
            counts[c] += 1
            violations += c not in (a, b)
        violations += any(x == 1 for x in counts)
    for k in range(1, 40, 2):
        path = AntifactorInstance(k + 1, tuple((i, i + 1) for i in range(k)))
        cyc = AntifactorInstance(k, tuple((i, (i + 1) % k) for i in range(k))) if k >= 3 else None
        violations += solve(path) is not None
        if cyc is not None:
            violations += solve(cyc) is not None
            if k <= 19:
                violations += brute_force_solve(cyc) is not None
    report(3, violations == 0, f"{LAW_SAMPLES} even components, odd paths/cycles up to 39 edges, {violations} violations")


def test_criterion_04_gadget_certification(report):
    t0 = time.perf_counter()
    wrong = []
    for ls in SYMMETRIC_SETS:
        if not ls:
            continue
        g = gadget_for(ls)
        if direct_label_set(g) != ls or LabelSet.from_checks(*check_results(g)) != ls:
            wrong.append(ls.name)
    negatives = (
        check_results(gadget_for(LabelSet.parse("{00,11}")))[1] is False
        and check_results(gadget_for(LabelSet.parse("{0*,*0}")))[2] is False
        and check_results(gadget_for(LabelSet.parse("{1*,*1}")))[0] is False
    )
    dt = time.perf_counter() - t0
    report(4, not wrong and negatives and dt < GADGET_BUDGET_S, f"7 gadgets, mismatches {wrong}, negatives ok={negatives}, {dt:.2f}s")


def test_criterion_05_fixed_embedding_equivalence(report):
    graphs = biconnected_subcubic(FIXED_MAX_EDGES, FIXED_MAX_EDGES)
    checked = bad = 0
    for g in graphs:
        for emb in rotation_systems(g):
            if not (emb.is_planar() and emb.euler_global()):
                continue
            checked += 1
            res = augment_fixed(g, emb)
            brute = brute_force_solve(build_instance(emb)) is not None
            if isinstance(res, Infeasible) == brute:
                bad += 1
            elif not isinstance(res, Infeasible) and not verify(g, res, emb).ok:
                bad += 1
    report(5, bad == 0 and checked > 0, f"{len(graphs)} graphs, {checked} plane embeddings, {bad} disagreements")


def test_criterion_06_variable_embedding_equivalence(report):
    t0 = time.perf_counter()
    catalog = biconnected_subcubic(VARIABLE_MAX_VERTICES, 3 * VARIABLE_MAX_VERTICES // 2)
    rng = random.Random(0x606)
    sample = [
        random_subcubic_planar(rng.randint(3, VARIABLE_RANDOM_MAX_N), rng.randrange(10**9))
        for _ in range(VARIABLE_RANDOM)
    ]
    bad = feasible = 0
    for g in catalog + sample:
        res = variable_augment(g)
        if isinstance(res, Infeasible) == oracle_decide(g):
            bad += 1
        elif not isinstance(res, Infeasible):
            feasible += 1
            bad += not verify(g, res).ok
    dt = time.perf_counter() - t0
    report(
        6,
        bad == 0 and dt < VARIABLE_BUDGET_S,
        f"{len(catalog)} catalogue + {VARIABLE_RANDOM} random ({feasible} feasible), {bad} disagreements, {dt:.1f}s",
    )


def _glued(rng: random.Random) -> Multigraph:
    parts = []
    for _ in range(rng.randint(1, 3)):
        r = rng.random()
        if r < 0.15:
            parts.append(k4())
        elif r < 0.25:
            parts.append(Multigraph(1, ()))
        else:
            parts.append(random_subcubic_planar(rng.randint(3, 8), rng.randrange(10**6)))
    g = disjoint(*parts)
    edges, n, deg = list(g.edges), g.n, list(g.degrees)
    offs = [0]
    for p in parts:
        offs.append(offs[-1] + p.n)
    for i in range(len(parts) - 1):
        a = next((v for v in range(offs[i], offs[i + 1]) if deg[v] < 3), None)
        b = next((v for v in range(offs[i + 1], offs[i + 2]) if deg[v] < 3), None)
        if a is not None and b is not None and rng.random() < 0.7:
            edges.append((a, b))
            deg[a] += 1
            deg[b] += 1
    for _ in range(rng.randint(0, 2)):
        a = rng.randrange(n)
        if deg[a] < 3:
            edges.append((a, n))
            deg[a] += 1
            deg.append(1)
            n += 1
    if rng.random() < 0.05:
        v = rng.randrange(n)
        for _ in range(4 - deg[v] if deg[v] < 4 else 0):
            edges.append((v, n))
            deg.append(1)
            n += 1
        deg[v] = 4
    return Multigraph(n, tuple(edges))


def _block_law(g: Multigraph) -> bool:
    if g.max_degree > 3 or planarity_embed(g) is None:
        return False
    for b in blocks(g).blocks:
        if len(b) >= 2 and not oracle_decide(induced_on_edges(g, b)[0]):
            return False
    return True


def test_criterion_07_decomposition_laws(report):
    rng = random.Random(0x707)
    bad = with_bridges = cubic_rejects = 0
    for _ in range(DECOMP_SAMPLES):
        g = _glued(rng)
        law = _block_law(g)
        res = augment(g)
        bad += isinstance(res, Infeasible) == law
        if not isinstance(res, Infeasible):
            bad += not verify(g, res).ok
        with_bridges += bool(blocks(g).blocks and any(len(b) == 1 for b in blocks(g).blocks))
        has_cubic = any(all(g.degrees[v] == 3 for v in comp) for comp in g.components())
        res_b = augment(g, "biconnected")
        expect_b = law and not (has_cubic and len(g.components()) > 1)
        bad += isinstance(res_b, Infeasible) == expect_b
        if law and has_cubic and len(g.components()) > 1:
            cubic_rejects += 1
            bad += not (isinstance(res_b, Infeasible) and res_b.reason == "cubic-component")
        if not isinstance(res_b, Infeasible):
            bad += not verify(g, res_b).ok or len(res_b.graph.components()) != 1
    report(
        7,
        bad == 0,
        f"{DECOMP_SAMPLES} graphs ({with_bridges} with bridges, {cubic_rejects} cubic-component cases), {bad} disagreements",
    )


def test_criterion_08_witness_soundness(report):
    rng = random.Random(0x808)
    failures = oversize = 0
    worst = 0.0
    for _ in range(WITNESS_SAMPLES):
        n = 2 * rng.randint(2, WITNESS_MAX_N // 2)
        g = random_feasible_subcubic_planar(n, rng.randrange(10**9))
        res = augment(g)
        if isinstance(res, Infeasible) or not verify(g, res).ok:
            failures += 1
            continue
        oversize += res.graph.n > 4 * g.n + 40
        worst = max(worst, res.graph.n / g.n)
    report(8, failures == 0 and oversize == 0, f"{WITNESS_SAMPLES} instances, {failures} failures, {oversize} over size bound, max |V(H)|/|V(G)| {worst:.2f}")


def test_criterion_09_complexity_trend(report):
    t0 = time.perf_counter()
    medians = []
    for n in SCALING_SIZES:
        times = []
        for rep in range(SCALING_REPEATS):
            g = random_feasible_subcubic_planar(n, 9000 + rep)
            s = time.perf_counter()
            res = augment(g)
            times.append(time.perf_counter() - s)
            assert not isinstance(res, Infeasible)
        medians.append(statistics.median(times))
    xs = [math.log(n) for n in SCALING_SIZES]
    ys = [math.log(t) for t in medians]
    slope = statistics.linear_regression(xs, ys).slope
    dt = time.perf_counter() - t0
    table = ", ".join(f"{n}:{t:.2f}s" for n, t in zip(SCALING_SIZES, medians))
    report(9, slope <= SCALING_MAX_SLOPE and dt < SCALING_BUDGET_S, f"slope {slope:.2f} ({table}), sweep {dt:.0f}s")


def _cli(*args: str, hashseed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    return subprocess.run([sys.executable, "-m", "cubicaug.cli", *args], env=env, capture_output=True, check=False).stdout


def test_criterion_10_determinism(report, tmp_path):
    differing = []
    runs = 0
    for n, seed, feasible in ((60, 1, False), (200, 2, True), (13, 3, False)):
        flag = ["--feasible"] if feasible else []
        g1 = _cli("generate", str(n), "--seed", str(seed), *flag, hashseed="1")
        g2 = _cli("generate", str(n), "--seed", str(seed), *flag, hashseed="2")
        runs += 1
        if g1 != g2 or not g1:
            differing.append(f"generate {n}")
            continue
        path = tmp_path / f"g{n}.txt"
        path.write_bytes(g1)
        for cmd in (["solve", str(path)], ["solve", str(path), "--mode", "biconnected"], ["render", str(path)]):
            a = _cli(*cmd, hashseed="3")
            b = _cli(*cmd, hashseed="4")
            runs += 1
            if a != b or not a:
                differing.append(" ".join(cmd[:1] + cmd[2:]) + f" n={n}")
    report(10, not differing, f"{runs} command pairs, differing: {differing}")
