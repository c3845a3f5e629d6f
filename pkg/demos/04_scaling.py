"""Timing the full pipeline on growing random instances.

Instances come from a generator that builds a cubic planar graph and then
removes some chords, so every instance has an answer. Prints a small table
and the slope of log(time) against log(n).
"""

from __future__ import annotations

import math
import statistics
import sys
import time

from cubicaug import augment, random_feasible_subcubic_planar, verify

sizes = [int(x) for x in sys.argv[1:]] or [256, 512, 1024, 2048, 4096]
times = []
print(f"{'n':>7} {'|V(H)|':>8} {'seconds':>9}")
for n in sizes:
    g = random_feasible_subcubic_planar(n, seed=n)
    t = time.perf_counter()
    res = augment(g)
    dt = time.perf_counter() - t
    assert verify(g, res).ok
    times.append(dt)
    print(f"{n:>7} {res.graph.n:>8} {dt:>9.3f}")
fit = statistics.linear_regression([math.log(n) for n in sizes], [math.log(t) for t in times])
print(f"log-log slope {fit.slope:.2f}")
