"""When the drawing is free, the choice of embedding decides feasibility.

The graph below is a chain of three cycles: a triangle, a 4-cycle and
another triangle, joined at shared edges. Flipping the middle part moves
the degree-2 vertices between faces. For each planar rotation system the demo asks whether that fixed
drawing can be augmented, then lets the decomposition-based search pick a
good one on its own.
"""

from __future__ import annotations

from cubicaug import Infeasible, Multigraph, augment_fixed, variable_augment, verify
from cubicaug.assemble import rotation_systems
from cubicaug.labels import format_label_sets, run_dp
from cubicaug.spqr import build_spqr, format_tree, root_at

g = Multigraph(6, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 1), (3, 5), (5, 4)))

good = bad = 0
for emb in rotation_systems(g):
    if not (emb.is_planar() and emb.euler_global()):
        continue
    if isinstance(augment_fixed(g, emb), Infeasible):
        bad += 1
    else:
        good += 1
print(f"planar drawings (up to mirror): {good} augmentable, {bad} not")

print("\ndecomposition tree rooted at edge 0:")
print(format_tree(root_at(build_spqr(g), 0)), end="")
print("\nlabel set of every inner node:")
print(format_label_sets(run_dp(g)), end="")

res = variable_augment(g)
print(f"\nchosen drawing gives |V(H)|={res.graph.n}, verified={verify(g, res).ok}")
