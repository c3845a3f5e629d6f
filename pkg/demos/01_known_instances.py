"""Three small graphs with well-known answers.

K4 is already cubic, planar and bridgeless, so it is its own answer. K2,3
can be edge-coloured with three colours, yet no cubic bridgeless planar
supergraph contains it. Subdividing two opposite edges of K4 leaves two
degree-2 vertices that never share a face, so each would have to leave its
face through a bridge.
"""

from __future__ import annotations

from cubicaug import Infeasible, Multigraph, augment, verify

K4 = Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
K23 = Multigraph(5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)))
SPLIT_K4 = Multigraph(6, ((0, 4), (4, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 5), (5, 3)))

for name, g in (("K4", K4), ("K2,3", K23), ("K4 with two opposite edges split", SPLIT_K4)):
    res = augment(g)
    if isinstance(res, Infeasible):
        print(f"{name:34s} infeasible ({res.reason})")
    else:
        rep = verify(g, res)
        print(f"{name:34s} feasible: |V(H)|={res.graph.n}, |E(H)|={res.graph.m}, verified={rep.ok}")
