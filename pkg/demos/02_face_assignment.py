"""Augmenting a cycle while keeping its drawing fixed.

Every degree-2 vertex needs one extra edge. That edge has to go into one of
the two faces beside the vertex, and a face that receives exactly one such
edge would make it a bridge. The face-assignment solver picks a face for
every vertex so that no face ends up with exactly one; then one K4 chain per
used face absorbs the edges.
"""

from __future__ import annotations

from cubicaug import Multigraph, augment_fixed, build_instance, planarity_embed, solve, verify

for k in (4, 5, 6):
    g = Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))
    emb = planarity_embed(g)
    inst = build_instance(emb)
    a = solve(inst)
    print(f"C{k}: faces {inst.n_faces}, degree-2 vertices {inst.n_a}")
    print(f"     assignment vertex->face {dict(zip(inst.vertices, a.faces))}")
    res = augment_fixed(g, emb)
    for occ in res.gadgets:
        print(f"     face {occ.face}: chain with {occ.k} attachment points")
    print(f"     |V(H)|={res.graph.n}, verified={verify(g, res, emb).ok}")
