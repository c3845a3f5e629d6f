"""Seeded random 2-connected subcubic planar graphs.

Growth starts from a triangle and repeats three local moves on a mutable
rotation system, each of which keeps the graph planar and 2-connected:

* chord: subdivide two edges of one face and join the new vertices;
* subdivide: split an edge by a degree-2 vertex;
* ear: join two non-adjacent degree-2 vertices that share a face.

:func:`random_feasible_subcubic_planar` instead grows a cubic graph from
K4 by chords only and leaves some chords out. A left-out chord is never
subdivided later, so putting all of them back yields a cubic bridgeless
planar supergraph: those instances are feasible by construction.
"""

from __future__ import annotations

import random

from .graph import Multigraph

MAX_WALK = 64


class _Grower:
    def __init__(self, k4: bool = False) -> None:
        self.frozen: set[int] = set()
        if not k4:
            self.edges: list[list[int]] = [[0, 1], [1, 2], [2, 0]]
            # clockwise darts per vertex; dart 2e leaves edges[e][0]
            self.rot: list[list[int]] = [[0, 5], [1, 2], [3, 4]]
            return
        # outer triangle 0-1-2, centre 3
        self.edges = [[0, 1], [1, 2], [2, 0], [0, 3], [1, 3], [2, 3]]
        self.rot = [[0, 6, 5], [2, 8, 1], [4, 10, 3], [7, 9, 11]]

    @property
    def n(self) -> int:
        return len(self.rot)

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def nxt(self, d: int) -> int:
        t = d ^ 1
        r = self.rot[self.tail(t)]
        return r[(r.index(t) + 1) % len(r)]

    def subdivide(self, d: int) -> int:
        """Split the edge of dart ``d`` (a->b); ``d`` keeps running a->x. Returns x."""
        e = d >> 1
        x = self.n
        a, b = self.tail(d), self.tail(d ^ 1)
        f = len(self.edges)
        self.edges.append([x, b])
        if d & 1:
            self.edges[e] = [x, a]
        else:
            self.edges[e] = [a, x]
        rb = self.rot[b]
        rb[rb.index(d ^ 1)] = 2 * f + 1
        self.rot.append([d ^ 1, 2 * f])
        return x

    def join(self, x: int, after_x: int, y: int, after_y: int) -> None:
        e = len(self.edges)
        self.edges.append([x, y])
        rx, ry = self.rot[x], self.rot[y]
        rx.insert(rx.index(after_x) + 1, 2 * e)
        ry.insert(ry.index(after_y) + 1, 2 * e + 1)

    def face_sample(self, rng: random.Random, d: int) -> list[int]:
        out = [d]
        cur = self.nxt(d)
        while cur != d and len(out) < MAX_WALK:
            out.append(cur)
            cur = self.nxt(cur)
        return out

    def chord(self, rng: random.Random, freeze: bool = False) -> bool:
        d1 = rng.randrange(2 * len(self.edges))
        walk = self.face_sample(rng, d1)
        if len(walk) < 2:
            return False
        d2 = walk[rng.randrange(1, len(walk))]
        if (d1 >> 1) in self.frozen or (d2 >> 1) in self.frozen:
            return False
        x = self.subdivide(d1)
        y = self.subdivide(d2)
        self.join(x, d1 ^ 1, y, d2 ^ 1)
        if freeze:
            self.frozen.add(len(self.edges) - 1)
        return True

    def ear(self, rng: random.Random) -> bool:
        d1 = rng.randrange(2 * len(self.edges))
        walk = self.face_sample(rng, d1)
        cands = [(i, d) for i, d in enumerate(walk) if len(self.rot[self.tail(d)]) == 2]
        if len(cands) < 2:
            return False
        (i, a), (j, b) = rng.sample(cands, 2)
        x, y = self.tail(a), self.tail(b)
        if x == y or any(self.tail(t ^ 1) == y for t in self.rot[x]):
            return False
        # corners: the face enters x through the dart before ``a``
        pa = walk[i - 1] if i > 0 else None
        pb = walk[j - 1] if j > 0 else None
        if pa is None or pb is None:
            return False
        self.join(x, pa ^ 1, y, pb ^ 1)
        return True


def random_subcubic_planar(n: int, seed: int, p_subdivide: float = 0.25, p_ear: float = 0.15) -> Multigraph:
    """Random simple 2-connected planar graph with ``n >= 3`` vertices and maximum degree 3."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    gr = _Grower()
    while gr.n < n:
        left = n - gr.n
        r = rng.random()
        if left == 1 or r < p_subdivide:
            gr.subdivide(rng.randrange(2 * len(gr.edges)))
        elif r < p_subdivide + p_ear:
            gr.ear(rng)
        else:
            gr.chord(rng)
    return Multigraph(gr.n, tuple((a, b) for a, b in gr.edges))


def random_feasible_subcubic_planar(n: int, seed: int, p_drop: float = 0.3) -> Multigraph:
    """Random 2-connected subcubic planar graph on an even ``n >= 4`` that has a 3-augmentation.

    Edge ids follow creation order with the dropped chords removed.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be even and at least 4")
    rng = random.Random(seed)
    gr = _Grower(k4=True)
    while gr.n < n:
        gr.chord(rng, freeze=rng.random() < p_drop)
    kept = [tuple(e) for i, e in enumerate(gr.edges) if i not in gr.frozen]
    return Multigraph(gr.n, tuple(kept))
