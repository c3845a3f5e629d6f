from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import cycle, k4, k23, k33, disjoint
from cubicaug.generate import random_subcubic_planar
from cubicaug.graph import (
    Embedding,
    Multigraph,
    RotationBuilder,
    blocks,
    bridges,
    flip,
    is_biconnected,
    planarity_embed,
    restrict,
)
from cubicaug.io import FormatError, format_embedding, format_graph, parse_embedding, parse_graph


def test_multigraph_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 0),))
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 2),))


def test_cycle_has_two_faces():
    emb = planarity_embed(cycle(6))
    assert len(emb.faces) == 2
    assert emb.is_planar() and emb.euler_global()


def test_k4_faces_are_triangles():
    emb = planarity_embed(k4())
    assert sorted(len(f) for f in emb.faces) == [3, 3, 3, 3]


def test_nonplanar_graphs_have_no_embedding():
    assert planarity_embed(k33()) is None
    k5 = Multigraph(5, tuple((a, b) for a in range(5) for b in range(a + 1, 5)))
    assert planarity_embed(k5) is None


def test_parallel_edges_survive_planarity_embedding():
    g = Multigraph(2, ((0, 1), (0, 1), (1, 0)))
    emb = planarity_embed(g)
    assert len(emb.faces) == 3
    emb.assert_planar()


def test_nonplanar_rotation_fails_euler():
    g = k4()
    emb = planarity_embed(g)
    rot = list(emb.rotation)
    r = rot[0]
    rot[0] = (r[0], r[2], r[1])
    assert not Embedding(g, tuple(rot)).is_planar()


def test_flip_twice_is_identity_and_keeps_faces():
    emb = planarity_embed(random_subcubic_planar(30, 3))
    f = flip(emb)
    assert f.is_planar()
    assert sorted(map(len, f.faces)) == sorted(map(len, emb.faces))
    assert flip(f).rotation == emb.rotation


def test_restrict_to_prefix_keeps_dart_ids():
    g = k4()
    emb = planarity_embed(g)
    sub = restrict(emb, range(5))
    for v in range(4):
        assert [d for d in emb.rotation[v] if d < 10] == list(sub.rotation[v])


def test_bridges_and_blocks():
    g = Multigraph(6, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)))
    assert bridges(g) == {3}
    bd = blocks(g)
    assert sorted(map(len, bd.blocks)) == [1, 3, 3]
    assert bd.cut_vertices == (2, 3)
    assert not is_biconnected(g)
    assert is_biconnected(cycle(5))
    assert is_biconnected(Multigraph(2, ((0, 1), (0, 1))))


def test_two_gon_has_no_bridge():
    assert bridges(Multigraph(2, ((0, 1), (0, 1)))) == set()


def test_builder_preserves_ids():
    emb = planarity_embed(cycle(4))
    b = RotationBuilder(emb)
    x = b.add_vertex()
    b.add_edge(0, x)
    b.add_edge(2, x)
    out = b.build()
    assert out.graph.edges[:4] == emb.graph.edges


def test_graph_io_round_trip():
    g = disjoint(k4(), k23())
    assert parse_graph(format_graph(g)) == g


def test_embedding_io_round_trip():
    emb = planarity_embed(k4())
    back = parse_embedding(format_embedding(emb), emb.graph)
    assert back == emb


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 0\n", "2 1\n0 5\n"])
def test_malformed_graph_text(text):
    with pytest.raises(FormatError):
        parse_graph(text)


def test_malformed_embedding_text():
    g = k4()
    with pytest.raises(FormatError):
        parse_embedding("0: 0 2\n", g)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=3, max_value=80), st.integers(min_value=0, max_value=10_000))
def test_random_embeddings_are_planar_and_round_trip(n, seed):
    g = random_subcubic_planar(n, seed)
    emb = planarity_embed(g)
    assert emb is not None and emb.is_planar() and emb.euler_global()
    assert parse_graph(format_graph(g)) == g
    assert parse_embedding(format_embedding(emb), g) == emb
