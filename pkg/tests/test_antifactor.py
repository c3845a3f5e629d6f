from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import cycle, k4, k4_two_opposite_subdivided
from cubicaug.antifactor import (
    AntifactorInstance,
    Assignment,
    brute_force_solve,
    build_instance,
    component_sizes,
    format_instance,
    is_valid,
    pair_even_component,
    parse_instance,
    solve,
)
from cubicaug.graph import Multigraph, planarity_embed
from cubicaug.outcomes import PreconditionError


def inst_of(n_faces: int, ends) -> AntifactorInstance:
    return AntifactorInstance(n_faces, tuple(ends))


def cycle_instance(k: int) -> AntifactorInstance:
    return inst_of(k, [(i, (i + 1) % k) for i in range(k)])


def test_cubic_graph_has_no_a_nodes():
    assert build_instance(planarity_embed(k4())).n_a == 0


def test_c4_instance_shape():
    inst = build_instance(planarity_embed(cycle(4)))
    assert inst.n_a == 4 and inst.n_faces == 2
    assert set(inst.incidences) == {(0, 1)}


def test_subdivided_k4_face_multigraph_is_two_single_edges():
    inst = build_instance(planarity_embed(k4_two_opposite_subdivided()))
    sizes = [s for s in component_sizes(inst)]
    assert sorted(s[1] for s in sizes) == [1, 1]
    assert all(s[0] == 2 for s in sizes)


def test_triangle_is_infeasible():
    inst = cycle_instance(3)
    assert solve(inst) is None and brute_force_solve(inst) is None


def test_two_edge_path_goes_to_middle():
    inst = inst_of(3, [(0, 1), (1, 2)])
    a = solve(inst)
    assert a is not None and a.faces == (1, 1)


def test_empty_instance():
    assert solve(inst_of(2, [])) == Assignment(())


@pytest.mark.parametrize("k", [3, 5, 7])
def test_odd_cycles_infeasible(k):
    assert brute_force_solve(cycle_instance(k)) is None
    assert solve(cycle_instance(k)) is None


@pytest.mark.parametrize("k", [4, 6])
def test_even_cycles_feasible(k):
    assert brute_force_solve(cycle_instance(k)) is not None
    assert is_valid(cycle_instance(k), solve(cycle_instance(k)))


def test_single_edge_component_is_infeasible():
    inst = inst_of(5, [(0, 1), (2, 3), (3, 4)])
    assert brute_force_solve(inst) is None and solve(inst) is None


def test_pair_even_component_examples():
    # 4-cycle: two opposite nodes each take two edges
    choice = pair_even_component(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    counts = [choice.count(x) for x in range(4)]
    assert sorted(counts) == [0, 0, 2, 2]
    assert pair_even_component(2, [(0, 1), (0, 1)]) in ([0, 0], [1, 1])
    assert pair_even_component(3, [(0, 1), (0, 2)]) == [0, 0]
    with pytest.raises(PreconditionError):
        pair_even_component(2, [(0, 1)])


def test_claw_makes_odd_component_feasible():
    inst = inst_of(4, [(0, 1), (0, 2), (0, 3)])
    a = solve(inst)
    assert a is not None and a.faces == (0, 0, 0)


def test_instance_rejects_equal_faces():
    with pytest.raises(ValueError):
        inst_of(2, [(1, 1)])


def test_instance_text_round_trip():
    inst = inst_of(4, [(0, 1), (1, 2), (2, 3)])
    assert parse_instance(format_instance(inst)) == inst
    with pytest.raises(ValueError):
        parse_instance("faces 2\nverts 3\n0: 0 1\n")


def test_brute_force_size_guard():
    with pytest.raises(PreconditionError):
        brute_force_solve(inst_of(2, [(0, 1)] * 21))


def test_degree_two_vertex_on_one_face_rejected():
    path = Multigraph(3, ((0, 1), (1, 2)))
    emb = planarity_embed(path)
    with pytest.raises(PreconditionError):
        build_instance(emb)


@st.composite
def small_instances(draw):
    k = draw(st.integers(min_value=2, max_value=7))
    m = draw(st.integers(min_value=0, max_value=12))
    ends = []
    for _ in range(m):
        f = draw(st.integers(min_value=0, max_value=k - 1))
        g = draw(st.integers(min_value=0, max_value=k - 2))
        ends.append((f, g if g < f else g + 1))
    return inst_of(k, ends)


@settings(max_examples=400, deadline=None)
@given(small_instances())
def test_solver_matches_brute_force(inst):
    a = solve(inst)
    b = brute_force_solve(inst)
    assert (a is None) == (b is None)
    if a is not None:
        assert is_valid(inst, a)


@settings(max_examples=200, deadline=None)
@given(small_instances())
def test_component_independence(inst):
    whole = solve(inst) is not None
    parts = []
    for nodes, edges in _components(inst):
        sub = inst_of(inst.n_faces, [inst.incidences[e] for e in edges])
        parts.append(solve(sub) is not None)
    assert whole == all(parts)


def _components(inst):
    from cubicaug.antifactor import _FaceGraph

    fg = _FaceGraph(inst.n_faces, inst.incidences)
    return fg.components([True] * inst.n_a)


def test_large_random_instances_are_valid():
    rng = random.Random(11)
    for _ in range(50):
        k = rng.randint(2, 400)
        ends = []
        for _ in range(rng.randint(0, 800)):
            f, g = rng.sample(range(k), 2)
            ends.append((f, g))
        inst = inst_of(k, ends)
        a = solve(inst)
        if a is not None:
            assert is_valid(inst, a)
