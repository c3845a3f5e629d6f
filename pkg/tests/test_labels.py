from __future__ import annotations

import random

import pytest

from conftest import cycle, k4, k4_two_opposite_subdivided, k23, k33, theta
from cubicaug.assemble import oracle_decide
from cubicaug.generate import random_subcubic_planar
from cubicaug.graph import Multigraph, restrict
from cubicaug.labels import format_label_sets, run_dp, variable_augment
from cubicaug.outcomes import Infeasible, PreconditionError
from cubicaug.uvgraph import LabelSet
from cubicaug.verify import verify


@pytest.mark.parametrize("k, name", [(3, "{01,10}"), (4, "{**}"), (7, "{**}")])
def test_path_label_sets(k, name):
    st = run_dp(cycle(k))
    assert st.sets[st.top] == LabelSet.parse(name)


def test_known_verdicts():
    assert run_dp(k4()).root_ok
    assert not run_dp(k23()).root_ok
    assert not run_dp(k4_two_opposite_subdivided()).root_ok


def test_k4_result_is_k4():
    res = variable_augment(k4())
    assert res.graph == k4()


def test_preconditions_and_nonplanar():
    with pytest.raises(PreconditionError):
        variable_augment(Multigraph(3, ((0, 1), (1, 2))))
    assert variable_augment(k33()) == Infeasible("nonplanar", "graph is not planar")


def test_two_vertex_multigraph():
    g = Multigraph(2, ((0, 1), (0, 1), (0, 1)))
    res = variable_augment(g)
    assert res.graph.n == 2 and verify(g, res).ok


def test_label_set_dump_lists_every_inner_node():
    st = run_dp(theta(2, 2, 3))
    rows = format_label_sets(st).splitlines()
    assert len(rows) == len(st.sets)
    assert all(r.split()[1] in "SPR" for r in rows)


def test_root_choice_does_not_change_verdict():
    rng = random.Random(3)
    for _ in range(60):
        g = random_subcubic_planar(rng.randint(4, 12), rng.randrange(10**6))
        verdicts = {run_dp(g, e).root_ok for e in range(g.m)}
        assert len(verdicts) == 1


def test_agrees_with_exhaustive_oracle():
    rng = random.Random(2024)
    for _ in range(300):
        g = random_subcubic_planar(rng.randint(3, 12), rng.randrange(10**9))
        res = variable_augment(g)
        assert isinstance(res, Infeasible) != oracle_decide(g)
        if not isinstance(res, Infeasible):
            assert verify(g, res).ok
            emb_g = restrict(res.embedding, res.edge_map, g.n)
            assert emb_g.is_planar()
