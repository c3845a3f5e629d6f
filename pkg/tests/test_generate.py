from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cubicaug.generate import random_feasible_subcubic_planar, random_subcubic_planar
from cubicaug.graph import is_biconnected, planarity_embed


def _simple(g) -> bool:
    return len({frozenset(e) for e in g.edges}) == g.m


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=3, max_value=120), st.integers(min_value=0, max_value=10**6))
def test_random_graph_properties(n, seed):
    g = random_subcubic_planar(n, seed)
    assert g.n == n and g.max_degree <= 3
    assert is_biconnected(g) and _simple(g)
    assert planarity_embed(g) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=60), st.integers(min_value=0, max_value=10**6))
def test_feasible_graph_properties(half, seed):
    g = random_feasible_subcubic_planar(2 * half, seed)
    assert g.n == 2 * half and g.max_degree <= 3
    assert is_biconnected(g) and planarity_embed(g) is not None


def test_same_seed_same_graph():
    assert random_subcubic_planar(50, 9) == random_subcubic_planar(50, 9)
    assert random_subcubic_planar(50, 9) != random_subcubic_planar(50, 10)


def test_argument_checks():
    with pytest.raises(ValueError):
        random_subcubic_planar(2, 0)
    with pytest.raises(ValueError):
        random_feasible_subcubic_planar(7, 0)


def test_no_drop_gives_cubic_graph():
    g = random_feasible_subcubic_planar(40, 1, p_drop=0.0)
    assert set(g.degrees) == {3}
    assert not nx.has_bridges(nx.Graph(g.edges))
