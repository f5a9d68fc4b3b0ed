from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from graphcohom.fixtures import example_graph, example_slope_fixture, two_squares
from graphcohom.graph import RandomSpec, complete_graph, cycle_graph, edgeless_graph, random_general_position
from graphcohom.profile import (
    NonGenericDirection, PropertyViolated, betti_generic, build_Mk, char_profile, check_ordering_bound,
    dim_Hk, ordering_indices, r_k, s_k,
)


@pytest.mark.parametrize("make", [example_graph, example_slope_fixture])
def test_example_profile(make):
    G = make()
    assert [r_k(G, k) for k in range(3)] == [3, 5, 5]
    assert [s_k(G, k) for k in range(-1, 3)] == [5, 2, 0, 0]
    prof = char_profile(G)
    assert prof.c == (1, 1, 2) and prof.pi0 == 1 and prof.K == 2


def test_matrix_shape_and_row():
    M = build_Mk(example_graph(), 1)
    assert (M.rows, M.cols) == (5, 8)
    # edge 12 with slope -3: [1, -1, 0, 0, -3, 3, 0, 0]
    assert list(M.row(0)) == [1, -1, 0, 0, -3, 3, 0, 0]


def test_complete_and_cycles():
    for m in range(2, 7):
        assert char_profile(complete_graph(m)).c == (1,) * m
    for m in range(3, 9):
        G = cycle_graph(m)
        assert char_profile(G).c == (1, m - 2, 1)
        assert betti_generic(G).beta == (1, m - 2, 1)


def test_disconnected_and_edgeless():
    assert char_profile(two_squares()).c == (2, 4, 2)
    prof = char_profile(edgeless_graph(3))
    assert prof.c == (3,) and prof.pi0 == 3


def test_betti_rejects_non_generic_direction():
    G = complete_graph(3)  # points (1,1),(2,4),(3,9)
    with pytest.raises(NonGenericDirection):
        betti_generic(G, (3, -1))  # heights 3*1-1 = 2, 3*2-4 = 2


def test_ordering_bound_and_indices():
    G = example_graph()
    od = ordering_indices(G)
    assert od.mu == (2, 2, 1, 0) and od.b == (1, 1, 2)
    rows = check_ordering_bound(G, [4, 3, 2, 1])
    assert all(r.holds for r in rows)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(1, 8), st.floats(0.1, 0.9), st.integers(0, 10 ** 6))
def test_profile_identities_random(m, density, seed):
    G = random_general_position(RandomSpec(m, "er", density), seed)
    prof = char_profile(G)
    assert sum(prof.c) == m
    assert sum(k * c for k, c in enumerate(prof.c)) == G.n_edges
    assert all(c >= 0 for c in prof.c)
    for k in range(len(prof.c) + 1):
        lhs = sum((k + 1 - n) * prof.c_at(n) for n in range(k + 1))
        assert lhs == dim_Hk(G, k)
    check_ordering_bound(G)
    assert sum(betti_generic(G).beta) == m
