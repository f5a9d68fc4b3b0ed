import pytest

from graphcohom.cohomology import (
    CohomElement, convolve, degree_basis, from_vector, is_member, kunneth_check, kunneth_map,
    module_generators, omega_powers, symplectic_form, to_vector, verify_basis,
)
from graphcohom.fixtures import example_graph, k2_box_k2, square
from graphcohom.graph import GraphError, complete_graph, cycle_graph, single_edge
from graphcohom.fixtures import example_slope_fixture


def test_vector_roundtrip():
    f = CohomElement.of(["x^2", "x*y", "0", "2*y^2"])
    assert from_vector(to_vector(f, 2), 4, 2) == f


def test_membership_reports_edge():
    G = example_graph()
    assert is_member(G, CohomElement.constant(4))
    bad = is_member(G, ["x", "0", "0", "0"])
    assert not bad and bad.failing_edge == (1, 2)
    assert is_member(G, symplectic_form(G))


def test_degree_one_basis_of_example():
    # dim H^1 = 2m - r_1 = 8 - 5
    assert len(degree_basis(example_graph(), 1).vectors) == 3


def test_generators_match_c():
    for G in (example_graph(), cycle_graph(4), square(), k2_box_k2()):
        gens = module_generators(G)
        assert verify_basis(G, gens)
        assert all(is_member(G, g) for _, g in gens.generators)
    assert module_generators(cycle_graph(4)).counts() == (1, 2, 1)


def test_omega_powers_complete_not_cycle():
    for m in range(1, 5):
        G = complete_graph(m)
        assert verify_basis(G, omega_powers(G))
    assert not verify_basis(cycle_graph(5), omega_powers(cycle_graph(5)))


def test_slope_fixture_has_no_omega():
    with pytest.raises(GraphError):
        symplectic_form(example_slope_fixture())


def test_convolution_and_kunneth():
    assert convolve((1, 1), (1, 1)) == (1, 2, 1)
    rep = kunneth_check(single_edge(1), single_edge(2), 1, 1)
    assert rep.ok and rep.c3 == (1, 2, 1)
    rep = kunneth_check(single_edge(1), complete_graph(3, 2), 1, 5)
    assert rep.ok and rep.c3 == (1, 2, 2, 1)


def test_kunneth_map_member():
    G1, G2 = single_edge(1), complete_graph(3, 2)
    u = symplectic_form(G1)
    v = symplectic_form(G2)
    from graphcohom.graph import cartesian_product
    P = cartesian_product(G1, G2, 1, 5)
    assert is_member(P, kunneth_map(G1, G2, 1, 5, u, v, P))
