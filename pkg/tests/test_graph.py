from fractions import Fraction

import pytest

from graphcohom.fixtures import EXAMPLE_SLOPES, example_graph, example_slope_fixture, square
from graphcohom.graph import (
    BadEdge, BadShear, CollinearTriple, DuplicatePoint, GraphError, RandomSpec, GenerationFailed,
    cartesian_product, complete_graph, cycle_graph, delete_edges, delete_vertex, from_json,
    induced_subgraph, path_graph, random_general_position, shear, single_edge, validate,
)


def test_example_slopes_match_coordinates():
    G = example_graph()
    for key, val in EXAMPLE_SLOPES.items():
        i, j = map(int, key.split("-"))
        assert G.slopes[(i, j)] == Fraction(val)
    assert example_slope_fixture().slopes == G.slopes


def test_collinear_and_duplicate_rejected():
    with pytest.raises(CollinearTriple):
        validate([(0, 0), (1, 1), (2, 2)], [(1, 2)])
    with pytest.raises(DuplicatePoint):
        validate([(0, 0), (0, 0), (1, 3)], [])
    with pytest.raises(BadEdge):
        validate([(0, 0), (1, 2)], [(1, 1)])


def test_shear_applied_when_second_coordinates_collide():
    G = square()
    assert G.shear_t == Fraction(1, 2)
    assert len({q for _, q in G.phi}) == 4
    G = validate([(0, 0), (1, 1), (2, 5)], [(1, 2)])
    with pytest.raises(BadShear):
        shear(G, -1)
    assert shear(G, 1).shear_t == 1


def test_json_roundtrip():
    for G in (example_graph(), square(), complete_graph(4, 3), example_slope_fixture()):
        assert from_json(G.to_json()) == G
    with pytest.raises(GraphError):
        from_json("{not json")
    with pytest.raises(GraphError):
        from_json(example_slope_fixture().to_json(), allow_unchecked=False)


def test_basic_families():
    assert complete_graph(5).n_edges == 10
    assert cycle_graph(6).is_regular(2)
    assert path_graph(3).degrees() == (1, 2, 1)
    assert single_edge().n_edges == 1


def test_delete_vertex_keeps_labels():
    G = delete_vertex(cycle_graph(5), 2)
    assert G.m == 4 and G.labels == (1, 3, 4, 5)
    assert delete_vertex(complete_graph(1), 1).m == 0
    H = induced_subgraph(G, [2, 3])
    assert H.labels == (3, 4) and H.edges == ((1, 2),)


def test_delete_missing_edge():
    with pytest.raises(BadEdge):
        delete_edges(path_graph(3), [(1, 3)])


def test_product_shape():
    P = cartesian_product(single_edge(1), complete_graph(3, 2), 1, 5)
    assert P.m == 6 and P.is_regular(3)
    # vertex (i, s) has index (i-1)*3 + s
    assert (1, 4) in P.edges and (1, 2) in P.edges


def test_random_is_deterministic_and_general():
    spec = RandomSpec(8, "regular", degree=3)
    A, B = random_general_position(spec, 5), random_general_position(spec, 5)
    assert A == B and A.is_regular(3)
    with pytest.raises(GenerationFailed):
        random_general_position(RandomSpec(5, "regular", degree=3), 1)
