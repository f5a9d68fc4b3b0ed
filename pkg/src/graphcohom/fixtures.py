"""Named fixture graphs used by tests, the CLI and the verification suite."""

from __future__ import annotations

from .graph import (
    EmbeddedGraph,
    complete_graph,
    cycle_graph,
    delete_edges,
    from_slopes,
    moment_curve,
    single_edge,
    cartesian_product,
    validate,
)

EXAMPLE_EDGES = [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
# coordinates realizing slopes a12=-3, a14=1, a23=1/2, a24=-1/3, a34=-2
EXAMPLE_COORDS = [(0, 0), (3, 1), (4, -1), (2, -2)]
EXAMPLE_SLOPES = {"1-2": "-3", "1-4": "1", "2-3": "1/2", "2-4": "-1/3", "3-4": "-2"}


def example_graph() -> EmbeddedGraph:
    return validate(EXAMPLE_COORDS, EXAMPLE_EDGES)


def example_slope_fixture() -> EmbeddedGraph:
    return from_slopes(4, EXAMPLE_EDGES, EXAMPLE_SLOPES)


def bridge_triangles() -> EmbeddedGraph:
    """Triangles 123 and 456 joined by the bridge 34."""
    return validate(moment_curve(6), [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)])


def k4_minus_edge() -> EmbeddedGraph:
    return delete_edges(complete_graph(4), [(1, 2)])


def two_squares() -> EmbeddedGraph:
    """Disjoint union of two 4-cycles."""
    return validate(moment_curve(8), [(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8)])


def square() -> EmbeddedGraph:
    """Convex unit square; second coordinates collide, so it gets sheared."""
    return validate([(0, 0), (1, 0), (1, 1), (0, 1)], [(1, 2), (2, 3), (3, 4), (1, 4)])


def k2_box_k2() -> EmbeddedGraph:
    return cartesian_product(single_edge(1), single_edge(2), 1, 1)


def k2_box_k3() -> EmbeddedGraph:
    return cartesian_product(single_edge(1), complete_graph(3, 2), 1, 5)


def k4_box_k2() -> EmbeddedGraph:
    return cartesian_product(complete_graph(4, 1), single_edge(5), 1, 3)


def fixture_corpus() -> list[tuple[str, EmbeddedGraph]]:
    out: list[tuple[str, EmbeddedGraph]] = [("example", example_graph()),
                                            ("example-slopes", example_slope_fixture())]
    out += [(f"K{m}", complete_graph(m)) for m in range(1, 7)]
    out += [(f"C{m}", cycle_graph(m)) for m in range(3, 9)]
    out += [
        ("K2xK2", k2_box_k2()),
        ("K2xK3", k2_box_k3()),
        ("bridge-triangles", bridge_triangles()),
        ("K4-minus-edge", k4_minus_edge()),
        ("two-squares", two_squares()),
        ("square", square()),
    ]
    return out


# factor pairs (G1, G2, a, b) whose products are in general position
def product_pairs() -> list[tuple[str, EmbeddedGraph, EmbeddedGraph, int, int]]:
    return [
        ("K2xK2", single_edge(1), single_edge(2), 1, 1),
        ("K2xK3", single_edge(1), complete_graph(3, 2), 1, 5),
        ("K4xK2", complete_graph(4, 1), single_edge(5), 1, 3),
    ]
