"""Connectivity, minimum cuts, trimming and the A_d graph class.

Flow-based cut computations are delegated to networkx; every reported cut
is re-checked here by removing it and recounting components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx

from .graph import EmbeddedGraph, Edge, delete_edges, delete_vertices, delete_vertex, induced_subgraph


@dataclass(frozen=True)
class CutResult:
    kind: str                       # "edge" or "vertex"
    size: int
    items: tuple                    # edges (i, j) or vertices
    sides: tuple[tuple[int, ...], tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "size": self.size,
            "separator": [list(e) for e in self.items] if self.kind == "edge" else list(self.items),
            "sides": [list(self.sides[0]), list(self.sides[1])],
        }


def to_networkx(G: EmbeddedGraph, relabel=None) -> nx.Graph:
    relabel = relabel or (lambda v: v)
    H = nx.Graph()
    H.add_nodes_from(relabel(v) for v in range(1, G.m + 1))
    H.add_edges_from((relabel(i), relabel(j)) for i, j in G.edges)
    return H


def _sides(components: list[list[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    first = tuple(components[0])
    rest = tuple(sorted(v for comp in components[1:] for v in comp))
    return first, rest


def _min_edge_cut(G: EmbeddedGraph, reverse: bool = False) -> tuple[Edge, ...]:
    """A minimum edge cut of a connected graph with m >= 2."""
    if reverse:
        flip = lambda v: G.m + 1 - v  # noqa: E731
        cut = nx.minimum_edge_cut(to_networkx(G, flip))
        cut = {(flip(i), flip(j)) for i, j in cut}
    else:
        cut = nx.minimum_edge_cut(to_networkx(G))
    return tuple(sorted((min(e), max(e)) for e in cut))


def edge_connectivity(G: EmbeddedGraph) -> tuple[int, CutResult]:
    if G.m < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    comps = G.components()
    if len(comps) > 1:
        return 0, CutResult("edge", 0, (), _sides(comps))
    cut = _min_edge_cut(G)
    after = delete_edges(G, cut).components()
    if len(after) != 2:
        raise RuntimeError(f"minimum edge cut {cut} left {len(after)} components")
    return len(cut), CutResult("edge", len(cut), cut, _sides(after))


def is_k_edge_connected(G: EmbeddedGraph, k: int) -> bool:
    """Removing fewer than k edges never disconnects."""
    if k <= 0:
        return True
    if G.m == 1:
        return True
    if G.m == 0:
        return False
    return edge_connectivity(G)[0] >= k


def _is_complete(G: EmbeddedGraph) -> bool:
    return G.n_edges == G.m * (G.m - 1) // 2


def vertex_connectivity(G: EmbeddedGraph) -> tuple[int, CutResult | None]:
    """Minimum separating vertex set; complete graphs report m - 1 and no cut."""
    if G.m < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    comps = G.components()
    if len(comps) > 1:
        return 0, CutResult("vertex", 0, (), _sides(comps))
    if _is_complete(G):
        return G.m - 1, None
    cut = tuple(sorted(nx.minimum_node_cut(to_networkx(G))))
    rest = delete_vertices(G, cut)
    after = [[rest.labels[v - 1] for v in comp] for comp in rest.components()]
    if len(after) < 2:
        raise RuntimeError(f"vertex cut {cut} does not separate")
    return len(cut), CutResult("vertex", len(cut), cut, _sides(after))


def is_k_vertex_connected(G: EmbeddedGraph, k: int) -> bool:
    """Deleting any fewer than k vertices leaves a nonempty connected graph.

    Taken literally this makes K_m k-connected for every k <= m, one more
    than the count reported by :func:`vertex_connectivity`.
    """
    if k <= 0:
        return True
    if G.m == 0:
        return False
    if _is_complete(G):
        return k <= G.m
    return vertex_connectivity(G)[0] >= k


# ---------------------------------------------------------------------------
# trimming
# ---------------------------------------------------------------------------

def is_k_trimmed(G: EmbeddedGraph, k: int) -> bool:
    if any(d < k + 1 for d in G.degrees()):
        return False
    for comp in G.components():
        if not is_k_edge_connected(induced_subgraph(G, comp), k + 1):
            return False
    return True


@dataclass(frozen=True)
class TrimStep:
    action: str          # "vertex" or "cut"
    removed: tuple       # original labels of the vertex, or edge label pairs


def trim_with_trace(G: EmbeddedGraph, k: int, order: str = "low") -> tuple[EmbeddedGraph, list[TrimStep]]:
    """Peel low-degree vertices and small cuts until k-trimmed (or empty).

    ``order="low"`` deletes the lowest-index candidate first and scans
    components in order; ``"high"`` does the opposite and also searches
    cuts on a reversed labelling.  Both must end at the same subgraph.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if order not in ("low", "high"):
        raise ValueError("order must be 'low' or 'high'")
    steps: list[TrimStep] = []
    H = G
    while H.m > 0:
        low = [v for v, d in enumerate(H.degrees(), 1) if d <= k]
        if low:
            t = low[0] if order == "low" else low[-1]
            steps.append(TrimStep("vertex", (H.labels[t - 1],)))
            H = delete_vertex(H, t)
            continue
        comps = H.components()
        if order == "high":
            comps = comps[::-1]
        for comp in comps:
            sub = induced_subgraph(H, comp)
            cut = _min_edge_cut(sub, reverse=(order == "high"))
            if len(cut) <= k:
                lifted = [(comp[i - 1], comp[j - 1]) for i, j in cut]
                steps.append(TrimStep("cut", tuple((H.labels[i - 1], H.labels[j - 1]) for i, j in lifted)))
                H = delete_edges(H, lifted)
                break
        else:
            break
    return H, steps


def trim(G: EmbeddedGraph, k: int, order: str = "low") -> EmbeddedGraph:
    return trim_with_trace(G, k, order)[0]


def same_subgraph(A: EmbeddedGraph, B: EmbeddedGraph) -> bool:
    """Equal as subgraphs of a common parent (compared through labels)."""
    def key(H):
        return (frozenset(H.labels),
                frozenset((H.labels[i - 1], H.labels[j - 1]) for i, j in H.edges))
    return key(A) == key(B)


# ---------------------------------------------------------------------------
# A_d class
# ---------------------------------------------------------------------------

def count_nd(G: EmbeddedGraph, d: int) -> int:
    return sum(1 for x in G.degrees() if x == d)


def is_type_Ad(G: EmbeddedGraph, d: int) -> bool:
    if d < 2:
        raise ValueError("d must be >= 2")
    degs = G.degrees()
    if G.m == 0 or any(x not in (d, d - 1) for x in degs):
        return False
    for comp in G.components():
        if not any(degs[v - 1] == d - 1 for v in comp):
            return False
        if not is_k_edge_connected(induced_subgraph(G, comp), d - 1):
            return False
    return True


def minimal_disconnecting(G: EmbeddedGraph, F: Iterable[Edge]) -> tuple[bool, str]:
    """Does removing F leave exactly two components, with no proper subset disconnecting?"""
    F = [tuple(sorted(e)) for e in F]
    base = G.n_components()
    after = delete_edges(G, F).n_components()
    if after != base + 1:
        return False, f"removing F gives {after} components (expected {base + 1})"
    for e in F:
        rest = [f for f in F if f != e]
        if delete_edges(G, rest).n_components() != base:
            return False, f"F without {e} already disconnects"
    return True, "ok"
