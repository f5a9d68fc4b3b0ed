"""Simple graphs with a rational plane moment map in general position."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact import BivarPoly, rat, rat_str

Point = tuple[Fraction, Fraction]
Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input."""


class CollinearTriple(GraphError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"vertices {i}, {j}, {k} are collinear")
        self.triple = (i, j, k)


class DuplicatePoint(GraphError):
    def __init__(self, i: int, j: int):
        super().__init__(f"vertices {i} and {j} share a position")
        self.pair = (i, j)


class BadEdge(GraphError):
    pass


class BadShear(GraphError):
    pass


class GenerationFailed(GraphError):
    pass


def _norm_edge(e: Sequence[int], m: int) -> Edge:
    if len(e) != 2:
        raise BadEdge(f"edge {e!r} does not have two endpoints")
    i, j = int(e[0]), int(e[1])
    if i == j:
        raise BadEdge(f"loop at vertex {i}")
    if not (1 <= i <= m and 1 <= j <= m):
        raise BadEdge(f"edge {(i, j)} out of range 1..{m}")
    return (i, j) if i < j else (j, i)


def _normalize_edges(edges: Iterable[Sequence[int]], m: int) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for e in edges:
        ne = _norm_edge(e, m)
        if ne in seen:
            raise BadEdge(f"duplicate edge {ne}")
        seen.add(ne)
    return tuple(sorted(seen))


def _cross(a: Point, b: Point, c: Point) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def check_general_position(phi: Sequence[Point]) -> None:
    """Raise DuplicatePoint / CollinearTriple (1-based indices)."""
    index: dict[Point, int] = {}
    for i, p in enumerate(phi, 1):
        if p in index:
            raise DuplicatePoint(index[p], i)
        index[p] = i
    for i, j, k in combinations(range(len(phi)), 3):
        if _cross(phi[i], phi[j], phi[k]) == 0:
            raise CollinearTriple(i + 1, j + 1, k + 1)


def slope(p_i: Point, p_j: Point) -> Fraction:
    """a_ij with alpha(e_ij) = y - a_ij x."""
    return -(p_j[0] - p_i[0]) / (p_j[1] - p_i[1])


@dataclass(frozen=True)
class EmbeddedGraph:
    """A validated graph.  Vertices are 1..m; ``edges`` sorted, i < j.

    ``phi`` is ``None`` only for slope fixtures (``unchecked=True``), where
    the edge slopes are taken as given and realizability is not checked.
    ``labels`` names each vertex in the graph it was cut from.
    """

    m: int
    edges: tuple[Edge, ...]
    phi: tuple[Point, ...] | None
    slopes: dict[Edge, Fraction] = field(compare=False)
    shear_t: Fraction = Fraction(0)
    unchecked: bool = False
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.m + 1)))

    # basic combinatorics
    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> list[int]:
        return sorted([b for a, b in self.edges if a == i] + [a for a, b in self.edges if b == i])

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * (self.m + 1)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg[1:])

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        parent = list(range(self.m + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for v in range(1, self.m + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def n_components(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.m > 0 and self.n_components() == 1

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def label(self, e: Edge) -> BivarPoly:
        """alpha(e) = y - a_e x."""
        return BivarPoly({(0, 1): 1, (1, 0): -self.slopes[e]})

    def slope_between(self, i: int, j: int) -> Fraction:
        """Slope of the segment phi(v_i)phi(v_j), edge or not."""
        if (min(i, j), max(i, j)) in self.slopes:
            return self.slopes[(min(i, j), max(i, j))]
        if self.phi is None:
            raise GraphError("slope of a non-edge needs coordinates (slope fixture)")
        i, j = min(i, j), max(i, j)
        return slope(self.phi[i - 1], self.phi[j - 1])

    # serialization
    def to_dict(self) -> dict:
        d: dict = {"m": self.m, "edges": [list(e) for e in self.edges]}
        if self.phi is not None:
            d["phi"] = [[rat_str(p), rat_str(q)] for p, q in self.phi]
        if self.unchecked:
            d["slopes"] = {f"{i}-{j}": rat_str(a) for (i, j), a in self.slopes.items()}
            d["unchecked"] = True
        if self.shear_t:
            d["shear"] = rat_str(self.shear_t)
        if self.labels != tuple(range(1, self.m + 1)):
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def describe(self) -> str:
        return f"m={self.m} |E|={self.n_edges} edges={list(self.edges)}"


def _build(m, edges, phi, shear_t=Fraction(0), labels=()) -> EmbeddedGraph:
    slopes = {(i, j): slope(phi[i - 1], phi[j - 1]) for i, j in edges}
    return EmbeddedGraph(m, tuple(edges), tuple(phi), slopes, Fraction(shear_t), False, tuple(labels))


def _second_coords_distinct(phi: Sequence[Point]) -> bool:
    return len({q for _, q in phi}) == len(phi)


def _sheared(phi: Sequence[Point], t: Fraction) -> tuple[Point, ...]:
    return tuple((p, q + t * p) for p, q in phi)


def find_shear(phi: Sequence[Point]) -> Fraction:
    """First t in 0, 1, 1/2, 1/3, ... making second coordinates distinct."""
    candidates = [Fraction(0)] + [Fraction(1, n) for n in range(1, len(phi) ** 2 + 3)]
    for t in candidates:
        if _second_coords_distinct(_sheared(phi, t)):
            return t
    raise BadShear("no shear parameter found")  # unreachable for distinct points


def validate(vertices: Sequence[Sequence], edges: Iterable[Sequence[int]], labels=()) -> EmbeddedGraph:
    """Validate coordinates and edges; shear first if second coordinates collide."""
    m = len(vertices)
    if m < 1:
        raise GraphError("a graph needs at least one vertex")
    phi = []
    for v in vertices:
        if len(v) != 2:
            raise GraphError(f"point {v!r} is not 2-dimensional")
        phi.append((rat(v[0]), rat(v[1])))
    es = _normalize_edges(edges, m)
    check_general_position(phi)
    t = find_shear(phi)
    return _build(m, es, _sheared(phi, t), t, labels)


def from_slopes(m: int, edges: Iterable[Sequence[int]], slopes: dict) -> EmbeddedGraph:
    """Slope fixture: slopes taken as given, realizability NOT checked."""
    if m < 1:
        raise GraphError("a graph needs at least one vertex")
    es = _normalize_edges(edges, m)
    table: dict[Edge, Fraction] = {}
    for key, a in slopes.items():
        if isinstance(key, str):
            i, j = (int(s) for s in key.split("-"))
        else:
            i, j = key
        table[_norm_edge((i, j), m)] = rat(a)
    missing = [e for e in es if e not in table]
    if missing:
        raise BadEdge(f"no slope given for edges {missing}")
    extra = [e for e in table if e not in es]
    if extra:
        raise BadEdge(f"slopes given for non-edges {extra}")
    return EmbeddedGraph(m, es, None, {e: table[e] for e in es}, Fraction(0), True)


def shear(G: EmbeddedGraph, t) -> EmbeddedGraph:
    """Apply (x, y) -> (x, y + t x) to the moment map."""
    if G.phi is None:
        raise GraphError("cannot shear a slope fixture")
    t = rat(t)
    phi = _sheared(G.phi, t)
    if not _second_coords_distinct(phi):
        raise BadShear(f"shear by {t} leaves colliding second coordinates")
    return _build(G.m, G.edges, phi, G.shear_t + t, G.labels)


def from_dict(d: dict, allow_unchecked: bool = True) -> EmbeddedGraph:
    if not isinstance(d, dict) or "m" not in d or "edges" not in d:
        raise GraphError("graph JSON needs 'm' and 'edges'")
    m = int(d["m"])
    if d.get("unchecked") or "phi" not in d:
        if not allow_unchecked:
            raise GraphError("slope fixtures require --slopes-unchecked")
        if "slopes" not in d:
            raise GraphError("graph JSON needs 'phi' or 'slopes'")
        return from_slopes(m, d["edges"], d["slopes"])
    if len(d["phi"]) != m:
        raise GraphError(f"'phi' has {len(d['phi'])} points but m = {m}")
    G = validate(d["phi"], d["edges"], d.get("labels", ()))
    if "shear" in d and not G.shear_t:
        # phi was written after shearing; keep the recorded parameter
        G = replace(G, shear_t=rat(d["shear"]))
    return G


def from_json(text: str, allow_unchecked: bool = True) -> EmbeddedGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from None
    return from_dict(data, allow_unchecked)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def moment_curve(m: int, start: int = 1) -> list[Point]:
    """Points (t, t^2) for t = start .. start+m-1."""
    return [(Fraction(t), Fraction(t * t)) for t in range(start, start + m)]


def complete_graph(m: int, start: int = 1) -> EmbeddedGraph:
    if m < 1:
        raise GraphError("complete_graph needs m >= 1")
    return validate(moment_curve(m, start), combinations(range(1, m + 1), 2))


def cycle_graph(m: int, start: int = 1) -> EmbeddedGraph:
    if m < 3:
        raise GraphError("cycle_graph needs m >= 3")
    edges = [(i, i + 1) for i in range(1, m)] + [(1, m)]
    return validate(moment_curve(m, start), edges)


def path_graph(m: int, start: int = 1) -> EmbeddedGraph:
    return validate(moment_curve(m, start), [(i, i + 1) for i in range(1, m)])


def edgeless_graph(m: int, start: int = 1) -> EmbeddedGraph:
    return validate(moment_curve(m, start), [])


def single_edge(start: int = 1) -> EmbeddedGraph:
    return complete_graph(2, start)


def cartesian_product(G1: EmbeddedGraph, G2: EmbeddedGraph, a=1, b=1) -> EmbeddedGraph:
    """G1 □ G2 with phi3(v_i, u_s) = a phi1(v_i) + b phi2(u_s).

    Vertex (v_i, u_s) gets index (i-1)*n + s.
    """
    a, b = rat(a), rat(b)
    if a == 0 or b == 0:
        raise GraphError("product scalars must be nonzero")
    if G1.phi is None or G2.phi is None:
        raise GraphError("products need coordinates")
    m, n = G1.m, G2.m

    def idx(i, s):
        return (i - 1) * n + s

    phi = [(a * p1 + b * p2, a * q1 + b * q2) for (p1, q1) in G1.phi for (p2, q2) in G2.phi]
    edges = [(idx(i, s), idx(i, t)) for i in range(1, m + 1) for s, t in G2.edges]
    edges += [(idx(i, s), idx(j, s)) for s in range(1, n + 1) for i, j in G1.edges]
    return validate(phi, edges)


def find_product_scalars(G1: EmbeddedGraph, G2: EmbeddedGraph, tries: int = 50) -> tuple[Fraction, Fraction]:
    """Deterministic search for (a, b) putting the product in general position."""
    for n in range(1, tries + 1):
        for a, b in ((1, n), (n, 1), (1, -n), (-n, 1)):
            try:
                cartesian_product(G1, G2, a, b)
            except CollinearTriple:
                continue
            except DuplicatePoint:
                continue
            return Fraction(a), Fraction(b)
    raise GenerationFailed("no general-position product scalars found")


def induced_subgraph(G: EmbeddedGraph, keep: Iterable[int]) -> EmbeddedGraph:
    """Subgraph on ``keep`` (relabelled 1..|keep| in increasing order)."""
    keep = sorted(set(keep))
    pos = {v: k for k, v in enumerate(keep, 1)}
    edges = tuple((pos[i], pos[j]) for i, j in G.edges if i in pos and j in pos)
    slopes = {(pos[i], pos[j]): G.slopes[(i, j)] for i, j in G.edges if i in pos and j in pos}
    phi = None if G.phi is None else tuple(G.phi[v - 1] for v in keep)
    labels = tuple(G.labels[v - 1] for v in keep)
    return EmbeddedGraph(len(keep), edges, phi, slopes, G.shear_t, G.unchecked, labels)


def delete_vertex(G: EmbeddedGraph, t: int) -> EmbeddedGraph:
    """Remove v_t and its edges.  May return the empty graph (m = 0)."""
    if not 1 <= t <= G.m:
        raise GraphError(f"vertex {t} out of range")
    return induced_subgraph(G, [v for v in range(1, G.m + 1) if v != t])


def delete_vertices(G: EmbeddedGraph, U: Iterable[int]) -> EmbeddedGraph:
    U = set(U)
    return induced_subgraph(G, [v for v in range(1, G.m + 1) if v not in U])


def delete_edges(G: EmbeddedGraph, F: Iterable[Sequence[int]]) -> EmbeddedGraph:
    F = {_norm_edge(e, G.m) for e in F}
    missing = F - set(G.edges)
    if missing:
        raise BadEdge(f"edges {sorted(missing)} not in graph")
    edges = tuple(e for e in G.edges if e not in F)
    return EmbeddedGraph(G.m, edges, G.phi, {e: G.slopes[e] for e in edges},
                         G.shear_t, G.unchecked, G.labels)


def add_edges(G: EmbeddedGraph, extra: Iterable[Sequence[int]]) -> EmbeddedGraph:
    if G.phi is None:
        raise GraphError("cannot add edges to a slope fixture")
    return _build(G.m, _normalize_edges(list(G.edges) + [tuple(e) for e in extra], G.m),
                  G.phi, G.shear_t, G.labels)


def with_edges(G: EmbeddedGraph, edges: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Same vertices and moment map, different edge set."""
    if G.phi is None:
        raise GraphError("cannot rewire a slope fixture")
    return _build(G.m, _normalize_edges(edges, G.m), G.phi, G.shear_t, G.labels)


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomSpec:
    m: int
    mode: str = "er"          # "er" (Erdos-Renyi) or "regular"
    density: float = 0.5
    degree: int = 3
    coord_range: int = 20
    max_denominator: int = 1


def _random_points(rng: random.Random, spec: RandomSpec, max_rejections: int) -> list[Point]:
    pts: list[Point] = []
    rejections = 0
    R = spec.coord_range
    while len(pts) < spec.m:
        den = rng.randint(1, spec.max_denominator)
        p = (Fraction(rng.randint(-R * den, R * den), den), Fraction(rng.randint(-R * den, R * den), den))
        bad = (
            p in pts
            or any(q[1] == p[1] for q in pts)
            or any(_cross(u, v, p) == 0 for u, v in combinations(pts, 2))
        )
        if bad:
            rejections += 1
            if rejections > max_rejections:
                raise GenerationFailed(f"could not place {spec.m} points in general position")
            continue
        pts.append(p)
    return pts


def _random_regular_edges(rng: random.Random, m: int, d: int, max_rejections: int) -> list[Edge]:
    if d < 0 or (d > 0 and d >= m) or (m * d) % 2:
        raise GenerationFailed(f"no simple {d}-regular graph on {m} vertices")
    for _ in range(max_rejections):
        stubs = [v for v in range(1, m + 1) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = [tuple(sorted(stubs[k:k + 2])) for k in range(0, len(stubs), 2)]
        if any(i == j for i, j in pairs) or len(set(pairs)) != len(pairs):
            continue
        return sorted(pairs)
    raise GenerationFailed(f"pairing model failed for d={d}, m={m}")


def random_general_position(spec: RandomSpec, seed: int, max_rejections: int = 10_000) -> EmbeddedGraph:
    """Random graph with random integer (or small-denominator) coordinates."""
    if spec.m < 1:
        raise GraphError("m must be >= 1")
    rng = random.Random(seed)
    pts = _random_points(rng, spec, max_rejections)
    if spec.mode == "regular":
        edges = _random_regular_edges(rng, spec.m, spec.degree, max_rejections)
    elif spec.mode == "er":
        edges = [e for e in combinations(range(1, spec.m + 1), 2) if rng.random() < spec.density]
    else:
        raise GraphError(f"unknown random mode {spec.mode!r}")
    return validate(pts, edges)
