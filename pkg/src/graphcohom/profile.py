"""Edge-vector matrices, characteristic numbers and Betti-type indices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RatMatrix, rank, rat
from .graph import EmbeddedGraph, Edge, GraphError


class InternalInconsistency(RuntimeError):
    """Two independent routes to the same number disagree (a bug, not bad input)."""


class NonGenericDirection(GraphError):
    pass


class PropertyViolated(RuntimeError):
    pass


def pair_vector(m: int, i: int, j: int, a, k: int) -> tuple[Fraction, ...]:
    """Length (k+1)m vector with +a^b at column b*m + i, -a^b at b*m + j.

    Columns are 1-based in the formula, 0-based in the returned tuple.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    v = [Fraction(0)] * ((k + 1) * m)
    power = Fraction(1)
    for b in range(k + 1):
        v[b * m + i - 1] = power
        v[b * m + j - 1] = -power
        power *= a
    return tuple(v)


def edge_vector(G: EmbeddedGraph, e: Edge, k: int) -> tuple[Fraction, ...]:
    """Row of M_k for the edge e = (i, j), i < j."""
    i, j = e
    return pair_vector(G.m, i, j, G.slopes[(i, j)], k)


def build_Mk(G: EmbeddedGraph, k: int) -> RatMatrix:
    """|E| x (k+1)m matrix, rows in lexicographic edge order."""
    cols = (k + 1) * G.m
    rows = [edge_vector(G, e, k) for e in G.edges]
    return RatMatrix(len(rows), cols, tuple(x for r in rows for x in r))


def cutoff(G: EmbeddedGraph) -> int:
    """Degree beyond which s_k vanishes: max(0, max degree - 1)."""
    return max(0, G.max_degree() - 1)


def r_k(G: EmbeddedGraph, k: int) -> int:
    """Rank of M_k, computed exactly for every k (r_{-1} = 0)."""
    if k < 0 or not G.edges:
        return 0
    return rank(build_Mk(G, k))


def s_k(G: EmbeddedGraph, k: int) -> int:
    """|E| - r_k, with s_{-1} = |E|."""
    return G.n_edges - r_k(G, k)


def dim_Hk(G: EmbeddedGraph, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return (k + 1) * G.m - r_k(G, k)


@dataclass(frozen=True)
class CharProfile:
    """r_k (k = 0..K), s_k (k = -1..K), c_k (trailing zeros dropped)."""

    r: tuple[int, ...]
    s: tuple[int, ...]
    c: tuple[int, ...]
    pi0: int
    K: int
    m: int
    n_edges: int

    def c_at(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def r_at(self, k: int) -> int:
        if k < 0:
            return 0
        return self.r[k] if k <= self.K else self.n_edges

    def s_at(self, k: int) -> int:
        if k < 0:
            return self.n_edges
        return self.s[k + 1] if k <= self.K else 0

    def to_dict(self) -> dict:
        return {"r": list(self.r), "s": list(self.s), "c": list(self.c), "pi0": self.pi0, "K": self.K}


def char_profile(G: EmbeddedGraph) -> CharProfile:
    m, n_e = G.m, G.n_edges
    K = cutoff(G)
    pi0 = G.n_components()
    if n_e == 0:
        r = (0,) * (K + 1)
    else:
        r = tuple(rank(build_Mk(G, k)) for k in range(K + 1))
    s = (n_e,) + tuple(n_e - x for x in r)

    def rr(k):
        return 0 if k < 0 else (r[k] if k <= K else n_e)

    c = [m - r[0]] + [2 * rr(k - 1) - rr(k) - rr(k - 2) for k in range(1, K + 2)]

    # independent routes must agree
    if c[0] != pi0:
        raise InternalInconsistency(f"pi0 = {pi0} but m - r0 = {c[0]}")
    if s[-1] != 0:
        raise InternalInconsistency(f"s_K = {s[-1]} != 0 at K = {K}")
    for k in range(K + 1):
        lhs = sum((k + 1 - n) * c[n] for n in range(k + 1))
        if lhs != (k + 1) * m - r[k]:
            raise InternalInconsistency(f"recursive formula fails at k = {k}")
    if any(x < 0 for x in c):
        raise InternalInconsistency(f"negative characteristic number in {c}")
    if sum(c) != m or sum(i * x for i, x in enumerate(c)) != n_e:
        raise InternalInconsistency(f"sum rules fail for c = {c}")

    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return CharProfile(r, s, tuple(c), pi0, K, m, n_e)


# ---------------------------------------------------------------------------
# generic-direction indices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BettiData:
    sigma: tuple[int, ...]
    beta: tuple[int, ...]
    xi: tuple[Fraction, Fraction]
    xi_invariant: bool  # False: reported for a non-regular graph

    def to_dict(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "beta": list(self.beta),
            "xi": [str(self.xi[0]), str(self.xi[1])],
            "xi_invariant": self.xi_invariant,
        }


def _heights(G: EmbeddedGraph, xi) -> list[Fraction]:
    return [p * xi[0] + q * xi[1] for p, q in G.phi]


def is_generic(G: EmbeddedGraph, xi) -> bool:
    h = _heights(G, xi)
    return len(set(h)) == len(h)


def default_direction(G: EmbeddedGraph) -> tuple[Fraction, Fraction]:
    N = 1
    while True:
        xi = (Fraction(1), Fraction(N))
        if is_generic(G, xi):
            return xi
        N += 1


def betti_generic(G: EmbeddedGraph, xi: Sequence | None = None) -> BettiData:
    if G.phi is None:
        raise GraphError("generic-direction indices need coordinates")
    if xi is None:
        xi = default_direction(G)
    else:
        xi = (rat(xi[0]), rat(xi[1]))
        if not is_generic(G, xi):
            raise NonGenericDirection(f"direction {xi} is not generic")
    h = _heights(G, xi)
    sigma = [0] * G.m
    for i, j in G.edges:
        if h[j - 1] < h[i - 1]:
            sigma[i - 1] += 1
        else:
            sigma[j - 1] += 1
    beta = [0] * (max(sigma, default=0) + 1)
    for x in sigma:
        beta[x] += 1
    return BettiData(tuple(sigma), tuple(beta), xi, G.is_regular())


# ---------------------------------------------------------------------------
# ordering indices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderingData:
    """mu is indexed by original vertex (mu[v-1]); b by index value."""

    ordering: tuple[int, ...]
    mu: tuple[int, ...]
    b: tuple[int, ...]

    def b_at(self, k: int) -> int:
        return self.b[k] if 0 <= k < len(self.b) else 0

    def to_dict(self) -> dict:
        return {"ordering": list(self.ordering), "mu": list(self.mu), "b": list(self.b)}


def ordering_indices(G: EmbeddedGraph, ordering: Sequence[int] | None = None) -> OrderingData:
    """``ordering[p]`` is the vertex placed at position p+1."""
    if ordering is None:
        ordering = range(1, G.m + 1)
    ordering = tuple(int(v) for v in ordering)
    if sorted(ordering) != list(range(1, G.m + 1)):
        raise GraphError(f"{list(ordering)} is not a permutation of 1..{G.m}")
    pos = {v: p for p, v in enumerate(ordering)}
    mu = [0] * G.m
    for i, j in G.edges:
        first = i if pos[i] < pos[j] else j
        mu[first - 1] += 1
    b = [0] * (max(mu, default=0) + 1)
    for x in mu:
        b[x] += 1
    return OrderingData(ordering, tuple(mu), tuple(b))


@dataclass(frozen=True)
class OrderingBoundRow:
    k: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def check_ordering_bound(G: EmbeddedGraph, ordering: Sequence[int] | None = None,
                         profile: CharProfile | None = None) -> list[OrderingBoundRow]:
    """Weighted partial sums of c against those of b, for k = 0..K+1."""
    prof = profile or char_profile(G)
    od = ordering_indices(G, ordering)
    rows = []
    for k in range(prof.K + 2):
        lhs = sum((k + 1 - i) * prof.c_at(i) for i in range(k + 1))
        rhs = sum((k + 1 - i) * od.b_at(i) for i in range(k + 1))
        rows.append(OrderingBoundRow(k, lhs, rhs))
    bad = [row for row in rows if not row.holds]
    if bad:
        raise PropertyViolated(f"weighted sums violated at k = {[row.k for row in bad]}")
    return rows
