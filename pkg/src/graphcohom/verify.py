"""Executable checks of the structural results on concrete graphs.

Every check returns a :class:`VerifyReport`.  Conditional results report
``"vacuous"`` when their hypotheses fail; a ``"fail"`` verdict means the
claimed relation was violated on the instance and carries enough witness
data (the graph itself plus parameters) to reproduce it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cohomology import kunneth_check, module_generators, omega_powers, verify_basis
from .exact import EchelonBasis, RatMatrix, left_nullspace, rank
from .graph import (
    EmbeddedGraph,
    GraphError,
    RandomSpec,
    complete_graph,
    delete_edges,
    delete_vertex,
    find_product_scalars,
    induced_subgraph,
    random_general_position,
)
from .profile import (
    PropertyViolated,
    build_Mk,
    char_profile,
    check_ordering_bound,
    pair_vector,
    r_k,
    s_k,
)
from .structure import (
    count_nd,
    edge_connectivity,
    is_k_edge_connected,
    is_k_vertex_connected,
    is_type_Ad,
    minimal_disconnecting,
    same_subgraph,
    trim,
    vertex_connectivity,
)


class PreconditionUnmet(ValueError):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class VerifyReport:
    check: str
    instance: str
    relation: str
    lhs: object
    rhs: object
    verdict: str                     # pass | fail | vacuous | precondition
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "vacuous")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "relation": self.relation,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _report(check, G, name, relation, lhs, rhs, holds, **witness) -> VerifyReport:
    witness = {"graph": G.to_dict(), **witness}
    return VerifyReport(check, name or G.describe(), relation, lhs, rhs, "pass" if holds else "fail", witness)


def _vacuous(check, G, name, relation, reason) -> VerifyReport:
    return VerifyReport(check, name or G.describe(), relation, None, None, "vacuous", {"reason": reason})


# ---------------------------------------------------------------------------
# deletion
# ---------------------------------------------------------------------------

def verify_deleting_lemma(G: EmbeddedGraph, t: int, k: int, name: str = "") -> VerifyReport:
    """s_k unchanged by deleting a vertex of degree <= k+1."""
    lam = G.degree(t)
    if lam > k + 1:
        raise PreconditionUnmet(f"degree of v{t} is {lam} > k+1 = {k + 1}")
    before, after = s_k(G, k), s_k(delete_vertex(G, t), k)
    return _report("deleting_lemma", G, name, f"s_{k}(G) = s_{k}(G - v{t})", before, after,
                   before == after, t=t, k=k, degree=lam)


def verify_deleting_corollary(G: EmbeddedGraph, t: int, k: int, name: str = "") -> VerifyReport:
    lam = G.degree(t)
    diff = s_k(G, k) - s_k(delete_vertex(G, t), k)
    bound = max(lam - k - 1, 0)
    return _report("deleting_corollary", G, name, f"0 <= s_{k}(G) - s_{k}(G - v{t}) <= {bound}",
                   diff, bound, 0 <= diff <= bound, t=t, k=k, degree=lam)


# ---------------------------------------------------------------------------
# disconnection
# ---------------------------------------------------------------------------

def verify_disconnecting_lemma(G: EmbeddedGraph, F: Sequence, k: int, name: str = "") -> VerifyReport:
    """s_k is additive over the two sides of a minimal disconnecting set F."""
    F = [tuple(sorted(e)) for e in F]
    if not G.is_connected():
        raise PreconditionUnmet("graph is not connected")
    ok, why = minimal_disconnecting(G, F)
    if not ok:
        raise PreconditionUnmet(why)
    if k < len(F) - 1:
        raise PreconditionUnmet(f"k = {k} < |F| - 1 = {len(F) - 1}")
    H = delete_edges(G, F)
    side1, side2 = H.components()
    G1, G2 = induced_subgraph(H, side1), induced_subgraph(H, side2)
    lhs = s_k(G, k)
    parts = (s_k(G1, k), s_k(G2, k))
    return _report("disconnecting_lemma", G, name, f"s_{k}(G) = s_{k}(G1) + s_{k}(G2)", lhs, sum(parts),
                   lhs == sum(parts), F=F, k=k, sides=[side1, side2], parts=parts)


# ---------------------------------------------------------------------------
# sum rules (recomputed from ranks through the recursive formula)
# ---------------------------------------------------------------------------

def _c_from_recursion(G: EmbeddedGraph, top: int) -> list[int]:
    """Solve sum_{n<=k} (k+1-n) c_n = (k+1)m - r_k for c_0..c_top."""
    c: list[int] = []
    for k in range(top + 1):
        acc = sum((k + 1 - n) * c[n] for n in range(k))
        c.append((k + 1) * G.m - r_k(G, k) - acc)
    return c


def verify_sum_rules(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    top = G.max_degree() + 2
    c = _c_from_recursion(G, top)
    tail_zero = all(x == 0 for x in c[G.max_degree() + 1:])
    lhs = (sum(c), sum(i * x for i, x in enumerate(c)))
    rhs = (G.m, G.n_edges)
    prof_c = list(char_profile(G).c)
    trimmed = list(c)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()
    holds = lhs == rhs and tail_zero and trimmed == prof_c
    return _report("sum_rules", G, name, "(sum c_k, sum k c_k) = (m, |E|)", lhs, rhs, holds,
                   c_recursive=c, c_profile=prof_c)


# ---------------------------------------------------------------------------
# connectivity theorems
# ---------------------------------------------------------------------------

def _regular_hypotheses(G: EmbeddedGraph) -> tuple[int | None, str]:
    if not G.is_connected():
        return None, "not connected"
    if not G.is_regular():
        return None, "not regular"
    d = G.degrees()[0]
    c_d = char_profile(G).c_at(d)
    if c_d != 1:
        return None, f"c_{d} = {c_d} != 1"
    return d, ""


def verify_edge_conn_theorem(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    relation = "connected d-regular with c_d = 1  =>  d-edge-connected"
    d, why = _regular_hypotheses(G)
    if d is None:
        return _vacuous("edge_conn_theorem", G, name, relation, why)
    lam = edge_connectivity(G)[0] if G.m >= 2 else None
    return _report("edge_conn_theorem", G, name, relation, lam, d, is_k_edge_connected(G, d), d=d)


def verify_vertex_conn_theorem(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    relation = "connected d-regular with c_d = 1  =>  (ceil(d/2)+1)-vertex-connected"
    d, why = _regular_hypotheses(G)
    if d is None:
        return _vacuous("vertex_conn_theorem", G, name, relation, why)
    need = math.ceil(d / 2) + 1
    kappa = vertex_connectivity(G)[0] if G.m >= 2 else None
    return _report("vertex_conn_theorem", G, name, relation, kappa, need,
                   is_k_vertex_connected(G, need), d=d)


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def verify_bound_theorem(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    relation = "c_(d-1) <= (m-2)/(d-1)"
    d, why = _regular_hypotheses(G)
    if d is None:
        return _vacuous("bound_theorem", G, name, relation, why)
    if d < 2:
        return _vacuous("bound_theorem", G, name, relation, f"d = {d} < 2")
    lhs = char_profile(G).c_at(d - 1)
    rhs = Fraction(G.m - 2, d - 1)
    return _report("bound_theorem", G, name, relation, lhs, rhs, lhs <= rhs, d=d)


def verify_type_Ad_bound(G: EmbeddedGraph, d: int, name: str = "") -> VerifyReport:
    """s_(d-3) <= n_d/(d-1) + pi_0 for graphs of type A_d."""
    if not is_type_Ad(G, d):
        raise PreconditionUnmet(f"graph is not of type A_{d}")
    lhs = s_k(G, d - 3)
    n_d = count_nd(G, d)
    rhs = Fraction(n_d, d - 1) + G.n_components()
    return _report("type_Ad_bound", G, name, f"s_{d - 3} <= n_{d}/{d - 1} + pi0", lhs, rhs, lhs <= rhs,
                   d=d, n_d=n_d, pi0=G.n_components())


# ---------------------------------------------------------------------------
# span self-containment
# ---------------------------------------------------------------------------

def span_intersection_with_support(G: EmbeddedGraph, U: Iterable[int], k: int) -> list[tuple[Fraction, ...]]:
    """Basis of span{edge vectors} ∩ {vectors vanishing off U}."""
    U = set(U)
    M = build_Mk(G, k)
    if M.rows == 0:
        return []
    outside = [b * G.m + v - 1 for b in range(k + 1) for v in range(1, G.m + 1) if v not in U]
    if outside:
        relations = left_nullspace(M.select_columns(outside))
    else:
        relations = [tuple(Fraction(int(i == j)) for j in range(M.rows)) for i in range(M.rows)]
    span = EchelonBasis(M.cols)
    out = []
    for c in relations:
        w = tuple(sum(ci * M[r, col] for r, ci in enumerate(c) if ci) for col in range(M.cols))
        if span.add(w):
            out.append(w)
    return out


def complete_on_vectors(G: EmbeddedGraph, U: Iterable[int], k: int) -> list[tuple[Fraction, ...]]:
    U = sorted(set(U))
    return [pair_vector(G.m, i, j, G.slope_between(i, j), k) for n, i in enumerate(U) for j in U[n + 1:]]


def verify_self_containment(G: EmbeddedGraph, U: Iterable[int], k: int, name: str = "") -> VerifyReport:
    U = sorted(set(U))
    if not U:
        raise PreconditionUnmet("U must be nonempty")
    inter = span_intersection_with_support(G, U, k)
    KU = complete_on_vectors(G, U, k)
    cols = (k + 1) * G.m
    r_ku = rank(RatMatrix.from_rows(KU, cols)) if KU else 0
    r_both = rank(RatMatrix.from_rows(KU + inter, cols)) if KU or inter else 0
    # dim(I ∩ span K(U)) = dim I + dim span K(U) - dim(I + span K(U))
    contained = len(inter) + r_ku - r_both
    return _report("self_containment", G, name, "span(E) ∩ W_U ⊆ span(K(U))", len(inter), contained,
                   contained == len(inter), U=U, k=k)


# ---------------------------------------------------------------------------
# products, complete graphs, orderings, trimming, generators
# ---------------------------------------------------------------------------

def verify_kunneth(G1: EmbeddedGraph, G2: EmbeddedGraph, a, b, name: str = "") -> VerifyReport:
    rep = kunneth_check(G1, G2, a, b)
    return VerifyReport("kunneth", name or f"({G1.describe()}) x ({G2.describe()})",
                        "c(G1 □ G2) = c(G1) * c(G2)", rep.c3, rep.convolution,
                        "pass" if rep.ok else "fail",
                        {"G1": G1.to_dict(), "G2": G2.to_dict(), "a": str(a), "b": str(b), **rep.to_dict()})


def verify_omega_basis(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    if G.n_edges != G.m * (G.m - 1) // 2:
        raise PreconditionUnmet("graph is not complete")
    if G.m > 5:
        raise PreconditionUnmet("omega basis check limited to m <= 5")
    ok = verify_basis(G, omega_powers(G))
    return _report("omega_basis", G, name, "{omega^i : i < m} is a module basis", ok, True, ok)


def verify_ordering_bound(G: EmbeddedGraph, ordering: Sequence[int] | None = None, name: str = "") -> VerifyReport:
    try:
        rows = check_ordering_bound(G, ordering)
    except PropertyViolated as exc:
        return _report("ordering_bound", G, name, "weighted c sums <= weighted b sums", str(exc), None,
                       False, ordering=list(ordering or range(1, G.m + 1)))
    return _report("ordering_bound", G, name, "weighted c sums <= weighted b sums",
                   [r.lhs for r in rows], [r.rhs for r in rows], True,
                   ordering=list(ordering or range(1, G.m + 1)))


def verify_trim(G: EmbeddedGraph, k: int, name: str = "") -> VerifyReport:
    """Idempotent, independent of deletion order, and preserves s_(k-1)."""
    T = trim(G, k)
    T2 = trim(G, k, order="high")
    again = trim(T, k)
    idempotent = same_subgraph(again, T)
    order_free = same_subgraph(T, T2)
    before, after = s_k(G, k - 1), s_k(T, k - 1)
    holds = idempotent and order_free and before == after
    return _report("trim", G, name, f"trim idempotent, order-free, s_{k - 1} preserved", before, after, holds,
                   k=k, idempotent=idempotent, order_independent=order_free,
                   trimmed_vertices=list(T.labels))


def verify_generators(G: EmbeddedGraph, name: str = "") -> VerifyReport:
    prof = char_profile(G)
    counts = module_generators(G, prof).counts()
    counts = tuple(list(counts) + [0] * (len(prof.c) - len(counts)))
    return _report("generators", G, name, "generator counts = c", counts, prof.c, counts == prof.c)


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

def random_corpus(seed: int, count: int = 100, max_m: int = 10) -> list[tuple[str, EmbeddedGraph]]:
    """Deterministic mix of Erdos-Renyi and regular instances."""
    out = []
    for n in range(count):
        s = seed * 100_003 + n
        m = 2 + n % (max_m - 1)
        if n % 3 == 2 and m >= 4:
            d = 3 if m % 2 == 0 else 2 + 2 * (n % 2)
            if d >= m:
                d = 2
            spec = RandomSpec(m, "regular", degree=d)
        else:
            spec = RandomSpec(m, "er", density=0.25 + 0.5 * ((n * 7) % 10) / 10)
        out.append((f"random[{seed}:{n}]", random_general_position(spec, s)))
    return out


def build_corpus(name: str, seed: int = 1) -> list[tuple[str, EmbeddedGraph]]:
    from .fixtures import fixture_corpus

    if name == "default":
        return fixture_corpus() + random_corpus(seed, 40)
    if name == "fixtures":
        return fixture_corpus()
    if name == "random":
        return random_corpus(seed)
    if name.startswith("complete:"):
        top = int(name.split(":", 1)[1])
        return [(f"K{m}", complete_graph(m)) for m in range(1, top + 1)]
    if name == "empty":
        return []
    raise ValueError(f"unknown corpus {name!r}")


def instance_checks(name: str, G: EmbeddedGraph) -> list[Callable[[], VerifyReport]]:
    """All applicable checks for one instance, as deferred calls."""
    checks: list[Callable[[], VerifyReport]] = [lambda: verify_sum_rules(G, name)]
    checks.append(lambda: verify_generators(G, name))
    checks.append(lambda: verify_ordering_bound(G, None, name))
    checks.append(lambda: verify_ordering_bound(G, list(range(G.m, 0, -1)), name))
    K = max(0, G.max_degree() - 1)
    for t in range(1, G.m + 1):
        lam = G.degree(t)
        checks.append(lambda t=t, lam=lam: verify_deleting_lemma(G, t, max(lam - 1, 0), name))
        checks.append(lambda t=t: verify_deleting_corollary(G, t, 0, name))
        if K > 0:
            checks.append(lambda t=t: verify_deleting_corollary(G, t, K, name))
    if G.phi is None:
        return checks
    if G.is_connected() and G.m >= 2:
        def disconnecting():
            size, cut = edge_connectivity(G)
            return verify_disconnecting_lemma(G, cut.items, max(size - 1, 0), name)
        checks.append(disconnecting)
    checks.append(lambda: verify_edge_conn_theorem(G, name))
    checks.append(lambda: verify_vertex_conn_theorem(G, name))
    checks.append(lambda: verify_bound_theorem(G, name))
    degs = set(G.degrees())
    if G.m and len(degs) <= 2 and max(degs) >= 2:
        d = max(degs)
        if is_type_Ad(G, d):
            checks.append(lambda: verify_type_Ad_bound(G, d, name))
    half = list(range(1, (G.m + 1) // 2 + 1))
    checks.append(lambda: verify_self_containment(G, half, 1, name))
    checks.append(lambda: verify_trim(G, 1, name))
    checks.append(lambda: verify_trim(G, 2, name))
    if G.n_edges == G.m * (G.m - 1) // 2 and G.m <= 5:
        checks.append(lambda: verify_omega_basis(G, name))
    return checks


def _run(check: Callable[[], VerifyReport], fallback_name: str) -> VerifyReport:
    try:
        return check()
    except PreconditionUnmet as exc:
        return VerifyReport("precondition", fallback_name, "", None, None, "precondition", {"error": str(exc)})


def run_suite(corpus: str | list[tuple[str, EmbeddedGraph]] = "default", seed: int = 1,
              halt_on_fail: bool = True, products: bool = True):
    """Yield reports for every applicable check over the corpus, in order."""
    from .fixtures import product_pairs

    instances = build_corpus(corpus, seed) if isinstance(corpus, str) else list(corpus)
    for name, G in instances:
        for check in instance_checks(name, G):
            rep = _run(check, name)
            yield rep
            if rep.verdict == "fail" and halt_on_fail:
                return
    if products and instances:
        for name, G1, G2, a, b in product_pairs():
            rep = _run(lambda: verify_kunneth(G1, G2, a, b, name), name)
            yield rep
            if rep.verdict == "fail" and halt_on_fail:
                return
        for n in range(5 if corpus != "fixtures" else 0):
            G1 = random_general_position(RandomSpec(2 + n % 3, "er", 0.7), seed * 7919 + 2 * n)
            G2 = random_general_position(RandomSpec(2 + (n + 1) % 3, "er", 0.7), seed * 7919 + 2 * n + 1)
            try:
                a, b = find_product_scalars(G1, G2)
            except GraphError:
                continue
            rep = _run(lambda: verify_kunneth(G1, G2, a, b, f"random-product[{seed}:{n}]"), "product")
            yield rep
            if rep.verdict == "fail" and halt_on_fail:
                return


def exit_code(reports: Iterable[VerifyReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if "fail" in verdicts:
        return 1
    if "precondition" in verdicts:
        return 2
    return 0
