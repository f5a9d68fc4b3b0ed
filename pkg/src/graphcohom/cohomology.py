"""Concrete elements of the graph cohomology module.

A degree-k element is an m-tuple of homogeneous degree-k polynomials.  Its
coefficient vector has length (k+1)m: entry ``n*m + (i-1)`` is the
coefficient of ``x^(k-n) y^n`` at vertex i, so that the edge constraints
are exactly the rows of M_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import BivarPoly, EchelonBasis, divisible_by_linear, nullspace, parse_poly
from .graph import EmbeddedGraph, Edge, GraphError, cartesian_product
from .profile import CharProfile, build_Mk, char_profile, cutoff, dim_Hk


class CountMismatch(RuntimeError):
    pass


class NonMember(RuntimeError):
    pass


@dataclass(frozen=True)
class CohomElement:
    parts: tuple[BivarPoly, ...]

    @classmethod
    def of(cls, parts: Iterable) -> "CohomElement":
        out = []
        for p in parts:
            if isinstance(p, str):
                p = parse_poly(p)
            elif not isinstance(p, BivarPoly):
                p = BivarPoly.const(p)
            out.append(p)
        return cls(tuple(out))

    @classmethod
    def constant(cls, m: int, c=1) -> "CohomElement":
        return cls(tuple(BivarPoly.const(c) for _ in range(m)))

    def __len__(self) -> int:
        return len(self.parts)

    def __mul__(self, other) -> "CohomElement":
        if isinstance(other, CohomElement):
            if len(other) != len(self):
                raise ValueError("length mismatch")
            return CohomElement(tuple(p * q for p, q in zip(self.parts, other.parts)))
        return CohomElement(tuple(p * other for p in self.parts))

    __rmul__ = __mul__

    def __add__(self, other: "CohomElement") -> "CohomElement":
        return CohomElement(tuple(p + q for p, q in zip(self.parts, other.parts)))

    def __pow__(self, n: int) -> "CohomElement":
        return CohomElement(tuple(p ** n for p in self.parts))

    def degree(self) -> int | None:
        """Common degree if homogeneous (zero parts ignored), else None."""
        degs = {p.degree() for p in self.parts if not p.is_zero()}
        if len(degs) > 1 or any(not p.is_homogeneous() for p in self.parts):
            return None
        return degs.pop() if degs else 0

    def to_json(self) -> list[str]:
        return [str(p) for p in self.parts]


@dataclass(frozen=True)
class Membership:
    ok: bool
    failing_edge: Edge | None = None
    remainder: BivarPoly | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_member(G: EmbeddedGraph, f: CohomElement | Sequence) -> Membership:
    """Edgewise divisibility of differences; reports the first failing edge."""
    if not isinstance(f, CohomElement):
        f = CohomElement.of(f)
    if len(f) != G.m:
        raise ValueError(f"expected {G.m} polynomials, got {len(f)}")
    for e in G.edges:
        i, j = e
        diff = f.parts[i - 1] - f.parts[j - 1]
        if not divisible_by_linear(diff, G.slopes[e]):
            return Membership(False, e, diff.substitute_y(G.slopes[e]))
    return Membership(True)


# ---------------------------------------------------------------------------
# vector <-> tuple encoding
# ---------------------------------------------------------------------------

def to_vector(f: CohomElement, k: int) -> tuple[Fraction, ...]:
    m = len(f)
    v = [Fraction(0)] * ((k + 1) * m)
    for i, p in enumerate(f.parts):
        for (a, b), c in p.terms.items():
            if a + b != k:
                raise ValueError(f"part {i + 1} is not homogeneous of degree {k}")
            v[b * m + i] = c
    return tuple(v)


def from_vector(v: Sequence, m: int, k: int) -> CohomElement:
    if len(v) != (k + 1) * m:
        raise ValueError("vector length does not match (k+1)m")
    parts = []
    for i in range(m):
        parts.append(BivarPoly({(k - n, n): v[n * m + i] for n in range(k + 1)}))
    return CohomElement(tuple(parts))


@dataclass(frozen=True)
class DegreeBasis:
    k: int
    vectors: tuple[tuple[Fraction, ...], ...]

    def elements(self, m: int) -> list[CohomElement]:
        return [from_vector(v, m, self.k) for v in self.vectors]


def degree_basis(G: EmbeddedGraph, k: int) -> DegreeBasis:
    """Basis of the degree-k piece: the right kernel of M_k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return DegreeBasis(k, tuple(nullspace(build_Mk(G, k))))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[tuple[int, CohomElement], ...]

    def counts(self) -> tuple[int, ...]:
        top = max((d for d, _ in self.generators), default=-1)
        out = [0] * (top + 1)
        for d, _ in self.generators:
            out[d] += 1
        return tuple(out)

    def to_json(self) -> list[dict]:
        return [{"degree": d, "element": g.to_json()} for d, g in self.generators]


def _monomials(n: int) -> list[BivarPoly]:
    return [BivarPoly.monomial(n - b, b) for b in range(n + 1)]


def _span_in_degree(generators: Iterable[tuple[int, CohomElement]], m: int, k: int) -> tuple[EchelonBasis, int]:
    """Span of all x^a y^b * g landing in degree k; also the number of products."""
    span = EchelonBasis((k + 1) * m)
    n_products = 0
    for d, g in generators:
        if d > k:
            continue
        for mono in _monomials(k - d):
            span.add(to_vector(g * mono, k))
            n_products += 1
    return span, n_products


def module_generators(G: EmbeddedGraph, profile: CharProfile | None = None) -> GeneratorSet:
    """Greedy homogeneous generators, degree by degree.

    At degree k the multiples of earlier generators are extended to a basis
    of the degree-k piece using kernel vectors in order; the new vectors are
    the degree-k generators.  Their count must match c_k.
    """
    prof = profile or char_profile(G)
    gens: list[tuple[int, CohomElement]] = []
    for k in range(prof.K + 2):
        span, _ = _span_in_degree(gens, G.m, k)
        basis = degree_basis(G, k)
        new = 0
        for v in basis.vectors:
            if span.add(v):
                gens.append((k, from_vector(v, G.m, k)))
                new += 1
        if new != prof.c_at(k):
            raise CountMismatch(f"degree {k}: found {new} generators, c_{k} = {prof.c_at(k)}")
        if len(span) != len(basis.vectors):
            raise CountMismatch(f"degree {k}: span {len(span)} != dim {len(basis.vectors)}")
    if len(gens) != G.m:
        raise CountMismatch(f"{len(gens)} generators for m = {G.m}")
    return GeneratorSet(tuple(gens))


# ---------------------------------------------------------------------------
# symplectic form
# ---------------------------------------------------------------------------

def symplectic_form(G: EmbeddedGraph) -> CohomElement:
    """(p_i x + q_i y)_i built from the stored moment map."""
    if G.phi is None:
        raise GraphError("the symplectic form needs coordinates")
    w = CohomElement(tuple(BivarPoly.linear(p, q) for p, q in G.phi))
    check = is_member(G, w)
    if not check:
        raise NonMember(f"symplectic form fails on edge {check.failing_edge}")
    return w


def power(w: CohomElement, i: int) -> CohomElement:
    if i < 0:
        raise ValueError("power must be >= 0")
    return w ** i


def omega_powers(G: EmbeddedGraph) -> list[tuple[int, CohomElement]]:
    w = symplectic_form(G)
    return [(i, power(w, i)) for i in range(G.m)]


def verify_basis(G: EmbeddedGraph, candidate: GeneratorSet | Sequence[tuple[int, CohomElement]]) -> bool:
    """True iff the candidates form a homogeneous module basis.

    Checks every degree up to (max candidate degree + cutoff): the
    multiples must be independent and fill the whole degree-k piece.
    """
    gens = list(candidate.generators if isinstance(candidate, GeneratorSet) else candidate)
    if len(gens) != G.m:
        return False
    for d, g in gens:
        nonzero = [p for p in g.parts if not p.is_zero()]
        if not nonzero or not all(p.is_homogeneous(d) for p in nonzero):
            return False
        if not is_member(G, g):
            return False
    top = max((d for d, _ in gens), default=0) + cutoff(G)
    for k in range(top + 1):
        span, n_products = _span_in_degree(gens, G.m, k)
        if len(span) != n_products or len(span) != dim_Hk(G, k):
            return False
    return True


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def kunneth_map(G1: EmbeddedGraph, G2: EmbeddedGraph, a, b, u: CohomElement, v: CohomElement,
                product: EmbeddedGraph | None = None) -> CohomElement:
    """(f_i)_i (x) (g_s)_s -> (f_i g_s) in the product vertex order.

    If the product graph had to be sheared, the image is transported along
    the same linear change of variables.
    """
    if len(u) != G1.m or len(v) != G2.m:
        raise ValueError("element lengths do not match the factor graphs")
    G3 = product or cartesian_product(G1, G2, a, b)
    parts = tuple((f * g).shear_x(G3.shear_t) for f in u.parts for g in v.parts)
    return CohomElement(parts)


def convolve(c1: Sequence[int], c2: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(c1) + len(c2) - 1)
    for i, x in enumerate(c1):
        for j, y in enumerate(c2):
            out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class KunnethReport:
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    c3: tuple[int, ...]
    convolution: tuple[int, ...]
    samples: int
    multiplicative_ok: bool

    @property
    def ok(self) -> bool:
        return self.c3 == self.convolution and self.multiplicative_ok

    def to_dict(self) -> dict:
        return {
            "c1": list(self.c1), "c2": list(self.c2), "c3": list(self.c3),
            "convolution": list(self.convolution), "samples": self.samples,
            "multiplicative_ok": self.multiplicative_ok,
        }


def kunneth_check(G1: EmbeddedGraph, G2: EmbeddedGraph, a, b) -> KunnethReport:
    """Convolution identity plus membership of mapped generator pairs."""
    G3 = cartesian_product(G1, G2, a, b)
    p1, p2, p3 = char_profile(G1), char_profile(G2), char_profile(G3)
    gens1 = [g for _, g in module_generators(G1, p1).generators]
    gens2 = [g for _, g in module_generators(G2, p2).generators]
    one1, one2 = CohomElement.constant(G1.m), CohomElement.constant(G2.m)
    multiplicative_ok = True
    samples = 0
    for u in gens1:
        pu = kunneth_map(G1, G2, a, b, u, one2, G3)
        for v in gens2:
            image = kunneth_map(G1, G2, a, b, u, v, G3)
            samples += 1
            check = is_member(G3, image)
            if not check:
                raise NonMember(f"image of a generator pair fails on edge {check.failing_edge}")
            pv = kunneth_map(G1, G2, a, b, one1, v, G3)
            if pu * pv != image:
                multiplicative_ok = False
    return KunnethReport(p1.c, p2.c, p3.c, convolve(p1.c, p2.c), samples, multiplicative_ok)
