"""Exact rational scalars, bivariate polynomials and dense matrices.

Rationals are plain :class:`fractions.Fraction` values; ``Rat`` is an alias
kept for readability in signatures.  Everything here is immutable and pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a Fraction.

    Floats are rejected: all inputs must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(q: Fraction) -> str:
    """Canonical ``"p/q"`` or ``"p"`` form."""
    return str(Fraction(q))


# ---------------------------------------------------------------------------
# Bivariate polynomials
# ---------------------------------------------------------------------------

class BivarPoly:
    """Polynomial in x, y with rational coefficients.

    Stored as a map ``(deg_x, deg_y) -> coefficient`` with no zero entries.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("negative exponent")
            key = (int(a), int(b))
            acc[key] = acc.get(key, Fraction(0)) + rat(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BivarPoly":
        return cls({(a, b): c})

    @classmethod
    def linear(cls, p, q) -> "BivarPoly":
        """``p*x + q*y``."""
        return cls({(1, 0): p, (0, 1): q})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def is_homogeneous(self, k: int | None = None) -> bool:
        degs = {a + b for a, b in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return k is None or degs == {k}

    # ring operations
    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            other = BivarPoly.const(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            other = BivarPoly.const(other)
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            c = rat(other)
            return BivarPoly({k: c * v for k, v in self._terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivarPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BivarPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_y(self, a) -> "BivarPoly":
        """Return p(x, a*x) as a polynomial in x alone."""
        a = rat(a)
        out: dict[tuple[int, int], Fraction] = {}
        for (dx, dy), c in self._terms.items():
            key = (dx + dy, 0)
            out[key] = out.get(key, Fraction(0)) + c * a ** dy
        return BivarPoly(out)

    def shear_x(self, t) -> "BivarPoly":
        """Return p(x + t*y, y)."""
        t = rat(t)
        if not t:
            return self
        shifted = BivarPoly({(1, 0): 1, (0, 1): t})
        out = BivarPoly()
        for (a, b), c in self._terms.items():
            out = out + (shifted ** a) * BivarPoly({(0, b): c})
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BivarPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        # x-major descending, matching the x^k, x^(k-1)y, ... ordering
        for (a, b) in sorted(self._terms, key=lambda t: (-(t[0] + t[1]), -t[0])):
            c = self._terms[(a, b)]
            mono = []
            if a:
                mono.append("x" if a == 1 else f"x^{a}")
            if b:
                mono.append("y" if b == 1 else f"y^{b}")
            if not mono:
                body = rat_str(abs(c))
            elif abs(c) == 1:
                body = "*".join(mono)
            else:
                body = "*".join([rat_str(abs(c))] + mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_poly(text: str) -> BivarPoly:
    """Parse the serialized form, e.g. ``"3/2*x^2*y-y+1"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    # '/' inside a coefficient never contains a sign, so splitting on +/- is safe
    pos = 0
    terms: dict[tuple[int, int], Fraction] = {}
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        a = b = 0
        for factor in m.group(2).split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            fm = re.fullmatch(r"([xy])(?:\^(\d+))?", factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            e = int(fm.group(2) or 1)
            if fm.group(1) == "x":
                a += e
            else:
                b += e
        terms[(a, b)] = terms.get((a, b), Fraction(0)) + coeff
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return BivarPoly(terms)


def divisible_by_linear(p: BivarPoly, a) -> bool:
    """True iff ``y - a*x`` divides ``p``."""
    return p.substitute_y(a).is_zero()


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(rat(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )

    def select_columns(self, cols: Iterable[int]) -> "RatMatrix":
        cols = list(cols)
        return RatMatrix.from_rows([[self[i, j] for j in cols] for i in range(self.rows)], len(cols))

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; drops zero rows."""
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        ir = [int(x * den) for x in r]
        if any(ir):
            out.append(ir)
    return out


def _bareiss_rank(a: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination in place; returns the number of pivots.

    Pivot = first nonzero entry in the current column at or below the
    current row.  Division by the previous pivot is exact.
    """
    nrows = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def rank(M: RatMatrix) -> int:
    """Exact rank over the rationals."""
    if M.rows == 0 or M.cols == 0:
        return 0
    a = _integer_rows(M.row(i) for i in range(M.rows))
    if not a:
        return 0
    # eliminate along the shorter side
    if len(a) > M.cols:
        a = [list(col) for col in zip(*a)]
        return _bareiss_rank(a, len(a[0]))
    return _bareiss_rank(a, M.cols)


def left_nullity(M: RatMatrix) -> int:
    """Dimension of the space of linear relations among the rows."""
    return M.rows - rank(M)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(M: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {z : M z = 0}, one vector per free column."""
    if M.cols == 0:
        return []
    red, pivots = rref([M.row(i) for i in range(M.rows)], M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


def left_nullspace(M: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {c : c^T M = 0}."""
    return nullspace(M.transpose()) if M.rows else []


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of Q^n."""

    def __init__(self, n: int):
        self.n = n
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = [Fraction(x) for x in v]
        for row, pc in zip(self._rows, self._pivots):
            f = w[pc]
            if f:
                w = [x - f * y for x, y in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        w = self.reduce(v)
        pc = next((i for i, x in enumerate(w) if x), None)
        if pc is None:
            return False
        inv = 1 / w[pc]
        w = [x * inv for x in w]
        # keep earlier rows reduced against the new pivot
        for idx, row in enumerate(self._rows):
            f = row[pc]
            if f:
                self._rows[idx] = [x - f * y for x, y in zip(row, w)]
        self._rows.append(w)
        self._pivots.append(pc)
        return True
