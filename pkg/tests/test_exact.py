from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from graphcohom.exact import (
    BivarPoly, EchelonBasis, RatMatrix, divisible_by_linear, left_nullspace, nullspace,
    parse_poly, rank, rat, rat_str, rref,
)


def det(rows):
    # Laplace expansion; slow but independent of elimination
    if not rows:
        return Fraction(1)
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(len(rows)) if rows[0][j])


def minors_rank(rows, ncols):
    """Largest r with a nonzero r x r minor."""
    best = 0
    for r in range(1, min(len(rows), ncols) + 1):
        if any(det([[rows[i][j] for j in cs] for i in rs]) != 0
               for rs in combinations(range(len(rows)), r)
               for cs in combinations(range(ncols), r)):
            best = r
        else:
            break
    return best


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_r=4, max_c=4):
    return st.integers(1, max_r).flatmap(lambda r: st.integers(1, max_c).flatmap(
        lambda c: st.lists(st.lists(fractions, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rat_parsing():
    assert rat("3/6") == Fraction(1, 2)
    assert rat(-2) == Fraction(-2)
    assert rat_str(Fraction(-1, 3)) == "-1/3"
    assert rat_str(Fraction(4)) == "4"
    with pytest.raises((TypeError, ValueError)):
        rat(0.5)
    with pytest.raises((TypeError, ValueError)):
        rat(True)


def test_poly_arithmetic_and_roundtrip():
    x, y = BivarPoly.monomial(1, 0), BivarPoly.monomial(0, 1)
    p = (x + y * Fraction(1, 2)) ** 2
    assert p.coeff(1, 1) == 1 and p.coeff(0, 2) == Fraction(1, 4)
    assert p.is_homogeneous(2) and p.degree() == 2
    assert parse_poly(str(p)) == p
    assert BivarPoly().degree() == -1 and BivarPoly().is_zero()
    assert (p - p).is_zero()


def test_substitution_and_divisibility():
    x, y = BivarPoly.monomial(1, 0), BivarPoly.monomial(0, 1)
    line = y - x * 3
    assert divisible_by_linear(line * (x + y), 3)
    assert not divisible_by_linear(x * x, 3)
    assert (line * x).substitute_y(3).is_zero()
    # shear x -> x + t y
    assert x.shear_x(2) == x + y * 2


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_minors_oracle(rows):
    M = RatMatrix.from_rows(rows)
    assert rank(M) == minors_rank([list(r) for r in rows], M.cols)


@settings(max_examples=60, deadline=None)
@given(matrices(5, 5))
def test_rank_matches_sympy_and_nullspaces(rows):
    M = RatMatrix.from_rows(rows)
    assert rank(M) == sympy.Matrix(rows).rank()
    ns = nullspace(M)
    assert len(ns) == M.cols - rank(M)
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    lns = left_nullspace(M)
    assert len(lns) == M.rows - rank(M)
    for c in lns:
        assert all(sum(c[i] * rows[i][j] for i in range(M.rows)) == 0 for j in range(M.cols))


@settings(max_examples=40, deadline=None)
@given(matrices(5, 4))
def test_echelon_basis_tracks_rank(rows):
    E = EchelonBasis(len(rows[0]))
    added = sum(E.add(r) for r in rows)
    assert added == len(E) == rank(RatMatrix.from_rows(rows))
    assert all(E.contains(r) for r in rows)


def test_rref_pivots():
    R, piv = rref([[2, 4, 0], [1, 2, 1]], 3)
    assert piv == [0, 2]
    assert R[0] == [1, 2, 0]


def test_rank_tall_and_zero():
    assert rank(RatMatrix.from_rows([[0, 0]] * 3)) == 0
    assert rank(RatMatrix.from_rows([[1], [2], [3]])) == 1
