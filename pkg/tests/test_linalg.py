from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from giq.linalg import determinant, matmul, nullspace, rank, rref, solve

entry = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw):
    r, c = draw(st.integers(1, 5)), draw(st.integers(1, 5))
    return [[draw(entry) for _ in range(c)] for _ in range(r)]


def _sympy(m):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in m])


def test_small_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert nullspace([[1, 1]], 2) == [[F(-1), F(1)]]
    assert nullspace([], 2) == [[F(1), F(0)], [F(0), F(1)]]
    assert solve([[2, 0], [0, 3]], [1, 1]) == [F(1, 2), F(1, 3)]


def test_rref_pivots():
    rows, pivots = rref([[0, 2, 4], [1, 1, 1]], 3)
    assert pivots == [0, 1]
    assert rows[0][0] == 1 and rows[1][1] == 1


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_against_oracle(m):
    ncols = len(m[0])
    kernel = nullspace(m, ncols)
    assert rank(m) == _sympy(m).rank()
    assert rank(m) + len(kernel) == ncols
    for v in kernel:
        assert all(x == 0 for row in matmul(m, [[x] for x in v]) for x in row)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_against_oracle(m):
    d = _sympy(m).det()
    assert determinant(m) == F(int(sp.fraction(d)[0]), int(sp.fraction(d)[1]))
