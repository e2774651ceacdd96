import itertools
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from giq.errors import InputError
from giq.groebner import MonomialOrder, QuotientRing, buchberger, graded_dimensions, s_polynomial
from giq.polynomial import RingSignature, parse_polynomial

SIG = RingSignature.of(("xi", 2), ("rho", 2))
LEX = MonomialOrder("lex", ("xi", "rho"))
RELS = ["xi^2*(xi - rho)^3", "xi^2*(xi + rho)^3"]


@pytest.fixture(scope="module")
def ring():
    return QuotientRing.from_strings(SIG, RELS, LEX)


def test_golden_basis(ring):
    assert ring.groebner.to_strings() == [
        "xi^5 + 3*xi^3*rho^2", "xi^4*rho + 1/3*xi^2*rho^3", "xi^3*rho^3", "xi^2*rho^5"]


def test_simple_basis():
    gb = buchberger([parse_polynomial(t, SIG) for t in ("xi^2 - rho^2", "xi^2 + rho^2")], LEX)
    assert gb.to_strings() == ["xi^2", "rho^2"]


def test_normal_forms(ring):
    assert ring.normal_form(ring.parse("xi^2*(xi - rho)^3")).is_zero()
    assert ring.normal_form(ring.parse("xi^4*rho^2")) == ring.parse("-1/3*xi^2*rho^4")
    assert ring.normal_form(ring.parse("xi^3*rho^3")).is_zero()


def test_normal_monomials(ring):
    fmt = lambda d: [ring.format(ring.monomial(m)) for m in ring.normal_monomials(d)]
    assert fmt(0) == ["1"]
    assert fmt(2) == ["rho", "xi"]
    assert fmt(12) == ["rho^6", "xi*rho^5", "xi^2*rho^4"]


def test_graded_dimensions(ring):
    # the full Hilbert function of Q[xi, rho] / (two quintics sharing xi^2)
    assert graded_dimensions(ring, 16) == [1, 2, 3, 4, 5, 4, 3, 2, 2]
    assert graded_dimensions(ring, 8) == [1, 2, 3, 4, 5]


def macaulay_dims(relations, sig, bound):
    """Independent oracle: rank of the degree-d piece of the ideal via sympy."""
    out = []
    for d in range(0, bound + 1, 2):
        mons = sig.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(mons)}
        rows = []
        for r in relations:
            for m in sig.monomials_of_degree(d - r.degree) if d >= r.degree else []:
                prod = r.mul_term(m, Fraction(1))
                row = [0] * len(mons)
                for mm, c in prod.terms.items():
                    row[index[mm]] = sp.Rational(c.numerator, c.denominator)
                rows.append(row)
        rank = sp.Matrix(rows).rank() if rows else 0
        out.append(len(mons) - rank)
    return out


def test_dimensions_match_macaulay_oracle(ring):
    rels = [parse_polynomial(t, SIG) for t in RELS]
    assert graded_dimensions(ring, 14) == macaulay_dims(rels, SIG, 14)


def test_grlex_same_dimensions(ring):
    other = ring.with_order(MonomialOrder("grlex", ("xi", "rho")))
    assert graded_dimensions(other, 16) == graded_dimensions(ring, 16)


def test_truncated_basis_guards_degree():
    q = QuotientRing.from_strings(SIG, RELS, LEX, max_degree=8)
    assert q.graded_dimensions(8) == [1, 2, 3, 4, 5]
    with pytest.raises(InputError):
        q.normal_monomials(10)


def test_inhomogeneous_relation_rejected():
    with pytest.raises(InputError):
        QuotientRing.from_strings(SIG, ["xi^2 - rho"])


def test_bad_precedence_rejected():
    with pytest.raises(InputError):
        MonomialOrder("lex", ("xi", "zeta")).key(SIG)


SIG3 = RingSignature.of(("a", 2), ("b", 2), ("c", 4))
small = st.integers(-3, 3)


@st.composite
def homogeneous(draw, degree):
    mons = SIG3.monomials_of_degree(degree)
    picks = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
    terms = {m: Fraction(draw(small.filter(bool))) for m in picks}
    return parse_polynomial("0", SIG3).__class__(SIG3, terms)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([4, 6]).flatmap(homogeneous), min_size=1, max_size=3),
       st.sampled_from(["lex", "grlex"]))
def test_random_ideals(relations, kind):
    q = QuotientRing(SIG3, relations, MonomialOrder(kind))
    gb = q.groebner.elements
    # S-polynomials reduce to zero and relations lie in the ideal
    for f, g in itertools.combinations(gb, 2):
        assert q.normal_form(s_polynomial(f, g, q.key)).is_zero()
    for r in relations:
        assert q.normal_form(r).is_zero()
    # normal form is idempotent and multiplicative
    x = q.parse("a^2 + 2*a*b - c")
    y = q.parse("b^3 - a*c")
    nx = q.normal_form(x)
    assert q.normal_form(nx) == nx
    assert q.normal_form(x * y) == q.normal_form(nx * q.normal_form(y))
    # Hilbert function is order independent and matches the oracle
    other = q.with_order(MonomialOrder("grlex" if kind == "lex" else "lex"))
    assert graded_dimensions(q, 10) == graded_dimensions(other, 10)
    assert graded_dimensions(q, 10) == macaulay_dims(relations, SIG3, 10)
