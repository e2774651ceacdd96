from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from giq.errors import InputError, SignatureMismatch
from giq.polynomial import GradedPolynomial, RingMap, RingSignature, apply_map, parse_polynomial

SIG = RingSignature.of(("xi", 2), ("rho", 2))
SIG4 = RingSignature.of(("x", 2), ("y", 4))


def P(text, sig=SIG):
    return parse_polynomial(text, sig)


def test_multiply_example():
    assert P("rho") * P("xi^2*rho^3") == P("xi^2*rho^4")


def test_degree_counts_weights():
    p = P("x^2*y", SIG4)
    assert p.degree == 8 and p.is_homogeneous()
    assert not P("x + y", SIG4).is_homogeneous()


def test_parse_round_trip_and_rationals():
    p = P("xi^4*rho + 1/3*xi^2*rho^3")
    assert p.coefficient((2, 3)) == Fraction(1, 3)
    assert P(p.to_string()) == p
    assert P("(xi - rho)^2") == P("xi^2 - 2*xi*rho + rho^2")


def test_parse_errors_report_position():
    with pytest.raises(InputError, match="column"):
        P("xi + * rho")
    with pytest.raises(InputError):
        P("zeta")


def test_graded_component():
    p = P("1 + xi + xi*rho")
    assert p.graded_component(2) == P("xi")
    assert not p.is_homogeneous()


def test_mixed_signatures_rejected():
    other = RingSignature.of(("a", 2))
    with pytest.raises(SignatureMismatch):
        P("xi") + parse_polynomial("a", other)


def test_restriction_map_example():
    src = RingSignature.of(("xi1", 2), ("xi2", 2), ("rho2", 4))
    tgt = RingSignature.of(("rho", 2))
    f = RingMap.from_strings(src, tgt, {"xi1": "rho", "xi2": "-rho", "rho2": "rho^2"})
    assert apply_map(f, parse_polynomial("xi1^2", src)) == parse_polynomial("rho^2", tgt)
    assert not apply_map(f, parse_polynomial("xi1^2 - rho2", src))
    assert apply_map(f, parse_polynomial("xi1 + xi2", src)).is_zero()


def test_map_must_preserve_degree():
    with pytest.raises(InputError):
        RingMap.from_strings(SIG, SIG, {"xi": "xi^2", "rho": "rho"})


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
mono = st.tuples(st.integers(0, 3), st.integers(0, 3))
poly = st.dictionaries(mono, coeff, max_size=5).map(lambda d: GradedPolynomial(SIG, d))


@settings(max_examples=60, deadline=None)
@given(poly, poly, poly)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@settings(max_examples=60, deadline=None)
@given(poly, poly)
def test_map_is_homomorphism(a, b):
    f = RingMap.from_strings(SIG, SIG, {"xi": "xi + 2*rho", "rho": "-rho"})
    assert apply_map(f, a * b) == apply_map(f, a) * apply_map(f, b)
    assert apply_map(f, a + b) == apply_map(f, a) + apply_map(f, b)
