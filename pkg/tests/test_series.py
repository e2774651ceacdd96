from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from giq.errors import BalanceError, InputError
from giq.series import (
    BettiPolynomial,
    PoincareSeries,
    UPoly,
    expand,
    morse_assemble,
    palindrome_check,
    preset_p1_sl2,
    preset_pn_cstar,
)


def test_expand_example():
    s = PoincareSeries.parse("1 + t^2 + t^4 - t^10 - t^12 - t^14", "1 - t^2")
    assert expand(s, 14) == [1, 0, 2, 0, 3, 0, 3, 0, 3, 0, 2, 0, 1, 0, 0]


def test_reduced_form():
    s = PoincareSeries.parse("1 - t^4", "1 - t^2")
    assert s.is_polynomial() and str(s) == "1 + t^2"


def test_morse_assembly_cstar():
    ambient = PoincareSeries.parse("1 + t^2 + t^4 + t^6 + t^8 + t^10 + t^12 + t^14", "1 - t^2")
    factor = PoincareSeries.parse("1 + t^2 + t^4", "1 - t^2")
    eq = morse_assemble(ambient, [(10, factor), (10, factor)])
    assert eq == PoincareSeries.parse("1 + t^2 + t^4 + t^6 + t^8 - t^10 - t^12 - t^14", "1 - t^2")


def test_morse_rejects_odd_codim():
    with pytest.raises(InputError):
        morse_assemble(PoincareSeries.parse("1"), [(3, PoincareSeries.parse("1"))])


def test_presets():
    assert preset_pn_cstar(3, 2, 3)[1].to_list() == [1, 2, 3, 3, 3, 2, 1]
    assert preset_pn_cstar(2, 1, 2)[1].to_list() == [1, 2, 2, 1]
    # P^2 // C* with weights 1, 0, -1 is P^1
    assert preset_pn_cstar(1, 1, 1)[1].to_list() == [1, 1]
    eq, b = preset_p1_sl2(2)
    assert b.to_list() == [1, 1]
    assert eq == PoincareSeries.parse("1 + 3*t^2 - t^4", "1 - t^2")
    assert preset_p1_sl2(3)[1].to_list() == [1, 6, 6, 1]
    assert preset_p1_sl2(4)[1].to_list() == [1, 8, 29, 29, 8, 1]


def test_unbalanced_preset_rejected():
    with pytest.raises(BalanceError):
        preset_pn_cstar(2, 1, 1)


def test_intersection_below_equivariant():
    eq, b = preset_pn_cstar(3, 2, 3)
    coeffs = expand(eq, 12)
    assert all(b.coefficient(d) <= coeffs[d] for d in range(0, 13, 2))


def test_palindrome():
    assert palindrome_check(BettiPolynomial((1, 2, 1)), 4)
    assert not palindrome_check(BettiPolynomial((1, 2)), 2)
    assert not palindrome_check(BettiPolynomial((1, 1, 1)), 2)


upoly = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3),
                 min_size=1, max_size=5).map(UPoly)
den = st.lists(st.integers(-2, 2), max_size=3).map(lambda c: UPoly([1] + c))
series = st.builds(PoincareSeries, upoly, den)


@settings(max_examples=60, deadline=None)
@given(series, series)
def test_subtraction_inverts_addition(a, b):
    assert (a - b) + b == a
    assert expand(a + b, 8) == [x + y for x, y in zip(expand(a, 8), expand(b, 8))]


@settings(max_examples=40, deadline=None)
@given(series, series)
def test_product_expansion(a, b):
    ea, eb = expand(a, 6), expand(b, 6)
    conv = [sum(ea[i] * eb[k - i] for i in range(k + 1)) for k in range(7)]
    assert expand(a * b, 6) == conv
