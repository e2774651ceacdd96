"""Poincare series as exact rational functions in ``t``.

Series are kept as reduced fractions ``num(t) / den(t)`` with ``den(0) = 1``
and expanded on demand.  Finite Betti polynomials are stored by even degree:
``[b0, b2, b4, ...]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import BalanceError, InputError
from .polynomial import RingSignature, as_fraction, format_fraction, parse_polynomial


class UPoly:
    """Dense univariate polynomial in ``t``, coefficients ascending."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[object] = ()):
        c = [as_fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "UPoly":
        return cls([0] * k + [coeff])

    @classmethod
    def parse(cls, text: str) -> "UPoly":
        p = parse_polynomial(str(text), _T_SIG)
        if not p:
            return cls()
        top = max(m[0] for m in p.terms)
        coeffs = [Fraction(0)] * (top + 1)
        for (e,), c in p.terms.items():
            coeffs[e] = c
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def __add__(self, other: "UPoly") -> "UPoly":
        n = max(len(self.c), len(other.c))
        return UPoly(self[i] + other[i] for i in range(n))

    def __neg__(self):
        return UPoly(-x for x in self.c)

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            k = as_fraction(other)
            return UPoly(k * x for x in self.c)
        if not self.c or not other.c:
            return UPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        q = [Fraction(0)] * max(0, len(rem) - len(other.c) + 1)
        lead = other.c[-1]
        for k in range(len(q) - 1, -1, -1):
            f = rem[k + other.degree] / lead
            q[k] = f
            if f:
                for j, b in enumerate(other.c):
                    rem[k + j] -= f * b
        return UPoly(q), UPoly(rem)

    def monic(self) -> "UPoly":
        return self * (1 / self.c[-1]) if self.c else self

    def shift(self, k: int) -> "UPoly":
        return UPoly([0] * k + list(self.c)) if self.c else self

    def to_string(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        parts = []
        for k, x in enumerate(self.c):
            if not x:
                continue
            a = abs(x)
            if k == 0:
                body = format_fraction(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{format_fraction(a)}*{mono}"
            if not parts:
                parts.append(body if x > 0 else f"-{body}")
            else:
                parts.append(f" {'+' if x > 0 else '-'} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self.to_string()!r})"


_T_SIG = RingSignature.of(("t", 2))


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a else UPoly([1])


class PoincareSeries:
    """Reduced rational function with a nonvanishing denominator at ``t = 0``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UPoly) else UPoly(num)
        den = UPoly([1]) if den is None else (den if isinstance(den, UPoly) else UPoly(den))
        if not den:
            raise ZeroDivisionError("series with zero denominator")
        g = upoly_gcd(num, den) if num else den.monic()
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        if not den[0]:
            raise InputError("series denominator vanishes at t = 0")
        k = 1 / den[0]
        self.num = num * k
        self.den = den * k

    @classmethod
    def parse(cls, num: str, den: str = "1") -> "PoincareSeries":
        return cls(UPoly.parse(num), UPoly.parse(den))

    @classmethod
    def polynomial(cls, coeffs) -> "PoincareSeries":
        return cls(UPoly(coeffs))

    def __eq__(self, other):
        return isinstance(other, PoincareSeries) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        return PoincareSeries(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return PoincareSeries(-self.num, self.den)

    def __sub__(self, other: "PoincareSeries") -> "PoincareSeries":
        return self + (-other)

    def __mul__(self, other) -> "PoincareSeries":
        if isinstance(other, PoincareSeries):
            return PoincareSeries(self.num * other.num, self.den * other.den)
        return PoincareSeries(self.num * as_fraction(other), self.den)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PoincareSeries":
        """Multiply by ``t^k``."""
        return PoincareSeries(self.num.shift(k), self.den)

    def is_polynomial(self) -> bool:
        return self.den == UPoly([1])

    def expand(self, order: int) -> list[Fraction]:
        return expand(self, order)

    def to_string(self) -> str:
        if self.is_polynomial():
            return self.num.to_string()
        return f"({self.num.to_string()}) / ({self.den.to_string()})"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"PoincareSeries({self.to_string()!r})"


def expand(s: PoincareSeries, order: int) -> list[Fraction]:
    """Taylor coefficients of ``s`` at 0 through ``t^order``."""
    if order < 0:
        raise InputError("expansion order must be >= 0")
    den0 = s.den[0]
    if not den0:
        raise InputError("series denominator vanishes at t = 0")
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = s.num[k]
        for i in range(1, min(k, s.den.degree) + 1):
            acc -= s.den[i] * out[k - i]
        out.append(acc / den0)
    return out


@dataclass(frozen=True)
class BettiPolynomial:
    """Finite even-degree Betti numbers ``[b0, b2, ...]`` (trailing zeros trimmed)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coefficients]
        if any(x < 0 for x in c):
            raise InputError(f"Betti numbers must be nonnegative: {c}")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def from_series(cls, s: PoincareSeries) -> "BettiPolynomial":
        if not s.is_polynomial():
            raise InputError(f"series {s} is not a polynomial")
        coeffs = s.num.c
        out = []
        for k, x in enumerate(coeffs):
            if k % 2:
                if x:
                    raise InputError(f"series {s} has an odd-degree term")
                continue
            if x.denominator != 1:
                raise InputError(f"series {s} has a non-integer coefficient")
            out.append(int(x))
        return cls(tuple(out))

    @property
    def top_degree(self) -> int:
        return 2 * (len(self.coefficients) - 1) if self.coefficients else -2

    def coefficient(self, d: int) -> int:
        """Betti number in cohomological degree ``d``."""
        if d < 0 or d % 2:
            return 0
        k = d // 2
        return self.coefficients[k] if k < len(self.coefficients) else 0

    def as_series(self) -> PoincareSeries:
        c = [0] * (2 * len(self.coefficients))
        for k, x in enumerate(self.coefficients):
            c[2 * k] = x
        return PoincareSeries(UPoly(c))

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    def to_string(self) -> str:
        return self.as_series().to_string()


def palindrome_check(b: BettiPolynomial, dim: int) -> bool:
    if b.top_degree > dim:
        return False
    return all(b.coefficient(d) == b.coefficient(dim - d) for d in range(0, dim + 1))


def even_range(lo: int, hi: int) -> UPoly:
    """``t^lo + t^(lo+2) + ... + t^hi`` (zero if ``hi < lo``)."""
    c = [0] * (hi + 1) if hi >= lo else []
    for k in range(lo, hi + 1, 2):
        c[k] = 1
    return UPoly(c)


ONE_MINUS_T2 = UPoly([1, 0, -1])


def morse_assemble(ambient: PoincareSeries,
                   strata: Sequence[tuple[int, PoincareSeries]]) -> PoincareSeries:
    """Equivariantly perfect stratification: ``ambient - sum t^codim * factor``."""
    result = ambient
    for codim, factor in strata:
        if codim <= 0 or codim % 2:
            raise InputError(f"stratum codimension must be positive and even, got {codim}")
        result = result - factor.shift(codim)
    return result


def pn_cstar_series(n_plus: int, n_zero: int, n_minus: int):
    """Equivariant series, truncation tail and quotient dimension for C* on P^n."""
    if n_plus != n_minus:
        raise BalanceError(
            f"weights are not balanced: n_plus={n_plus} differs from n_minus={n_minus}"
        )
    if n_minus < 1 or n_zero < 1:
        raise InputError("need n_plus = n_minus >= 1 and n_zero >= 1")
    n = n_plus + n_zero + n_minus - 1
    ambient = PoincareSeries(even_range(0, 2 * n), ONE_MINUS_T2)
    strata = [
        (2 * (n_zero + n_plus), PoincareSeries(even_range(0, 2 * (n_minus - 1)), ONE_MINUS_T2)),
        (2 * (n_zero + n_minus), PoincareSeries(even_range(0, 2 * (n_plus - 1)), ONE_MINUS_T2)),
    ]
    equivariant = morse_assemble(ambient, strata)
    tail = PoincareSeries(even_range(2 * n_minus, 2 * n_minus + 2 * n_zero - 2), ONE_MINUS_T2)
    return ambient, strata, equivariant, tail, 2 * n - 2


def preset_pn_cstar(n_plus: int, n_zero: int, n_minus: int):
    """``(equivariant series, intersection Betti polynomial)`` for C* on P^n."""
    _, _, equivariant, tail, _ = pn_cstar_series(n_plus, n_zero, n_minus)
    return equivariant, BettiPolynomial.from_series(equivariant - tail)


def p1_sl2_series(n: int):
    """Equivariant series, truncation tail and quotient dimension for SL(2) on (P^1)^2n."""
    if n < 2:
        raise InputError("p1-sl2 needs n >= 2")
    ambient = PoincareSeries(_upow(UPoly([1, 0, 1]), 2 * n),
                             UPoly([1, 0, 0, 0, -1]))
    strata = [
        (2 * (r - 1), PoincareSeries(UPoly([comb(2 * n, r)]), ONE_MINUS_T2))
        for r in range(n + 1, 2 * n + 1)
    ]
    equivariant = morse_assemble(ambient, strata)
    tail = PoincareSeries(UPoly.monomial(2 * n - 2, Fraction(comb(2 * n, n), 2)), ONE_MINUS_T2)
    return ambient, strata, equivariant, tail, 2 * (2 * n - 3)


def preset_p1_sl2(n: int):
    """``(equivariant series, intersection Betti polynomial)`` for SL(2) on (P^1)^2n."""
    _, _, equivariant, tail, _ = p1_sl2_series(n)
    return equivariant, BettiPolynomial.from_series(equivariant - tail)


def _upow(p: UPoly, k: int) -> UPoly:
    out = UPoly([1])
    for _ in range(k):
        out = out * p
    return out
