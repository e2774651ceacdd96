"""Exact graded polynomials over the rationals.

Every variable carries a positive even cohomological degree, so the degree of
a monomial is ``sum(e_i * deg_i)``.  Coefficients are :class:`fractions.Fraction`
throughout.  Polynomials print and parse in a plain ASCII grammar::

    3/2*x^2*y - y^3
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping

from .errors import InputError, SignatureMismatch

Monomial = tuple  # exponent vector, one entry per signature variable

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (no floats)."""
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            pass
    raise InputError(f"not an exact rational number: {value!r}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RingSignature:
    """Ordered generators with their cohomological degrees."""

    variables: tuple[tuple[str, int], ...]

    def __post_init__(self):
        variables = tuple((str(n), int(d)) for n, d in self.variables)
        object.__setattr__(self, "variables", variables)
        seen = set()
        for name, degree in variables:
            if not _NAME_RE.match(name):
                raise InputError(f"invalid variable name {name!r}")
            if name in seen:
                raise InputError(f"duplicate variable name {name!r}")
            if degree < 2 or degree % 2:
                raise InputError(
                    f"variable {name!r} has degree {degree}; degrees must be even and >= 2"
                )
            seen.add(name)

    @classmethod
    def of(cls, *pairs) -> "RingSignature":
        """``RingSignature.of(("xi", 2), ("rho", 2))``"""
        return cls(tuple(pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.variables)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def degree(self, monomial: Monomial) -> int:
        return sum(e * d for e, d in zip(monomial, self.degrees))

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def monomials_of_degree(self, d: int) -> list[Monomial]:
        """All exponent vectors of cohomological degree exactly ``d``."""
        if d < 0:
            return []
        degs = self.degrees
        out: list[Monomial] = []

        def rec(i: int, remaining: int, prefix: list[int]):
            if i == len(degs) - 1:
                if remaining % degs[i] == 0:
                    out.append(tuple(prefix + [remaining // degs[i]]))
                return
            for e in range(remaining // degs[i] + 1):
                rec(i + 1, remaining - e * degs[i], prefix + [e])

        if not degs:
            return [()] if d == 0 else []
        rec(0, d, [])
        return out


def format_monomial(sig: RingSignature, m: Monomial) -> str:
    parts = []
    for (name, _), e in zip(sig.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class GradedPolynomial:
    """Immutable polynomial: a map from exponent vectors to nonzero Fractions."""

    __slots__ = ("signature", "terms", "_hash")

    def __init__(self, signature: RingSignature, terms: Mapping[Monomial, object] = ()):
        clean: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = signature.nvars
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != n or any(e < 0 for e in m):
                raise InputError(f"bad exponent vector {m} for {n} variables")
            c = as_fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self.signature = signature
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, signature: RingSignature, terms: dict) -> "GradedPolynomial":
        obj = cls.__new__(cls)
        obj.signature = signature
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, signature: RingSignature) -> "GradedPolynomial":
        return cls._raw(signature, {})

    @classmethod
    def constant(cls, signature: RingSignature, c) -> "GradedPolynomial":
        c = as_fraction(c)
        return cls._raw(signature, {signature.one(): c} if c else {})

    @classmethod
    def monomial(cls, signature: RingSignature, m: Monomial, c=1) -> "GradedPolynomial":
        c = as_fraction(c)
        return cls._raw(signature, {tuple(m): c} if c else {})

    @classmethod
    def variable(cls, signature: RingSignature, name: str) -> "GradedPolynomial":
        m = [0] * signature.nvars
        m[signature.index(name)] = 1
        return cls._raw(signature, {tuple(m): Fraction(1)})

    @classmethod
    def parse(cls, text: str, signature: RingSignature) -> "GradedPolynomial":
        return parse_polynomial(text, signature)

    # -- basic queries ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.signature == other.signature and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == GradedPolynomial.constant(self.signature, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.signature, frozenset(self.terms.items())))
        return self._hash

    def degrees(self) -> set[int]:
        return {self.signature.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise InputError("degree is only defined for nonzero homogeneous polynomials")
        return degs.pop()

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def graded_component(self, d: int) -> "GradedPolynomial":
        sig = self.signature
        return GradedPolynomial._raw(
            sig, {m: c for m, c in self.terms.items() if sig.degree(m) == d}
        )

    def sorted_terms(self, key: Callable[[Monomial], object] | None = None, reverse=True):
        return sorted(self.terms.items(), key=lambda mc: (key or _lex_key)(mc[0]), reverse=reverse)

    def leading_term(self, key: Callable[[Monomial], object] | None = None):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=key or _lex_key)
        return m, self.terms[m]

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "GradedPolynomial"):
        if self.signature != other.signature:
            raise SignatureMismatch("polynomials are over different ring signatures")

    def _coerce(self, other) -> "GradedPolynomial":
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GradedPolynomial.constant(self.signature, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return GradedPolynomial._raw(self.signature, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial._raw(self.signature, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "GradedPolynomial":
        c = as_fraction(c)
        if not c:
            return GradedPolynomial.zero(self.signature)
        return GradedPolynomial._raw(self.signature, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return GradedPolynomial._raw(self.signature, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = GradedPolynomial.constant(self.signature, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, m: Monomial, c: Fraction) -> "GradedPolynomial":
        return GradedPolynomial._raw(
            self.signature,
            {tuple(a + b for a, b in zip(mm, m)): cc * c for mm, cc in self.terms.items()},
        )

    # -- printing -----------------------------------------------------------
    def to_string(self, key: Callable[[Monomial], object] | None = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(key)):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = format_monomial(self.signature, m)
            if mono == "1":
                body = format_fraction(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_fraction(a)}*{mono}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"GradedPolynomial({self.to_string()!r})"


def _lex_key(m: Monomial):
    return m


def multiply(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p * q


def graded_component(p: GradedPolynomial, d: int) -> GradedPolynomial:
    return p.graded_component(d)


@dataclass(frozen=True)
class RingMap:
    """Degree-preserving ring homomorphism given by images of the source generators."""

    source: RingSignature
    target: RingSignature
    images: tuple[GradedPolynomial, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.nvars:
            raise InputError("a ring map needs one image per source variable")
        for (name, degree), img in zip(self.source.variables, images):
            if img.signature != self.target:
                raise SignatureMismatch(f"image of {name!r} is not over the target signature")
            if img and img.degrees() != {degree}:
                raise InputError(
                    f"image of {name!r} must be homogeneous of degree {degree}, got {img}"
                )

    @classmethod
    def from_strings(cls, source: RingSignature, target: RingSignature,
                     images: Mapping[str, str]) -> "RingMap":
        missing = set(source.names) - set(images)
        if missing:
            raise InputError(f"ring map is missing images for {sorted(missing)}")
        extra = set(images) - set(source.names)
        if extra:
            raise InputError(f"ring map names unknown source variables {sorted(extra)}")
        return cls(source, target,
                   tuple(parse_polynomial(str(images[n]), target) for n in source.names))

    def __call__(self, p: GradedPolynomial) -> GradedPolynomial:
        return apply_map(self, p)


def apply_map(m: RingMap, p: GradedPolynomial) -> GradedPolynomial:
    """Substitute the images of the generators into ``p``."""
    if p.signature != m.source:
        raise SignatureMismatch("polynomial is not over the map's source signature")
    powers: list[dict[int, GradedPolynomial]] = [
        {0: GradedPolynomial.constant(m.target, 1), 1: img} for img in m.images
    ]

    def power(i: int, e: int) -> GradedPolynomial:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * m.images[i]
        return cache[e]

    result = GradedPolynomial.zero(m.target)
    for mono, c in p.terms.items():
        term = GradedPolynomial.constant(m.target, c)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        result = result + term
    return result


# -- parsing ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: RingSignature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, msg: str):
        pos = self.tokens[self.i][2]
        raise InputError(f"{msg} at column {pos + 1} in {self.text!r}")

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, _ = self.peek()
        if kind != "op" or val != op:
            self.error(f"expected {op!r}")
        self.take()

    def parse(self) -> GradedPolynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return p

    def expr(self) -> GradedPolynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> GradedPolynomial:
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> GradedPolynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> GradedPolynomial:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, _ = self.take()
            if kind != "int":
                self.i -= 1
                self.error("expected a nonnegative integer exponent")
            base = base ** val
        return base

    def atom(self) -> GradedPolynomial:
        kind, val, _ = self.take()
        if kind == "int":
            num = val
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                kind2, den, _ = self.take()
                if kind2 != "int" or den == 0:
                    self.i -= 1
                    self.error("expected a positive integer denominator")
                return GradedPolynomial.constant(self.sig, Fraction(num, den))
            return GradedPolynomial.constant(self.sig, num)
        if kind == "name":
            if val not in self.sig.names:
                self.i -= 1
                self.error(f"unknown variable {val!r}")
            return GradedPolynomial.variable(self.sig, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        self.i -= 1
        self.error("expected a number, variable or '('")


def parse_polynomial(text: str, signature: RingSignature) -> GradedPolynomial:
    """Parse ``3/2*x^2*y - (x - y)^3`` over ``signature``."""
    return _Parser(str(text), signature).parse()


def polynomials(signature: RingSignature, texts: Iterable[str]) -> list[GradedPolynomial]:
    return [parse_polynomial(t, signature) for t in texts]
