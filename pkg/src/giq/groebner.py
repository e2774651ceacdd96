"""Reduced Groebner bases of homogeneous ideals and graded quotient rings.

Buchberger's algorithm is run degree by degree (the ideals are homogeneous
in the cohomological grading), choosing among pairs of equal degree the one
with the smallest lcm in the active order.  Useless pairs are discarded with
the Gebauer-Moeller criteria.  Passing ``max_degree`` stops the computation
once every pair up to that degree has been processed; the resulting basis is
then valid for all normal-form queries in degrees ``<= max_degree``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError, SignatureMismatch
from .polynomial import GradedPolynomial, Monomial, RingSignature

ORDER_KINDS = ("lex", "grlex")


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grlex`` with an explicit variable precedence (highest first).

    ``precedence=None`` means the signature's own variable order.
    """

    kind: str = "lex"
    precedence: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise InputError(f"unknown monomial order {self.kind!r}; use one of {ORDER_KINDS}")
        if self.precedence is not None:
            object.__setattr__(self, "precedence", tuple(self.precedence))

    def key(self, signature: RingSignature) -> Callable[[Monomial], tuple]:
        """Sort key: larger key means larger monomial."""
        if self.precedence is None:
            perm = tuple(range(signature.nvars))
        else:
            if sorted(self.precedence) != sorted(signature.names):
                raise InputError(
                    f"order precedence {self.precedence} is not a permutation of {signature.names}"
                )
            perm = tuple(signature.index(n) for n in self.precedence)
        if self.kind == "lex":
            if perm == tuple(range(signature.nvars)):
                return tuple
            return lambda m: tuple(m[i] for i in perm)
        return lambda m: (sum(m),) + tuple(m[i] for i in perm)

    def for_signature(self, signature: RingSignature) -> "MonomialOrder":
        """Drop a precedence that does not fit ``signature`` (e.g. a target ring)."""
        if self.precedence is not None and sorted(self.precedence) != sorted(signature.names):
            return MonomialOrder(self.kind)
        return self


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class _Reducer:
    """Full reduction of term dicts modulo a growing list of monic polynomials."""

    def __init__(self, key):
        self.key = key
        self.lms: list[Monomial] = []
        self.polys: list[dict[Monomial, Fraction]] = []
        self._neg = {}

    def _negkey(self, m):
        k = self._neg.get(m)
        if k is None:
            k = tuple(-x for x in self.key(m))
            self._neg[m] = k
        return k

    def add(self, lm: Monomial, terms: dict[Monomial, Fraction]):
        self.lms.append(lm)
        self.polys.append(terms)

    def divisor(self, m: Monomial, active=None):
        for idx, lm in enumerate(self.lms):
            if (active is None or idx in active) and _divides(lm, m):
                return idx
        return None

    def reduce(self, terms: dict[Monomial, Fraction], active=None) -> dict[Monomial, Fraction]:
        work = dict(terms)
        heap = [(self._negkey(m), m) for m in work]
        heapq.heapify(heap)
        rem: dict[Monomial, Fraction] = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, None)
            if not c:
                continue
            idx = self.divisor(m, active)
            if idx is None:
                rem[m] = c
                continue
            shift = _sub(m, self.lms[idx])
            for mm, cc in self.polys[idx].items():
                if mm == self.lms[idx]:
                    continue
                t = tuple(a + b for a, b in zip(mm, shift))
                old = work.get(t)
                if old is None:
                    work[t] = -c * cc
                    heapq.heappush(heap, (self._negkey(t), t))
                else:
                    work[t] = old - c * cc
        return rem


def _monic(terms: dict[Monomial, Fraction], key) -> tuple[Monomial, dict[Monomial, Fraction]]:
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc != 1:
        terms = {m: c / lc for m, c in terms.items()}
    return lm, terms


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis, sorted by leading monomial descending."""

    signature: RingSignature
    order: MonomialOrder
    elements: tuple[GradedPolynomial, ...]
    max_degree: int | None = None
    _key: Callable = field(default=None, repr=False, compare=False)
    _reducer: _Reducer = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        key = self.order.key(self.signature)
        object.__setattr__(self, "_key", key)
        red = _Reducer(key)
        for g in self.elements:
            lm, _ = g.leading_term(key)
            red.add(lm, g.terms)
        object.__setattr__(self, "_reducer", red)

    @property
    def key(self):
        return self._key

    @property
    def leading_monomials(self) -> list[Monomial]:
        return list(self._reducer.lms)

    def covers(self, d: int) -> bool:
        return self.max_degree is None or d <= self.max_degree

    def normal_form(self, p: GradedPolynomial) -> GradedPolynomial:
        return normal_form(p, self)

    def to_strings(self) -> list[str]:
        return [g.to_string(self._key) for g in self.elements]

    def __str__(self):
        return "{" + ", ".join(self.to_strings()) + "}"


def _check_relations(relations: Sequence[GradedPolynomial]) -> RingSignature:
    if not relations:
        raise InputError("cannot infer a signature from an empty relation list")
    sig = relations[0].signature
    for r in relations:
        if r.signature != sig:
            raise SignatureMismatch("relations live over different signatures")
        if not r.is_homogeneous():
            raise InputError(f"relation {r} is not homogeneous")
    return sig


def buchberger(relations: Sequence[GradedPolynomial], order: MonomialOrder | None = None,
               max_degree: int | None = None,
               signature: RingSignature | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by homogeneous ``relations``."""
    order = order or MonomialOrder()
    relations = [r for r in relations]
    if signature is None:
        signature = _check_relations(relations)
    elif relations:
        if _check_relations(relations) != signature:
            raise SignatureMismatch("relations are not over the given signature")
    key = order.key(signature)
    deg = signature.degree
    relations = [r for r in relations if r]

    red = _Reducer(key)
    active: set[int] = set()
    alive_pairs: set[tuple[int, int]] = set()
    queue: list = []
    counter = 0

    def push(item_deg, item_lcm, payload):
        nonlocal counter
        heapq.heappush(queue, (item_deg, tuple(-x for x in key(item_lcm)), counter, payload))
        counter += 1

    for r in relations:
        lm, _ = r.leading_term(key)
        push(r.degree, lm, ("gen", r.terms))

    def update(h: int):
        lm_h = red.lms[h]
        cand = [g for g in sorted(active)]
        lcms = {g: _lcm(lm_h, red.lms[g]) for g in cand}
        kept = []
        remaining = list(cand)
        # chain criterion among the new pairs
        for i, g in enumerate(remaining):
            if _coprime(lm_h, red.lms[g]):
                kept.append(g)
                continue
            lg = lcms[g]
            others = [x for x in remaining[i + 1:]] + kept
            if any(lcms[o] != lg and _divides(lcms[o], lg) for o in others):
                continue
            # among equal lcms keep only the first
            if any(lcms[o] == lg for o in kept):
                continue
            kept.append(g)
        new_pairs = [g for g in kept if not _coprime(lm_h, red.lms[g])]
        # prune old pairs made redundant by h
        for (a, b) in list(alive_pairs):
            l_ab = _lcm(red.lms[a], red.lms[b])
            if (_divides(lm_h, l_ab) and _lcm(red.lms[a], lm_h) != l_ab
                    and _lcm(red.lms[b], lm_h) != l_ab):
                alive_pairs.discard((a, b))
        for g in new_pairs:
            pair = (min(g, h), max(g, h))
            alive_pairs.add(pair)
            l = lcms[g]
            push(deg(l), l, ("pair", pair))
        for g in list(active):
            if _divides(lm_h, red.lms[g]):
                active.discard(g)
        active.add(h)

    while queue:
        d, _, _, payload = heapq.heappop(queue)
        if max_degree is not None and d > max_degree:
            break
        if payload[0] == "gen":
            terms = payload[1]
        else:
            pair = payload[1]
            if pair not in alive_pairs:
                continue
            alive_pairs.discard(pair)
            a, b = pair
            l = _lcm(red.lms[a], red.lms[b])
            terms = {}
            for idx, sign in ((a, 1), (b, -1)):
                shift = _sub(l, red.lms[idx])
                for m, c in red.polys[idx].items():
                    t = tuple(x + y for x, y in zip(m, shift))
                    s = terms.get(t, 0) + sign * c
                    if s:
                        terms[t] = s
                    else:
                        terms.pop(t, None)
        rem = red.reduce(terms)
        if rem:
            lm, rem = _monic(rem, key)
            red.add(lm, rem)
            update(len(red.lms) - 1)

    return GroebnerBasis(signature, order, _reduce_basis(red, active, key, signature),
                         max_degree)


def _reduce_basis(red: _Reducer, active: Iterable[int], key,
                  signature: RingSignature) -> tuple[GradedPolynomial, ...]:
    idxs = sorted(active, key=lambda i: key(red.lms[i]))
    minimal = []
    for i in idxs:
        if not any(_divides(red.lms[j], red.lms[i]) for j in minimal):
            minimal.append(i)
    final = _Reducer(key)
    for i in minimal:
        final.add(red.lms[i], red.polys[i])
    out = []
    mset = set(range(len(minimal)))
    for pos, i in enumerate(minimal):
        lm = red.lms[i]
        tail = {m: c for m, c in red.polys[i].items() if m != lm}
        tail = final.reduce(tail, mset - {pos})
        tail[lm] = Fraction(1)
        out.append(GradedPolynomial(signature, tail))
    out.sort(key=lambda g: key(g.leading_term(key)[0]), reverse=True)
    return tuple(out)


def normal_form(p: GradedPolynomial, gb: GroebnerBasis) -> GradedPolynomial:
    """Fully reduced remainder of ``p`` modulo ``gb``."""
    if p.signature != gb.signature:
        raise SignatureMismatch("polynomial and basis are over different signatures")
    if gb.max_degree is not None and p and max(p.degrees()) > gb.max_degree:
        raise InputError(
            f"basis is only valid through degree {gb.max_degree}; got degree {max(p.degrees())}"
        )
    if not gb.elements:
        return p
    return GradedPolynomial._raw(p.signature, gb._reducer.reduce(p.terms))


def s_polynomial(f: GradedPolynomial, g: GradedPolynomial, key) -> GradedPolynomial:
    lf, cf = f.leading_term(key)
    lg, cg = g.leading_term(key)
    l = _lcm(lf, lg)
    return f.mul_term(_sub(l, lf), 1 / cf) - g.mul_term(_sub(l, lg), 1 / cg)


class QuotientRing:
    """Graded ring ``Q[vars] / <relations>`` with a reduced Groebner basis.

    ``max_degree`` truncates the basis computation; queries above that degree
    raise :class:`InputError`.
    """

    def __init__(self, signature: RingSignature, relations: Sequence[GradedPolynomial] = (),
                 order: MonomialOrder | None = None, max_degree: int | None = None):
        self.signature = signature
        self.order = (order or MonomialOrder()).for_signature(signature)
        self.relations = tuple(relations)
        for r in self.relations:
            if r.signature != signature:
                raise SignatureMismatch("relation is not over the ring signature")
            if not r.is_homogeneous():
                raise InputError(f"relation {r} is not homogeneous")
        self.max_degree = max_degree
        self.groebner = buchberger(self.relations, self.order, max_degree, signature=signature)
        self.key = self.groebner.key
        self._normal_cache: dict[int, list[Monomial]] = {}

    @classmethod
    def from_strings(cls, variables, relations: Iterable[str] = (), order=None,
                     max_degree=None) -> "QuotientRing":
        sig = variables if isinstance(variables, RingSignature) else RingSignature(tuple(variables))
        rels = [GradedPolynomial.parse(r, sig) for r in relations]
        return cls(sig, rels, order, max_degree)

    def with_order(self, order: MonomialOrder) -> "QuotientRing":
        return QuotientRing(self.signature, self.relations, order, self.max_degree)

    def _check_degree(self, d: int):
        if self.max_degree is not None and d > self.max_degree:
            raise InputError(f"ring basis computed only through degree {self.max_degree}, "
                             f"degree {d} requested")

    def normal_form(self, p: GradedPolynomial) -> GradedPolynomial:
        return normal_form(p, self.groebner)

    def parse(self, text: str) -> GradedPolynomial:
        return GradedPolynomial.parse(text, self.signature)

    def monomial(self, m: Monomial) -> GradedPolynomial:
        return GradedPolynomial.monomial(self.signature, m)

    def normal_monomials(self, d: int) -> list[Monomial]:
        return normal_monomials(self, d)

    def graded_dimensions(self, bound: int) -> list[int]:
        return graded_dimensions(self, bound)

    def format(self, p: GradedPolynomial) -> str:
        return p.to_string(self.key)

    def __repr__(self):
        return (f"QuotientRing({self.signature.names}, {len(self.relations)} relations, "
                f"{self.order.kind})")


def normal_monomials(q: QuotientRing, d: int) -> list[Monomial]:
    """Standard monomials of degree ``d``, ascending in the ring's order."""
    if d < 0:
        return []
    cached = q._normal_cache.get(d)
    if cached is not None:
        return list(cached)
    q._check_degree(d)
    lms = q.groebner.leading_monomials
    mons = [m for m in q.signature.monomials_of_degree(d)
            if not any(_divides(lm, m) for lm in lms)]
    mons.sort(key=q.key)
    q._normal_cache[d] = mons
    return list(mons)


def graded_dimensions(q: QuotientRing, bound: int) -> list[int]:
    """Dimensions of the even graded pieces ``0, 2, ..., bound``."""
    if bound < 0:
        return []
    return [len(normal_monomials(q, d)) for d in range(0, bound + 1, 2)]
