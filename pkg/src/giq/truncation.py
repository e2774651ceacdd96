"""The truncated subspace V inside equivariant cohomology.

Each constraint restricts the ambient ring to a target ring split into base
and fiber variables; an element of degree ``d`` survives when its image has
no component on target monomials whose fiber degree reaches the threshold
``2 * ceil(n_h / 2)`` (fiber cohomology sits in even degrees).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .groebner import QuotientRing, normal_monomials
from .linalg import nullspace, rank
from .polynomial import GradedPolynomial, Monomial, RingMap, apply_map
from .series import BettiPolynomial


@dataclass(frozen=True)
class TruncationConstraint:
    label: str
    restriction: RingMap
    target: QuotientRing = field(compare=False)
    fiber_variables: tuple[str, ...]
    n_h: int

    def __post_init__(self):
        object.__setattr__(self, "fiber_variables", tuple(self.fiber_variables))
        names = self.target.signature.names
        unknown = set(self.fiber_variables) - set(names)
        if unknown:
            raise InputError(f"constraint {self.label!r}: fiber variables {sorted(unknown)} "
                             f"are not target variables")
        if self.restriction.target != self.target.signature:
            raise InputError(f"constraint {self.label!r}: map target differs from target ring")
        if self.n_h < 0:
            raise InputError(f"constraint {self.label!r}: n_h must be >= 0")

    @property
    def threshold(self) -> int:
        """Smallest even fiber degree that is truncated away."""
        return 2 * ((self.n_h + 1) // 2)

    @property
    def base_variables(self) -> tuple[str, ...]:
        return tuple(n for n in self.target.signature.names if n not in self.fiber_variables)

    def fiber_degree(self, m: Monomial) -> int:
        sig = self.target.signature
        fib = set(self.fiber_variables)
        return sum(e * d for (n, d), e in zip(sig.variables, m) if n in fib)

    def high_monomials(self, d: int) -> list[Monomial]:
        return [m for m in normal_monomials(self.target, d)
                if self.fiber_degree(m) >= self.threshold]


def _check_source(ring: QuotientRing, c: TruncationConstraint):
    if c.restriction.source != ring.signature:
        raise InputError(f"constraint {c.label!r}: map source is not the ring signature")


def _image_coords(ring: QuotientRing, c: TruncationConstraint, d: int,
                  rows: Sequence[Monomial]) -> list[list[Fraction]]:
    cols = normal_monomials(ring, d)
    row_index = {m: i for i, m in enumerate(rows)}
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for j, m in enumerate(cols):
        img = c.target.normal_form(apply_map(c.restriction, ring.monomial(m)))
        for mm, coeff in img.terms.items():
            i = row_index.get(mm)
            if i is not None:
                mat[i][j] = coeff
    return mat


def restriction_matrix(ring: QuotientRing, c: TruncationConstraint, d: int,
                       truncated: bool = True) -> list[list[Fraction]]:
    """Matrix of restrict-then-project in degree ``d``.

    Columns are the ring's normal monomials of degree ``d`` (ascending);
    rows are the target normal monomials of degree ``d``, restricted to fiber
    degree at least the threshold when ``truncated``.
    """
    _check_source(ring, c)
    if d < 0 or d % 2:
        return []
    rows = c.high_monomials(d) if truncated else normal_monomials(c.target, d)
    return _image_coords(ring, c, d, rows)


@dataclass
class VSpace:
    ring: QuotientRing
    constraints: tuple[TruncationConstraint, ...]
    bound: int
    bases: dict[int, list[GradedPolynomial]]
    betti: BettiPolynomial

    @property
    def top_degree(self) -> int:
        nonzero = [d for d, b in self.bases.items() if b]
        return max(nonzero) if nonzero else -2

    def dimensions(self) -> list[int]:
        return [len(self.bases[d]) for d in sorted(self.bases)]

    def to_record(self) -> dict:
        return {
            "betti": self.dimensions(),
            "bases": {str(d): [self.ring.format(p) for p in self.bases[d]]
                      for d in sorted(self.bases)},
        }


def kernel_in_degree(ring: QuotientRing, constraints: Sequence[TruncationConstraint],
                     d: int) -> list[GradedPolynomial]:
    cols = normal_monomials(ring, d)
    stacked: list[list[Fraction]] = []
    for c in constraints:
        stacked.extend(restriction_matrix(ring, c, d))
    vectors = nullspace(stacked, len(cols))
    return [GradedPolynomial(ring.signature, {m: x for m, x in zip(cols, v) if x})
            for v in vectors]


def compute_v(ring: QuotientRing, constraints: Sequence[TruncationConstraint],
              bound: int) -> VSpace:
    if bound < 0:
        raise InputError("degree bound must be >= 0")
    constraints = tuple(constraints)
    for c in constraints:
        _check_source(ring, c)
    bases = {d: kernel_in_degree(ring, constraints, d) for d in range(0, bound + 1, 2)}
    betti = BettiPolynomial(tuple(len(bases[d]) for d in sorted(bases)))
    return VSpace(ring, constraints, bound, bases, betti)


def verify_restriction_surjectivity(ring: QuotientRing, constraints, k_from: int,
                                    k_to: int) -> bool:
    """Full row rank of the untruncated restriction in each degree ``2k``.

    ``constraints`` may be one constraint or several; several are stacked,
    i.e. surjectivity onto the direct sum of their targets is tested.
    """
    if isinstance(constraints, TruncationConstraint):
        constraints = [constraints]
    for k in range(k_from, k_to + 1):
        stacked: list[list[Fraction]] = []
        for c in constraints:
            stacked.extend(restriction_matrix(ring, c, 2 * k, truncated=False))
        if stacked and rank(stacked) < len(stacked):
            return False
    return True
