"""Almost / weakly balanced verdicts from slice weight data.

A slice passes when every index point ``b`` of its weights satisfies the
strict inequality ``2 n(b) - moved(b) > dim_R(W) / 2 - dim H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .polynomial import format_fraction
from .weights import RepresentationWeights, RootData, Vector, format_vector, index_set


@dataclass(frozen=True)
class SliceSpec:
    label: str
    dim_h: int
    slice_weights: RepresentationWeights
    roots: RootData = field(default_factory=RootData)
    sub_loci: tuple["SliceSpec", ...] = ()

    def __post_init__(self):
        if self.dim_h < 0:
            raise InputError(f"slice {self.label!r}: dim_h must be >= 0")
        object.__setattr__(self, "sub_loci", tuple(self.sub_loci))

    @property
    def half_codim(self) -> int:
        """Half the real dimension of the normal slice."""
        return self.slice_weights.total_multiplicity

    @property
    def n_h(self) -> int:
        return self.half_codim - self.dim_h

    def walk(self):
        yield self
        for sub in self.sub_loci:
            yield from sub.walk()


@dataclass(frozen=True)
class Violation:
    label: str
    beta: Vector
    lhs: int
    rhs: Fraction

    def to_record(self) -> dict:
        return {"label": self.label, "beta": format_vector(self.beta),
                "lhs": self.lhs, "rhs": format_fraction(self.rhs)}


@dataclass(frozen=True)
class BalanceVerdict:
    passed: bool
    violations: tuple[Violation, ...] = ()

    def to_record(self) -> dict:
        return {"passed": self.passed, "violations": [v.to_record() for v in self.violations]}


def check_linear_balance(slice_: SliceSpec) -> BalanceVerdict:
    rhs = Fraction(slice_.slice_weights.real_dimension - 2 * slice_.dim_h, 2)
    violations = []
    for pt in index_set(slice_.slice_weights, slice_.roots):
        lhs = 2 * pt.n_beta - pt.moved_roots
        if not lhs > rhs:
            violations.append(Violation(slice_.label, pt.beta, lhs, rhs))
    return BalanceVerdict(not violations, tuple(violations))


def check_weakly_balanced(slices) -> BalanceVerdict:
    """Conjunction of the linear check over all slices and their sub-loci."""
    violations = []
    for top in slices:
        for s in top.walk():
            violations.extend(check_linear_balance(s).violations)
    return BalanceVerdict(not violations, tuple(violations))
