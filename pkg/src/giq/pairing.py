"""Intersection pairings on V computed by cup product in the quotient ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateMatrixError, IntegrityError
from .linalg import determinant, to_matrix, transpose
from .polynomial import GradedPolynomial, format_fraction
from .truncation import VSpace


def top_class(v: VSpace) -> GradedPolynomial:
    """The monic spanning element of V in its top nonzero degree."""
    top = v.top_degree
    if top < 0:
        raise IntegrityError("V is zero; there is no top class")
    basis = v.bases[top]
    if len(basis) != 1:
        raise IntegrityError(f"V^{top} has dimension {len(basis)}, expected 1")
    return basis[0]


def _coefficient_of(p: GradedPolynomial, tau: GradedPolynomial, key) -> Fraction:
    if not p:
        return Fraction(0)
    lm, lc = tau.leading_term(key)
    c = p.coefficient(lm) / lc
    if p - tau.scale(c):
        raise IntegrityError(f"product {p} is not a multiple of the top class {tau}")
    return c


def pairing_matrix(v: VSpace, i: int) -> list[list[Fraction]]:
    top = v.top_degree
    if i < 0 or i > top or i % 2:
        raise ValueError(f"pairing degree {i} outside 0..{top}")
    tau = top_class(v)
    ring = v.ring
    left = v.bases[i]
    right = v.bases[top - i]
    return [[_coefficient_of(ring.normal_form(a * b), tau, ring.key) for b in right]
            for a in left]


def is_symmetric(m: Sequence[Sequence[Fraction]]) -> bool:
    return all(len(row) == len(m) for row in m) and m == transpose(m)


def signature(m: Sequence[Sequence[object]]) -> int:
    """Inertia difference of a nondegenerate symmetric matrix by exact congruence."""
    a = to_matrix(m)
    if not is_symmetric(a):
        raise ValueError("signature needs a symmetric matrix")
    sig = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is not None:
            piv = a[k][k]
            sig += 1 if piv > 0 else -1
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / piv for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
        if pair is None:
            raise DegenerateMatrixError("symmetric matrix is degenerate")
        # zero diagonal: the 2x2 block [[0, b], [b, 0]] is a hyperbolic plane
        i, j = pair
        b = a[i][j]
        rest = [r for r in range(n) if r not in pair]
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        a = [[a[r][s] - (a[r][i] * a[j][s] + a[r][j] * a[i][s]) / b for s in rest]
             for r in rest]
    return sig


@dataclass
class PairingBlock:
    degree: int
    matrix: list[list[Fraction]]
    determinant: Fraction | None
    signature: int | None

    def to_record(self) -> dict:
        rec = {
            "i": self.degree,
            "matrix": [[format_fraction(x) for x in row] for row in self.matrix],
            "det": None if self.determinant is None else format_fraction(self.determinant),
        }
        if self.signature is not None:
            rec["signature"] = self.signature
        return rec


@dataclass
class PairingReport:
    top_degree: int
    top_class: GradedPolynomial
    blocks: list[PairingBlock]
    top_class_text: str = ""

    def block(self, i: int) -> PairingBlock:
        return next(b for b in self.blocks if b.degree == i)

    def to_record(self) -> dict:
        return {"top_degree": self.top_degree, "top_class": self.top_class_text,
                "blocks": [b.to_record() for b in self.blocks]}


def pairing_report(v: VSpace) -> PairingReport:
    """Blocks ``V^i x V^(top-i)`` for ``i <= top / 2``."""
    top = v.top_degree
    tau = top_class(v)
    blocks = []
    for i in range(0, top // 2 + 1, 2):
        m = pairing_matrix(v, i)
        square = bool(m) and all(len(row) == len(m) for row in m)
        det = determinant(m) if square else None
        sig = None
        if square and is_symmetric(m) and det:
            sig = signature(m)
        blocks.append(PairingBlock(i, m, det, sig))
    return PairingReport(top, tau, blocks, v.ring.format(tau))
