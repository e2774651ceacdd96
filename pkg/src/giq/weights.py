"""Weight geometry: exact min-norm points and the index set of unstable strata.

For a torus-weight multiset the candidate stratum labels are the points of
each sub-hull closest to the origin.  Those lying (nonzero) in the closed
positive Weyl chamber form the index set; each carries ``n`` (weights with
``<a, b> < <b, b>``, counted with multiplicity), the number of roots it
moves, and the stratum codimension ``2n - moved``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import solve
from .polynomial import as_fraction, format_fraction

MAX_DISTINCT_WEIGHTS = 20

Vector = tuple[Fraction, ...]


def vec(coords: Iterable[object]) -> Vector:
    return tuple(as_fraction(c) for c in coords)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def format_vector(v: Sequence[Fraction]) -> list[str]:
    return [format_fraction(x) for x in v]


@dataclass(frozen=True)
class RepresentationWeights:
    """Complex weights with multiplicities; real dimension is ``2 * sum(mult)``."""

    rank: int
    entries: tuple[tuple[Vector, int], ...]

    def __post_init__(self):
        merged: dict[Vector, int] = {}
        for w, mult in self.entries:
            w = vec(w)
            if len(w) != self.rank:
                raise InputError(f"weight {format_vector(w)} does not have rank {self.rank}")
            if int(mult) < 1:
                raise InputError(f"multiplicity must be >= 1, got {mult}")
            merged[w] = merged.get(w, 0) + int(mult)
        object.__setattr__(self, "entries", tuple(merged.items()))

    @classmethod
    def from_pairs(cls, pairs, rank: int | None = None) -> "RepresentationWeights":
        pairs = [(vec(w if isinstance(w, (list, tuple)) else [w]), m) for w, m in pairs]
        if rank is None:
            if not pairs:
                raise InputError("rank is required for an empty weight list")
            rank = len(pairs[0][0])
        return cls(rank, tuple(pairs))

    @property
    def weights(self) -> list[Vector]:
        return [w for w, _ in self.entries]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def real_dimension(self) -> int:
        return 2 * self.total_multiplicity

    def scaled(self, k) -> "RepresentationWeights":
        k = as_fraction(k)
        return RepresentationWeights(
            self.rank, tuple((tuple(k * x for x in w), m) for w, m in self.entries)
        )


@dataclass(frozen=True)
class RootData:
    """Roots of the group and simple roots cutting out the closed positive chamber."""

    roots: tuple[Vector, ...] = ()
    chamber: tuple[Vector, ...] = ()

    def __post_init__(self):
        roots = tuple(vec(r) for r in self.roots)
        chamber = tuple(vec(s) for s in self.chamber)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "chamber", chamber)
        rset = set(roots)
        for r in roots:
            if tuple(-x for x in r) not in rset:
                raise InputError(f"roots must be closed under negation; missing -{format_vector(r)}")
        if bool(roots) != bool(chamber):
            raise InputError("chamber walls must be given exactly when roots are nonempty")

    @property
    def abelian(self) -> bool:
        return not self.roots

    def in_chamber(self, beta: Sequence[Fraction]) -> bool:
        return all(dot(beta, s) >= 0 for s in self.chamber)

    def moved_roots(self, beta: Sequence[Fraction]) -> int:
        return sum(1 for r in self.roots if dot(r, beta) != 0)


@dataclass(frozen=True)
class IndexPoint:
    beta: Vector
    n_beta: int
    moved_roots: int
    codim: int
    certificate: tuple[tuple[Vector, Fraction], ...] = field(compare=False)

    def to_record(self) -> dict:
        return {
            "beta": format_vector(self.beta),
            "n": self.n_beta,
            "moved_roots": self.moved_roots,
            "codim": self.codim,
            "certificate": [
                {"weight": format_vector(w), "coefficient": format_fraction(c)}
                for w, c in self.certificate
            ],
        }


def _affine_minimizer(points: Sequence[Vector]) -> list[Fraction]:
    """Barycentric weights of the point of aff(points) nearest the origin."""
    k = len(points)
    if k == 1:
        return [Fraction(1)]
    a = [[dot(p, q) for q in points] + [Fraction(1)] for p in points]
    a.append([Fraction(1)] * k + [Fraction(0)])
    sol = solve(a, [Fraction(0)] * k + [Fraction(1)])
    return sol[:k]


def _combine(points: Sequence[Vector], weights: Sequence[Fraction]) -> Vector:
    dim = len(points[0])
    return tuple(sum((w * p[i] for p, w in zip(points, weights)), Fraction(0)) for i in range(dim))


def min_norm_point(points: Sequence[Sequence[object]]):
    """Wolfe's method in exact arithmetic.

    Returns ``(p, certificate)`` where ``p`` is the point of the convex hull
    nearest the origin and ``certificate`` lists ``(input index, weight)``
    pairs with positive weights summing to one and reconstructing ``p``.
    """
    if not points:
        raise InputError("min_norm_point needs at least one point")
    pts = [vec(p) for p in points]
    first_index: dict[Vector, int] = {}
    for i, p in enumerate(pts):
        first_index.setdefault(p, i)
    uniq = list(first_index)

    start = min(range(len(uniq)), key=lambda i: (dot(uniq[i], uniq[i]), i))
    S = [start]
    w = [Fraction(1)]
    x = uniq[start]
    while True:
        xx = dot(x, x)
        j = min(range(len(uniq)), key=lambda i: (dot(x, uniq[i]), i))
        if dot(x, uniq[j]) >= xx or j in S:
            break
        S.append(j)
        w.append(Fraction(0))
        while True:
            v = _affine_minimizer([uniq[i] for i in S])
            if all(vi > 0 for vi in v):
                w = v
                x = _combine([uniq[i] for i in S], w)
                break
            theta = min(
                (wi / (wi - vi) if wi else Fraction(0))
                for wi, vi in zip(w, v) if vi <= 0
            )
            w = [(1 - theta) * wi + theta * vi for wi, vi in zip(w, v)]
            keep = [k for k, wi in enumerate(w) if wi > 0]
            S = [S[k] for k in keep]
            w = [w[k] for k in keep]
            x = _combine([uniq[i] for i in S], w)
    cert = sorted((first_index[uniq[i]], wi) for i, wi in zip(S, w))
    return x, cert


def n_of_beta(rep: RepresentationWeights, beta: Sequence[object]) -> int:
    beta = vec(beta)
    bb = dot(beta, beta)
    if bb == 0:
        raise InputError("n(beta) is undefined for beta = 0")
    return sum(m for w, m in rep.entries if dot(w, beta) < bb)


def index_set(rep: RepresentationWeights, roots: RootData | None = None) -> list[IndexPoint]:
    """Nonzero min-norm points of all sub-hulls that lie in the closed chamber."""
    roots = roots or RootData()
    distinct = sorted(rep.weights)
    if len(distinct) > MAX_DISTINCT_WEIGHTS:
        raise InputError(
            f"{len(distinct)} distinct weights exceeds the limit of {MAX_DISTINCT_WEIGHTS}"
        )
    found: dict[Vector, tuple] = {}
    for size in range(1, len(distinct) + 1):
        for subset in combinations(distinct, size):
            p, cert = min_norm_point(subset)
            if not any(p) or p in found or not roots.in_chamber(p):
                continue
            found[p] = tuple((subset[i], c) for i, c in cert)
    out = []
    for beta in sorted(found):
        n = n_of_beta(rep, beta)
        moved = roots.moved_roots(beta)
        # codimension is a count of real dimensions and cannot go negative
        codim = max(0, 2 * n - moved)
        out.append(IndexPoint(beta, n, moved, codim, found[beta]))
    return out
