"""Problem files and preset generators.

A problem file is YAML with a version header.  Either it names a preset::

    giq-version: 1
    preset: pn-cstar(3,2,3)

or it spells out every ingredient (see ``problems/pn_cstar_3_2_3.yaml``).
Rationals may be written as integers or ``"p/q"`` strings; polynomials use
the ASCII grammar of :mod:`giq.polynomial` (parentheses allowed on input).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Any

import yaml

from .balance import SliceSpec
from .errors import InputError
from .groebner import MonomialOrder, QuotientRing
from .polynomial import GradedPolynomial, RingMap, RingSignature, parse_polynomial
from .series import (
    ONE_MINUS_T2,
    PoincareSeries,
    UPoly,
    even_range,
    p1_sl2_series,
    pn_cstar_series,
)
from .truncation import TruncationConstraint
from .weights import RepresentationWeights, RootData, index_set, n_of_beta, vec

FORMAT_VERSION = 1
OUTPUTS = ("strata", "balance", "series", "betti", "pairing")


@dataclass(frozen=True)
class RingSpec:
    signature: RingSignature
    relations: tuple[GradedPolynomial, ...]
    order: MonomialOrder

    def build(self, max_degree: int | None = None, order_kind: str | None = None) -> QuotientRing:
        order = self.order if order_kind is None else MonomialOrder(order_kind, self.order.precedence)
        return QuotientRing(self.signature, self.relations, order, max_degree)


@dataclass(frozen=True)
class ConstraintSpec:
    label: str
    target: RingSpec
    fiber: tuple[str, ...]
    images: dict
    n_h: int | None = None
    slice_label: str | None = None


@dataclass(frozen=True)
class StratumSpec:
    factor: PoincareSeries
    codim: int | None = None
    beta: tuple | None = None
    local_weights: RepresentationWeights | None = None
    count: int = 1


@dataclass(frozen=True)
class SeriesSpec:
    ambient: PoincareSeries
    strata: tuple[StratumSpec, ...] = ()
    tail: PoincareSeries | None = None


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    rank: int
    roots: RootData
    weights: RepresentationWeights | None
    slices: tuple[SliceSpec, ...]
    ring: RingSpec | None
    constraints: tuple[ConstraintSpec, ...]
    series: SeriesSpec | None
    max_degree: int
    dimension: int | None = None
    outputs: tuple[str, ...] = OUTPUTS
    preset: str | None = None

    def slice_by_label(self, label: str) -> SliceSpec:
        for top in self.slices:
            for s in top.walk():
                if s.label == label:
                    return s
        raise InputError(f"no slice labelled {label!r}")

    def resolved_n_h(self, c: ConstraintSpec) -> int:
        if c.n_h is not None:
            return c.n_h
        return self.slice_by_label(c.slice_label or c.label).n_h

    def build_ring(self, order_kind: str | None = None) -> QuotientRing:
        if self.ring is None:
            raise InputError("problem has no ring presentation")
        return self.ring.build(self.max_degree, order_kind)

    def build_constraints(self, ring: QuotientRing,
                          order_kind: str | None = None) -> list[TruncationConstraint]:
        out = []
        targets: dict[RingSpec, QuotientRing] = {}
        for c in self.constraints:
            if c.target not in targets:
                targets[c.target] = c.target.build(self.max_degree, order_kind)
            target = targets[c.target]
            rmap = RingMap.from_strings(ring.signature, target.signature, c.images)
            out.append(TruncationConstraint(c.label, rmap, target, c.fiber, self.resolved_n_h(c)))
        return out

    def with_max_degree(self, d: int) -> "ProblemSpec":
        if d < 0 or d % 2:
            raise InputError("max degree must be a nonnegative even integer")
        return replace(self, max_degree=d)

    def resolved_strata(self) -> list[tuple[int, PoincareSeries]]:
        if self.series is None:
            return []
        points = None
        out = []
        for st in self.series.strata:
            if st.codim is not None:
                codim = st.codim
            elif st.local_weights is not None:
                beta = vec(st.beta)
                codim = 2 * n_of_beta(st.local_weights, beta) - self.roots.moved_roots(beta)
            else:
                if points is None:
                    if self.weights is None:
                        raise InputError("a stratum refers to beta but no weights are given")
                    points = {p.beta: p for p in index_set(self.weights, self.roots)}
                beta = vec(st.beta)
                if beta not in points:
                    raise InputError(f"beta {list(map(str, beta))} is not in the index set")
                codim = points[beta].codim
            out.append((codim, st.factor * st.count))
        return out


# -- parsing helpers ------------------------------------------------------------

def _req(d: dict, key: str, where: str):
    if not isinstance(d, dict) or key not in d:
        raise InputError(f"{where}: missing required field {key!r}")
    return d[key]


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def _weights(items, rank: int, where: str) -> RepresentationWeights:
    if not isinstance(items, list):
        raise InputError(f"{where}: weights must be a list")
    pairs = []
    for k, item in enumerate(items):
        w = _req(item, "weight", f"{where}[{k}]")
        w = w if isinstance(w, list) else [w]
        pairs.append((vec(w), _int(item.get("mult", 1), f"{where}[{k}].mult")))
    return RepresentationWeights(rank, tuple(pairs))


def _roots(d: dict, where: str) -> RootData:
    roots = [r if isinstance(r, list) else [r] for r in d.get("roots", []) or []]
    chamber = [s if isinstance(s, list) else [s] for s in d.get("chamber", []) or []]
    return RootData(tuple(roots), tuple(chamber))


def _slice(d: dict, rank: int, where: str) -> SliceSpec:
    label = str(_req(d, "label", where))
    return SliceSpec(
        label,
        _int(_req(d, "dim_h", where), f"{where}.dim_h"),
        _weights(d.get("weights", []) or [], rank, f"{where}.weights"),
        _roots(d, where),
        tuple(_slice(s, rank, f"{where}.sub_loci[{k}]")
              for k, s in enumerate(d.get("sub_loci", []) or [])),
    )


def _ring(d: dict, where: str) -> RingSpec:
    variables = _req(d, "variables", where)
    pairs = []
    for k, v in enumerate(variables):
        name = _req(v, "name", f"{where}.variables[{k}]")
        deg = _int(_req(v, "degree", f"{where}.variables[{k}]"), f"{where}.variables[{k}].degree")
        if deg < 2 or deg % 2:
            raise InputError(f"{where}.variables[{k}]: degree {deg} of {name!r} must be even and >= 2")
        pairs.append((str(name), deg))
    sig = RingSignature(tuple(pairs))
    rels = []
    for k, text in enumerate(d.get("relations", []) or []):
        try:
            p = parse_polynomial(str(text), sig)
        except InputError as e:
            raise InputError(f"{where}.relations[{k}]: {e}") from None
        if not p.is_homogeneous():
            raise InputError(f"{where}.relations[{k}]: relation {text!r} is not homogeneous")
        rels.append(p)
    precedence = d.get("precedence")
    order = MonomialOrder(str(d.get("order", "lex")),
                          tuple(precedence) if precedence else None)
    order.key(sig)  # validates the precedence
    return RingSpec(sig, tuple(rels), order)


def _series(text_or_map, where: str) -> PoincareSeries:
    if isinstance(text_or_map, dict):
        return PoincareSeries.parse(str(_req(text_or_map, "num", where)),
                                    str(text_or_map.get("den", "1")))
    return PoincareSeries.parse(str(text_or_map))


_PRESET_RE = re.compile(r"^\s*(pn-cstar|p1-sl2)\s*[(:]\s*([0-9,\s]+?)\s*\)?\s*$")


def parse_preset(text: str) -> ProblemSpec:
    """``pn-cstar(3,2,3)``, ``pn-cstar:3,2,3``, ``p1-sl2(2)`` or ``p1-sl2:2``."""
    m = _PRESET_RE.match(text)
    if not m:
        raise InputError(f"unknown preset {text!r}; use pn-cstar(a,b,c) or p1-sl2(n)")
    kind = m.group(1)
    args = [int(x) for x in m.group(2).replace(" ", "").split(",") if x]
    if kind == "pn-cstar":
        if len(args) != 3:
            raise InputError("pn-cstar takes three arguments n_plus, n_zero, n_minus")
        return pn_cstar_problem(*args)
    if len(args) != 1:
        raise InputError("p1-sl2 takes one argument n")
    return p1_sl2_problem(args[0])


def problem_from_mapping(data: Any, source: str = "<problem>") -> ProblemSpec:
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be a mapping")
    version = data.get("giq-version")
    if version != FORMAT_VERSION:
        raise InputError(f"{source}: expected header 'giq-version: {FORMAT_VERSION}', got {version!r}")
    if "preset" in data:
        spec = parse_preset(str(data["preset"]))
        if "max_degree" in data:
            spec = spec.with_max_degree(_int(data["max_degree"], "max_degree"))
        return spec

    rank = _int(data.get("rank", 1), "rank")
    roots = _roots(data, "roots")
    weights = _weights(data["weights"], rank, "weights") if data.get("weights") else None
    slices = tuple(_slice(s, rank, f"slices[{k}]") for k, s in enumerate(data.get("slices") or []))
    ring = _ring(data["ring"], "ring") if data.get("ring") else None

    constraints = []
    for k, c in enumerate(data.get("constraints") or []):
        where = f"constraints[{k}]"
        if ring is None:
            raise InputError(f"{where}: constraints need a ring")
        target = _ring(_req(c, "target", where), f"{where}.target")
        fiber = tuple(_req(c, "fiber", where))
        if not fiber:
            raise InputError(f"{where}: missing base/fiber split (empty fiber list)")
        images = {str(k2): str(v) for k2, v in (_req(c, "map", where) or {}).items()}
        n_h = c.get("n_h")
        constraints.append(ConstraintSpec(
            str(_req(c, "label", where)), target, fiber, images,
            None if n_h is None else _int(n_h, f"{where}.n_h"), c.get("slice")))

    series = None
    if data.get("series"):
        s = data["series"]
        strata = []
        for k, st in enumerate(s.get("strata") or []):
            where = f"series.strata[{k}]"
            factor = _series(_req(st, "factor", where), f"{where}.factor")
            count = _int(st.get("count", 1), f"{where}.count")
            if "codim" in st:
                strata.append(StratumSpec(factor, codim=_int(st["codim"], f"{where}.codim"),
                                          count=count))
            elif "beta" in st:
                beta = st["beta"] if isinstance(st["beta"], list) else [st["beta"]]
                local = (_weights(st["local_weights"], rank, f"{where}.local_weights")
                         if st.get("local_weights") else None)
                strata.append(StratumSpec(factor, beta=tuple(vec(beta)), local_weights=local,
                                          count=count))
            else:
                raise InputError(f"{where}: give either codim or beta")
        tail = _series(s["tail"], "series.tail") if s.get("tail") else None
        series = SeriesSpec(_series(_req(s, "ambient", "series"), "series.ambient"),
                            tuple(strata), tail)

    dimension = data.get("dimension")
    if dimension is not None:
        dimension = _int(dimension, "dimension")
    max_degree = data.get("max_degree", dimension)
    if max_degree is None:
        raise InputError(f"{source}: give max_degree or dimension")
    max_degree = _int(max_degree, "max_degree")
    if max_degree < 0 or max_degree % 2:
        raise InputError("max_degree must be a nonnegative even integer")
    outputs = tuple(data.get("outputs") or OUTPUTS)
    bad = set(outputs) - set(OUTPUTS)
    if bad:
        raise InputError(f"unknown outputs {sorted(bad)}; choose from {OUTPUTS}")

    spec = ProblemSpec(str(data.get("name", source)), rank, roots, weights, slices, ring,
                       tuple(constraints), series, max_degree, dimension, outputs)
    for c in spec.constraints:
        spec.resolved_n_h(c)
        missing = set(ring.signature.names) - set(c.images)
        if missing:
            raise InputError(f"constraint {c.label!r}: map is missing {sorted(missing)}")
        unknown = set(c.fiber) - set(c.target.signature.names)
        if unknown:
            raise InputError(f"constraint {c.label!r}: fiber variables {sorted(unknown)} "
                             f"are not target variables")
    return spec


def parse_problem(file) -> ProblemSpec:
    """Read and validate a problem file (path or open text stream)."""
    if hasattr(file, "read"):
        text, source = file.read(), getattr(file, "name", "<stream>")
    else:
        path = Path(file)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        source = str(path)
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        pos = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise InputError(f"{source}: YAML parse error{pos}") from None
    return problem_from_mapping(data, source)


# -- presets ----------------------------------------------------------------------

def pn_cstar_problem(n_plus: int, n_zero: int, n_minus: int) -> ProblemSpec:
    """C* acting on P^n with n_plus, n_zero, n_minus weights +1, 0, -1."""
    ambient, _, _, tail, dim = pn_cstar_series(n_plus, n_zero, n_minus)
    weights = RepresentationWeights(1, (((1,), n_plus), ((0,), n_zero), ((-1,), n_minus)))
    slice_ = SliceSpec("S1", 1, RepresentationWeights(1, (((1,), n_plus), ((-1,), n_minus))))
    sig = RingSignature.of(("xi", 2), ("rho", 2))
    rels = (parse_polynomial(f"xi^{n_zero}*(xi - rho)^{n_minus}", sig),
            parse_polynomial(f"xi^{n_zero}*(xi + rho)^{n_plus}", sig))
    ring = RingSpec(sig, rels, MonomialOrder("lex", ("xi", "rho")))
    tsig = RingSignature.of(("xi_f", 2), ("rho", 2))
    target = RingSpec(tsig, (parse_polynomial(f"xi_f^{n_zero}", tsig),),
                      MonomialOrder("lex", ("xi_f", "rho")))
    constraint = ConstraintSpec("S1", target, ("rho",), {"xi": "xi_f", "rho": "rho"},
                                slice_label="S1")
    strata = (
        StratumSpec(PoincareSeries(even_range(0, 2 * (n_plus - 1)), ONE_MINUS_T2), beta=(1,)),
        StratumSpec(PoincareSeries(even_range(0, 2 * (n_minus - 1)), ONE_MINUS_T2), beta=(-1,)),
    )
    return ProblemSpec(
        f"pn-cstar({n_plus},{n_zero},{n_minus})", 1, RootData(), weights, (slice_,), ring,
        (constraint,), SeriesSpec(ambient, strata, tail), dim, dim,
        preset=f"pn-cstar({n_plus},{n_zero},{n_minus})",
    )


def p1_sl2_problem(n: int) -> ProblemSpec:
    """SL(2) acting diagonally on ordered 2n-tuples of points of P^1."""
    ambient, _, _, tail, dim = p1_sl2_series(n)
    roots = RootData(((2,), (-2,)), ((2,),))
    # weights of the maximal torus on the Segre embedding of (P^1)^2n
    weights = RepresentationWeights(1, tuple(((2 * n - 2 * k,), comb(2 * n, k))
                                             for k in range(2 * n + 1)))
    slice_ = SliceSpec("H", 1, RepresentationWeights(1, (((1,), n - 1), ((-1,), n - 1))))
    names = [f"xi{j}" for j in range(1, 2 * n + 1)]
    sig = RingSignature(tuple((x, 2) for x in names) + (("rho2", 4),))
    rels = [parse_polynomial(f"{x}^2 - rho2", sig) for x in names]
    # classes of the closed unstable loci {x_j equal for j in I}, |I| = n + 1
    for subset in combinations(range(1, 2 * n + 1), n + 1):
        i0 = subset[0]
        rels.append(parse_polynomial("*".join(f"(xi{i0} + xi{j})" for j in subset[1:]), sig))
    ring = RingSpec(sig, tuple(rels), MonomialOrder("lex", tuple(names) + ("rho2",)))
    target = RingSpec(RingSignature.of(("rho", 2)), (), MonomialOrder("lex", ("rho",)))
    constraints = []
    for subset in combinations(range(1, 2 * n + 1), n):
        if subset[0] != 1:
            continue
        images = {f"xi{j}": ("rho" if j in subset else "-rho") for j in range(1, 2 * n + 1)}
        images["rho2"] = "rho^2"
        label = "I=" + ",".join(map(str, subset))
        constraints.append(ConstraintSpec(label, target, ("rho",), images, slice_label="H"))
    strata = tuple(
        StratumSpec(PoincareSeries(UPoly([1]), ONE_MINUS_T2), beta=(1,),
                    local_weights=RepresentationWeights(
                        1, tuple((w, m) for w, m in (((1,), 2 * n - r), ((-1,), r)) if m)),
                    count=comb(2 * n, r))
        for r in range(n + 1, 2 * n + 1)
    )
    return ProblemSpec(
        f"p1-sl2({n})", 1, roots, weights, (slice_,), ring, tuple(constraints),
        SeriesSpec(ambient, strata, tail), dim, dim, preset=f"p1-sl2({n})",
    )
