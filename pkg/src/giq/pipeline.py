"""Pipeline orchestration and report emission."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .balance import BalanceVerdict, check_weakly_balanced
from .groebner import graded_dimensions
from .pairing import PairingReport, pairing_report
from .problem import OUTPUTS, ProblemSpec
from .series import BettiPolynomial, PoincareSeries, expand, morse_assemble, palindrome_check
from .truncation import VSpace, compute_v
from .weights import IndexPoint, index_set

UNCERTIFIED = ("UNCERTIFIED: the weak balance check failed, so V is not certified "
               "to be the image of intersection cohomology")


@dataclass
class Report:
    name: str
    order: str
    bound: int
    balance: BalanceVerdict | None = None
    index_points: list[IndexPoint] | None = None
    equivariant: PoincareSeries | None = None
    intersection: PoincareSeries | None = None
    series_betti: list[int] | None = None
    series_method: str | None = None
    v: VSpace | None = None
    pairing: PairingReport | None = None
    checks: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.balance is None or self.balance.passed

    def to_record(self) -> dict:
        rec: dict = {"problem": self.name, "order": self.order, "max_degree": self.bound,
                     "status": "certified" if self.certified else "uncertified"}
        if self.balance is not None:
            rec["balance"] = self.balance.to_record()
        if self.index_points is not None:
            rec["index_set"] = [p.to_record() for p in self.index_points]
        if self.equivariant is not None:
            rec["equivariant_series"] = self.equivariant.to_string()
        if self.intersection is not None:
            rec["intersection_series"] = self.intersection.to_string()
        if self.series_betti is not None:
            rec["series_betti"] = {"method": self.series_method, "betti": self.series_betti}
        if self.v is not None:
            rec["betti"] = self.v.dimensions()
            rec["v_bases"] = self.v.to_record()["bases"]
        if self.pairing is not None:
            rec["pairing"] = self.pairing.to_record()
        if self.checks:
            rec["checks"] = self.checks
        rec["warnings"] = self.warnings
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        return format_text(self)


def _trim(xs: list[int]) -> list[int]:
    xs = list(xs)
    while xs and xs[-1] == 0:
        xs.pop()
    return xs


def _series_betti(spec: ProblemSpec, equivariant: PoincareSeries, ring, constraints):
    """Betti numbers through the bound from series arithmetic."""
    bound = spec.max_degree
    if spec.series.tail is not None:
        ip = equivariant - spec.series.tail
        coeffs = expand(ip, bound)
        return ip, [int(coeffs[d]) for d in range(0, bound + 1, 2)], "closed-form tail"
    if constraints is None:
        return None, None, None
    # subtract, degree by degree, the dimension of the truncated target pieces
    coeffs = expand(equivariant, bound)
    out = []
    for d in range(0, bound + 1, 2):
        cut = sum(len(c.high_monomials(d)) for c in constraints)
        out.append(int(coeffs[d]) - cut)
    return None, out, "target high-degree count"


def run_pipeline(spec: ProblemSpec, order: str | None = None,
                 outputs=None) -> Report:
    """Balance first, then index set, series, V and pairing as requested."""
    outputs = tuple(outputs or spec.outputs)
    order_name = order or (spec.ring.order.kind if spec.ring else "lex")
    report = Report(spec.name, order_name, spec.max_degree)

    report.balance = check_weakly_balanced(spec.slices)
    if not report.balance.passed:
        report.warnings.append(UNCERTIFIED)

    if "strata" in outputs and spec.weights is not None:
        report.index_points = index_set(spec.weights, spec.roots)

    need_ring = spec.ring is not None and any(o in outputs for o in ("betti", "pairing"))
    ring = constraints = None
    if need_ring:
        ring = spec.build_ring(order)
        constraints = spec.build_constraints(ring, order)

    series_wanted = spec.series is not None and any(o in outputs for o in ("series", "betti"))
    if series_wanted:
        report.equivariant = morse_assemble(spec.series.ambient, spec.resolved_strata())
        ip, betti, method = _series_betti(spec, report.equivariant, ring, constraints)
        report.intersection = ip
        report.series_betti = _trim(betti) if betti is not None else None
        report.series_method = method
        if ip is not None and spec.dimension is not None and ip.is_polynomial():
            ok = palindrome_check(BettiPolynomial.from_series(ip), spec.dimension)
            report.checks["palindrome"] = "pass" if ok else "fail"

    if ring is not None:
        report.v = compute_v(ring, constraints, spec.max_degree)
        kernel = _trim(report.v.dimensions())
        if report.series_betti is not None:
            report.checks["series_vs_kernel"] = ("agree" if kernel == report.series_betti
                                                 else "disagree")
        if report.equivariant is not None:
            dims = graded_dimensions(ring, spec.max_degree)
            expected = expand(report.equivariant, spec.max_degree)[::2]
            report.checks["ring_vs_equivariant"] = (
                "agree" if [int(x) for x in expected] == dims else "disagree")
        if "pairing" in outputs:
            report.pairing = pairing_report(report.v)
    return report


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def format_text(report: Report) -> str:
    lines = [f"problem  {report.name}", f"order    {report.order}",
             f"bound    {report.bound}",
             f"status   {'certified' if report.certified else 'uncertified'}"]
    for w in report.warnings:
        lines += ["", "!! " + w]
    if report.balance is not None:
        lines += ["", f"balance: {'pass' if report.balance.passed else 'FAIL'}"]
        if report.balance.violations:
            rows = [["slice", "beta", "2n-moved", "bound"]]
            rows += [[v.label, ",".join(r["beta"]), str(v.lhs), r["rhs"]]
                     for v in report.balance.violations for r in [v.to_record()]]
            lines += _table(rows)
    if report.index_points is not None:
        lines += ["", "index set:"]
        rows = [["beta", "n", "moved", "codim"]]
        rows += [[",".join(r["beta"]), str(p.n_beta), str(p.moved_roots), str(p.codim)]
                 for p in report.index_points for r in [p.to_record()]]
        lines += _table(rows)
    if report.equivariant is not None:
        lines += ["", f"equivariant series:   {report.equivariant}"]
    if report.intersection is not None:
        lines += [f"intersection series:  {report.intersection}"]
    if report.series_betti is not None:
        lines += [f"series betti:         {report.series_betti} ({report.series_method})"]
    if report.v is not None:
        lines += ["", "V:"]
        rows = [["deg", "dim", "basis"]]
        rec = report.v.to_record()["bases"]
        rows += [[d, str(len(b)), ", ".join(b)] for d, b in rec.items()]
        lines += _table(rows)
    if report.pairing is not None:
        p = report.pairing
        lines += ["", f"pairing (top degree {p.top_degree}, top class {p.top_class_text}):"]
        rows = [["i", "det", "signature", "matrix"]]
        for b in p.blocks:
            r = b.to_record()
            mat = "[" + "; ".join(" ".join(row) for row in r["matrix"]) + "]"
            rows.append([str(b.degree), str(r["det"]), str(r.get("signature", "-")), mat])
        lines += _table(rows)
    if report.checks:
        lines += ["", "checks:"] + [f"  {k}: {v}" for k, v in report.checks.items()]
    return "\n".join(lines) + "\n"


__all__ = ["Report", "run_pipeline", "format_text", "OUTPUTS", "UNCERTIFIED"]
