"""Golden-value regression suite run by ``giq selftest``."""

from __future__ import annotations

from fractions import Fraction

from .groebner import MonomialOrder, QuotientRing
from .pipeline import run_pipeline
from .problem import p1_sl2_problem, pn_cstar_problem
from .series import preset_p1_sl2, preset_pn_cstar
from .truncation import verify_restriction_surjectivity

GOLDEN_BASIS = ["xi^5 + 3*xi^3*rho^2", "xi^4*rho + 1/3*xi^2*rho^3", "xi^3*rho^3", "xi^2*rho^5"]
GOLDEN_V = {
    0: ["1"], 2: ["rho", "xi"], 4: ["rho^2", "xi*rho", "xi^2"],
    6: ["xi*rho^2", "xi^2*rho", "xi^3"], 8: ["xi^2*rho^2", "xi^3*rho", "xi^4"],
    10: ["xi^2*rho^3", "xi^3*rho^2"], 12: ["xi^2*rho^4"],
}
F = Fraction
GOLDEN_BLOCKS = {
    2: ([[F(1), F(0)], [F(0), F(-1, 3)]], F(-1, 3), 0),
    4: ([[F(1), F(0), F(-1, 3)], [F(0), F(-1, 3), F(0)], [F(-1, 3), F(0), F(1)]], F(-8, 27), 1),
    6: ([[F(1), F(0), F(-1, 3)], [F(0), F(-1, 3), F(0)], [F(-1, 3), F(0), F(1)]], F(-8, 27), 1),
}


def _groebner():
    ring = QuotientRing.from_strings(
        [("xi", 2), ("rho", 2)], ["xi^2*(xi - rho)^3", "xi^2*(xi + rho)^3"],
        MonomialOrder("lex", ("xi", "rho")))
    got = ring.groebner.to_strings()
    return got == GOLDEN_BASIS, str(got)


def _pn_series():
    _, b = preset_pn_cstar(3, 2, 3)
    return b.to_list() == [1, 2, 3, 3, 3, 2, 1], str(b.to_list())


def _pn_v_and_pairing():
    report = run_pipeline(pn_cstar_problem(3, 2, 3))
    bases = report.v.to_record()["bases"]
    ok = {int(d): b for d, b in bases.items()} == GOLDEN_V
    for i, (m, det, sig) in GOLDEN_BLOCKS.items():
        blk = report.pairing.block(i)
        ok = ok and blk.matrix == m and blk.determinant == det and blk.signature == sig
    ok = ok and report.checks.get("series_vs_kernel") == "agree"
    return ok, f"betti {report.v.dimensions()}"


def _sl2_series():
    got = {n: preset_p1_sl2(n)[1].to_list() for n in (2, 3)}
    return got == {2: [1, 1], 3: [1, 6, 6, 1]}, str(got)


def _sl2_surjective():
    ok = True
    for n in (2, 3):
        spec = p1_sl2_problem(n)
        ring = spec.build_ring()
        cons = spec.build_constraints(ring)
        ok = ok and verify_restriction_surjectivity(ring, cons, n - 1, spec.max_degree // 2)
    return ok, "k >= n-1 for n = 2, 3"


CASES = [
    ("groebner basis of the C*-on-P7 relations", _groebner),
    ("intersection betti of pn-cstar(3,2,3)", _pn_series),
    ("V bases and pairing blocks of pn-cstar(3,2,3)", _pn_v_and_pairing),
    ("intersection betti of p1-sl2(2), p1-sl2(3)", _sl2_series),
    ("restriction surjectivity for p1-sl2", _sl2_surjective),
]


def run_selftest(out=None) -> bool:
    """Run every golden case; print one line each; return overall success."""
    all_ok = True
    for name, fn in CASES:
        ok, detail = fn()
        all_ok &= ok
        line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
        if out is not None:
            print(line, file=out)
    return all_ok
