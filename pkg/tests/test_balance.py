from fractions import Fraction as F

from giq.balance import SliceSpec, check_linear_balance, check_weakly_balanced
from giq.problem import p1_sl2_problem, pn_cstar_problem
from giq.weights import RepresentationWeights


def slice_(label, pairs, dim_h=1, subs=()):
    return SliceSpec(label, dim_h, RepresentationWeights.from_pairs(pairs, 1), sub_loci=subs)


def test_balanced_cstar_slice():
    s = slice_("S", [((1,), 3), ((-1,), 3)])
    assert s.n_h == 5
    assert check_linear_balance(s).passed


def test_unbalanced_slice_reports_beta():
    v = check_linear_balance(slice_("S", [((1,), 2), ((-1,), 1)]))
    assert not v.passed
    assert v.violations[0].beta == (F(1),)
    assert v.violations[0].lhs == 2 and v.violations[0].rhs == 2


def test_weak_balance_is_conjunction():
    good = slice_("good", [((1,), 1), ((-1,), 1)])
    bad = slice_("bad", [((1,), 3), ((-1,), 1)])
    assert check_weakly_balanced([good]).passed
    verdict = check_weakly_balanced([good, bad])
    assert not verdict.passed and {v.label for v in verdict.violations} == {"bad"}
    nested = slice_("outer", [((1,), 1), ((-1,), 1)], subs=(bad,))
    assert not check_weakly_balanced([nested]).passed


def test_presets_balanced():
    assert check_weakly_balanced(pn_cstar_problem(3, 2, 3).slices).passed
    for n in (2, 3, 4):
        assert check_weakly_balanced(p1_sl2_problem(n).slices).passed


def test_record_shape():
    rec = check_linear_balance(slice_("S", [((1,), 2), ((-1,), 1)])).to_record()
    assert rec == {"passed": False,
                   "violations": [{"label": "S", "beta": ["1"], "lhs": 2, "rhs": "2"}]}
