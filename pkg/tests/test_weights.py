from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from giq.errors import InputError
from giq.weights import RepresentationWeights, RootData, dot, index_set, min_norm_point, n_of_beta

CSTAR = RepresentationWeights.from_pairs([((1,), 3), ((0,), 2), ((-1,), 3)])
SL2_ROOTS = RootData(((2,), (-2,)), ((2,),))


def test_min_norm_examples():
    x, cert = min_norm_point([(1, 0), (0, 1)])
    assert x == (F(1, 2), F(1, 2))
    assert cert == [(0, F(1, 2)), (1, F(1, 2))]
    assert min_norm_point([(2, 1)])[0] == (2, 1)
    assert min_norm_point([(1,), (-1,)])[0] == (0,)


def test_n_of_beta_example():
    assert n_of_beta(CSTAR, (1,)) == 5
    with pytest.raises(InputError):
        n_of_beta(CSTAR, (0,))


def test_cstar_index_set():
    pts = index_set(CSTAR)
    assert [p.beta for p in pts] == [(-1,), (1,)]
    assert [p.codim for p in pts] == [10, 10]


def test_single_weight():
    pts = index_set(RepresentationWeights.from_pairs([((2, 1), 4)]))
    assert len(pts) == 1 and pts[0].beta == (2, 1) and pts[0].n_beta == 0 and pts[0].codim == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coincident_points_codim(n):
    # r coincident points on P^1 give torus weights +1 (2n - r times) and -1 (r times)
    for r in range(n + 1, 2 * n):
        rep = RepresentationWeights.from_pairs([((1,), 2 * n - r), ((-1,), r)])
        pts = index_set(rep, RootData(((2,), (-2,)), ((2,),)))
        assert [(p.beta, p.codim) for p in pts] == [((1,), 2 * (r - 1))]


def test_chamber_filters_negative():
    rep = RepresentationWeights.from_pairs([((2,), 1), ((-2,), 1), ((0,), 1)])
    assert [p.beta for p in index_set(rep, SL2_ROOTS)] == [(2,)]
    assert index_set(rep, SL2_ROOTS)[0].moved_roots == 2


def test_roots_need_chamber():
    with pytest.raises(InputError):
        RootData(((2,), (-2,)), ())


pt = st.tuples(st.integers(-5, 5), st.integers(-5, 5))


@settings(max_examples=80, deadline=None)
@given(st.lists(pt, min_size=1, max_size=7))
def test_wolfe_optimality(points):
    x, cert = min_norm_point(points)
    assert sum(c for _, c in cert) == 1 and all(c > 0 for _, c in cert)
    assert tuple(sum(c * points[i][k] for i, c in cert) for k in range(2)) == x
    # first-order condition: no input point lies strictly closer in direction x
    assert all(dot(x, p) >= dot(x, x) for p in points)


@settings(max_examples=40, deadline=None)
@given(st.lists(pt, min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_min_norm_permutation_invariant(points, rnd):
    shuffled = list(points)
    rnd.shuffle(shuffled)
    assert min_norm_point(points)[0] == min_norm_point(shuffled)[0]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(pt, st.integers(1, 3)), min_size=1, max_size=4), st.integers(2, 4))
def test_index_set_scaling(pairs, k):
    rep = RepresentationWeights.from_pairs(pairs, 2)
    base = index_set(rep)
    scaled = index_set(rep.scaled(k))
    assert [tuple(k * x for x in p.beta) for p in base] == [p.beta for p in scaled]
    assert [p.codim for p in base] == [p.codim for p in scaled]
