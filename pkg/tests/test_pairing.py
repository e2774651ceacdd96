from fractions import Fraction as F
import random

import pytest

from giq.errors import DegenerateMatrixError, IntegrityError
from giq.linalg import matmul, transpose
from giq.pairing import is_symmetric, pairing_matrix, signature, top_class
from giq.problem import p1_sl2_problem, pn_cstar_problem
from giq.truncation import compute_v


@pytest.fixture(scope="module")
def v():
    spec = pn_cstar_problem(3, 2, 3)
    ring = spec.build_ring()
    return compute_v(ring, spec.build_constraints(ring), 12)


def test_top_class(v):
    assert v.ring.format(top_class(v)) == "xi^2*rho^4"


def test_outer_block(v):
    assert pairing_matrix(v, 2) == [[1, 0], [0, F(-1, 3)]]


def test_transpose_relation(v):
    for i in (0, 2, 4, 6):
        assert pairing_matrix(v, 12 - i) == transpose(pairing_matrix(v, i))
    assert is_symmetric(pairing_matrix(v, 6))


def test_signature_examples():
    assert signature([[1, 0], [0, -1]]) == 0
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == 1
    with pytest.raises(DegenerateMatrixError):
        signature([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        signature([[1, 2], [3, 4]])


def test_signature_congruence_invariance():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 4)
        d = [rng.choice([-2, -1, 1, 3]) for _ in range(n)]
        m = [[F(d[i]) if i == j else F(0) for j in range(n)] for i in range(n)]
        p = [[F(rng.randint(-3, 3)) for j in range(n)]
             for i in range(n)]
        for i in range(n):
            p[i][i] += 7  # diagonally dominant, hence invertible
        want = sum(1 if x > 0 else -1 for x in d)
        assert signature(matmul(matmul(transpose(p), m), p)) == want


def test_top_class_must_be_one_dimensional(v):
    from giq.truncation import VSpace
    fake = VSpace(v.ring, v.constraints, 4, {0: v.bases[0], 2: v.bases[2]}, v.betti)
    with pytest.raises(IntegrityError):
        top_class(fake)


def test_sl2_top_class_is_not_monomial():
    spec = p1_sl2_problem(2)
    ring = spec.build_ring()
    v2 = compute_v(ring, spec.build_constraints(ring), spec.max_degree)
    assert len(top_class(v2).terms) == 4
    assert pairing_matrix(v2, 0) == [[1]]
