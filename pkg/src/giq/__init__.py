"""Exact GIT quotient engine: unstable strata, balance checks, Poincare series,
the truncated subspace V of equivariant cohomology and intersection pairings."""

from .balance import BalanceVerdict, SliceSpec, Violation, check_linear_balance, check_weakly_balanced
from .errors import (
    BalanceError,
    DegenerateMatrixError,
    GiqError,
    InputError,
    IntegrityError,
    SignatureMismatch,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    QuotientRing,
    buchberger,
    graded_dimensions,
    normal_form,
    normal_monomials,
)
from .linalg import determinant, nullspace, rank
from .pairing import PairingReport, pairing_matrix, pairing_report, signature, top_class
from .pipeline import Report, run_pipeline
from .polynomial import GradedPolynomial, RingMap, RingSignature, apply_map, parse_polynomial
from .problem import ProblemSpec, p1_sl2_problem, parse_preset, parse_problem, pn_cstar_problem
from .series import (
    BettiPolynomial,
    PoincareSeries,
    UPoly,
    expand,
    morse_assemble,
    palindrome_check,
    preset_p1_sl2,
    preset_pn_cstar,
)
from .truncation import TruncationConstraint, VSpace, compute_v, verify_restriction_surjectivity
from .weights import IndexPoint, RepresentationWeights, RootData, index_set, min_norm_point, n_of_beta

__version__ = "0.1.0"
