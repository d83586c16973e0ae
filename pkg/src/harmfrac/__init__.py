"""Harmonic-function classes under fractional-derivative coefficient weights:
construction, membership certification, extreme-point structure, and
numerical theorem verification."""

from .family import (
    ConvolutionClosureReport,
    DegenerateWeightError,
    MembershipViolation,
    WeightDecomposition,
    check_convolution_closure,
    convex_combine,
    convolve,
    decompose,
    extreme_point_analytic,
    extreme_point_coanalytic,
    reconstruct,
)
from .gammafn import beta, log_gamma, operator_weight
from .harmonic import (
    EvalPoint,
    HarmonicFunction,
    NegativeCoefficientForm,
    SingularEvaluationError,
    apply_operator,
    class_functional,
    class_functional_fd,
    coefficient_json,
    derivatives,
    dilatation,
    evaluate,
    jacobian,
    parse_coefficient_json,
)
from .membership import (
    ClassParams,
    MembershipReport,
    WeightPair,
    analytic_weight,
    boundary_function,
    certify_general,
    certify_negative_form,
    coanalytic_weight,
    coefficient_deficiency,
    specialized_weights,
)
from .verify import (
    STANDARD_GRID,
    DiskGrid,
    VerificationReport,
    find_necessity_witness,
    min_real_functional,
    radial_deficiency,
    random_member,
    random_violator,
    verify_necessity,
    verify_sufficiency,
)

__version__ = "0.1.0"
