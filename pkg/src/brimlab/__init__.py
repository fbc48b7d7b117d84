"""Exact Buchsbaum-Rim multiplicities and generalized Koszul complexes
over graded quotients of F_p[x_1..x_m]."""

from .poly import (
    INFINITE,
    AlgebraError,
    BudgetExceededError,
    ContextMismatchError,
    ContractError,
    PolyContext,
    Polynomial,
    VectorPolynomial,
)
from .groebner import Budget, GroebnerBasis, buchberger, normal_form, syzygy_basis
from .rings import (
    GradedRing,
    ParameterVerdict,
    RingElement,
    SubmoduleOfFree,
    ideal_colength,
    is_parameter_module,
    make_ring,
    min_generators,
    submodule_colength,
)
from .koszul import (
    FreeComplex,
    ModuleMatrix,
    build_koszul,
    expected_rank,
    export_triplets,
    fitting_ideal,
    verify_complex,
)
from .homology import (
    EulerTable,
    HomologyPresentation,
    InfiniteLengthError,
    acyclicity_report,
    all_homology,
    annihilation_check,
    euler_characteristics,
    homology,
    kernel_generators,
)
from .multiplicity import (
    BRFunctionTable,
    BRReport,
    SamplingError,
    SpreadResult,
    StabilizationError,
    br_coefficients,
    br_function_table,
    br_multiplicity,
    buchsbaum_spread,
    lambda_value,
    random_parameter_matrix,
    theorem_check,
)
from .dsl import ParseError, ProblemSpec, build, parse, spec_of
from .corpus import ENTRIES, CorpusEntry
from .verify import Violation, check_corpus, verify_instance

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "AlgebraError",
    "BudgetExceededError",
    "ContextMismatchError",
    "ContractError",
    "PolyContext",
    "Polynomial",
    "VectorPolynomial",
    "Budget",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "syzygy_basis",
    "GradedRing",
    "ParameterVerdict",
    "RingElement",
    "SubmoduleOfFree",
    "ideal_colength",
    "is_parameter_module",
    "make_ring",
    "min_generators",
    "submodule_colength",
    "FreeComplex",
    "ModuleMatrix",
    "build_koszul",
    "expected_rank",
    "export_triplets",
    "fitting_ideal",
    "verify_complex",
    "EulerTable",
    "HomologyPresentation",
    "InfiniteLengthError",
    "acyclicity_report",
    "all_homology",
    "annihilation_check",
    "euler_characteristics",
    "homology",
    "kernel_generators",
    "BRFunctionTable",
    "BRReport",
    "SamplingError",
    "SpreadResult",
    "StabilizationError",
    "br_coefficients",
    "br_function_table",
    "br_multiplicity",
    "buchsbaum_spread",
    "lambda_value",
    "random_parameter_matrix",
    "theorem_check",
    "ParseError",
    "ProblemSpec",
    "build",
    "parse",
    "spec_of",
    "ENTRIES",
    "CorpusEntry",
    "Violation",
    "check_corpus",
    "verify_instance",
    "__version__",
]
