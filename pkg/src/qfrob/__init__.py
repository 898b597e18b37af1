"""Exact-arithmetic Frobenius pushforward calculator for even quadrics."""

from .errors import (
    DegenerateDecomposition,
    InconsistentMultiplicity,
    MalformedShape,
    PreconditionFailed,
    QfrobError,
    SearchExhausted,
    UnsupportedParameters,
)
from .ring import MultiPoly, PrimeField, poly_mul, quadric_form, normal_form_mod_quadric
from .hilbert import h0_line, h0_spinor
from .intsolve import IntLinearSystem, solve_exact, solve_system
from .bundles import SheafSymbol, dual_symbol, h0, rank, reference_hom_ext
from .oracle import (
    SupportPrediction,
    line_in_pushforward_O,
    line_in_pushforward_S,
    spinor_in_pushforward_O,
    spinor_in_pushforward_S,
    spinor_threshold,
    support_prediction,
)
from .pushforward import (
    SpinorMultiplicityMatrix,
    SummandMultiset,
    decompose,
    line_multiplicity,
    pushforward_hilbert,
    spinor_multiplicity_matrix,
    split_spinor_multiplicities,
)
from .extensions import (
    ExtensionShape,
    analyze_extension_shape,
    forces_balanced_split,
    forcing_holds_for,
)
from .certify import CERTIFIED, FAILED, Certificate, certify_non_d_affine
from .matfac import (
    Involution,
    MatrixFactorization,
    Witness,
    apply_involution,
    build_factorization_pair,
    cosyzygy,
    dual,
    find_base_change_witness,
    verify_factorization,
)
from .presentations import (
    ModulePresentation,
    frobenius_pullback_presentation,
    spinor_presentation,
    spinor_sum_presentation,
)
from .homcalc import ext1_dim, graded_hom_dim, hom_into_pushforward_dim, stable_hom_dim

__all__ = [
    "CERTIFIED",
    "Certificate",
    "DegenerateDecomposition",
    "ExtensionShape",
    "FAILED",
    "InconsistentMultiplicity",
    "IntLinearSystem",
    "Involution",
    "MalformedShape",
    "MatrixFactorization",
    "ModulePresentation",
    "MultiPoly",
    "PreconditionFailed",
    "PrimeField",
    "QfrobError",
    "SearchExhausted",
    "SheafSymbol",
    "SpinorMultiplicityMatrix",
    "SummandMultiset",
    "SupportPrediction",
    "UnsupportedParameters",
    "Witness",
    "analyze_extension_shape",
    "apply_involution",
    "build_factorization_pair",
    "certify_non_d_affine",
    "cosyzygy",
    "decompose",
    "dual",
    "dual_symbol",
    "ext1_dim",
    "find_base_change_witness",
    "forces_balanced_split",
    "forcing_holds_for",
    "frobenius_pullback_presentation",
    "graded_hom_dim",
    "h0",
    "h0_line",
    "h0_spinor",
    "hom_into_pushforward_dim",
    "line_in_pushforward_O",
    "line_in_pushforward_S",
    "line_multiplicity",
    "normal_form_mod_quadric",
    "poly_mul",
    "pushforward_hilbert",
    "quadric_form",
    "rank",
    "reference_hom_ext",
    "solve_exact",
    "solve_system",
    "spinor_in_pushforward_O",
    "spinor_in_pushforward_S",
    "spinor_multiplicity_matrix",
    "spinor_presentation",
    "spinor_sum_presentation",
    "spinor_threshold",
    "split_spinor_multiplicities",
    "stable_hom_dim",
    "support_prediction",
    "verify_factorization",
]
