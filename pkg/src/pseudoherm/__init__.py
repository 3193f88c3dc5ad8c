"""Spectral toolkit for diagonalizable non-Hermitian matrices.

Constructs complete biorthonormal eigensystems, Hermitian metrics,
anti-Hermitian antilinear automorphisms and the antilinear symmetries they
generate; for real spectra it produces positive-definite metrics and the
similarity transform that maps the matrix to a Hermitian one.
"""

from ._linalg import CheckResult, max_abs
from .antilinear import (
    AntilinearOperator,
    CoefficientFamily,
    build_tau,
    canonical_tau,
    compose_antilinear,
    invert_tau,
    is_anti_pseudo_hermitian,
    recover_coefficients,
)
from .eigensystem import (
    BiorthonormalSystem,
    EigenLevel,
    SpectrumClass,
    SpectrumTag,
    biorthonormal_eigensystem,
    biorthonormality_residuals,
    classify_spectrum,
    reconstruct,
)
from .errors import (
    AmbiguousPairingError,
    AsymmetricCoefficientsError,
    AsymmetricPotentialError,
    DimensionMismatchError,
    NonFiniteError,
    NonHermitianEtaError,
    NotASymmetryError,
    NotDiagonalizableError,
    NotPTSymmetricError,
    NotPseudoHermitianError,
    NotSymmetricError,
    PseudoHermError,
    ResultNotHermitianError,
    SingularBlockError,
    SingularCoefficientsError,
    SingularEtaError,
    SingularInputError,
    SingularTauError,
    SingularTransformError,
    SpectrumNotRealError,
    UnpairedSpectrumError,
)
from .factor import basis_change, canonicalize_tau, coefficient_transform, symmetric_factor
from .hermitize import (
    PseudoCanonicalTransform,
    ReportStageError,
    apply_transform,
    hermitizing_transform,
    metric_from_transform,
    real_spectrum_equivalence_report,
)
from .metric import (
    MetricOperator,
    build_metric,
    evolution_invariance_check,
    indefinite_inner_product,
    is_pseudo_hermitian,
    metric_from_matrix,
    propagator,
    pseudo_adjoint,
)
from .ptmodel import (
    LatticeSpec,
    build_pt_hamiltonian,
    eta_from_tau_pt,
    lattice_from_dict,
    make_lattice,
    parity_matrix,
    pt_adapted_eigensystem,
    pt_commutation_residuals,
    time_reversal,
)
from .symmetry import (
    antilinear_symmetry,
    commutes_with,
    induced_symmetries,
    is_exact_symmetry,
    level_invariance_residuals,
)

__version__ = "0.1.0"
