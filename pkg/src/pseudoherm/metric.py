"""Hermitian metric operators and the intertwining checks built on them.

A metric is an invertible Hermitian matrix ``eta``; the operator H is
pseudo-Hermitian with respect to it when ``H^dagger eta = eta H``.  For a
spectrum that is real or conjugate-paired, a metric is assembled from the
left eigenvector blocks: real levels contribute ``phi_n phi_n^dagger`` and
conjugate pairs contribute the cross terms
``phi_n phi_nbar^dagger + phi_nbar phi_n^dagger``.  With an all-real
spectrum this is ``Phi Phi^dagger``, positive-definite with natural factor
``Phi``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._linalg import (
    CheckResult,
    as_square_matrix,
    as_vector,
    condition_number,
    hermitian_defect,
    make_check,
    max_abs,
    require_same_dim,
    solve,
)
from .eigensystem import (
    DEFAULT_COND_CEILING,
    DEFAULT_TOL,
    BiorthonormalSystem,
    SpectrumClass,
    SpectrumTag,
    reconstruct,
)
from .errors import (
    DimensionMismatchError,
    NonHermitianEtaError,
    NotPseudoHermitianError,
    PseudoHermError,
    SingularEtaError,
    UnpairedSpectrumError,
)


@dataclass(frozen=True)
class MetricOperator:
    """Invertible Hermitian metric, optionally in factored form.

    When ``positive_definite`` is set, ``factor`` holds a matrix O with
    ``eta = O O^dagger``.
    """

    matrix: np.ndarray
    positive_definite: bool
    factor: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _eta_matrix(eta) -> np.ndarray:
    if isinstance(eta, MetricOperator):
        return eta.matrix
    return as_square_matrix(eta, "eta")


def metric_from_matrix(
    eta,
    tol: float = DEFAULT_TOL,
    cond_ceiling: float = DEFAULT_COND_CEILING,
) -> MetricOperator:
    """Wrap and validate an externally supplied metric matrix.

    Checks Hermiticity and invertibility; determines positive-definiteness
    from the spectrum and, when positive, attaches a Cholesky factor.
    """
    m = as_square_matrix(eta, "eta")
    if hermitian_defect(m) > tol * max(max_abs(m), 1e-300):
        raise NonHermitianEtaError("candidate metric is not Hermitian within tolerance")
    if condition_number(m) > cond_ceiling:
        raise SingularEtaError("candidate metric is singular or too ill-conditioned")
    m = (m + m.conj().T) / 2.0
    eigenvalues = np.linalg.eigvalsh(m)
    positive = bool(eigenvalues[0] > 0.0)
    factor = np.linalg.cholesky(m) if positive else None
    return MetricOperator(matrix=m, positive_definite=positive, factor=factor)


def is_pseudo_hermitian(H, eta, tol: float = DEFAULT_TOL) -> CheckResult:
    """Check the intertwining identity ``H^dagger eta = eta H``.

    ok iff ``max|H^dagger eta - eta H| <= tol * max|H| * max|eta|``.
    """
    H = as_square_matrix(H, "H")
    m = _eta_matrix(eta)
    require_same_dim(H, m, "H and eta")
    if hermitian_defect(m) > tol * max(max_abs(m), 1e-300):
        raise NonHermitianEtaError("eta is not Hermitian within tolerance")
    raw = max_abs(H.conj().T @ m - m @ H)
    return make_check(raw, max_abs(H) * max_abs(m), tol)


def build_metric(
    sys: BiorthonormalSystem,
    cls: SpectrumClass,
    weights=None,
    cond_ceiling: float = DEFAULT_COND_CEILING,
) -> MetricOperator:
    """Metric assembled from the left eigenvector blocks of the system.

    Parameters
    ----------
    sys, cls : the eigensystem and its spectrum classification.
    weights : sequence of float, optional
        Strictly positive per-level weights; members of a conjugate pair
        share the weight of the lower-indexed level.  Different weights give
        different admissible metrics (the metric is never unique), all
        satisfying the same intertwining identity.  Default: all ones.

    Raises
    ------
    UnpairedSpectrumError
        If the classification is unpaired: no invertible Hermitian metric
        intertwines H and H^dagger in that case.
    """
    if cls.tag is SpectrumTag.UNPAIRED:
        raise UnpairedSpectrumError(
            "spectrum has an unpaired complex eigenvalue; no Hermitian metric exists"
        )
    k = len(sys.levels)
    if len(cls.pairing) != k:
        raise DimensionMismatchError("spectrum class does not match the system")
    if weights is None:
        w = np.ones(k)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != (k,):
            raise DimensionMismatchError(f"need {k} weights, got shape {w.shape}")
        if np.any(w <= 0.0):
            raise ValueError("metric weights must be strictly positive")

    eta = np.zeros((sys.dim, sys.dim), dtype=np.complex128)
    for i, lv in enumerate(sys.levels):
        j = cls.pairing[i]
        wi = w[min(i, j)]
        if j == i:
            eta += wi * (lv.phi @ lv.phi.conj().T)
        elif j > i:
            pj = sys.levels[j].phi
            eta += wi * (lv.phi @ pj.conj().T + pj @ lv.phi.conj().T)

    if cls.tag is SpectrumTag.ALL_REAL:
        col_w = np.concatenate([[w[i]] * lv.multiplicity for i, lv in enumerate(sys.levels)])
        factor = sys.phi_matrix * np.sqrt(col_w)
        metric = MetricOperator(matrix=eta, positive_definite=True, factor=factor)
    else:
        metric = MetricOperator(matrix=eta, positive_definite=False, factor=None)

    if condition_number(eta) > cond_ceiling:
        raise SingularEtaError("constructed metric is too ill-conditioned")
    check = is_pseudo_hermitian(reconstruct(sys), metric, sys.tol)
    if not check.ok:
        raise PseudoHermError(
            f"constructed metric fails the intertwining identity "
            f"(residual {check.residual:.3e}); the system is inconsistent"
        )
    return metric


def pseudo_adjoint(H, eta) -> np.ndarray:
    """The metric-twisted adjoint ``eta^{-1} H^dagger eta``.

    H is pseudo-Hermitian with respect to eta exactly when the result
    equals H.
    """
    H = as_square_matrix(H, "H")
    m = _eta_matrix(eta)
    require_same_dim(H, m, "H and eta")
    return solve(m, H.conj().T @ m, SingularEtaError, "eta")


def indefinite_inner_product(eta, xi, zeta) -> complex:
    """The (generally indefinite) inner product ``xi^dagger eta zeta``."""
    m = _eta_matrix(eta)
    xi = as_vector(xi, m.shape[0], "xi")
    zeta = as_vector(zeta, m.shape[0], "zeta")
    return complex(xi.conj() @ m @ zeta)


def propagator(H, t: float) -> np.ndarray:
    """Evolution operator ``exp(-i H t)`` (scaling-and-squaring Pade)."""
    H = as_square_matrix(H, "H")
    return scipy.linalg.expm(-1j * t * H)


def evolution_invariance_check(
    H,
    eta,
    t: float,
    tol: float = DEFAULT_TOL,
    strict: bool = False,
) -> CheckResult:
    """Check that the metric inner product is conserved by ``exp(-i H t)``.

    ok iff ``max|U^dagger eta U - eta| <= tol * max|eta|`` with
    ``U = exp(-i H t)``.  Invariance holds for all t exactly when H is
    pseudo-Hermitian with respect to eta; the pseudo-Hermiticity
    precondition is evaluated first and, with ``strict=True``, its failure
    raises ``NotPseudoHermitianError`` instead of reporting the (expected)
    invariance failure.
    """
    H = as_square_matrix(H, "H")
    m = _eta_matrix(eta)
    require_same_dim(H, m, "H and eta")
    pre = is_pseudo_hermitian(H, m, tol)
    if strict and not pre.ok:
        raise NotPseudoHermitianError(
            f"H is not pseudo-Hermitian w.r.t. eta (residual {pre.residual:.3e}); "
            "invariance is not expected"
        )
    u = propagator(H, t)
    raw = max_abs(u.conj().T @ m @ u - m)
    return make_check(raw, max_abs(m), tol)
