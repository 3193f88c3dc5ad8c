"""Antilinear operators and the anti-Hermitian automorphisms attached to an
eigensystem.

An antilinear operator is represented by a plain matrix ``m`` acting as
``zeta -> m conj(zeta)``; the conjugation is structural, never a runtime
flag.  In this representation an operator is anti-Hermitian exactly when
``m = m^T``, and every identity used here becomes a checkable matrix
equation.  For a biorthonormal system with levels ``n`` and symmetric
invertible coefficient blocks ``c``, the attached automorphisms are

    tau      :  m  = sum_n  phi_n  c_n        phi_n^T
    tau^{-1} :  m' = sum_n  psi_n  conj(c_n^{-1}) psi_n^T

and the anti-pseudo-Hermiticity of H with respect to tau reads
``H^dagger m = m conj(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._linalg import (
    CheckResult,
    as_square_matrix,
    condition_number,
    make_check,
    max_abs,
    require_same_dim,
    symmetric_defect,
)
from .eigensystem import DEFAULT_COND_CEILING, DEFAULT_TOL, BiorthonormalSystem
from .errors import (
    AsymmetricCoefficientsError,
    DimensionMismatchError,
    SingularCoefficientsError,
)


@dataclass(frozen=True)
class AntilinearOperator:
    """The antilinear map ``zeta -> matrix @ conj(zeta)``."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, zeta) -> np.ndarray:
        """Apply to a vector; antilinear in the argument."""
        zeta = np.asarray(zeta, dtype=np.complex128)
        if zeta.shape != (self.dim,):
            raise DimensionMismatchError(
                f"vector has shape {zeta.shape}, operator dimension is {self.dim}"
            )
        return self.matrix @ np.conj(zeta)

    def is_anti_hermitian(self, tol: float = DEFAULT_TOL) -> bool:
        """Matrix-transpose symmetry, the representation of anti-Hermiticity."""
        return symmetric_defect(self.matrix) <= tol * max(max_abs(self.matrix), 1e-300)

    @property
    def adjoint(self) -> "AntilinearOperator":
        """Adjoint in the antilinear convention <zeta|A^dag xi> = <xi|A zeta>;
        its matrix is the plain transpose.  A = A.adjoint iff anti-Hermitian."""
        return AntilinearOperator(self.matrix.T)


@dataclass(frozen=True)
class CoefficientFamily:
    """Per-level symmetric invertible blocks defining an automorphism tau."""

    blocks: tuple[np.ndarray, ...]

    @classmethod
    def identity_for(cls, sys: BiorthonormalSystem) -> "CoefficientFamily":
        return cls(tuple(np.eye(lv.multiplicity, dtype=np.complex128) for lv in sys.levels))

    def validate_against(
        self,
        sys: BiorthonormalSystem,
        cond_ceiling: float = DEFAULT_COND_CEILING,
        sym_tol: float = 1e-10,
    ) -> None:
        if len(self.blocks) != len(sys.levels):
            raise DimensionMismatchError(
                f"{len(self.blocks)} coefficient blocks for {len(sys.levels)} levels"
            )
        for k, (block, lv) in enumerate(zip(self.blocks, sys.levels)):
            b = np.asarray(block)
            if b.shape != (lv.multiplicity, lv.multiplicity):
                raise DimensionMismatchError(
                    f"block {k} has shape {b.shape}, level multiplicity is {lv.multiplicity}"
                )
            if symmetric_defect(b) > sym_tol * max(max_abs(b), 1.0):
                raise AsymmetricCoefficientsError(f"coefficient block {k} is not symmetric")
            if condition_number(b) > cond_ceiling:
                raise SingularCoefficientsError(
                    f"coefficient block {k} is singular or too ill-conditioned"
                )


def compose_antilinear(s: AntilinearOperator, t: AntilinearOperator) -> np.ndarray:
    """Matrix of the linear operator s o t (the two conjugations cancel)."""
    require_same_dim(s.matrix, t.matrix, "antilinear operators")
    return s.matrix @ np.conj(t.matrix)


def build_tau(
    sys: BiorthonormalSystem, coeffs: CoefficientFamily | None = None
) -> AntilinearOperator:
    """Anti-Hermitian automorphism tau attached to (sys, coeffs).

    Unspecified coefficients default to identity blocks, the canonical
    choice.  The result satisfies m = m^T exactly up to accumulation error
    and intertwines H^dagger with conj(H).
    """
    if coeffs is None:
        coeffs = CoefficientFamily.identity_for(sys)
    coeffs.validate_against(sys)
    m = np.zeros((sys.dim, sys.dim), dtype=np.complex128)
    for lv, block in zip(sys.levels, coeffs.blocks):
        m += lv.phi @ np.asarray(block, dtype=np.complex128) @ lv.phi.T
    return AntilinearOperator(m)


def canonical_tau(sys: BiorthonormalSystem) -> AntilinearOperator:
    """build_tau with identity coefficients; every diagonalizable operator is
    anti-pseudo-Hermitian with respect to this automorphism."""
    return build_tau(sys, None)


def invert_tau(
    sys: BiorthonormalSystem, coeffs: CoefficientFamily | None = None
) -> AntilinearOperator:
    """Inverse automorphism tau^{-1} for the same (sys, coeffs)."""
    if coeffs is None:
        coeffs = CoefficientFamily.identity_for(sys)
    coeffs.validate_against(sys)
    m = np.zeros((sys.dim, sys.dim), dtype=np.complex128)
    for lv, block in zip(sys.levels, coeffs.blocks):
        inv_block = np.linalg.inv(np.asarray(block, dtype=np.complex128))
        m += lv.psi @ np.conj(inv_block) @ lv.psi.T
    return AntilinearOperator(m)


def is_anti_pseudo_hermitian(
    H, tau: AntilinearOperator, tol: float = DEFAULT_TOL
) -> CheckResult:
    """Check ``H^dagger tau = tau H`` in matrix form.

    Returns ok iff ``max|H^dagger m - m conj(H)| <= tol * max|H| * max|m|``;
    the normalized residual is always reported.
    """
    H = as_square_matrix(H, "H")
    m = tau.matrix
    require_same_dim(H, m, "H and tau")
    raw = max_abs(H.conj().T @ m - m @ np.conj(H))
    return make_check(raw, max_abs(H) * max_abs(m), tol)


def recover_coefficients(sys: BiorthonormalSystem, tau: AntilinearOperator) -> CoefficientFamily:
    """Read the coefficient blocks back off an automorphism.

    Uses the overlap identity ``psi_b^dagger m conj(psi_a) = c_ba`` level by
    level; for a tau built from (sys, c) this reproduces c up to rounding.
    """
    if tau.dim != sys.dim:
        raise DimensionMismatchError("tau dimension does not match the system")
    blocks = []
    for lv in sys.levels:
        rec = lv.psi.conj().T @ tau.matrix @ np.conj(lv.psi)
        blocks.append(rec)
    return CoefficientFamily(tuple(blocks))
