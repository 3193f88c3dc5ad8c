#!/usr/bin/env python3
"""Anti-Hermitian antilinear automorphisms attached to an eigensystem.

Every diagonalizable matrix H satisfies H^dagger tau = tau H for the
antilinear map tau built from its left eigenvectors.  We construct the
canonical automorphism, a general coefficient family, its inverse, and
read the coefficients back off the operator.
"""

import numpy as np

from pseudoherm import (
    biorthonormal_eigensystem,
    build_tau,
    canonical_tau,
    compose_antilinear,
    invert_tau,
    is_anti_pseudo_hermitian,
    recover_coefficients,
)
from pseudoherm.ensembles import planted_matrix, random_coefficients

rng = np.random.default_rng(2)
pm = planted_matrix(rng, 5, "paired")
h = pm.matrix
system = biorthonormal_eigensystem(h)

# Canonical automorphism: identity coefficients, matrix Phi Phi^T.
tau = canonical_tau(system)
print(f"tau anti-Hermitian (m = m^T): {tau.is_anti_hermitian()}")
check = is_anti_pseudo_hermitian(h, tau)
print(f"H^dag tau = tau H residual:   {check.residual:.2e} -> {check.ok}")

# Antilinearity in action: tau(a zeta) = conj(a) tau(zeta).
zeta = rng.standard_normal(5) + 1j * rng.standard_normal(5)
lhs = tau.apply(1j * zeta)
rhs = -1j * tau.apply(zeta)
print(f"antilinearity check:          {np.max(np.abs(lhs - rhs)):.2e}")

# A general symmetric invertible coefficient family works equally well.
coeffs = random_coefficients(rng, system)
tau_c = build_tau(system, coeffs)
tau_c_inv = invert_tau(system, coeffs)
resid = np.max(np.abs(compose_antilinear(tau_c, tau_c_inv) - np.eye(5)))
print(f"tau o tau^-1 = 1 residual:    {resid:.2e}")

# The overlaps <psi_b| tau |psi_a> recover the planted coefficients.
recovered = recover_coefficients(system, tau_c)
worst = max(
    np.max(np.abs(got - want)) for got, want in zip(recovered.blocks, coeffs.blocks)
)
print(f"coefficient recovery error:   {worst:.2e}")
