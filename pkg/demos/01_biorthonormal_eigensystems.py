#!/usr/bin/env python3
"""Biorthonormal eigensystems of a non-Hermitian matrix.

We plant a matrix with known eigenvalues (including a degenerate level and
a complex-conjugate pair), rebuild its complete biorthonormal eigensystem,
and verify the defining identities numerically.
"""

import numpy as np

from pseudoherm import (
    biorthonormal_eigensystem,
    biorthonormality_residuals,
    classify_spectrum,
    reconstruct,
)

rng = np.random.default_rng(1)

# Plant H = S diag(E) S^{-1} with a d=2 level at 0.5 and the pair 1 +- 2i.
values = np.array([1 + 2j, 1 - 2j, 0.5, 0.5, -1.0, 3.0])
s = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
h = s @ np.diag(values) @ np.linalg.inv(s)

system = biorthonormal_eigensystem(h, tol=1e-10)
print("levels (energy, multiplicity):")
for lv in system.levels:
    print(f"  {lv.energy:+.6f}   d={lv.multiplicity}")

# The left/right blocks satisfy Phi^dag Psi = 1 and Psi Phi^dag = 1.
r_ortho, r_complete = biorthonormality_residuals(system)
print(f"biorthonormality residual: {r_ortho:.2e}")
print(f"completeness residual:     {r_complete:.2e}")

# Summing E_n |psi_n><phi_n| reproduces H; conjugating gives H^dagger.
err_h = np.max(np.abs(reconstruct(system) - h))
err_hdag = np.max(np.abs(reconstruct(system, conjugate=True) - h.conj().T))
print(f"reconstruction of H:       {err_h:.2e}")
print(f"reconstruction of H^dag:   {err_hdag:.2e}")

cls = classify_spectrum(system)
print(f"spectrum class: {cls.tag.value}, pairing {cls.pairing}")
