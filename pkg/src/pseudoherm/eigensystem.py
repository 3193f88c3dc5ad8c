"""Complete biorthonormal eigensystems of diagonalizable complex matrices.

The central object is :class:`BiorthonormalSystem`: eigenvalues grouped into
levels with multiplicities, together with right eigenvector blocks ``psi``
and left eigenvector blocks ``phi`` satisfying

    H psi_n = E_n psi_n,        H^dagger phi_n = conj(E_n) phi_n,
    Phi^dagger Psi = 1,         Psi Phi^dagger = 1,

where ``Psi``/``Phi`` stack the blocks column-wise.  Everything downstream
(antilinear automorphisms, metrics, hermitization) is built on top of these
identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ._linalg import as_square_matrix, condition_number, max_abs
from .errors import AmbiguousPairingError, NotDiagonalizableError

DEFAULT_TOL = 1e-10
DEFAULT_COND_CEILING = 1e8
DEFAULT_REALNESS_TOL = 1e-8
CLUSTER_GAP_FACTOR = 1e-8


class SpectrumTag(str, enum.Enum):
    """Coarse classification of a discrete spectrum."""

    ALL_REAL = "all_real"
    CONJUGATE_PAIRED = "conjugate_paired"
    UNPAIRED = "unpaired"


@dataclass(frozen=True)
class EigenLevel:
    """One eigenvalue with its degenerate right/left eigenvector blocks.

    ``psi`` and ``phi`` are n x d arrays whose columns are the right and left
    eigenvectors of the level; the psi columns are orthonormal by
    construction (the in-level gauge is fixed by QR).
    """

    energy: complex
    psi: np.ndarray
    phi: np.ndarray

    @property
    def multiplicity(self) -> int:
        return self.psi.shape[1]


@dataclass(frozen=True)
class BiorthonormalSystem:
    """Grouped eigensystem with paired left/right eigenvector blocks."""

    dim: int
    levels: tuple[EigenLevel, ...]
    tol: float

    @property
    def psi_matrix(self) -> np.ndarray:
        """All right eigenvectors stacked as columns, level by level."""
        return np.hstack([lv.psi for lv in self.levels])

    @property
    def phi_matrix(self) -> np.ndarray:
        """All left eigenvectors stacked as columns, aligned with psi_matrix."""
        return np.hstack([lv.phi for lv in self.levels])

    @property
    def energies(self) -> np.ndarray:
        """Level energy repeated per column, aligned with psi_matrix."""
        return np.concatenate([[lv.energy] * lv.multiplicity for lv in self.levels])

    def level_slices(self) -> list[slice]:
        """Column ranges of each level inside the stacked matrices."""
        out, start = [], 0
        for lv in self.levels:
            out.append(slice(start, start + lv.multiplicity))
            start += lv.multiplicity
        return out


@dataclass(frozen=True)
class SpectrumClass:
    """Spectrum tag plus the involutive conjugate-pairing permutation.

    ``pairing[i]`` is the index of the level carrying conj(E_i); real levels
    map to themselves.
    """

    tag: SpectrumTag
    pairing: tuple[int, ...]
    realness_tol: float

    @property
    def is_real(self) -> bool:
        return self.tag is SpectrumTag.ALL_REAL


def _cluster_indices(values: np.ndarray, gap: float) -> list[list[int]]:
    """Connected components of the eigenvalue chain graph at distance <= gap."""
    n = len(values)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= gap:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def biorthonormal_eigensystem(
    H,
    tol: float = DEFAULT_TOL,
    cluster_gap: float | None = None,
    cond_ceiling: float = DEFAULT_COND_CEILING,
) -> BiorthonormalSystem:
    """Compute a complete biorthonormal eigensystem of a diagonalizable matrix.

    Parameters
    ----------
    H : array_like, shape (n, n)
        Complex matrix, finite entries.  Diagonalizability is checked, not
        assumed.
    tol : float
        Construction tolerance.  Every residual of the returned system
        (biorthonormality, completeness, eigen-equations, reconstruction)
        is verified to be below ``tol`` (relative to ``max|H|`` where the
        identity involves H).
    cluster_gap : float, optional
        Two raw eigenvalues belong to the same level iff their distance is
        at most this gap (chained).  Defaults to ``1e-8 * max|H|``.  The
        grouping rule is a numerical choice; it is reported alongside
        results.
    cond_ceiling : float
        Largest acceptable condition number of the raw eigenvector matrix;
        above it the input is declared numerically non-diagonalizable.

    Returns
    -------
    BiorthonormalSystem
        Levels sorted by (Re E, Im E); psi columns orthonormal within each
        level; phi derived from the inverse of the stacked psi matrix, so
        biorthonormality and completeness hold by construction up to
        inversion error.

    Raises
    ------
    NonFiniteError
        If H contains NaN/Inf.
    NotDiagonalizableError
        If the eigenvector matrix condition number exceeds ``cond_ceiling``
        or the verified residuals exceed ``tol`` (defective or
        near-defective input, or an unreachable tolerance).
    """
    H = as_square_matrix(H, "H")
    n = H.shape[0]
    scale = max_abs(H)
    if cluster_gap is None:
        cluster_gap = CLUSTER_GAP_FACTOR * scale

    w, v = np.linalg.eig(H)
    cond = condition_number(v)
    if cond > cond_ceiling:
        raise NotDiagonalizableError(
            f"eigenvector matrix condition number {cond:.3e} exceeds ceiling "
            f"{cond_ceiling:.3e}; input is defective or nearly so"
        )

    levels_raw = []
    for idx in _cluster_indices(w, cluster_gap):
        energy = complex(np.mean(w[idx]))
        q, _ = np.linalg.qr(v[:, idx])
        levels_raw.append((energy, q))
    levels_raw.sort(key=lambda t: (t[0].real, t[0].imag))

    psi = np.hstack([q for _, q in levels_raw])
    phi_rows = np.linalg.inv(psi)  # rows are the phi^dagger vectors
    levels = []
    start = 0
    for energy, q in levels_raw:
        d = q.shape[1]
        levels.append(EigenLevel(energy, q, phi_rows[start : start + d, :].conj().T))
        start += d

    sys = BiorthonormalSystem(dim=n, levels=tuple(levels), tol=tol)
    _verify_system(sys, H, tol, scale)
    return sys


def _verify_system(sys: BiorthonormalSystem, H: np.ndarray, tol: float, scale: float) -> None:
    psi, phi = sys.psi_matrix, sys.phi_matrix
    energies = sys.energies
    eye = np.eye(sys.dim)
    residuals = {
        "biorthonormality": max_abs(phi.conj().T @ psi - eye),
        "completeness": max_abs(psi @ phi.conj().T - eye),
    }
    hscale = max(scale, 1e-300)
    residuals["right_eigen"] = max_abs(H @ psi - psi * energies) / hscale
    residuals["left_eigen"] = max_abs(H.conj().T @ phi - phi * np.conj(energies)) / hscale
    residuals["reconstruction"] = max_abs((psi * energies) @ phi.conj().T - H) / hscale
    worst = max(residuals, key=residuals.get)
    if residuals[worst] > tol:
        raise NotDiagonalizableError(
            f"could not reach tolerance {tol:.1e}: {worst} residual is "
            f"{residuals[worst]:.3e}; input is near-defective, has spectral "
            f"clusters wider than tol but narrower than the cluster gap, or "
            f"tol is too tight for its conditioning"
        )


def biorthonormality_residuals(sys: BiorthonormalSystem) -> tuple[float, float]:
    """Max-norm residuals of Phi^dagger Psi = 1 and Psi Phi^dagger = 1."""
    psi, phi = sys.psi_matrix, sys.phi_matrix
    eye = np.eye(sys.dim)
    return max_abs(phi.conj().T @ psi - eye), max_abs(psi @ phi.conj().T - eye)


def classify_spectrum(
    sys: BiorthonormalSystem, realness_tol: float = DEFAULT_REALNESS_TOL
) -> SpectrumClass:
    """Classify the spectrum as all-real, conjugate-paired, or unpaired.

    A level is real when |Im E| <= realness_tol.  Non-real levels are matched
    to the nearest level carrying conj(E) within realness_tol, scanning in
    level-index order; the match must be unique and multiplicities must
    agree, otherwise the level counts as unpaired.

    Raises
    ------
    AmbiguousPairingError
        If two or more distinct candidate partners lie within realness_tol
        of the conjugate target — a sign that realness_tol is coarser than
        the level spacing.
    """
    energies = np.array([lv.energy for lv in sys.levels])
    mult = [lv.multiplicity for lv in sys.levels]
    k = len(energies)
    pairing = list(range(k))
    real = [abs(e.imag) <= realness_tol for e in energies]

    # candidate sets are computed up front so ambiguity is detected no matter
    # which endpoint of a near-tie is scanned first
    candidates: dict[int, list[int]] = {}
    for i in range(k):
        if real[i]:
            continue
        target = np.conj(energies[i])
        cands = [
            j
            for j in range(k)
            if j != i and not real[j] and abs(energies[j] - target) <= realness_tol
        ]
        if len(cands) > 1:
            raise AmbiguousPairingError(
                f"level {i} (E={energies[i]:.6g}) has {len(cands)} conjugate-partner "
                f"candidates within tolerance {realness_tol:.1e}"
            )
        candidates[i] = cands

    unpaired_exists = False
    for i, cands in candidates.items():
        if pairing[i] != i:
            continue  # already matched from the partner side
        if len(cands) == 1 and mult[cands[0]] == mult[i]:
            j = cands[0]
            pairing[i], pairing[j] = j, i
        else:
            unpaired_exists = True

    if all(real):
        tag = SpectrumTag.ALL_REAL
    elif unpaired_exists:
        tag = SpectrumTag.UNPAIRED
    else:
        tag = SpectrumTag.CONJUGATE_PAIRED
    return SpectrumClass(tag=tag, pairing=tuple(pairing), realness_tol=realness_tol)


def reconstruct(sys: BiorthonormalSystem, conjugate: bool = False) -> np.ndarray:
    """Rebuild the operator from its levels.

    With ``conjugate=False`` returns ``sum_n E_n psi_n phi_n^dagger`` (the
    original matrix); with ``conjugate=True`` returns
    ``sum_n conj(E_n) phi_n psi_n^dagger`` (its adjoint).
    """
    psi, phi = sys.psi_matrix, sys.phi_matrix
    energies = sys.energies
    if conjugate:
        return (phi * np.conj(energies)) @ psi.conj().T
    return (psi * energies) @ phi.conj().T
