"""Exception hierarchy shared by all modules."""


class PseudoHermError(Exception):
    """Base class for every error raised by this package."""


class NonFiniteError(PseudoHermError):
    """Input contains NaN or Inf entries."""


class DimensionMismatchError(PseudoHermError):
    """Operands have incompatible shapes."""


class NotDiagonalizableError(PseudoHermError):
    """Eigenvector matrix is numerically rank-deficient or the requested
    construction tolerance cannot be met (defective or near-defective input)."""


class AmbiguousPairingError(PseudoHermError):
    """Two conjugate-partner candidates are equidistant within tolerance;
    usually a sign of a misconfigured realness tolerance or cluster gap."""


class AsymmetricCoefficientsError(PseudoHermError):
    """A coefficient block is not symmetric."""


class SingularCoefficientsError(PseudoHermError):
    """A coefficient block is singular or too ill-conditioned to invert."""


class NonHermitianEtaError(PseudoHermError):
    """Candidate metric matrix is not Hermitian."""


class SingularEtaError(PseudoHermError):
    """Metric matrix is singular or too ill-conditioned to invert."""


class SingularTauError(PseudoHermError):
    """Antilinear operator matrix is singular or too ill-conditioned to invert."""


class UnpairedSpectrumError(PseudoHermError):
    """Spectrum has a complex eigenvalue without a conjugate partner, so no
    invertible Hermitian metric exists."""


class NotPseudoHermitianError(PseudoHermError):
    """Operator fails the metric intertwining identity within tolerance."""


class NotASymmetryError(PseudoHermError):
    """Candidate operator does not commute with the Hamiltonian."""


class SpectrumNotRealError(PseudoHermError):
    """Hermitization requested for a spectrum that is not entirely real."""


class SingularTransformError(PseudoHermError):
    """Similarity transform matrix is singular or too ill-conditioned."""


class NotSymmetricError(PseudoHermError):
    """Matrix expected to be complex symmetric is not."""


class SingularInputError(PseudoHermError):
    """Matrix to be factorized is numerically singular."""


class SingularBlockError(PseudoHermError):
    """A per-level basis-change block is singular or too ill-conditioned."""


class AsymmetricPotentialError(PseudoHermError):
    """Lattice potential samples violate the required parity."""


class NotPTSymmetricError(PseudoHermError):
    """Hamiltonian does not commute with the parity-conjugation map."""


class ResultNotHermitianError(PseudoHermError):
    """Composed candidate metric fails Hermiticity or the intertwining check;
    the supplied antilinear operator is inconsistent with the Hamiltonian."""
