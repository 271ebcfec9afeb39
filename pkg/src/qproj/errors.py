"""Exception hierarchy for qproj.

Every precondition or numerical failure maps to a distinct class so callers
(and the CLI exit-code logic) can discriminate without string matching.
"""


class QprojError(Exception):
    """Base class for all qproj errors."""


class DegenerateInput(QprojError):
    """Input too close to zero / degenerate to operate on (e.g. inverting ~0)."""


class Singular(QprojError):
    """Matrix is numerically singular where invertibility is required."""


class NotUnimodular(QprojError):
    """det_h differs from 1 beyond tolerance where SL membership is required."""


class NotReal(QprojError):
    """Matrix has quaternionic/imaginary parts where a real matrix is required."""


class NonRealCoefficient(QprojError):
    """A coefficient that must be real carries too large an imaginary residue."""


class SpectralFailure(QprojError):
    """Eigenvalues of the complex adjoint could not be grouped into conjugate pairs."""


class LiftFailure(QprojError):
    """A lifted eigenvector does not satisfy its defining residual bound."""


class IllConditioned(QprojError):
    """Jordan extraction could not meet its residual target.

    Carries the best achieved relative residual in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotSimple(QprojError):
    """Matrix is not conjugate to a real matrix."""


class NotReversible(QprojError):
    """Matrix is not conjugate to its inverse in SL(3,H)."""


class NotStronglyReversible(QprojError):
    """Matrix is not reversed by any involution in SL(3,H)."""


class CertificateError(QprojError):
    """A constructed witness failed its own defining equations."""
