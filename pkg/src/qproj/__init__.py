"""qproj: classification and decomposition of 3x3 quaternionic projective transformations.

The package classifies elements of SL(3,H) / PSL(3,H) by dynamical type,
decides reversibility and strong reversibility with explicit certified
witnesses, and decomposes arbitrary unimodular elements into at most four
simple factors (each conjugate to a real matrix).
"""

from .classify import (
    DynType,
    Major,
    Minor,
    TracePair,
    classification_report,
    classify_sl3r,
    classify_via_simple,
    discriminant_f,
    dynamical_type,
    unit_modulus_iff_traces_equal,
)
from .decompose import (
    Decomposition,
    SimpleCertificate,
    decompose_simple,
    is_simple,
    pair_rotation_split,
    realify,
)
from .errors import (
    CertificateError,
    DegenerateInput,
    IllConditioned,
    LiftFailure,
    NonRealCoefficient,
    NotReal,
    NotReversible,
    NotSimple,
    NotStronglyReversible,
    NotUnimodular,
    QprojError,
    Singular,
    SpectralFailure,
)
from .matrix import (
    CharPoly6,
    QMatrix3,
    char_poly_h,
    det_h,
    inverse,
    normalize_to_sl,
    require_unimodular,
    self_dual_check,
)
from .quaternion import (
    ClassRep,
    DEFAULT_TOL,
    Quaternion,
    class_representative,
    commutant_membership,
    similar,
)
from .reversibility import (
    ReversibilityReport,
    involution_reverser,
    is_negative_reversible,
    is_reversible_sl,
    is_strongly_reversible_sl,
    negative_reverser,
    psl_report,
    random_reverser_solution,
    reverser,
    reverser_equation_basis,
    two_skew_involutions,
)
from .spectral import (
    EigenClass,
    JordanData,
    eigenvector_lift,
    is_diagonalizable,
    jordan_form,
    minimal_poly_structure,
    right_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "CharPoly6",
    "CertificateError",
    "ClassRep",
    "DEFAULT_TOL",
    "Decomposition",
    "DegenerateInput",
    "DynType",
    "EigenClass",
    "IllConditioned",
    "JordanData",
    "LiftFailure",
    "Major",
    "Minor",
    "NonRealCoefficient",
    "NotReal",
    "NotReversible",
    "NotSimple",
    "NotStronglyReversible",
    "NotUnimodular",
    "QMatrix3",
    "QprojError",
    "Quaternion",
    "ReversibilityReport",
    "SimpleCertificate",
    "Singular",
    "SpectralFailure",
    "TracePair",
    "char_poly_h",
    "class_representative",
    "classification_report",
    "classify_sl3r",
    "classify_via_simple",
    "commutant_membership",
    "decompose_simple",
    "det_h",
    "discriminant_f",
    "dynamical_type",
    "eigenvector_lift",
    "inverse",
    "involution_reverser",
    "is_diagonalizable",
    "is_negative_reversible",
    "is_reversible_sl",
    "is_simple",
    "is_strongly_reversible_sl",
    "jordan_form",
    "minimal_poly_structure",
    "negative_reverser",
    "normalize_to_sl",
    "pair_rotation_split",
    "psl_report",
    "random_reverser_solution",
    "realify",
    "require_unimodular",
    "reverser",
    "reverser_equation_basis",
    "right_eigenvalues",
    "self_dual_check",
    "similar",
    "two_skew_involutions",
]
