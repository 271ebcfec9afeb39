"""Simple elements: testing, real conjugates, and <= 4-factor decompositions.

An element of SL(3,H) is *simple* when it is conjugate to a real matrix;
that happens exactly when every non-real eigenvalue class owns an even
number of Jordan blocks, which in the 3x3 case means all classes are real
or the matrix is diagonalizable with a single non-real class of
multiplicity two.

Any unimodular element factors into at most four simple elements.  The
factorization routes on the Jordan shape:

  unit diagonal        -> 3 factors (half-angle pair splits)
  unit J2 (+) point    -> 3 factors (W Q R W^-1 with R half-angle split)
  unit J3              -> 4 factors
  general diagonal     -> real-moduli factor x unit-diagonal route = 4
  general J2 (+) point -> real-part triangular factor x unit route  = 4

Every factor ships with a certificate (T, B): a conjugator T and the real
matrix B = T^-1 (factor) T it exhibits.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import CertificateError, NotSimple
from .matrix import QMatrix3, inverse, require_unimodular
from .quaternion import DEFAULT_TOL, ClassRep, Quaternion
from .spectral import JordanData, jordan_form

_J = Quaternion(0.0, 0.0, 1.0, 0.0)


@dataclass
class SimpleCertificate:
    """Witness that a matrix is simple: A = T B T^-1 with B real."""

    T: QMatrix3
    B: np.ndarray
    residual: float = 0.0

    def verify(self, A: QMatrix3, tol: float = DEFAULT_TOL) -> float:
        recon = self.T @ QMatrix3.from_real(self.B) @ inverse(self.T)
        return (A - recon).norm() / max(A.norm(), 1e-300)

    def to_json_dict(self) -> dict:
        return {
            "T": self.T.to_json_dict(),
            "B": [[float(v) for v in row] for row in np.asarray(self.B)],
            "residual": float(self.residual),
        }


@dataclass
class Decomposition:
    """Ordered simple factors with certificates; product reconstructs A."""

    factors: list
    certificates: list
    residual: float = 0.0

    def __len__(self):
        return len(self.factors)

    def product(self) -> QMatrix3:
        out = QMatrix3.identity()
        for f in self.factors:
            out = out @ f
        return out

    def to_json_dict(self) -> dict:
        return {
            "factors": [f.to_json_dict() for f in self.factors],
            "certificates": [c.to_json_dict() for c in self.certificates],
            "residual": float(self.residual),
        }


def _rep_is_real(rep: ClassRep, tol: float) -> bool:
    return rep.im <= 1e3 * tol * max(1.0, rep.modulus())


def _classes_of(data: JordanData):
    grouped = {}
    order = []
    for rep, size in data.blocks:
        key = (rep.re, rep.im)
        if key not in grouped:
            grouped[key] = []
            order.append(key)
        grouped[key].append(size)
    return [(ClassRep(*k), grouped[k]) for k in order]


def is_simple(A: QMatrix3, tol: float = DEFAULT_TOL) -> bool:
    """True iff A is conjugate to a real matrix (even non-real block counts)."""
    require_unimodular(A, tol)
    return _is_simple_data(jordan_form(A, tol), tol)


def _is_simple_data(data: JordanData, tol: float) -> bool:
    for rep, sizes in _classes_of(data):
        if _rep_is_real(rep, tol):
            continue
        if len(sizes) % 2 != 0:
            return False
    return True


def realify(A: QMatrix3, tol: float = DEFAULT_TOL) -> SimpleCertificate:
    """Conjugator T and real B with A = T B T^-1.

    Real inputs return (I3, A) directly.  A real-spectrum A returns its real
    Jordan form; the remaining simple shape diag(λ, λ, μ) with λ non-real is
    realified by the 2x2 conjugators mapping diag(r e^{it}, r e^{it}) to the
    rotation block [[r cos t, r sin t], [-r sin t, r cos t]].
    """
    if A.is_real(tol):
        return SimpleCertificate(QMatrix3.identity(), A.real_part(), 0.0)

    data = jordan_form(A, tol)
    cert = _realify_data(A, data, tol)
    cert.residual = cert.verify(A, tol)
    if cert.residual > 1e-5:
        raise CertificateError(
            f"real-conjugate certificate residual {cert.residual:.3e} is out of range"
        )
    return cert


def _realify_data(A: QMatrix3, data: JordanData, tol: float) -> SimpleCertificate:
    if not _is_simple_data(data, tol):
        raise NotSimple("matrix has a non-real class with odd block count")

    reps = [rep for rep, _ in data.blocks]
    if all(_rep_is_real(rep, tol) for rep in reps):
        B = data.jordan_matrix().real_part()
        return SimpleCertificate(data.S, B)

    # diag(λ, λ, μ) with λ non-real: the pair occupies adjacent columns
    pair_pos = None
    for k in range(2):
        if not _rep_is_real(reps[k], tol) and reps[k].isclose(reps[k + 1], 1e3 * tol):
            pair_pos = k
            break
    if pair_pos is None:
        raise NotSimple("non-real classes do not pair up")
    other = 2 if pair_pos == 0 else 0
    lam = reps[pair_pos]
    mu = reps[other]
    r = lam.modulus()
    theta = lam.angle()

    # V = (U2 U1)^-1 with U1 = [[1,0],[0,j]], U2 = [[1,1],[i,-i]] satisfies
    # diag(λ, λ) = V R V^-1 for the rotation block R
    u1 = QMatrix3.identity()
    u2 = QMatrix3.identity()
    s0, s1 = (pair_pos, pair_pos + 1)
    u1[s1, s1] = _J
    u2[s0, s0] = 1.0
    u2[s0, s1] = 1.0
    u2[s1, s0] = 1j
    u2[s1, s1] = -1j
    V = inverse(u2 @ u1)

    B = np.zeros((3, 3))
    B[s0, s0] = r * math.cos(theta)
    B[s0, s1] = r * math.sin(theta)
    B[s1, s0] = -r * math.sin(theta)
    B[s1, s1] = r * math.cos(theta)
    B[other, other] = mu.re

    return SimpleCertificate(data.S @ V, B)


def pair_rotation_split(theta: float, phi: float):
    """Split diag(e^{i theta}, e^{i phi}, 1) into two simple diagonal factors.

    Returns (diag(e^{i mu}, e^{i mu}, 1), diag(e^{i nu}, e^{-i nu}, 1)) with
    mu = (theta + phi)/2 and nu = (theta - phi)/2; the product multiplies back
    exactly and each factor has one eigenvalue class of multiplicity two.
    """
    mu = 0.5 * (theta + phi)
    nu = 0.5 * (theta - phi)
    first = QMatrix3.diag(cmath.exp(1j * mu), cmath.exp(1j * mu), 1.0)
    second = QMatrix3.diag(cmath.exp(1j * nu), cmath.exp(-1j * nu), 1.0)
    return first, second


def _unit_diag_factors(angles):
    """Three simple factors multiplying to diag(e^{i a1}, e^{i a2}, e^{i a3})."""
    t, p, s = angles
    p_shift = p + s
    first, second = pair_rotation_split(t, p_shift)
    third = QMatrix3.diag(1.0, cmath.exp(-1j * s), cmath.exp(1j * s))
    return [first, second, third]


def _slot23(d2, d3):
    return QMatrix3.diag(1.0, d2, d3)


def _unit_j2_factors(theta, psi):
    """Three simple factors multiplying to J2(e^{i theta}) (+) e^{i psi}."""
    et = cmath.exp(1j * theta)
    W = QMatrix3.diag(1.0 / et, et, 1.0)
    Q = QMatrix3.from_complex([[et, 1.0, 0.0], [0.0, 1.0 / et, 0.0], [0.0, 0.0, 1.0]])
    mu = 0.5 * (2.0 * theta + psi)
    nu = 0.5 * (2.0 * theta - psi)
    R1 = _slot23(cmath.exp(1j * mu), cmath.exp(1j * mu))
    R2 = _slot23(cmath.exp(1j * nu), cmath.exp(-1j * nu))
    W_inv = QMatrix3.diag(et, 1.0 / et, 1.0)
    return [W @ Q @ W_inv, W @ R1 @ W_inv, W @ R2 @ W_inv]


def _unit_j3_factors(theta):
    """Four simple factors multiplying to J3(e^{i theta})."""
    et = cmath.exp(1j * theta)
    eh = cmath.exp(0.5j * theta)
    f1 = QMatrix3.diag(et, et, 1.0)
    f2 = _slot23(eh, eh)
    f3 = _slot23(1.0 / eh, eh)
    f4 = QMatrix3.from_complex(
        [[1.0, 1.0 / et, 0.0], [0.0, 1.0, 1.0 / et], [0.0, 0.0, 1.0]]
    )
    return [f1, f2, f3, f4]


def _canonical_factors(data: JordanData, tol: float):
    """Simple factors for the canonical Jordan matrix of ``data``."""
    blocks = data.blocks
    reps = [rep for rep, _ in blocks]
    moduli = [rep.modulus() for rep in reps]
    unit = all(abs(m - 1.0) <= 1e3 * tol * max(1.0, m) for m in moduli)
    shape = data.shape_id

    if shape == "diag":
        angles = [rep.angle() for rep, _ in blocks]
        if unit:
            return _unit_diag_factors(angles)
        P = QMatrix3.diag(*moduli)
        return [P] + _unit_diag_factors(angles)

    if shape == "j2":
        theta = reps[0].angle()
        psi = reps[1].angle()
        if unit:
            return _unit_j2_factors(theta, psi)
        r, s = moduli
        P = QMatrix3.from_complex(
            [[r, cmath.exp(-1j * theta), 0.0], [0.0, r, 0.0], [0.0, 0.0, s]]
        )
        # Q = diag(e^{i theta}, e^{i theta}, e^{i psi}) via the unit route
        q_first, q_second = pair_rotation_split(theta, theta + psi)
        q_third = _slot23(cmath.exp(-1j * psi), cmath.exp(1j * psi))
        return [P, q_first, q_second, q_third]

    # j3; |λ| = 1 is forced by unimodularity, the general branch is defensive
    theta = reps[0].angle()
    if unit:
        return _unit_j3_factors(theta)
    r = moduli[0]
    e_inv = cmath.exp(-1j * theta)
    P = QMatrix3.from_complex([[r, e_inv, 0.0], [0.0, r, e_inv], [0.0, 0.0, r]])
    q_first, q_second = pair_rotation_split(theta, 2.0 * theta)
    q_third = _slot23(cmath.exp(-1j * theta), cmath.exp(1j * theta))
    return [P, q_first, q_second, q_third]


def decompose_simple(A: QMatrix3, tol: float = DEFAULT_TOL) -> Decomposition:
    """Write A as a product of at most four simple factors with certificates.

    Simple inputs return the length-1 decomposition [A].  Factors are emitted
    in left-to-right product order and conjugated into A's frame, so their
    product reconstructs A itself.  Factors that degenerate to the identity
    (boundary angles) are dropped.
    """
    require_unimodular(A, tol)
    data = jordan_form(A, tol)

    if _is_simple_data(data, tol):
        cert = realify(A, tol)
        return Decomposition([A], [cert], 0.0)

    S = data.S
    S_inv = inverse(S)
    factors = []
    for canon in _canonical_factors(data, tol):
        if (canon - QMatrix3.identity()).norm() <= 1e-9:
            continue
        factors.append(S @ canon @ S_inv)

    certificates = [realify(f, tol) for f in factors]

    product = QMatrix3.identity()
    for f in factors:
        product = product @ f
    residual = (A - product).norm() / max(A.norm(), 1e-300)
    if residual > 1e-5:
        raise CertificateError(
            f"factor product residual {residual:.3e} is out of range"
        )
    return Decomposition(factors, certificates, residual)
