import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qproj import (
    ClassRep,
    DegenerateInput,
    Quaternion,
    class_representative,
    commutant_membership,
    similar,
)
from oracles import quaternion_left_mult_matrix, solve_right_inverse

ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)


def test_hamilton_relations():
    assert (I * I).isclose(-1)
    assert (J * J).isclose(-1)
    assert (K * K).isclose(-1)
    assert (I * J * K).isclose(-1)
    assert (I * J).isclose(K)
    assert (J * K).isclose(I)
    assert (K * I).isclose(J)
    assert (J * I).isclose(-K)


def test_conj_product_example():
    # (1 + j)(1 - j) = 1 - j + j - j^2 = 2
    assert (Quaternion(1, 0, 1) * Quaternion(1, 0, -1)).isclose(2)


def test_inverse_example_against_linear_solve():
    q = Quaternion(0, 0, 0, 2)  # 2k
    expected = solve_right_inverse(q)  # oracle: solve q*x = 1 componentwise
    assert expected.isclose(Quaternion(0, 0, 0, -0.5))
    assert q.inverse().isclose(expected)


def test_inverse_of_near_zero_raises():
    with pytest.raises(DegenerateInput):
        Quaternion(1e-12, 0, 0, 0).inverse()


@given(quats, quats)
@settings(max_examples=200)
def test_norm_multiplicative(q, p):
    lhs = (q * p).norm()
    rhs = q.norm() * p.norm()
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)


@given(quats)
@settings(max_examples=200)
def test_conj_gives_norm_square(q):
    prod = q * q.conj()
    assert prod.x == pytest.approx(0, abs=1e-6)
    assert prod.y == pytest.approx(0, abs=1e-6)
    assert prod.z == pytest.approx(0, abs=1e-6)
    assert prod.w == pytest.approx(q.norm() ** 2, rel=1e-9, abs=1e-9)


@given(quats, quats, quats)
@settings(max_examples=100)
def test_associativity(q, p, r):
    lhs = (q * p) * r
    rhs = q * (p * r)
    scale = max(1.0, lhs.norm(), rhs.norm())
    assert (lhs - rhs).norm() <= 1e-9 * scale


def test_inverse_roundtrip(rng):
    for _ in range(100):
        q = Quaternion(*rng.standard_normal(4))
        if q.norm() < 1e-6:
            continue
        assert (q.inverse() * q).isclose(1, tol=1e-10)
        assert (q * q.inverse()).isclose(1, tol=1e-10)


def test_class_representative_examples():
    assert class_representative(J) == ClassRep(0.0, 1.0)
    assert class_representative(Quaternion(3, 0, 4, 0)) == ClassRep(3.0, 4.0)
    # sign of the imaginary part is folded to non-negative
    assert class_representative(Quaternion(1, -1, 0, 0)) == ClassRep(1.0, 1.0)


def test_similar_examples():
    assert similar(J, K)
    theta = math.pi / 3
    assert similar(
        Quaternion(math.cos(theta), math.sin(theta)),
        Quaternion(math.cos(theta), -math.sin(theta)),
    )
    assert not similar(Quaternion(0, 2), Quaternion(0, 1))


def test_unit_class_representative_modulus(rng):
    for _ in range(10_000):
        v = rng.standard_normal(4)
        v /= np.linalg.norm(v)
        rep = class_representative(Quaternion(*v))
        assert abs(rep.modulus() - 1.0) < 1e-12


def test_class_representative_conjugation_invariant(rng):
    for _ in range(2000):
        q = Quaternion(*rng.standard_normal(4))
        p = Quaternion(*rng.standard_normal(4))
        if p.norm() < 1e-6:
            continue
        conj = p * q * p.inverse()
        r1, r2 = class_representative(q), class_representative(conj)
        scale = max(1.0, r1.modulus())
        assert abs(r1.re - r2.re) <= 1e-9 * scale
        assert abs(r1.im - r2.im) <= 1e-9 * scale


def test_commutant_membership_examples():
    theta = math.pi / 4
    assert commutant_membership(Quaternion(0, 0, 2, -1), theta, "flip")
    assert commutant_membership(Quaternion(1, 1), theta, "same")
    assert not commutant_membership(J, theta, "same")
    # boundary angles commute with everything
    for q in (I, J, K, Quaternion(1, 2, 3, 4)):
        assert commutant_membership(q, 0.0, "same")
        assert commutant_membership(q, math.pi, "flip")


def test_commutant_structure_random(rng):
    # flip-commutant at interior angles is exactly C*j; same-commutant exactly C
    for _ in range(300):
        theta = rng.uniform(0.1, math.pi - 0.1)
        u, v = rng.standard_normal(2)
        assert commutant_membership(Quaternion(0, 0, u, v), theta, "flip")
        assert commutant_membership(Quaternion(u, v, 0, 0), theta, "same")
        q = Quaternion(*rng.standard_normal(4))
        in_cj = math.hypot(q.w, q.x) <= 1e-12
        assert commutant_membership(q, theta, "flip") == in_cj
        in_c = math.hypot(q.y, q.z) <= 1e-12
        assert commutant_membership(q, theta, "same") == in_c


def test_twisted_intertwiner_forces_zero(rng):
    # b * e^{i a} = e^{i b} * b with a != +-b has only the zero solution
    for _ in range(200):
        alpha, beta = rng.uniform(-math.pi, math.pi, size=2)
        if min(abs(alpha - beta), abs(alpha + beta)) < 0.1:
            continue
        ea = Quaternion(math.cos(alpha), math.sin(alpha))
        eb = Quaternion(math.cos(beta), math.sin(beta))
        op = quaternion_right_multiply(ea) - quaternion_left_mult_matrix(eb)
        s = np.linalg.svd(op, compute_uv=False)
        assert s[-1] > 1e-3  # trivial kernel


def quaternion_right_multiply(q):
    from oracles import quaternion_right_mult_matrix

    return quaternion_right_mult_matrix(q)


def test_modulus_mismatch_forces_zero(rng):
    # a (r e^{i t}) = (s e^{i p}) a with r != s has only the zero solution
    from oracles import quaternion_right_mult_matrix

    for _ in range(200):
        r, s = np.exp(rng.uniform(-1.5, 1.5, size=2))
        if abs(r - s) < 0.1:
            continue
        t, p = rng.uniform(0, math.pi, size=2)
        lhs = quaternion_right_mult_matrix(Quaternion(r * math.cos(t), r * math.sin(t)))
        rhs = quaternion_left_mult_matrix(Quaternion(s * math.cos(p), s * math.sin(p)))
        sv = np.linalg.svd(lhs - rhs, compute_uv=False)
        assert sv[-1] > 1e-3


def test_serialization_roundtrip():
    q = Quaternion(1.5, -2.25, 0.125, 3.0)
    assert Quaternion.from_list(q.to_list()) == q
