import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import assert_close
from twobytwo import decomp as dc
from twobytwo.mat2core import boost_z, rotation_y, squeeze_x
from twobytwo.suites import random_sp2

params = st.floats(-2.5, 2.5, allow_nan=False)


def test_classify_examples():
    assert dc.classify(rotation_y(1.0).real) is dc.TraceClass.ELLIPTIC
    assert dc.classify(np.array([[1.0, 0.0], [3.0, 1.0]])) is dc.TraceClass.PARABOLIC
    assert dc.classify(squeeze_x(0.4).real) is dc.TraceClass.HYPERBOLIC


@pytest.mark.parametrize("theta", [0.3, 1.5, 3.0, 5.0])
def test_rotation_trace(theta):
    assert np.trace(rotation_y(theta)).real == pytest.approx(2 * math.cos(theta / 2))


def test_classify_rejects():
    with pytest.raises(ValueError):
        dc.classify(np.diag([2.0, 1.0]))
    with pytest.raises(ValueError):
        dc.classify(np.diag([1j, -1j]))


def test_parabolic_band():
    M = np.array([[1 + 1e-11, 0.0], [1.0, 1 / (1 + 1e-11)]])
    assert dc.classify(M) is dc.TraceClass.PARABOLIC


def test_bargmann_compose_limits():
    a = 0.7
    assert_close(dc.equidiagonal(a, 0.0), rotation_y(2 * a).real, 1e-15)
    chi = 0.9
    assert_close(dc.equidiagonal(0.0, chi), [[math.cosh(chi), math.sinh(chi)], [math.sinh(chi), math.cosh(chi)]], 1e-15)


def test_bargmann_product_closed_form():
    p = dc.BargmannParams.from_alpha_delta(math.pi / 3, 0.8)
    assert_close(dc.bargmann_product(p), dc.equidiagonal(math.pi / 3, 0.8), 1e-12)


@given(params, params, params)
def test_bargmann_compose_equals_product(a1, a2, chi):
    p = dc.BargmannParams(a1, a2, chi)
    assert_close(dc.bargmann_compose(p), dc.bargmann_product(p), 1e-12 * math.cosh(chi))


def test_bargmann_params_derived():
    p = dc.BargmannParams(1.0, 0.4, 0.2)
    assert p.alpha == pytest.approx(0.7) and p.delta == pytest.approx(0.3)


def test_bargmann_equidiagonal_input_has_zero_delta():
    delta, bp = dc.bargmann_decompose(dc.equidiagonal(0.4, 0.6))
    assert abs(delta) < 1e-15
    assert bp.alpha == pytest.approx(0.4) and bp.chi == pytest.approx(0.6)


def test_bargmann_roundtrip_known():
    p = dc.BargmannParams(0.9, 0.3, -0.7)
    M = dc.bargmann_product(p)
    delta, q = dc.bargmann_decompose(M)
    assert_close(dc.bargmann_compose(q), M, 1e-12)
    assert -math.pi / 2 < delta <= math.pi / 2


def test_bargmann_roundtrip_random():
    rng = np.random.default_rng(7)
    for _ in range(200):
        M = random_sp2(rng)
        _, bp = dc.bargmann_decompose(M)
        assert_close(dc.bargmann_compose(bp), M, 1e-10 * max(1.0, float(np.max(np.abs(M)))))


def test_trace_preserved_by_delta_rotation():
    rng = np.random.default_rng(8)
    for _ in range(50):
        M = random_sp2(rng)
        _, bp = dc.bargmann_decompose(M)
        assert np.trace(dc.equidiagonal(bp.alpha, bp.chi)) == pytest.approx(np.trace(M), rel=1e-10, abs=1e-10)


def test_wigner_rotation():
    wp = dc.wigner_decompose(rotation_y(1.1).real)
    assert wp.kind is dc.WignerKind.MASSIVE_LIKE
    assert wp.theta == pytest.approx(1.1) and abs(wp.eta) < 1e-14


def test_wigner_triangular():
    chi = 0.6
    wp = dc.wigner_decompose(np.array([[1.0, 0.0], [2 * math.sinh(chi), 1.0]]))
    assert wp.kind is dc.WignerKind.MASSLESS_LIKE
    assert wp.gamma == pytest.approx(2 * math.sinh(chi))


def test_wigner_massive_roundtrip():
    M = dc.wigner_compose(dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, 0.6, 1.2))
    wp = dc.wigner_decompose(M)
    assert wp.theta == pytest.approx(0.6) and wp.eta == pytest.approx(1.2)


def test_wigner_imaginary_roundtrip():
    M = dc.wigner_compose(dc.WignerParams(dc.WignerKind.IMAGINARY_LIKE, 0.9, -0.4))
    wp = dc.wigner_decompose(M)
    assert wp.lam == pytest.approx(0.9) and wp.eta == pytest.approx(-0.4)


def test_wigner_rejects_non_equidiagonal():
    with pytest.raises(ValueError):
        dc.wigner_decompose(boost_z(0.5).real)


def test_wigner_wrong_parameter_access():
    wp = dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, 0.5)
    with pytest.raises(AttributeError):
        wp.lam


@given(st.floats(-3.0, 3.0), st.floats(-1.5, 1.5))
def test_wigner_sandwich_trace_independent_of_eta(theta, eta):
    M = dc.wigner_compose(dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, theta, eta))
    assert np.trace(M) == pytest.approx(2 * math.cos(theta / 2), abs=1e-12)


@pytest.mark.parametrize(
    "p",
    [
        dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, 0.3, 0.5),
        dc.WignerParams(dc.WignerKind.IMAGINARY_LIKE, 0.4, -0.7),
        dc.WignerParams(dc.WignerKind.MASSLESS_LIKE, 1.3),
        dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, 2.0, 0.1, sign=-1),
    ],
)
def test_wigner_power(p):
    M = dc.wigner_compose(p)
    assert_close(dc.wigner_power(p, 0), np.eye(2), 1e-15)
    assert_close(dc.wigner_power(p, 1), M, 1e-14)
    acc = np.eye(2)
    for n in range(1, 21):
        acc = acc @ M
        got = dc.wigner_power(p, n)
        assert_close(got, acc, 1e-10 * max(1.0, float(np.max(np.abs(acc)))))
        assert np.trace(got) == pytest.approx(dc.power_trace(p, n), abs=1e-10 * max(1.0, abs(np.trace(acc))))


def test_wigner_power_negative_n():
    with pytest.raises(ValueError):
        dc.wigner_power(dc.WignerParams(dc.WignerKind.MASSIVE_LIKE, 0.3), -1)


def test_classify_agrees_with_kind():
    rng = np.random.default_rng(9)
    for _ in range(200):
        M = random_sp2(rng)
        _, _, wp = dc.decompose(M)
        assert dc.KIND_OF_CLASS[dc.classify(M)] is wp.kind


def test_negative_trace_uses_sign():
    M = -rotation_y(0.8).real
    wp = dc.wigner_decompose(M)
    assert wp.sign == -1
    assert_close(dc.wigner_compose(wp), M, 1e-14)


@given(params, params, params)
def test_iwasawa_roundtrip(a, b, c):
    M = rotation_y(a).real @ boost_z(b).real @ squeeze_x(c).real
    p = dc.iwasawa_decompose(M)
    assert_close(dc.iwasawa_compose(p), M, 1e-10 * max(1.0, float(np.max(np.abs(M)))))


def test_conjugates_pure_rotation():
    c = dc.conjugates(dc.BargmannParams.from_alpha_delta(0.5, 0.0))
    assert_close(c.D, c.Ddot, 0)
    assert_close(c.Ddag, dc.inverse2(c.D), 1e-15)


def test_conjugates_symmetric_squeeze():
    c = dc.conjugates(dc.BargmannParams.from_alpha_delta(0.0, 0.7))
    assert_close(c.D, c.Ddag, 0)
    assert c.Ddot[0, 1] == pytest.approx(-c.D[0, 1])


def test_conjugates_inverse_identities():
    c = dc.conjugates(dc.BargmannParams.from_alpha_delta(0.4, 0.9))
    assert_close(c.Ddag @ c.Ddot, np.eye(2), 1e-12)
    assert_close(c.Ddotdag @ c.D, np.eye(2), 1e-12)
    assert_close(c.D, dc.equidiagonal(0.4, 0.9), 0)
