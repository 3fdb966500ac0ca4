import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import assert_close
from twobytwo import poincare as pc
from twobytwo.mat2core import boost_z, rotation_z, to_four_by_four
from twobytwo.suites import random_sl2c

xis = st.floats(0.0, math.pi / 2)


def test_jones_validation_and_amplitudes():
    with pytest.raises(ValueError):
        pc.JonesVector(0.0)
    j = pc.JonesVector(2.0, phi=0.3, mu=0.5, eta=0.4)
    a1, a2 = j.amplitudes
    assert a1 == pytest.approx(2 * math.exp(-0.5 + 0.2))
    assert a2 == pytest.approx(2 * math.exp(-0.5 - 0.2))
    f = j.field()
    assert np.angle(f[1]) - np.angle(f[0]) == pytest.approx(0.3)


def test_coherency_fully_coherent():
    C = pc.coherency_from_jones(pc.JonesVector(1.5, 0.7), 0.0)
    assert abs(C.det) < 1e-15
    assert np.linalg.matrix_rank(C.to_matrix()) == 1


def test_coherency_incoherent():
    C = pc.coherency_from_jones(pc.JonesVector(1.5), math.pi / 2)
    assert_close(C.to_matrix(), 2.25 * np.eye(2), 1e-15)


def test_coherency_sixty_degrees():
    C = pc.coherency_from_jones(pc.JonesVector(1.0), math.pi / 3)
    assert C.S12 == pytest.approx(0.5)
    assert C.det == pytest.approx(0.75)


def test_coherency_range():
    for xi in (-0.1, 2.0):
        with pytest.raises(ValueError):
            pc.coherency_from_jones(pc.JonesVector(1.0), xi)


@given(st.floats(0.1, 3), st.floats(-3, 3), st.floats(-1, 1), xis)
def test_coherency_det_and_angle(a, phi, eta, xi):
    C = pc.coherency_from_jones(pc.JonesVector(a, phi, eta=eta), xi)
    assert C.det == pytest.approx(a**4 * math.sin(xi) ** 2, abs=1e-12 * a**4 * math.exp(2 * abs(eta)))
    assert C.decoherence_angle() == pytest.approx(xi, abs=1e-6)


def test_coherency_overall_attenuation_excluded():
    C0 = pc.coherency_from_jones(pc.JonesVector(1.0, mu=0.0), 0.4)
    C1 = pc.coherency_from_jones(pc.JonesVector(1.0, mu=2.0), 0.4)
    assert C0 == C1


def test_from_matrix_rejects_non_hermitian():
    with pytest.raises(ValueError):
        pc.CoherencyMatrix.from_matrix([[1, 1], [0, 1]])


def test_transform_identity():
    C = pc.coherency_from_jones(pc.JonesVector(1.2, 0.5), 0.6)
    out = pc.transform_coherency(np.eye(2), C)
    assert_close(out.to_matrix(), C.to_matrix(), 1e-15)


def test_transform_phase_shifter():
    C = pc.coherency_from_jones(pc.JonesVector(1.0, 0.5), 0.6)
    out = pc.transform_coherency(rotation_z(0.8), C)
    assert np.angle(out.S12) - np.angle(C.S12) == pytest.approx(-0.8)
    assert out.det == pytest.approx(C.det)


def test_transform_boost():
    eta = 0.6
    C = pc.coherency_from_jones(pc.JonesVector(1.0), 0.6)
    out = pc.transform_coherency(boost_z(eta), C)
    assert out.S11 == pytest.approx(C.S11 * math.exp(eta))
    assert out.S22 == pytest.approx(C.S22 * math.exp(-eta))
    assert out.det == pytest.approx(C.det)


def test_transform_rejects_non_unimodular():
    C = pc.coherency_from_jones(pc.JonesVector(1.0), 0.6)
    with pytest.raises(ValueError):
        pc.transform_coherency(2 * np.eye(2), C)


def test_det_invariance_random():
    rng = np.random.default_rng(3)
    C = pc.coherency_from_jones(pc.JonesVector(1.3, 0.9, eta=0.2), 0.7)
    for G in random_sl2c(rng, 200):
        assert pc.det_relative_change(G, C) < 1e-11


def test_stokes_examples():
    s = pc.stokes(pc.coherency_from_jones(pc.JonesVector(1.0), 0.0))
    assert_close(s.as_array(), [1, 0, 1, 0], 1e-15)
    s = pc.stokes(pc.coherency_from_jones(pc.JonesVector(1.0, 0.7), 0.3))
    assert s.S3 == 0


def test_stokes_roundtrip(rng):
    for _ in range(50):
        C = pc.CoherencyMatrix(*rng.uniform(0, 2, 2), complex(*rng.normal(size=2)))
        back = pc.unstokes(pc.stokes(C))
        assert_close(back.to_matrix(), C.to_matrix(), 1e-14)


def test_stokes_four_vector_diagram(rng):
    C = pc.coherency_from_jones(pc.JonesVector(1.1, 0.4, eta=0.3), 0.5)
    s = pc.stokes(C).as_array()
    for G in random_sl2c(rng, 50):
        lhs = pc.stokes(pc.transform_coherency(G, C)).as_array()
        rhs = to_four_by_four(np.conj(G)) @ s
        assert_close(lhs, rhs, 1e-10 * max(1.0, float(np.max(np.abs(lhs)))))


def test_stokes_matrix_is_transpose():
    C = pc.coherency_from_jones(pc.JonesVector(1.0, 0.9), 0.5)
    assert_close(pc.stokes_matrix(pc.stokes(C)), C.to_matrix().T, 1e-15)


def test_radius_examples():
    j = pc.JonesVector(1.4, 0.3)
    C0 = pc.coherency_from_jones(j, 0.0)
    assert pc.poincare_radius(C0) == pytest.approx(pc.stokes(C0).S0)
    assert pc.poincare_radius(C0) == pytest.approx(1.96)
    assert pc.poincare_radius(pc.coherency_from_jones(j, math.pi / 2)) == pytest.approx(0, abs=1e-15)
    assert pc.poincare_radius(pc.coherency_from_jones(pc.JonesVector(1.0), math.pi / 3)) == pytest.approx(0.5)


def test_radius_decreasing():
    r = [pc.poincare_radius(pc.coherency_from_jones(pc.JonesVector(1.0, 0.2), x)) for x in np.linspace(0, math.pi / 2, 91)]
    assert all(b <= a for a, b in zip(r, r[1:]))


def test_s0_r_invariant_grid():
    a = 1.3
    for xi in np.linspace(0, math.pi / 2, 91):
        s = pc.stokes(pc.coherency_from_jones(pc.JonesVector(a, 0.6), xi))
        assert abs(s.S0**2 - s.radius**2 - a**4 * math.sin(xi) ** 2) < 1e-12


def test_mass_interpolate_examples():
    p = pc.mass_interpolate(2.0, 0.0)
    assert (p.p0, p.pz) == (2.0, 2.0) and p.mass_sq == 0
    p = pc.mass_interpolate(2.0, math.pi / 2)
    assert p.pz == pytest.approx(0, abs=1e-15) and p.mass_sq == pytest.approx(4.0)
    p = pc.mass_interpolate(2.0, math.pi / 6)
    assert math.sqrt(p.mass_sq) == pytest.approx(1.0)
    assert p.pz == pytest.approx(math.sqrt(3))
    assert p.p0**2 == pytest.approx(p.mass_sq + p.pz**2)


def test_mass_interpolate_rejects():
    with pytest.raises(ValueError):
        pc.mass_interpolate(0.0, 0.1)
    with pytest.raises(ValueError):
        pc.mass_interpolate(1.0, 3.5)


def test_mass_circle_grid():
    for xi in np.linspace(0, math.pi, 181):
        e, m, p = pc.mass_circle(1.7, xi)
        assert abs(e * e - m * m - p * p) < 1e-12


def test_coherency_matches_diag_momentum():
    # a^2 (1 +- cos xi) equals p0 (1 +- cos xi) with a = sqrt(p0)
    p0, xi = 2.5, 0.7
    C = pc.coherency_from_jones(pc.JonesVector(math.sqrt(p0)), xi)
    _, D, _ = pc.diagonalize_coherency(C)
    P = pc.mass_interpolate(p0, xi).to_matrix()
    assert_close([D.S11, D.S22], [P[0, 0].real, P[1, 1].real], 1e-14)


def test_diagonalize_already_diagonal():
    U, D, theta = pc.diagonalize_coherency(pc.CoherencyMatrix(2.0, 1.0, 0j))
    assert_close(U, np.eye(2), 0)
    assert theta == 0


def test_diagonalize_symmetric():
    C = pc.coherency_from_jones(pc.JonesVector(1.0), 0.4)
    U, D, theta = pc.diagonalize_coherency(C)
    assert abs(theta / 2) == pytest.approx(math.pi / 4)
    assert np.isrealobj(U) or np.max(np.abs(U.imag)) == 0
    assert_close([D.S11, D.S22], [1 + math.cos(0.4), 1 - math.cos(0.4)], 1e-14)


@given(st.floats(0.2, 2), st.floats(-3, 3), st.floats(-1, 1), xis)
def test_diagonalize_general(a, phi, eta, xi):
    C = pc.coherency_from_jones(pc.JonesVector(a, phi, eta=eta), xi)
    U, D, _ = pc.diagonalize_coherency(C)
    full = U @ C.to_matrix() @ U.conj().T
    scale = C.S11 + C.S22
    assert abs(full[0, 1]) < 1e-12 * scale
    assert_close(U @ U.conj().T, np.eye(2), 1e-14)
    l1, l2 = pc.coherency_eigenvalues(C)
    assert D.S11 == pytest.approx(l1, abs=1e-12 * scale)
    assert D.S22 == pytest.approx(l2, abs=1e-12 * scale)
    assert l1 * l2 == pytest.approx(C.det, abs=1e-12 * scale**2)
