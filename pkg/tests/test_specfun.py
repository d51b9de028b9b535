import math

import mpmath
import numpy as np
import pytest
import scipy.special as sps
from hypothesis import given, settings
from hypothesis import strategies as st

from gamowsusy import DomainError, RangeError
from gamowsusy.specfun import (
    MAX_ELL,
    exterior_basis,
    interior_basis,
    lambda_norm,
    sph_bessel,
    sph_bessel_deriv,
    wronskian,
)

mp = mpmath.MPContext()
mp.dps = 60


def reference(kind, ell, z):
    z = mp.mpc(z.real, z.imag)
    pre = mp.sqrt(mp.pi / 2) / mp.sqrt(z)
    nu = ell + mp.mpf(1) / 2
    if kind == "j":
        return complex(pre * mp.besselj(nu, z))
    if kind == "n":
        return complex(pre * mp.bessely(nu, z))
    if kind == "h1":
        return complex(pre * mp.hankel1(nu, z))
    return complex(pre * mp.hankel2(nu, z))


def scale_at(ell, z):
    return abs(reference("h1", ell, z)) + abs(reference("h2", ell, z))


complex_args = st.builds(
    complex,
    st.floats(-60, 60, allow_nan=False),
    st.floats(-30, 30, allow_nan=False),
).filter(lambda z: abs(z) > 0.05)


@settings(max_examples=60, deadline=None)
@given(z=complex_args, ell=st.integers(0, MAX_ELL), kind=st.sampled_from(["j", "n", "h1", "h2"]))
def test_matches_high_precision_reference(z, ell, kind):
    got = sph_bessel(kind, ell, z)
    want = reference(kind, ell, z)
    assert abs(got - want) <= 1e-12 * scale_at(ell, z)


@pytest.mark.parametrize("ell", range(MAX_ELL + 1))
def test_real_axis_against_scipy(ell):
    x = np.linspace(0.05, 80, 400)
    np.testing.assert_allclose(sph_bessel("j", ell, x).real, sps.spherical_jn(ell, x),
                               rtol=1e-11, atol=1e-14)
    np.testing.assert_allclose(sph_bessel("n", ell, x).real, sps.spherical_yn(ell, x), rtol=1e-11)
    np.testing.assert_allclose(sph_bessel("j", ell, x).imag, 0, atol=1e-300)


@settings(max_examples=40, deadline=None)
@given(z=complex_args, ell=st.integers(0, MAX_ELL))
def test_complex_axis_against_scipy(z, ell):
    s = scale_at(ell, z)
    assert abs(sph_bessel("j", ell, z) - sps.spherical_jn(ell, z)) <= 1e-11 * s
    assert abs(sph_bessel("n", ell, z) - sps.spherical_yn(ell, z)) <= 1e-11 * s


@pytest.mark.parametrize("ell", [0, 1, 4, 10])
def test_large_argument(ell):
    for z in (500.0 + 3j, 1000.0 - 20j, 300j + 10, -700 + 0.5j):
        for kind in ("j", "n", "h1", "h2"):
            assert abs(sph_bessel(kind, ell, z) - reference(kind, ell, z)) <= 1e-12 * scale_at(ell, z)


@settings(max_examples=40, deadline=None)
@given(z=complex_args, ell=st.integers(0, MAX_ELL))
def test_conjugation_symmetry(z, ell):
    zc = z.conjugate()
    s = scale_at(ell, z)
    assert abs(sph_bessel("j", ell, zc) - sph_bessel("j", ell, z).conjugate()) <= 1e-12 * s
    assert abs(sph_bessel("n", ell, zc) - sph_bessel("n", ell, z).conjugate()) <= 1e-12 * s
    assert abs(sph_bessel("h1", ell, zc) - sph_bessel("h2", ell, z).conjugate()) <= 1e-12 * s


@settings(max_examples=40, deadline=None)
@given(z=complex_args, ell=st.integers(0, MAX_ELL))
def test_cross_product(z, ell):
    # j n' - j' n = 1/z**2
    w = wronskian(sph_bessel("j", ell, z), sph_bessel_deriv("j", ell, z),
                  sph_bessel("n", ell, z), sph_bessel_deriv("n", ell, z))
    assert abs(w * z * z - 1) <= 1e-10 * scale_at(ell, z) ** 2 * abs(z) ** 2 + 1e-10


@settings(max_examples=40, deadline=None)
@given(z=complex_args, ell=st.integers(1, MAX_ELL - 1), kind=st.sampled_from(["j", "n", "h1", "h2"]))
def test_three_term_recurrence(z, ell, kind):
    lhs = sph_bessel(kind, ell - 1, z) + sph_bessel(kind, ell + 1, z)
    rhs = (2 * ell + 1) / z * sph_bessel(kind, ell, z)
    s = scale_at(ell + 1, z)
    assert abs(lhs - rhs) <= 1e-11 * s


def test_derivative_against_finite_difference():
    z, h = 3.7 - 1.2j, 1e-5
    for ell in range(MAX_ELL + 1):
        for kind in ("j", "n", "h1", "h2"):
            fd = (sph_bessel(kind, ell, z + h) - sph_bessel(kind, ell, z - h)) / (2 * h)
            assert abs(sph_bessel_deriv(kind, ell, z) - fd) <= 1e-7 * scale_at(ell, z)


@pytest.mark.parametrize("ell", range(MAX_ELL + 1))
def test_small_argument_limits(ell):
    z = 1e-3 * (1 + 1j)
    dfact = math.prod(range(2 * ell + 1, 0, -2))
    lead_j = z**ell / dfact
    lead_n = -math.prod(range(2 * ell - 1, 0, -2)) / z ** (ell + 1)
    assert abs(sph_bessel("j", ell, z) / lead_j - 1) < 1e-5
    assert abs(sph_bessel("n", ell, z) / lead_n - 1) < 1e-5


@pytest.mark.parametrize("ell", range(MAX_ELL + 1))
def test_lambda_norm_is_inverse_double_factorial(ell):
    assert lambda_norm(ell) == pytest.approx(1 / math.prod(range(2 * ell - 1, 0, -2)), rel=1e-14)


def test_values_at_origin():
    assert sph_bessel("j", 0, 0.0) == 1
    assert sph_bessel("j", 3, 0.0) == 0
    for kind in ("n", "h1", "h2"):
        with pytest.raises(DomainError):
            sph_bessel(kind, 0, 0.0)


@pytest.mark.parametrize("ell", [-1, 11, 1.5])
def test_rejects_bad_order(ell):
    with pytest.raises(DomainError):
        sph_bessel("j", ell, 1.0)


def test_overflow_guard():
    with pytest.raises(RangeError):
        sph_bessel("h1", 0, 1 + 800j)
    with pytest.raises(DomainError):
        sph_bessel("q", 0, 1.0)


def test_array_shape_preserved():
    z = np.array([[1.0, 2.0], [3.0 + 1j, 4.0 - 2j]])
    out = sph_bessel("h1", 2, z)
    assert out.shape == z.shape
    assert out[1, 0] == pytest.approx(sph_bessel("h1", 2, 3.0 + 1j), rel=1e-15)


def test_swave_exterior_is_exact_exponential():
    k, r = 1.3 - 0.2j, np.linspace(0.1, 30, 50)
    um, up = exterior_basis(0, k, r)
    assert np.array_equal(up, np.exp(1j * k * r))
    assert np.array_equal(um, np.exp(-1j * k * r))
    reg, irr = interior_basis(0, k, r)
    assert np.array_equal(reg, np.sin(k * r))
    assert np.array_equal(irr, np.cos(k * r))


@settings(max_examples=30, deadline=None)
@given(ell=st.integers(0, MAX_ELL), kr=st.floats(0.3, 5), ki=st.floats(-0.5, 0.5), r=st.floats(0.5, 20))
def test_basis_wronskians(ell, kr, ki, r):
    k = complex(kr, ki)
    um, up, dum, dup = exterior_basis(ell, k, r, deriv=True)
    s = (abs(um) + abs(up)) * (abs(dum) + abs(dup))
    assert abs(wronskian(um, dum, up, dup) - 2j * k) <= 1e-11 * max(s, 1)
    reg, irr, dreg, dirr = interior_basis(ell, k, r, deriv=True)
    s = (abs(reg) + abs(irr)) * (abs(dreg) + abs(dirr))
    assert abs(wronskian(reg, dreg, irr, dirr) + (2 * ell + 1) * k) <= 1e-11 * max(s, 1)


def test_basis_domain():
    with pytest.raises(DomainError):
        exterior_basis(0, 0.0, 1.0)
    with pytest.raises(DomainError):
        interior_basis(1, 1.0, -1.0)
