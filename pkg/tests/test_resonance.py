import math
import warnings

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gamowsusy import (
    ApproximationDomainError,
    ApproximationWarning,
    ConvergenceError,
    DomainError,
    ParityError,
    PotentialSpec,
    PreconditionError,
    allowed_m,
    analytic_resonance,
    bound_states,
    gamow_function,
    newton_step,
    outgoing_residual,
    pole_function,
    real_q_levels,
    refine_pole,
    resonance_indices,
    s_matrix,
    seed_wavenumber,
)
from gamowsusy.resonance import MATCHED, PURE

from conftest import REFERENCE_CASES, fd_second

REFERENCE_ENERGIES = {
    (100.0, 1): 4.247696 - 0.412198j,
    (100.0, 3): 10.761635 - 0.656098j,
    (100.0, 5): 17.472966 - 0.836013j,
    (100.0, 7): 24.381689 - 0.987556j,
    (1000.0, 1): 16.791319 - 0.819544j,
    (1000.0, 3): 36.925312 - 1.215324j,
    (1000.0, 5): 57.256697 - 1.513363j,
    (1000.0, 7): 77.785474 - 1.763921j,
}


def mp_pole(spec, k0):
    """Independent pole location from mpmath's secant solver at 40 digits."""
    ctx = mpmath.MPContext()
    ctx.dps = 40

    def f(k):
        q = ctx.sqrt(spec.v0 + k * k)
        x = q * spec.a
        return 1j * k * ctx.sin(x) / x * spec.a - ctx.cos(x)

    return complex(ctx.findroot(f, ctx.mpc(k0.real, k0.imag)))


def test_indices_for_reference_wells():
    assert resonance_indices(PotentialSpec(100, 10))[1:] == (64, 1)
    assert resonance_indices(PotentialSpec(1000, 10))[1:] == (202, 1)
    assert allowed_m(PotentialSpec(100, 10), 7) == [1, 3, 5, 7]


@pytest.mark.parametrize("v0,m", REFERENCE_CASES)
def test_reference_energies(v0, m):
    eps = analytic_resonance(PotentialSpec(v0, 10.0), m).eps_estimate
    want = REFERENCE_ENERGIES[(v0, m)]
    assert abs(eps.real / want.real - 1) < 1e-5
    assert abs(eps.imag - want.imag) < 1e-4


def test_seed_for_first_resonance():
    k = seed_wavenumber(analytic_resonance(PotentialSpec(100, 10), 1))
    assert abs(k.real - 2.063412) < 1e-3 and abs(k.imag + 0.099882) < 1e-3


@settings(max_examples=60, deadline=None)
@given(v0=st.floats(20, 5000), a=st.floats(1, 20), j=st.integers(0, 6))
def test_estimate_structure(v0, a, j):
    spec = PotentialSpec(v0, a)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ApproximationWarning)
        eta, n_inf, parity = resonance_indices(spec)
        m = parity + 2 * j
        try:
            rec = analytic_resonance(spec, m)
        except ApproximationDomainError:
            return
        with pytest.raises(ParityError):
            analytic_resonance(spec, m + 1)
    assert rec.n % 2 == 1 and rec.n == n_inf + m
    assert rec.eps_estimate.real > 0 and rec.eps_estimate.imag < 0
    assert rec.width == pytest.approx(4 / a * math.sqrt(rec.eps_estimate.real))
    assert abs(rec.delta_n) == pytest.approx(1 / eta)
    assert rec.q2a == pytest.approx(-1 / eta)
    # the real part is the real-q level of the same n
    assert rec.eps_estimate.real == pytest.approx(real_q_levels(spec, rec.n), rel=1e-12)
    k = rec.k_seed
    assert k.real > 0 and k.imag < 0
    assert abs(k * k - rec.eps_estimate) < 1e-12 * abs(rec.eps_estimate)


def test_energies_increase_with_index(well):
    eps = [analytic_resonance(well, m).eps_estimate for m in (1, 3, 5, 7, 9)]
    assert all(b.real > a.real and b.imag < a.imag for a, b in zip(eps, eps[1:]))


def test_real_q_levels_are_cosine_nodes(well):
    for n in (65, 67, 101):
        q = math.sqrt(real_q_levels(well, n) + 100)
        assert abs(math.cos(q * 10)) < 1e-12


def test_regime_errors():
    with pytest.raises(DomainError, match="no resonance regime"):
        resonance_indices(PotentialSpec(1, 1))
    with pytest.warns(ApproximationWarning):
        resonance_indices(PotentialSpec(4.6**2, 1))
    with pytest.raises(ApproximationDomainError):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ApproximationWarning)
            analytic_resonance(PotentialSpec(4.65**2, 1), 0)
    with pytest.raises(ParityError):
        analytic_resonance(PotentialSpec(100, 10), 2)
    with pytest.raises(ParityError):
        analytic_resonance(PotentialSpec(100, 10), -1)
    with pytest.raises(DomainError):
        analytic_resonance(PotentialSpec(100, 10, 1), 1)


def test_odd_n_inf_allows_zero():
    spec = PotentialSpec(25.0, 2.0)  # eta = 10, n_inf = 7
    assert allowed_m(spec, 4) == [0, 2, 4]
    assert analytic_resonance(spec, 0).n == 7


@pytest.mark.parametrize("v0,m", REFERENCE_CASES)
def test_refinement_against_independent_root(v0, m):
    spec = PotentialSpec(v0, 10.0)
    rec = analytic_resonance(spec, m)
    k, res, it = refine_pole(spec, rec.k_seed)
    assert res < 1e-12 and it <= 20
    assert abs(k - mp_pole(spec, rec.k_seed)) < 1e-12 * abs(k)
    assert abs(s_matrix(spec, k).s_value) > 1e8
    assert abs(k - rec.k_seed) < 0.05
    assert k.real > 0 and k.imag < 0


def test_newton_converges_quadratically(well):
    k = analytic_resonance(well, 3).k_seed
    target = mp_pole(well, k)
    errs = []
    for _ in range(3):
        k = newton_step(well, k)
        errs.append(abs(k - target))
    assert errs[1] < 10 * errs[0] ** 2
    assert errs[2] < 1e-13


def test_refine_reports_escape_with_trace(well):
    with pytest.raises(ConvergenceError) as info:
        refine_pole(well, 0.05 - 3j)
    assert len(info.value.trace) >= 2
    assert info.value.trace[0] == 0.05 - 3j


def test_refine_bound_state_from_imaginary_seed(well):
    b = bound_states(well)[5]
    k, _, _ = refine_pole(well, 1j * b.kappa + 0.01j)
    assert abs(k - 1j * b.kappa) < 1e-8


# -- Gamow functions ------------------------------------------------------

def test_pure_mode_requires_pole(well, refined):
    with pytest.raises(PreconditionError):
        gamow_function(well, analytic_resonance(well, 1).k_seed, PURE)
    g = gamow_function(well, analytic_resonance(well, 1).k_seed, MATCHED)
    assert g.mode == MATCHED
    with pytest.raises(DomainError):
        gamow_function(well, refined[1], "both")


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_pure_gamow_self_consistency(well, refined, m):
    g = gamow_function(well, refined[m], "pure")
    a, h = 10.0, 1e-10
    (u_l, u_r), (du_l, du_r) = g.evaluate(np.array([a - h, a]))
    assert abs(u_r - u_l) / abs(u_r) < 1e-8
    assert abs(du_r - du_l) / abs(du_r) < 1e-8
    k = g.k_alpha
    for r in (3.0, 8.5, 12.0, 30.0):
        f = lambda x: complex(g.evaluate(np.array([x]))[0][0])  # noqa: E731
        u = f(r)
        res = fd_second(f, r, a / 1e4) - (well.potential(r) - k * k) * u
        assert abs(res) / (abs(u) * (100 + abs(k) ** 2)) < 1e-8
    for r in (10.5, 20.0, 60.0):
        assert outgoing_residual(g, r) == 0


def test_pure_and_matched_agree_at_pole(well, refined):
    r = np.linspace(0.5, 25, 60)
    pure = gamow_function(well, refined[1], "pure").evaluate(r)[0]
    matched = gamow_function(well, refined[1], "matched").evaluate(r)[0]
    np.testing.assert_allclose(matched, pure, rtol=1e-7)


def test_gamow_grows_outside(well, refined):
    g = gamow_function(well, refined[3], "pure")
    u = np.abs(g.evaluate(np.array([20.0, 40.0, 80.0]))[0])
    assert u[0] < u[1] < u[2]
    assert u[2] / u[1] == pytest.approx(math.exp(-refined[3].imag * 40), rel=1e-10)


def test_outgoing_residual_domain(well, refined):
    with pytest.raises(PreconditionError):
        outgoing_residual(gamow_function(well, refined[1]), 5.0)


def test_pole_function_vanishes_at_refined(well, refined):
    for k in refined.values():
        assert abs(pole_function(well, k)) < 1e-11
