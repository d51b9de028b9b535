"""S-wave resonances of the square well.

Analytic estimates come from the quantization ``Q1 a ~ n pi / 2`` (n odd,
``n = n_inf + m``) with ``Q2 a ~ -1/eta``:

    Re eps = ([(n_inf + m) pi / (2 a sqrt(v0))]**2 - 1) v0
    Im eps = -(2/a) sqrt(Re eps)

and are refined by Newton iteration on the pole condition
``D(k) = ik sin(qa) - q cos(qa) = 0``.
"""

import cmath
import math
import warnings
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import (
    ApproximationDomainError,
    ApproximationWarning,
    ConvergenceError,
    DomainError,
    NodeError,
    ParityError,
    PreconditionError,
)
from .radial import RadialFunction, check_grid
from .scattering import interaction_parameter, pole_function, s_matrix, wavefunction

PURE = "pure_outgoing"
MATCHED = "full_matched"
_MODE_ALIASES = {"pure": PURE, PURE: PURE, "matched": MATCHED, MATCHED: MATCHED}

NEWTON_TOL = 1e-12
NEWTON_MAXITER = 50
PURE_MODE_TOL = 1e-8

# private context so concurrent callers never touch mpmath.mp
_MP = mpmath.MPContext()
_MP.dps = 34


def normalize_mode(mode):
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise DomainError(f"unknown mode {mode!r}; expected 'pure' or 'matched'") from None


@dataclass
class ResonanceRecord:
    eta: float
    n_inf: int
    m: int
    n: int
    delta_n: float
    q2a: float
    eps_estimate: complex
    k_seed: complex
    k_refined: complex | None = None
    pole_residual: float = math.nan
    iterations: int = 0

    @property
    def width(self):
        """Gamma = -2 Im eps of the analytic estimate."""
        return -2.0 * self.eps_estimate.imag


def _require_swave(spec):
    if spec.ell != 0:
        raise DomainError("the resonance scheme covers l = 0 only")


def resonance_indices(spec):
    """(eta, n_inf, m_parity); ``m_parity`` is 1 when m must be odd, 0 when even."""
    _require_swave(spec)
    eta = spec.eta
    if eta <= math.pi / 2:
        raise DomainError(f"no resonance regime: eta = a*sqrt(v0) = {eta:.6g} <= pi/2")
    if eta < 10:
        warnings.warn(f"eta = {eta:.3g} is not >> 1; analytic estimates are rough",
                      ApproximationWarning, stacklevel=2)
    n_inf = math.ceil(2 * eta / math.pi)
    return eta, n_inf, 0 if n_inf % 2 else 1


def allowed_m(spec, m_max):
    """Resonance indices 0 <= m <= m_max of the parity fixed by n_inf."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ApproximationWarning)
        _, _, parity = resonance_indices(spec)
    return list(range(parity, int(m_max) + 1, 2))


def real_q_levels(spec, n):
    """E_n = (n pi / 2a)**2 - v0, the levels for a real interaction parameter."""
    _require_swave(spec)
    return (n * math.pi / (2 * spec.a)) ** 2 - spec.v0


def analytic_resonance(spec, m):
    """Analytic complex energy estimate for resonance index ``m``."""
    eta, n_inf, parity = resonance_indices(spec)
    m = int(m)
    if m < 0 or m % 2 != parity:
        want = "odd" if parity else "even"
        raise ParityError(f"m = {m} must be {want} and >= 0 when n_inf = {n_inf}")
    n = n_inf + m
    re_eps = ((n * math.pi / (2 * eta)) ** 2 - 1.0) * spec.v0
    a2e = spec.a**2 * re_eps
    if a2e <= 1:
        raise ApproximationDomainError(f"a**2 Re(eps) = {a2e:.4g} <= 1; estimate invalid for m = {m}")
    if a2e < 10:
        warnings.warn(f"a**2 Re(eps) = {a2e:.3g} is close to 1", ApproximationWarning, stacklevel=2)
    eps = complex(re_eps, -(2.0 / spec.a) * math.sqrt(re_eps))
    # sin(pi n / 2) = +-1 for odd n
    sin_half = 1.0 if (n - 1) % 4 == 0 else -1.0
    rec = ResonanceRecord(eta=eta, n_inf=n_inf, m=m, n=n, delta_n=-sin_half / eta,
                          q2a=-1.0 / eta, eps_estimate=eps, k_seed=0j)
    rec.k_seed = seed_wavenumber(rec)
    rec.pole_residual = abs(pole_function(spec, rec.k_seed))
    return rec


def seed_wavenumber(rec):
    """Fourth-quadrant square root of the energy estimate."""
    eps = complex(rec.eps_estimate)
    if not (eps.real > 0 and eps.imag <= 0):
        raise PreconditionError(f"energy estimate {eps!r} not in the resonance quadrant")
    return cmath.sqrt(eps)


def _reduced(spec, k):
    """F(k) = D(k)/q = ik a sinc(qa) - cos(qa) and dF/dk.

    Dividing by q removes the spurious zero of D at q = 0 (k = i sqrt(v0)),
    which is not a pole of S; F depends on q only through (qa)**2.
    """
    a = spec.a
    x = interaction_parameter(spec.v0, k) * a
    if abs(x) < 1e-3:
        x2 = x * x
        sinc = 1 - x2 / 6 + x2 * x2 / 120
        dsinc_x = -1.0 / 3 + x2 / 30
    else:
        sinc = cmath.sin(x) / x
        dsinc_x = (x * cmath.cos(x) - cmath.sin(x)) / x**3
    f = 1j * k * a * sinc - cmath.cos(x)
    # dx/dk = a**2 k / x
    df = 1j * a * sinc + 1j * k * a * dsinc_x * a * a * k + sinc * a * a * k
    return f, df


def _precise(spec, k):
    """(D, F) evaluated in extended precision at the double ``k``."""
    kk = _MP.mpc(k.real, k.imag)
    q = _MP.sqrt(spec.v0 + kk * kk)
    x = q * spec.a
    d = 1j * kk * _MP.sin(x) - q * _MP.cos(x)
    f = 1j * kk * spec.a * (_MP.sin(x) / x if x != 0 else 1) - _MP.cos(x)
    return complex(d), complex(f)


def newton_step(spec, k):
    """One Newton update k - F/F' for the reduced pole condition."""
    _require_swave(spec)
    k = complex(k)
    _, f = _precise(spec, k)
    _, df = _reduced(spec, k)
    return k - f / df


def _fourth_quadrant(k):
    return k.real > 0 and k.imag < 0


def refine_pole(spec, k_seed, tol=NEWTON_TOL, maxiter=NEWTON_MAXITER):
    """Newton iteration for a pole of S near ``k_seed``.

    Returns ``(k, |D(k)|, iterations)``. Seeds in the open fourth quadrant must
    stay there. Residuals are evaluated in extended precision because |D| is
    near the double rounding floor for deep wells.
    """
    _require_swave(spec)
    k = complex(k_seed)
    confine = _fourth_quadrant(k)
    trace = [k]
    d, f = _precise(spec, k)
    it = 0
    while abs(d) >= tol:
        if it >= maxiter:
            raise ConvergenceError(f"no convergence from {k_seed!r} after {maxiter} steps", trace)
        _, df = _reduced(spec, k)
        if df == 0 or not cmath.isfinite(df):
            raise ConvergenceError(f"vanishing derivative at k = {k!r}", trace)
        k = k - f / df
        it += 1
        trace.append(k)
        if not cmath.isfinite(k):
            raise ConvergenceError("Newton iterate diverged", trace)
        if confine and not _fourth_quadrant(k):
            raise ConvergenceError(f"iterate {k!r} left the fourth quadrant", trace)
        d, f = _precise(spec, k)
    if abs(s_matrix(spec, k).s_value) <= 1e8:
        raise ConvergenceError(f"k = {k!r} is a removable zero of D, not a pole of S", trace)
    return k, abs(d), it


def refine_record(spec, rec):
    k, res, it = refine_pole(spec, rec.k_seed)
    rec.k_refined, rec.pole_residual, rec.iterations = k, res, it
    return rec


@dataclass
class GamowFunction:
    """Outgoing solution at complex k.

    ``pure_outgoing`` is the closed form at a pole (s-wave):
    ``2ik sin(qr)`` inside, ``2ik sin(qa) e^{ik(r-a)}`` outside.
    ``full_matched`` is the regular scattering solution at the same k, which
    keeps a small incoming part when k is not an exact pole.
    """

    spec: object
    k_alpha: complex
    mode: str
    interior_amplitude: complex
    exterior_amplitude: complex

    @property
    def q(self):
        return interaction_parameter(self.spec.v0, self.k_alpha)

    @property
    def eps(self):
        return self.k_alpha * self.k_alpha

    def evaluate(self, r):
        """(u, du/dr) at radii ``r``."""
        r = np.asarray(r, dtype=float)
        if self.mode == MATCHED:
            rf = wavefunction(self.spec, self.k_alpha, np.atleast_1d(r))
            return rf.values.reshape(r.shape), rf.deriv.reshape(r.shape)
        k, q, a = self.k_alpha, self.q, self.spec.a
        inside = r < a
        u = np.empty(r.shape, dtype=complex)
        du = np.empty(r.shape, dtype=complex)
        u[inside] = self.interior_amplitude * np.sin(q * r[inside])
        du[inside] = self.interior_amplitude * q * np.cos(q * r[inside])
        out = self.exterior_amplitude * np.exp(1j * k * (r[~inside] - a))
        u[~inside] = out
        du[~inside] = 1j * k * out
        return u, du

    def beta(self, r):
        """Superpotential -u'/u; closed forms in pure mode."""
        r = np.asarray(r, dtype=float)
        u, du = self.evaluate(r)
        zero = u == 0
        if np.any(zero):
            raise NodeError(np.atleast_1d(r)[np.atleast_1d(zero)])
        if self.mode == MATCHED:
            return -du / u
        q, inside = self.q, r < self.spec.a
        b = np.empty(r.shape, dtype=complex)
        b[inside] = -q * np.cos(q * r[inside]) / np.sin(q * r[inside])
        b[~inside] = -1j * self.k_alpha
        return b

    def sample(self, grid):
        r = check_grid(grid)
        u, du = self.evaluate(r)
        if self.mode == PURE:
            meta = {"interior": "2ik*sin(q*r)", "exterior": "2ik*sin(q*a)*exp(ik(r-a))"}
        else:
            meta = {"interior": "theta*q*r*j_l(q*r)", "exterior": "gamma*(u_minus - S*u_plus)"}
        meta.update(k=self.k_alpha, mode=self.mode)
        return RadialFunction(r, u, "wavefunction", du, meta)


def gamow_function(spec, k_alpha, mode=PURE):
    mode = normalize_mode(mode)
    k = complex(k_alpha)
    theta = 2j * k
    if mode == PURE:
        _require_swave(spec)
        d = abs(pole_function(spec, k))
        if d >= PURE_MODE_TOL:
            raise PreconditionError(
                f"pure outgoing mode needs a pole: |D(k)| = {d:.3g} >= {PURE_MODE_TOL}; "
                "refine the pole or use matched mode")
        q = interaction_parameter(spec.v0, k)
        return GamowFunction(spec, k, mode, theta, theta * cmath.sin(q * spec.a))
    sd = s_matrix(spec, k)
    return GamowFunction(spec, k, mode, theta, -sd.gamma * sd.s_value)


def outgoing_residual(g, r):
    """|beta(r) + i k_alpha| outside the well."""
    if r <= g.spec.a:
        raise PreconditionError(f"outgoing residual needs r > a, got r = {r!r}")
    return float(abs(complex(g.beta(r)) + 1j * g.k_alpha))
