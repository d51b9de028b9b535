"""Radial square well: matching, scattering amplitude and bound states.

Conventions. The interior solution is ``theta * q r j_l(q r)`` with
``theta = 2ik`` and ``q = sqrt(v0 + k**2)`` (principal branch). Outside the
well ``u = gamma * (u_minus - S u_plus)``, so that by the Wronskian
``W(u_minus, u_plus) = 2ik``

    gamma = W(u_in, u_plus) / 2ik,     S = W(u_in, u_minus) / W(u_in, u_plus)

evaluated at r = a. For l = 0 this gives ``gamma = exp(ika) D(k)`` with
``D(k) = ik sin(qa) - q cos(qa)``, whose zeros are the poles of S.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import ConvergenceError, DomainError, PoleError, PreconditionError
from .radial import RadialFunction, check_grid

POLE_GUARD = 1e-300


@dataclass(frozen=True)
class PotentialSpec:
    """Square well of depth ``v0`` (units of k**2) and radius ``a``."""

    v0: float
    a: float
    ell: int = 0

    def __post_init__(self):
        if not (self.v0 >= 0 and math.isfinite(self.v0)):
            raise DomainError(f"well depth must be finite and >= 0, got {self.v0!r}")
        if not (self.a > 0 and math.isfinite(self.a)):
            raise DomainError(f"cutoff radius must be positive, got {self.a!r}")
        object.__setattr__(self, "ell", specfun.check_ell(self.ell))

    @property
    def eta(self):
        """Dimensionless strength a*sqrt(v0)."""
        return self.a * math.sqrt(self.v0)

    def potential(self, r, inside_at_edge=False):
        """v(r): -v0 inside, 0 outside. The edge r = a counts as outside
        unless ``inside_at_edge``."""
        r = np.asarray(r, dtype=float)
        inside = r <= self.a if inside_at_edge else r < self.a
        return np.where(inside, -self.v0, 0.0)

    def effective(self, r, inside_at_edge=False):
        r = np.asarray(r, dtype=float)
        return self.potential(r, inside_at_edge) + self.ell * (self.ell + 1) / r**2


def interaction_parameter(v0, k):
    return cmath.sqrt(v0 + k * k)


@dataclass(frozen=True)
class ComplexPoint:
    k: complex
    eps: complex
    q: complex

    @classmethod
    def at(cls, spec, k):
        k = complex(k)
        eps = k * k
        return cls(k, eps, cmath.sqrt(spec.v0 + eps))


@dataclass
class ScatteringData:
    k: complex
    s_value: complex
    gamma: complex
    zeta: complex
    xi: complex
    delta: float | None = None


@dataclass
class BoundState:
    kappa: float
    energy: float
    wave: RadialFunction
    norm: float
    index: int = 0


def pole_function(spec, k):
    """D(k) = ik sin(qa) - q cos(qa); its zeros (q != 0) are the l = 0 poles of S."""
    q = interaction_parameter(spec.v0, k)
    return 1j * k * cmath.sin(q * spec.a) - q * cmath.cos(q * spec.a)


def _interior_at(spec, q, r, theta):
    """theta * q r j_l(q r) and its r-derivative."""
    r = np.asarray(r, dtype=float)
    if spec.ell == 0:
        return theta * np.sin(q * r), theta * q * np.cos(q * r)
    z = q * r
    j = specfun.sph_bessel("j", spec.ell, z)
    dj = specfun.sph_bessel_deriv("j", spec.ell, z)
    return theta * z * j, theta * q * (j + z * dj)


def s_matrix(spec, k):
    """Scattering amplitude S_l(k) and matching coefficients at complex k."""
    k = complex(k)
    if k == 0:
        raise DomainError("S(k) is undefined at k = 0")
    a = spec.a
    q = interaction_parameter(spec.v0, k)
    theta = 2j * k
    if spec.ell == 0:
        if q == 0:
            # q -> 0 limit: divide numerator and denominator by q
            num, den = 1j * k * a + 1.0, 1j * k * a - 1.0
        else:
            sn, cs = cmath.sin(q * a), cmath.cos(q * a)
            num, den = 1j * k * sn + q * cs, 1j * k * sn - q * cs
        if abs(den) < POLE_GUARD:
            raise PoleError(k)
        s_val = -(num / den) * cmath.exp(-2j * k * a)
        gamma = cmath.exp(1j * k * a) * (den if q != 0 else 0.0)
    else:
        if q == 0:
            raise DomainError("q = 0 is not supported for l > 0")
        u_in, du_in = _interior_at(spec, q, a, theta)
        um, up, dum, dup = specfun.exterior_basis(spec.ell, k, a, deriv=True)
        w_plus = specfun.wronskian(u_in, du_in, up, dup)
        w_minus = specfun.wronskian(u_in, du_in, um, dum)
        if abs(w_plus) < POLE_GUARD:
            raise PoleError(k)
        s_val = complex(w_minus / w_plus)
        gamma = complex(w_plus / (2j * k))
    sd = ScatteringData(k=k, s_value=s_val, gamma=gamma, zeta=gamma, xi=gamma * s_val)
    if k.imag == 0 and abs(abs(s_val) - 1.0) < 1e-9:
        sd.delta = phase_shift(sd)
    return sd


def phase_shift(sd):
    """delta = arg(S)/2 reduced to (-pi/2, pi/2]."""
    if complex(sd.k).imag != 0:
        raise PreconditionError(f"phase shift needs real k, got {sd.k!r}")
    if abs(abs(sd.s_value) - 1.0) > 1e-9:
        raise PreconditionError(f"|S| = {abs(sd.s_value)!r} is not unimodular")
    delta = cmath.phase(sd.s_value) / 2.0
    if delta <= -math.pi / 2:
        delta += math.pi
    return delta


def wavefunction(spec, k, grid):
    """Regular solution sampled on ``grid`` with theta = 2ik normalization."""
    r = check_grid(grid)
    k = complex(k)
    sd = s_matrix(spec, k)
    q = interaction_parameter(spec.v0, k)
    inside = r < spec.a
    vals = np.empty(r.shape, dtype=complex)
    der = np.empty(r.shape, dtype=complex)
    if np.any(inside):
        if q == 0:
            raise DomainError("wavefunction at q = 0 is not supported")
        vals[inside], der[inside] = _interior_at(spec, q, r[inside], 2j * k)
    if np.any(~inside):
        um, up, dum, dup = specfun.exterior_basis(spec.ell, k, r[~inside], deriv=True)
        vals[~inside] = sd.gamma * (um - sd.s_value * up)
        der[~inside] = sd.gamma * (dum - sd.s_value * dup)
    return RadialFunction(
        r, vals, "wavefunction", der,
        meta={"interior": "theta*q*r*j_l(q*r)", "exterior": "gamma*(u_minus - S*u_plus)",
              "k": k, "S": sd.s_value, "gamma": sd.gamma},
    )


def _bound_condition(x, eta):
    """kappa a sin(x) + x cos(x) with x = qa; zero at bound states (kappa = -q cot qa)."""
    return math.sqrt(max(eta * eta - x * x, 0.0)) * math.sin(x) + x * math.cos(x)


def _bisect(f, lo, hi):
    flo = f(lo)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid


def bound_state_wave(spec, kappa, grid):
    """Unnormalized s-wave bound state: sin(qr) inside, sin(qa) e^{-kappa(r-a)} outside."""
    r = check_grid(grid)
    q = math.sqrt(spec.v0 - kappa * kappa)
    inside = r < spec.a
    vals = np.empty(r.shape, dtype=complex)
    der = np.empty(r.shape, dtype=complex)
    vals[inside] = np.sin(q * r[inside])
    der[inside] = q * np.cos(q * r[inside])
    tail = math.sin(q * spec.a) * np.exp(-kappa * (r[~inside] - spec.a))
    vals[~inside] = tail
    der[~inside] = -kappa * tail
    return RadialFunction(r, vals, "wavefunction", der,
                          meta={"interior": "sin(q*r)", "exterior": "sin(q*a)*exp(-kappa*(r-a))",
                                "k": 1j * kappa})


def bound_state_norm(spec, kappa):
    q = math.sqrt(spec.v0 - kappa * kappa)
    a = spec.a
    return a / 2 - math.sin(2 * q * a) / (4 * q) + math.sin(q * a) ** 2 / (2 * kappa)


def bound_states(spec, points=2001):
    """All s-wave bound states, deepest first.

    Each root of ``kappa = -q cot(qa)`` lies in ``[(j - 1/2) pi, j pi]`` in
    the variable x = qa, where the continuous form ``kappa a sin x + x cos x``
    changes sign once; the search bisects each such bracket below eta.
    """
    if spec.ell != 0:
        raise DomainError("bound-state search is implemented for l = 0 only")
    eta = spec.eta
    found = []
    j = 1
    while (j - 0.5) * math.pi < eta:
        lo = (j - 0.5) * math.pi
        hi = min(j * math.pi, eta)
        f = lambda x: _bound_condition(x, eta)  # noqa: E731
        if f(lo) * f(hi) < 0:
            x = _bisect(f, lo, hi)
            kappa = math.sqrt(eta * eta - x * x) / spec.a
            if kappa > 0:
                found.append(kappa)
        j += 1
    found.sort(reverse=True)
    states = []
    for n, kappa in enumerate(found):
        try:
            inv_s = 1.0 / s_matrix(spec, 1j * kappa).s_value
        except PoleError:
            inv_s = 0.0
        if abs(inv_s) >= 1e-6:
            raise ConvergenceError(f"kappa={kappa!r} is not a pole of S: |1/S| = {abs(inv_s):.3g}")
        grid = np.linspace(1e-4 * spec.a, spec.a + 30.0 / kappa, points)
        states.append(BoundState(kappa=kappa, energy=-kappa * kappa,
                                 wave=bound_state_wave(spec, kappa, grid),
                                 norm=bound_state_norm(spec, kappa), index=n))
    return states
