"""Spherical Bessel, Neumann and Hankel functions of complex argument.

``j`` is minimal in the order index, so it is taken from its power series
when ``|z| < ell`` and from Miller's downward recurrence otherwise (closed
forms for orders 0 and 1 away from the origin).

The Hankel functions are built around ``j``. The exponentially small one
(``h1`` for Im z >= 0, ``h2`` for Im z < 0) grows with the order and is
evaluated from the terminating Hankel expansion, a polynomial in 1/z. The
exponentially large partner decreases with the order for ``ell < |z|``, so
neither upward recurrence nor the polynomial keeps its digits there; it is
taken as ``2 j - h_small`` instead, which does not cancel. On the real axis
``h2 = conj(h1)``. Finally ``n = (h1 - h2) / 2i``.

The radial basis functions follow the usual Riccati convention ``z f(z)``:

    u_plus  =  i k r h1_l(kr)       u_minus = -i k r h2_l(kr)
    u_reg   = (2l+1)/L_l k r j_l(kr)  u_irr = -L_l k r n_l(kr)

with ``L_l = 2**-l sqrt(pi) / Gamma(l + 1/2)``, chosen so that
``u_reg ~ (kr)**(l+1)`` and ``u_irr ~ (kr)**-l`` near the origin.
"""

import math

import numpy as np

from .errors import DomainError, RangeError

KINDS = ("j", "n", "h1", "h2")
MAX_ELL = 10
# |Im z| beyond this overflows exp() in double precision
IMAG_GUARD = 700.0

_RESCALE = 1e200


def check_ell(ell):
    if int(ell) != ell or ell < 0:
        raise DomainError(f"angular momentum must be a non-negative integer, got {ell!r}")
    if ell > MAX_ELL:
        raise DomainError(f"angular momentum {ell} outside supported range 0..{MAX_ELL}")
    return int(ell)


def lambda_norm(ell):
    """Normalization ``2**-l sqrt(pi) / Gamma(l+1/2)``, equal to ``1/(2l-1)!!``."""
    return 2.0**-ell * math.sqrt(math.pi) / math.gamma(ell + 0.5)


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def _guard(z, kind):
    if np.any(np.abs(z.imag) > IMAG_GUARD):
        raise RangeError(f"|Im z| exceeds {IMAG_GUARD}; spherical functions overflow")
    if kind != "j" and np.any(z == 0):
        raise DomainError(f"spherical function {kind!r} is singular at z = 0")


def _j_series(lmax, z):
    """j_0..j_lmax from the ascending series; intended for |z| < lmax."""
    out = np.empty((lmax + 1,) + z.shape, dtype=complex)
    w = -0.5 * z * z
    prefactor = np.ones_like(z)
    for ell in range(lmax + 1):
        if ell > 0:
            prefactor = prefactor * z / (2 * ell + 1)
        term = np.ones_like(z)
        total = np.ones_like(z)
        k = 0
        while True:
            k += 1
            term = term * w / (k * (2 * ell + 2 * k + 1))
            total = total + term
            if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
                break
            if k > 200:
                break
        out[ell] = prefactor * total
    return out


def _j_miller(lmax, z):
    """j_0..j_lmax by downward recurrence normalized against j_0 or j_1."""
    absz = np.abs(z)
    top = int(lmax + absz.max() + 10.0 * absz.max() ** (1.0 / 3.0) + 25)
    out = np.zeros((lmax + 1,) + z.shape, dtype=complex)
    f_hi = np.zeros_like(z)
    f = np.ones_like(z)
    for n in range(top, 0, -1):
        f_lo = (2 * n + 1) / z * f - f_hi
        f_hi, f = f, f_lo
        if n - 1 <= lmax:
            out[n - 1] = f
        if n <= lmax:
            out[n] = f_hi
        big = np.maximum(np.abs(f), np.abs(f_hi)) > _RESCALE
        if np.any(big):
            scale = np.where(big, 1.0 / np.maximum(np.abs(f), np.abs(f_hi)), 1.0)
            f = f * scale
            f_hi = f_hi * scale
            out *= scale
    j0 = np.sin(z) / z
    j1 = np.sin(z) / z**2 - np.cos(z) / z
    use0 = np.abs(j0) >= np.abs(j1)
    norm = np.where(use0, j0 / out[0], j1 / out[1])
    return out * norm


def _j_sequence(lmax, z):
    out = np.empty((lmax + 1,) + z.shape, dtype=complex)
    zero = z == 0
    zs = np.where(zero, 1.0, z)
    if lmax >= 1:
        small = np.abs(zs) < max(lmax, 1)
        if np.any(small):
            out[:, small] = _j_series(lmax, zs[small])
        if np.any(~small):
            zz = zs[~small]
            if lmax >= 2:
                out[:, ~small] = _j_miller(lmax, zz)
            else:
                out[1, ~small] = np.sin(zz) / zz**2 - np.cos(zz) / zz
    out[0] = np.sin(zs) / zs
    if np.any(zero):
        out[:, zero] = 0.0
        out[0, zero] = 1.0
    return out


def _hankel_poly(which, lmax, z):
    """h1 (which=1) or h2 (which=2), orders 0..lmax, from

    h1_l(z) = (-i)**(l+1) e^{iz}/z  sum_k  i**k (l+k)! / (k! (l-k)! (2z)**k)

    and its sign-flipped twin for h2.
    """
    s = 1j if which == 1 else -1j
    lead = np.exp(s * z) / z
    x = s / (2.0 * z)
    out = np.empty((lmax + 1,) + z.shape, dtype=complex)
    for ell in range(lmax + 1):
        total = np.zeros_like(z)
        for k in range(ell, -1, -1):
            coef = math.factorial(ell + k) / (math.factorial(k) * math.factorial(ell - k))
            total = total * x + coef
        out[ell] = (-s) ** (ell + 1) * lead * total
    return out


def _hankel_pair(lmax, z):
    j = _j_sequence(lmax, z)
    upper = z.imag >= 0
    h1 = np.empty_like(j)
    h2 = np.empty_like(j)
    if np.any(upper):
        zu = z[upper]
        h1[:, upper] = _hankel_poly(1, lmax, zu)
        h2[:, upper] = np.where(zu.imag == 0, np.conj(h1[:, upper]), 2 * j[:, upper] - h1[:, upper])
    if np.any(~upper):
        zl = z[~upper]
        h2[:, ~upper] = _hankel_poly(2, lmax, zl)
        h1[:, ~upper] = 2 * j[:, ~upper] - h2[:, ~upper]
    return j, h1, h2


def _sequence(kind, lmax, z):
    """Values of ``kind`` for orders 0..lmax at complex array ``z``."""
    if kind == "j":
        return _j_sequence(lmax, z)
    j, h1, h2 = _hankel_pair(lmax, z)
    if kind == "h1":
        return h1
    if kind == "h2":
        return h2
    if kind == "n":
        return (h1 - h2) / 2j
    raise DomainError(f"unknown kind {kind!r}; expected one of {KINDS}")


def sph_bessel(kind, ell, z):
    """Spherical function ``kind`` in {'j', 'n', 'h1', 'h2'} of order ``ell``.

    Accepts scalars or arrays; returns the same shape.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown kind {kind!r}; expected one of {KINDS}")
    ell = check_ell(ell)
    arr, scalar = _as_complex(z)
    _guard(arr, kind)
    val = _sequence(kind, ell, np.atleast_1d(arr))[ell].reshape(arr.shape)
    return complex(val) if scalar else val


def sph_bessel_deriv(kind, ell, z):
    """d/dz of the spherical function, via f'_l = f_{l-1} - (l+1)/z f_l."""
    if kind not in KINDS:
        raise DomainError(f"unknown kind {kind!r}; expected one of {KINDS}")
    ell = check_ell(ell)
    arr, scalar = _as_complex(z)
    _guard(arr, kind)
    z1 = np.atleast_1d(arr)
    if kind == "j" and np.any(z1 == 0):
        raise DomainError("derivative of j evaluated at z = 0")
    seq = _sequence(kind, ell + 1, z1)
    if ell == 0:
        val = -seq[1]
    else:
        val = seq[ell - 1] - (ell + 1) / z1 * seq[ell]
    val = val.reshape(arr.shape)
    return complex(val) if scalar else val


def _check_kr(k, r):
    if np.any(np.asarray(k) == 0):
        raise DomainError("kinetic parameter k must be non-zero")
    if np.any(np.asarray(r) <= 0):
        raise DomainError("radius must be positive")


def _riccati(kind, ell, k, r):
    """(z f(z), d/dr [z f(z)]) with z = k r."""
    z = np.asarray(k * np.asarray(r, dtype=float), dtype=complex)
    f = sph_bessel(kind, ell, z)
    fp = sph_bessel_deriv(kind, ell, z)
    return z * f, k * (f + z * fp)


def exterior_basis(ell, k, r, deriv=False):
    """Outgoing/incoming pair ``(u_minus, u_plus)``; with ``deriv`` also r-derivatives.

    For ``ell == 0`` the pair is exactly ``exp(-ikr), exp(ikr)``.
    """
    ell = check_ell(ell)
    _check_kr(k, r)
    k = complex(k)
    r = np.asarray(r, dtype=float)
    if ell == 0:
        up = np.exp(1j * k * r)
        um = np.exp(-1j * k * r)
        dup, dum = 1j * k * up, -1j * k * um
    else:
        h1, dh1 = _riccati("h1", ell, k, r)
        h2, dh2 = _riccati("h2", ell, k, r)
        up, dup = 1j * h1, 1j * dh1
        um, dum = -1j * h2, -1j * dh2
    out = (um, up, dum, dup) if deriv else (um, up)
    if r.ndim == 0:
        return tuple(complex(x) for x in out)
    return out


def interior_basis(ell, k, r, deriv=False):
    """Regular/irregular pair ``(u_reg, u_irr)``; with ``deriv`` also r-derivatives.

    For ``ell == 0`` the pair is exactly ``sin(kr), cos(kr)``.
    """
    ell = check_ell(ell)
    _check_kr(k, r)
    k = complex(k)
    r = np.asarray(r, dtype=float)
    if ell == 0:
        reg, irr = np.sin(k * r), np.cos(k * r)
        dreg, dirr = k * np.cos(k * r), -k * np.sin(k * r)
    else:
        lam = lambda_norm(ell)
        cj = (2 * ell + 1) / lam
        zj, dzj = _riccati("j", ell, k, r)
        zn, dzn = _riccati("n", ell, k, r)
        reg, dreg = cj * zj, cj * dzj
        irr, dirr = -lam * zn, -lam * dzn
    out = (reg, irr, dreg, dirr) if deriv else (reg, irr)
    if r.ndim == 0:
        return tuple(complex(x) for x in out)
    return out


def wronskian(f, df, g, dg):
    """W(f, g) = f g' - f' g."""
    return f * dg - df * g
