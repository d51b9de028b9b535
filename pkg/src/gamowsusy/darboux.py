"""Complex Darboux deformations of the square well.

A transformation function ``phi`` solving the radial equation at complex
energy ``eps`` gives the superpotential ``beta = -phi'/phi`` and the deformed
potential

    V~ = V + 2 beta' = 2 beta**2 + 2 eps - V,

the second form following from the Riccati equation
``beta' = beta**2 + eps - V``. Solutions of the deformed equation at energy
E are ``y = W(phi, u) / phi = u' + beta u`` for any solution ``u`` of the
original equation at E.

V~ jumps by v0 across r = a. A grid point exactly at r = a takes the
interior (left) limit.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ClassificationError, DomainError, NodeError, PreconditionError
from .radial import RadialFunction, check_grid
from .resonance import GamowFunction
from .scattering import s_matrix

CLASSES = ("scattering", "outgoing", "decaying", "incoming", "null")


@dataclass
class DarbouxPotential:
    base: object
    eps: complex
    mode: str
    values: np.ndarray
    re_part: RadialFunction
    im_part: RadialFunction
    beta: RadialFunction
    transformation: GamowFunction

    @property
    def grid(self):
        return self.re_part.grid


def _check_nodes(r, u):
    zero = ~(np.abs(u) > 0)
    if np.any(zero):
        raise NodeError(np.asarray(r)[zero])


def superpotential(u, grid=None):
    """beta = -u'/u as a RadialFunction.

    ``u`` is a GamowFunction (closed forms, needs ``grid``) or a
    RadialFunction, whose ``deriv`` is used when present.
    """
    if isinstance(u, GamowFunction):
        if grid is None:
            raise DomainError("grid is required to sample a Gamow function")
        r = check_grid(grid)
        vals, _ = u.evaluate(r)
        _check_nodes(r, vals)
        return RadialFunction(r, u.beta(r), "superpotential",
                              meta={"k": u.k_alpha, "mode": u.mode})
    r = u.grid
    _check_nodes(r, u.values)
    du = u.deriv if u.deriv is not None else np.gradient(u.values, r, edge_order=2)
    return RadialFunction(r, -du / u.values, "superpotential", meta=dict(u.meta))


def darboux_values(spec, g, r):
    """V~(r) = 2 beta**2 + 2 eps - V_l(r), interior value of V at r = a."""
    r = np.asarray(r, dtype=float)
    beta = g.beta(r)
    return 2 * beta * beta + 2 * g.eps - spec.effective(r, inside_at_edge=True)


def darboux_potential(spec, g, grid):
    r = check_grid(grid)
    vals, _ = g.evaluate(r)
    _check_nodes(r, vals)
    beta = g.beta(r)
    vt = 2 * beta * beta + 2 * g.eps - spec.effective(r, inside_at_edge=True)
    meta = {"k": g.k_alpha, "mode": g.mode}
    return DarbouxPotential(
        base=spec, eps=g.eps, mode=g.mode, values=vt,
        re_part=RadialFunction(r, vt.real, "potential", meta=meta),
        im_part=RadialFunction(r, vt.imag, "potential", meta=meta),
        beta=RadialFunction(r, beta, "superpotential", meta=meta),
        transformation=g,
    )


def transform_solution(phi_eps, u, eps_u=None, grid=None):
    """y = [phi u' - phi' u] / phi on the common grid.

    ``phi_eps`` may be a GamowFunction (sampled on ``u``'s grid) or a
    RadialFunction; both inputs need derivatives for an exact result.
    """
    r = u.grid if grid is None else check_grid(grid)
    if not np.array_equal(r, u.grid):
        raise DomainError("u must be sampled on the transformation grid")
    if isinstance(phi_eps, GamowFunction):
        eps_phi = phi_eps.eps
        phi_eps = phi_eps.sample(r)
    else:
        if not np.array_equal(phi_eps.grid, r):
            raise DomainError("phi and u must share a grid")
        k = phi_eps.meta.get("k")
        eps_phi = None if k is None else k * k
    phi, dphi = phi_eps.values, phi_eps.deriv
    if dphi is None:
        dphi = np.gradient(phi, r, edge_order=2)
    du = u.deriv if u.deriv is not None else np.gradient(u.values, r, edge_order=2)
    _check_nodes(r, phi)
    y = (phi * du - dphi * u.values) / phi
    dy = None
    if eps_phi is not None and eps_u is not None:
        # y' = (eps - E) u + beta y
        dy = (eps_phi - eps_u) * u.values - (dphi / phi) * y
    meta = {"eps_u": eps_u, "eps_phi": eps_phi, "k": u.meta.get("k")}
    return RadialFunction(r, y, "transformed", dy, meta)


def tail_coefficients(spec, k, k_alpha):
    """Exterior coefficients (A, B) of y = A u_minus + B u_plus for an
    outgoing s-wave transformation function at k_alpha:
    A = -i gamma (k_alpha + k), B = i gamma (k_alpha - k) S(k).
    """
    sd = s_matrix(spec, k)
    a_coef = -1j * sd.gamma * (k_alpha + k)
    b_coef = 1j * sd.gamma * (k_alpha - k) * sd.s_value
    return a_coef, b_coef, sd


def classify_asymptotics(spec, k, k_alpha, y, vanish=1e-10, present=1e-6, match=1e-6,
                         noise=1e-12):
    """Classify the large-r behaviour of a transformed solution.

    Returns one of ``CLASSES``:

    * ``null``        both tail coefficients vanish (k = -k_alpha)
    * ``scattering``  both present, real k
    * ``outgoing``    the outgoing wave dominates and grows (Im k < 0)
    * ``decaying``    a single surviving wave that decays (bound states)
    * ``incoming``    a single surviving incoming wave that grows
                      (k = conj(k_alpha), where S vanishes)

    The sampled exterior of ``y`` must match ``A e^{-ikr} + B e^{ikr}``.
    """
    k = complex(k)
    k_alpha = complex(k_alpha)
    if spec.ell != 0:
        raise DomainError("tail classification is implemented for l = 0")
    a_coef, b_coef, sd = tail_coefficients(spec, k, k_alpha)
    scale = abs(sd.gamma) * (abs(k_alpha) + abs(k)) * max(1.0, abs(sd.s_value))
    r = y.grid
    ext = r > spec.a
    if not np.any(ext):
        raise PreconditionError("y has no samples outside the well")
    e_minus, e_plus = np.exp(-1j * k * r[ext]), np.exp(1j * k * r[ext])
    model = a_coef * e_minus + b_coef * e_plus
    # rounding in u' + beta u scales with the components of u itself
    floor = noise * abs(sd.gamma) * (abs(k) + abs(k_alpha)) * (
        np.abs(e_minus) + abs(sd.s_value) * np.abs(e_plus))
    err = np.abs(y.values[ext] - model)
    if np.any(err > match * np.max(np.abs(model)) + floor):
        raise ClassificationError("sampled tail does not match the asymptotic coefficients")
    big = max(abs(a_coef), abs(b_coef))
    if big < vanish * scale:
        return "null"
    ratio = min(abs(a_coef), abs(b_coef)) / big
    if ratio < vanish:
        plus = abs(b_coef) > abs(a_coef)
        # e^{ikr} decays for Im k > 0, e^{-ikr} for Im k < 0
        decays = k.imag > 0 if plus else k.imag < 0
        if decays:
            return "decaying"
        return "outgoing" if plus else "incoming"
    if ratio < present:
        raise ClassificationError(f"ambiguous tail: coefficient ratio {ratio:.3g}")
    if k.imag == 0:
        return "scattering"
    return "outgoing" if k.imag < 0 else "incoming"


def argand_export(dp, r_start, r_stop, count=None):
    """(r, Re V~, Im V~) samples for an Argand-Wessel curve.

    With ``count`` the potential is re-evaluated on ``count`` equispaced
    radii; otherwise the stored grid points inside the range are returned.
    """
    grid = dp.grid
    if r_stop < r_start or (count is not None and count < 1):
        raise DomainError("empty radial range")
    if r_start < grid[0] or r_stop > grid[-1]:
        raise DomainError(f"range [{r_start}, {r_stop}] outside grid [{grid[0]}, {grid[-1]}]")
    if count is None:
        sel = (grid >= r_start) & (grid <= r_stop)
        if not np.any(sel):
            raise DomainError("no grid points in range")
        r, v = grid[sel], dp.values[sel]
    else:
        r = np.array([r_start]) if count == 1 else np.linspace(r_start, r_stop, count)
        if count > 1 and r_stop == r_start:
            raise DomainError("need r_stop > r_start for more than one sample")
        hit = np.searchsorted(grid, r)
        v = np.empty(r.shape, dtype=complex)
        exact = (hit < grid.size) & (grid[np.minimum(hit, grid.size - 1)] == r)
        v[exact] = dp.values[hit[exact]]
        if np.any(~exact):
            v[~exact] = darboux_values(dp.base, dp.transformation, r[~exact])
    return [(float(ri), float(vi.real), float(vi.imag)) for ri, vi in zip(r, v)]
