"""Command-line front end: batch runs with byte-stable CSV / JSON / SVG export.

    gamowsusy resonances --v0 100 --a 10 --m-max 7 --refine
    gamowsusy smatrix-map --v0 100 --a 10 --k-window 2:2.12:-0.16:-0.04:25:25
    gamowsusy darboux --v0 100 --a 10 --m 1 --mode matched --grid 9:11:201

Exit status is 0 on success, 2 for domain errors, 1 for anything else.
"""

import argparse
import json
import math
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .darboux import darboux_potential, transform_solution
from .errors import ApproximationWarning, DomainError, PoleError
from .resonance import (
    MATCHED,
    PURE,
    allowed_m,
    analytic_resonance,
    gamow_function,
    normalize_mode,
    refine_record,
)
from .scattering import PotentialSpec, bound_states, s_matrix, wavefunction

COMMANDS = ("resonances", "bound-states", "smatrix-map", "gamow", "darboux", "transform")
FORMATS = ("csv", "json", "svg")
SCHEMA = 1

RESONANCE_COLUMNS = ["n_inf", "m", "n", "re_eps_analytic", "im_eps_analytic", "re_k_seed", "im_k_seed"]
REFINED_COLUMNS = ["re_k_refined", "im_k_refined", "pole_residual"]
BOUND_COLUMNS = ["index", "kappa", "energy", "norm"]
SMATRIX_COLUMNS = ["re_k", "im_k", "abs_S", "re_S", "im_S"]
FUNCTION_COLUMNS = ["r", "re_value", "im_value"]


@dataclass
class RunConfig:
    command: str
    v0: float
    a: float
    ell: int = 0
    m_max: int = 7
    m: int | None = None
    k_alpha: complex | None = None
    k: complex | None = None
    grid: tuple = (0.01, 20.0, 200)
    k_window: tuple | None = None
    mode: str = "pure"
    refine: bool = False
    format: str = "csv"
    out: str | None = None
    jobs: int = 1
    argand: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise DomainError(f"unknown format {self.format!r}")
        normalize_mode(self.mode)
        r0, r1, n = self.grid
        if n < 1 or r1 < r0 or (n > 1 and r1 == r0):
            raise DomainError(f"empty radial grid {self.grid!r}")
        if self.k_window is not None:
            x0, x1, y0, y1, nx, ny = self.k_window
            if nx < 1 or ny < 1 or x1 < x0 or y1 < y0:
                raise DomainError(f"empty k window {self.k_window!r}")
        if self.jobs < 1:
            raise DomainError("--jobs must be >= 1")

    @property
    def spec(self):
        return PotentialSpec(self.v0, self.a, self.ell)

    def radii(self):
        r0, r1, n = self.grid
        return np.array([r0]) if n == 1 else np.linspace(r0, r1, n)


# -- number formatting ------------------------------------------------------

def fmt(x):
    """9 significant digits; fixed for 1e-3 <= |x| < 1e6, else lowercase scientific."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    sci = f"{x:.8e}"
    exp = int(sci.split("e")[1])
    if x != 0 and -3 <= exp < 6:
        return f"{x:.{8 - exp}f}"
    return sci


def _cell(v):
    return str(v) if isinstance(v, (int, np.integer)) and not isinstance(v, bool) else fmt(v)


def _json_value(v):
    if isinstance(v, (int, np.integer)):
        return int(v)
    s = fmt(v)
    return s if s in ("nan", "inf", "-inf") else float(s)


# -- computations -----------------------------------------------------------

def _pmap(fn, items, jobs):
    if jobs == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def run_resonances(cfg):
    spec = cfg.spec
    ms = allowed_m(spec, cfg.m_max)
    if not ms:
        raise DomainError(f"no allowed m <= {cfg.m_max}")

    def one(m):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ApproximationWarning)
            rec = analytic_resonance(spec, m)
        if cfg.refine:
            refine_record(spec, rec)
        row = [rec.n_inf, rec.m, rec.n, rec.eps_estimate.real, rec.eps_estimate.imag,
               rec.k_seed.real, rec.k_seed.imag]
        if cfg.refine:
            row += [rec.k_refined.real, rec.k_refined.imag, rec.pole_residual]
        return row

    cols = RESONANCE_COLUMNS + (REFINED_COLUMNS if cfg.refine else [])
    return cols, _pmap(one, ms, cfg.jobs), {}


def run_bound_states(cfg):
    rows = [[b.index, b.kappa, b.energy, b.norm] for b in bound_states(cfg.spec)]
    return BOUND_COLUMNS, rows, {}


def run_smatrix_map(cfg):
    if cfg.k_window is None:
        raise DomainError("smatrix-map needs --k-window")
    x0, x1, y0, y1, nx, ny = cfg.k_window
    xs = np.array([x0]) if nx == 1 else np.linspace(x0, x1, nx)
    ys = np.array([y0]) if ny == 1 else np.linspace(y0, y1, ny)
    ks = [complex(x, y) for y in ys for x in xs]
    if any(k == 0 for k in ks):
        raise DomainError("k window contains k = 0")
    spec = cfg.spec

    def one(k):
        try:
            s = s_matrix(spec, k).s_value
        except PoleError:
            return [k.real, k.imag, math.inf, math.nan, math.nan]
        return [k.real, k.imag, abs(s), s.real, s.imag]

    return SMATRIX_COLUMNS, _pmap(one, ks, cfg.jobs), {}


def _k_alpha(cfg):
    """Factorization wavenumber: explicit, or the m-th resonance.

    Pure mode needs an exact pole, so the seed is always refined there;
    matched mode uses the analytic seed unless --refine is given.
    """
    if cfg.k_alpha is not None:
        return complex(cfg.k_alpha)
    if cfg.m is None:
        raise DomainError("give --k-alpha or --m")
    spec = cfg.spec
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ApproximationWarning)
        rec = analytic_resonance(spec, cfg.m)
    if cfg.refine or normalize_mode(cfg.mode) == PURE:
        refine_record(spec, rec)
        return rec.k_refined
    return rec.k_seed


def _function_rows(r, values):
    return [[ri, v.real, v.imag] for ri, v in zip(r, values)]


def run_gamow(cfg):
    spec, r = cfg.spec, cfg.radii()
    k_alpha = _k_alpha(cfg)
    g = gamow_function(spec, k_alpha, cfg.mode)
    u, _ = g.evaluate(r)
    return FUNCTION_COLUMNS, _function_rows(r, u), _meta(cfg, g.k_alpha, g.mode)


def run_darboux(cfg):
    spec, r = cfg.spec, cfg.radii()
    k_alpha = _k_alpha(cfg)
    g = gamow_function(spec, k_alpha, cfg.mode)
    dp = darboux_potential(spec, g, r)
    return FUNCTION_COLUMNS, _function_rows(r, dp.values), _meta(cfg, g.k_alpha, g.mode)


def run_transform(cfg):
    if cfg.k is None:
        raise DomainError("transform needs --k for the transformed solution")
    spec, r = cfg.spec, cfg.radii()
    k_alpha = _k_alpha(cfg)
    g = gamow_function(spec, k_alpha, cfg.mode)
    k = complex(cfg.k)
    y = transform_solution(g, wavefunction(spec, k, r), k * k)
    meta = _meta(cfg, g.k_alpha, g.mode)
    meta["k"] = [_json_value(k.real), _json_value(k.imag)]
    return FUNCTION_COLUMNS, _function_rows(r, y.values), meta


def _meta(cfg, k_alpha, mode):
    eps = k_alpha * k_alpha
    return {
        "k_alpha": [_json_value(k_alpha.real), _json_value(k_alpha.imag)],
        "eps": [_json_value(eps.real), _json_value(eps.imag)],
        "mode": "pure" if mode == PURE else "matched" if mode == MATCHED else mode,
    }


RUNNERS = {
    "resonances": run_resonances,
    "bound-states": run_bound_states,
    "smatrix-map": run_smatrix_map,
    "gamow": run_gamow,
    "darboux": run_darboux,
    "transform": run_transform,
}


# -- writers ----------------------------------------------------------------

def to_csv(columns, rows):
    lines = [",".join(columns)]
    lines += [",".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def to_json(cfg, columns, rows, meta):
    doc = {
        "schema": SCHEMA,
        "command": cfg.command,
        "metadata": {"v0": _json_value(cfg.v0), "a": _json_value(cfg.a), "ell": cfg.ell,
                     "version": __version__, **meta},
        "columns": columns,
        "rows": [[_json_value(v) for v in row] for row in rows],
    }
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def _polyline(xs, ys, box, color):
    x0, x1, y0, y1 = box
    w, h, pad = 640.0, 400.0, 20.0
    sx = (w - 2 * pad) / (x1 - x0 or 1.0)
    sy = (h - 2 * pad) / (y1 - y0 or 1.0)
    pts = " ".join(f"{pad + (x - x0) * sx:.3f},{h - pad - (y - y0) * sy:.3f}" for x, y in zip(xs, ys))
    return f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>'


def to_svg(cfg, columns, rows):
    """One polyline per trace: Re/Im against r, or the Argand curve."""
    if cfg.command in ("smatrix-map",):
        raise DomainError("svg output is not available for smatrix-map")
    data = np.array([[float(v) for v in row] for row in rows], dtype=float)
    finite = np.all(np.isfinite(data), axis=1)
    data = data[finite]
    if data.size == 0:
        raise DomainError("nothing finite to plot")
    if cfg.command == "resonances":
        traces = [(data[:, 3], data[:, 4], "#1f77b4")]
    elif cfg.command == "bound-states":
        traces = [(data[:, 0], data[:, 2], "#1f77b4")]
    elif cfg.argand:
        traces = [(data[:, 1], data[:, 2], "#1f77b4")]
    else:
        traces = [(data[:, 0], data[:, 1], "#1f77b4"), (data[:, 0], data[:, 2], "#d62728")]
    xs = np.concatenate([t[0] for t in traces])
    ys = np.concatenate([t[1] for t in traces])
    box = (xs.min(), xs.max(), ys.min(), ys.max())
    body = "\n".join(_polyline(x, y, box, c) for x, y, c in traces)
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="640" height="400" '
            'viewBox="0 0 640 400">\n' + body + "\n</svg>\n")


def render(cfg):
    columns, rows, meta = RUNNERS[cfg.command](cfg)
    if cfg.format == "csv":
        return to_csv(columns, rows)
    if cfg.format == "json":
        return to_json(cfg, columns, rows, meta)
    return to_svg(cfg, columns, rows)


# -- argument parsing -------------------------------------------------------

def _fields(text, n, name):
    parts = text.split(":")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"{name} needs {n} ':'-separated fields, got {text!r}")
    return parts


def parse_complex(text):
    re_, im_ = _fields(text, 2, "complex value")
    try:
        return complex(float(re_), float(im_))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex value {text!r}") from None


def parse_grid(text):
    r0, r1, n = _fields(text, 3, "--grid")
    try:
        return float(r0), float(r1), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None


def parse_window(text):
    p = _fields(text, 6, "--k-window")
    try:
        return float(p[0]), float(p[1]), float(p[2]), float(p[3]), int(p[4]), int(p[5])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k window {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise DomainError(message)


def build_parser():
    p = _Parser(prog="gamowsusy", description="Square-well resonances and complex Darboux deformations.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--v0", type=float, required=True, help="well depth (units of k**2)")
    p.add_argument("--a", type=float, required=True, help="well radius")
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--m-max", type=int, default=7)
    p.add_argument("--m", type=int, default=None, help="resonance index used as k_alpha")
    p.add_argument("--k-alpha", type=parse_complex, default=None, metavar="RE:IM")
    p.add_argument("--k", type=parse_complex, default=None, metavar="RE:IM",
                   help="wavenumber of the solution to transform")
    p.add_argument("--grid", type=parse_grid, default=(0.01, 20.0, 200), metavar="RMIN:RMAX:N")
    p.add_argument("--k-window", type=parse_window, default=None,
                   metavar="REMIN:REMAX:IMMIN:IMMAX:NX:NY")
    p.add_argument("--mode", choices=("pure", "matched"), default="pure")
    p.add_argument("--refine", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--argand", action="store_true", help="svg: plot Im against Re")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    return p


def config_from_args(argv=None):
    ns = build_parser().parse_args(argv)
    return RunConfig(command=ns.command, v0=ns.v0, a=ns.a, ell=ns.ell, m_max=ns.m_max, m=ns.m,
                     k_alpha=ns.k_alpha, k=ns.k, grid=ns.grid, k_window=ns.k_window, mode=ns.mode,
                     refine=ns.refine, format=ns.format, out=ns.out, jobs=ns.jobs, argand=ns.argand)


def main(argv=None):
    try:
        cfg = config_from_args(argv)
        text = render(cfg)
    except DomainError as exc:
        print(f"gamowsusy: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"gamowsusy: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
