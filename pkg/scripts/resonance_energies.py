"""Analytic and Newton-refined resonance energies for two deep square wells."""

import argparse

from gamowsusy import PotentialSpec, allowed_m, analytic_resonance, refine_record


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=float, default=10.0)
    ap.add_argument("--depths", type=float, nargs="+", default=[100.0, 1000.0])
    ap.add_argument("--m-max", type=int, default=7)
    args = ap.parse_args()

    for v0 in args.depths:
        spec = PotentialSpec(v0, args.a)
        print(f"v0 = {v0:g}, a = {args.a:g}")
        print(f"{'m':>3} {'n':>5} {'eps (analytic)':>28} {'eps (pole)':>28} {'|D|':>9} {'it':>3}")
        for m in allowed_m(spec, args.m_max):
            rec = refine_record(spec, analytic_resonance(spec, m))
            eps = rec.k_refined**2
            print(f"{m:3d} {rec.n:5d} {rec.eps_estimate.real:13.7f} {rec.eps_estimate.imag:+13.7f}i "
                  f"{eps.real:13.7f} {eps.imag:+13.7f}i {rec.pole_residual:9.1e} {rec.iterations:3d}")
        print(f"n_inf = {rec.n_inf}\n")


if __name__ == "__main__":
    main()
