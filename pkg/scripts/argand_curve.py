"""Argand curve of the deformed well near the edge, plus the edge values.

Uses the regular solution at the analytic seed (matched mode); pass
--mode pure to use the exact pole instead, for which V~ vanishes outside.
"""

import argparse

import numpy as np

from gamowsusy import PotentialSpec, analytic_resonance, argand_export, darboux_potential, gamow_function
from gamowsusy.cli import RunConfig, render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--v0", type=float, default=100.0)
    ap.add_argument("--a", type=float, default=10.0)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--mode", choices=("pure", "matched"), default="matched")
    ap.add_argument("--svg", default="argand.svg")
    args = ap.parse_args()

    spec = PotentialSpec(args.v0, args.a)
    cfg = RunConfig(command="darboux", v0=args.v0, a=args.a, m=args.m, mode=args.mode,
                    grid=(9.8, 13.0, 321), format="svg", argand=True)
    with open(args.svg, "w", newline="\n") as fh:
        fh.write(render(cfg))

    k = analytic_resonance(spec, args.m).k_seed
    if args.mode == "matched":
        g = gamow_function(spec, k, "matched")
        dp = darboux_potential(spec, g, np.linspace(9.8, 13.0, 321))
        for r, re, im in argand_export(dp, 9.8, 13.0, count=5) + argand_export(dp, 10.0, 10.1, count=2):
            print(f"r = {r:6.3f}   V~ = {re:+.4f} {im:+.4f}i")
    print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
