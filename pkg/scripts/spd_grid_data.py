#!/usr/bin/env python3
"""Emit spectral-phase-diagram grid data over the (A, B) plane.

Writes a CSV of (A, B, phase) triples plus the series-validity rectangle,
suitable for plotting with any external tool.
"""

import argparse

from ptbound.potentials import spd_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--V0", type=float, default=10.0)
    ap.add_argument("--kappa", type=float, default=1.0)
    ap.add_argument("--A-range", type=float, nargs=2, default=(-60.0, 40.0))
    ap.add_argument("--B-range", type=float, nargs=2, default=(-60.0, 40.0))
    ap.add_argument("--resolution", type=int, default=200)
    ap.add_argument("--out", default="spd_grid.csv")
    args = ap.parse_args()

    a_vals, b_vals, phases, rect = spd_grid(
        args.V0, args.kappa, tuple(args.A_range), tuple(args.B_range),
        args.resolution)
    with open(args.out, "w") as fh:
        fh.write(f"# V0={args.V0} kappa={args.kappa}\n")
        fh.write(f"# rectangle: B_max={rect['B_max']} A_max={rect['A_max']}\n")
        fh.write("A,B,phase\n")
        for i, b in enumerate(b_vals):
            for j, a in enumerate(a_vals):
                fh.write(f"{a:.10g},{b:.10g},{phases[i, j].value}\n")
    counts = {}
    for row in phases:
        for ph in row:
            counts[ph.value] = counts.get(ph.value, 0) + 1
    print(f"wrote {args.out}; phase counts: {counts}")


if __name__ == "__main__":
    main()
