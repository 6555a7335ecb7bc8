#!/usr/bin/env python3
"""Recompute the shipped reference spectra with both solvers and print a
side-by-side comparison against the stored benchmark values."""

from ptbound import dvr, hofd, reference


def show(name, got, exp, digits):
    for n, (g, e) in enumerate(zip(got, exp)):
        print(f"  n={n:2d}  computed={g:.{digits}f}  reference={e:.{digits}f}"
              f"  diff={g - e:+.2e}")


def main():
    for name, p in reference.HYPERBOLIC_SETS.items():
        print(f"{name} (hyperbolic) V0={p.V0} A={p.A} B={p.B} kappa={p.kappa}")
        got = dvr.hyperbolic_spectrum(p).eigenvalues
        print(" DVR (M=200, b=10):")
        show(name, got, reference.HYPERBOLIC_REFERENCE[name]["DVR"], 12)
        got = hofd.hofd_spectrum(p, count=3).eigenvalues
        print(" HOFD (M=500, k=4):")
        show(name, got, reference.HYPERBOLIC_REFERENCE[name]["HOFD"], 12)

    for name, p in reference.TRIG_SETS.items():
        print(f"{name} (trigonometric) V0={p.V0} C={p.C} D={p.D} a={p.a}")
        got = dvr.trig_spectrum(p).eigenvalues
        print(" DVR (M=300):")
        show(name, got, reference.TRIG_REFERENCE[name]["DVR"], 6)
        got = hofd.hofd_spectrum(p, count=10).eigenvalues
        print(" HOFD (M=500, k=4):")
        show(name, got, reference.TRIG_REFERENCE[name]["HOFD"], 6)


if __name__ == "__main__":
    main()
