"""Command-line interface: spectrum / wavefunction / spd / verify.

Artifacts are CSV (manifest as leading `# key=value` lines, then a header
row) or a JSON mirror. Bodies are deterministic; the timestamp lives only
in the manifest. Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 computation failure.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import sys

import numpy as np

from . import dvr, hofd, orthopoly, reference, tra
from .errors import PtboundError
from .hofd import HofdConfig
from .potentials import HyperbolicParams, TrigParams, spd_grid

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3

# significant digits per family, matching the published precision
DIGITS = {"hyperbolic": 12, "trig": 6}


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits - 1}e}" if x == x else "nan"


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _emit(manifest: dict, columns: list[str], rows: list[list[str]],
          fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        payload = {"manifest": manifest, "columns": columns,
                   "rows": [[_coerce(v) for v in row] for row in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"# {k}={v}" for k, v in manifest.items()]
        lines.append(",".join(columns))
        lines.extend(",".join(row) for row in rows)
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coerce(v: str):
    try:
        return int(v)
    except ValueError:
        try:
            return float(v)
        except ValueError:
            return v


def _hyperbolic_params(args) -> HyperbolicParams:
    return HyperbolicParams(V0=args.V0, A=args.A, B=args.B, kappa=args.kappa)


def _trig_params(args) -> TrigParams:
    return TrigParams(V0=args.V0, C=args.C, D=args.D, a=args.a)


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=["hyperbolic", "trig"])
    p.add_argument("--V0", type=float, required=True)
    p.add_argument("--A", type=float, help="hyperbolic family")
    p.add_argument("--B", type=float, help="hyperbolic family")
    p.add_argument("--kappa", type=float, default=1.0, help="hyperbolic family")
    p.add_argument("--C", type=float, help="trigonometric family")
    p.add_argument("--D", type=float, help="trigonometric family")
    p.add_argument("--a", type=float, help="trigonometric family")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--format", default="csv", choices=["csv", "json"])


def _params_from_args(args, parser):
    if args.family == "hyperbolic":
        missing = [n for n in ("A", "B") if getattr(args, n) is None]
        if missing:
            parser.error(f"hyperbolic family requires --{' --'.join(missing)}")
        return _hyperbolic_params(args)
    missing = [n for n in ("C", "D", "a") if getattr(args, n) is None]
    if missing:
        parser.error(f"trig family requires --{' --'.join(missing)}")
    return _trig_params(args)


def _spectra(args, p):
    """Run the requested solver(s); returns {method_name: SpectrumResult}."""
    results = {}
    if args.family == "hyperbolic":
        count = args.count
        if args.method in ("dvr", "both"):
            m = args.grid_M or dvr.DEFAULT_M_HYPERBOLIC
            results["DVR"] = dvr.hyperbolic_spectrum(
                p, M=m, b=args.box_b, count=count)
        if args.method in ("hofd", "both"):
            n_levels = count
            if n_levels is None:
                n_levels = len(results.get("DVR", dvr.hyperbolic_spectrum(
                    p, b=args.box_b)).eigenvalues)
            cfg = HofdConfig(M=args.grid_M or hofd.DEFAULT_M,
                             k=args.stencil_k)
            results["HOFD"] = hofd.hofd_spectrum(p, cfg, count=n_levels)
    else:
        count = args.count if args.count is not None else 10
        if args.method in ("dvr", "both"):
            m = args.grid_M or dvr.DEFAULT_M_TRIG
            results["DVR"] = dvr.trig_spectrum(p, M=m, count=count)
        if args.method in ("hofd", "both"):
            cfg = HofdConfig(M=args.grid_M or hofd.DEFAULT_M,
                             k=args.stencil_k)
            results["HOFD"] = hofd.hofd_spectrum(p, cfg, count=count)
    return results


def cmd_spectrum(args, parser) -> int:
    p = _params_from_args(args, parser)
    results = _spectra(args, p)
    digits = DIGITS[args.family]
    methods = list(results)
    n_rows = min((len(r.eigenvalues) for r in results.values()), default=0)
    columns = ["n"] + [f"E_{m.lower()}" for m in methods]
    rows = [[str(n)] + [_fmt(results[m].eigenvalues[n], digits) for m in methods]
            for n in range(n_rows)]
    manifest = {"command": "spectrum", "family": args.family,
                "params": _param_echo(p), "method": args.method,
                "units": "atomic (hbar = m = 1)",
                "generated": _timestamp()}
    for m in methods:
        manifest[f"{m.lower()}_config"] = json.dumps(results[m].config)
        manifest[f"{m.lower()}_max_residual"] = f"{results[m].max_residual:.3e}"
    _emit(manifest, columns, rows, args.format, args.out)
    return EXIT_OK


def _param_echo(p) -> str:
    if isinstance(p, HyperbolicParams):
        return f"V0={p.V0};A={p.A};B={p.B};kappa={p.kappa}"
    return f"V0={p.V0};C={p.C};D={p.D};a={p.a}"


def cmd_wavefunction(args, parser) -> int:
    p = _params_from_args(args, parser)
    family = (tra.Family.HYPERBOLIC if args.family == "hyperbolic"
              else tra.Family.TRIGONOMETRIC)
    if args.family == "hyperbolic":
        spec = dvr.hyperbolic_spectrum(p, M=args.grid_M or dvr.DEFAULT_M_HYPERBOLIC,
                                       b=args.box_b)
        x_max = args.box_b
        abscissa = "kappa*x"
        scale = p.kappa
    else:
        spec = dvr.trig_spectrum(p, M=args.grid_M or dvr.DEFAULT_M_TRIG,
                                 count=args.count if args.count is not None else 10)
        x_max = p.a
        abscissa = "x/a"
        scale = 1.0 / p.a
    bound = spec.eigenvalues
    states = args.states
    bad = [m for m in states if m < 0 or m >= len(bound)]
    if bad:
        print(f"error: state index {bad[0]} outside the {len(bound)} "
              "computed bound states", file=sys.stderr)
        return EXIT_COMPUTE

    x = np.linspace(0.0, x_max, args.samples + 2)[1:-1]  # endpoints excluded
    solutions = {m: tra.assemble_solution(family, p, bound[m]) for m in states}
    digits = DIGITS[args.family]
    columns = [abscissa] + [f"psi_{m}" for m in states]
    psi_cols = {}
    for m, sol in solutions.items():
        _, psi = tra.eval_wavefunction(sol, p, x)
        psi_cols[m] = psi
    rows = [[_fmt(scale * xi, digits)]
            + [_fmt(psi_cols[m][i], digits) for m in states]
            for i, xi in enumerate(x)]
    manifest = {"command": "wavefunction", "family": args.family,
                "params": _param_echo(p),
                "units": "atomic (hbar = m = 1)",
                "generated": _timestamp()}
    for m, sol in solutions.items():
        manifest[f"state_{m}"] = json.dumps({
            "E": sol.energy, "mu": sol.basis.mu, "nu": sol.basis.nu,
            "N": sol.basis.N_m, "branch": sol.series.branch.value,
            "coeffs": list(sol.coeffs)})
    _emit(manifest, columns, rows, args.format, args.out)
    return EXIT_OK


def cmd_spd(args, parser) -> int:
    a_vals, b_vals, phases, rect = spd_grid(
        args.V0, args.kappa, (args.A_min, args.A_max),
        (args.B_min, args.B_max), args.resolution)
    columns = ["A", "B", "phase"]
    rows = [[_fmt(a, 12), _fmt(b, 12), phases[i, j].value]
            for i, b in enumerate(b_vals) for j, a in enumerate(a_vals)]
    manifest = {"command": "spd", "V0": args.V0, "kappa": args.kappa,
                "rectangle_B_max": rect["B_max"], "rectangle_A_max": rect["A_max"],
                "units": "atomic (hbar = m = 1)",
                "generated": _timestamp()}
    _emit(manifest, columns, rows, args.format, args.out)
    return EXIT_OK


def _verify_table1(report: list) -> bool:
    ok = True
    for name, p in reference.HYPERBOLIC_SETS.items():
        got_dvr = dvr.hyperbolic_spectrum(p).eigenvalues
        got_hofd = hofd.hofd_spectrum(p, count=3).eigenvalues
        for method, got in (("DVR", got_dvr), ("HOFD", got_hofd)):
            exp = reference.HYPERBOLIC_REFERENCE[name][method]
            for n, (g, e) in enumerate(zip(got, exp)):
                tol = 1e-6 if (method == "DVR" and n == 2) else \
                    1e-7 if method == "HOFD" else 1e-8
                passed = abs(g - e) <= tol
                ok &= passed
                report.append((f"table1 {name} {method} n={n}", g, e, tol, passed))
    return ok


def _verify_table2(report: list) -> bool:
    ok = True
    for name, p in reference.TRIG_SETS.items():
        got_dvr = dvr.trig_spectrum(p).eigenvalues
        got_hofd = hofd.hofd_spectrum(p, count=10).eigenvalues
        for method, got in (("DVR", got_dvr), ("HOFD", got_hofd)):
            exp = reference.TRIG_REFERENCE[name][method]
            for n, (g, e) in enumerate(zip(got, exp)):
                tol = 1e-4 if n <= 4 else 1e-3
                passed = abs(g - e) <= tol
                ok &= passed
                report.append((f"table2 {name} {method} n={n}", g, e, tol, passed))
    return ok


def _verify_polys(report: list) -> bool:
    ok = True
    rng = np.random.default_rng(20240815)
    for trial in range(200):
        n_max = int(rng.integers(0, 6))
        mu = float(rng.uniform(-0.9, 3.0))
        nu = float(-mu - 2 * n_max - 1 - rng.uniform(0.1, 5.0))
        n = int(rng.integers(0, n_max + 1))
        y = float(rng.uniform(1.0 + 1e-6, 8.0))
        jp = orthopoly.JacobiParams(mu=mu, nu=nu, N=n_max)
        q_rec = orthopoly.jacobi_q(n, jp, y)
        q_hyp = orthopoly.jacobi_q_oracle(n, jp, y)
        rel = abs(q_rec - q_hyp) / max(abs(q_hyp), 1.0)
        if rel > 1e-10:
            ok = False
            report.append((f"polys recursion-vs-hypergeometric trial={trial}",
                           q_rec, q_hyp, 1e-10, False))
    report.append(("polys recursion-vs-hypergeometric (200 trials)",
                   0.0, 0.0, 1e-10, ok))
    return ok


def cmd_verify(args, parser) -> int:
    report: list = []
    ok = True
    if args.which in ("table1", "all"):
        ok &= _verify_table1(report)
    if args.which in ("table2", "all"):
        ok &= _verify_table2(report)
    if args.which in ("polys", "all"):
        ok &= _verify_polys(report)
    for name, got, exp, tol, passed in report:
        tag = "PASS" if passed else "FAIL"
        print(f"[{tag}] {name}: measured={got:.12g} expected={exp:.12g} tol={tol:g}")
    print("verify: ALL PASS" if ok else "verify: FAILURES PRESENT")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptbound",
        description="Bound-state spectra and wavefunctions of generalized "
                    "Poschl-Teller potentials")
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="energy spectrum table")
    _add_family_flags(p_spec)
    p_spec.add_argument("--method", default="both", choices=["dvr", "hofd", "both"])
    p_spec.add_argument("--count", type=int, default=None)
    p_spec.add_argument("--grid-M", type=int, default=None, dest="grid_M")
    p_spec.add_argument("--box-b", type=float, default=dvr.DEFAULT_B, dest="box_b")
    p_spec.add_argument("--stencil-k", type=int, default=hofd.DEFAULT_K,
                        dest="stencil_k")
    _add_output_flags(p_spec)

    p_wf = sub.add_parser("wavefunction", help="series wavefunction samples")
    _add_family_flags(p_wf)
    p_wf.add_argument("--states", type=int, nargs="+", required=True)
    p_wf.add_argument("--samples", type=int, default=500)
    p_wf.add_argument("--count", type=int, default=None)
    p_wf.add_argument("--grid-M", type=int, default=None, dest="grid_M")
    p_wf.add_argument("--box-b", type=float, default=dvr.DEFAULT_B, dest="box_b")
    _add_output_flags(p_wf)

    p_spd = sub.add_parser("spd", help="spectral phase diagram grid")
    p_spd.add_argument("--V0", type=float, required=True)
    p_spd.add_argument("--kappa", type=float, default=1.0)
    p_spd.add_argument("--A-min", type=float, required=True, dest="A_min")
    p_spd.add_argument("--A-max", type=float, required=True, dest="A_max")
    p_spd.add_argument("--B-min", type=float, required=True, dest="B_min")
    p_spd.add_argument("--B-max", type=float, required=True, dest="B_max")
    p_spd.add_argument("--resolution", type=int, default=50)
    _add_output_flags(p_spd)

    p_ver = sub.add_parser("verify", help="check shipped reference tables")
    p_ver.add_argument("which", choices=["table1", "table2", "polys", "all"])

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {"spectrum": cmd_spectrum, "wavefunction": cmd_wavefunction,
                "spd": cmd_spd, "verify": cmd_verify}
    try:
        return handlers[args.command](args, parser)
    except SystemExit as exc:  # parser.error inside a handler
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    except PtboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
