"""Command-line front end.

Exit codes: 0 success, 1 oracle check failed, 2 bad parameters, 3 I/O error.
Physics outputs are in atomic units; laboratory units appear only as inputs
and in the metadata block.

If ``--output`` is omitted and ``SFIRATE_OUTPUT_DIR`` is set, results go to
``$SFIRATE_OUTPUT_DIR/<subcommand>.<format>``; otherwise to stdout.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import __version__, limits, oracle, rate, scan
from .errors import DomainError, LimitUndefinedError, SpecError
from .io import Table, to_csv, to_json
from .units import HYDROGEN_IP_AU, LabLaser, Target

OUTPUT_DIR_ENV = "SFIRATE_OUTPUT_DIR"
ORACLE_MAX_REL_DEV = 1e-6

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_BAD_PARAMS = 2
EXIT_IO = 3


class _ParamError(Exception):
    pass


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--wavelength-nm", type=float, default=800.0)
    common.add_argument("--intensity", type=float, default=1e13, help="peak intensity in W/cm^2")
    ip = common.add_mutually_exclusive_group()
    ip.add_argument("--ip-au", type=float, default=None, help="ionization potential (a.u.); default hydrogen")
    ip.add_argument("--ip-ev", type=float, default=None, help="ionization potential (eV)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="output file; '-' for stdout")

    parser = argparse.ArgumentParser(prog="sfirate", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", parents=[common], help="single-momentum rate exponent")
    p.add_argument("--kpar", type=float, default=0.0)
    p.add_argument("--kperp", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0, help="laser phase omega*t (rad)")
    p.add_argument("--linear", action="store_true", help="also emit exp(log_rate)")

    p = sub.add_parser("spectrum", parents=[common], help="2-D momentum spectrum")
    p.add_argument("--kpar-min", type=float)
    p.add_argument("--kpar-max", type=float)
    p.add_argument("--kperp-min", type=float)
    p.add_argument("--kperp-max", type=float)
    p.add_argument("--n-par", type=int, default=201)
    p.add_argument("--n-perp", type=int, default=101)
    p.add_argument("--no-normalize", action="store_true")

    p = sub.add_parser("phase-scan", parents=[common], help="rate versus laser phase")
    p.add_argument("--k-values", type=_float_list, default=[0.0, 0.25, 0.5])
    p.add_argument("--k-units", choices=("kappa", "au"), default="kappa",
                   help="kappa: k-values in units of sqrt(2 ip)")
    p.add_argument("--kperp", type=float, default=0.0)
    p.add_argument("--phi-min", type=float, default=-math.pi)
    p.add_argument("--phi-max", type=float, default=math.pi)
    p.add_argument("--n-phi", type=int, default=361)

    p = sub.add_parser("cut", parents=[common], help="normalized parallel-momentum cut")
    p.add_argument("--kpar-max", type=float, default=None, help="default 3 sqrt(2 ip)")
    p.add_argument("--n", type=int, default=301)

    p = sub.add_parser("cutoff", parents=[common], help="knee of the parallel spectrum")
    p.add_argument("--n-energy", type=int, default=400)
    p.add_argument("--e-min-up", type=float, default=0.1)
    p.add_argument("--e-max-up", type=float, default=10.0)

    p = sub.add_parser("limits", parents=[common], help="compare every special-case formula")
    p.add_argument("--kpar", type=float, default=None)
    p.add_argument("--kperp", type=float, default=None)

    p = sub.add_parser("oracle-check", parents=[common], help="numerical saddle-point cross-check")
    p.add_argument("--n-points", type=int, default=oracle.SUITE_SIZE)
    p.add_argument("--seed", type=int, default=oracle.SUITE_SEED)
    return parser


def _setup(args):
    if args.ip_ev is not None:
        target = Target.from_ev(args.ip_ev)
    else:
        target = Target(HYDROGEN_IP_AU if args.ip_au is None else args.ip_au)
    lab = LabLaser(args.wavelength_nm, args.intensity)
    lab_meta = {"wavelength_nm": lab.wavelength_nm, "intensity_w_cm2": lab.intensity_w_cm2}
    return lab.to_field(), target, lab_meta


def _field_record(field, target):
    return {
        "omega": field.omega,
        "f0": field.f0,
        "gamma": field.gamma(target.ip),
        "up": field.up,
        "ip": target.ip,
    }


def _cmd_rate(args, field, target, meta):
    k_eff = args.kpar + field.quiver_momentum * math.sin(args.phi)
    ev = rate.evaluate(field, target, k_eff, args.kperp)
    record = _field_record(field, target)
    record.update(
        k_par=args.kpar,
        k_perp=abs(args.kperp),
        phi=args.phi,
        k_par_eff=k_eff,
        alpha=float(ev.alpha),
        beta=float(ev.beta),
        f=float(ev.f),
        log_rate=float(ev.log_rate),
    )
    if args.linear:
        record["rate"] = math.exp(record["log_rate"])
    return Table.single("rate", record, meta), EXIT_OK


def _cmd_spectrum(args, field, target, meta):
    default = scan.GridSpec.default(target)
    spec = scan.GridSpec(
        default.k_par_min if args.kpar_min is None else args.kpar_min,
        default.k_par_max if args.kpar_max is None else args.kpar_max,
        default.k_perp_min if args.kperp_min is None else args.kperp_min,
        default.k_perp_max if args.kperp_max is None else args.kperp_max,
        args.n_par,
        args.n_perp,
        not args.no_normalize,
    )
    return Table.from_scan(scan.spectrum_grid(field, target, spec), meta), EXIT_OK


def _cmd_phase_scan(args, field, target, meta):
    scale = target.kappa if args.k_units == "kappa" else 1.0
    spec = scan.PhaseScanSpec(args.phi_min, args.phi_max, args.n_phi, tuple(v * scale for v in args.k_values))
    return Table.from_scan(scan.phase_scan(field, target, spec, args.kperp), meta), EXIT_OK


def _cmd_cut(args, field, target, meta):
    kmax = 3.0 * target.kappa if args.kpar_max is None else args.kpar_max
    if not kmax > 0 or args.n < 2:
        raise SpecError("cut needs kpar-max > 0 and n >= 2")
    k = [kmax * i / (args.n - 1) for i in range(args.n)]
    return Table.from_scan(scan.parallel_cut_normalized(field, target, k), meta), EXIT_OK


def _cmd_cutoff(args, field, target, meta):
    res = scan.find_cutoff(field, target, args.n_energy, args.e_min_up, args.e_max_up)
    if not res.in_regime:
        print(f"warning: gamma = {res.gamma:.4g} > {scan.CUTOFF_GAMMA_MAX}; "
              "cutoff is meaningful in the tunneling regime only", file=sys.stderr)
    if res.ambiguous:
        print("warning: knee location is ambiguous (competing extremum within 1%)", file=sys.stderr)
    record = _field_record(field, target)
    record.update(
        cutoff_energy=res.energy,
        ratio_to_up=res.ratio,
        in_regime=res.in_regime,
        ambiguous=res.ambiguous,
        at_boundary=res.at_boundary,
    )
    return Table.single("cutoff", record, meta), EXIT_OK


def _representative_momentum(name, field, target):
    kappa = target.kappa
    k_high = math.sqrt(2.0 * limits.DEFAULT_REGIME.asymptotic_energy_min_up * field.up)
    k_ppt = math.sqrt(0.005 * 2.0 * target.ip)
    return {
        "keldysh": (0.0, 0.0),
        "corkum": (0.1 * kappa, 0.0),
        "delone": (0.0, 0.1 * kappa),
        "ivanov": (0.0, 0.1 * kappa),
        "krainov_high_energy": (k_high, 0.0),
        "krainov_asymptotic": (k_high, 0.0),
        "perp_asymptotic": (0.0, k_high),
        "ppt": (k_ppt, k_ppt),
    }[name]


def _cmd_limits(args, field, target, meta):
    columns = ["limit", "k_par", "k_perp", "in_regime", "general_log_rate",
               "limit_log_rate", "abs_diff", "rel_diff", "status"]
    rows = []
    for name in limits.LIMIT_NAMES:
        if args.kpar is None and args.kperp is None:
            kp, kt = _representative_momentum(name, field, target)
        else:
            kp, kt = args.kpar or 0.0, abs(args.kperp or 0.0)
        try:
            rep = limits.compare_limit(name, field, target, rate.DriftMomentum(kp, kt))
        except (LimitUndefinedError, DomainError) as exc:
            nan = float("nan")
            rows.append([name, kp, kt, False, nan, nan, nan, nan, f"undefined: {exc}"])
            continue
        rows.append([name, kp, kt, rep.in_validity_regime, rep.general_log_rate,
                     rep.limit_log_rate, rep.abs_diff, rep.rel_diff, "ok"])
    meta = dict(meta, **_field_record(field, target))
    return Table("limits", columns, rows, meta), EXIT_OK


def _cmd_oracle_check(args, field, target, meta):
    if args.n_points < 1:
        raise SpecError("n-points must be >= 1")
    points = oracle.random_suite(args.n_points, args.seed, omega=field.omega, ip=target.ip)
    res = oracle.run_suite(points)
    passed = res.max_rel_dev < ORACLE_MAX_REL_DEV
    record = {
        "n_points": args.n_points,
        "seed": args.seed,
        "max_rel_dev": res.max_rel_dev,
        "median_rel_dev": res.median_rel_dev,
        "max_analytic_residual": float(res.analytic_residual.max()),
        "max_numeric_residual": float(res.numeric_residual.max()),
        "max_t0_dev": float(res.t0_dev.max()),
        "passed": passed,
    }
    meta = dict(meta, omega=field.omega, ip=target.ip)
    return Table.single("oracle_check", record, meta), EXIT_OK if passed else EXIT_FAILED_CHECK


_COMMANDS = {
    "rate": _cmd_rate,
    "spectrum": _cmd_spectrum,
    "phase-scan": _cmd_phase_scan,
    "cut": _cmd_cut,
    "cutoff": _cmd_cutoff,
    "limits": _cmd_limits,
    "oracle-check": _cmd_oracle_check,
}


def _emit(text, args):
    path = args.output
    if path is None and os.environ.get(OUTPUT_DIR_ENV):
        path = Path(os.environ[OUTPUT_DIR_ENV]) / f"{args.command}.{args.format}"
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        field, target, meta = _setup(args)
        table, code = _COMMANDS[args.command](args, field, target, meta)
    except (DomainError, SpecError, LimitUndefinedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    text = to_csv(table) if args.format == "csv" else to_json(table)
    try:
        _emit(text, args)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
