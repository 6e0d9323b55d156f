"""
Command-line front end.

Subcommands map one-to-one onto the library modules; outputs are CSV
(header row, '.' decimal, '\\n' line endings) or flat JSON
{inputs, results, meta}.  Exit codes: 0 success, 1 numerical failure
(no root/eigenvalue), 2 domain/usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from . import sae, scattering, shell, specfun
from .channels import Region, decompose, enumerate_channels
from .errors import DomainError, NumericalError

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_DOMAIN = 2

# forward cone excluded from emitted scattering tables (non-integrable
# 1/sin^2(phi/2) divergence)
FORWARD_CONE = 0.05


def _num_workers() -> int:
    try:
        return max(1, int(os.environ.get("ACF_NUM_THREADS", "1")))
    except ValueError:
        return 1


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json_text(inputs: dict, results: dict) -> str:
    doc = {"inputs": inputs, "results": results,
           "meta": {"version": __version__}}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _gnuplot_script(csv_path: str, ylabel: str, using: str) -> str:
    name = os.path.basename(csv_path)
    return (
        "set datafile separator ','\n"
        f"set ylabel '{ylabel}'\n"
        "set key off\n"
        f"plot '{name}' every ::1 using {using} with lines\n")


def _maybe_gnuplot(args, ylabel: str, using: str):
    if getattr(args, "emit_gnuplot", False):
        if args.output is None:
            raise DomainError("--emit-gnuplot requires --output")
        gp = os.path.splitext(args.output)[0] + ".gp"
        with open(gp, "w", newline="") as fh:
            fh.write(_gnuplot_script(args.output, ylabel, using))


def _check_range(name, value, lo=None, hi=None, lo_open=False, hi_open=False):
    if lo is not None and (value <= lo if lo_open else value < lo):
        raise DomainError(f"--{name} out of domain: {value}")
    if hi is not None and (value >= hi if hi_open else value > hi):
        raise DomainError(f"--{name} out of domain: {value}")
    return value


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_classify(args) -> int:
    coup = decompose(args.ma)
    rows = []
    for ch in enumerate_channels(coup, args.kmin, args.kmax):
        order = ch.nu if ch.nu is not None else ch.gamma
        rows.append((ch.k, ch.s, ch.l, ch.region.value,
                     "" if order is None else repr(order)))
    _emit(_csv_text(["k", "s", "l", "region", "nu_or_gamma"], rows),
          args.output)
    return EXIT_OK


def _cmd_bound(args) -> int:
    _check_range("gamma", args.gamma, 0.0, 1.0, True, True)
    _check_range("m", args.m, 0.0, lo_open=True)
    e_closed = sae.bound_energy_closed(args.gamma, args.xi, args.m)
    e_pole = sae.find_pole(args.xi, args.gamma, args.m)
    bs = sae.bound_state(args.gamma, args.xi, args.m)
    _emit(_json_text(
        {"gamma": args.gamma, "xi": args.xi, "m": args.m},
        {"energy_closed": e_closed, "energy_pole": e_pole,
         "kappa": bs.kappa, "norm_const": bs.norm_const}), args.output)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    coup = decompose(args.ma)
    report = sae.spectrum_report(coup, args.xi, args.kmin, args.kmax, m=args.m)
    rows = []
    for ch in report.channels:
        order = ch.nu if ch.nu is not None else ch.gamma
        bs = report.bound_states.get((ch.k, ch.s))
        rows.append((ch.k, ch.s, ch.l, ch.region.value,
                     "" if order is None else repr(order),
                     "" if bs is None else repr(bs.energy)))
    _emit(_csv_text(["k", "s", "l", "region", "order", "energy"], rows),
          args.output)
    return EXIT_OK


def _cmd_shell(args) -> int:
    _check_range("gamma", args.gamma, 0.0, 1.0, True, True)
    cfg = shell.ShellConfig(R=args.R, ma=args.ma, m=args.m, l=args.l,
                            gamma=args.gamma)
    results = {}
    methods = [args.method] if args.method else ["closed", "exact", "numerov"]
    for meth in methods:
        if meth == "closed":
            results["energy_closed"] = shell.shell_bound_energy_closed(cfg)
        elif meth == "exact":
            results["energy_exact"] = shell.shell_bound_energy_exact(cfg)
        else:
            results["energy_numerov"] = shell.numerov_bound_energy(cfg)
    _emit(_json_text(
        {"R": args.R, "ma": args.ma, "m": args.m, "l": args.l,
         "gamma": args.gamma}, results), args.output)
    return EXIT_OK


def _cmd_flow(args) -> int:
    _check_range("gamma", args.gamma, 0.0, 1.0, True, True)
    if not (args.etarget < 0):
        raise DomainError("--etarget must be negative")
    if not (0 < args.rmin < args.rmax):
        raise DomainError("--rmin/--rmax must satisfy 0 < rmin < rmax")
    n = max(2, int(round(args.decades * args.per_decade)) + 1)
    radii = [float(r) for r in np.geomspace(args.rmin, args.rmax, n)]

    def one(R):
        ma = shell.renormalize_coupling(args.etarget, R, args.l, args.m,
                                        args.gamma)
        cfg = shell.ShellConfig(R=R, ma=ma, m=args.m, l=args.l,
                                gamma=args.gamma)
        return R, ma, shell.shell_bound_energy_exact(cfg)

    with ThreadPoolExecutor(max_workers=_num_workers()) as ex:
        rows = list(ex.map(one, radii))
    _emit(_csv_text(["R", "ma", "energy_check"], rows), args.output)
    _maybe_gnuplot(args, "Ma(R)", "(column(1)):(column(2))")
    return EXIT_OK


def _cmd_scatter(args) -> int:
    _check_range("p", args.p, 0.0, lo_open=True)
    axis, _, eig = args.spin.partition(":")
    if axis not in ("z", "x") or eig not in ("+1", "-1", "1"):
        raise DomainError(f"--spin must look like z:+1 or x:-1, got {args.spin}")
    spin = scattering.SpinState(axis=axis, eigenvalue=int(eig))
    coup = decompose(args.ma)
    phis = [phi for phi in np.linspace(args.phimin, args.phimax, args.points)
            if abs(math.remainder(phi, 2.0 * math.pi)) > FORWARD_CONE]
    table = scattering.build_table(args.p, coup, spin, phis)
    rows = [(phi, f[0].real, f[0].imag, f[1].real, f[1].imag, ds)
            for phi, f, ds in table.rows]
    _emit(_csv_text(
        ["phi", "re_f1", "im_f1", "re_f2", "im_f2", "dsigma_dphi"], rows),
        args.output)
    _maybe_gnuplot(args, "dsigma/dphi", "(column(1)):(column(6))")
    return EXIT_OK


def _cmd_polescan(args) -> int:
    _check_range("gamma", args.gamma, 0.0, 1.0, True, True)
    if not (args.emin < args.emax < 0):
        raise DomainError("--emin/--emax must satisfy emin < emax < 0")
    grid = -np.geomspace(-args.emin, -args.emax, args.points)
    rows = scattering.pole_scan(args.xi, args.gamma, args.m, grid)
    _emit(_csv_text(["E", "B"], rows), args.output)
    _maybe_gnuplot(args, "B(E)", "(column(1)):(column(2))")
    return EXIT_OK


def _cmd_specfun(args) -> int:
    fn = {"j": specfun.bessel_j, "n": specfun.bessel_n,
          "k": specfun.bessel_k, "i": specfun.bessel_i}.get(args.func)
    if args.func == "gamma":
        value = specfun.gamma(args.x)
        inputs = {"func": "gamma", "x": args.x}
    elif fn is not None:
        if args.nu is None:
            raise DomainError(f"specfun {args.func} requires NU and X")
        value = fn(args.nu, args.x)
        inputs = {"func": args.func, "nu": args.nu, "x": args.x}
    else:
        raise DomainError(f"unknown function {args.func!r}")
    _emit(_json_text(inputs, {"value": value}), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    """Cross-oracle smoke suite; prints a pass/fail table."""
    checks = []

    def run(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - report, don't crash
            ok, detail = False, f"error: {exc}"
        checks.append((name, ok, detail))

    def pole_vs_closed():
        worst = 0.0
        for g in (0.2, 0.5, 0.8):
            for xi in (-0.5, -2.0):
                a = sae.find_pole(xi, g, 1.0)
                b = sae.bound_energy_closed(g, xi, 1.0)
                worst = max(worst, abs(a - b) / abs(b))
        return worst < 1e-10, f"max rel {worst:.2e}"

    def shell_three_way():
        cfg = shell.ShellConfig(R=1e-3, ma=-0.25, m=1.0, l=0, gamma=0.2)
        ec = shell.shell_bound_energy_closed(cfg)
        ee = shell.shell_bound_energy_exact(cfg)
        en = shell.numerov_bound_energy(cfg)
        g1 = abs(ec - ee) / abs(ee)
        g2 = abs(en - ee) / abs(ee)
        return (g1 < 0.01 and g2 < 0.005), f"closed/exact {g1:.2e}, numerov {g2:.2e}"

    def amplitude_extraction():
        coup = decompose(0.5)
        phis = [0.5, math.pi / 2, math.pi]
        fx = scattering.extract_amplitude(1.0, coup, 1, phis, 200.0)
        worst = 0.0
        for phi, fval in zip(phis, fx):
            ref = scattering.amplitude_spin_z(phi, 1.0, coup, 1)[0]
            worst = max(worst, abs(abs(fval) - abs(ref)) / abs(ref))
        return worst < 1e-3, f"max |f| rel {worst:.2e}"

    run("pole-vs-closed-form", pole_vs_closed)
    run("shell-three-way", shell_three_way)
    run("amplitude-extraction", amplitude_extraction)

    lines = []
    all_ok = True
    for name, ok, detail in checks:
        all_ok &= ok
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:28s} {detail}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all_ok else EXIT_NUMERICAL


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="acfermion",
        description="Spectra and scattering of a neutral fermion with an "
                    "anomalous magnetic moment in an Aharonov-Casher field.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", default=None, help="write to file instead of stdout")
        p.add_argument("--emit-gnuplot", action="store_true",
                       help="write a .gp plot script next to the CSV")

    p = sub.add_parser("classify", help="channel table for a coupling")
    p.add_argument("--ma", type=float, required=True)
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("bound", help="extension-family bound state")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--m", type=float, default=1.0)
    add_common(p)
    p.set_defaults(fn=_cmd_bound)

    p = sub.add_parser("spectrum", help="channels plus bound levels")
    p.add_argument("--ma", type=float, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--kmin", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--m", type=float, default=1.0)
    add_common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("shell", help="delta-shell bound level")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--ma", type=float, required=True)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--method", choices=["closed", "exact", "numerov"],
                   default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_shell)

    p = sub.add_parser("flow", help="coupling renormalization flow Ma(R)")
    p.add_argument("--etarget", type=float, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--gamma", type=float, default=0.3)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--rmin", type=float, required=True)
    p.add_argument("--rmax", type=float, required=True)
    p.add_argument("--decades", type=float, default=4.0)
    p.add_argument("--per-decade", type=float, default=4.0)
    add_common(p)
    p.set_defaults(fn=_cmd_flow)

    p = sub.add_parser("scatter", help="closed-form scattering table")
    p.add_argument("--ma", type=float, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--spin", default="z:+1", help="axis:eigenvalue, e.g. z:+1")
    p.add_argument("--phimin", type=float, default=0.2)
    p.add_argument("--phimax", type=float, default=6.08)
    p.add_argument("--points", type=int, default=200)
    add_common(p)
    p.set_defaults(fn=_cmd_scatter)

    p = sub.add_parser("polescan", help="ingoing coefficient over an E grid")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--emin", type=float, default=-100.0)
    p.add_argument("--emax", type=float, default=-1e-4)
    p.add_argument("--points", type=int, default=200)
    add_common(p)
    p.set_defaults(fn=_cmd_polescan)

    p = sub.add_parser("specfun", help="spot-evaluate a special function")
    p.add_argument("func", choices=["j", "n", "k", "i", "gamma"])
    p.add_argument("nu", type=float, nargs="?", default=None)
    p.add_argument("x", type=float, nargs="?", default=None)
    add_common(p)
    p.set_defaults(fn=_cmd_specfun)

    p = sub.add_parser("check", help="cross-oracle consistency suite")
    add_common(p)
    p.set_defaults(fn=_cmd_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    # specfun positional juggling: `specfun gamma 1.3` puts 1.3 in nu
    if args.command == "specfun":
        if args.func == "gamma" and args.x is None:
            args.x = args.nu
            args.nu = None
        if args.x is None:
            ap.error("specfun: missing argument X")
    try:
        return args.fn(args)
    except OverflowError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except NumericalError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
