"""Command-line front end: every scan and figure-data generator, CSV/JSON
emission, optional matplotlib rendering next to the delimited output.

Exit codes: 0 success, 1 input error, 2 solver error, 3 conjecture violation
detected (scans only, opt-in via --fail-on-violation).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import density_metrics, dimer, lieb_oxford, semiclassics, tf_largez
from .errors import DftLabError, InvalidInputError, SolverError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2
EXIT_VIOLATION = 3


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _write_csv(path, header, rows, meta=()):
    with open(path, "w", newline="") as fh:
        for line in meta:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def _read_config(path):
    """Flat key = value file; '#' comments allowed."""
    cfg = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidInputError(f"{path}: malformed config line {raw.rstrip()!r}")
            key, val = (part.strip() for part in line.split("=", 1))
            cfg[key.replace("-", "_")] = val
    return cfg


def _coerce(value, like):
    if isinstance(like, bool):
        if isinstance(value, bool):
            return value
        return str(value).strip().lower() in ("1", "true", "yes", "on")
    if like is None or isinstance(value, type(like)):
        return value
    return type(like)(value)


class _Opts:
    def __init__(self, args, defaults):
        cfg = _read_config(args.config) if getattr(args, "config", None) else {}
        for key, dflt in defaults.items():
            val = getattr(args, key, None)
            if val is None:
                val = cfg.get(key, dflt)
            setattr(self, key, _coerce(val, dflt) if val is not None else None)


def _threads(opts) -> int:
    if getattr(opts, "threads", None):
        return max(1, int(opts.threads))
    env = os.environ.get("DFTLAB_THREADS", "")
    return max(1, int(env)) if env.strip() else 1


def _map_ordered(func, items, n_workers):
    """Deterministic map: rows come back in parameter order regardless of
    completion order."""
    if n_workers <= 1:
        return [func(it) for it in items]
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * n_workers))))


def _plot_path(out):
    root, _ = os.path.splitext(out)
    return root + ".png"


_HARTREE_NOTE = (
    "dimer Hartree convention: U_H(dn) = u*(1 + dn^2/4), E_X = -U_H/2 "
    "(asymmetric-dimer choice is a convention, flagged here)"
)


# ---------------------------------------------------------------- dimer-ac

def cmd_dimer_ac(args):
    o = _Opts(args, dict(t=0.5, u=5.0, dv=0.0, n_lambda=101, out="dimer_ac.csv",
                         plot=False, fail_on_violation=False))
    curve = dimer.adiabatic_connection(o.t, o.u, o.dv, o.n_lambda)
    decomp = dimer.decompose_energies(curve, o.t, o.u)
    conv = dimer.convexity_report(curve)
    _write_csv(o.out, ["lambda", "uxc"],
               zip(curve.lambdas, curve.uxc),
               meta=[f"dftlab dimer-ac t={_fmt(o.t)} u={_fmt(o.u)} dv={_fmt(o.dv)}",
                     _HARTREE_NOTE,
                     f"dn_target={_fmt(curve.dn_target)}"])
    tcuc_ok = decomp.tc <= 0.5 * abs(decomp.uc) + 1e-10
    # monotonicity of the integrand is monitored and reported, never asserted
    monotone = bool(np.all(np.diff(curve.uxc) <= 1e-10 * max(1.0, abs(curve.ex))))
    print(f"ex={_fmt(decomp.ex)} ec={_fmt(decomp.ec)} tc={_fmt(decomp.tc)} uc={_fmt(decomp.uc)}")
    print(f"convexity_min_second_diff={_fmt(conv.min_second_diff)} violated={conv.violated}")
    print(f"tc_le_half_abs_uc={tcuc_ok}")
    print(f"uxc_nonincreasing={monotone}")
    if o.plot:
        from . import plots
        plots.ac_curve_figure(curve, decomp, _plot_path(o.out))
    if o.fail_on_violation and (conv.violated or not tcuc_ok):
        return EXIT_VIOLATION
    return EXIT_OK


# -------------------------------------------------------------- dimer-scan

def _dimer_scan_point(params):
    t, u_over_t, dv_over_t, n_lambda = params
    u, dv = u_over_t * t, dv_over_t * t
    curve = dimer.adiabatic_connection(t, u, dv, n_lambda)
    decomp = dimer.decompose_energies(curve, t, u)
    conv = dimer.convexity_report(curve)
    _, _, tc_hf = dimer.hf_kinetic_correlation(dimer.DimerParams(t, u, dv))
    return (u_over_t, dv_over_t, decomp.ec, decomp.tc, decomp.uc, tc_hf,
            conv.min_second_diff, conv.violated)


def run_dimer_scan(t, u_grid, dv_grid, n_lambda=101, n_workers=1):
    """Conjecture scan over (u/t, dv/t); returns (rows, violations) where rows
    carry (u_over_t, dv_over_t, ec, tc, uc, tc_hf, convexity_min)."""
    params = [(t, u_ot, dv_ot, n_lambda) for u_ot in u_grid for dv_ot in dv_grid]
    raw = _map_ordered(_dimer_scan_point, params, n_workers)
    rows, violations = [], []
    for u_ot, dv_ot, ec, tc, uc, tc_hf, conv_min, conv_bad in raw:
        rows.append((u_ot, dv_ot, ec, tc, uc, tc_hf, conv_min))
        if conv_bad:
            violations.append(("convexity", u_ot, dv_ot, conv_min))
        if tc < -1e-10:
            violations.append(("tc_negative", u_ot, dv_ot, tc))
        if tc - 0.5 * abs(uc) > 1e-10:
            violations.append(("tc_gt_half_uc", u_ot, dv_ot, tc - 0.5 * abs(uc)))
        if tc_hf < -1e-10:
            violations.append(("tc_hf_negative", u_ot, dv_ot, tc_hf))
    return rows, violations


def cmd_dimer_scan(args):
    o = _Opts(args, dict(t=0.5, u_over_t_min=0.1, u_over_t_max=10.0, u_over_t_count=40,
                         dv_over_t_min=0.0, dv_over_t_max=10.0, dv_over_t_count=40,
                         n_lambda=101, out="dimer_scan.csv", plot=False,
                         fail_on_violation=False, threads=0))
    u_grid = np.linspace(o.u_over_t_min, o.u_over_t_max, o.u_over_t_count)
    dv_grid = np.linspace(o.dv_over_t_min, o.dv_over_t_max, o.dv_over_t_count)
    rows, violations = run_dimer_scan(o.t, u_grid, dv_grid, o.n_lambda, _threads(o))
    _write_csv(o.out, ["u_over_t", "dv_over_t", "ec", "tc", "uc", "tc_hf", "convexity_min"],
               rows, meta=[f"dftlab dimer-scan t={_fmt(o.t)}", _HARTREE_NOTE])
    for kind, u_ot, dv_ot, val in violations:
        print(f"violation {kind} at u/t={_fmt(u_ot)} dv/t={_fmt(dv_ot)}: {_fmt(val)}")
    print(f"violations={len(violations)} points={len(rows)}")
    if o.plot:
        from . import plots
        ratio = [r[3] / abs(r[4]) if r[4] != 0.0 else 0.0 for r in rows]
        plots.scan_heatmap_figure([r[0] for r in rows], [r[1] for r in rows],
                                  ratio, _plot_path(o.out), "Tc / |Uc|")
    if o.fail_on_violation and violations:
        return EXIT_VIOLATION
    return EXIT_OK


# -------------------------------------------------------------- hf-kinetic

def _hf_point(params):
    t, u_over_t, dv_over_t = params
    p = dimer.DimerParams(t, u_over_t * t, dv_over_t * t)
    return (u_over_t, dv_over_t) + dimer.hf_kinetic_correlation(p)


def cmd_hf_kinetic(args):
    o = _Opts(args, dict(t=0.5, u_over_t_min=0.0, u_over_t_max=10.0, u_over_t_count=40,
                         dv_over_t_min=0.0, dv_over_t_max=10.0, dv_over_t_count=40,
                         out="hf_kinetic.csv", fail_on_violation=False, threads=0))
    params = [(o.t, u_ot, dv_ot)
              for u_ot in np.linspace(o.u_over_t_min, o.u_over_t_max, o.u_over_t_count)
              for dv_ot in np.linspace(o.dv_over_t_min, o.dv_over_t_max, o.dv_over_t_count)]
    rows = _map_ordered(_hf_point, params, _threads(o))
    _write_csv(o.out, ["u_over_t", "dv_over_t", "t_full", "t_hf", "tc_hf"], rows,
               meta=[f"dftlab hf-kinetic t={_fmt(o.t)}"])
    min_row = min(rows, key=lambda r: r[4])
    print(f"min_tc_hf={_fmt(min_row[4])} at u/t={_fmt(min_row[0])} dv/t={_fmt(min_row[1])}")
    if o.fail_on_violation and min_row[4] < -1e-10:
        return EXIT_VIOLATION
    return EXIT_OK


# --------------------------------------------------------------- staircase

def cmd_staircase(args):
    o = _Opts(args, dict(domain="box1d", eps_min=0.0, eps_max=500.0, n_eps=2001,
                         length=1.0, out="staircase.csv", plot=False))
    eps_lo = o.eps_min if o.domain == "box1d" else max(o.eps_min, 1e-9)
    grid = np.linspace(eps_lo, o.eps_max, o.n_eps)
    ev = semiclassics.remainder_scan(o.domain, grid, length=o.length)
    _write_csv(o.out, ["eps", "n_exact", "n_classical", "n_weyl2", "r_cl", "r_w2"],
               zip(ev.energies, ev.n_exact, ev.n_classical, ev.n_weyl2, ev.r_cl, ev.r_w2),
               meta=[f"dftlab staircase domain={o.domain}",
                     "energy grid is a uniform reconstruction; no canonical sampling exists"])
    print(f"max_abs_r_cl={_fmt(float(np.max(np.abs(ev.r_cl))))} "
          f"max_abs_r_w2={_fmt(float(np.max(np.abs(ev.r_w2))))}")
    if o.plot:
        from . import plots
        plots.staircase_figure(ev, _plot_path(o.out), title=o.domain)
    return EXIT_OK


# ----------------------------------------------------------- march-plaskett

def _build_potential(kind, length, m, k_harmonic):
    if kind == "zero":
        return semiclassics.box_potential(length, m)
    if kind == "harmonic":
        p0 = semiclassics.box_potential(length, m)
        return semiclassics.Potential1D(length, k_harmonic * (p0.x - 0.5 * length) ** 2)
    raise InvalidInputError(f"unknown potential {kind!r} (expected zero or harmonic)")


def cmd_march_plaskett(args):
    o = _Opts(args, dict(length=1.0, m=2001, potential="zero", k_harmonic=50.0,
                         n_electrons="5,10,20,40,80", out="march_plaskett.csv"))
    p = _build_potential(o.potential, o.length, o.m, o.k_harmonic)
    ns = [int(s) for s in str(o.n_electrons).split(",") if s.strip()]
    rows = []
    spectrum = None
    if o.potential != "zero":
        spectrum = semiclassics.exact_levels_1d(p, max(ns))
    for n in ns:
        res = semiclassics.march_plaskett_energy_1d(p, n)
        if o.potential == "zero":
            e_exact = math.pi**2 * n * (n + 1) * (2 * n + 1) / (12.0 * o.length**2)
        else:
            e_exact = float(np.sum(spectrum.eigenvalues[:n]))
        rel = (res.e_classical - e_exact) / e_exact
        rows.append((n, res.eps_f, res.e_classical, e_exact, rel))
    _write_csv(o.out, ["n_electrons", "eps_f", "e_classical", "e_exact", "rel_err"],
               rows, meta=[f"dftlab march-plaskett potential={o.potential}",
                           "one electron per level"])
    for row in rows:
        print(f"N={row[0]} eps_f={_fmt(row[1])} e_cl={_fmt(row[2])} rel_err={_fmt(row[4])}")
    return EXIT_OK


# ----------------------------------------------------------------- lo-check

def default_density_suite():
    """Analytic densities exercising every applicable bound constant."""
    suite = [
        lieb_oxford.hydrogenic_1s(zeta=1.0),
        lieb_oxford.hydrogenic_1s(zeta=0.5),
        lieb_oxford.hydrogenic_1s(zeta=2.0),
        lieb_oxford.hydrogenic_1s(zeta=1.0, n_electrons=2.0, polarized=False),
        lieb_oxford.hydrogenic_1s(zeta=27.0 / 16.0, n_electrons=2.0, polarized=False),
        lieb_oxford.exponential_density(alpha=1.0),
        lieb_oxford.exponential_density(alpha=3.0),
        lieb_oxford.gaussian_density(alpha=0.5),
        lieb_oxford.gaussian_density(alpha=2.0),
    ]
    return suite


def cmd_lo_check(args):
    o = _Opts(args, dict(out="lo_check.json", fail_on_violation=False))
    reports = [lieb_oxford.check_bounds(d) for d in default_density_suite()]
    payload = [r.to_json_dict() for r in reports]
    with open(o.out, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    n_fail = 0
    for r in reports:
        for c in r.checks:
            if not c.passed and not c.informational:
                n_fail += 1
                print(f"violation {r.family}{r.params} constant {c.name}={_fmt(c.constant)} "
                      f"ratio={_fmt(c.ratio)}")
    print(f"densities={len(reports)} violations={n_fail}")
    if o.fail_on_violation and n_fail:
        return EXIT_VIOLATION
    return EXIT_OK


# ------------------------------------------------------------------ tf-atom

def cmd_tf_atom(args):
    o = _Opts(args, dict(x_max=50.0, step=2.5e-4, z_list="1,10,100", out="tf_atom.csv",
                         plot=False))
    sol = tf_largez.solve_tf_atom(x_max=o.x_max, h=o.step)
    _write_csv(o.out, ["x", "phi"], zip(sol.x, sol.phi),
               meta=["dftlab tf-atom screening function",
                     f"initial_slope={_fmt(sol.initial_slope)}"])
    print(f"initial_slope={_fmt(sol.initial_slope)}")
    zs = [float(s) for s in str(o.z_list).split(",") if s.strip()]
    for row in tf_largez.verify_leading_exchange(sol, zs):
        print(f"Z={_fmt(row['Z'])} ex_lda_over_z53={_fmt(row['coefficient'])} "
              f"expected={_fmt(row['expected'] / row['Z'] ** (5.0 / 3.0))} pass={row['pass']}")
    if o.plot:
        from . import plots
        plots.screening_figure(sol, _plot_path(o.out))
    return EXIT_OK


# --------------------------------------------------------------- largez-fit

def cmd_largez_fit(args):
    o = _Opts(args, dict(data="", basis="ZlogZ,Z", closed_shell=False, z_min=0.0,
                         out="largez_fit.json", plot=False))
    if not o.data:
        raise InvalidInputError("largez-fit needs a data CSV (positional argument)")
    if not os.path.exists(o.data):
        raise InvalidInputError(f"data file not found: {o.data}")
    pairs = tf_largez.read_exchange_csv(o.data)
    basis = tuple(s.strip() for s in str(o.basis).split(",") if s.strip())
    fit = tf_largez.fit_asymptotics(
        pairs, basis=basis, closed_shell_only=o.closed_shell,
        z_min=o.z_min if o.z_min > 0.0 else None,
    )
    payload = {
        "basis": list(fit.basis),
        "coefficients": [float(c) for c in fit.coefficients],
        "residual": fit.residual,
        "n_points": int(fit.data.shape[0]),
        "filter_applied": fit.filter_applied,
        "reference_constants": tf_largez.bohr_coefficient(),
    }
    with open(o.out, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    for b, c in zip(fit.basis, fit.coefficients):
        print(f"coefficient[{b}]={_fmt(float(c))}")
    print(f"residual={_fmt(fit.residual)}")
    if "ZlogZ" in fit.basis:
        c_zlogz = float(fit.coefficients[list(fit.basis).index("ZlogZ")])
        print(f"abs_zlogz_vs_quarter_inv_pi2={_fmt(abs(c_zlogz) * 4.0 * math.pi**2)}")
    if o.plot:
        from . import plots
        plots.fit_figure(fit, _plot_path(o.out))
    return EXIT_OK


# -------------------------------------------------------------------- dcdft

def _dcdft_point(params):
    t, u, dv = params
    d = density_metrics.dc_decomposition(t, u, dv)
    return (t, u, dv, d.de_total, d.de_functional, d.de_density)


def cmd_dcdft(args):
    o = _Opts(args, dict(t=0.5, u_min=0.0, u_max=5.0, u_count=20,
                         dv_min=0.0, dv_max=5.0, dv_count=20,
                         out="dcdft.csv", threads=0))
    params = [(o.t, u, dv)
              for u in np.linspace(o.u_min, o.u_max, o.u_count)
              for dv in np.linspace(o.dv_min, o.dv_max, o.dv_count)]
    rows = _map_ordered(_dcdft_point, params, _threads(o))
    _write_csv(o.out, ["t", "u", "dv", "de_total", "de_functional", "de_density"],
               rows, meta=["dftlab dcdft exchange-only dimer functional",
                           "de_density reported raw (not per electron)"])
    worst = max(rows, key=lambda r: abs(r[3]))
    print(f"max_abs_de_total={_fmt(abs(worst[3]))} at u={_fmt(worst[1])} dv={_fmt(worst[2])}")
    return EXIT_OK


# ------------------------------------------------------------------- parser

def _add_common(sub, *names):
    sub.add_argument("--config", help="flat key = value config file; flags override")
    flags = {
        "t": ("--t", float, "hopping amplitude (energy units)"),
        "u": ("--u", float, "on-site repulsion (energy units)"),
        "dv": ("--dv", float, "on-site potential difference v2 - v1 (energy units)"),
        "n_lambda": ("--n-lambda", int, "number of coupling-strength grid points"),
        "out": ("--out", str, "output file path"),
        "plot": ("--plot", None, "also render a PNG figure next to the output"),
        "fail_on_violation": ("--fail-on-violation", None,
                              "exit with code 3 if a conjecture violation is found"),
        "threads": ("--threads", int,
                    "worker processes (default: DFTLAB_THREADS env or 1)"),
        "u_over_t_min": ("--u-over-t-min", float, "scan minimum of u/t (dimensionless)"),
        "u_over_t_max": ("--u-over-t-max", float, "scan maximum of u/t (dimensionless)"),
        "u_over_t_count": ("--u-over-t-count", int, "scan points along u/t"),
        "dv_over_t_min": ("--dv-over-t-min", float, "scan minimum of dv/t (dimensionless)"),
        "dv_over_t_max": ("--dv-over-t-max", float, "scan maximum of dv/t (dimensionless)"),
        "dv_over_t_count": ("--dv-over-t-count", int, "scan points along dv/t"),
        "u_min": ("--u-min", float, "scan minimum of u (energy units)"),
        "u_max": ("--u-max", float, "scan maximum of u (energy units)"),
        "u_count": ("--u-count", int, "scan points along u"),
        "dv_min": ("--dv-min", float, "scan minimum of dv (energy units)"),
        "dv_max": ("--dv-max", float, "scan maximum of dv (energy units)"),
        "dv_count": ("--dv-count", int, "scan points along dv"),
        "domain": ("--domain", str, "box1d or square2d"),
        "eps_min": ("--eps-min", float, "energy grid minimum (energy units)"),
        "eps_max": ("--eps-max", float, "energy grid maximum (energy units)"),
        "n_eps": ("--n-eps", int, "energy grid points"),
        "length": ("--length", float, "box length (length units)"),
        "m": ("--m", int, "interior grid points of the 1D potential"),
        "potential": ("--potential", str, "zero or harmonic"),
        "k_harmonic": ("--k-harmonic", float,
                       "harmonic strength k in v = k (x - L/2)^2 (energy/length^2)"),
        "n_electrons": ("--n-electrons", str, "comma-separated electron counts"),
        "x_max": ("--x-max", float, "outer boundary of the TF radial variable (dimensionless)"),
        "step": ("--step", float, "integrator step in s = sqrt(x) (dimensionless)"),
        "z_list": ("--z-list", str, "comma-separated nuclear charges"),
        "basis": ("--basis", str, "comma-separated basis terms, e.g. ZlogZ,Z"),
        "closed_shell": ("--closed-shell", None, "keep only closed-shell Z"),
        "z_min": ("--z-min", float, "drop data with Z <= z_min"),
    }
    for name in names:
        flag, typ, helptext = flags[name]
        if typ is None:
            sub.add_argument(flag, action="store_true", default=None, help=helptext)
        else:
            sub.add_argument(flag, type=typ, default=None, help=helptext)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dftlab",
        description="Exact-condition numerical laboratory: dimer adiabatic "
                    "connection, spectral staircases, Lieb-Oxford bounds, "
                    "Thomas-Fermi large-Z asymptotics, density-corrected errors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dimer-ac", help="adiabatic connection curve and energy decomposition")
    _add_common(s, "t", "u", "dv", "n_lambda", "out", "plot", "fail_on_violation")
    s.set_defaults(func=cmd_dimer_ac)

    s = sub.add_parser("dimer-scan", help="conjecture scan over (u/t, dv/t)")
    _add_common(s, "t", "u_over_t_min", "u_over_t_max", "u_over_t_count",
                "dv_over_t_min", "dv_over_t_max", "dv_over_t_count",
                "n_lambda", "out", "plot", "fail_on_violation", "threads")
    s.set_defaults(func=cmd_dimer_scan)

    s = sub.add_parser("hf-kinetic", help="sign scan of the HF kinetic correlation energy")
    _add_common(s, "t", "u_over_t_min", "u_over_t_max", "u_over_t_count",
                "dv_over_t_min", "dv_over_t_max", "dv_over_t_count",
                "out", "fail_on_violation", "threads")
    s.set_defaults(func=cmd_hf_kinetic)

    s = sub.add_parser("staircase", help="exact/classical/Weyl counting functions")
    _add_common(s, "domain", "eps_min", "eps_max", "n_eps", "length", "out", "plot")
    s.set_defaults(func=cmd_staircase)

    s = sub.add_parser("march-plaskett", help="semiclassical Fermi energy and total energy")
    _add_common(s, "length", "m", "potential", "k_harmonic", "n_electrons", "out")
    s.set_defaults(func=cmd_march_plaskett)

    s = sub.add_parser("lo-check", help="Lieb-Oxford bound reports for the density suite")
    _add_common(s, "out", "fail_on_violation")
    s.set_defaults(func=cmd_lo_check)

    s = sub.add_parser("tf-atom", help="Thomas-Fermi screening solve and exchange check")
    _add_common(s, "x_max", "step", "z_list", "out", "plot")
    s.set_defaults(func=cmd_tf_atom)

    s = sub.add_parser("largez-fit", help="asymptotic-series fit of ingested exchange data")
    s.add_argument("data", nargs="?", default=None, help="CSV with header Z,e_x,e_x_lda")
    _add_common(s, "basis", "closed_shell", "z_min", "out", "plot")
    s.set_defaults(func=cmd_largez_fit)

    s = sub.add_parser("dcdft", help="density-corrected error decomposition scan")
    _add_common(s, "t", "u_min", "u_max", "u_count", "dv_min", "dv_max", "dv_count",
                "out", "threads")
    s.set_defaults(func=cmd_dcdft)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except (InvalidInputError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SolverError, DftLabError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
