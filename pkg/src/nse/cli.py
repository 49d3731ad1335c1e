"""Command-line front end: model introspection, figure-style curve emission,
verification suites, and evolution/collision runs.

All data files are deterministic for identical flags: full double precision,
no timestamps.  Exit codes: 0 pass, 1 verification failure, 2 usage error,
3 numerical abort.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import construct, evolve, models, verify
from .errors import DomainError, NumericalAbort
from .numerics import SpectralGrid

_F = "{:.17g}".format  # full double precision, reproducible

_DESCRIPTIONS = {
    "gausson": "harmonic trap in N dimensions; Gaussian soliton, log nonlinearity",
    "trapped-gausson": "harmonic trap split into external part + log nonlinearity (N=3)",
    "cosh1d": "1/cosh^2 well; bright soliton of the cubic nonlinearity",
    "coshNd": "1/cosh profile in N dimensions; zeta-normalized for N>2",
    "power-law": "deepened 1/cosh^2 well; pure |psi|^(2*lambda) nonlinearity",
    "tan2": "tan^2 well in a hard-wall box; power -2/beta nonlinearity",
    "softened-delta": "regularized point well; delta-function limit as b0 -> 0",
    "coulomb": "attractive 1/r potential (N=3); inverse-log nonlinearity",
}

_EVOLVABLE = {"cosh1d", "power-law", "softened-delta", "gausson", "tan2"}


def _add_model_flags(p: argparse.ArgumentParser, require_model=True):
    p.add_argument("--model", required=require_model, choices=sorted(models.FAMILIES))
    p.add_argument("--omega", type=float)
    p.add_argument("--omega1", type=float)
    p.add_argument("--omega2", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--L", type=float)
    p.add_argument("--b0", type=float)
    p.add_argument("--aB", type=float)
    p.add_argument("--N", type=int)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--mass", type=float, default=1.0)


_FLAG_KEYS = ("omega", "omega1", "omega2", "a", "beta", "L", "b0", "aB", "N")

_DEFAULT_PARAMS = {
    "gausson": {"omega": 1.0, "N": 3},
    "trapped-gausson": {"omega1": 2 ** -0.5, "omega2": 2 ** -0.5},
    "cosh1d": {"a": 1.0},
    "coshNd": {"a": 1.0, "N": 3},
    "power-law": {"a": 1.0, "lambda": 1.0},
    "tan2": {"L": 1.0, "beta": 2.0},
    "softened-delta": {"a": 1.0, "b0": 1.0},
    "coulomb": {"aB": 1.0},
}


def _spec_from_args(args, parser) -> models.ModelSpec:
    name = args.model
    params = dict(_DEFAULT_PARAMS[name])
    for key in _FLAG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if getattr(args, "lam", None) is not None:
        params["lambda"] = args.lam
    allowed = set(models.PARAM_KEYS[name])
    extra = {k for k in params if k not in allowed and k not in ("hbar", "mass")}
    unknown = extra - set(_DEFAULT_PARAMS[name])
    if unknown:
        parser.error(f"parameters {sorted(unknown)} do not apply to model {name!r}")
    params = {k: v for k, v in params.items() if k in allowed}
    try:
        return models.from_params(name, hbar=args.hbar, mass=args.mass, **params)
    except DomainError as exc:
        parser.error(str(exc))


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _csv(rows, header) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_F(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_list(args) -> int:
    rows = []
    for name in sorted(models.FAMILIES):
        keys = ", ".join(models.PARAM_KEYS[name])
        rows.append((name, keys, _DESCRIPTIONS[name]))
    width_name = max(len(r[0]) for r in rows)
    width_keys = max(len(r[1]) for r in rows)
    print(f"{'model':<{width_name}}  {'parameters':<{width_keys}}  description")
    for name, keys, desc in rows:
        print(f"{name:<{width_name}}  {keys:<{width_keys}}  {desc}")
    return 0


def cmd_curve(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    gs = spec.ground_state()
    nl = spec.nonlinearity() if args.what == "nonlinearity" else None

    if args.what in ("potential", "profile"):
        rmax = args.rmax
        if isinstance(spec, models.TanSquared):
            rmax = min(rmax, 0.5 * math.pi * (1.0 - 1e-9))
        scaled = np.linspace(rmax / args.points, rmax, args.points)
        r = scaled * gs.length_scale
        if args.what == "potential":
            vals = models.potential(spec, r) / abs(gs.energy)
            text = _csv(zip(scaled, vals), ["r_over_length_scale", "U_over_abs_E0"])
        else:
            vals = gs.profile(r)
            text = _csv(zip(scaled, vals), ["r_over_length_scale", "phi0"])
    else:
        phi = np.linspace(args.phi_min, args.phi_max, args.points)
        with np.errstate(divide="ignore"):
            vals = nl.shape_raw(phi)
        text = _csv(zip(phi, vals), ["phi", "G"])

    _write_text(args.out, text)
    return 0


# ------------------------------ verify ------------------------------------

def _case(case, family, params, measured, expected, rel_dev, passed, grid_meta=None, notes=""):
    return {
        "case": case,
        "family": family,
        "params": params,
        "measured": measured,
        "expected": expected,
        "rel_dev": rel_dev,
        "grid_meta": grid_meta,
        "pass": bool(passed),
        "notes": notes,
    }


def _suite_residual(model_filter=None):
    cases = []
    for entry in verify.documented_residual_cases():
        spec = entry["spec"]
        if model_filter and spec.name != model_filter:
            continue
        rep = verify.residual_stationary(spec, entry["window"], entry["n_points"])
        cases.append(_case(
            f"residual-stationary-{entry['label']}", spec.name, rep.params,
            rep.l2_rel, entry["bound"], rep.l2_rel / entry["bound"],
            rep.l2_rel < entry["bound"], rep.grid.to_dict(),
            notes="measured/bound ratio in rel_dev; max_rel=%s" % _F(rep.max_rel),
        ))
    for entry in verify.documented_boosted_cases():
        spec = entry["spec"]
        if model_filter and spec.name != model_filter:
            continue
        rep = verify.residual_boosted(
            spec, entry["v"], entry["t"], entry["window"], entry["n_points"]
        )
        cases.append(_case(
            f"residual-boosted-{entry['label']}", spec.name, rep.params,
            rep.l2_rel, entry["bound"], rep.l2_rel / entry["bound"],
            rep.l2_rel < entry["bound"], rep.grid.to_dict(),
            notes="measured/bound ratio in rel_dev",
        ))
    return cases


def _default_specs():
    return [
        models.Gausson(omega=1.0, N=1),
        models.Gausson(omega=1.0, N=2),
        models.Gausson(omega=1.0, N=3),
        models.TrappedGausson(omega1=2 ** -0.5, omega2=2 ** -0.5),
        models.Cosh1D(a=1.0),
        models.CoshND(a=1.0, N=2),
        models.CoshND(a=1.0, N=3),
        models.PowerLaw(a=1.0, lam=0.5),
        models.PowerLaw(a=1.0, lam=1.0),
        models.PowerLaw(a=1.0, lam=2.0),
        models.TanSquared(L=1.0, beta=2.0),
        models.SoftenedDelta(a=1.0, b0=1.0),
        models.Coulomb(aB=1.0),
    ]


def _suite_invert(model_filter=None):
    cases = []
    for spec in _default_specs():
        if model_filter and spec.name != model_filter:
            continue
        dev = construct.verify_method(spec)
        label = f"{spec.name}-{spec.dim}d"
        cases.append(_case(
            f"invert-{label}", spec.name,
            {k: v for k, v in vars(spec).items() if k != "const"},
            dev, 1e-6, dev / 1e-6, dev < 1e-6,
            notes="max relative deviation of synthesized G over the phi window",
        ))
    return cases


def _suite_norm(model_filter=None):
    cases = []
    for spec in _default_specs():
        if model_filter and spec.name != model_filter:
            continue
        if isinstance(spec, models.SoftenedDelta):
            continue  # no closed form; its c0 is itself the quadrature value
        analytic = spec.ground_state().norm_const
        numeric = models.norm_constant_numeric(spec)
        dev = abs(numeric - analytic) / analytic
        cases.append(_case(
            f"norm-{spec.name}-{spec.dim}d", spec.name,
            {k: v for k, v in vars(spec).items() if k != "const"},
            numeric, analytic, dev, dev < 1e-8,
        ))
    return cases


def _suite_uncertainty(lam):
    spec = models.PowerLaw(a=1.0, lam=lam)
    rep = verify.uncertainty(spec)
    asym_dx = math.sqrt(lam / 2.0)
    asym_dp = 1.0 / math.sqrt(2.0 * lam)
    cases = [
        _case("uncertainty-product", "power-law", {"lambda": lam},
              rep.product_over_hbar, 0.5, rep.product_over_hbar - 0.5,
              rep.product_over_hbar > 0.5,
              notes="pass iff dx*dp/hbar exceeds 1/2; rel_dev holds the margin"),
        _case("uncertainty-dx-asymptotic", "power-law", {"lambda": lam},
              rep.delta_x, asym_dx, abs(rep.delta_x - asym_dx) / asym_dx,
              abs(rep.delta_x - asym_dx) / asym_dx < 0.02,
              notes="leading-order a*sqrt(lambda/2); 2% band"),
        _case("uncertainty-dp-asymptotic", "power-law", {"lambda": lam},
              rep.delta_p, asym_dp, abs(rep.delta_p - asym_dp) / asym_dp,
              abs(rep.delta_p - asym_dp) / asym_dp < 0.02,
              notes="leading-order hbar/(a*sqrt(2*lambda)); 2% band"),
        _case("uncertainty-kinetic-ratio", "power-law", {"lambda": lam},
              rep.kinetic_ratio, 0.5 * lam,
              abs(rep.kinetic_ratio - 0.5 * lam) / (0.5 * lam),
              abs(rep.kinetic_ratio - 0.5 * lam) / (0.5 * lam) < 0.05,
              notes="leading-order lambda/2; 5% band"),
    ]
    rep1 = verify.uncertainty(models.PowerLaw(a=1.0, lam=1.0))
    dev1 = abs(rep1.product_over_hbar - math.pi / 6.0) / (math.pi / 6.0)
    cases.append(_case(
        "uncertainty-product-lambda-1", "power-law", {"lambda": 1.0},
        rep1.product_over_hbar, math.pi / 6.0, dev1, dev1 < 1e-6,
        notes="closed moments: dx*dp = hbar*pi/6 at lambda = 1",
    ))
    return cases


def _suite_limits(case_filter=None, a=1.0, b0=1.0):
    blocks = {
        "softened-delta": lambda: [
            verify.limit_softened_delta_potential_integral(a, b0),
            verify.limit_softened_delta_G_integral(a, b0),
        ],
        "delta-cusp": lambda: verify.limit_delta_cusp(a),
        "tan2": lambda: verify.limit_tan2(),
        "trapped-gausson": lambda: verify.limit_trapped_gausson(1.0, (0.1, 0.5, 0.9)),
        "localization": lambda: verify.localization_scan(1.0, (1.0, 0.1, 0.01)),
    }
    cases = []
    for key, fn in blocks.items():
        if case_filter and key != case_filter:
            continue
        for rep in fn():
            cases.append(_case(
                rep.case, key, {"a": a, "b0": b0} if "softened" in key else {},
                rep.measured, rep.expected, rep.rel_dev, rep.passed, notes=rep.notes,
            ))
    return cases


def cmd_verify(args, parser) -> int:
    lam = args.lam if args.lam is not None else 0.01
    runners = {
        "residual": lambda: _suite_residual(args.model),
        "invert": lambda: _suite_invert(args.model),
        "norm": lambda: _suite_norm(args.model),
        "uncertainty": lambda: _suite_uncertainty(lam),
        "limits": lambda: _suite_limits(args.case, args.a or 1.0,
                                        args.b0 if args.b0 is not None else 1.0),
    }
    if args.suite == "all":
        workers = int(os.environ.get("NSE_THREADS", os.cpu_count() or 1))
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            futures = [pool.submit(fn) for fn in runners.values()]
            cases = [c for fut in futures for c in fut.result()]
    else:
        cases = runners[args.suite]()

    payload = {"suite": args.suite, "cases": cases,
               "passed": sum(c["pass"] for c in cases), "total": len(cases)}
    _write_text(args.out, _json_text(payload))
    failures = [c["case"] for c in cases if not c["pass"]]
    if failures:
        print(f"FAILED cases: {', '.join(failures)}", file=sys.stderr)
        return 1
    return 0


# ------------------------------ evolution ----------------------------------

def _parse_span(text, parser):
    try:
        lo, hi = (float(tok) for tok in text.split(":"))
    except ValueError:
        parser.error(f"--xspan expects 'lo:hi', got {text!r}")
    if hi <= lo:
        parser.error("--xspan requires lo < hi")
    return lo, hi


def _snapshot_csv(snapshots):
    rows = []
    for fld in snapshots:
        x = fld.grid.x
        re, im = fld.samples.real, fld.samples.imag
        a2 = np.abs(fld.samples) ** 2
        for j in range(len(x)):
            rows.append((fld.time, x[j], re[j], im[j], a2[j]))
    return _csv(rows, ["t", "x", "re", "im", "abs2"])


def cmd_evolve(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    if spec.name not in _EVOLVABLE or spec.dim != 1:
        parser.error(f"model {spec.name!r} (N={spec.dim}) is not a 1D evolution family")
    if isinstance(spec, models.SoftenedDelta) and spec.b0 == 0.0:
        parser.error("softened-delta evolution needs b0 > 0")
    steps = int(round(args.time / args.dt))
    record_every = args.record_every or max(1, steps // 20)
    if isinstance(spec, models.TanSquared):
        # wall-bounded: Crank-Nicolson on the box, rest frame only
        if args.velocity != 0.0:
            parser.error("tan2 is wall-bounded; only --velocity 0 is meaningful")
        grid = evolve.BoxGrid(args.grid + 1, spec.half_width)
        cfg = evolve.EvolutionConfig(dt=args.dt, steps=steps,
                                     method=evolve.CRANK_NICOLSON,
                                     record_every=record_every)
    else:
        lo, hi = _parse_span(args.xspan, parser)
        try:
            grid = SpectralGrid(args.grid, lo, hi)
        except Exception as exc:
            parser.error(str(exc))
        cfg = evolve.EvolutionConfig(dt=args.dt, steps=steps,
                                     record_every=record_every)
    initial = evolve.boost(spec, grid, v=args.velocity)

    try:
        final, diag = evolve.evolve(
            spec, initial, cfg, reference_velocity=args.velocity, keep_snapshots=True
        )
    except NumericalAbort as exc:
        diag = exc.diagnostics
        rows = zip(diag.get("t", []), diag.get("mass", []), diag.get("peak_x", []),
                   diag.get("l2_err", [math.nan] * len(diag.get("t", []))))
        _write_text(args.diagnostics, _csv(rows, ["t", "mass", "peak_x", "l2_err_vs_reference"]))
        print(f"numerical abort: {exc}; last good diagnostics at {args.diagnostics}",
              file=sys.stderr)
        return 3

    _write_text(args.snapshots, _snapshot_csv(diag.pop("snapshots")))
    rows = zip(diag["t"], diag["mass"], diag["peak_x"], diag["l2_err"])
    _write_text(args.diagnostics, _csv(rows, ["t", "mass", "peak_x", "l2_err_vs_reference"]))

    slope = float(np.polyfit(diag["t"], diag["peak_x"], 1)[0]) if len(diag["t"]) > 1 else math.nan
    summary = {
        "model": spec.name,
        "params": {k: v for k, v in vars(spec).items() if k != "const"},
        "velocity": args.velocity,
        "time": args.time,
        "dt": args.dt,
        "grid": {"n": grid.n, "x_min": float(grid.x[0]), "x_max": float(grid.x[-1])},
        "final_l2_err_vs_reference": diag["l2_err"][-1],
        "mass_drift": abs(diag["mass"][-1] - diag["mass"][0]) / diag["mass"][0],
        "peak_velocity_fit": slope,
    }
    _write_text(args.summary, _json_text(summary))
    return 0


def cmd_collide(args, parser) -> int:
    spec = _spec_from_args(args, parser)
    if not isinstance(spec, models.Cosh1D):
        parser.error("collision experiments use --model cosh1d")
    steps = int(round(args.time / args.dt))
    cfg = evolve.EvolutionConfig(dt=args.dt, steps=steps,
                                 record_every=max(1, steps // 50))
    grid = None
    if args.grid and args.xspan:
        lo, hi = _parse_span(args.xspan, parser)
        grid = SpectralGrid(args.grid, lo, hi)
    try:
        rep = evolve.collide(spec, args.v1, args.v2, args.sep, cfg, grid=grid)
    except DomainError as exc:
        parser.error(str(exc))
    except NumericalAbort as exc:
        print(f"numerical abort: {exc}", file=sys.stderr)
        return 3

    rows = [(t, p1, p2) for t, (p1, p2) in zip(rep.times, rep.peak_positions)]
    _write_text(args.trajectories, _csv(rows, ["t", "peak1_x", "peak2_x"]))
    summary = {
        "model": spec.name,
        "params": {k: v for k, v in vars(spec).items() if k != "const"},
        "v1": args.v1, "v2": args.v2, "separation": args.sep,
        "time": args.time, "dt": args.dt,
        "correlation_min": rep.correlation,
        "correlations": list(rep.correlations),
        "mass_drift": rep.mass_drift,
        "inconclusive": rep.inconclusive,
        "notes": rep.notes,
    }
    _write_text(args.summary, _json_text(summary))
    return 0 if not rep.inconclusive else 1


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nse",
        description="Exactly solvable nonlinear Schrodinger equations: "
        "catalog, verification, and soliton dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="show the model catalog")

    p_curve = sub.add_parser("curve", help="emit figure-style curves as CSV")
    _add_model_flags(p_curve)
    p_curve.add_argument("--what", required=True,
                         choices=["potential", "profile", "nonlinearity"])
    p_curve.add_argument("--rmax", type=float, default=4.0,
                         help="abscissa limit in units of the length scale")
    p_curve.add_argument("--phi-min", dest="phi_min", type=float, default=1e-3)
    p_curve.add_argument("--phi-max", dest="phi_max", type=float, default=1.0)
    p_curve.add_argument("--points", type=int, default=200)
    p_curve.add_argument("-o", "--out", default="-")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite",
                          choices=["residual", "invert", "norm", "uncertainty",
                                   "limits", "all"])
    _add_model_flags(p_verify, require_model=False)
    p_verify.add_argument("--case", choices=["softened-delta", "delta-cusp", "tan2",
                                             "trapped-gausson", "localization"])
    p_verify.add_argument("-o", "--out", default="-")

    p_evolve = sub.add_parser("evolve", help="propagate a boosted soliton")
    _add_model_flags(p_evolve)
    p_evolve.add_argument("--velocity", type=float, default=0.0)
    p_evolve.add_argument("--time", type=float, required=True)
    p_evolve.add_argument("--dt", type=float, default=1e-3)
    p_evolve.add_argument("--grid", type=int, default=4096)
    p_evolve.add_argument("--xspan", default="-40:40")
    p_evolve.add_argument("--record-every", dest="record_every", type=int)
    p_evolve.add_argument("--snapshots", default="nse_evolve_snapshots.csv")
    p_evolve.add_argument("--diagnostics", default="nse_evolve_diagnostics.csv")
    p_evolve.add_argument("--summary", default="nse_evolve_summary.json")

    p_collide = sub.add_parser("collide", help="two-soliton scattering run")
    _add_model_flags(p_collide)
    p_collide.add_argument("--v1", type=float, required=True)
    p_collide.add_argument("--v2", type=float, required=True)
    p_collide.add_argument("--sep", type=float, required=True)
    p_collide.add_argument("--time", type=float, default=0.0,
                           help="total run time; default 1.4*sep/|v1-v2|")
    p_collide.add_argument("--dt", type=float, default=1e-3)
    p_collide.add_argument("--grid", type=int)
    p_collide.add_argument("--xspan")
    p_collide.add_argument("--trajectories", default="nse_collide_trajectories.csv")
    p_collide.add_argument("--summary", default="nse_collide_summary.json")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # join '--xspan -40:40' into one token; argparse would read the value as a flag
    i = 0
    while i < len(argv) - 1:
        if argv[i] == "--xspan" and argv[i + 1].startswith("-"):
            argv[i:i + 2] = [f"--xspan={argv[i + 1]}"]
        i += 1
    args = parser.parse_args(argv)
    if args.command == "list":
        return cmd_list(args)
    if args.command == "curve":
        return cmd_curve(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "evolve":
        return cmd_evolve(args, parser)
    if args.command == "collide":
        if args.time <= 0.0:
            args.time = 1.4 * args.sep / abs(args.v1 - args.v2) if args.v1 != args.v2 else 1.0
        return cmd_collide(args, parser)
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
