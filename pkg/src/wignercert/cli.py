"""
Command-line interface.

    wignercert certify   --state example_final1 --out bundle.json
    wignercert sweep     --param disc_radius --start 1 --stop 2 --num 21 --out disc.csv
    wignercert transform --state hermite --which wigner --out w0.wcf
    wignercert selftest

Exit codes: 0 every requested certificate passes, 1 some certificate fails,
2 indeterminate, 3 error.
"""

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .certifiers import CERTIFICATE_NAMES, DEFAULT_TOLERANCES, Analysis, certify_refined_rsup, certify_rsup, run_ladder
from .errors import WignerCertError
from .fieldio import read_object, write_field
from .grid import PhaseSpaceGrid, WaveFunction, dilate
from .moments import density_from_square
from .report import dumps, exit_code, format_float, status_of
from .selftest import format_table, run_selftest
from .states import StateSpec, hermite_basis, make_disc_indicator
from .transforms import hbar_ft, symplectic_ft, wigner_of_mixture, wigner_transform

PURE_KINDS = ("hermite", "gaussian_pure")
SWEEP_PARAMS = ("disc_radius", "mixture_weight", "dilation_mu")


class ConfigError(WignerCertError, ValueError):
    """Invalid command-line configuration."""


def _parse_tolerances(items) -> dict:
    out = {}
    for item in items or ():
        if "=" in item:
            key, val = item.split("=", 1)
            if key not in DEFAULT_TOLERANCES:
                raise ConfigError(f"unknown tolerance {key!r}; choose from {sorted(DEFAULT_TOLERANCES)}")
            out[key] = float(val)
        else:
            out["eig"] = float(item)
    return out


def _resolve_grid(args, n: int) -> PhaseSpaceGrid:
    return PhaseSpaceGrid.default(n, args.grid_points, args.hbar, args.half_extent)


def _resolve_config(args, extra: dict | None = None) -> dict:
    cfg = {
        "command": args.command,
        "state": None if getattr(args, "input", None) else getattr(args, "state", None),
        "input": getattr(args, "input", None),
        "grid_points": args.grid_points,
        "half_extent": args.half_extent,
        "hbar": args.hbar,
        "tolerances": {**DEFAULT_TOLERANCES, **_parse_tolerances(args.tol)},
    }
    cfg.update(extra or {})
    return cfg


def _library() -> dict:
    return {"name": "wignercert", "version": __version__}


def _load_input(args):
    """Return (object, spec-or-None): a Field or WaveFunction to process."""
    if getattr(args, "input", None):
        return read_object(args.input), None
    spec = StateSpec.parse(args.state, args.hbar)
    if spec.kind == "custom_file":
        return read_object(spec.params["path"]), spec
    grid = _resolve_grid(args, spec.dim_n)
    if spec.is_wave_function:
        return spec.wave_function(grid.x_axes), spec
    return spec.build(grid), spec


def _write_text(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# ----------------------------------------------------------------------------
# certify


def cmd_certify(args) -> int:
    obj, spec = _load_input(args)
    pure = isinstance(obj, WaveFunction) or (spec is not None and spec.kind in PURE_KINDS)
    F = wigner_transform(obj) if isinstance(obj, WaveFunction) else obj
    if args.certs:
        names = [c.strip() for c in args.certs.split(",") if c.strip()]
        bad = [c for c in names if c not in CERTIFICATE_NAMES]
        if bad:
            raise ConfigError(f"unknown certificates {bad}; choose from {list(CERTIFICATE_NAMES)}")
    else:
        names = [c for c in CERTIFICATE_NAMES if pure or c != "lieb_pure_chain"]
        if not F.grid.is_wigner_grid:
            names.remove("positivity_probe")
    tolerances = _parse_tolerances(args.tol)
    certs, A, errors = run_ladder(F, names, pure=pure, tolerances=tolerances, probe_k=args.probe_k)
    status = status_of([c.verdict for c in certs], errors)

    warnings = list(A.field_warnings)
    for c in certs:
        warnings += [w for w in c.warnings if w not in warnings]
    bundle = {
        "library": _library(),
        "status": status,
        "config": _resolve_config(args, {"state_spec": spec.to_dict() if spec else None,
                                         "certificates": names, "probe_k": args.probe_k}),
        "grid": F.grid.to_dict(),
        "reciprocity": F.grid.reciprocity_summary(),
        "inputs_digest": A.digest,
        "moments": A.report.to_dict(),
        "entropies": {k: v.to_dict() for k, v in A.entropies.items()},
        "refined_rsup": A.refined.to_dict(),
        "certificates": [c.to_dict() for c in certs],
        "warnings": warnings,
        "errors": errors,
    }
    if args.format == "csv":
        text = _certificates_csv(certs)
    else:
        text = dumps(bundle)
    _write_text(args.out, text)
    if args.out not in (None, "-"):
        for c in certs:
            print(f"{c.name:<26} {c.verdict}")
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        print(f"status: {status}")
    return exit_code(status)


def _certificates_csv(certs) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["certificate", "verdict", "margin", "value", "tolerance"])
    for c in certs:
        for k, v in c.margins.items():
            w.writerow([c.name, c.verdict, k, format_float(v), format_float(c.tolerance)])
        if not c.margins:
            w.writerow([c.name, c.verdict, "", "", format_float(c.tolerance)])
    return buf.getvalue()


# ----------------------------------------------------------------------------
# sweep


def _sweep_row(param: str, value: float, args, grid: PhaseSpaceGrid) -> dict:
    hbar = args.hbar
    row = {param: value}
    if param == "disc_radius":
        F = make_disc_indicator(value * math.sqrt(hbar), grid)
    elif param == "mixture_weight":
        hs = hermite_basis(2, grid.x_axes[0], hbar)
        F = wigner_of_mixture([value, 1.0 - value], hs)
        row["purity_closed_form"] = value ** 2 + (1 - value) ** 2
    else:
        base = StateSpec.parse(args.state, hbar) if args.state else StateSpec("disc_indicator", {"R": math.sqrt(hbar)}, hbar)
        F = dilate(base.build(grid), value)
    A = Analysis(F)
    row["purity"] = A.purity
    cov = A.cov
    for i in range(cov.shape[0]):
        for j in range(i, cov.shape[1]):
            row[f"cov_{i}{j}"] = cov[i, j]
    rsup = certify_rsup(A.report, hbar, digest=A.digest)
    row["rsup_verdict"] = rsup.verdict
    for k, v in rsup.margins.items():
        row[f"rsup_{k}"] = v
    if param != "disc_radius":
        _, c2, c1 = certify_refined_rsup(A)
        row["refined_ineq2_verdict"], row["refined_ineq1_verdict"] = c2.verdict, c1.verdict
        row["refined_middle_min_eig"] = c2.margins["middle_min_eig"]
        row["refined_gap_min_eig"] = c1.margins["gap_min_eig"]
    return row


def cmd_sweep(args) -> int:
    if args.param not in SWEEP_PARAMS:
        raise ConfigError(f"unknown sweep parameter {args.param!r}")
    if args.num < 1 or not (math.isfinite(args.start) and math.isfinite(args.stop)):
        raise ConfigError("invalid sweep bounds")
    if args.param == "mixture_weight" and not (0 <= min(args.start, args.stop) and max(args.start, args.stop) <= 1):
        raise ConfigError("mixture weight must lie in [0, 1]")
    if args.param in ("disc_radius", "dilation_mu") and min(args.start, args.stop) <= 0:
        raise ConfigError(f"{args.param} must be positive")
    grid = _resolve_grid(args, 1)
    rows = [_sweep_row(args.param, float(v), args, grid) for v in np.linspace(args.start, args.stop, args.num)]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = list(rows[0])
    w.writerow(cols)
    for r in rows:
        w.writerow([format_float(r[c]) if isinstance(r[c], (float, np.floating)) else r[c] for c in cols])
    _write_text(args.out, buf.getvalue())
    return 0


# ----------------------------------------------------------------------------
# transform


def cmd_transform(args) -> int:
    obj, _ = _load_input(args)
    which = args.which
    if which == "wigner":
        if not isinstance(obj, WaveFunction):
            raise ConfigError("the Wigner transform needs a wave function input")
        out = wigner_transform(obj)
    elif which == "hft":
        out = hbar_ft(obj)
    elif isinstance(obj, WaveFunction):
        raise ConfigError(f"{which} needs a phase-space field input")
    elif which == "sft":
        out = symplectic_ft(obj)
    else:
        out = density_from_square(obj, "direct")
    if args.out in (None, "-"):
        raise ConfigError("transform needs --out")
    fmt = {"csv": "csv", "binary": "binary", "json": None, None: None}[args.format]
    write_field(args.out, out, fmt)
    print(f"wrote {args.out}")
    return 0


# ----------------------------------------------------------------------------
# selftest


def cmd_selftest(args) -> int:
    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    results = run_selftest(numbers, hbar=args.hbar)
    text = format_table(results) + "\n"
    sys.stdout.write(text)
    if args.out not in (None, "-"):
        payload = {"library": _library(), "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed,
             "checks": [{"label": c.label, "passed": c.passed} for c in r.checks]} for r in results]}
        Path(args.out).write_text(dumps(payload))
    return 0 if all(r.passed for r in results) else 1


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid-points", type=int, default=None, help="points per axis (power of two)")
    common.add_argument("--half-extent", type=float, default=None, help="x-axis half extent L of [-L, L)")
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--tol", action="append", default=[],
                        help="eigen-margin tolerance, or KEY=VALUE for one of " + ", ".join(DEFAULT_TOLERANCES))
    common.add_argument("--out", default=None, help="output path ('-' or omitted: stdout)")
    common.add_argument("--format", choices=("json", "csv", "binary"), default=None)

    p = argparse.ArgumentParser(prog="wignercert", description="Certify phase-space functions against uncertainty principles.")
    p.add_argument("--version", action="version", version=f"wignercert {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", parents=[common], help="run the certificate ladder on one state")
    c.add_argument("--state", default="example_final1", help="state kind, inline JSON StateSpec, or file path")
    c.add_argument("--input", default=None, help="field or wave-function file (overrides --state)")
    c.add_argument("--certs", default=None, help="comma-separated certificate names")
    c.add_argument("--probe-k", type=int, default=8, help="Hermite basis size of the positivity probe")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("sweep", parents=[common], help="tabulate margins over one scalar parameter")
    s.add_argument("--param", required=True, choices=SWEEP_PARAMS)
    s.add_argument("--start", type=float, required=True)
    s.add_argument("--stop", type=float, required=True)
    s.add_argument("--num", type=int, default=11)
    s.add_argument("--state", default=None, help="base state for dilation_mu (default: disc of radius sqrt(hbar))")
    s.set_defaults(func=cmd_sweep)

    t = sub.add_parser("transform", parents=[common], help="apply a transform and write the result")
    t.add_argument("--which", required=True, choices=("wigner", "sft", "hft", "density"))
    t.add_argument("--state", default="hermite")
    t.add_argument("--input", default=None)
    t.set_defaults(func=cmd_transform)

    st = sub.add_parser("selftest", parents=[common], help="run the acceptance corpus")
    st.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format == "binary" and args.command == "certify":
            raise ConfigError("certify writes json or csv")
        return args.func(args)
    except (WignerCertError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"wignercert: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
