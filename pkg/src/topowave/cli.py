"""Command-line driver.

Each subcommand turns its flags into a parameter dict, computes one or more
tables, and writes them as CSV (plus ``manifest.json``) into ``--out``, or to
stdout when ``--out`` is omitted. ``replay`` re-runs a manifest.

Exit codes: 0 success, 1 a checked property failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import sys
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from . import clifford, dirac, ensemble, lightcone, maxwell

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Table = tuple[list[str], list[list]]


class UsageError(Exception):
    pass


def fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def render_csv(table: Table) -> str:
    header, rows = table
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _floats(text: str, count: int | None = None) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if count is not None and len(values) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
    if not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError("values must be finite")
    return values


def vec3(text: str) -> list[float]:
    return _floats(text, 3)


def float_list(text: str) -> list[float]:
    return _floats(text)


# -- subcommands: params dict -> (tables, ok) ---------------------------------

def run_verify_algebra(params: dict) -> tuple[dict, bool]:
    records = clifford.algebra_report()
    report = {
        "tool": "topowave",
        "version": __version__,
        "identities": records,
        "all_passed": all(r["passed"] for r in records),
    }
    return {"report.json": report}, report["all_passed"]


def run_dirac(params: dict) -> tuple[dict, bool]:
    mass = params["mass"]
    if mass < 0:
        raise UsageError("--mass must be non-negative")
    if params["probes"] < 1 or params["shifts"] < 0:
        raise UsageError("--probes must be >= 1 and --shifts >= 0")
    try:
        state = dirac.OnShellState.build(mass, params["momentum"], params["branch"])
    except ValueError as exc:
        raise UsageError(str(exc))
    probes = dirac.probe_points(params["probes"], params["seed"])
    tol = dirac.TOL

    residual_rows = []
    worst_residual = 0.0
    for i, x in enumerate(probes):
        r = float(np.max(np.abs(dirac.dirac_residual(state, x))))
        worst_residual = max(worst_residual, r)
        residual_rows.append([i, *x, r])

    lam = dirac.wavelengths_from_momentum(state.momentum, strict=False)
    wavelength_rows = [[mu, state.momentum[mu], lam[mu]] for mu in range(4)]
    finite = ~np.isinf(lam)
    identity = dirac.wavelength_identity_residual(state.momentum, mass) if finite.all() else math.nan

    rng = np.random.default_rng(params["seed"] + 1)
    shift_rows = []
    worst_shift = 0.0
    for _ in range(params["shifts"]):
        n = rng.integers(-10, 11, size=4) * finite
        d = dirac.translation_invariance_check(state, n, probes)
        worst_shift = max(worst_shift, d)
        shift_rows.append([*n, d])

    shell = dirac.mass_shell_residual(state.momentum, mass)
    summary = [
        ["energy", state.momentum[0]],
        ["mass_shell_residual", shell],
        ["max_dirac_residual", worst_residual],
        ["wavelength_identity_residual", identity],
        ["max_translation_deviation", worst_shift],
        ["infinite_wavelength_axes", " ".join(str(i) for i in np.flatnonzero(~finite))],
    ]
    ok = (
        worst_residual < tol
        and worst_shift < tol
        and (math.isnan(identity) or identity < tol)
    )
    tables = {
        "summary.csv": (["quantity", "value"], summary),
        "residuals.csv": (["probe", "t", "x", "y", "z", "max_residual"], residual_rows),
        "wavelengths.csv": (["axis", "momentum", "wavelength"], wavelength_rows),
        "translations.csv": (["n0", "n1", "n2", "n3", "deviation"], shift_rows),
    }
    return tables, ok


def run_ensemble(params: dict) -> tuple[dict, bool]:
    times = sorted(set(params["times"]))
    try:
        cfg = ensemble.EnsembleConfig(
            perimeter=params["perimeter"],
            sample_count=params["samples"],
            a_min_fraction=params["a_min_fraction"],
            seed=params["seed"],
            times=tuple(times),
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    if params["bins"] < 1:
        raise UsageError("--bins must be >= 1")
    hist_time = params["hist_time"] if params["hist_time"] is not None else times[0]
    if hist_time < 0:
        raise UsageError("--hist-time must be non-negative")

    regions = ensemble.run_ensemble(cfg)
    ok = all(
        r.x_lo <= r.x_hi and r.x_lo <= r.sample_positions.min() and r.x_hi >= r.sample_positions.max()
        for r in regions
    )
    if cfg.sample_count > 1:
        ok = ok and all(r2.x_hi > r1.x_hi for r1, r2 in zip(regions, regions[1:]))
    hist = ensemble.occupation_histogram(cfg, hist_time, params["bins"])
    ok = ok and sum(n for _, n in hist) == cfg.sample_count
    tables = {
        "regions.csv": (["t", "x_lo", "x_hi"], [[r.t, r.x_lo, r.x_hi] for r in regions]),
        "histogram.csv": (["bin_center", "count"], [list(row) for row in hist]),
    }
    return tables, ok


def run_lightcone(params: dict) -> tuple[dict, bool]:
    v = params["v"]
    if not -1.0 < v < 1.0:
        raise UsageError("--v must satisfy |v| < 1")
    if params["b"] <= 0 or params["a"] < 0:
        raise UsageError("--b must be positive and --a non-negative")
    times = params["times"]
    if len(set(times)) < 2:
        raise UsageError("--times needs at least two distinct values")

    slices = [[t, lightcone.slice_radius(params["a"], params["b"], t)] for t in times]
    cone = [[t, *lightcone.cone_position(t)] for t in times]
    boost_rows = []
    for t1, t2 in zip(times, times[1:]):
        if t1 == t2:
            continue
        boost_rows.append([t1, t2, lightcone.invariant_speed_check(v, (t1, t2))])
    tol = 1e-12 if abs(v) <= 0.9 else 1e-10
    ok = all(row[2] < tol for row in boost_rows)
    tables = {
        "slices.csv": (["t", "radius"], slices),
        "cone.csv": (["t", "x_plus", "x_minus"], cone),
        "boost.csv": (["t_start", "t_end", "deviation"], boost_rows),
    }
    return tables, ok


def run_maxwell(params: dict) -> tuple[dict, bool]:
    k = np.asarray(params["k"], dtype=float)
    if not np.any(k):
        raise UsageError("--k must be nonzero")
    if params["probes"] < 1 or params["random_waves"] < 0:
        raise UsageError("--probes must be >= 1 and --random-waves >= 0")
    rng = np.random.default_rng(params["seed"])
    wave_vectors = [k]
    for _ in range(params["random_waves"]):
        u = rng.normal(size=3)
        wave_vectors.append(u / np.linalg.norm(u))
    points = rng.uniform(-5.0, 5.0, size=(params["probes"], 4))

    rows = []
    ok = True
    for kv in wave_vectors:
        w = maxwell.solve_amplitudes(kv)
        res = maxwell.wave_residuals(w, points)
        ok = ok and all(r < maxwell.TOL for r in res.values())
        rows.append([*kv, w.omega, res["majorana"], res["curl"], res["gamma"]])
    header = ["kx", "ky", "kz", "omega", "residual_majorana", "residual_curl", "residual_gamma"]
    return {"waves.csv": (header, rows)}, ok


RUNNERS: dict[str, Callable[[dict], tuple[dict, bool]]] = {
    "verify-algebra": run_verify_algebra,
    "dirac": run_dirac,
    "ensemble": run_ensemble,
    "lightcone": run_lightcone,
    "maxwell": run_maxwell,
}


# -- output ------------------------------------------------------------------

def render(name: str, content) -> str:
    if name.endswith(".json"):
        return json.dumps(content, indent=2, sort_keys=True) + "\n"
    return render_csv(content)


def write_outputs(subcommand: str, params: dict, tables: dict, out: str | None) -> None:
    rendered = {name: render(name, content) for name, content in tables.items()}
    if out is None:
        for i, (name, text) in enumerate(rendered.items()):
            if len(rendered) > 1:
                sys.stdout.write(("\n" if i else "") + f"# {name}\n")
            sys.stdout.write(text)
        return
    outdir = Path(out)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {}
    for name, text in rendered.items():
        data = text.encode("utf-8")
        (outdir / name).write_bytes(data)
        files[name] = hashlib.sha256(data).hexdigest()
    manifest = {
        "tool": "topowave",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": params,
        "seed": params.get("seed"),
        "output_path": str(outdir),
        "files": files,
    }
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def execute(subcommand: str, params: dict, out: str | None) -> int:
    try:
        tables, ok = RUNNERS[subcommand](params)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    write_outputs(subcommand, params, tables, out)
    if subcommand == "verify-algebra" and out is not None:
        sys.stdout.write(render("report.json", tables["report.json"]))
    return EXIT_OK if ok else EXIT_FAILED


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topowave", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--out", default=None, help="output directory (default: stdout)")
        return p

    add("verify-algebra", help="check gamma, spin and block-gamma identities")

    p = add("dirac", help="on-shell Dirac plane wave checks")
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--momentum", type=vec3, required=True, help="px,py,pz")
    p.add_argument("--branch", choices=["up", "down"], default="up")
    p.add_argument("--probes", type=int, default=dirac.DEFAULT_PROBE_COUNT)
    p.add_argument("--shifts", type=int, default=50, help="number of random integer translations")
    p.add_argument("--seed", type=int, default=dirac.DEFAULT_PROBE_SEED)

    p = add("ensemble", help="equal-perimeter ellipse ensemble regions and histogram")
    p.add_argument("--perimeter", type=float, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--a-min-fraction", type=float, default=ensemble.DEFAULT_A_MIN_FRACTION)
    p.add_argument("--times", type=float_list, default=[0.0])
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--hist-time", type=float, default=None, help="histogram time (default: first time)")
    p.add_argument("--seed", type=int, default=0)

    p = add("lightcone", help="hyperboloid slices, cone and boosted null worldline")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--v", type=float, default=0.5)
    p.add_argument("--times", type=float_list, default=[0.0, 1.0, 2.0])

    p = add("maxwell", help="Riemann-Silberstein plane wave residuals")
    p.add_argument("--k", type=vec3, required=True, help="kx,ky,kz")
    p.add_argument("--probes", type=int, default=20)
    p.add_argument("--random-waves", type=int, default=0, help="extra random unit wave vectors")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("replay", help="re-run a manifest.json")
    p.add_argument("manifest")
    p.add_argument("--out", default=None, help="output directory (default: the manifest's)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "replay":
        try:
            manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
            subcommand = manifest["subcommand"]
            params = manifest["parameters"]
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: unreadable manifest: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if subcommand not in RUNNERS:
            print(f"error: unknown subcommand {subcommand!r} in manifest", file=sys.stderr)
            return EXIT_USAGE
        return execute(subcommand, params, args.out or manifest.get("output_path"))
    params = {k: v for k, v in vars(args).items() if k not in ("command", "out")}
    return execute(args.command, params, args.out)


if __name__ == "__main__":
    sys.exit(main())
