"""Command-line driver: batch solves, inequality reports, constant tables.

Subcommands:
  verify <config.json>   rasterize, solve, extrapolate, evaluate the catalog
  constants --n 2..8     c_n / d_n table
  curve --n 4 --points 65   two-ball J(t) curve samples
  spectrum --shape ... --problem ... --h ... --levels ... --m ...

Reports are CSV (12 significant digits) plus one JSON summary; reruns of
an identical config reproduce identical bytes. The environment variable
EIGENINEQ_OUT overrides the output directory; --tolerance-scale
multiplies every discretization allowance.
"""

import argparse
import concurrent.futures
import csv
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

from .catalog import CATALOG, CONJECTURE, PROVEN, DomainSpectra, evaluate_all
from .grid.domain import Annulus, Disk, Ellipse, LShape, Polygon, Rectangle, Shape
from .grid.solve import SolverError, solve_shape
from .spectra import ProblemKind, Spectrum
from .twoball import TALENTI_D_PRIME, c_constant, curve_table, d_constant

_SCHEMA_VERSION = 1
_SUMMARY_VERSION = 1


class ConfigError(ValueError):
    pass


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.12g}"
    return str(x)


def _write_csv(path: Path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])


def parse_shape(desc: dict) -> Shape:
    if not isinstance(desc, dict) or "type" not in desc:
        raise ConfigError(f"shape descriptor must be an object with a 'type', got {desc!r}")
    kind = desc["type"]
    args = {k: v for k, v in desc.items() if k != "type"}
    makers = {
        "disk": Disk,
        "ellipse": Ellipse,
        "rectangle": Rectangle,
        "l_shape": LShape,
        "annulus": Annulus,
    }
    try:
        if kind == "polygon":
            return Polygon(tuple(tuple(v) for v in args["vertices"]))
        if kind in makers:
            return makers[kind](**args)
    except (TypeError, KeyError, ValueError) as exc:
        raise ConfigError(f"bad {kind} descriptor {args}: {exc}") from exc
    raise ConfigError(f"unknown shape type {kind!r}")


def load_config(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config parse error at {path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if cfg.get("schema_version") != _SCHEMA_VERSION:
        raise ConfigError(f"config schema_version must be {_SCHEMA_VERSION}")
    domains = cfg.get("domains")
    if not domains:
        raise ConfigError("config needs a nonempty 'domains' list")
    problems = cfg.get("problems")
    if not problems:
        raise ConfigError("config needs a nonempty 'problems' list")
    for p in problems:
        if p not in {k.value for k in ProblemKind}:
            raise ConfigError(f"unknown problem kind {p!r}")
    mesh = cfg.get("mesh", {})
    if not (isinstance(mesh.get("h"), (int, float)) and mesh["h"] > 0):
        raise ConfigError("mesh.h must be a positive number")
    if int(mesh.get("levels", 0)) < 2:
        raise ConfigError("mesh.levels must be >= 2 (extrapolation needs two levels)")
    if int(cfg.get("m_max", 0)) < 1:
        raise ConfigError("m_max must be >= 1")
    for d in domains:
        parse_shape(d.get("shape"))
    unknown = set(cfg.get("inequalities") or []) - set(CATALOG)
    if unknown:
        raise ConfigError(f"unknown inequality ids {sorted(unknown)}")
    return cfg


def _scaled(spectrum: Spectrum | None, factor: float) -> Spectrum | None:
    if spectrum is None or factor == 1.0:
        return spectrum
    return dataclasses.replace(spectrum, allowance=spectrum.allowance * factor)


def _solve_task(shape, label, problem, h, levels, m):
    levels_spectra, extrapolated = solve_shape(shape, problem, h, levels, m)
    return [dataclasses.replace(s, domain_label=label) for s in levels_spectra], dataclasses.replace(
        extrapolated, domain_label=label
    )


def run_verify(config: dict, output_dir: str, tolerance_scale: float = 1.0, workers: int | None = None) -> int:
    """Solve every domain x problem task, evaluate the catalog, write reports.

    Returns the process exit code: 0 iff every proven-status inequality
    holds and no solve failed.
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    h = float(config["mesh"]["h"])
    levels = int(config["mesh"]["levels"])
    m_max = int(config["m_max"])
    k_max = int(config.get("k_max", 10))
    ids = config.get("inequalities")
    problems = [ProblemKind(p) for p in config["problems"]]
    domains = [(d.get("label") or parse_shape(d["shape"]).label, parse_shape(d["shape"])) for d in config["domains"]]
    if len({label for label, _ in domains}) != len(domains):
        raise ConfigError("domain labels must be unique")

    def m_for(problem):
        if problem in (ProblemKind.DIRICHLET, ProblemKind.NEUMANN):
            return max(m_max, k_max) + 1
        return m_max + 1

    tasks = [(label, shape, problem) for label, shape in domains for problem in problems]
    results = {}
    errors = []
    max_workers = workers or config.get("concurrency") or os.cpu_count() or 1
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as pool:
        futs = {
            pool.submit(_solve_task, shape, label, problem, h, levels, m_for(problem)): (label, problem)
            for label, shape, problem in tasks
        }
        for fut in concurrent.futures.as_completed(futs):
            label, problem = futs[fut]
            try:
                results[(label, problem)] = fut.result()
            except Exception as exc:
                errors.append({"domain": label, "problem": problem.value, "error": str(exc)})

    spectra_rows = []
    for (label, problem) in sorted(results, key=lambda k: (k[0], k[1].value)):
        level_spectra, extrapolated = results[(label, problem)]
        for spec in [*level_spectra, extrapolated]:
            for i, v in enumerate(spec.values):
                spectra_rows.append(
                    (label, problem.value, spec.provenance.value, spec.mesh_h, i + 1, v, spec.allowance)
                )
    _write_csv(out / "spectra.csv",
               ["domain", "problem", "provenance", "h", "index", "value", "allowance"], spectra_rows)

    reports = []
    for label, shape in domains:
        by_kind = {}
        for problem in problems:
            got = results.get((label, problem))
            if got is not None:
                by_kind[problem.value] = _scaled(got[1], tolerance_scale)
        bundle = DomainSpectra(
            label=label,
            dimension=2,
            area=shape.area,
            dirichlet=by_kind.get("dirichlet"),
            neumann=by_kind.get("neumann"),
            clamped=by_kind.get("clamped"),
            buckling=by_kind.get("buckling"),
        )
        reports.extend(evaluate_all(bundle, m_max=m_max, k_max=k_max, ids=ids))
    reports.sort(key=lambda r: (r.domain, r.id, -1 if r.m is None else r.m))
    _write_csv(
        out / "inequalities.csv",
        ["id", "domain", "m", "lhs", "rhs", "slack", "holds", "tolerance", "citation", "status", "note"],
        [(r.id, r.domain, r.m, r.lhs, r.rhs, r.slack, r.holds, r.tolerance_used, r.citation, r.status, r.note)
         for r in reports],
    )

    counts = {
        "proven_held": sum(1 for r in reports if r.status == PROVEN and r.holds),
        "proven_failed": sum(1 for r in reports if r.status == PROVEN and not r.holds),
        "conjecture_held": sum(1 for r in reports if r.status == CONJECTURE and r.holds),
        "conjecture_failed": sum(1 for r in reports if r.status == CONJECTURE and not r.holds),
    }
    exit_code = 0 if counts["proven_failed"] == 0 and not errors else 1
    summary = {
        "summary_version": _SUMMARY_VERSION,
        "counts": counts,
        "solver_errors": sorted(errors, key=lambda e: (e["domain"], e["problem"])),
        "n_reports": len(reports),
        "exit_code": exit_code,
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return exit_code


def _parse_n_list(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok]


def run_constants(n_list, output_dir: str) -> int:
    """CSV table of c_n, d_n, the minimizing t and the endpoint value."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for n in sorted(set(n_list)):
        if n < 2:
            raise ConfigError(f"dimensions must be >= 2, got {n}")
        d = d_constant(n)
        rows.append((n, c_constant(n), d.d_n, d.minimizer_t, d.ball_value, TALENTI_D_PRIME.get(n)))
    _write_csv(out / "constants.csv", ["n", "c_n", "d_n", "minimizer_t", "J_endpoint", "d_prime_ref"], rows)
    return 0


def run_curve(n: int, points: int, output_dir: str) -> int:
    """CSV of the normalized two-ball curve J(t)/Gamma_1(B_1) on a uniform grid."""
    if points < 2:
        raise ConfigError(f"need at least 2 curve points, got {points}")
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    grid = [i / (points - 1) for i in range(points)]
    rows = []
    failed = 0
    for t, ratio in curve_table(n, grid):
        if ratio is None:
            failed += 1
        rows.append((t, ratio, "ok" if ratio is not None else "failed"))
    _write_csv(out / f"curve_n{n}.csv", ["t", "J_ratio", "status"], rows)
    return 0 if failed == 0 else 1


def run_spectrum(shape_desc: str, problem: str, h: float, levels: int, m: int, output_dir: str) -> int:
    """Solve one shape/problem at every level and write the spectra CSV."""
    try:
        desc = json.loads(shape_desc)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"bad shape JSON: {exc}") from exc
    shape = parse_shape(desc)
    kind = ProblemKind(problem)
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    level_spectra, extrapolated = solve_shape(shape, kind, h, levels, m)
    rows = []
    for spec in [*level_spectra, extrapolated]:
        for i, v in enumerate(spec.values):
            rows.append((shape.label, kind.value, spec.provenance.value, spec.mesh_h, i + 1, v, spec.allowance))
    _write_csv(out / "spectrum.csv",
               ["domain", "problem", "provenance", "h", "index", "value", "allowance"], rows)
    return 0


def _output_dir(args, default="."):
    return args.output_dir or os.environ.get("EIGENINEQ_OUT") or default


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="eigenineq", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--output-dir", help="report directory (or env EIGENINEQ_OUT)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a config and evaluate the inequality catalog")
    p_verify.add_argument("config")
    p_verify.add_argument("--tolerance-scale", type=float, default=1.0,
                          help="multiply every discretization allowance")
    p_verify.add_argument("--workers", type=int, default=None)

    p_const = sub.add_parser("constants", help="write the c_n / d_n table")
    p_const.add_argument("--n", default="2..8", help="range like 2..8 or list like 2,4,6")

    p_curve = sub.add_parser("curve", help="write the two-ball J(t) curve")
    p_curve.add_argument("--n", type=int, required=True)
    p_curve.add_argument("--points", type=int, default=65)

    p_spec = sub.add_parser("spectrum", help="solve one shape/problem pair")
    p_spec.add_argument("--shape", required=True, help='JSON, e.g. {"type":"disk","radius":1.0}')
    p_spec.add_argument("--problem", required=True, choices=[k.value for k in ProblemKind])
    p_spec.add_argument("--h", type=float, required=True)
    p_spec.add_argument("--levels", type=int, default=2)
    p_spec.add_argument("--m", type=int, default=6)

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            config = load_config(args.config)
            out = args.output_dir or os.environ.get("EIGENINEQ_OUT") or config.get("output_dir") or "."
            return run_verify(config, out, args.tolerance_scale, args.workers)
        if args.command == "constants":
            return run_constants(_parse_n_list(args.n), _output_dir(args))
        if args.command == "curve":
            return run_curve(args.n, args.points, _output_dir(args))
        if args.command == "spectrum":
            return run_spectrum(args.shape, args.problem, args.h, args.levels, args.m, _output_dir(args))
    except (ConfigError, SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
