"""Command-line front end.

    gfcheck check --theorem 2.2 --gen inverse-square --alpha 1 --beta 1 --lam .5 --mu .5 --cross-verify
    gfcheck verify --class convex --gen inverse-cube
    gfcheck scan --alpha 1 --beta 1 --lam .5 --mu .5 --n 25
    gfcheck cesaro --delta 1 --n 3 --coeffs 1,1,1
    gfcheck reproduce examples --seed 42
    gfcheck curve --gen inverse-square --radius 0.999 --format csv

Exit codes: 0 success, 1 usage or configuration error, 2 a predicate/verifier
inconsistency or a failed reproduction suite.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import criteria as C
from .cesaro import CesaroParams, cesaro_mean
from .crosscheck import cross_verify, run_predicate, verdict
from .errors import DomainError
from .generators import generate
from .reporting import ConfigError, ExperimentConfig, RunSummary, dumps, rows_to_csv
from .reproduce import SUITES, emit_boundary_curve, run_suite
from .series import CoefficientSequence, parse_coefficients, read_coefficients
from .trig import ThetaGrid, TrigCoefficients, positivity_scan, vietoris_general_coeffs
from .verifiers import (
    DiskGrid,
    verify_close_to_convex,
    verify_convex,
    verify_prestarlike,
    verify_R_gamma,
    verify_starlike,
    verify_typically_real,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


# -- config -> inputs ------------------------------------------------------------------


def _params(cfg: ExperimentConfig) -> C.ParameterSet:
    return C.ParameterSet(cfg.alpha, cfg.beta, cfg.lam, cfg.mu, 0.0 if cfg.gamma is None else cfg.gamma)


def _cesaro(cfg: ExperimentConfig) -> CesaroParams | None:
    if cfg.n is None:
        return None
    if cfg.delta is not None:
        return CesaroParams.classical(cfg.delta, cfg.n)
    if cfg.b is None or cfg.c is None:
        raise ConfigError("Cesaro parameters need --b and --c, or --delta")
    return CesaroParams(cfg.b, cfg.c, cfg.n)


def _input(cfg: ExperimentConfig, min_degree: int = 1) -> CoefficientSequence:
    if cfg.coeffs is not None:
        f = CoefficientSequence(cfg.coeffs)
    elif cfg.input_path is not None:
        f = sys.stdin.read() if cfg.input_path == "-" else None
        f = parse_coefficients(f) if f is not None else read_coefficients(cfg.input_path)
    elif cfg.generator is not None:
        return generate(cfg.generator, max(cfg.truncate, min_degree), _params(cfg))
    else:
        raise ConfigError("no input: give --coeffs, --input or --gen")
    return f.truncate(cfg.truncate) if f.degree > cfg.truncate else f


def _grid(cfg: ExperimentConfig) -> DiskGrid:
    if cfg.grid_radii is None:
        return DiskGrid(angles=cfg.grid_angles)
    return DiskGrid(tuple(cfg.grid_radii), cfg.grid_angles)


# -- tasks -------------------------------------------------------------------------------


def run_check(cfg: ExperimentConfig) -> RunSummary:
    p = _params(cfg)
    cp = _cesaro(cfg)
    thm = cfg.theorem
    f = None if thm == "3.5" else _input(cfg, cp.n if cp else 1)
    if f is not None and cp is not None and thm.startswith("3."):
        f = f.truncate(cp.n)
    report = run_predicate(thm, f, cp, p, cfg.gamma, cfg.proof_ranges)
    result = {"criterion": report.to_dict()}
    v = "n/a"
    if cfg.cross_verify:
        checks = cross_verify(thm, report, f, cp, p, _grid(cfg), cfg.tol)
        result["verifiers"] = [c.to_dict() for c in checks]
        v = verdict(report, checks)
    return RunSummary(cfg.to_dict(), result, verdict=v, passed=v != "inconsistent")


def run_verify(cfg: ExperimentConfig) -> RunSummary:
    f = _input(cfg)
    cp = _cesaro(cfg)
    if cp is not None:
        f = cesaro_mean(f, cp)
    grid, tol, g = _grid(cfg), cfg.tol, cfg.gamma or 0.0
    name = cfg.verify_class
    if name == "starlike":
        r = verify_starlike(f, g, grid, tol)
    elif name == "convex":
        r = verify_convex(f, g, grid, tol)
    elif name == "close-to-convex":
        r = verify_close_to_convex(f, cfg.g, cfg.eta, cfg.mu_order, grid, tol)
    elif name == "typically-real":
        r = verify_typically_real(f, grid, tol)
    elif name == "prestarlike":
        r = verify_prestarlike(f, g, grid, tol)
    else:
        r = verify_R_gamma(f, g, grid, tol)
    return RunSummary(cfg.to_dict(), r.to_dict(), passed=r.holds)


def run_scan(cfg: ExperimentConfig) -> RunSummary:
    if cfg.coeffs is not None:
        b0 = 2.0 if cfg.trig_b0 is None else cfg.trig_b0
        t = TrigCoefficients(b0, tuple(cfg.coeffs))
    else:
        if cfg.n is None:
            raise ConfigError("scan needs --n (or --coeffs b_1..b_n)")
        t = vietoris_general_coeffs(cfg.alpha, cfg.beta, cfg.lam, cfg.mu, cfg.n)
    grid = None if cfg.theta_count is None else ThetaGrid(cfg.theta_count)
    kinds = ("cosine", "sine") if cfg.kind == "both" else (cfg.kind,)
    results = [positivity_scan(t, k, grid).to_dict() for k in kinds]
    return RunSummary(cfg.to_dict(), {"scans": results}, passed=all(r["positive"] for r in results))


def run_cesaro(cfg: ExperimentConfig) -> RunSummary:
    cp = _cesaro(cfg)
    if cp is None:
        raise ConfigError("cesaro needs --n with --b/--c or --delta")
    f = _input(cfg, cp.n)
    s = cesaro_mean(f, cp)
    return RunSummary(cfg.to_dict(), {"cesaro": cp.to_dict(), "coefficients": s.tolist()})


def run_reproduce(cfg: ExperimentConfig) -> RunSummary:
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from {sorted(SUITES)} or 'all'")
    out = run_suite(cfg.suite, cfg.seed)
    return RunSummary(cfg.to_dict(), out, passed=out["passed"])


def run_curve(cfg: ExperimentConfig) -> RunSummary:
    rows = emit_boundary_curve(_input(cfg), cfg.radius, cfg.curve_angles, cfg.functional)
    return RunSummary(cfg.to_dict(), {"rows": [{"theta": t, "value": v} for t, v in rows]})


TASK_RUNNERS = {
    "check": run_check,
    "verify": run_verify,
    "scan": run_scan,
    "cesaro": run_cesaro,
    "reproduce": run_reproduce,
    "curve": run_curve,
}


def execute(cfg: ExperimentConfig, timestamp: bool = True) -> RunSummary:
    started = time.perf_counter()
    return TASK_RUNNERS[cfg.task](cfg).stamp(started, timestamp)


# -- argparse ------------------------------------------------------------------------------


def _floats(text: str) -> list[float]:
    text = text.strip()
    if text.startswith("["):
        return [float(x) for x in json.loads(text)]
    return [float(x) for x in text.split(",") if x.strip()]


def _common() -> argparse.ArgumentParser:
    # SUPPRESS lets the same flag appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--grid-radii", type=_floats, help="comma-separated radii in (0, 1)")
    p.add_argument("--grid-angles", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--truncate", type=int, help="truncation degree for generated/read input (default 200)")
    p.add_argument("--seed", type=int)
    p.add_argument("--proof-ranges", action="store_true", help="accept alpha <= 6/(lambda+2) in the Cesaro theorems")
    p.add_argument("--no-timestamp", action="store_true", help="omit wall time and timestamp")
    p.add_argument("--config", help="JSON file mirroring the run configuration")
    return p


def _weights(p):
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--lam", "--lambda", dest="lam", type=float)
    p.add_argument("--mu", type=float)


def _source(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--coeffs", type=_floats, help="inline a_1,a_2,... (or JSON array)")
    g.add_argument("--input", dest="input_path", help="coefficient file (JSON array or CSV); '-' for stdin")
    g.add_argument("--gen", dest="generator", help="named generator or starlike catalog function")


def _cesaro_flags(p):
    p.add_argument("--b", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=float)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="gfcheck",
        description="Coefficient criteria, Cesaro means and disk verifiers for univalent function classes.",
        parents=[common],
        # subcommand options such as --g must not be expanded against --grid-*
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="task", metavar="TASK")
    kw = {"parents": [common], "argument_default": argparse.SUPPRESS, "allow_abbrev": False}

    p = sub.add_parser("check", help="evaluate a coefficient criterion", **kw)
    p.add_argument("--theorem", required=True, choices=sorted(C.THEOREMS))
    _weights(p)
    p.add_argument("--gamma", type=float)
    _cesaro_flags(p)
    _source(p)
    p.add_argument("--cross-verify", action="store_true", help="also run the disk verifier for the conclusion")

    p = sub.add_parser("verify", help="sampled class membership on the disk", **kw)
    p.add_argument("--class", dest="verify_class", required=True,
                   choices=("starlike", "convex", "close-to-convex", "typically-real", "prestarlike", "rgamma"))
    p.add_argument("--gamma", type=float)
    p.add_argument("--g", help="starlike comparison function for close-to-convex")
    p.add_argument("--eta", type=float)
    p.add_argument("--mu-order", type=float)
    _cesaro_flags(p)
    _source(p)
    _weights(p)

    p = sub.add_parser("scan", help="positivity of cosine and sine sums", **kw)
    _weights(p)
    p.add_argument("--n", type=int)
    p.add_argument("--coeffs", type=_floats, help="explicit b_1..b_n")
    p.add_argument("--b0", dest="trig_b0", type=float)
    p.add_argument("--kind", choices=("cosine", "sine", "both"))
    p.add_argument("--grid-count", dest="theta_count", type=int)

    p = sub.add_parser("cesaro", help="apply the generalized Cesaro mean", **kw)
    _cesaro_flags(p)
    _source(p)

    p = sub.add_parser("reproduce", help="run a reproduction suite", **kw)
    p.add_argument("suite", nargs="?", choices=sorted(SUITES) + ["all"])

    p = sub.add_parser("curve", help="class functional along a circle, for plotting", **kw)
    _source(p)
    _weights(p)
    p.add_argument("--radius", type=float)
    p.add_argument("--angles", dest="curve_angles", type=int)
    p.add_argument("--functional", choices=("starlike", "convex", "rgamma"))
    return parser


_CLI_ONLY = {"out", "no_timestamp", "config"}


def config_from_args(ns: argparse.Namespace) -> ExperimentConfig:
    args = vars(ns).copy()
    base = {}
    if args.get("config"):
        try:
            base = json.loads(Path(args["config"]).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
        if not isinstance(base, dict):
            raise ConfigError("config must be a JSON object")
    for key in _CLI_ONLY:
        args.pop(key, None)
    if args.get("task") is None:
        args.pop("task", None)
    return ExperimentConfig.from_dict({**base, **args})


def _render(summary: RunSummary, fmt: str) -> str:
    if fmt == "json":
        return dumps(summary)
    res = summary.result
    if "rows" in res:
        return rows_to_csv(["theta", "value"], [(r["theta"], r["value"]) for r in res["rows"]])
    if "coefficients" in res:
        return rows_to_csv(["k", "a_k"], list(enumerate(res["coefficients"], start=1)))
    if "criterion" in res:
        crit = res["criterion"]
        rows = [(c["label"], c["k"], c["lhs"], c["rhs"], c["ok"], c["vacuous"])
                for c in crit["gating"] + crit["conditions"]]
        return rows_to_csv(["label", "k", "lhs", "rhs", "ok", "vacuous"], rows)
    if "scans" in res:
        keys = ["kind", "min_value", "argmin_theta", "refined", "positive", "grid_count"]
        return rows_to_csv(keys, [[s[k] for k in keys] for s in res["scans"]])
    if "class" in res:
        keys = ["class", "gamma", "holds", "margin", "tolerance"]
        return rows_to_csv(keys + ["witness_re", "witness_im"],
                           [[res[k] for k in keys] + [res["witness"]["re"], res["witness"]["im"]]])
    raise ConfigError("csv output is not available for this task; use --format json")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = getattr(ns, "out", None)
    timestamp = not getattr(ns, "no_timestamp", False)
    try:
        cfg = config_from_args(ns)
        summary = execute(cfg, timestamp)
        text = _render(summary, cfg.format)
    except (DomainError, KeyError, ValueError, TypeError, OverflowError) as exc:
        print(f"gfcheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    if summary.verdict == "inconsistent":
        return EXIT_FAIL
    if cfg.task == "reproduce" and not summary.passed:
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
