"""Pair each coefficient criterion with the disk verifier for its conclusion."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import criteria as C
from .cesaro import CesaroParams, cesaro_mean, cesaro_polynomial
from .errors import DomainError
from .generators import build_cesaro_input, random_cesaro_params, random_cesaro_weights
from .series import CoefficientSequence
from .verifiers import (
    DEFAULT_TOL,
    ClassReport,
    DiskGrid,
    verify_close_to_convex,
    verify_convex,
    verify_prestarlike,
    verify_R_gamma,
    verify_starlike,
)

__all__ = [
    "run_predicate",
    "cross_verify",
    "verdict",
    "SoundnessRun",
    "soundness_run",
    "SOUNDNESS_RADII",
]

SOUNDNESS_RADII = (0.5, 0.9, 0.99)


def run_predicate(theorem, f, cp, p: C.ParameterSet, gamma=None, proof_ranges=False) -> C.CriterionReport:
    if theorem not in C.THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; choose from {sorted(C.THEOREMS)}")
    if theorem.startswith("2."):
        return C.THEOREMS[theorem](f, p)
    if cp is None:
        raise DomainError(f"theorem {theorem} needs Cesaro parameters b, c, n")
    if theorem == "3.5":
        return C.cesaro_prestarlike(cp, p, proof_ranges)
    if theorem == "3.3":
        return C.cesaro_r_gamma(f, cp, p, gamma, proof_ranges)
    return C.THEOREMS[theorem](f, cp, p, proof_ranges)


def cross_verify(
    theorem: str,
    report: C.CriterionReport,
    f: CoefficientSequence | None,
    cp: CesaroParams | None,
    p: C.ParameterSet,
    grid: DiskGrid | None = None,
    tol: float = DEFAULT_TOL,
) -> list[ClassReport]:
    """Verifier reports for the function the theorem makes a claim about."""
    kw = {"grid": grid, "tol": tol}
    if theorem == "2.2":
        return [verify_starlike(f, p.gamma, **kw)]
    if theorem == "2.4":
        return [verify_close_to_convex(f, "z/(1-z^2)", **kw)]
    if theorem == "2.5":
        return [verify_prestarlike(f, p.gamma, **kw)]
    if theorem == "2.7":
        return [verify_convex(f, 0.0, **kw)]
    if theorem == "3.5":
        return [verify_prestarlike(cesaro_polynomial(cp), p.gamma, **kw)]
    s = cesaro_mean(f, cp)
    if theorem == "3.1":
        return [
            verify_close_to_convex(s, "z", **kw),
            verify_close_to_convex(s, "z/(1-z)", **kw),
            verify_starlike(s, 0.0, **kw),
        ]
    if theorem == "3.3":
        return [verify_R_gamma(s, report.params["gamma"], **kw)]
    if theorem == "3.4":
        return [verify_starlike(s, report.params["order"], **kw)]
    if theorem == "3.7":
        return [verify_close_to_convex(s, "z/(1-z^2)", **kw)]
    raise DomainError(f"unknown theorem {theorem!r}")


def verdict(report: C.CriterionReport, checks: list[ClassReport]) -> str:
    if not report.all_satisfied:
        return "n/a"
    return "theorem-consistent" if all(c.holds for c in checks) else "inconsistent"


# -- randomized soundness --------------------------------------------------------


@dataclass
class SoundnessRun:
    theorem: str
    seed: int
    satisfied: int = 0
    tries: int = 0
    inconsistent: list[dict] = field(default_factory=list)
    min_margin: float = np.inf

    @property
    def passed(self) -> bool:
        return not self.inconsistent

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "seed": self.seed,
            "satisfied": self.satisfied,
            "tries": self.tries,
            "inconsistent": self.inconsistent,
            "min_margin": self.min_margin,
            "passed": self.passed,
        }


def _random_case(theorem, rng, free_link, proof_ranges, n_range):
    cp = random_cesaro_params(rng, *n_range)
    # orders >= 1 (lambda+mu >= 3/2) make condition (1) of 3.4 unsatisfiable
    p = random_cesaro_weights(rng, proof_ranges, max_sum=1.5 if theorem == "3.4" else 2.0)
    gamma = None
    f = None
    if theorem == "3.5":
        g = 0.0 if rng.random() < 0.3 else float(rng.uniform(0, 1))
        p = C.ParameterSet(p.alpha, p.beta, p.lam, p.mu, g)
        # place b near the threshold of condition (1), from either side
        need = 2 * (2 - g) * (cp.c + cp.n - 2) - (cp.n - 2)
        b = max(cp.c, need * float(rng.uniform(0.95, 4.0)))
        cp = CesaroParams(b, cp.c, cp.n)
    else:
        f = build_cesaro_input(theorem, cp, p, rng, free_link=free_link)
        if theorem == "3.3":
            gmax = C.cesaro_r_gamma_bound(f, cp)
            gamma = gmax if rng.random() < 0.5 else float(rng.uniform(0, max(gmax, 0.0)))
    return f, cp, p, gamma


def soundness_run(
    theorem: str,
    seed: int = 0,
    count: int = 200,
    radii=SOUNDNESS_RADII,
    free_link: bool = False,
    proof_ranges: bool = False,
    max_tries: int = 50000,
    n_range: tuple[int, int] = (3, 50),
) -> SoundnessRun:
    """Draw random admissible inputs until ``count`` satisfy the criterion and
    check each against the verifier for the theorem's conclusion."""
    rng = np.random.default_rng(seed)
    grid = DiskGrid(radii)
    run = SoundnessRun(theorem, seed)
    while run.satisfied < count and run.tries < max_tries:
        run.tries += 1
        f, cp, p, gamma = _random_case(theorem, rng, free_link, proof_ranges, n_range)
        if f is not None and not f.is_positive():
            continue  # some links force a_k <= 0 for these parameters
        report = run_predicate(theorem, f, cp, p, gamma, proof_ranges)
        if not report.all_satisfied:
            continue
        run.satisfied += 1
        checks = cross_verify(theorem, report, f, cp, p, grid)
        run.min_margin = min(run.min_margin, *(c.margin for c in checks))
        if verdict(report, checks) == "inconsistent":
            run.inconsistent.append(
                {
                    "params": report.params,
                    "coefficients": None if f is None else f.tolist(),
                    "failed": [c.to_dict() for c in checks if not c.holds],
                    "extras_ok": all(e.ok for e in report.extras),
                }
            )
    return run
