"""Cosine/sine partial sums with generalized Vietoris weights.

The scans here give numerical evidence of positivity on the open interval
(0, pi); they are not proofs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, GridTooCoarseError

__all__ = [
    "TrigCoefficients",
    "ThetaGrid",
    "PositivityResult",
    "ChainLink",
    "ChainReport",
    "vietoris_weight",
    "vietoris_general_coeffs",
    "check_chain_condition",
    "cosine_sum",
    "sine_sum",
    "trig_sum",
    "positivity_scan",
    "golden_section",
    "CHAIN_RTOL",
]

CHAIN_RTOL = 1e-12
REFINE_WIDTH = 1e-12
OVERSAMPLE = 8
_CHUNK = 2_000_000


@dataclass(frozen=True)
class TrigCoefficients:
    """b_0 together with b_1..b_n."""

    b0: float
    b: tuple[float, ...]

    def __post_init__(self):
        b = tuple(float(x) for x in self.b)
        if not math.isfinite(self.b0) or not all(math.isfinite(x) for x in b):
            raise DomainError("trigonometric coefficients must be finite")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "b0", float(self.b0))

    @property
    def n(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class ThetaGrid:
    """Points j*pi/(count+1), j = 1..count, strictly inside (0, pi)."""

    count: int

    def __post_init__(self):
        if self.count < 1:
            raise DomainError("grid count must be positive")

    @classmethod
    def default(cls, n: int) -> "ThetaGrid":
        return cls(max(4096, OVERSAMPLE * n))

    @property
    def step(self) -> float:
        return math.pi / (self.count + 1)

    @property
    def points(self) -> np.ndarray:
        return np.arange(1, self.count + 1) * self.step


@dataclass(frozen=True)
class PositivityResult:
    min_value: float
    argmin_theta: float
    refined: bool
    positive: bool
    kind: str = "cosine"
    grid_count: int = 0
    note: str = "numerical evidence on a sampled open interval, not a proof"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "min_value": self.min_value,
            "argmin_theta": self.argmin_theta,
            "refined": self.refined,
            "positive": self.positive,
            "grid_count": self.grid_count,
            "note": self.note,
        }


@dataclass(frozen=True)
class ChainLink:
    """One link lhs <= rhs of the monotone weighted chain."""

    k: int
    lhs: float
    rhs: float
    ok: bool


@dataclass
class ChainReport:
    passed: bool
    links: list[ChainLink] = field(default_factory=list)

    @property
    def violations(self) -> list[ChainLink]:
        return [link for link in self.links if not link.ok]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "links": [vars(link) for link in self.links],
            "violations": [link.k for link in self.violations],
        }


def _check_weight_params(alpha, beta, lam, mu):
    if min(alpha, beta, lam, mu) < 0:
        raise DomainError("alpha, beta, lambda, mu must all be nonnegative")
    if lam + mu < 1:
        raise DomainError(f"lambda + mu must be >= 1, got {lam + mu}")


def vietoris_weight(k: int, alpha: float, beta: float, lam: float, mu: float) -> float:
    """(k+alpha)^lam (k+beta)^mu."""
    return (k + alpha) ** lam * (k + beta) ** mu


def vietoris_general_coeffs(alpha, beta, lam, mu, n: int) -> TrigCoefficients:
    """b_0 = 2, b_1 = 1 and b_k = 1/((k+alpha)^lam (k+beta)^mu) for 2 <= k <= n."""
    _check_weight_params(alpha, beta, lam, mu)
    if n < 1:
        raise DomainError("n must be at least 1")
    b = [1.0] + [1.0 / vietoris_weight(k, alpha, beta, lam, mu) for k in range(2, n + 1)]
    return TrigCoefficients(2.0, tuple(b))


def _chain_leq(lhs: float, rhs: float) -> bool:
    # relative only, so the verdict does not depend on the scale of the a_k
    return lhs <= rhs * (1 + CHAIN_RTOL)


def check_chain_condition(a0: float, a: Sequence[float], alpha, beta, lam, mu) -> ChainReport:
    """Evaluate every link of

        ... <= w_{k+1} a_{k+1} <= w_k a_k <= ... <= w_2 a_2 <= a_1 <= a_0/2

    with w_k = (k+alpha)^lam (k+beta)^mu. Link k compares w_k a_k with the
    previous term (link 1 is a_1 <= a_0/2). Violations are report content.
    """
    _check_weight_params(alpha, beta, lam, mu)
    a = [float(x) for x in a]
    if any(x <= 0 for x in a):
        raise DomainError("chain condition needs positive coefficients")
    links = [ChainLink(1, a[0], a0 / 2, _chain_leq(a[0], a0 / 2))]
    prev = a[0]
    for k in range(2, len(a) + 1):
        cur = vietoris_weight(k, alpha, beta, lam, mu) * a[k - 1]
        links.append(ChainLink(k, cur, prev, _chain_leq(cur, prev)))
        prev = cur
    return ChainReport(all(link.ok for link in links), links)


def trig_sum(t: TrigCoefficients, theta, kind: str = "cosine"):
    """b_0/2 + sum b_k cos(k theta), or sum b_k sin(k theta).

    Angles above pi/2 are evaluated through eps = pi - theta, using
    cos(k(pi-eps)) = (-1)^k cos(k eps) and sin(k(pi-eps)) = (-1)^(k+1) sin(k eps);
    this keeps relative accuracy near both open endpoints.
    """
    if kind not in ("cosine", "sine"):
        raise DomainError(f"kind must be 'cosine' or 'sine', got {kind!r}")
    theta = np.asarray(theta, dtype=float)
    scalar = theta.ndim == 0
    theta = theta.reshape(-1)
    b = np.asarray(t.b, dtype=float)
    n = b.size
    out = np.full(theta.shape, t.b0 / 2 if kind == "cosine" else 0.0)
    if n:
        k = np.arange(1, n + 1)
        sign = np.where(k % 2 == 0, 1.0, -1.0)  # (-1)^k
        flip = theta > math.pi / 2
        arg = np.where(flip, math.pi - theta, theta)
        rows = max(1, _CHUNK // n)
        for s in range(0, theta.size, rows):
            x = np.outer(arg[s : s + rows], k)
            f = flip[s : s + rows, None]
            if kind == "cosine":
                terms = np.cos(x) * np.where(f, sign, 1.0)
            else:
                terms = np.sin(x) * np.where(f, -sign, 1.0)
            out[s : s + rows] += terms @ b
    return float(out[0]) if scalar else out


def cosine_sum(t: TrigCoefficients, theta):
    return trig_sum(t, theta, "cosine")


def sine_sum(t: TrigCoefficients, theta):
    return trig_sum(t, theta, "sine")


_INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section(fun, a: float, b: float, width: float = REFINE_WIDTH):
    """Minimize a scalar function on [a, b]; returns (x, fun(x)).

    Endpoints are never evaluated.
    """
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a >= width:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fun(d)
        if c >= d:  # bracket collapsed to rounding level
            break
    return (c, fc) if fc <= fd else (d, fd)


def positivity_scan(t: TrigCoefficients, kind: str = "cosine", grid: ThetaGrid | None = None) -> PositivityResult:
    """Coarse grid minimum of the cosine or sine sum, refined by golden section
    on the bracketing interval around the smallest sample.

    Only interior coarse minima are refined (see ``PositivityResult.refined``).
    """
    if grid is None:
        grid = ThetaGrid.default(t.n)
    if grid.count < OVERSAMPLE * t.n:
        raise GridTooCoarseError(
            f"grid count {grid.count} < {OVERSAMPLE}*n = {OVERSAMPLE * t.n}"
        )
    theta = grid.points
    values = trig_sum(t, theta, kind)
    j = int(np.argmin(values))  # first occurrence: ties go to smaller theta
    best_theta, best = float(theta[j]), float(values[j])
    # A minimum on the outermost sample means the sum decreases toward an open
    # endpoint, where it tends to its (possibly zero) boundary value and
    # cancellation swamps the true value; the grid value is reported as is.
    refined = 0 < j < theta.size - 1
    if refined:
        x, fx = golden_section(lambda s: trig_sum(t, s, kind), float(theta[j - 1]), float(theta[j + 1]))
        if fx < best:
            best_theta, best = x, fx
    return PositivityResult(
        min_value=best,
        argmin_theta=best_theta,
        refined=refined,
        positive=best > 0,
        kind=kind,
        grid_count=grid.count,
    )
