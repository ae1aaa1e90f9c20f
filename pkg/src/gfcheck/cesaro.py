"""Generalized Cesaro means of type (b-1, c).

    s_n(z, f) = z + sum_{k=2}^{n} (B_{n-k} / B_{n-1}) a_k z^k,
    B_0 = 1,  B_k = ((1+b-c)/b) (b)_k / (c)_k.

b = 1 + delta, c = 1 gives the classical Cesaro mean of order delta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import CoefficientSequence

__all__ = [
    "CesaroParams",
    "weights",
    "weight_ratios",
    "cesaro_mean",
    "cesaro_polynomial",
    "classical_cesaro",
    "classical_cesaro_factorial",
]


@dataclass(frozen=True)
class CesaroParams:
    b: float
    c: float
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"n must be an integer >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if not (self.b + 1 > self.c > 0):
            raise DomainError(f"need b + 1 > c > 0, got b={self.b}, c={self.c}")

    @classmethod
    def classical(cls, delta: float, n: int) -> "CesaroParams":
        if not delta > -1:
            raise DomainError(f"delta must exceed -1, got {delta}")
        return cls(1.0 + delta, 1.0, n)

    @property
    def delta(self) -> float:
        return self.b - 1.0

    def to_dict(self) -> dict:
        return {"b": self.b, "c": self.c, "n": self.n}


def _require_positive(cp: CesaroParams):
    if cp.b <= 0 or cp.c <= 0:
        raise DomainError(f"weights need b > 0 and c > 0, got b={cp.b}, c={cp.c}")


def weights(cp: CesaroParams) -> np.ndarray:
    """B_0, ..., B_{n-1}."""
    _require_positive(cp)
    lead = (1 + cp.b - cp.c) / cp.b
    B = np.empty(cp.n)
    B[0] = 1.0
    ratio = 1.0
    for k in range(1, cp.n):
        ratio = ratio * (cp.b + (k - 1)) / (cp.c + (k - 1))
        B[k] = lead * ratio
    if not np.all(np.isfinite(B)):
        raise OverflowError("B_k leaves the double range; use weight_ratios")
    return B


def weight_ratios(cp: CesaroParams) -> np.ndarray:
    """r_k = B_{n-k} / B_{n-1} for k = 1..n (entry 0 is r_1 = 1).

    Built downward from r_1 = 1 with B_m / B_{m+1} = (c+m)/(b+m) for m >= 1
    and B_0 / B_1 = c/(1+b-c); no Pochhammer symbol is ever formed.
    """
    _require_positive(cp)
    b, c, n = cp.b, cp.c, cp.n
    r = np.empty(n)
    r[0] = 1.0
    for k in range(1, n - 1):
        m = n - k - 1
        r[k] = r[k - 1] * (c + m) / (b + m)
    r[n - 1] = r[n - 2] * c / (1 + b - c)
    return r


def cesaro_mean(f: CoefficientSequence, cp: CesaroParams) -> CoefficientSequence:
    """The n-th generalized Cesaro mean of f."""
    if f.degree < cp.n:
        raise DomainError(f"need at least n={cp.n} coefficients, got {f.degree}")
    out = weight_ratios(cp) * f.coeffs[: cp.n]
    return CoefficientSequence(out, normalized=f.normalized)


def cesaro_polynomial(cp: CesaroParams) -> CoefficientSequence:
    """s_n(z) itself, i.e. the mean of z/(1-z)."""
    return CoefficientSequence(weight_ratios(cp))


def classical_cesaro(f: CoefficientSequence, delta: float, n: int) -> CoefficientSequence:
    """Classical Cesaro mean of order delta, via the (1+delta, 1) weights."""
    return cesaro_mean(f, CesaroParams.classical(delta, n))


def classical_cesaro_factorial(f: CoefficientSequence, delta: float, n: int) -> CoefficientSequence:
    """Same mean from the factorial form

        (1+delta)_{n-k}/(n-k)! * (n-1)!/(1+delta)_{n-1},

    with P(m) = (1+delta)_m / m! accumulated as P(m) = P(m-1) (delta+m)/m.
    Kept independent of :func:`weight_ratios` for cross-checking.
    """
    if not delta > -1:
        raise DomainError(f"delta must exceed -1, got {delta}")
    if f.degree < n:
        raise DomainError(f"need at least n={n} coefficients, got {f.degree}")
    P = np.empty(n)
    P[0] = 1.0
    for m in range(1, n):
        P[m] = P[m - 1] * (delta + m) / m
    k = np.arange(1, n + 1)
    out = P[n - k] / P[n - 1] * f.coeffs[:n]
    return CoefficientSequence(out, normalized=f.normalized)
