"""Truncated power series f(z) = a_1 z + a_2 z^2 + ... + a_N z^N on the unit disk.

Coefficients are stored densely from k = 1; there is never a constant term.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, PoleError

__all__ = [
    "CoefficientSequence",
    "StarlikeCatalogEntry",
    "STARLIKE_CATALOG",
    "pochhammer",
    "pochhammer_ratio",
    "horner",
    "evaluate",
    "derivative",
    "integrate",
    "hadamard",
    "prestar_kernel",
    "alexander",
    "standard_starlike",
    "catalog_entry",
    "parse_coefficients",
    "read_coefficients",
]


@dataclass(frozen=True, eq=False)
class CoefficientSequence:
    """Taylor coefficients a_1..a_N of a normalized analytic function.

    ``coeffs[0]`` is a_1. With ``normalized=True`` (the default) a_1 must be
    exactly 1; pass ``normalized=False`` for purely algebraic manipulations.
    """

    coeffs: np.ndarray
    normalized: bool = field(default=True, repr=False)

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float).reshape(-1)
        if arr.size < 1:
            raise DomainError("a coefficient sequence needs at least a_1")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        if self.normalized and arr[0] != 1.0:
            raise DomainError(f"normalization requires a_1 = 1, got {arr[0]!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return int(self.coeffs.size)

    def __len__(self) -> int:
        return self.degree

    def a(self, k: int) -> float:
        """Coefficient a_k with 1-based k; zero beyond the truncation degree."""
        if k < 1:
            raise IndexError("coefficients are indexed from k = 1")
        return float(self.coeffs[k - 1]) if k <= self.degree else 0.0

    def truncate(self, n: int) -> "CoefficientSequence":
        return CoefficientSequence(self.coeffs[:n], normalized=self.normalized)

    def is_positive(self) -> bool:
        return bool(np.all(self.coeffs > 0))

    def tolist(self) -> list[float]:
        return [float(x) for x in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, CoefficientSequence):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        head = ", ".join(f"{x:.6g}" for x in self.coeffs[:6])
        more = ", ..." if self.degree > 6 else ""
        return f"CoefficientSequence([{head}{more}], N={self.degree})"


def _as_sequence(f) -> CoefficientSequence:
    if isinstance(f, CoefficientSequence):
        return f
    return CoefficientSequence(f, normalized=False)


def pochhammer(x: float, k: int) -> float:
    """Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.

    Raises OverflowError rather than returning inf; use
    :func:`pochhammer_ratio` when only a quotient is needed.
    """
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    out = 1.0
    for j in range(k):
        out *= x + j
        if math.isinf(out):
            raise OverflowError(f"({x})_{k} exceeds the double range at factor {j}")
    return out


def pochhammer_ratio(x: float, y: float, k: int) -> float:
    """(x)_k / (y)_k accumulated one factor pair at a time."""
    if k < 0:
        raise DomainError("k must be a nonnegative integer")
    out = 1.0
    for j in range(k):
        d = y + j
        if d == 0:
            raise PoleError(f"(y)_k has a zero factor at j={j} (y={y})")
        # multiply before dividing: telescoping integer ratios then stay exact
        out = out * (x + j) / d
    return out


def horner(c: np.ndarray, z):
    """Evaluate c[0] + c[1] z + ... + c[m] z^m; works elementwise on arrays."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for ck in c[::-1]:
        acc = acc * z + ck
    return acc


def evaluate(f, z):
    """f(z) = sum_k a_k z^k by Horner's rule."""
    f = _as_sequence(f)
    out = horner(f.coeffs, z) * np.asarray(z, dtype=complex)
    return complex(out) if out.ndim == 0 else out


def derivative(f) -> np.ndarray:
    """Coefficients of f' indexed from z^0: entry k is (k+1) a_{k+1}."""
    f = _as_sequence(f)
    return f.coeffs * np.arange(1, f.degree + 1)


def integrate(d: Sequence[float], normalized: bool = False) -> CoefficientSequence:
    """Inverse of :func:`derivative`: a_k = d_{k-1} / k."""
    d = np.asarray(d, dtype=float)
    return CoefficientSequence(d / np.arange(1, d.size + 1), normalized=normalized)


def hadamard(f, g) -> CoefficientSequence:
    """Coefficientwise (Hadamard) product, truncated to the shorter series."""
    f, g = _as_sequence(f), _as_sequence(g)
    n = min(f.degree, g.degree)
    out = f.coeffs[:n] * g.coeffs[:n]
    return CoefficientSequence(out, normalized=bool(out[0] == 1.0))


def prestar_kernel(gamma: float, n: int) -> CoefficientSequence:
    """Coefficients of z/(1-z)^(2-2*gamma): c_k = (2-2*gamma)_{k-1} / (k-1)!."""
    if not 0 <= gamma < 1:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma}")
    if n < 1:
        raise DomainError("degree must be positive")
    c = np.empty(n)
    c[0] = 1.0
    for k in range(1, n):
        c[k] = c[k - 1] * (k + 1 - 2 * gamma) / k
    return CoefficientSequence(c)


def alexander(f) -> CoefficientSequence:
    """zf'(z) read coefficientwise: a_k -> k a_k."""
    f = _as_sequence(f)
    return CoefficientSequence(derivative(f), normalized=f.normalized)


# -- the nine starlike functions with integer coefficients -------------------


@dataclass(frozen=True)
class StarlikeCatalogEntry:
    """One of the nine integer-coefficient starlike functions.

    ``rule`` maps k to the integer a_k; ``denominator`` is the polynomial D
    with g(z) = z / D(z), given by its coefficients from z^0 upward.
    """

    name: str
    rule: Callable[[int], int]
    denominator: tuple[int, ...]

    def coefficients(self, n: int) -> CoefficientSequence:
        return CoefficientSequence([self.rule(k) for k in range(1, n + 1)])

    def over_z(self, z):
        """g(z)/z = 1/D(z), evaluated in closed form (no truncation)."""
        return 1.0 / horner(np.asarray(self.denominator, dtype=float), z)

    def __call__(self, z):
        return np.asarray(z, dtype=complex) * self.over_z(z)


def _period(pattern):
    return lambda k: pattern[(k - 1) % len(pattern)]


STARLIKE_CATALOG: dict[str, StarlikeCatalogEntry] = {
    e.name: e
    for e in [
        StarlikeCatalogEntry("z", lambda k: int(k == 1), (1,)),
        StarlikeCatalogEntry("z/(1-z)", lambda k: 1, (1, -1)),
        StarlikeCatalogEntry("z/(1+z)", lambda k: (-1) ** (k - 1), (1, 1)),
        StarlikeCatalogEntry("z/(1-z^2)", lambda k: k % 2, (1, 0, -1)),
        StarlikeCatalogEntry("z/(1+z^2)", _period((1, 0, -1, 0)), (1, 0, 1)),
        StarlikeCatalogEntry("z/(1-z)^2", lambda k: k, (1, -2, 1)),
        StarlikeCatalogEntry("z/(1+z)^2", lambda k: (-1) ** (k - 1) * k, (1, 2, 1)),
        StarlikeCatalogEntry("z/(1-z+z^2)", _period((1, 1, 0, -1, -1, 0)), (1, -1, 1)),
        StarlikeCatalogEntry("z/(1+z+z^2)", _period((1, -1, 0)), (1, 1, 1)),
    ]
}

_ALIASES = {
    "identity": "z",
    "koebe": "z/(1-z)^2",
    "half-plane": "z/(1-z)",
}


def catalog_entry(name: str) -> StarlikeCatalogEntry:
    key = _ALIASES.get(name, name).replace(" ", "").replace("**", "^").replace("−", "-").replace("²", "^2")
    try:
        return STARLIKE_CATALOG[key]
    except KeyError:
        raise KeyError(
            f"unknown starlike function {name!r}; choose from {sorted(STARLIKE_CATALOG)}"
        ) from None


def standard_starlike(name: str, n: int) -> CoefficientSequence:
    """Exact integer coefficients of a catalog function up to degree n."""
    return catalog_entry(name).coefficients(n)


# -- I/O ----------------------------------------------------------------------


def parse_coefficients(text: str, normalized: bool = True) -> CoefficientSequence:
    """Read a JSON array ``[a1, a2, ...]`` or CSV (one value per line,
    optionally ``k,a_k`` pairs with an optional header)."""
    text = text.strip()
    if text.startswith("["):
        return CoefficientSequence(json.loads(text), normalized=normalized)
    values = []
    for row in csv.reader(io.StringIO(text)):
        row = [c.strip() for c in row if c.strip()]
        if not row:
            continue
        try:
            values.append(float(row[-1]))
        except ValueError:
            if values:
                raise DomainError(f"unparseable coefficient row {row!r}") from None
            # header line
    return CoefficientSequence(values, normalized=normalized)


def read_coefficients(path, normalized: bool = True) -> CoefficientSequence:
    return parse_coefficients(Path(path).read_text(), normalized=normalized)
