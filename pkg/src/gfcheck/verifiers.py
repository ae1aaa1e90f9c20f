"""Sampled membership checks for the classical subclasses of univalent functions.

Each verifier evaluates the class-defining functional on a polar grid inside
the unit disk and reports the smallest margin above the class threshold.
This is sampled evidence, never a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, GridTooCoarseError
from .series import (
    CoefficientSequence,
    StarlikeCatalogEntry,
    catalog_entry,
    derivative,
    hadamard,
    horner,
    prestar_kernel,
)

__all__ = [
    "DiskGrid",
    "ClassReport",
    "DEFAULT_RADII",
    "DEFAULT_TOL",
    "ZERO_TOL",
    "functional_values",
    "verify_starlike",
    "verify_convex",
    "verify_close_to_convex",
    "verify_typically_real",
    "verify_prestarlike",
    "verify_R_gamma",
]

DEFAULT_RADII = (0.5, 0.9, 0.99, 0.999)
DEFAULT_TOL = 1e-9
ZERO_TOL = 1e-12
OVERSAMPLE = 8


@dataclass(frozen=True)
class DiskGrid:
    """Circles of the given radii, each sampled at ``angles`` equally spaced
    angles 2*pi*j/angles, j = 0..angles-1.

    ``angles=None`` picks max(1024, 8N) for a degree-N input.
    """

    radii: tuple[float, ...] = DEFAULT_RADII
    angles: int | None = None

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if not radii or any(not 0 < r < 1 for r in radii):
            raise DomainError(f"radii must lie in (0, 1), got {radii}")
        object.__setattr__(self, "radii", radii)
        if self.angles is not None and self.angles < 4:
            raise DomainError("need at least 4 angles")

    def angle_count(self, degree: int) -> int:
        if self.angles is None:
            return max(1024, OVERSAMPLE * degree)
        if self.angles < OVERSAMPLE * degree:
            raise GridTooCoarseError(
                f"{self.angles} angles cannot resolve degree {degree} (need >= {OVERSAMPLE * degree})"
            )
        return self.angles

    def points(self, degree: int) -> np.ndarray:
        """Sample points, shape (len(radii), M), radius-major.

        The lower half circle is the exact conjugate of the upper half, so
        real-coefficient inputs give bitwise symmetric values.
        """
        m = self.angle_count(degree)
        half = m // 2
        j = np.arange(half + 1)
        upper = np.exp(2j * np.pi * j / m)
        upper[0] = 1.0
        if m % 2 == 0:
            upper[half] = -1.0
        lower = np.conj(upper[1 : m - half][::-1])
        unit = np.concatenate([upper, lower])
        return np.asarray(self.radii)[:, None] * unit[None, :]

    def to_dict(self, degree: int | None = None) -> dict:
        angles = self.angles if degree is None else self.angle_count(degree)
        return {"radii": list(self.radii), "angles": angles}


@dataclass
class ClassReport:
    """Outcome of one sampled membership check.

    ``margin`` is min(functional) - threshold over the grid, or -inf when a
    denominator vanished at a sample (``zero_witness``).
    """

    class_name: str
    gamma: float
    margin: float
    witness: complex
    holds: bool
    tolerance: float = DEFAULT_TOL
    grid: dict = field(default_factory=dict)
    zero_witness: bool = False
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "class": self.class_name,
            "gamma": self.gamma,
            "holds": self.holds,
            "margin": self.margin if math.isfinite(self.margin) else None,
            "witness": {"re": self.witness.real, "im": self.witness.imag},
            "grid": self.grid,
            "tolerance": self.tolerance,
            "zero_witness": self.zero_witness,
        }
        if self.params:
            out["params"] = self.params
        return out


def _seq(f) -> CoefficientSequence:
    if isinstance(f, CoefficientSequence):
        return f
    return CoefficientSequence(f, normalized=False)


def _second_derivative(f: CoefficientSequence) -> np.ndarray:
    d = derivative(f)
    return d[1:] * np.arange(1, d.size)


def _starlike_parts(f: CoefficientSequence, z):
    # zf'/f = f'(z) / (f(z)/z): the removable singularity at 0 never appears
    fp = horner(derivative(f), z)
    f_over_z = horner(f.coeffs, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = fp / np.where(f_over_z == 0, np.nan, f_over_z)
    return q, np.abs(z * f_over_z)


def _convex_parts(f: CoefficientSequence, z):
    fp = horner(derivative(f), z)
    fpp = horner(_second_derivative(f), z)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = 1.0 + z * fpp / np.where(fp == 0, np.nan, fp)
    return q, np.abs(fp)


def functional_values(f, z, which: str) -> np.ndarray:
    """Real part of a class functional at the points z.

    which: 'starlike' Re(zf'/f), 'convex' Re(1 + zf''/f'), 'rgamma' Re f'.
    """
    f = _seq(f)
    z = np.asarray(z, dtype=complex)
    if which == "starlike":
        return _starlike_parts(f, z)[0].real
    if which == "convex":
        return _convex_parts(f, z)[0].real
    if which == "rgamma":
        return horner(derivative(f), z).real
    raise DomainError(f"unknown functional {which!r}")


def _reduce(name, threshold, values, denom_abs, z, grid, degree, tol, params=None) -> ClassReport:
    """Deterministic min-reduction; ties go to the smaller radius, then angle."""
    values = np.asarray(values, dtype=float).ravel()
    z = np.asarray(z).ravel()
    zeros = np.flatnonzero(denom_abs.ravel() < ZERO_TOL) if denom_abs is not None else np.array([], int)
    gd = grid.to_dict(degree)
    if zeros.size:
        w = complex(z[zeros[0]])
        return ClassReport(name, threshold, -math.inf, w, False, tol, gd, True, params or {})
    values = np.where(np.isnan(values), -np.inf, values)
    i = int(np.argmin(values))
    margin = float(values[i] - threshold)
    return ClassReport(name, threshold, margin, complex(z[i]), margin > -tol, tol, gd, False, params or {})


def _check_order(gamma, upper=1.0):
    if not gamma < upper:
        raise DomainError(f"order must be < {upper}, got {gamma}")


def verify_starlike(f, gamma: float = 0.0, grid: DiskGrid | None = None, tol: float = DEFAULT_TOL) -> ClassReport:
    """min over the grid of Re(zf'/f) - gamma.

    A sampled zero of f disqualifies the input: starlike functions do not
    vanish on the punctured disk.
    """
    f = _seq(f)
    grid = grid or DiskGrid()
    z = grid.points(f.degree)
    q, fabs = _starlike_parts(f, z)
    return _reduce("starlike", gamma, q.real, fabs, z, grid, f.degree, tol)


def verify_convex(f, gamma: float = 0.0, grid: DiskGrid | None = None, tol: float = DEFAULT_TOL) -> ClassReport:
    """min over the grid of Re(1 + zf''/f') - gamma; zeros of f' disqualify."""
    f = _seq(f)
    grid = grid or DiskGrid()
    z = grid.points(f.degree)
    q, fpabs = _convex_parts(f, z)
    return _reduce("convex", gamma, q.real, fpabs, z, grid, f.degree, tol)


def verify_close_to_convex(
    f,
    g="z/(1-z)",
    eta: float = 0.0,
    mu_order: float = 0.0,
    grid: DiskGrid | None = None,
    tol: float = DEFAULT_TOL,
) -> ClassReport:
    """min over the grid of Re[e^{i eta}(zf'/g - mu_order)].

    ``g`` is a catalog name, a :class:`StarlikeCatalogEntry` (evaluated in
    closed form), or a coefficient sequence (evaluated as a polynomial).
    """
    if abs(eta) >= math.pi / 2:
        raise DomainError(f"eta must satisfy |eta| < pi/2, got {eta}")
    f = _seq(f)
    grid = grid or DiskGrid()
    z = grid.points(f.degree)
    fp = horner(derivative(f), z)
    if isinstance(g, str):
        g = catalog_entry(g)
    if isinstance(g, StarlikeCatalogEntry):
        # zf'/g = f'(z) D(z) with g = z/D; catalog g never vanishes off 0
        ratio = fp * horner(np.asarray(g.denominator, dtype=float), z)
        gabs = None
        gname = g.name
    else:
        g = _seq(g)
        g_over_z = horner(g.coeffs, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = fp / np.where(g_over_z == 0, np.nan, g_over_z)
        gabs = np.abs(z * g_over_z)
        gname = "custom"
    values = (np.exp(1j * eta) * (ratio - mu_order)).real
    report = _reduce("close-to-convex", 0.0, values, gabs, z, grid, f.degree, tol, {"g": gname, "eta": eta})
    report.gamma = mu_order
    return report


def verify_typically_real(f, grid: DiskGrid | None = None, tol: float = DEFAULT_TOL) -> ClassReport:
    """min over off-axis grid points of Im f(z) * sign(Im z)."""
    f = _seq(f)
    grid = grid or DiskGrid()
    z = grid.points(f.degree)
    m = z.shape[1]
    off_axis = np.ones(m, dtype=bool)
    off_axis[0] = False
    if m % 2 == 0:
        off_axis[m // 2] = False
    z = z[:, off_axis]
    values = (horner(f.coeffs, z) * z).imag * np.sign(z.imag)
    return _reduce("typically-real", 0.0, values, None, z, grid, f.degree, tol)


def verify_prestarlike(f, gamma: float = 0.0, grid: DiskGrid | None = None, tol: float = DEFAULT_TOL) -> ClassReport:
    """Starlikeness of order gamma of f * z/(1-z)^(2-2 gamma)."""
    f = _seq(f)
    kernel = prestar_kernel(gamma, f.degree)
    report = verify_starlike(hadamard(f, kernel), gamma, grid, tol)
    report.class_name = "prestarlike"
    return report


def verify_R_gamma(f, gamma: float = 0.0, grid: DiskGrid | None = None, tol: float = DEFAULT_TOL) -> ClassReport:
    """min over the grid of Re f'(z) - gamma."""
    _check_order(gamma)
    f = _seq(f)
    grid = grid or DiskGrid()
    z = grid.points(f.degree)
    values = horner(derivative(f), z).real
    return _reduce("R(gamma)", gamma, values, None, z, grid, f.degree, tol)
