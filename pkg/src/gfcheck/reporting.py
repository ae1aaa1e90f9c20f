"""Run configuration, run summaries and deterministic JSON/CSV output."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import DomainError

__all__ = [
    "SCHEMA",
    "TASKS",
    "ConfigError",
    "ExperimentConfig",
    "RunSummary",
    "clean",
    "dumps",
    "rows_to_csv",
]

SCHEMA = 1
TASKS = ("check", "verify", "scan", "cesaro", "reproduce", "curve")
VERIFY_CLASSES = ("starlike", "convex", "close-to-convex", "typically-real", "prestarlike", "rgamma")
FUNCTIONALS = ("starlike", "convex", "rgamma")
VERDICTS = ("theorem-consistent", "inconsistent", "n/a")


class ConfigError(DomainError):
    """Invalid or unknown configuration entry (exit code 1)."""


@dataclass
class ExperimentConfig:
    """Everything a run needs; the JSON config file mirrors these fields."""

    task: str
    theorem: str | None = None
    verify_class: str | None = None
    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 1.0
    mu: float = 0.0
    gamma: float | None = None
    b: float | None = None
    c: float | None = None
    n: int | None = None
    delta: float | None = None
    coeffs: list[float] | None = None
    input_path: str | None = None
    generator: str | None = None
    truncate: int = 200
    grid_radii: list[float] | None = None
    grid_angles: int | None = None
    tol: float = 1e-9
    theta_count: int | None = None
    kind: str = "both"
    trig_b0: float | None = None
    seed: int = 0
    proof_ranges: bool = False
    cross_verify: bool = False
    suite: str = "all"
    functional: str = "starlike"
    radius: float = 0.99
    curve_angles: int = 360
    g: str = "z/(1-z)"
    eta: float = 0.0
    mu_order: float = 0.0
    format: str = "json"

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {unknown}")
        if "task" not in data:
            raise ConfigError("config needs a 'task'")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self) -> "ExperimentConfig":
        def number(name, integer=False, optional=True):
            v = getattr(self, name)
            if v is None and optional:
                return
            ok = isinstance(v, int) if integer else isinstance(v, (int, float))
            if isinstance(v, bool) or not ok or (not integer and not math.isfinite(v)):
                raise ConfigError(f"{name} must be {'an integer' if integer else 'a finite number'}, got {v!r}")

        if self.task not in TASKS:
            raise ConfigError(f"task must be one of {TASKS}, got {self.task!r}")
        for name in ("alpha", "beta", "lam", "mu", "tol", "radius", "eta", "mu_order"):
            number(name, optional=False)
        for name in ("gamma", "b", "c", "delta", "trig_b0"):
            number(name)
        for name in ("n", "grid_angles", "theta_count"):
            number(name, integer=True)
        for name in ("truncate", "seed", "curve_angles"):
            number(name, integer=True, optional=False)
        if self.truncate < 1:
            raise ConfigError("truncate must be positive")
        if self.tol <= 0:
            raise ConfigError("tol must be positive")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {self.format!r}")
        if self.kind not in ("cosine", "sine", "both"):
            raise ConfigError(f"kind must be cosine, sine or both, got {self.kind!r}")
        if sum(x is not None for x in (self.coeffs, self.input_path, self.generator)) > 1:
            raise ConfigError("give at most one of coeffs, input_path, generator")
        if self.coeffs is not None and (
            not isinstance(self.coeffs, list) or not all(isinstance(x, (int, float)) for x in self.coeffs)
        ):
            raise ConfigError("coeffs must be a list of numbers")
        if self.grid_radii is not None and (
            not isinstance(self.grid_radii, list) or not all(isinstance(r, (int, float)) for r in self.grid_radii)
        ):
            raise ConfigError("grid_radii must be a list of numbers")
        if self.delta is not None and self.b is not None:
            raise ConfigError("give either delta or b (with c), not both")
        if self.verify_class is not None and self.verify_class not in VERIFY_CLASSES:
            raise ConfigError(f"verify_class must be one of {VERIFY_CLASSES}")
        if self.functional not in FUNCTIONALS:
            raise ConfigError(f"functional must be one of {FUNCTIONALS}")
        if not 0 < self.radius < 1:
            raise ConfigError("radius must lie in (0, 1)")
        if self.task == "check" and self.theorem is None:
            raise ConfigError("check needs a theorem id")
        if self.task == "verify" and self.verify_class is None:
            raise ConfigError("verify needs a class")
        return self

    def to_dict(self) -> dict:
        return {k: v for k, v in dataclasses.asdict(self).items() if v is not None}


@dataclass
class RunSummary:
    config: dict
    result: Any
    verdict: str = "n/a"
    passed: bool = True
    wall_time: float | None = None
    timestamp: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def stamp(self, started: float, with_time: bool = True) -> "RunSummary":
        if with_time:
            self.wall_time = time.perf_counter() - started
            self.timestamp = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
        return self

    def to_dict(self) -> dict:
        out = {
            "schema": SCHEMA,
            "config": self.config,
            "result": self.result,
            "consistency": self.verdict,
            "passed": self.passed,
        }
        out.update(self.extra)
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out


def clean(obj):
    """JSON-safe copy: numpy scalars to Python, non-finite floats to None."""
    if hasattr(obj, "to_dict"):
        return clean(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [clean(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, complex):
        return {"re": clean(obj.real), "im": clean(obj.imag)}
    return obj


def dumps(obj) -> str:
    # repr-based float formatting in json round-trips exactly
    return json.dumps(clean(obj), indent=2, allow_nan=False) + "\n"


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in row])
    return buf.getvalue()
