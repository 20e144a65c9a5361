"""Cobb-Douglas production and GDP functions.

Output is evaluated in log space::

    ln Y = ln a + alpha * ln K + beta * ln L + gamma * t

and exponentiated once, so large factor magnitudes do not overflow in the
intermediate powers. Units are passed through untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError, UnsupportedGeometryError, ValidationError

# Largest argument for which math.exp stays finite.
_MAX_LOG = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class CobbDouglasParams:
    """Parameters of ``GDP(t) = a * exp(gamma*t) * K**alpha * L**beta``.

    ``gamma`` defaults to 0, which gives the plain production function.
    """

    a: float
    alpha: float
    beta: float
    gamma: float = 0.0

    def __post_init__(self):
        for name in ("a", "alpha", "beta", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
        if self.a <= 0:
            raise ValidationError(f"a must be positive, got {self.a!r}")
        if self.alpha < 0 or self.beta < 0:
            raise ValidationError(
                f"elasticities must be nonnegative, got alpha={self.alpha!r}, beta={self.beta!r}"
            )
        if self.alpha + self.beta <= 0:
            raise ValidationError("alpha + beta must be positive (constant function rejected)")

    @classmethod
    def from_estimate(cls, a: float, alpha: float, beta: float, gamma: float) -> "CobbDouglasParams":
        """Build from regression output without the sign checks.

        Least squares can return a negative elasticity; that is a result to
        report, not an input error. Finiteness and ``a > 0`` still hold.
        """
        for name, value in (("a", a), ("alpha", alpha), ("beta", beta), ("gamma", gamma)):
            if not math.isfinite(value):
                raise RangeError(f"estimated {name} is not finite: {value!r}")
        if not a > 0:
            raise RangeError(f"estimated a is not positive: {a!r}")
        obj = object.__new__(cls)
        for name, value in (("a", a), ("alpha", alpha), ("beta", beta), ("gamma", gamma)):
            object.__setattr__(obj, name, value)
        return obj

    @property
    def admissible(self) -> bool:
        """True when the elasticities are nonnegative with a positive sum."""
        return self.alpha >= 0 and self.beta >= 0 and self.alpha + self.beta > 0

    @property
    def returns_to_scale(self) -> float:
        return self.alpha + self.beta

    def as_dict(self) -> dict:
        return {"a": self.a, "alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}


@dataclass(frozen=True)
class FactorPoint:
    capital: float
    labor: float

    def __post_init__(self):
        for name in ("capital", "labor"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")


ROMANIA_MODEL_1 = CobbDouglasParams(a=0.021, alpha=0.3564, beta=0.7783, gamma=0.0105)
VIETNAM_1995_2018 = CobbDouglasParams(a=0.000005, alpha=0.103, beta=2.335, gamma=0.053)


def log_output(params: CobbDouglasParams, point: FactorPoint, t: float = 0.0) -> float:
    """Natural log of GDP at time ``t``; ``t=0`` gives ln of the production function."""
    base = math.log(params.a) + params.alpha * math.log(point.capital) + params.beta * math.log(point.labor)
    if t == 0:
        return base
    return base + params.gamma * t


def _exp_checked(log_value: float) -> float:
    if not log_value <= _MAX_LOG:
        raise RangeError(f"output overflows: ln(output) = {log_value!r} exceeds {_MAX_LOG:.6g}")
    return math.exp(log_value)


def eval_production(params: CobbDouglasParams, point: FactorPoint) -> float:
    """``a * K**alpha * L**beta``."""
    return _exp_checked(log_output(params, point))


def eval_gdp(params: CobbDouglasParams, t: float, point: FactorPoint) -> float:
    """``a * exp(gamma*t) * K**alpha * L**beta``; identical to `eval_production` at ``t=0``."""
    if not math.isfinite(t):
        raise DomainError(f"t must be finite, got {t!r}")
    return _exp_checked(log_output(params, point, t))


def isoquant_points(
    params: CobbDouglasParams,
    level: float,
    n: int,
    labor_range: tuple[float, float],
) -> list[FactorPoint]:
    """Sample ``n`` points on the isoquant ``a * K**alpha * L**beta = level``.

    Labor values are geometrically spaced over ``labor_range`` (endpoints
    included) and capital is solved in closed form,
    ``K = (level / (a * L**beta)) ** (1/alpha)``.
    """
    if params.alpha <= 0:
        raise UnsupportedGeometryError("alpha = 0: capital cannot be solved along an isoquant")
    if not (math.isfinite(level) and level > 0):
        raise DomainError(f"level must be positive, got {level!r}")
    if n < 2:
        raise ValidationError(f"need n >= 2 isoquant points, got {n}")
    lo, hi = labor_range
    if not (0 < lo and math.isfinite(hi) and lo <= hi):
        raise DomainError(f"labor_range must be a positive interval, got {labor_range!r}")

    labors = np.geomspace(lo, hi, n)
    # Pin the endpoints; geomspace may perturb them in the last ulp.
    labors[0], labors[-1] = lo, hi
    log_rest = math.log(level) - math.log(params.a)
    points = []
    for labor in labors:
        log_k = (log_rest - params.beta * math.log(labor)) / params.alpha
        points.append(FactorPoint(_exp_checked(log_k), float(labor)))
    return points
