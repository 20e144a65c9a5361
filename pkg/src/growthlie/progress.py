"""One-parameter technical-progress families and numerical checks on them.

A family maps factor inputs to effective inputs, ``T_t(K, L) = (phi(K, L, t),
psi(K, L, t))``. A Lie-type family is a one-parameter transformation group:

    T_t o T_s = T_{t+s},   T_t^{-1} = T_{-t},   T_0 = identity,

and ``(phi, psi)`` must be independent in ``(K, L)`` (nonzero Jacobian).

A production function ``f`` is holothetic under ``T`` when progress acts only
as a relabeling of output, ``f(T_t(p)) = F_t(f(p))`` with ``F_t`` strictly
monotone in ``t``. Numerically this means: points sharing an isoquant keep
sharing one after the transformation, and the transformed level moves
strictly monotonically with ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence, Union

from .errors import DomainError, PreconditionError
from .model import CobbDouglasParams, FactorPoint

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ExpProgressFamily:
    """Uniform exponential progress ``T_t(K, L) = (exp(lam*t) K, exp(lam*t) L)``."""

    lam: float

    def __post_init__(self):
        if not math.isfinite(self.lam):
            raise DomainError(f"lambda must be finite, got {self.lam!r}")

    def maps(self, capital: float, labor: float, t: float) -> tuple[float, float]:
        if t == 0:
            return capital, labor
        g = math.exp(self.lam * t)
        return g * capital, g * labor


@dataclass(frozen=True)
class GeneralProgressFamily:
    """A family given by two callables ``phi(K, L, t)`` and ``psi(K, L, t)``.

    The callables must be pure; they may be invoked concurrently.
    """

    phi: Callable[[float, float, float], float]
    psi: Callable[[float, float, float], float]

    def maps(self, capital: float, labor: float, t: float) -> tuple[float, float]:
        return self.phi(capital, labor, t), self.psi(capital, labor, t)


ProgressFamily = Union[ExpProgressFamily, GeneralProgressFamily]


def _checked_maps(family: ProgressFamily, capital: float, labor: float, t: float) -> tuple[float, float]:
    k, l = family.maps(capital, labor, t)
    for name, value in (("phi", k), ("psi", l)):
        if not (math.isfinite(value) and value > 0):
            raise DomainError(
                f"{name}(K={capital!r}, L={labor!r}, t={t!r}) = {value!r} is not positive and finite"
            )
    return float(k), float(l)


def apply(family: ProgressFamily, t: float, point: FactorPoint) -> FactorPoint:
    """Effective inputs ``T_t(point)``."""
    k, l = _checked_maps(family, point.capital, point.labor, t)
    return FactorPoint(k, l)


def _fd_step(x: float) -> float:
    h = max(1e-6, 1e-6 * abs(x))
    # Keep x - h inside the positive orthant for tiny magnitudes.
    return h if h < x else 0.5 * x


def jacobian_det(family: ProgressFamily, t: float, point: FactorPoint) -> float:
    """Determinant of ``d(phi, psi)/d(K, L)`` at ``(point, t)`` by central differences."""
    k, l = point.capital, point.labor
    hk, hl = _fd_step(k), _fd_step(l)
    phi_kp, psi_kp = _checked_maps(family, k + hk, l, t)
    phi_km, psi_km = _checked_maps(family, k - hk, l, t)
    phi_lp, psi_lp = _checked_maps(family, k, l + hl, t)
    phi_lm, psi_lm = _checked_maps(family, k, l - hl, t)
    dphi_dk = (phi_kp - phi_km) / (2 * hk)
    dpsi_dk = (psi_kp - psi_km) / (2 * hk)
    dphi_dl = (phi_lp - phi_lm) / (2 * hl)
    dpsi_dl = (psi_lp - psi_lm) / (2 * hl)
    return dphi_dk * dpsi_dl - dphi_dl * dpsi_dk


def _rel_err(got: FactorPoint, want: FactorPoint) -> float:
    return max(
        abs(got.capital - want.capital) / abs(want.capital),
        abs(got.labor - want.labor) / abs(want.labor),
    )


@dataclass(frozen=True)
class AxiomReport:
    composition_max_err: float
    identity_max_err: float
    inverse_max_err: float
    independence_min_absdet: float
    passed: bool
    tol: float = DEFAULT_TOL

    def as_dict(self) -> dict:
        return {
            "composition_max_err": self.composition_max_err,
            "identity_max_err": self.identity_max_err,
            "inverse_max_err": self.inverse_max_err,
            "independence_min_absdet": self.independence_min_absdet,
            "passed": self.passed,
            "tol": self.tol,
        }


def check_group_axioms(
    family: ProgressFamily,
    t_samples: Sequence[float],
    points: Sequence[FactorPoint],
    tol: float = DEFAULT_TOL,
) -> AxiomReport:
    """Check the group axioms and factor independence on a finite sample.

    Composition is checked for every ordered pair drawn from ``t_samples``
    (including a value paired with itself); identity at every point; inverse
    for every sampled ``t``. Errors are componentwise relative errors. The
    result only speaks for the sampled grid.
    """
    if len(t_samples) < 2:
        raise PreconditionError("need at least two t values")
    if not points:
        raise PreconditionError("need at least one sample point")

    comp = ident = inv = 0.0
    min_det = math.inf
    for p in points:
        ident = max(ident, _rel_err(apply(family, 0.0, p), p))
        for t, s in product(t_samples, repeat=2):
            composed = apply(family, t, apply(family, s, p))
            comp = max(comp, _rel_err(composed, apply(family, t + s, p)))
        for t in t_samples:
            inv = max(inv, _rel_err(apply(family, -t, apply(family, t, p)), p))
            min_det = min(min_det, abs(jacobian_det(family, t, p)))

    passed = comp <= tol and ident <= tol and inv <= tol and min_det > 0
    return AxiomReport(comp, ident, inv, min_det, passed, tol)


def scale_factor(params: CobbDouglasParams, family: ExpProgressFamily, t: float) -> float:
    """Output relabeling ``F_t`` of a Cobb-Douglas function under uniform progress.

    Homogeneity of degree ``alpha + beta`` gives
    ``f(exp(lam*t) K, exp(lam*t) L) = exp(lam*(alpha+beta)*t) f(K, L)``.
    The factor reduces to ``exp(lam*t)`` only under constant returns.
    """
    return math.exp(family.lam * params.returns_to_scale * t)


@dataclass(frozen=True)
class HolotheticityReport:
    max_isoquant_spread: float
    monotone_in_t: bool
    holothetic: bool
    levels: tuple[float, ...] = ()
    tol: float = DEFAULT_TOL

    def as_dict(self) -> dict:
        return {
            "max_isoquant_spread": self.max_isoquant_spread,
            "monotone_in_t": self.monotone_in_t,
            "holothetic": self.holothetic,
            "levels": list(self.levels),
            "tol": self.tol,
        }


def _spread(values: Sequence[float]) -> float:
    lo = min(values)
    return (max(values) - lo) / lo


def _strictly_monotone(values: Sequence[float]) -> bool:
    steps = [b - a for a, b in zip(values, values[1:])]
    return all(d > 0 for d in steps) or all(d < 0 for d in steps)


def check_holothetic(
    f: Callable[[FactorPoint], float],
    family: ProgressFamily,
    t_samples: Sequence[float],
    isoquant: Sequence[FactorPoint],
    tol: float = DEFAULT_TOL,
) -> HolotheticityReport:
    """Decide holotheticity of ``f`` under ``family`` on a sampled isoquant.

    For each ``t`` the isoquant is pushed through ``T_t`` and ``f`` is
    evaluated at the images. If the images still lie on one level set
    (relative spread within ``tol``) a relabeling ``F_t`` exists on the
    sample. The per-``t`` mean level must also be strictly monotone in ``t``.
    """
    if len(t_samples) < 2:
        raise PreconditionError("need at least two t values")
    if any(b <= a for a, b in zip(t_samples, t_samples[1:])):
        raise PreconditionError("t_samples must be strictly increasing")
    if 0 not in t_samples:
        raise PreconditionError("t_samples must contain 0")
    if len(isoquant) < 2:
        raise PreconditionError("need at least two isoquant points")

    base_spread = _spread([f(p) for p in isoquant])
    if base_spread > tol:
        raise PreconditionError(
            f"input points are not on a common isoquant: relative spread {base_spread:.3e} > tol {tol:.1e}"
        )

    max_spread = 0.0
    levels = []
    for t in t_samples:
        values = [f(apply(family, t, p)) for p in isoquant]
        max_spread = max(max_spread, _spread(values))
        levels.append(math.fsum(values) / len(values))

    monotone = _strictly_monotone(levels)
    return HolotheticityReport(
        max_isoquant_spread=max_spread,
        monotone_in_t=monotone,
        holothetic=max_spread <= tol and monotone,
        levels=tuple(levels),
        tol=tol,
    )
