"""Perpetual-inventory capital stock.

Each year's stock is last year's stock plus gross investment, less
depreciation on the old stock and on half of the new investment (investment
is assumed to arrive evenly through the year)::

    K(t) = K(t-1) + I(t) - sigma * (I(t)/2 + K(t-1))
         = (1 - sigma) * K(t-1) + (1 - sigma/2) * I(t)

All series are taken as already deflated; no price adjustment is made.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateCapitalError, DomainError, PreconditionError, ValidationError


@dataclass(frozen=True)
class CapitalConfig:
    initial_capital: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.initial_capital) and self.initial_capital > 0):
            raise ValidationError(f"initial_capital must be positive, got {self.initial_capital!r}")
        _check_sigma(self.sigma)


@dataclass(frozen=True)
class CapitalSeries:
    base_year: int
    values: tuple[float, ...]

    @property
    def years(self) -> list[int]:
        return list(range(self.base_year, self.base_year + len(self.values)))

    def as_mapping(self) -> dict[int, float]:
        return dict(zip(self.years, self.values))


def _check_sigma(sigma: float) -> None:
    if not (0.0 <= sigma <= 1.0):
        raise ValidationError(f"depreciation rate must lie in [0, 1], got {sigma!r}")


def step(k_prev: float, investment: float, sigma: float) -> float:
    """One year of accumulation: ``(1 - sigma) * k_prev + (1 - sigma/2) * investment``."""
    return (1.0 - sigma) * k_prev + (1.0 - 0.5 * sigma) * investment


def build_series(config: CapitalConfig, base_year: int, investments: Sequence[float]) -> CapitalSeries:
    """Fold `step` over ``investments``, seeded with ``config.initial_capital``.

    ``values[0]`` is the stock at ``base_year`` after that year's investment.
    """
    if len(investments) == 0:
        raise PreconditionError("investment series is empty")
    values = []
    k = config.initial_capital
    for offset, inv in enumerate(investments):
        year = base_year + offset
        if not (math.isfinite(inv) and inv >= 0):
            raise DomainError(f"investment in {year} must be nonnegative and finite, got {inv!r}")
        k = step(k, inv, config.sigma)
        if not k > 0:
            raise DegenerateCapitalError(f"capital stock is not positive in {year}: {k!r}")
        values.append(k)
    return CapitalSeries(base_year, tuple(values))


def steady_state_seed(first_investment: float, growth: float, sigma: float) -> float:
    """Heuristic starting stock ``I_0 / (g + sigma)``.

    Exact only if investment had been growing at rate ``g`` forever; use it
    when no benchmark stock is available and say so in reports.
    """
    _check_sigma(sigma)
    if not first_investment > 0:
        raise DomainError(f"steady-state seed needs positive first investment, got {first_investment!r}")
    denom = growth + sigma
    if not denom > 0:
        raise ValidationError(f"growth + sigma must be positive for a steady-state seed, got {denom!r}")
    return first_investment / denom
