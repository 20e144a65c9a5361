"""Contribution shares and fitted-path reporting."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .estimate import Panel
from .model import CobbDouglasParams, FactorPoint, eval_gdp, log_output


class ExtrapolationWarning(UserWarning):
    """A forecast was requested before the start of the fitted period (t < 0)."""


@dataclass(frozen=True)
class ContributionShares:
    tech: float
    capital: float
    labor: float

    def as_dict(self) -> dict:
        return {"tech": self.tech, "capital": self.capital, "labor": self.labor}


def contribution_shares(params: CobbDouglasParams) -> ContributionShares:
    """Split ``gamma + alpha + beta`` into technology, capital and labor shares.

    Each share is one coefficient over the sum of the three. Note this is a
    ratio of elasticities and a growth rate, not a Solow-residual growth
    accounting decomposition; the two generally differ.
    """
    gamma, alpha, beta = params.gamma, params.alpha, params.beta
    if gamma < 0:
        raise DomainError(f"shares are undefined for negative gamma ({gamma!r})")
    if alpha < 0 or beta < 0:
        raise DomainError(f"shares are undefined for negative elasticities (alpha={alpha!r}, beta={beta!r})")
    total = gamma + alpha + beta
    if not total > 0:
        raise DomainError("gamma + alpha + beta must be positive")
    tech = gamma / total
    capital = alpha / total
    return ContributionShares(tech=tech, capital=capital, labor=beta / total)


class FittedRow(NamedTuple):
    year: int
    actual: float
    fitted: float
    log_residual: float


def fitted_table(panel: Panel, params: CobbDouglasParams) -> list[FittedRow]:
    rows = []
    for r in panel.records:
        t = r.year - panel.time_origin
        point = FactorPoint(r.capital, r.labor)
        fitted = eval_gdp(params, t, point)
        rows.append(FittedRow(r.year, r.gdp, fitted, math.log(r.gdp) - log_output(params, point, t)))
    return rows


def forecast(params: CobbDouglasParams, scenarios: Sequence[tuple[float, FactorPoint]]) -> list[float]:
    """GDP at each ``(t, point)``; warns with `ExtrapolationWarning` when any ``t < 0``."""
    if any(t < 0 for t, _ in scenarios):
        warnings.warn("forecast at t < 0 extrapolates before the fitted period", ExtrapolationWarning, stacklevel=2)
    return [eval_gdp(params, t, point) for t, point in scenarios]
