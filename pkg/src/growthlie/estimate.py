"""Least-squares estimation of the Cobb-Douglas GDP function.

Taking logs of ``GDP = a * exp(gamma*t) * K**alpha * L**beta`` gives a model
linear in its coefficients::

    ln GDP = gamma * t + alpha * ln K + beta * ln L + ln a

The design matrix columns are always ordered ``(t, ln K, ln L, 1)`` and
standard errors are reported in the same order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import DomainError, IllConditionedError, PreconditionError, ValidationError
from .model import CobbDouglasParams, FactorPoint, _exp_checked, log_output

COLUMNS = ("t", "ln_capital", "ln_labor", "intercept")
N_PARAMS = len(COLUMNS)
MIN_OBS = N_PARAMS + 1
MAX_CONDITION = 1e12

Detrend = Literal["none", "linear"]


@dataclass(frozen=True)
class EconRecord:
    year: int
    gdp: float
    capital: float
    labor: float

    def __post_init__(self):
        for name in ("gdp", "capital", "labor"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} in {self.year} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class Panel:
    """Annual observations; ``t = year - time_origin``.

    ``time_origin`` defaults to the first year in the panel.
    """

    records: tuple[EconRecord, ...]
    time_origin: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        if not self.records:
            raise PreconditionError("panel is empty")
        years = [r.year for r in self.records]
        for prev, cur in zip(years, years[1:]):
            if cur <= prev:
                raise ValidationError(f"panel years must be strictly increasing ({prev} then {cur})")
        if self.time_origin is None:
            object.__setattr__(self, "time_origin", years[0])

    def __len__(self) -> int:
        return len(self.records)

    @property
    def years(self) -> list[int]:
        return [r.year for r in self.records]

    def times(self) -> np.ndarray:
        return np.array([r.year - self.time_origin for r in self.records], dtype=float)

    def with_origin(self, time_origin: int) -> "Panel":
        return Panel(self.records, time_origin)


@dataclass
class FitReport:
    params: CobbDouglasParams
    coef: np.ndarray
    std_errors: np.ndarray
    r_squared: float
    residuals: np.ndarray
    condition_number: float
    n_obs: int
    rss: float
    detrend: str = "none"
    columns: tuple[str, ...] = field(default=COLUMNS)

    @property
    def df_resid(self) -> int:
        return self.n_obs - N_PARAMS

    @property
    def admissible(self) -> bool:
        """False when an estimated elasticity came out negative."""
        return self.params.admissible

    def std_errors_dict(self) -> dict[str, float]:
        names = ("gamma", "alpha", "beta", "ln_a")
        return {k: float(v) for k, v in zip(names, self.std_errors)}


def log_design(panel: Panel) -> tuple[np.ndarray, np.ndarray]:
    """Rows ``[t, ln K, ln L, 1]`` and response ``ln GDP``."""
    n = len(panel)
    X = np.empty((n, N_PARAMS))
    y = np.empty(n)
    for i, r in enumerate(panel.records):
        for name in ("gdp", "capital", "labor"):
            if not getattr(r, name) > 0:
                raise DomainError(f"{name} in {r.year} must be positive to take logs")
        X[i] = (r.year - panel.time_origin, math.log(r.capital), math.log(r.labor), 1.0)
        y[i] = math.log(r.gdp)
    return X, y


def fit_ols(X: np.ndarray, y: np.ndarray, max_condition: float = MAX_CONDITION, detrend: str = "none") -> FitReport:
    """Least squares via Householder QR, never the normal equations.

    ``std_errors`` are ``sqrt(diag(s^2 (X'X)^-1))`` with ``s^2 = RSS/(n-4)``,
    computed from ``R^-1`` so ``X'X`` is never formed.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    n, p = X.shape
    if p != N_PARAMS:
        raise ValidationError(f"design must have {N_PARAMS} columns, got {p}")
    if n < MIN_OBS:
        raise PreconditionError(f"need ≥ {MIN_OBS} observations, got {n}")
    if y.shape != (n,):
        raise ValidationError(f"response length {y.shape} does not match design rows {n}")

    cond = float(np.linalg.cond(X))
    if not (math.isfinite(cond) and cond <= max_condition):
        raise IllConditionedError(
            f"design matrix is rank deficient or ill-conditioned (condition number {cond:.3e} > {max_condition:.1e})",
            cond,
        )

    Q, R = np.linalg.qr(X, mode="reduced")
    coef = np.linalg.solve(R, Q.T @ y)
    resid = y - X @ coef
    rss = float(resid @ resid)
    dof = n - p
    s2 = rss / dof
    r_inv = np.linalg.solve(R, np.eye(p))
    std_errors = np.sqrt(s2 * np.einsum("ij,ij->i", r_inv, r_inv))

    centered = y - y.mean()
    tss = float(centered @ centered)
    if tss > 0:
        r2 = 1.0 - rss / tss
    else:
        r2 = 1.0 if rss == 0 else 0.0
    r2 = min(1.0, max(0.0, r2))

    gamma, alpha, beta, ln_a = (float(c) for c in coef)
    params = CobbDouglasParams.from_estimate(math.exp(ln_a), alpha, beta, gamma)
    return FitReport(
        params=params,
        coef=coef,
        std_errors=std_errors,
        r_squared=r2,
        residuals=resid,
        condition_number=cond,
        n_obs=n,
        rss=rss,
        detrend=detrend,
    )


def _residualize_on_trend(X: np.ndarray) -> np.ndarray:
    out = X.copy()
    basis = X[:, [0, 3]]
    for j in (1, 2):
        b, *_ = np.linalg.lstsq(basis, X[:, j], rcond=None)
        out[:, j] = X[:, j] - basis @ b
    return out


def estimate_gdp_params(panel: Panel, detrend: Detrend = "none") -> FitReport:
    """Fit ``(a, alpha, beta, gamma)`` to a panel.

    ``detrend="linear"`` replaces ``ln K`` and ``ln L`` by their residuals
    from a regression on ``(1, t)`` before fitting. Because ``t`` and the
    intercept stay in the design, alpha and beta are unchanged by this
    (Frisch-Waugh-Lovell); the fitted gamma and intercept then absorb the
    factor trends and describe the total log-linear GDP trend.
    """
    if detrend not in ("none", "linear"):
        raise ValidationError(f"detrend must be 'none' or 'linear', got {detrend!r}")
    if len(panel) < MIN_OBS:
        raise PreconditionError(f"need ≥ {MIN_OBS} observations, got {len(panel)}")
    X, y = log_design(panel)
    if detrend == "linear":
        X = _residualize_on_trend(X)
    return fit_ols(X, y, detrend=detrend)


def generate_synthetic(
    params: CobbDouglasParams,
    base_year: int,
    capital_path: Sequence[float],
    labor_path: Sequence[float],
    noise_sd: float = 0.0,
    seed: int = 0,
) -> Panel:
    """Panel drawn from the model with multiplicative log-normal noise.

    ``gdp_i = GDP(t_i, K_i, L_i) * exp(eps_i)``, ``eps_i ~ N(0, noise_sd**2)``
    from ``numpy.random.default_rng(seed)``; ``t_i = i``.
    """
    if len(capital_path) != len(labor_path):
        raise PreconditionError(
            f"capital and labor paths differ in length ({len(capital_path)} vs {len(labor_path)})"
        )
    if len(capital_path) < MIN_OBS:
        raise PreconditionError(f"need ≥ {MIN_OBS} observations, got {len(capital_path)}")
    if not (math.isfinite(noise_sd) and noise_sd >= 0):
        raise ValidationError(f"noise_sd must be nonnegative, got {noise_sd!r}")

    eps = np.random.default_rng(seed).normal(0.0, noise_sd, size=len(capital_path))
    records = []
    for i, (k, l) in enumerate(zip(capital_path, labor_path)):
        log_gdp = log_output(params, FactorPoint(float(k), float(l)), float(i)) + float(eps[i])
        records.append(EconRecord(base_year + i, _exp_checked(log_gdp), float(k), float(l)))
    return Panel(tuple(records), base_year)
