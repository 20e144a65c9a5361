"""Lie-type technical progress and Cobb-Douglas growth accounting."""

__version__ = "0.1.0"

from .analyze import ContributionShares, contribution_shares, fitted_table, forecast
from .capital import CapitalConfig, CapitalSeries, build_series, step, steady_state_seed
from .estimate import EconRecord, FitReport, Panel, estimate_gdp_params, fit_ols, generate_synthetic, log_design
from .model import (
    ROMANIA_MODEL_1,
    VIETNAM_1995_2018,
    CobbDouglasParams,
    FactorPoint,
    eval_gdp,
    eval_production,
    isoquant_points,
)
from .progress import (
    AxiomReport,
    ExpProgressFamily,
    GeneralProgressFamily,
    HolotheticityReport,
    apply,
    check_group_axioms,
    check_holothetic,
    jacobian_det,
    scale_factor,
)
