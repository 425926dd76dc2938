"""Growth model with uncertainty-dependent savings and the present-value cost of higher uncertainty."""

from .calibration import LambdaEstimate, ParetoSpec, estimate_lambda, eta_from_uplift, pareto_sample
from .cost import CostReport, GdpPath, make_path, present_value, uncertainty_cost
from .embi import PeriodStats, SpreadSeries, parse_spread_csv, period_uplift, ratio_series
from .errors import (
    ConvergenceError,
    InputError,
    NumericalError,
    ParameterError,
    UncertaintyCostError,
)
from .model import (
    BASELINE,
    HIGHER_RISK,
    HIGHER_RISK_LOWER_INNOVATION,
    EconomyKind,
    ModelParameters,
    SteadyState,
    capital_from_growth,
    growth_from_capital,
    interest_rate,
    savings_rate,
    validate_parameters,
)
from .solver import SolverConfig, bisection_oracle, closed_form_steady_state_eta0, solve_steady_state

__version__ = "0.1.0"

__all__ = [
    "BASELINE",
    "HIGHER_RISK",
    "HIGHER_RISK_LOWER_INNOVATION",
    "ConvergenceError",
    "CostReport",
    "EconomyKind",
    "GdpPath",
    "InputError",
    "LambdaEstimate",
    "ModelParameters",
    "NumericalError",
    "ParameterError",
    "ParetoSpec",
    "PeriodStats",
    "SolverConfig",
    "SpreadSeries",
    "SteadyState",
    "UncertaintyCostError",
    "bisection_oracle",
    "capital_from_growth",
    "closed_form_steady_state_eta0",
    "estimate_lambda",
    "eta_from_uplift",
    "growth_from_capital",
    "interest_rate",
    "make_path",
    "parse_spread_csv",
    "pareto_sample",
    "period_uplift",
    "present_value",
    "ratio_series",
    "savings_rate",
    "solve_steady_state",
    "uncertainty_cost",
    "validate_parameters",
]
