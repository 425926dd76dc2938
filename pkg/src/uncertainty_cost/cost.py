"""Output paths on balanced-growth trajectories and the present-value cost of uncertainty."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from .errors import InputError
from .model import SteadyState

DEFAULT_HORIZON = 15


@dataclass(frozen=True)
class GdpPath:
    """Output levels ``y0 * (1 + growth) ** t`` for ``t = 0..horizon_years``."""

    y0: float
    growth: float
    horizon_years: int
    levels: tuple[float, ...]

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["levels"] = list(self.levels)
        return d


@dataclass(frozen=True)
class CostReport:
    pv_low: float
    pv_high: float
    loss: float
    discount_rate: float
    convention: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CostReport:
        return cls(
            pv_low=float(data["pv_low"]),
            pv_high=float(data["pv_high"]),
            loss=float(data["loss"]),
            discount_rate=float(data["discount_rate"]),
            convention=dict(data.get("convention", {})),
        )


def path_from_growth(growth: float, y0: float = 1.0, horizon_years: int = DEFAULT_HORIZON) -> GdpPath:
    if isinstance(horizon_years, bool) or int(horizon_years) != horizon_years or horizon_years < 1:
        raise InputError(f"horizon_years must be an integer >= 1, got {horizon_years!r}")
    if not y0 > 0.0:
        raise InputError(f"y0 must be positive, got {y0!r}")
    if not growth > -1.0:
        raise InputError(f"growth must exceed -1, got {growth!r}")
    horizon_years = int(horizon_years)
    factor = 1.0 + growth
    levels = tuple(y0 * factor**t for t in range(horizon_years + 1))
    return GdpPath(y0=y0, growth=growth, horizon_years=horizon_years, levels=levels)


def make_path(steady: SteadyState, y0: float = 1.0, horizon_years: int = DEFAULT_HORIZON) -> GdpPath:
    return path_from_growth(steady.g_y, y0, horizon_years)


def present_value(path: GdpPath, discount_rate: float = 0.0) -> float:
    """Sum of ``levels[t] / (1 + discount_rate) ** t`` over the whole path, ``t = 0`` undiscounted."""
    if not discount_rate > -1.0:
        raise InputError(f"discount_rate must exceed -1, got {discount_rate!r}")
    beta = 1.0 / (1.0 + discount_rate)
    return sum(y * beta**t for t, y in enumerate(path.levels))


def uncertainty_cost(
    low: SteadyState,
    high: SteadyState,
    horizon_years: int = DEFAULT_HORIZON,
    discount_rate: float = 0.0,
    y0: float = 1.0,
) -> CostReport:
    """Relative present-value loss of the high-uncertainty path.

    Both paths start from the same ``y0`` and differ only through their
    growth rates, which are taken unrounded from the solved steady states.
    ``loss = 1 - pv_high / pv_low``.
    """
    path_low = make_path(low, y0, horizon_years)
    path_high = make_path(high, y0, horizon_years)
    pv_low = present_value(path_low, discount_rate)
    pv_high = present_value(path_high, discount_rate)
    loss = 0.0 if pv_high == pv_low else 1.0 - pv_high / pv_low
    return CostReport(
        pv_low=pv_low,
        pv_high=pv_high,
        loss=loss,
        discount_rate=discount_rate,
        convention={
            "t_start": 0,
            "t_end": path_low.horizon_years,
            "observations": path_low.horizon_years + 1,
            "discounting": "none" if discount_rate == 0.0 else "annual, t=0 undiscounted",
            "y0": y0,
            "growth_low": low.g_y,
            "growth_high": high.g_y,
            "level_effect": False,
        },
    )
