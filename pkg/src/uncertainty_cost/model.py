"""Parameters and structural equations of the growth model.

The savings rate carries an endogenous precautionary factor::

    s = s_bar * k ** (+eta)    robust economy
    s = s_bar * k ** (-eta)    frail economy

and the steady-state reduced form is

    g_A = (gamma - 1) * lambda * [alpha (1 - alpha) lambda sigma k^alpha] ** (sigma / (1 - sigma))
    k   = (s_bar / (g_A + g_N + delta)) ** (1 / (1 - alpha - eta_signed))
    r   = alpha**2 * k ** (alpha - 1) - delta

where ``k`` is capital per efficiency unit of labour (K / (A N)).
``eta`` is stored as an unsigned magnitude; the economy kind supplies the sign.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, replace
from typing import Any

from .errors import DomainError, NumericRangeError, ParameterError


class EconomyKind(str, enum.Enum):
    """Regime that fixes the sign applied to the uncertainty degree."""

    ROBUST = "robust"
    FRAIL = "frail"

    @property
    def sign(self) -> int:
        return 1 if self is EconomyKind.ROBUST else -1

    @classmethod
    def parse(cls, value: str | EconomyKind) -> EconomyKind:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ParameterError("kind", f"kind must be 'robust' or 'frail', got {value!r}") from None


@dataclass(frozen=True)
class ModelParameters:
    """The eight scalars of the calibration plus the economy kind.

    Rates are annual decimals (0.045, not 4.5%).
    """

    gamma: float
    lambda_: float
    alpha: float
    sigma: float
    eta: float
    kind: EconomyKind
    delta: float
    g_n: float
    s_bar: float

    @property
    def eta_signed(self) -> float:
        return self.kind.sign * self.eta

    @property
    def capital_exponent(self) -> float:
        """Exponent ``1 / (1 - alpha - eta_signed)`` applied in the capital equation."""
        return 1.0 / (1.0 - self.alpha - self.eta_signed)

    @property
    def innovation_exponent(self) -> float:
        return self.sigma / (1.0 - self.sigma)

    def with_(self, **changes: Any) -> ModelParameters:
        """Copy with some fields replaced (``kind`` may be given as a string)."""
        if "kind" in changes:
            changes["kind"] = EconomyKind.parse(changes["kind"])
        return replace(self, **changes)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ModelParameters:
        data = dict(data)
        if "lambda" in data and "lambda_" not in data:
            data["lambda_"] = data.pop("lambda")
        missing = [f for f in _FIELDS if f not in data]
        if missing:
            raise ParameterError(missing[0], f"missing parameter(s): {', '.join(missing)}")
        unknown = sorted(set(data) - set(_FIELDS))
        if unknown:
            raise ParameterError(unknown[0], f"unknown parameter(s): {', '.join(unknown)}")
        kwargs: dict[str, Any] = {}
        for name in _FIELDS:
            if name == "kind":
                kwargs[name] = EconomyKind.parse(data[name])
                continue
            value = data[name]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParameterError(name, f"{name} must be a number, got {value!r}")
            kwargs[name] = float(value)
        return cls(**kwargs)


_FIELDS = ("gamma", "lambda_", "alpha", "sigma", "eta", "kind", "delta", "g_n", "s_bar")


@dataclass(frozen=True)
class SteadyState:
    """Solved balanced-growth configuration."""

    k_tilde: float
    g_a: float
    g_y: float
    r: float
    residual: float
    iterations: int = 0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SteadyState:
        return cls(
            k_tilde=float(data["k_tilde"]),
            g_a=float(data["g_a"]),
            g_y=float(data["g_y"]),
            r=float(data["r"]),
            residual=float(data["residual"]),
            iterations=int(data.get("iterations", 0)),
        )


def validate_parameters(p: ModelParameters, *, allow_no_innovation: bool = False) -> ModelParameters:
    """Return ``p`` unchanged if every constraint holds.

    ``allow_no_innovation`` admits the degenerate limit ``gamma == 1``
    (innovation switched off, ``g_A == 0``).

    Raises
    ------
    ParameterError
        Naming the first violated constraint.
    """
    for name in _FIELDS:
        if name == "kind":
            continue
        value = getattr(p, name)
        if not math.isfinite(value):
            raise ParameterError(name, f"{name} must be finite, got {value!r}")
    if not isinstance(p.kind, EconomyKind):
        raise ParameterError("kind", f"kind must be an EconomyKind, got {p.kind!r}")
    if not (p.gamma > 1.0 or (allow_no_innovation and p.gamma == 1.0)):
        raise ParameterError("gamma", "gamma must be greater than 1")
    if not 0.0 < p.lambda_ <= 1.0:
        raise ParameterError("lambda_", "lambda must lie in (0,1]")
    if not 0.0 < p.alpha < 1.0:
        raise ParameterError("alpha", "alpha must lie in (0,1)")
    if not 0.0 < p.sigma < 1.0:
        raise ParameterError("sigma", "sigma must lie in (0,1)")
    if not p.eta >= 0.0:
        raise ParameterError("eta", "eta must be non-negative (the economy kind carries the sign)")
    if not p.delta >= 0.0:
        raise ParameterError("delta", "delta must be non-negative")
    if not 0.0 < p.s_bar < 1.0:
        raise ParameterError("s_bar", "s_bar must lie in (0,1)")
    if not 1.0 - p.alpha - p.eta_signed > 0.0:
        raise ParameterError(
            "eta",
            f"1 - alpha - eta_signed must be positive, got {1.0 - p.alpha - p.eta_signed:.6g} "
            f"({p.kind.value} economy, alpha={p.alpha}, eta={p.eta})",
        )
    return p


def _power(base: float, exponent: float, what: str) -> float:
    try:
        value = math.exp(exponent * math.log(base))
    except OverflowError:
        raise NumericRangeError(f"{what} overflowed (base={base!r}, exponent={exponent!r})") from None
    if not math.isfinite(value):
        raise NumericRangeError(f"{what} is not finite")
    return value


def _require_positive_capital(k_tilde: float) -> None:
    if not (k_tilde > 0.0 and math.isfinite(k_tilde)):
        raise DomainError(f"k_tilde must be positive and finite, got {k_tilde!r}")


def growth_from_capital(p: ModelParameters, k_tilde: float) -> float:
    """Productivity growth rate implied by a capital ratio (innovation equation)."""
    _require_positive_capital(k_tilde)
    inner = p.alpha * (1.0 - p.alpha) * p.lambda_ * p.sigma * _power(k_tilde, p.alpha, "k_tilde**alpha")
    return (p.gamma - 1.0) * p.lambda_ * _power(inner, p.innovation_exponent, "g_A")


def capital_from_growth(p: ModelParameters, g_a: float) -> float:
    """Capital ratio implied by a productivity growth rate (accumulation equation)."""
    denom = g_a + p.g_n + p.delta
    if not denom > 0.0:
        raise DomainError(f"g_a + g_n + delta must be positive, got {denom!r}")
    return _power(p.s_bar / denom, p.capital_exponent, "k_tilde")


def interest_rate(p: ModelParameters, k_tilde: float) -> float:
    _require_positive_capital(k_tilde)
    return p.alpha**2 * _power(k_tilde, p.alpha - 1.0, "k_tilde**(alpha-1)") - p.delta


def savings_rate(p: ModelParameters, k_tilde: float) -> float:
    """``s_bar * k_tilde ** (+-eta)``; the sign follows the economy kind."""
    _require_positive_capital(k_tilde)
    return p.s_bar * _power(k_tilde, p.eta_signed, "savings factor")


# Calibration rows. The high-uncertainty rows use eta = 0.1 * 1.42 = 0.142;
# the tabulated 0.42 does not reproduce the reference outputs.
BASELINE = ModelParameters(
    gamma=1.102,
    lambda_=0.88,
    alpha=0.4,
    sigma=0.5,
    eta=0.1,
    kind=EconomyKind.FRAIL,
    delta=0.045,
    g_n=0.01,
    s_bar=0.25,
)
HIGHER_RISK = BASELINE.with_(eta=0.142)
HIGHER_RISK_LOWER_INNOVATION = BASELINE.with_(eta=0.142, lambda_=0.84)
