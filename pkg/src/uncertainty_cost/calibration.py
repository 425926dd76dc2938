"""Calibration of the uncertainty degree and of the innovation-success parameter.

``eta`` is scaled by the relative rise in a sovereign-spread ratio.
``lambda`` is the frequency with which Pareto-distributed innovation quality
draws clear a success threshold, estimated by Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, Iterable

import numpy as np

from .errors import DomainError, InputError

DEFAULT_REPLICATIONS = 1_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class ParetoSpec:
    """Pareto law with tail index ``shape`` and minimum ``scale``; draws above ``threshold`` succeed."""

    shape: float
    scale: float
    threshold: float

    def __post_init__(self) -> None:
        if not (self.shape > 0.0 and math.isfinite(self.shape)):
            raise InputError(f"shape must be positive, got {self.shape!r}")
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise InputError(f"scale must be positive, got {self.scale!r}")
        if not (self.threshold >= self.scale and math.isfinite(self.threshold)):
            raise InputError(f"threshold must be >= scale ({self.scale!r}), got {self.threshold!r}")

    @property
    def success_probability(self) -> float:
        """Analytic ``P(X > threshold) = (scale / threshold) ** shape``."""
        return (self.scale / self.threshold) ** self.shape

    def cdf(self, x: np.ndarray | float) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x < self.scale, 0.0, 1.0 - (self.scale / np.maximum(x, self.scale)) ** self.shape)

    @classmethod
    def for_target(cls, target: float, shape: float = 2.0, scale: float = 1.0) -> ParetoSpec:
        """Spec whose threshold makes the success probability equal ``target``."""
        if not 0.0 < target <= 1.0:
            raise InputError(f"target probability must lie in (0,1], got {target!r}")
        return cls(shape=shape, scale=scale, threshold=scale * target ** (-1.0 / shape))


@dataclass(frozen=True)
class LambdaEstimate:
    lambda_hat: float
    replications: int
    std_error: float
    seed: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LambdaEstimate:
        return cls(
            lambda_hat=float(data["lambda_hat"]),
            replications=int(data["replications"]),
            std_error=float(data["std_error"]),
            seed=int(data["seed"]),
        )


def pareto_sample(spec: ParetoSpec, uniforms: Iterable[float] | np.ndarray) -> np.ndarray:
    """Inverse-transform draws ``scale * u ** (-1 / shape)`` for ``u`` in (0, 1)."""
    u = np.asarray(uniforms, dtype=float)
    if u.size and not np.all((u > 0.0) & (u < 1.0)):
        bad = u[~((u > 0.0) & (u < 1.0))][0]
        raise DomainError(f"uniform inputs must lie in (0,1), got {bad!r}")
    return spec.scale * u ** (-1.0 / spec.shape)


def _open_uniforms(rng: np.random.Generator, n: int) -> np.ndarray:
    # Generator.random samples [0, 1); redraw the (rare) exact zeros.
    u = rng.random(n)
    zeros = u == 0.0
    while zeros.any():
        u[zeros] = rng.random(int(zeros.sum()))
        zeros = u == 0.0
    return u


def estimate_lambda(spec: ParetoSpec, replications: int = DEFAULT_REPLICATIONS, seed: int = 0) -> LambdaEstimate:
    """Monte Carlo success frequency of Pareto draws above ``spec.threshold``.

    Uses a single PCG64 stream seeded with ``seed``, consumed in chunks, so the
    result is bit-identical for a given ``(spec, replications, seed)``.
    """
    if isinstance(replications, bool) or int(replications) != replications or replications < 1:
        raise InputError(f"replications must be an integer >= 1, got {replications!r}")
    replications = int(replications)
    rng = np.random.default_rng(seed)
    successes = 0
    remaining = replications
    while remaining:
        n = min(remaining, _CHUNK)
        draws = pareto_sample(spec, _open_uniforms(rng, n))
        successes += int(np.count_nonzero(draws > spec.threshold))
        remaining -= n
    lam = successes / replications
    return LambdaEstimate(
        lambda_hat=lam,
        replications=replications,
        std_error=math.sqrt(lam * (1.0 - lam) / replications),
        seed=int(seed),
    )


def eta_from_uplift(eta_base: float, uplift: float) -> float:
    """Scale the base uncertainty degree by ``1 + uplift``."""
    if not eta_base >= 0.0:
        raise InputError(f"eta_base must be non-negative, got {eta_base!r}")
    if not uplift > -1.0:
        raise InputError(f"uplift must exceed -1, got {uplift!r}")
    return eta_base * (1.0 + uplift)
