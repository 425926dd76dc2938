"""Steady-state solver and its independent oracles.

The production path is a damped fixed-point iteration on the capital ratio.
Two oracles check it: a bisection on the residual
``F(k) = k - capital_from_growth(p, growth_from_capital(p, k))`` for any
parameters, and, when ``eta == 0``, a reduction of the system to one scalar
equation in ``g_A`` solved by Brent's method.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import AmbiguousRootError, BracketError, ConvergenceError, DomainError, InputError
from .model import (
    ModelParameters,
    SteadyState,
    capital_from_growth,
    growth_from_capital,
    interest_rate,
    validate_parameters,
)

log = logging.getLogger(__name__)

DEFAULT_BRACKET = (1e-3, 1e3)


@dataclass(frozen=True)
class SolverConfig:
    """Iteration controls.

    ``damping`` is the initial weight on the new iterate (1.0 = pure
    iteration). With ``adaptive`` on, whenever a step fails to halve the
    residual the weight is reset from a secant estimate of the map's slope.
    """

    tolerance: float = 1e-12
    max_iterations: int = 500
    damping: float = 1.0
    adaptive: bool = True

    def __post_init__(self) -> None:
        if not self.tolerance > 0.0:
            raise InputError("tolerance must be positive")
        if self.max_iterations < 1:
            raise InputError("max_iterations must be at least 1")
        if not 0.0 < self.damping <= 1.0:
            raise InputError("damping must lie in (0,1]")


def residual(p: ModelParameters, k_tilde: float) -> float:
    """Fixed-point residual ``F(k)``; zero at the steady state."""
    return k_tilde - capital_from_growth(p, growth_from_capital(p, k_tilde))


def _starting_point(p: ModelParameters) -> float:
    # Unmodified-model capital ratio with innovation switched off.
    base = p.g_n + p.delta
    if base <= 0.0:
        return 1.0
    return (p.s_bar / base) ** (1.0 / (1.0 - p.alpha))


def assemble(p: ModelParameters, k_tilde: float, iterations: int = 0) -> SteadyState:
    g_a = growth_from_capital(p, k_tilde)
    return SteadyState(
        k_tilde=k_tilde,
        g_a=g_a,
        g_y=g_a + p.g_n,
        r=interest_rate(p, k_tilde),
        residual=abs(residual(p, k_tilde)),
        iterations=iterations,
    )


def solve_steady_state(p: ModelParameters, cfg: SolverConfig | None = None) -> SteadyState:
    """Solve the joint fixed point for ``(k_tilde, g_A)`` and derive ``g_Y`` and ``r``.

    The update is ``k <- k * (T(k) / k) ** w`` with ``T`` the composed map
    capital_from_growth(growth_from_capital(k)), i.e. a damped step in
    log-capital. Convergence requires both the relative step and the
    relative residual ``|T(k) - k| / k`` to be within tolerance.

    Raises
    ------
    ParameterError
        If ``p`` is invalid.
    ConvergenceError
        If the tolerance is not met within ``cfg.max_iterations`` steps.
    """
    cfg = cfg or SolverConfig()
    validate_parameters(p)

    def log_map(x: float) -> float:
        return math.log(capital_from_growth(p, growth_from_capital(p, math.exp(x))))

    x = math.log(_starting_point(p))
    tx = log_map(x)
    res = abs(math.expm1(tx - x))
    weight = cfg.damping
    for it in range(1, cfg.max_iterations + 1):
        x_new = x + weight * (tx - x)
        tx_new = log_map(x_new)
        res_new = abs(math.expm1(tx_new - x_new))
        step = abs(math.expm1(x_new - x))
        # Below tolerance the residual is rounding noise; a slope fitted to it is meaningless.
        if cfg.adaptive and res_new > 0.5 * res and res_new > cfg.tolerance and x_new != x:
            slope = (tx_new - tx) / (x_new - x)
            if slope < 1.0:
                weight = min(1.0, max(1e-6, 1.0 / (1.0 - slope)))
                log.debug("iteration %d: slow contraction, weight -> %.6g", it, weight)
        x, tx, res = x_new, tx_new, res_new
        if step <= cfg.tolerance and res <= cfg.tolerance:
            return assemble(p, math.exp(x), iterations=it)
    k_last = math.exp(x)
    raise ConvergenceError(
        f"no convergence after {cfg.max_iterations} iterations "
        f"(k_tilde={k_last:.10g}, relative residual={res:.3g})",
        last_iterate=k_last,
        residual=res,
        iterations=cfg.max_iterations,
    )


def closed_form_steady_state_eta0(p: ModelParameters, cfg: SolverConfig | None = None) -> SteadyState:
    """Steady state of the unmodified model (``eta == 0``), solved in growth space.

    With ``eta = 0`` the capital equation can be substituted into the
    innovation equation, leaving one increasing scalar equation

        g * (g + g_N + delta) ** m = C,   m = alpha * e / (1 - alpha)

    with ``e = sigma / (1 - sigma)`` and
    ``C = (gamma - 1) lambda (alpha (1 - alpha) lambda sigma) ** e * s_bar ** m``.
    That equation is bracketed on ``[0, C / (g_N + delta) ** m]`` and solved
    with Brent's method; capital then follows in closed form. ``gamma == 1``
    is accepted here and gives ``g_A = 0``.
    """
    cfg = cfg or SolverConfig()
    if p.eta != 0.0:
        raise InputError(f"closed-form reduction requires eta == 0, got {p.eta!r}")
    validate_parameters(p, allow_no_innovation=True)
    base = p.g_n + p.delta
    if not base > 0.0:
        raise DomainError("closed-form reduction requires g_n + delta > 0")

    e = p.sigma / (1.0 - p.sigma)
    m = p.alpha * e / (1.0 - p.alpha)
    c = (p.gamma - 1.0) * p.lambda_ * (p.alpha * (1.0 - p.alpha) * p.lambda_ * p.sigma) ** e * p.s_bar**m
    if c == 0.0:
        g = 0.0
    else:
        hi = c / base**m
        g = brentq(lambda x: x * (x + base) ** m - c, 0.0, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)
    k = (p.s_bar / (g + base)) ** (1.0 / (1.0 - p.alpha))
    return SteadyState(
        k_tilde=k,
        g_a=g,
        g_y=g + p.g_n,
        r=p.alpha**2 * k ** (p.alpha - 1.0) - p.delta,
        residual=abs(residual(p, k)),
    )


def _sign_changes(p: ModelParameters, lo: float, hi: float, points: int) -> list[tuple[float, float]]:
    grid = np.geomspace(lo, hi, points)
    values = [residual(p, float(k)) for k in grid]
    out = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if fa == 0.0:
            out.append((float(a), float(a)))
        elif fa * fb < 0.0:
            out.append((float(a), float(b)))
    if values[-1] == 0.0:
        out.append((float(grid[-1]), float(grid[-1])))
    return out


def bisection_oracle(
    p: ModelParameters,
    bracket: tuple[float, float] | None = None,
    tolerance: float = 1e-14,
    *,
    max_expansions: int = 12,
    scan_points: int = 257,
) -> float:
    """Root of the fixed-point residual by plain bisection.

    Without an explicit bracket the search starts on ``[1e-3, 1e3]`` and is
    widened by a factor of ten on each side until the residual changes sign.
    The widened bracket is then scanned on a log grid; a second sign change
    raises :class:`AmbiguousRootError` instead of picking one root.

    Parameters
    ----------
    bracket
        ``(k_lo, k_hi)`` with ``F(k_lo) * F(k_hi) < 0``.
    tolerance
        Relative width at which bisection stops.
    """
    validate_parameters(p)
    if bracket is None:
        lo, hi = DEFAULT_BRACKET
        for _ in range(max_expansions):
            if residual(p, lo) * residual(p, hi) < 0.0:
                break
            lo, hi = lo / 10.0, hi * 10.0
        else:
            raise BracketError(f"no sign change found in [{lo:.3g}, {hi:.3g}]")
        crossings = _sign_changes(p, lo, hi, scan_points)
        if len(crossings) > 1:
            raise AmbiguousRootError(f"{len(crossings)} sign changes in [{lo:.3g}, {hi:.3g}]", crossings)
    else:
        lo, hi = map(float, bracket)
        if not 0.0 < lo < hi:
            raise BracketError(f"bracket must satisfy 0 < k_lo < k_hi, got ({lo!r}, {hi!r})")

    f_lo = residual(p, lo)
    f_hi = residual(p, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0.0:
        raise BracketError(f"residual has the same sign at both ends of [{lo!r}, {hi!r}]")

    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo <= tolerance * mid:
            return mid
        f_mid = residual(p, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
