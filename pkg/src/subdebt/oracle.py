"""Independent verification engines for the closed-form results.

Three routes that do not share code with the formulas they check:
Monte-Carlo pricing from simulated terminal asset values, a numeric
one-dimensional argmax (coarse grid plus golden-section refinement), and
central finite differences for the junior-debt vega.

Randomness contract
-------------------
Terminal draws use numpy's Philox 4x64 counter-based generator (10
rounds) keyed by the seed.  The i-th raw 64-bit output is a pure
function of (seed, i), so an estimate depends only on (seed,
path_count) and never on scheduling or partitioning.  Raw outputs map
to uniforms by u = ((raw >> 11) + 0.5) * 2**-53, strictly inside (0, 1),
and to normals through the inverse normal CDF (``scipy.special.ndtri``,
the Cephes ndtri routine) rather than Box-Muller, so antithetic pairing
is exact and results are bit-stable across platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.special import ndtri

from .claims import CapitalStructure, junior_debt_value
from .errors import ValidationError

_COARSE_POINTS = 64
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MCConfig:
    """Monte-Carlo run configuration.

    path_count must be even when antithetic pairing is on; the seed is a
    64-bit unsigned integer.
    """

    path_count: int
    seed: int
    antithetic: bool = True

    def __post_init__(self) -> None:
        if self.path_count < 2:
            raise ValidationError(f"path_count must be >= 2, got {self.path_count}")
        if self.antithetic and self.path_count % 2 != 0:
            raise ValidationError(
                f"path_count must be even with antithetic pairing, got {self.path_count}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class MCEstimate:
    """Monte-Carlo price with its standard error and path count."""

    mean: float
    std_error: float
    path_count: int


@dataclass(frozen=True)
class GridSpec:
    """Search interval and convergence tolerance for the numeric argmax."""

    lower: float
    upper: float
    tolerance: float

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValidationError(
                f"lower must be < upper, got [{self.lower}, {self.upper}]"
            )
        if not self.tolerance > 0.0:
            raise ValidationError(f"tolerance must be > 0, got {self.tolerance}")


def simulate_terminal_values(cs: CapitalStructure, mc: MCConfig) -> np.ndarray:
    """Draw terminal asset values in a single exact step.

    V_T = V exp((r - q - sigma^2/2) tau + sigma sqrt(tau) Z).  With
    antithetic pairing the output interleaves pairs (Z_i, -Z_i): element
    2i uses Z_i and element 2i+1 uses -Z_i.
    """
    n_draws = mc.path_count // 2 if mc.antithetic else mc.path_count
    raw = np.random.Philox(key=mc.seed).random_raw(n_draws)
    uniforms = ((raw >> 11).astype(np.float64) + 0.5) * 2.0**-53
    z = ndtri(uniforms)
    if mc.antithetic:
        full = np.empty(mc.path_count)
        full[0::2] = z
        full[1::2] = -z
    else:
        full = z
    drift = (
        cs.rate - cs.dividend_yield - 0.5 * cs.volatility * cs.volatility
    ) * cs.maturity
    shock = cs.volatility * math.sqrt(cs.maturity)
    return cs.asset_value * np.exp(drift + shock * full)


def mc_claim_values(
    cs: CapitalStructure, mc: MCConfig
) -> tuple[MCEstimate, MCEstimate, MCEstimate]:
    """Discounted Monte-Carlo estimates of (senior, junior, equity) values.

    Each mean is e^{-r tau} times the average claim payoff over the
    simulated terminal values, so the three means sum to the discounted
    average terminal value.  With antithetic pairing the sampling unit
    for the standard error is the average of each (Z, -Z) pair.
    """
    terminal = simulate_terminal_values(cs, mc)
    discount = math.exp(-cs.rate * cs.maturity)
    senior = np.minimum(terminal, cs.senior_face)
    junior = np.clip(terminal - cs.senior_face, 0.0, cs.junior_face)
    equity = np.maximum(terminal - cs.senior_face - cs.junior_face, 0.0)
    return (
        _estimate(discount * senior, mc),
        _estimate(discount * junior, mc),
        _estimate(discount * equity, mc),
    )


def _estimate(discounted: np.ndarray, mc: MCConfig) -> MCEstimate:
    if mc.antithetic:
        units = 0.5 * (discounted[0::2] + discounted[1::2])
    else:
        units = discounted
    mean = float(units.mean())
    if units.size > 1:
        std_error = float(units.std(ddof=1) / math.sqrt(units.size))
    else:
        std_error = 0.0
    return MCEstimate(mean=mean, std_error=std_error, path_count=mc.path_count)


def golden_section_max(
    f: Callable[[float], float], lower: float, upper: float, tolerance: float
) -> float:
    """Golden-section search for the maximizer of a unimodal f on [lower, upper]."""
    a, b = lower, upper
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tolerance:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return float(0.5 * (a + b))


def argmax_sigma_numeric(cs: CapitalStructure, grid: GridSpec) -> float | None:
    """Numerically locate the volatility maximizing the junior-bond value.

    Brackets the peak on a 64-point log-spaced coarse grid over
    [lower, upper] (the value is unimodal in volatility), then refines
    with golden-section search to ``grid.tolerance``.  Returns None when
    the coarse values are nonincreasing from the left edge, i.e. no
    interior peak exists over the grid.
    """
    if not grid.lower > 0.0:
        raise ValidationError(f"grid.lower must be > 0, got {grid.lower}")
    sigmas = np.geomspace(grid.lower, grid.upper, _COARSE_POINTS)
    values = [_junior_value_at(cs, s) for s in sigmas]
    peak = int(np.argmax(values))
    if peak == 0:
        return None
    lo = sigmas[peak - 1]
    hi = sigmas[peak + 1] if peak + 1 < len(sigmas) else sigmas[-1]
    return golden_section_max(lambda s: _junior_value_at(cs, s), lo, hi, grid.tolerance)


def finite_diff_vega(cs: CapitalStructure, bump: float) -> float:
    """Central-difference junior-debt vega, [B_J(sigma+h) - B_J(sigma-h)] / 2h.

    Raises:
        ValidationError: If bump <= 0 or sigma - bump <= 0.
    """
    if not bump > 0.0:
        raise ValidationError(f"bump must be > 0, got {bump}")
    if not cs.volatility - bump > 0.0:
        raise ValidationError(
            f"bump {bump} too large for volatility {cs.volatility}"
        )
    up = _junior_value_at(cs, cs.volatility + bump)
    down = _junior_value_at(cs, cs.volatility - bump)
    return (up - down) / (2.0 * bump)


def _junior_value_at(cs: CapitalStructure, sigma: float) -> float:
    return junior_debt_value(replace(cs, volatility=sigma))
