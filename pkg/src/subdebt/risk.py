"""Junior-debt risk sensitivity, risk-shifting thresholds, and regimes.

The junior bond is a bull call spread, so its sensitivity to asset
volatility is the difference of two call vegas.  That derivative is
positive exactly when the asset value sits below a threshold equal to the
discounted geometric mean of the senior face and the total face
(``risk_shift_threshold``).  Below a second, sigma-free boundary
(``hump_threshold``) the junior value is hump-shaped in volatility, with
the interior maximizer available in closed form (``optimal_volatility``):

    sigma* = sqrt( ln(F_S (F_S + F_J) / V^2) / tau - 2 r + 2 q )

Above the boundary the value is decreasing in volatility and no interior
maximizer exists.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .black_scholes import vega
from .claims import CapitalStructure
from .errors import ValidationError

# Radicands this close to zero are treated as the boundary case where the
# interior maximizer degenerates to sigma = 0.
_RADICAND_TOL = 1e-12


class Regime(enum.Enum):
    """Shape of the junior-bond value as a function of asset volatility."""

    DECREASING_IN_RISK = "decreasing-in-risk"
    HUMP_SHAPED = "hump-shaped"


@dataclass(frozen=True)
class RiskProfile:
    """Risk-shifting diagnostics for one capital structure.

    ``shift_threshold`` is evaluated at ``initial_sigma``.  The regime is
    HUMP_SHAPED exactly when ``optimal_volatility`` is present.
    """

    optimal_volatility: float | None
    shift_threshold: float
    hump_threshold: float
    regime: Regime
    shifts_above_initial: bool
    initial_sigma: float


def junior_debt_vega(cs: CapitalStructure) -> float:
    """d(junior value)/d(sigma): call vega at F_S minus call vega at F_S + F_J.

    Positive below ``risk_shift_threshold`` at the structure's volatility,
    negative above it, and zero at the interior maximizer.

    Raises:
        DegenerateVolatilityError: If the structure's volatility is zero.
    """
    return vega(cs.option_inputs(cs.senior_face)) - vega(
        cs.option_inputs(cs.total_face)
    )


def risk_shift_threshold(
    senior_face: float,
    junior_face: float,
    sigma: float,
    maturity: float,
    rate: float,
    dividend_yield: float = 0.0,
) -> float:
    """Asset value below which junior-bond value rises with volatility.

    e^{-(r - q + sigma^2/2) tau} sqrt(F_S (F_S + F_J)): the discounted
    geometric mean of the senior and total face values.  The junior vega
    at volatility ``sigma`` changes sign from positive to negative as the
    asset value crosses this threshold.
    """
    _validate_threshold_inputs(senior_face, junior_face, maturity)
    if not sigma >= 0.0:
        raise ValidationError(f"sigma must be >= 0, got {sigma}")
    exponent = (rate - dividend_yield + 0.5 * sigma * sigma) * maturity
    return math.exp(-exponent) * math.sqrt(senior_face * (senior_face + junior_face))


def hump_threshold(
    senior_face: float,
    junior_face: float,
    maturity: float,
    rate: float,
    dividend_yield: float = 0.0,
) -> float:
    """Asset value below which an interior junior-value maximizer exists.

    e^{-(r - q) tau} sqrt(F_S (F_S + F_J)).  Equals
    ``risk_shift_threshold`` evaluated at sigma = 0 and strictly exceeds
    it for any sigma > 0.
    """
    _validate_threshold_inputs(senior_face, junior_face, maturity)
    exponent = (rate - dividend_yield) * maturity
    return math.exp(-exponent) * math.sqrt(senior_face * (senior_face + junior_face))


def optimal_volatility(cs: CapitalStructure) -> float | None:
    """Volatility at which the junior-bond value peaks, when one exists.

    sqrt( ln(F_S (F_S + F_J) / V^2) / tau - 2 r + 2 q ) for asset values
    below ``hump_threshold``; None above it, where the junior value is
    decreasing in volatility.  Radicands within 1e-12 of zero map to the
    boundary value 0.0 rather than to a rounding-noise root.  The
    structure's own volatility field is ignored.
    """
    radicand = (
        math.log(cs.senior_face * cs.total_face / (cs.asset_value * cs.asset_value))
        / cs.maturity
        - 2.0 * cs.rate
        + 2.0 * cs.dividend_yield
    )
    if radicand > _RADICAND_TOL:
        return math.sqrt(radicand)
    if radicand >= -_RADICAND_TOL:
        return 0.0
    return None


def classify_regime(cs: CapitalStructure, initial_sigma: float) -> RiskProfile:
    """Classify how the junior-bond value responds to asset volatility.

    The regime is HUMP_SHAPED exactly when an interior maximizer exists,
    DECREASING_IN_RISK otherwise.  ``shifts_above_initial`` records
    whether that maximizer lies above ``initial_sigma``, which holds if
    and only if the asset value is below ``risk_shift_threshold``
    evaluated at ``initial_sigma``.
    """
    if not initial_sigma > 0.0:
        raise ValidationError(f"initial_sigma must be > 0, got {initial_sigma}")
    best = optimal_volatility(cs)
    shift_at_initial = risk_shift_threshold(
        cs.senior_face,
        cs.junior_face,
        initial_sigma,
        cs.maturity,
        cs.rate,
        cs.dividend_yield,
    )
    boundary = hump_threshold(
        cs.senior_face, cs.junior_face, cs.maturity, cs.rate, cs.dividend_yield
    )
    regime = Regime.DECREASING_IN_RISK if best is None else Regime.HUMP_SHAPED
    return RiskProfile(
        optimal_volatility=best,
        shift_threshold=shift_at_initial,
        hump_threshold=boundary,
        regime=regime,
        shifts_above_initial=cs.asset_value < shift_at_initial,
        initial_sigma=initial_sigma,
    )


def chosen_risk(cs: CapitalStructure, initial_sigma: float) -> float:
    """Volatility chosen by a junior creditor who controls risk.

    The junior-value maximizer when shifting upward pays (asset value
    below the shift threshold), otherwise the initial volatility: risk
    shifting is limited to the level that maximizes the junior bond.
    """
    profile = classify_regime(cs, initial_sigma)
    if profile.shifts_above_initial and profile.optimal_volatility is not None:
        return profile.optimal_volatility
    return initial_sigma


def _validate_threshold_inputs(
    senior_face: float, junior_face: float, maturity: float
) -> None:
    if not senior_face > 0.0:
        raise ValidationError(f"senior_face must be > 0, got {senior_face}")
    if not junior_face > 0.0:
        raise ValidationError(f"junior_face must be > 0, got {junior_face}")
    if not maturity > 0.0:
        raise ValidationError(f"maturity must be > 0, got {maturity}")
