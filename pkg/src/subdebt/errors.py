"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A model input violates its documented domain."""


class DegenerateVolatilityError(ValueError):
    """An operation that requires sigma > 0 was called with sigma = 0.

    Pricing operations handle sigma = 0 through their deterministic
    forward limits; d1/d2 and vega have no such limit and refuse instead.
    """


class ScenarioParseError(ValueError):
    """A scenario file is unreadable, malformed, or missing required keys."""
