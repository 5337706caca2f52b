"""Scenario files: INI-style ``key = value`` sections.

One scenario per file.  The ``[scenario]`` section holds the capital
structure (required keys: asset_value, senior_face, junior_face, sigma,
maturity, rate; optional: dividend_yield, initial_sigma, name) and the
optional ``[monte_carlo]`` section overrides the simulation defaults
(paths, seed, antithetic).  Numbers are parsed as decimal text at full
double precision.  ``initial_sigma`` defaults to ``sigma``; scenarios
priced at sigma = 0 must therefore state it explicitly.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path

from .claims import CapitalStructure
from .errors import ScenarioParseError, ValidationError
from .oracle import MCConfig

DEFAULT_PATHS = 1_000_000
DEFAULT_SEED = 1

_REQUIRED_KEYS = ("asset_value", "senior_face", "junior_face", "sigma", "maturity", "rate")


@dataclass(frozen=True)
class Scenario:
    """A named capital structure plus the pre-shift volatility and MC config."""

    name: str
    structure: CapitalStructure
    initial_sigma: float
    mc: MCConfig

    def __post_init__(self) -> None:
        if not self.initial_sigma > 0.0:
            raise ValidationError(
                f"initial_sigma must be > 0, got {self.initial_sigma}"
            )


def load_scenario(path: str | Path) -> Scenario:
    """Parse a scenario file.

    Raises:
        ScenarioParseError: If the file is unreadable, malformed, or
            missing required keys.
        ValidationError: If the parsed parameters violate their domains.
    """
    path = Path(path)
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioParseError(f"cannot read scenario file {path}: {exc}") from exc
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise ScenarioParseError(f"malformed scenario file {path}: {exc}") from exc

    if not parser.has_section("scenario"):
        raise ScenarioParseError(f"{path}: missing [scenario] section")
    section = parser["scenario"]
    missing = [key for key in _REQUIRED_KEYS if key not in section]
    if missing:
        raise ScenarioParseError(f"{path}: missing required keys {', '.join(missing)}")

    structure = CapitalStructure(
        asset_value=_get_float(section, "asset_value", path),
        senior_face=_get_float(section, "senior_face", path),
        junior_face=_get_float(section, "junior_face", path),
        volatility=_get_float(section, "sigma", path),
        maturity=_get_float(section, "maturity", path),
        rate=_get_float(section, "rate", path),
        dividend_yield=_get_float(section, "dividend_yield", path, default=0.0),
    )
    initial_sigma = _get_float(
        section, "initial_sigma", path, default=structure.volatility
    )
    name = section.get("name", path.stem)

    paths = DEFAULT_PATHS
    seed = DEFAULT_SEED
    antithetic = True
    if parser.has_section("monte_carlo"):
        mc_section = parser["monte_carlo"]
        paths = _get_int(mc_section, "paths", path, default=paths)
        seed = _get_int(mc_section, "seed", path, default=seed)
        antithetic = _get_bool(mc_section, "antithetic", path, default=antithetic)
    mc = MCConfig(path_count=paths, seed=seed, antithetic=antithetic)

    return Scenario(name=name, structure=structure, initial_sigma=initial_sigma, mc=mc)


def _get_float(section, key: str, path: Path, default: float | None = None) -> float:
    if key not in section:
        if default is None:
            raise ScenarioParseError(f"{path}: missing key {key}")
        return default
    raw = section[key]
    try:
        return float(raw)
    except ValueError as exc:
        raise ScenarioParseError(f"{path}: key {key} is not a number: {raw!r}") from exc


def _get_int(section, key: str, path: Path, default: int) -> int:
    if key not in section:
        return default
    raw = section[key]
    try:
        return int(raw)
    except ValueError as exc:
        raise ScenarioParseError(f"{path}: key {key} is not an integer: {raw!r}") from exc


def _get_bool(section, key: str, path: Path, default: bool) -> bool:
    if key not in section:
        return default
    try:
        return section.getboolean(key)
    except ValueError as exc:
        raise ScenarioParseError(
            f"{path}: key {key} is not a boolean: {section[key]!r}"
        ) from exc
