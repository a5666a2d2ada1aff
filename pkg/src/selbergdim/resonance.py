"""Resonance classification of an exponent configuration.

A configuration is the data of the multivalued integrand: m integration
variables, a coupling exponent g on each difference (x_i - x_j), and one
exponent lambda_k per marked point z_k. An index j is *resonant* when
2 lambda_j + g is an integer; the count r of resonant indices is what the
dimension formulas depend on.

The dimension formulas are only asserted under non-resonance of every
other divisor class, which boils down to three families of integrality
tests (with C(k, 2) = k(k-1)/2 and C(1, 2) = 0):

* ``point``:     k lambda_j + C(k, 2) g  must not be an integer, for every
                 point j, for k = 1 and 3 <= k <= m;
* ``infinity``:  k lambda_inf + C(k, 2) g  must not be an integer for
                 1 <= k <= m, where lambda_inf = -sum(lambda) - (m-1) g;
* ``diagonal``:  C(k, 2) g  must not be an integer for 2 <= k <= m.

``classify`` is total: it reports the resonant index set and every failed
test exhaustively (useful when tuning exponents), and never raises.
``dims_for_config`` refuses to apply the dimension formulas when any
assumption fails, because nothing is claimed about that regime.

All membership tests are exact rational integrality tests; there is no
tolerance anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .dims import DimensionRecord, DimQuery, compute_record
from .exactnum import format_rational, is_integer, parse_rational

__all__ = [
    "ExponentConfig",
    "Violation",
    "ResonanceReport",
    "AssumptionViolatedError",
    "ConfigParseError",
    "classify",
    "dims_for_config",
    "config_from_json",
    "config_to_json_dict",
]

POINT = "point"
INFINITY = "infinity"
DIAGONAL = "diagonal"


class ConfigParseError(ValueError):
    """A configuration document that does not parse; message carries the field path."""


@dataclass(frozen=True)
class ExponentConfig:
    """Exponents (g, lambda_1..lambda_n) of the integrand, with m variables."""

    m: int
    g: Fraction
    lambdas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be an integer >= 1, got {self.m!r}")
        object.__setattr__(self, "g", Fraction(self.g))
        object.__setattr__(self, "lambdas", tuple(Fraction(lam) for lam in self.lambdas))
        if len(self.lambdas) < 1:
            raise ValueError("at least one lambda exponent is required")

    @property
    def n(self) -> int:
        return len(self.lambdas)

    @property
    def lambda_infinity(self) -> Fraction:
        """Exponent at infinity: -sum(lambdas) - (m-1) g."""
        return -sum(self.lambdas, Fraction(0)) - (self.m - 1) * self.g


@dataclass(frozen=True)
class Violation:
    """One failed non-resonance test.

    ``condition`` is one of ``point``/``infinity``/``diagonal``; ``j`` is the
    1-based point index (point condition only); ``k`` the coincidence order;
    ``value`` the offending integer value of the tested combination.
    """

    condition: str
    k: int
    value: Fraction
    j: int | None = None


@dataclass(frozen=True)
class ResonanceReport:
    """Classification verdict for one configuration."""

    resonant_indices: tuple[int, ...]
    lambda_infinity: Fraction
    violations: tuple[Violation, ...]

    @property
    def r(self) -> int:
        return len(self.resonant_indices)

    @property
    def assumption_valid(self) -> bool:
        return not self.violations


class AssumptionViolatedError(Exception):
    """Raised when dimension formulas are requested outside their hypotheses."""

    def __init__(self, report: ResonanceReport):
        conditions = ", ".join(
            sorted({v.condition for v in report.violations})
        )
        super().__init__(
            f"{len(report.violations)} non-resonance assumption(s) violated ({conditions})"
        )
        self.report = report


def _choose2(k: int) -> int:
    # C(k, 2) with the explicit convention C(1, 2) = 0.
    return k * (k - 1) // 2


def classify(cfg: ExponentConfig) -> ResonanceReport:
    """Classify a configuration: resonant index set plus every failed assumption.

    Resonance of index j means 2 lambda_j + g is an integer; the resonant
    set is forced by the data (there is no way to opt a resonant index
    out). Violations are collected exhaustively over all (condition, j, k)
    in deterministic order: point tests first (k ascending, then j), then
    infinity, then diagonal.
    """
    m = cfg.m
    g = cfg.g
    lam_inf = cfg.lambda_infinity

    resonant = tuple(
        j for j, lam in enumerate(cfg.lambdas, start=1) if is_integer(2 * lam + g)
    )

    violations: list[Violation] = []
    point_ks = [1] + list(range(3, m + 1))
    for k in point_ks:
        shift = _choose2(k) * g
        for j, lam in enumerate(cfg.lambdas, start=1):
            value = k * lam + shift
            if is_integer(value):
                violations.append(Violation(condition=POINT, j=j, k=k, value=value))
    for k in range(1, m + 1):
        value = k * lam_inf + _choose2(k) * g
        if is_integer(value):
            violations.append(Violation(condition=INFINITY, k=k, value=value))
    for k in range(2, m + 1):
        value = _choose2(k) * g
        if is_integer(value):
            violations.append(Violation(condition=DIAGONAL, k=k, value=value))

    return ResonanceReport(
        resonant_indices=resonant,
        lambda_infinity=lam_inf,
        violations=tuple(violations),
    )


def dims_for_config(cfg: ExponentConfig) -> tuple[ResonanceReport, DimensionRecord]:
    """Classify, then compute the dimension record for (m, n, r) with r from the report.

    Raises:
        AssumptionViolatedError: some non-resonance assumption fails; the
            dimension formulas are not asserted there.
    """
    report = classify(cfg)
    if not report.assumption_valid:
        raise AssumptionViolatedError(report)
    record = compute_record(DimQuery(m=cfg.m, n=cfg.n, r=report.r))
    return report, record


def config_from_json(doc: str | bytes | dict[str, Any]) -> ExponentConfig:
    """Parse the JSON shape {"m": int, "g": "p/q", "lambdas": ["p/q", ...]}.

    Error messages name the offending field (and list position for
    lambdas) so a malformed rational is easy to locate.
    """
    if isinstance(doc, (str, bytes)):
        try:
            data = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ConfigParseError(f"not valid JSON: {exc}") from exc
    else:
        data = doc
    if not isinstance(data, dict):
        raise ConfigParseError("top-level JSON value must be an object")

    unknown = sorted(set(data) - {"m", "g", "lambdas"})
    if unknown:
        raise ConfigParseError(f"unknown field(s): {', '.join(unknown)}")
    for field in ("m", "g", "lambdas"):
        if field not in data:
            raise ConfigParseError(f"missing field {field!r}")

    m = data["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ConfigParseError(f"m: expected an integer >= 1, got {m!r}")
    try:
        g = parse_rational(data["g"])
    except ValueError as exc:
        raise ConfigParseError(f"g: {exc}") from exc
    raw_lambdas = data["lambdas"]
    if not isinstance(raw_lambdas, list) or not raw_lambdas:
        raise ConfigParseError("lambdas: expected a nonempty list of rational strings")
    lambdas = []
    for idx, item in enumerate(raw_lambdas):
        try:
            lambdas.append(parse_rational(item))
        except ValueError as exc:
            raise ConfigParseError(f"lambdas[{idx}]: {exc}") from exc
    return ExponentConfig(m=m, g=g, lambdas=tuple(lambdas))


def config_to_json_dict(cfg: ExponentConfig) -> dict[str, Any]:
    """The canonical JSON object for a configuration (round-trips exactly)."""
    return {
        "m": cfg.m,
        "g": format_rational(cfg.g),
        "lambdas": [format_rational(lam) for lam in cfg.lambdas],
    }
