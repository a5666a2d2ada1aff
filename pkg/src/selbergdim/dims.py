"""Dimension counts for the invariant twisted homology of a Selberg-type integrand.

For m integration variables, n marked points and r resonant exponents the
three quantities of interest are

* ``D`` -- the dimension of the full invariant (locally finite) twisted
  homology, ``D(m, n) = C(n+m-2, m)``;
* ``K`` -- the dimension of the kernel of the regularization map from
  compact to locally finite homology;
* ``I`` -- the dimension of its image, the space of regularizable cycles,
  with ``D = K + I``.

K and I are each computed by several mutually independent routes:

* ``dim_K_recursion`` peels off one resonant point at a time,
* ``dim_K_reduction`` drops two integration variables at a time,
* ``dim_K_closed`` is a single alternating binomial sum,
* ``dim_I_sum`` is the complementary alternating sum,
* ``dim_I_hyp`` packages that sum as a prefactored terminating 3F2,
* the subtraction route recovers I as D - K.

Agreement of all routes is recorded, never assumed: ``compute_record``
fills every field and flags disagreement instead of raising. The closed
forms at full resonance (r = n) and one below it (r = n - 1) are exposed
separately, including the parity-split product form used to cross-check
the r = n value.

A note on conventions: the alternating sums use D(0, n) = 1 and
D(m, n) = 0 for m < 0, which is the unique choice under which they
reproduce the base cases K(2, n, r) = r and the closed forms at extreme
resonance. The recursion route never consumes D(0, n) because m = 2 is a
base case, so the two routes cannot disagree over it.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, NamedTuple

from .exactnum import binom
from .hyper import HypParams3F2, HyperEvalError, eval_terminating_3f2

__all__ = [
    "DomainError",
    "DimQuery",
    "DimensionRecord",
    "dim_D",
    "dim_K_recursion",
    "dim_K_reduction",
    "dim_K_closed",
    "dim_I_sum",
    "dim_I_hyp",
    "dim_I_extremes",
    "dim_I_full_resonance_product",
    "compute_record",
    "table",
    "RPolicy",
    "R_POLICIES",
]

RPolicy = Literal["all", "only_n", "only_n_minus_1"]
R_POLICIES: tuple[str, ...] = ("all", "only_n", "only_n_minus_1")


class DomainError(ValueError):
    """An (m, n, r) query outside the defined domain."""


@dataclass(frozen=True)
class DimQuery:
    """A dimension query: m >= 1 variables, n >= 1 points, 0 <= r <= n resonant."""

    m: int
    n: int
    r: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.r <= self.n:
            raise DomainError(f"r must satisfy 0 <= r <= n={self.n}, got {self.r}")


@dataclass(frozen=True)
class DimensionRecord:
    """Every route's answer for one query, plus the agreement verdicts.

    ``I_hyp`` is kept as an exact rational (its integrality is part of what
    is being verified); it is None exactly when ``hyp_error`` is set, which
    can only happen outside the n >= 2 regime. ``routes_agree`` requires all
    three K routes and all three I routes to coincide. ``in_validity_range``
    is the sanity check that every computed dimension is a plausible one:
    nonnegative and K <= D.
    """

    query: DimQuery
    D: int
    K_recursion: int
    K_reduction: int
    K_closed: int
    I_sum: int
    I_hyp: Fraction | None
    I_subtract: int
    hyp_error: str | None
    routes_agree: bool
    in_validity_range: bool

    @property
    def K(self) -> int | None:
        """The agreed kernel dimension, or None if the routes disagree."""
        return self.K_closed if self.routes_agree else None

    @property
    def I(self) -> int | None:
        """The agreed image dimension, or None if the routes disagree."""
        return self.I_sum if self.routes_agree else None


def _check_query(m: int, n: int, r: int) -> None:
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got (m={m}, n={n})")
    if not 0 <= r <= n:
        raise DomainError(f"r must satisfy 0 <= r <= n={n}, got {r}")


@functools.cache
def dim_D(m: int, n: int) -> int:
    """Total invariant dimension C(n+m-2, m), with D(0, n) = 1 and D(m<0, n) = 0.

    The out-of-range conventions make the alternating sums over s truncate
    by themselves.
    """
    if m < 0:
        return 0
    if m == 0:
        return 1
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return binom(n + m - 2, m)


# The three K routes share the same base cases: K(m, n, 0) = 0, K(1, n, r) = 0,
# and K(2, n, r) = r. The last is imported as an axiom (rank one kernel per
# resonant double point when m = 2), not re-derived here.


@functools.cache
def _k_recursion(m: int, n: int, r: int) -> int:
    if r == 0 or m == 1:
        return 0
    if m == 2:
        return r
    return dim_D(m - 2, n) + _k_recursion(m, n, r - 1) - _k_recursion(m - 2, n, r - 1)


def dim_K_recursion(m: int, n: int, r: int) -> int:
    """Kernel dimension via the peel-one-resonant-point recursion.

        K(m, n, r) = D(m-2, n) + K(m, n, r-1) - K(m-2, n, r-1)

    for m >= 3, on top of the shared base cases. Memoized; safe to call
    concurrently (cache inserts are idempotent).
    """
    _check_query(m, n, r)
    return _k_recursion(m, n, r)


@functools.cache
def _k_reduction(m: int, n: int, r: int) -> int:
    if r == 0 or m == 1:
        return 0
    if m == 2:
        return r
    return r * dim_D(m - 2, n) - sum(_k_reduction(m - 2, n, t) for t in range(1, r))


def dim_K_reduction(m: int, n: int, r: int) -> int:
    """Kernel dimension via the drop-two-variables reduction.

        K(m, n, r) = r D(m-2, n) - K(m-2, n, 1) - ... - K(m-2, n, r-1)

    for m >= 3, recursing on m - 2 down to the shared base cases. For m = 3
    this collapses to r * D(1, n) = r (n - 1).
    """
    _check_query(m, n, r)
    return _k_reduction(m, n, r)


def dim_K_closed(m: int, n: int, r: int) -> int:
    """Kernel dimension as the alternating sum over s >= 1 of (-1)^(s-1) C(r, s) D(m-2s, n).

    C(r, s) = 0 for s > r and the D conventions truncate the sum at
    s = min(r, floor(m/2)).
    """
    _check_query(m, n, r)
    return sum(
        (-1) ** (s - 1) * binom(r, s) * dim_D(m - 2 * s, n)
        for s in range(1, m // 2 + 1)
    )


def dim_I_sum(m: int, n: int, r: int) -> int:
    """Image dimension as the alternating sum over 0 <= s <= floor(m/2) of (-1)^s C(r, s) D(m-2s, n)."""
    _check_query(m, n, r)
    return sum(
        (-1) ** s * binom(r, s) * dim_D(m - 2 * s, n) for s in range(0, m // 2 + 1)
    )


def hyp_params(m: int, n: int, r: int) -> HypParams3F2:
    """The terminating 3F2 whose value, times C(n+m-2, m), is the image dimension.

    Upper row (-r, -m/2, (1-m)/2), lower row ((2-n-m)/2, (3-n-m)/2), at x=1.
    """
    return HypParams3F2(
        upper=(Fraction(-r), Fraction(-m, 2), Fraction(1 - m, 2)),
        lower=(Fraction(2 - n - m, 2), Fraction(3 - n - m, 2)),
    )


def dim_I_hyp(m: int, n: int, r: int) -> Fraction:
    """Image dimension via the hypergeometric route, as an exact rational.

    Returns C(n+m-2, m) * 3F2(-r, -m/2, (1-m)/2; (2-n-m)/2, (3-n-m)/2; 1).
    The value is integral and equals ``dim_I_sum`` whenever the series is
    defined; it is returned unconverted so that an integrality failure
    would be observable rather than masked. Series errors propagate.
    """
    _check_query(m, n, r)
    return dim_D(m, n) * eval_terminating_3f2(hyp_params(m, n, r))


class ExtremeImageDims(NamedTuple):
    at_n: int
    at_n_minus_1: int


def dim_I_extremes(m: int, n: int) -> ExtremeImageDims:
    """Closed forms of the image dimension at full and almost-full resonance.

        I(m, n, n)   = C(n, m) - C(n, m-1)
        I(m, n, n-1) = C(n-1, m)

    The difference can be negative (it is for n < 2m); values are returned
    as computed and the validity question is left to the record flags.
    """
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got (m={m}, n={n})")
    return ExtremeImageDims(
        at_n=binom(n, m) - binom(n, m - 1),
        at_n_minus_1=binom(n - 1, m),
    )


def dim_I_full_resonance_product(m: int, n: int) -> Fraction:
    """Parity-split product form of the image dimension at full resonance.

    For even m = 2j:  n (n-1) ... (n-2j+2) / (2j)!  *  (n + 1 - 4j)
    For odd  m = 2j+1: n (n-1) ... (n-2j+1) / (2j+1)! * (n - 4j - 1)

    Exact rational on the way through; equals ``dim_I_extremes(m, n).at_n``.
    Requires m >= 2 so that both parities have a nonempty product.
    """
    if m < 2:
        raise DomainError(f"product form requires m >= 2, got {m}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if m % 2 == 0:
        j = m // 2
        falling = Fraction(1)
        for t in range(n, n - 2 * j + 1, -1):  # 2j - 1 factors: n .. n-2j+2
            falling *= t
        return falling / math.factorial(2 * j) * (n + 1 - 4 * j)
    j = (m - 1) // 2
    falling = Fraction(1)
    for t in range(n, n - 2 * j, -1):  # 2j factors: n .. n-2j+1
        falling *= t
    return falling / math.factorial(2 * j + 1) * (n - 4 * j - 1)


def compute_record(query: DimQuery) -> DimensionRecord:
    """Run every route for one query and report, never raise, on disagreement.

    A hypergeometric-route evaluation error (possible only at n = 1, where
    a lower series parameter can vanish too early) is recorded in
    ``hyp_error`` with ``I_hyp = None``; all integer routes are still filled
    in. Disagreement of any kind yields ``routes_agree = False``.
    """
    m, n, r = query.m, query.n, query.r
    d = dim_D(m, n)
    k_rec = dim_K_recursion(m, n, r)
    k_red = dim_K_reduction(m, n, r)
    k_clo = dim_K_closed(m, n, r)
    i_sum = dim_I_sum(m, n, r)
    i_sub = d - k_clo
    i_hyp: Fraction | None
    hyp_error: str | None
    try:
        i_hyp = dim_I_hyp(m, n, r)
        hyp_error = None
    except HyperEvalError as exc:
        i_hyp = None
        hyp_error = str(exc)

    routes_agree = (
        k_rec == k_red == k_clo
        and i_hyp is not None
        and Fraction(i_sum) == i_hyp
        and i_sum == i_sub
    )
    ks = (k_rec, k_red, k_clo)
    is_ = [i_sum, i_sub] + ([i_hyp] if i_hyp is not None else [])
    in_validity = (
        d >= 0
        and all(k >= 0 for k in ks)
        and all(k <= d for k in ks)
        and all(i >= 0 for i in is_)
    )
    return DimensionRecord(
        query=query,
        D=d,
        K_recursion=k_rec,
        K_reduction=k_red,
        K_closed=k_clo,
        I_sum=i_sum,
        I_hyp=i_hyp,
        I_subtract=i_sub,
        hyp_error=hyp_error,
        routes_agree=routes_agree,
        in_validity_range=in_validity,
    )


def _r_values(n: int, r_policy: str) -> Iterator[int]:
    if r_policy == "all":
        yield from range(0, n + 1)
    elif r_policy == "only_n":
        yield n
    elif r_policy == "only_n_minus_1":
        yield n - 1
    else:
        raise DomainError(f"unknown r policy {r_policy!r}; expected one of {R_POLICIES}")


def table(
    m_range: tuple[int, int],
    n_range: tuple[int, int],
    r_policy: RPolicy = "all",
) -> list[DimensionRecord]:
    """Records for every (m, n, r) in the given inclusive ranges, in (m, n, r) order.

    ``r_policy`` selects all 0 <= r <= n, only r = n, or only r = n - 1.
    Raises DomainError on empty or out-of-range bounds.
    """
    m_lo, m_hi = m_range
    n_lo, n_hi = n_range
    if m_lo < 1 or n_lo < 1:
        raise DomainError(f"range bounds must be >= 1, got m>={m_lo}, n>={n_lo}")
    if m_hi < m_lo or n_hi < n_lo:
        raise DomainError(
            f"empty range: m {m_lo}..{m_hi}, n {n_lo}..{n_hi} (bounds are inclusive)"
        )
    if r_policy not in R_POLICIES:
        raise DomainError(f"unknown r policy {r_policy!r}; expected one of {R_POLICIES}")
    return [
        compute_record(DimQuery(m, n, r))
        for m in range(m_lo, m_hi + 1)
        for n in range(n_lo, n_hi + 1)
        for r in _r_values(n, r_policy)
    ]
