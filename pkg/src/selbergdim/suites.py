"""Seeded and exhaustive verification suites behind ``selbergdim verify``.

Randomized suites draw parameters from a self-contained 64-bit linear
congruential generator (documented in the README) rather than the host
language's RNG, so a reported counterexample is reproducible from
(suite, seed, cases) alone, in any reimplementation. Draws that hit a
declared error case (a pole before termination, a vanishing closed-form
denominator) are skipped and counted; ``cases`` counts actual checks.

Exhaustive suites ignore seed and cases:

* ``hockey``      -- hockey-stick identity for all 0 <= s < r <= 40;
* ``routes``      -- every dimension route agrees, D = K + I, and the
                     hypergeometric value is integral, on the grid
                     1 <= m <= 8, 2 <= n <= 10, 0 <= r <= n;
* ``closedforms`` -- image-dimension closed forms at r = n and r = n - 1,
                     plus the parity-split product form, for
                     2 <= m <= 8, m <= n <= 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import dims, hyper
from .exactnum import binom, format_rational, hockey_stick_check

__all__ = ["Lcg", "SuiteResult", "SUITE_NAMES", "DEFAULT_CASES", "run_suites"]

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64;
    each draw first steps the state, then maps the top 31 bits onto the
    requested range by remainder.
    """

    def __init__(self, seed: int):
        self.state = seed & _LCG_MASK

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        self.state = (_LCG_MULT * self.state + _LCG_INC) & _LCG_MASK
        return lo + (self.state >> 33) % (hi - lo + 1)

    def rational(self, rng_num: int = 8, max_den: int = 4) -> Fraction:
        """Draw numerator in [-rng_num, rng_num], then denominator in [1, max_den]."""
        num = self.randint(-rng_num, rng_num)
        den = self.randint(1, max_den)
        return Fraction(num, den)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    passed: int
    failed: int
    skipped: int
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.failed == 0


SUITE_NAMES: tuple[str, ...] = (
    "pfaff",
    "contiguity",
    "pochhammer",
    "hockey",
    "routes",
    "closedforms",
)

DEFAULT_CASES: dict[str, int] = {"pfaff": 500, "contiguity": 200, "pochhammer": 200}


def _run_pfaff(seed: int, cases: int) -> SuiteResult:
    rng = Lcg(seed)
    passed = failed = skipped = 0
    counterexample = None
    while passed + failed < cases:
        a = rng.rational()
        b = rng.rational()
        c = rng.rational()
        j = rng.randint(1, 8)
        try:
            ok = hyper.pfaff_saalschutz_check(a, b, c, j)
        except hyper.HyperEvalError:
            skipped += 1
            continue
        if ok:
            passed += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = (
                    f"a={format_rational(a)} b={format_rational(b)} "
                    f"c={format_rational(c)} j={j}"
                )
    return SuiteResult("pfaff", passed, failed, skipped, counterexample)


def _run_contiguity(seed: int, cases: int) -> SuiteResult:
    rng = Lcg(seed)
    passed = failed = skipped = 0
    counterexample = None
    while passed + failed < cases:
        a = rng.rational()
        b = rng.rational()
        c = rng.rational()
        j = rng.randint(0, 10)
        try:
            residual = hyper.contiguity_residual(a, b, c, j)
        except hyper.HyperEvalError:
            skipped += 1
            continue
        if residual == 0:
            passed += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = (
                    f"a={format_rational(a)} b={format_rational(b)} "
                    f"c={format_rational(c)} j={j} residual={format_rational(residual)}"
                )
    return SuiteResult("contiguity", passed, failed, skipped, counterexample)


def _run_pochhammer(seed: int, cases: int) -> SuiteResult:
    rng = Lcg(seed)
    passed = failed = 0
    counterexample = None
    for _ in range(cases):
        a = rng.rational()
        b = rng.rational()
        k = rng.randint(0, 10)
        residual = hyper.pochhammer_identity_residual(a, b, k)
        if residual == 0:
            passed += 1
        else:
            failed += 1
            if counterexample is None:
                counterexample = (
                    f"a={format_rational(a)} b={format_rational(b)} k={k} "
                    f"residual={format_rational(residual)}"
                )
    return SuiteResult("pochhammer", passed, failed, 0, counterexample)


def _run_hockey() -> SuiteResult:
    passed = failed = 0
    counterexample = None
    for r in range(1, 41):
        for s in range(0, r):
            if hockey_stick_check(r, s):
                passed += 1
            else:
                failed += 1
                if counterexample is None:
                    counterexample = f"r={r} s={s}"
    return SuiteResult("hockey", passed, failed, 0, counterexample)


def _run_routes() -> SuiteResult:
    passed = failed = 0
    counterexample = None
    for m in range(1, 9):
        for n in range(2, 11):
            for r in range(0, n + 1):
                rec = dims.compute_record(dims.DimQuery(m, n, r))
                ok = (
                    rec.routes_agree
                    and rec.D == rec.K_closed + rec.I_sum
                    and rec.I_hyp is not None
                    and rec.I_hyp.denominator == 1
                )
                if ok:
                    passed += 1
                else:
                    failed += 1
                    if counterexample is None:
                        counterexample = (
                            f"m={m} n={n} r={r}: D={rec.D} "
                            f"K=({rec.K_recursion},{rec.K_reduction},{rec.K_closed}) "
                            f"I=({rec.I_sum},{rec.I_hyp},{rec.I_subtract})"
                        )
    return SuiteResult("routes", passed, failed, 0, counterexample)


def _run_closedforms() -> SuiteResult:
    passed = failed = 0
    counterexample = None
    for m in range(2, 9):
        for n in range(m, 13):
            extremes = dims.dim_I_extremes(m, n)
            ok = (
                extremes.at_n == dims.dim_I_sum(m, n, n)
                and extremes.at_n_minus_1 == dims.dim_I_sum(m, n, n - 1)
                and extremes.at_n == binom(n, m) - binom(n, m - 1)
                and extremes.at_n_minus_1 == binom(n - 1, m)
                and dims.dim_I_full_resonance_product(m, n) == extremes.at_n
            )
            if ok:
                passed += 1
            else:
                failed += 1
                if counterexample is None:
                    counterexample = f"m={m} n={n}"
    return SuiteResult("closedforms", passed, failed, 0, counterexample)


def run_suites(suite: str, seed: int = 0, cases: int | None = None) -> list[SuiteResult]:
    """Run one named suite, or all of them, deterministically.

    ``cases`` applies to the randomized suites only and defaults per suite
    (pfaff 500, contiguity 200, pochhammer 200); exhaustive suites ignore
    it. Raises ValueError for an unknown suite name.
    """
    if suite != "all" and suite not in SUITE_NAMES:
        raise ValueError(
            f"unknown suite {suite!r}; expected one of {', '.join(SUITE_NAMES + ('all',))}"
        )
    names = SUITE_NAMES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name == "pfaff":
            results.append(_run_pfaff(seed, cases or DEFAULT_CASES["pfaff"]))
        elif name == "contiguity":
            results.append(_run_contiguity(seed, cases or DEFAULT_CASES["contiguity"]))
        elif name == "pochhammer":
            results.append(_run_pochhammer(seed, cases or DEFAULT_CASES["pochhammer"]))
        elif name == "hockey":
            results.append(_run_hockey())
        elif name == "routes":
            results.append(_run_routes())
        elif name == "closedforms":
            results.append(_run_closedforms())
    return results
