from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selbergdim.dims import (
    DimensionRecord,
    DimQuery,
    DomainError,
    compute_record,
    dim_D,
    dim_I_extremes,
    dim_I_full_resonance_product,
    dim_I_hyp,
    dim_I_sum,
    dim_K_closed,
    dim_K_recursion,
    dim_K_reduction,
    table,
)
from selbergdim.exactnum import binom


class TestDimD:
    def test_basic(self):
        assert dim_D(2, 3) == 3  # C(3, 2)
        assert dim_D(4, 5) == 35  # C(7, 4)
        assert dim_D(1, 9) == 8  # C(8, 1)

    def test_conventions(self):
        assert dim_D(0, 7) == 1
        assert dim_D(-2, 7) == 0
        assert dim_D(-1, 3) == 0

    def test_n_one(self):
        assert dim_D(3, 1) == 0  # C(2, 3)


class TestKernelRoutes:
    def test_recursion_base_cases(self):
        for n in range(2, 8):
            for r in range(0, n + 1):
                assert dim_K_recursion(2, n, r) == r
                assert dim_K_recursion(1, n, r) == 0
            assert dim_K_recursion(5, n, 0) == 0

    def test_recursion_spot_value(self):
        # Telescoping by hand: K(4,5,1) = D(2,5) = 10, then
        # 10 + 10 - K(2,5,1) = 19, then 10 + 19 - K(2,5,2) = 27.
        assert dim_K_recursion(4, 5, 1) == 10
        assert dim_K_recursion(4, 5, 2) == 19
        assert dim_K_recursion(4, 5, 3) == 27

    def test_reduction_spot_value(self):
        # 3 * D(2,5) - K(2,5,1) - K(2,5,2) = 30 - 1 - 2 = 27.
        assert dim_K_reduction(4, 5, 3) == 27

    def test_reduction_m3_closed_form(self):
        for n in range(2, 10):
            for r in range(0, n + 1):
                assert dim_K_reduction(3, n, r) == r * (n - 1)

    def test_reduction_r1_is_dim_D(self):
        for m in range(2, 9):
            for n in range(2, 8):
                assert dim_K_reduction(m, n, 1) == dim_D(m - 2, n)
                assert dim_K_recursion(m, n, 1) == dim_D(m - 2, n)

    def test_closed_spot_value(self):
        # C(3,1)*10 - C(3,2)*1 = 30 - 3 = 27.
        assert dim_K_closed(4, 5, 3) == 27

    def test_closed_m2_needs_empty_case_convention(self):
        # Single term C(r,1)*D(0,n); correct only because D(0,n) = 1.
        for n in range(2, 10):
            for r in range(0, n + 1):
                assert dim_K_closed(2, n, r) == r

    def test_closed_r_zero(self):
        assert dim_K_closed(6, 9, 0) == 0

    def test_domain_errors(self):
        for fn in (dim_K_recursion, dim_K_reduction, dim_K_closed, dim_I_sum):
            with pytest.raises(DomainError):
                fn(3, 5, -1)
            with pytest.raises(DomainError):
                fn(3, 5, 6)
            with pytest.raises(DomainError):
                fn(0, 5, 1)


class TestImageRoutes:
    def test_sum_r_zero_is_total(self):
        for m in range(1, 8):
            for n in range(2, 8):
                assert dim_I_sum(m, n, 0) == dim_D(m, n)

    def test_sum_spot_values(self):
        assert dim_I_sum(4, 5, 3) == 8  # 35 - 3*10 + 3*1
        assert dim_I_sum(2, 4, 3) == 3  # C(3, 2)

    def test_hyp_spot_values(self):
        assert dim_I_hyp(4, 5, 3) == Fraction(8)  # 35 * 8/35
        assert dim_I_hyp(2, 4, 4) == Fraction(2)  # 6 * (1 - 2/3)

    def test_hyp_r_zero_is_prefactor(self):
        for m in range(1, 7):
            for n in range(2, 7):
                assert dim_I_hyp(m, n, 0) == binom(n + m - 2, m)

    def test_hyp_is_integral_rational(self):
        value = dim_I_hyp(5, 7, 4)
        assert isinstance(value, Fraction)
        assert value.denominator == 1


class TestExtremeResonance:
    def test_spot_values(self):
        assert dim_I_extremes(2, 4) == (2, 3)
        assert dim_I_extremes(3, 6) == (5, 10)  # (20 - 15, 10)

    def test_small_n_goes_negative(self):
        # C(2,2) - C(2,1) = -1 at full resonance; at r = n - 1 = 1 the value
        # is C(1,2) = 0, confirmed by the alternating-sum route below.
        assert dim_I_extremes(2, 2) == (-1, 0)
        assert dim_I_sum(2, 2, 1) == 0

    def test_matches_sum_route(self):
        for m in range(1, 9):
            for n in range(max(m, 1), 13):
                at_n, at_n_minus_1 = dim_I_extremes(m, n)
                assert at_n == dim_I_sum(m, n, n), (m, n)
                assert at_n_minus_1 == dim_I_sum(m, n, n - 1), (m, n)

    def test_product_form_spot_values(self):
        assert dim_I_full_resonance_product(2, 4) == 2  # (4/2!) * 1
        assert dim_I_full_resonance_product(3, 6) == 5  # (30/3!) * 1
        assert dim_I_full_resonance_product(2, 3) == 0  # vanishing last factor

    def test_product_form_matches_extremes(self):
        for m in range(2, 9):
            for n in range(1, 13):
                assert dim_I_full_resonance_product(m, n) == dim_I_extremes(m, n).at_n

    def test_product_form_requires_m_at_least_two(self):
        with pytest.raises(DomainError):
            dim_I_full_resonance_product(1, 5)


class TestComputeRecord:
    def test_agreeing_record(self):
        rec = compute_record(DimQuery(4, 5, 3))
        assert rec.D == 35
        assert rec.K_recursion == rec.K_reduction == rec.K_closed == 27
        assert rec.I_sum == rec.I_subtract == 8 and rec.I_hyp == 8
        assert rec.routes_agree and rec.in_validity_range
        assert rec.K == 27 and rec.I == 8

    def test_out_of_validity_record(self):
        rec = compute_record(DimQuery(2, 2, 2))
        assert rec.D == 1
        assert rec.K_closed == 2
        assert rec.I_sum == -1
        assert rec.I_hyp == Fraction(-1)
        assert rec.routes_agree
        assert not rec.in_validity_range

    def test_r_zero_record(self):
        rec = compute_record(DimQuery(5, 7, 0))
        assert rec.K_closed == 0
        assert rec.I_sum == rec.D
        assert rec.routes_agree

    def test_n_one_hyp_pole_is_flagged_not_raised(self):
        # At n=1 with even m and r >= m/2 a lower series parameter vanishes
        # too early; the record carries the error instead of aborting.
        rec = compute_record(DimQuery(2, 1, 1))
        assert rec.I_hyp is None
        assert rec.hyp_error is not None
        assert not rec.routes_agree
        assert rec.K is None and rec.I is None
        assert rec.I_sum == rec.I_subtract == -1  # integer routes still filled

    def test_query_validation(self):
        with pytest.raises(DomainError):
            DimQuery(0, 4, 1)
        with pytest.raises(DomainError):
            DimQuery(2, 0, 0)
        with pytest.raises(DomainError):
            DimQuery(2, 4, 5)
        with pytest.raises(DomainError):
            DimQuery(2, 4, -1)


class TestTable:
    def test_row_count_all(self):
        rows = table((2, 2), (4, 4), "all")
        assert len(rows) == 5
        assert [rec.query.r for rec in rows] == [0, 1, 2, 3, 4]

    def test_only_n_grid(self):
        rows = table((2, 4), (4, 6), "only_n")
        assert len(rows) == 9
        assert all(rec.routes_agree for rec in rows)
        assert all(rec.query.r == rec.query.n for rec in rows)

    def test_only_n_minus_1(self):
        rows = table((3, 3), (5, 6), "only_n_minus_1")
        assert [(rec.query.n, rec.query.r) for rec in rows] == [(5, 4), (6, 5)]

    def test_lexicographic_order(self):
        rows = table((2, 3), (2, 3), "all")
        keys = [(rec.query.m, rec.query.n, rec.query.r) for rec in rows]
        assert keys == sorted(keys)

    def test_bad_ranges(self):
        with pytest.raises(DomainError):
            table((3, 2), (4, 4), "all")
        with pytest.raises(DomainError):
            table((2, 2), (0, 4), "all")
        with pytest.raises(DomainError):
            table((2, 2), (4, 4), "sometimes")


class TestConcurrency:
    def test_concurrent_callers_see_identical_records(self):
        queries = [DimQuery(m, n, r) for m in (2, 5, 8) for n in (3, 9) for r in range(0, 4)]

        def worker(_):
            return [compute_record(q) for q in queries]

        with ThreadPoolExecutor(max_workers=8) as pool:
            batches = list(pool.map(worker, range(16)))
        assert all(batch == batches[0] for batch in batches)
        assert all(rec.routes_agree for rec in batches[0])


class TestRouteEquivalence:
    """The big exhaustive grids live in the acceptance suite; these sample."""

    @given(
        st.integers(min_value=1, max_value=8),
        st.integers(min_value=2, max_value=10),
        st.data(),
    )
    def test_all_routes_agree(self, m, n, data):
        r = data.draw(st.integers(min_value=0, max_value=n))
        rec = compute_record(DimQuery(m, n, r))
        assert rec.routes_agree, (m, n, r)
        assert rec.D == rec.K_closed + rec.I_sum

    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=2, max_value=10))
    def test_record_agreement_flag_matches_fields(self, m, n):
        rec = compute_record(DimQuery(m, n, n // 2))
        assert rec.routes_agree == (
            rec.K_recursion == rec.K_reduction == rec.K_closed
            and rec.I_hyp is not None
            and Fraction(rec.I_sum) == rec.I_hyp
            and rec.I_sum == rec.I_subtract
        )
        assert isinstance(rec, DimensionRecord)
