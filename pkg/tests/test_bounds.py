"""Tests for the closed-form bounds, the threshold sequence, and rate curves."""

from __future__ import annotations

import math

import pytest

from twep.bounds import (
    bounds_csv,
    bounds_table,
    gv_k,
    hamming_max_k,
    mi_sequence,
    rate_table,
    rates_csv,
    singleton_max_k,
    thm2_k,
)
from twep.errorspace import count_errors

MI_FIRST_TEN = [1, 2, 4, 7, 12, 21, 37, 67, 124, 234]


class TestHamming:
    def test_two_error_threshold_at_ten(self):
        assert hamming_max_k(10, 2) == 1
        assert hamming_max_k(9, 2) == -1

    def test_no_errors_keeps_everything(self):
        for n in (1, 5, 12):
            assert hamming_max_k(n, 0) == n

    def test_six_registers_one_error(self):
        # 2^2 * 19 = 76 > 64, 2^1 * 19 = 38 <= 64.
        assert hamming_max_k(6, 1) == 1

    def test_monotone_in_n_and_t(self):
        for t in range(0, 4):
            values = [hamming_max_k(n, t) for n in range(max(1, t), 25)]
            assert values == sorted(values)
        for n in (8, 12, 20):
            values = [hamming_max_k(n, t) for t in range(0, n + 1)]
            assert values == sorted(values, reverse=True)


class TestSingleton:
    def test_five_registers_one_error(self):
        assert singleton_max_k(5, 1) == 1

    def test_four_registers_one_error(self):
        assert singleton_max_k(4, 1) == 0

    def test_no_errors(self):
        assert singleton_max_k(9, 0) == 9

    def test_negative_sentinel(self):
        assert singleton_max_k(3, 1) == -1


class TestGv:
    def test_nine_one(self):
        # 2^9 = 512 >= 352 but 2^8 = 256 < 352.
        assert count_errors(9, 2, 2) == 352
        assert gv_k(9, 1) == 0

    def test_no_errors(self):
        assert gv_k(7, 0) == 7

    def test_precondition(self):
        with pytest.raises(ValueError):
            gv_k(5, 3)


class TestThm2:
    def test_twenty_one(self):
        assert count_errors(20, 1, 2) == 61
        assert thm2_k(20, 1) == 12

    def test_no_errors_costs_two(self):
        for n in (3, 10):
            assert thm2_k(n, 0) == n - 2

    def test_nine_two_is_vacuous(self):
        assert thm2_k(9, 2) < 0

    def test_fifty_five_beats_gv(self):
        assert gv_k(50, 5) < thm2_k(50, 5)

    def test_dominates_gv_on_grid(self):
        for n in range(4, 61):
            for t in range(1, n // 4 + 1):
                assert thm2_k(n, t) >= gv_k(n, t), (n, t)


class TestMiSequence:
    def test_first_ten(self):
        assert mi_sequence(10) == MI_FIRST_TEN

    def test_base_case(self):
        assert mi_sequence(1) == [1]

    def test_power_of_two_bracket(self):
        seq = mi_sequence(41)
        for i in range(8, 41):
            assert 2 ** (i - 2) <= seq[i] <= 2 ** (i - 1), i

    def test_growth_sandwich(self):
        seq = mi_sequence(40)
        for i in range(len(seq) - 1):
            upper = 2 * seq[i]
            lower = 2 * seq[i] - math.isqrt(2 * seq[i]) - 1
            assert lower <= seq[i + 1] <= upper, i

    def test_defining_inequality_is_tight(self):
        seq = mi_sequence(30)
        for prev, cur in zip(seq, seq[1:]):
            bound = 2 * prev + 2
            assert cur <= (bound - cur) ** 2
            assert (cur + 1) > bound or (cur + 1) > (bound - cur - 1) ** 2


class TestRates:
    def test_zero_error_endpoint(self):
        table = rate_table(51)
        assert table[0].x == 0.0
        assert table[0].rate_2epp == 1.0
        assert table[0].rate_gv == 1.0

    def test_ten_percent_point(self):
        table = rate_table(51)
        point = table[10]
        assert point.x == pytest.approx(0.1)
        assert point.rate_2epp == pytest.approx(0.3725, abs=1e-3)
        assert point.rate_gv == 0.0

    def test_two_way_curve_dominates(self):
        from twep.bounds import one_way_gv_rate_raw, two_way_rate_raw

        table = rate_table(101)
        for point in table:
            if 0.0 < point.x <= 0.25:
                assert two_way_rate_raw(point.x) > one_way_gv_rate_raw(point.x)
                if point.rate_2epp > 0.0:
                    assert point.rate_2epp > point.rate_gv, point.x

    def test_monotone_non_increasing(self):
        table = rate_table(200)
        for a, b in zip(table, table[1:]):
            assert a.rate_2epp >= b.rate_2epp
            assert a.rate_gv >= b.rate_gv

    def test_clamped_to_unit_interval(self):
        for point in rate_table(500):
            assert 0.0 <= point.rate_2epp <= 1.0
            assert 0.0 <= point.rate_gv <= 1.0

    def test_points_precondition(self):
        with pytest.raises(ValueError):
            rate_table(1)


class TestSerialization:
    def test_bounds_csv_header_and_rows(self):
        rows = bounds_table([9, 10], [2])
        text = bounds_csv(rows)
        lines = text.splitlines()
        assert lines[0] == "n,t,hamming_k,singleton_k,gv_k,thm2_k"
        assert lines[1].startswith("9,2,-1,")
        assert lines[2].startswith("10,2,1,")

    def test_bounds_csv_blank_gv_when_undefined(self):
        rows = bounds_table([3], [2])
        line = bounds_csv(rows).splitlines()[1]
        assert line.split(",")[4] == ""

    def test_rates_csv_header(self):
        text = rates_csv(rate_table(3))
        lines = text.splitlines()
        assert lines[0] == "x,rate_2epp,rate_gv"
        assert lines[1] == "0.0,1.0,1.0"

    def test_grid_order_n_major(self):
        rows = bounds_table([5, 6], [1, 2])
        assert [(r.n, r.t) for r in rows] == [(5, 1), (5, 2), (6, 1), (6, 2)]
