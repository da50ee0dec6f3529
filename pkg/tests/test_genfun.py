"""Generating-function builders against their enumeration oracles."""

import pytest

from qranks import combinat, genfun


def census_as_terms(census):
    return dict(census)


class TestPartitionSeries:
    def test_first_values(self):
        s = genfun.partition_series(10)
        assert s.integer_coefficients() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_matches_enumeration(self):
        s = genfun.partition_series(12)
        for n in range(13):
            assert s.integer_coefficients()[n] == len(list(combinat.enumerate_partitions(n)))


class TestPartitionRankSeries:
    def test_constant_term_is_delta(self):
        s = genfun.partition_rank_series(8)
        assert s.coefficient(0).terms == {(0,): 1}

    def test_rank_zero_of_four(self):
        s = genfun.partition_rank_series(8)
        assert s.coefficient(4, (0,)) == 1

    def test_census_oracle(self):
        s = genfun.partition_rank_series(14)
        for n in range(1, 15):
            census = {(m,): c for m, c in combinat.rank_census_partitions(n).items()}
            assert s.coefficient(n).terms == census


class TestMarkedDurfeeSeries:
    def test_k1_routes_to_partition_ranks(self):
        assert genfun.marked_durfee_rank_series(1, 10) == genfun.partition_rank_series(10)

    def test_k2_empty_at_one(self):
        s = genfun.marked_durfee_rank_series(2, 6)
        assert s.coefficient(1).is_zero()
        assert combinat.rank_census_marked_durfee(1, 2) == {}

    def test_k2_census_oracle(self):
        s = genfun.marked_durfee_rank_series(2, 12)
        for n in range(1, 13):
            assert s.coefficient(n).terms == combinat.rank_census_marked_durfee(n, 2)

    def test_k_below_one_rejected(self):
        with pytest.raises(ValueError):
            genfun.marked_durfee_rank_series(0, 5)


class TestUnimodalRankSeries:
    def test_first_coefficient(self):
        s = genfun.unimodal_rank_series(6)
        assert s.coefficient(1).terms == {(0,): 1}

    def test_rank_spread_of_four(self):
        s = genfun.unimodal_rank_series(6)
        assert s.coefficient(4).terms == {(0,): 2, (1,): 1, (-1,): 1}

    def test_totals_give_u(self):
        s = genfun.unimodal_rank_series(12)
        for n in range(1, 13):
            total = sum(s.coefficient(n).terms.values())
            assert total == combinat.count_unimodal_total(n)


class TestMarkedUnimodalSeries:
    def test_k2_first_terms(self):
        s = genfun.marked_unimodal_rank_series(2, 5)
        assert s.coefficient(3).terms == {(0, 0): 1}
        assert s.coefficient(3, (0, 0)) == 1
        assert s.coefficient(4).terms == {(0, 0): 1, (-1, 0): 1}
        assert s.coefficient(0).is_zero()
        assert s.coefficient(1).is_zero()
        assert s.coefficient(2).is_zero()

    def test_k1_equals_plain(self):
        assert genfun.marked_unimodal_rank_series(1, 18) == genfun.unimodal_rank_series(18)

    def test_census_oracle_small(self):
        for k in (2, 3):
            s = genfun.marked_unimodal_rank_series(k, 14)
            for n in range(1, 15):
                assert s.coefficient(n).terms == combinat.rank_census_marked_unimodal(n, k)


class TestSelfConjugateSeries:
    def test_k1_coefficient_of_four(self):
        s = genfun.self_conjugate_series(1, 8, "raw")
        assert s.integer_coefficients()[4] == 2

    def test_k2_first_values(self):
        s = genfun.self_conjugate_series(2, 8, "raw")
        values = s.integer_coefficients()
        assert values[4] == 1
        assert values[:4] == [0, 0, 0, 0]

    def test_forms_agree_to_forty(self):
        for k in (1, 2, 3):
            raw = genfun.self_conjugate_series(k, 40, "raw")
            simplified = genfun.self_conjugate_series(k, 40, "simplified")
            assert raw == simplified

    def test_counts_oracle(self):
        for k in (1, 2, 3):
            s = genfun.self_conjugate_series(k, 18, "raw")
            for n in range(1, 19):
                assert s.integer_coefficients()[n] == combinat.count_self_conjugate(n, k)

    def test_unknown_form_rejected(self):
        with pytest.raises(ValueError, match="form"):
            genfun.self_conjugate_series(2, 5, "fancy")


class TestPsi:
    def test_coefficient_of_one(self):
        for form in ("theta", "pochhammer", "enumerative"):
            assert genfun.mock_theta_psi(3, form).integer_coefficients()[1] == 1

    def test_coefficient_of_four(self):
        for form in ("theta", "pochhammer", "enumerative"):
            assert genfun.mock_theta_psi(6, form).integer_coefficients()[4] == 2

    def test_forms_agree_to_thirty(self):
        a = genfun.mock_theta_psi(30, "theta")
        b = genfun.mock_theta_psi(30, "pochhammer")
        c = genfun.mock_theta_psi(30, "enumerative")
        assert a == b == c

    def test_complete_odd_partition_interpretation(self):
        s = genfun.mock_theta_psi(30, "theta")
        for n in range(1, 31):
            assert s.integer_coefficients()[n] == combinat.count_complete_odd_partitions(n)


class TestEvenPartParitySeries:
    def test_k2_coefficient_of_four(self):
        s = genfun.even_part_parity_series(2, 6)
        assert s.integer_coefficients()[4] == 1
        assert s.integer_coefficients()[:4] == [0, 0, 0, 0]

    def test_matches_self_conjugate_series(self):
        for k in (2, 3):
            assert genfun.even_part_parity_series(k, 30) == genfun.self_conjugate_series(
                k, 30, "raw")

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError, match="k >= 2"):
            genfun.even_part_parity_series(1, 5)


class TestDeterminism:
    def test_builders_are_reproducible(self):
        builders = [
            lambda: genfun.partition_series(15),
            lambda: genfun.partition_rank_series(10),
            lambda: genfun.marked_durfee_rank_series(2, 10),
            lambda: genfun.marked_unimodal_rank_series(2, 12),
            lambda: genfun.self_conjugate_series(2, 15, "simplified"),
            lambda: genfun.mock_theta_psi(15, "theta"),
        ]
        for build in builders:
            assert build() == build()
