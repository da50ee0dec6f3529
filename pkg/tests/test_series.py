"""Unit and property tests for the exact series engine."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qranks.series import FactorSpec, LaurentCoefficient, TruncatedSeries, pochhammer


def q_monomial(value, power, n_max, var_count=0, exps=None):
    exps = exps if exps is not None else (0,) * var_count
    return TruncatedSeries.monomial(value, exps, power, n_max)


def brute_force_bounded_partitions(n, allowed):
    """Independent oracle: count partitions of n into parts from ``allowed``."""
    allowed = sorted(allowed, reverse=True)

    def rec(remaining, max_part):
        if remaining == 0:
            return 1
        return sum(
            rec(remaining - p, p) for p in allowed if p <= min(remaining, max_part)
        )

    return rec(n, n)


class TestConstruction:
    def test_one_is_identity_constant(self):
        s = TruncatedSeries.one(3, 1)
        assert s.coefficient(0, (0,)) == 1
        assert all(s.coeffs[n].is_zero() for n in range(1, 4))

    def test_monomial_with_negative_exponent(self):
        s = TruncatedSeries.monomial(1, (-1,), 4, 5)
        assert s.coefficient(4, (-1,)) == 1
        assert s.coefficient(4, (1,)) == 0

    def test_constant_two_variables(self):
        s = TruncatedSeries.monomial(2, (0, 0), 0, 2)
        assert s.coefficient(0, (0, 0)) == 2

    def test_monomial_beyond_truncation(self):
        with pytest.raises(ValueError, match="exponent beyond truncation"):
            TruncatedSeries.monomial(1, (), 4, 3)

    def test_zero_terms_never_stored(self):
        c = LaurentCoefficient(1, {(0,): 0, (1,): 3})
        assert c.terms == {(1,): 3}


class TestArithmetic:
    def test_add_cancels(self):
        n = 2
        one = TruncatedSeries.one(n, 0)
        q = q_monomial(1, 1, n)
        total = (one + q) + (one - q)
        assert total.integer_coefficients() == [2, 0, 0]

    def test_add_zero_identity(self):
        s = q_monomial(3, 2, 4, var_count=1, exps=(1,))
        assert s + TruncatedSeries.zero(4, 1) == s

    def test_add_merges_laurent_terms(self):
        a = TruncatedSeries.monomial(1, (1,), 1, 3)
        b = TruncatedSeries.monomial(1, (-1,), 1, 3)
        c = a + b
        assert c.coefficient(1).terms == {(1,): 1, (-1,): 1}

    def test_mul_difference_of_squares(self):
        one = TruncatedSeries.one(2, 0)
        q = q_monomial(1, 1, 2)
        assert ((one + q) * (one - q)).integer_coefficients() == [1, 0, -1]

    def test_mul_one_identity(self):
        s = TruncatedSeries.monomial(5, (-2,), 3, 6) + TruncatedSeries.one(6, 1)
        assert s * TruncatedSeries.one(6, 1) == s

    def test_mul_laurent_cross_terms(self):
        one = TruncatedSeries.one(2, 1)
        a = one + TruncatedSeries.monomial(1, (1,), 1, 2)
        b = one + TruncatedSeries.monomial(1, (-1,), 1, 2)
        prod = a * b
        assert prod.coefficient(0).terms == {(0,): 1}
        assert prod.coefficient(1).terms == {(1,): 1, (-1,): 1}
        assert prod.coefficient(2).terms == {(0,): 1}

    def test_mixed_truncation_takes_min(self):
        a = TruncatedSeries.one(5, 0)
        b = TruncatedSeries.one(3, 0)
        assert (a + b).truncation_order == 3
        assert (a * b).truncation_order == 3

    def test_mismatched_var_count_rejected(self):
        with pytest.raises(ValueError, match="mismatched variable count"):
            TruncatedSeries.one(3, 1) + TruncatedSeries.one(3, 2)
        with pytest.raises(ValueError, match="mismatched variable count"):
            TruncatedSeries.one(3, 1) * TruncatedSeries.one(3, 0)


class TestInverse:
    def test_geometric_series(self):
        s = TruncatedSeries.one(4, 0) - q_monomial(1, 1, 4)
        assert s.inverse().integer_coefficients() == [1, 1, 1, 1, 1]

    def test_inverse_of_one(self):
        one = TruncatedSeries.one(5, 2)
        assert one.inverse() == one

    def test_parts_at_most_two(self):
        # oracle first: direct count of partitions into parts from {1, 2}
        expected = [brute_force_bounded_partitions(n, [1, 2]) for n in range(5)]
        assert expected == [1, 1, 2, 2, 3]
        one = TruncatedSeries.one(4, 0)
        s = (one - q_monomial(1, 1, 4)) * (one - q_monomial(1, 2, 4))
        assert s.inverse().integer_coefficients() == expected

    def test_non_unit_constant_rejected(self):
        with pytest.raises(ValueError, match="non-unit constant term"):
            (TruncatedSeries.one(3, 0) + TruncatedSeries.one(3, 0)).inverse()
        # an x term in the constant coefficient also disqualifies
        s = TruncatedSeries.one(3, 1) + TruncatedSeries.monomial(1, (1,), 0, 3)
        with pytest.raises(ValueError, match="non-unit constant term"):
            s.inverse()


class TestPochhammer:
    def test_q_ascending_two_factors(self):
        spec = FactorSpec(1, None, 1, 1, 1)
        assert pochhammer(spec, 2, 3, 0).integer_coefficients() == [1, -1, -1, 1]

    def test_with_variable(self):
        spec = FactorSpec(-1, 1, 1, 1, 1)
        s = pochhammer(spec, 2, 3, 1)
        assert s.coefficient(0).terms == {(0,): 1}
        assert s.coefficient(1).terms == {(1,): 1}
        assert s.coefficient(2).terms == {(1,): 1}
        assert s.coefficient(3).terms == {(2,): 1}

    def test_step_two(self):
        spec = FactorSpec(-1, None, 1, 2, 2)
        assert pochhammer(spec, 2, 6, 0).integer_coefficients() == [1, 0, 1, 0, 1, 0, 1]

    def test_infinite_product_stabilizes(self):
        spec = FactorSpec(1, None, 1, 1, 1)
        infinite = pochhammer(spec, None, 12, 0)
        assert infinite == pochhammer(spec, 12, 12, 0)

    def test_count_zero_is_one(self):
        assert pochhammer(FactorSpec(1, None, 1, 1, 1), 0, 5, 0) == TruncatedSeries.one(5, 0)

    def test_invalid_step_rejected_at_spec(self):
        with pytest.raises(ValueError, match="q_step"):
            FactorSpec(1, None, 1, 0, 0)

    def test_var_index_out_of_range(self):
        with pytest.raises(ValueError, match="x2"):
            pochhammer(FactorSpec(1, 2, 1, 1, 1), 3, 5, 1)


class TestCoefficientAccess:
    def test_full_laurent_and_single_exponent(self):
        one = TruncatedSeries.one(2, 1)
        s = one + TruncatedSeries.monomial(1, (1,), 1, 2) + TruncatedSeries.monomial(
            1, (-1,), 1, 2)
        assert s.coefficient(1, (-1,)) == 1
        assert s.coefficient(1).terms == {(1,): 1, (-1,): 1}
        assert TruncatedSeries.one(3, 0).coefficient(0, ()) == 1

    def test_beyond_truncation(self):
        with pytest.raises(ValueError, match="beyond truncation"):
            TruncatedSeries.one(3, 0).coefficient(4)


# ----------------------------------------------------------------------
# property tests
# ----------------------------------------------------------------------


@st.composite
def small_series(draw, var_count=None, n_max=None, unit=False):
    k = var_count if var_count is not None else draw(st.integers(0, 2))
    n = n_max if n_max is not None else draw(st.integers(0, 10))
    s = TruncatedSeries.one(n, k) if unit else TruncatedSeries.zero(n, k)
    for _ in range(draw(st.integers(0, 6))):
        order = draw(st.integers(1 if unit else 0, n)) if n else 0
        if unit and n == 0:
            break
        exps = tuple(draw(st.integers(-order, order)) if order else 0 for _ in range(k))
        value = draw(st.integers(-5, 5))
        s = s + TruncatedSeries.monomial(value, exps, order, n)
    return s


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_ring_axioms(data):
    k = data.draw(st.integers(0, 2))
    n = data.draw(st.integers(0, 8))
    a = data.draw(small_series(var_count=k, n_max=n))
    b = data.draw(small_series(var_count=k, n_max=n))
    c = data.draw(small_series(var_count=k, n_max=n))
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_inverse_round_trip(data):
    k = data.draw(st.integers(0, 2))
    n = data.draw(st.integers(0, 8))
    a = data.draw(small_series(var_count=k, n_max=n, unit=True))
    assert a * a.inverse() == TruncatedSeries.one(n, k)


@given(
    sign=st.sampled_from([1, -1]),
    var=st.sampled_from([None, 1]),
    exp=st.sampled_from([1, -1]),
    offset=st.integers(0, 3),
    step=st.integers(1, 3),
    first=st.integers(0, 4),
    second=st.integers(0, 4),
)
@settings(max_examples=100, deadline=None)
def test_pochhammer_telescopes(sign, var, exp, offset, step, first, second):
    spec = FactorSpec(sign, var, exp, offset, step)
    combined = pochhammer(spec, first + second, 12, 1)
    split = pochhammer(spec, first, 12, 1) * pochhammer(spec.shifted(first), second, 12, 1)
    assert combined == split


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_no_zero_terms_survive_operations(data):
    k = data.draw(st.integers(0, 2))
    n = data.draw(st.integers(0, 8))
    a = data.draw(small_series(var_count=k, n_max=n))
    b = data.draw(small_series(var_count=k, n_max=n))
    for result in (a + b, a - b, a * b):
        for coeff in result.coeffs:
            assert all(v != 0 for v in coeff.terms.values())
