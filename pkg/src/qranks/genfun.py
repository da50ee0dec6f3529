"""Builders for every rank generating function, as exact truncated series.

Each builder sums a multi-indexed family of Pochhammer-product terms.  The
index region is cut off by the term's minimal q-order (the explicit q-power
in front; every other factor has constant term 1), so terms outside the
region vanish modulo q^(N+1) and the truncated result is exact.  Builders
are deterministic and pure.

Coefficients of the multivariate series are Laurent polynomials in
x_1..x_k; the integer attached to x^(m_1,..,m_k) q^n counts symbols of size
n whose j-th rank is m_j.  That equivalence is what the test suite checks
against the enumerations in :mod:`qranks.combinat`; it is never assumed
here.
"""

from __future__ import annotations

from . import combinat
from .series import FactorSpec, TruncatedSeries, pochhammer


def _exponents_within_order(s: TruncatedSeries) -> bool:
    """No rank exponent can exceed the size it appears at."""
    for n, c in enumerate(s.coeffs):
        for exps in c.terms:
            if any(abs(e) > n for e in exps):
                return False
    return True


def partition_series(n_max: int) -> TruncatedSeries:
    """Partition counts p(0..n_max): the inverse of the infinite product
    prod (1 - q^n)."""
    euler = pochhammer(FactorSpec(1, None, 1, 1, 1), None, n_max, 0)
    return euler.inverse()


def partition_rank_series(n_max: int) -> TruncatedSeries:
    """Two-variable rank series for partitions: sum over t >= 0 of
    q^(t^2) / ((x1 q; q)_t (x1^-1 q; q)_t), one x variable."""
    total = TruncatedSeries.zero(n_max, 1)
    t = 0
    while t * t <= n_max:
        term = TruncatedSeries.monomial(1, (0,), t * t, n_max)
        if t:
            term = term * pochhammer(FactorSpec(1, 1, 1, 1, 1), t, n_max, 1).inverse()
            term = term * pochhammer(FactorSpec(1, 1, -1, 1, 1), t, n_max, 1).inverse()
        total = total + term
        t += 1
    assert _exponents_within_order(total)
    return total


def _durfee_gap_tuples(k: int, n_max: int):
    """Tuples (m_1..m_k) with m_1 >= 1, m_j >= 0 for j >= 2, whose prefix
    sums M_j satisfy M_k^2 + M_1 + ... + M_(k-1) <= n_max."""
    tuples = []

    def rec(prefix: list[int]):
        j = len(prefix)
        if j == k:
            big = [sum(prefix[: i + 1]) for i in range(k)]
            if big[-1] ** 2 + sum(big[:-1]) <= n_max:
                tuples.append(tuple(prefix))
            return
        lo = 1 if j == 0 else 0
        m = lo
        while True:
            big_j = sum(prefix) + m
            # remaining gaps may be zero, so the cheapest completion keeps
            # M_i = big_j for all later i
            cheapest = big_j ** 2 + sum(sum(prefix[: i + 1]) for i in range(j)) + \
                (k - 1 - j) * big_j
            if cheapest > n_max:
                break
            rec(prefix + [m])
            m += 1

    rec([])
    return tuples


def marked_durfee_rank_series(k: int, n_max: int) -> TruncatedSeries:
    """Rank series for k-marked Durfee symbols.

    For k >= 2 this is the multi-sum over m_1 > 0, m_2..m_k >= 0 of

        q^(M_k^2 + M_1 + ... + M_(k-1))
        / [ (x1 q; q)_(m_1) (x1^-1 q; q)_(m_1)
            prod_(j=2..k) (x_j q^(M_(j-1)); q)_(m_j+1)
                          (x_j^-1 q^(M_(j-1)); q)_(m_j+1) ]

    with M_j = m_1 + ... + m_j.  k=1 routes to
    :func:`partition_rank_series`.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return partition_rank_series(n_max)
    total = TruncatedSeries.zero(n_max, k)
    for gaps in _durfee_gap_tuples(k, n_max):
        big = [sum(gaps[: i + 1]) for i in range(k)]
        order = big[-1] ** 2 + sum(big[:-1])
        assert order <= n_max
        term = TruncatedSeries.monomial(1, (0,) * k, order, n_max)
        term = term * pochhammer(FactorSpec(1, 1, 1, 1, 1), gaps[0], n_max, k).inverse()
        term = term * pochhammer(FactorSpec(1, 1, -1, 1, 1), gaps[0], n_max, k).inverse()
        for j in range(2, k + 1):
            offset = big[j - 2]
            length = gaps[j - 1] + 1
            term = term * pochhammer(
                FactorSpec(1, j, 1, offset, 1), length, n_max, k).inverse()
            term = term * pochhammer(
                FactorSpec(1, j, -1, offset, 1), length, n_max, k).inverse()
        total = total + term
    assert _exponents_within_order(total)
    return total


def unimodal_rank_series(n_max: int) -> TruncatedSeries:
    """Two-variable rank series for strongly unimodal sequences: sum over
    t >= 0 of q^(t+1) (-x1 q; q)_t (-x1^-1 q; q)_t, one x variable."""
    total = TruncatedSeries.zero(n_max, 1)
    for t in range(n_max):
        term = TruncatedSeries.monomial(1, (0,), t + 1, n_max)
        term = term * pochhammer(FactorSpec(-1, 1, 1, 1, 1), t, n_max, 1)
        term = term * pochhammer(FactorSpec(-1, 1, -1, 1, 1), t, n_max, 1)
        total = total + term
    assert _exponents_within_order(total)
    return total


def _unimodal_gap_tuples(k: int, n_max: int):
    """Tuples (m_1..m_k), all >= 1, whose prefix sums satisfy
    M_1 + ... + M_k <= n_max."""
    tuples = []

    def rec(prefix: list[int], big_sum: int):
        j = len(prefix)
        if j == k:
            tuples.append(tuple(prefix))
            return
        prev = sum(prefix)
        rem_after = k - j - 1
        m = 1
        while True:
            new_big = prev + m
            tail_min = sum(new_big + t for t in range(1, rem_after + 1))
            if big_sum + new_big + tail_min > n_max:
                break
            rec(prefix + [m], big_sum + new_big)
            m += 1

    rec([], 0)
    return tuples


def marked_unimodal_rank_series(k: int, n_max: int) -> TruncatedSeries:
    """Rank series for k-marked strongly unimodal symbols.

    Sum over m_1..m_k >= 1 of

        q^(M_1 + ... + M_k)
        * prod_(j=1..k-1) (1 + x_j^-1 q^(M_j))
        * prod_(j=1..k) (-x_j q^(M_(j-1)+1); q)_(m_j - 1)
                        (-x_j^-1 q^(M_(j-1)+1); q)_(m_j - 1)

    with M_0 = 0 and M_j = m_1 + ... + m_j.  At k=1 the middle product is
    empty and the sum is the plain unimodal rank series.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    total = TruncatedSeries.zero(n_max, k)
    for gaps in _unimodal_gap_tuples(k, n_max):
        big = [sum(gaps[: i + 1]) for i in range(k)]
        order = sum(big)
        assert order <= n_max
        term = TruncatedSeries.monomial(1, (0,) * k, order, n_max)
        for j in range(1, k):
            exps = tuple(-1 if i == j - 1 else 0 for i in range(k))
            bump = TruncatedSeries.one(n_max, k)
            if big[j - 1] <= n_max:
                bump = bump + TruncatedSeries.monomial(1, exps, big[j - 1], n_max)
            term = term * bump
        for j in range(1, k + 1):
            offset = (big[j - 2] if j >= 2 else 0) + 1
            length = gaps[j - 1] - 1
            term = term * pochhammer(FactorSpec(-1, j, 1, offset, 1), length, n_max, k)
            term = term * pochhammer(FactorSpec(-1, j, -1, offset, 1), length, n_max, k)
        total = total + term
    assert _exponents_within_order(total)
    return total


def self_conjugate_series(k: int, n_max: int, form: str = "raw") -> TruncatedSeries:
    """Counting series (no x variables) for self-conjugate k-marked
    strongly unimodal symbols.

    form="raw" sums, over m_1..m_k >= 1,

        q^(2(M_1+...+M_(k-1)) + M_k)
        * prod_(j=1..k) (-q^(2(M_(j-1)+1)); q^2)_(m_j - 1)

    which generates the doubled row pairs directly.  form="simplified"
    telescopes those products into

        sum_(P >= k) q^P (-q^2; q^2)_(P-1)
          * sum_(1 <= M_1 < ... < M_(k-1) < P)
              prod_j q^(2 M_j) / (1 + q^(2 M_j))

    with each 1/(1 + q^(2M_j)) realized by series inversion.  Both forms
    agree at every truncation.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if form not in ("raw", "simplified"):
        raise ValueError(f"unknown form {form!r}")
    total = TruncatedSeries.zero(n_max, 0)
    if form == "raw":
        for gaps in _self_conjugate_gap_tuples(k, n_max):
            big = [sum(gaps[: i + 1]) for i in range(k)]
            order = 2 * sum(big[:-1]) + big[-1]
            assert order <= n_max
            term = TruncatedSeries.monomial(1, (), order, n_max)
            for j in range(1, k + 1):
                offset = 2 * ((big[j - 2] if j >= 2 else 0) + 1)
                term = term * pochhammer(
                    FactorSpec(-1, None, 1, offset, 2), gaps[j - 1] - 1, n_max, 0)
            total = total + term
        assert _exponents_within_order(total)
        return total

    for peak in range(k, n_max + 1):
        outer = TruncatedSeries.monomial(1, (), peak, n_max)
        outer = outer * pochhammer(FactorSpec(-1, None, 1, 2, 2), peak - 1, n_max, 0)
        inner_total = TruncatedSeries.zero(n_max, 0)
        found = False
        for bigs in _ascending_tuples(k - 1, peak, n_max - peak):
            inner = TruncatedSeries.one(n_max, 0)
            for b in bigs:
                numer = TruncatedSeries.monomial(1, (), 2 * b, n_max)
                denom = TruncatedSeries.one(n_max, 0) + TruncatedSeries.monomial(
                    1, (), 2 * b, n_max)
                inner = inner * numer * denom.inverse()
            inner_total = inner_total + inner
            found = True
        if found:
            total = total + outer * inner_total
    assert _exponents_within_order(total)
    return total


def _self_conjugate_gap_tuples(k: int, n_max: int):
    """Tuples (m_1..m_k), all >= 1, with 2(M_1+...+M_(k-1)) + M_k <= n_max."""
    tuples = []

    def rec(prefix: list[int], weighted: int):
        j = len(prefix)
        if j == k:
            tuples.append(tuple(prefix))
            return
        prev = sum(prefix)
        m = 1
        while True:
            new_big = prev + m
            weight = 2 if j < k - 1 else 1
            rem = k - j - 1
            # minimal completion: gaps of 1, doubled except the last
            tail = sum((2 if j + 1 + t < k else 1) * (new_big + t)
                       for t in range(1, rem + 1))
            if weighted + weight * new_big + tail > n_max:
                break
            rec(prefix + [m], weighted + weight * new_big)
            m += 1

    rec([], 0)
    return tuples


def _ascending_tuples(count: int, below: int, budget: int):
    """Strictly increasing tuples (M_1 < ... < M_count) with every entry in
    [1, below-1] and 2 * sum <= budget."""
    if count == 0:
        yield ()
        return

    def rec(start: int, left: int, remaining: int):
        if left == 0:
            yield ()
            return
        for v in range(start, below):
            min_rest = sum(v + 1 + t for t in range(left - 1))
            if 2 * (v + min_rest) > remaining:
                break
            for rest in rec(v + 1, left - 1, remaining - 2 * v):
                yield (v,) + rest

    yield from rec(1, count, budget)


def mock_theta_psi(n_max: int, form: str = "theta") -> TruncatedSeries:
    """The classical third-order mock theta function psi(q), three ways.

    form="theta": sum over t >= 1 of q^(t^2) / (q; q^2)_t.
    form="pochhammer": sum over t >= 1 of q^t (-q^2; q^2)_(t-1), which is
    the k=1 self-conjugate series.
    form="enumerative": coefficients taken from the self-conjugate symbol
    counts.  All three agree at every truncation.
    """
    if form == "theta":
        total = TruncatedSeries.zero(n_max, 0)
        t = 1
        while t * t <= n_max:
            term = TruncatedSeries.monomial(1, (), t * t, n_max)
            term = term * pochhammer(FactorSpec(1, None, 1, 1, 2), t, n_max, 0).inverse()
            total = total + term
            t += 1
        return total
    if form == "pochhammer":
        return self_conjugate_series(1, n_max, "raw")
    if form == "enumerative":
        values = [0] + [combinat.count_self_conjugate(n, 1) for n in range(1, n_max + 1)]
        return TruncatedSeries.from_integer_coefficients(values)
    raise ValueError(f"unknown form {form!r}")


def even_part_parity_series(k: int, n_max: int) -> TruncatedSeries:
    """Signed difference of the decorated odd-part counts: the q^n
    coefficient is (-1)^k * (odd-parity count - even-parity count).

    Coefficient-wise this equals :func:`self_conjugate_series`; the test
    suite checks that identity, this builder does not assume it.
    """
    if k < 2:
        raise ValueError("defined for k >= 2 only")
    sign = 1 if k % 2 == 0 else -1
    values = []
    for n in range(n_max + 1):
        with_odd, with_even = combinat.count_even_part_parity(n, k)
        values.append(sign * (with_odd - with_even))
    return TruncatedSeries.from_integer_coefficients(values)
