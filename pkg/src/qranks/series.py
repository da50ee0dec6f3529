"""Exact truncated power series in q with integer Laurent-polynomial coefficients.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N exactly and
knows nothing about higher orders (the series is exact modulo q^(N+1)).
Each q-coefficient is a :class:`LaurentCoefficient`: a sparse integer
polynomial in x_1^(+-1), ..., x_k^(+-1).  All arithmetic is exact Python
integer arithmetic; no floating point enters this module.

Values are immutable after construction and all operations are pure, so
series may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class LaurentCoefficient:
    """Sparse integer polynomial in x_1^(+-1) .. x_k^(+-1).

    ``terms`` maps an exponent tuple of length ``var_count`` to a nonzero
    integer.  Zero values are never stored; the zero polynomial has an
    empty ``terms`` dict.
    """

    __slots__ = ("var_count", "terms")

    def __init__(self, var_count: int, terms: dict[tuple[int, ...], int] | None = None):
        if var_count < 0:
            raise ValueError("var_count must be >= 0")
        pruned: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, value in terms.items():
                if len(exps) != var_count:
                    raise ValueError(
                        f"exponent vector {exps!r} has length {len(exps)}, expected {var_count}"
                    )
                if value != 0:
                    pruned[tuple(exps)] = value
        object.__setattr__(self, "var_count", var_count)
        object.__setattr__(self, "terms", pruned)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentCoefficient is immutable")

    @classmethod
    def zero(cls, var_count: int) -> LaurentCoefficient:
        return cls(var_count, {})

    @classmethod
    def constant(cls, value: int, var_count: int) -> LaurentCoefficient:
        return cls(var_count, {(0,) * var_count: value})

    @classmethod
    def monomial(cls, value: int, exponents: tuple[int, ...]) -> LaurentCoefficient:
        return cls(len(exponents), {tuple(exponents): value})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        """True when the polynomial equals the integer 1."""
        return self.terms == {(0,) * self.var_count: 1}

    def get(self, exponents: tuple[int, ...]) -> int:
        if len(exponents) != self.var_count:
            raise ValueError(
                f"exponent vector {exponents!r} has length {len(exponents)}, expected {self.var_count}"
            )
        return self.terms.get(tuple(exponents), 0)

    def _check_compatible(self, other: LaurentCoefficient) -> None:
        if self.var_count != other.var_count:
            raise ValueError(
                f"mismatched variable count: {self.var_count} vs {other.var_count}"
            )

    def __add__(self, other: LaurentCoefficient) -> LaurentCoefficient:
        self._check_compatible(other)
        merged = dict(self.terms)
        for exps, value in other.terms.items():
            total = merged.get(exps, 0) + value
            if total == 0:
                merged.pop(exps, None)
            else:
                merged[exps] = total
        return LaurentCoefficient(self.var_count, merged)

    def __neg__(self) -> LaurentCoefficient:
        return LaurentCoefficient(
            self.var_count, {exps: -value for exps, value in self.terms.items()}
        )

    def __sub__(self, other: LaurentCoefficient) -> LaurentCoefficient:
        return self + (-other)

    def __mul__(self, other: LaurentCoefficient) -> LaurentCoefficient:
        self._check_compatible(other)
        product: dict[tuple[int, ...], int] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = product.get(exps, 0) + v1 * v2
                if total == 0:
                    product.pop(exps, None)
                else:
                    product[exps] = total
        return LaurentCoefficient(self.var_count, product)

    def scaled(self, factor: int) -> LaurentCoefficient:
        if factor == 0:
            return LaurentCoefficient.zero(self.var_count)
        return LaurentCoefficient(
            self.var_count, {exps: factor * value for exps, value in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentCoefficient):
            return NotImplemented
        return self.var_count == other.var_count and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.var_count, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            value = self.terms[exps]
            factors = [str(value)]
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e != 0:
                    factors.append(f"x{i + 1}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


class TruncatedSeries:
    """Power series in q, exact modulo q^(N+1), with Laurent coefficients.

    ``coeffs[n]`` is the coefficient of q^n.  Mixed-truncation arithmetic
    truncates the result to the smaller order so pipelines compose.
    """

    __slots__ = ("truncation_order", "var_count", "coeffs")

    def __init__(self, truncation_order: int, var_count: int,
                 coeffs: list[LaurentCoefficient] | None = None):
        if truncation_order < 0:
            raise ValueError("truncation_order must be >= 0")
        if var_count < 0:
            raise ValueError("var_count must be >= 0")
        if coeffs is None:
            coeffs = [LaurentCoefficient.zero(var_count) for _ in range(truncation_order + 1)]
        if len(coeffs) != truncation_order + 1:
            raise ValueError(
                f"expected {truncation_order + 1} coefficients, got {len(coeffs)}"
            )
        for c in coeffs:
            if c.var_count != var_count:
                raise ValueError("mismatched variable count in coefficient list")
        object.__setattr__(self, "truncation_order", truncation_order)
        object.__setattr__(self, "var_count", var_count)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, n_max: int, var_count: int) -> TruncatedSeries:
        return cls(n_max, var_count)

    @classmethod
    def one(cls, n_max: int, var_count: int) -> TruncatedSeries:
        coeffs = [LaurentCoefficient.constant(1, var_count)]
        coeffs += [LaurentCoefficient.zero(var_count) for _ in range(n_max)]
        return cls(n_max, var_count, coeffs)

    @classmethod
    def monomial(cls, value: int, exponents: tuple[int, ...], q_power: int,
                 n_max: int) -> TruncatedSeries:
        """The series value * x^exponents * q^q_power at truncation n_max."""
        if q_power < 0:
            raise ValueError("q_power must be >= 0")
        if q_power > n_max:
            raise ValueError(f"exponent beyond truncation: q^{q_power} with n_max={n_max}")
        var_count = len(exponents)
        coeffs = [LaurentCoefficient.zero(var_count) for _ in range(n_max + 1)]
        coeffs[q_power] = LaurentCoefficient.monomial(value, exponents)
        return cls(n_max, var_count, coeffs)

    @classmethod
    def from_integer_coefficients(cls, values: list[int]) -> TruncatedSeries:
        """Variable-free series with the given q^0..q^N integer coefficients."""
        coeffs = [LaurentCoefficient.constant(v, 0) for v in values]
        return cls(len(values) - 1, 0, coeffs)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if self.var_count != other.var_count:
            raise ValueError(
                f"mismatched variable count: {self.var_count} vs {other.var_count}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        n_max = min(self.truncation_order, other.truncation_order)
        coeffs = [self.coeffs[n] + other.coeffs[n] for n in range(n_max + 1)]
        return TruncatedSeries(n_max, self.var_count, coeffs)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.truncation_order, self.var_count, [-c for c in self.coeffs]
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        n_max = min(self.truncation_order, other.truncation_order)
        acc: list[dict[tuple[int, ...], int]] = [{} for _ in range(n_max + 1)]
        for i, a in enumerate(self.coeffs[: n_max + 1]):
            if a.is_zero():
                continue
            for j in range(n_max + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                bucket = acc[i + j]
                for e1, v1 in a.terms.items():
                    for e2, v2 in b.terms.items():
                        exps = tuple(p + r for p, r in zip(e1, e2))
                        total = bucket.get(exps, 0) + v1 * v2
                        if total == 0:
                            bucket.pop(exps, None)
                        else:
                            bucket[exps] = total
        coeffs = [LaurentCoefficient(self.var_count, bucket) for bucket in acc]
        return TruncatedSeries(n_max, self.var_count, coeffs)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse modulo q^(N+1).

        Requires the q^0 coefficient to be the integer 1 (no x terms);
        then self * self.inverse() == one at this truncation.
        """
        if not self.coeffs[0].is_one():
            raise ValueError("non-unit constant term")
        n_max = self.truncation_order
        inv = [LaurentCoefficient.constant(1, self.var_count)]
        for n in range(1, n_max + 1):
            total = LaurentCoefficient.zero(self.var_count)
            for j in range(1, n + 1):
                a = self.coeffs[j]
                if a.is_zero():
                    continue
                total = total + a * inv[n - j]
            inv.append(-total)
        return TruncatedSeries(n_max, self.var_count, inv)

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------

    def coefficient(self, n: int, exponents: tuple[int, ...] | None = None):
        """Coefficient of q^n: a LaurentCoefficient, or an int at x^exponents."""
        if n < 0 or n > self.truncation_order:
            raise ValueError(f"beyond truncation: q^{n} with n_max={self.truncation_order}")
        if exponents is None:
            return self.coeffs[n]
        return self.coeffs[n].get(exponents)

    def integer_coefficients(self) -> list[int]:
        """The q^0..q^N integer coefficients of a variable-free series."""
        if self.var_count != 0:
            raise ValueError("series has x variables; extract coefficients per exponent")
        return [c.terms.get((), 0) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.truncation_order == other.truncation_order
            and self.var_count == other.var_count
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.truncation_order, self.var_count, self.coeffs))

    def __repr__(self) -> str:
        shown = []
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                shown.append(f"({c!r})*q^{n}" if n else f"({c!r})")
            if len(shown) >= 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"<series mod q^{self.truncation_order + 1}: {body}>"


@dataclass(frozen=True)
class FactorSpec:
    """Argument of a Pochhammer-style product with base q^q_step.

    Describes a = sign * x_i^var_exponent * q^q_offset so that the product
    of (1 - a * q^(q_step*(j-1))) over j = 1..n can be formed.  When
    var_index is None the factor is purely in q and var_exponent is ignored.
    var_index is 1-based.
    """

    sign: int
    var_index: int | None = None
    var_exponent: int = 1
    q_offset: int = 0
    q_step: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.var_index is not None:
            if self.var_index < 1:
                raise ValueError("var_index is 1-based")
            if self.var_exponent not in (1, -1):
                raise ValueError("var_exponent must be +1 or -1")
        if self.q_offset < 0:
            raise ValueError("q_offset must be >= 0")
        if self.q_step < 1:
            raise ValueError("q_step must be >= 1")

    def shifted(self, steps: int) -> FactorSpec:
        """The same factor with the q offset advanced by ``steps`` steps."""
        return FactorSpec(self.sign, self.var_index, self.var_exponent,
                          self.q_offset + steps * self.q_step, self.q_step)


def pochhammer(spec: FactorSpec, count: int | None, n_max: int,
               var_count: int) -> TruncatedSeries:
    """Product of (1 - a*q^(s*(j-1))) for j = 1..count, truncated at n_max.

    Here a = spec.sign * x_i^spec.var_exponent * q^spec.q_offset and
    s = spec.q_step.  ``count=None`` means the infinite product, which is
    evaluated until the remaining factors are 1 modulo q^(n_max+1).
    """
    if spec.var_index is not None and spec.var_index > var_count:
        raise ValueError(
            f"factor uses x{spec.var_index} but series has {var_count} variables"
        )
    if count is not None and count < 0:
        raise ValueError("count must be >= 0 or None for the infinite product")
    if count is None and spec.q_offset + spec.q_step < 1:
        raise ValueError("divergent product: infinite count needs q_offset + q_step >= 1")

    if spec.var_index is None:
        exponents = (0,) * var_count
    else:
        exponents = tuple(
            spec.var_exponent if i == spec.var_index - 1 else 0 for i in range(var_count)
        )

    result = TruncatedSeries.one(n_max, var_count)
    j = 1
    while True:
        if count is not None and j > count:
            break
        q_power = spec.q_offset + spec.q_step * (j - 1)
        if q_power > n_max:
            if count is None:
                break
            # remaining factors are 1 modulo q^(n_max+1); skip them all
            break
        factor = TruncatedSeries.one(n_max, var_count) - TruncatedSeries.monomial(
            spec.sign, exponents, q_power, n_max
        )
        result = result * factor
        j += 1
    return result
