"""Exact combinatorial arithmetic shared by all counting engines.

Everything here is integer or rational and exact: generalized binomial
coefficients, multinomial coefficients, integer partitions, and a small
truncated multivariate polynomial type used for coefficient extraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Exponents = tuple[int, ...]
Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "TruncatedMultiPoly",
    "binom",
    "multinomial",
    "partitions_of",
    "poly_coefficient",
    "validate_partition",
]


def binom(n: int, k: int) -> int:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k! for integer n.

    The upper argument may be negative (binom(-2, 2) == 3); the lower
    argument must be nonnegative.  Vanishes when 0 <= n < k.
    """
    if k < 0:
        raise ValueError(f"binom: lower index must be nonnegative, got {k}")
    if n >= 0:
        return math.comb(n, k)
    num = 1
    for i in range(k):
        num *= n - i
    value = Fraction(num, math.factorial(k))
    assert value.denominator == 1
    return int(value)


def multinomial(parts: Sequence[int]) -> int:
    """Multinomial coefficient (sum parts)! / prod(part!)."""
    for p in parts:
        if p < 0:
            raise ValueError(f"multinomial: parts must be nonnegative, got {p}")
    total = math.factorial(sum(parts))
    for p in parts:
        total //= math.factorial(p)
    return total


def validate_partition(lam: Sequence[int]) -> Partition:
    """Return ``lam`` as a tuple after checking it is a partition.

    A partition is a weakly decreasing sequence of positive integers
    (the empty tuple is allowed).
    """
    lam = tuple(lam)
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    if lam and lam[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {lam}")
    return lam


def partitions_of(k: int) -> list[Partition]:
    """All partitions of weight ``k``, in lexicographically decreasing order."""
    if k < 0:
        raise ValueError(f"partitions_of: weight must be nonnegative, got {k}")

    def gen(remaining: int, max_part: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(k, k))


@dataclass(frozen=True)
class TruncatedMultiPoly:
    """A multivariate polynomial truncated beyond per-variable degree caps.

    Terms are stored sparsely as a map from exponent tuples to exact
    coefficients.  Any operation silently drops terms whose exponent
    exceeds a cap in some variable: those coefficients are meaningless
    once the truncation is fixed, so they are never materialized.
    """

    caps: Exponents
    terms: Mapping[Exponents, Coeff] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.caps):
            raise ValueError(f"caps must be nonnegative: {self.caps}")
        clean: dict[Exponents, Coeff] = {}
        for expo, coeff in self.terms.items():
            expo = tuple(expo)
            if len(expo) != len(self.caps):
                raise ValueError(
                    f"exponent arity {len(expo)} does not match {len(self.caps)} variables"
                )
            if any(e < 0 for e in expo):
                raise ValueError(f"exponents must be nonnegative: {expo}")
            if coeff == 0:
                continue
            if all(e <= c for e, c in zip(expo, self.caps)):
                clean[expo] = coeff
        object.__setattr__(self, "terms", clean)

    @property
    def nvars(self) -> int:
        return len(self.caps)

    @classmethod
    def zero(cls, caps: Sequence[int]) -> "TruncatedMultiPoly":
        return cls(tuple(caps), {})

    @classmethod
    def one(cls, caps: Sequence[int]) -> "TruncatedMultiPoly":
        caps = tuple(caps)
        return cls(caps, {(0,) * len(caps): 1})

    @classmethod
    def monomial(
        cls, caps: Sequence[int], exponents: Sequence[int], coeff: Coeff = 1
    ) -> "TruncatedMultiPoly":
        return cls(tuple(caps), {tuple(exponents): coeff})

    def _require_same_shape(self, other: "TruncatedMultiPoly") -> None:
        if self.caps != other.caps:
            raise ValueError(f"cap mismatch: {self.caps} vs {other.caps}")

    def __add__(self, other: "TruncatedMultiPoly") -> "TruncatedMultiPoly":
        self._require_same_shape(other)
        summed = dict(self.terms)
        for expo, coeff in other.terms.items():
            summed[expo] = summed.get(expo, 0) + coeff
        return TruncatedMultiPoly(self.caps, summed)

    def __neg__(self) -> "TruncatedMultiPoly":
        return TruncatedMultiPoly(self.caps, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedMultiPoly") -> "TruncatedMultiPoly":
        return self + (-other)

    def __mul__(self, other: "TruncatedMultiPoly") -> "TruncatedMultiPoly":
        self._require_same_shape(other)
        caps = self.caps
        product: dict[Exponents, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                if any(e > cap for e, cap in zip(expo, caps)):
                    continue
                product[expo] = product.get(expo, 0) + c1 * c2
        return TruncatedMultiPoly(caps, product)

    def scale(self, factor: Coeff) -> "TruncatedMultiPoly":
        return TruncatedMultiPoly(
            self.caps, {e: c * factor for e, c in self.terms.items()}
        )

    def coefficient(self, exponents: Sequence[int]) -> Coeff:
        """Stored coefficient at ``exponents`` (zero if the term is absent).

        Exponents beyond the caps are rejected: the truncation made those
        coefficients meaningless.
        """
        expo = tuple(exponents)
        if len(expo) != self.nvars:
            raise ValueError(
                f"exponent arity {len(expo)} does not match {self.nvars} variables"
            )
        if any(e < 0 for e in expo):
            raise ValueError(f"exponents must be nonnegative: {expo}")
        if any(e > c for e, c in zip(expo, self.caps)):
            raise ValueError(f"exponents {expo} exceed caps {self.caps}")
        return self.terms.get(expo, 0)


def poly_coefficient(p: TruncatedMultiPoly, exponents: Sequence[int]) -> Coeff:
    """Coefficient of ``p`` at the given exponent vector (see ``coefficient``)."""
    return p.coefficient(exponents)


def univariate_power_series(
    caps: Sequence[int], var: int, exponent: int, sign: int = 1
) -> TruncatedMultiPoly:
    """The series (1 + sign*t_var)^exponent truncated at the caps.

    ``exponent`` may be any integer; negative exponents expand via the
    generalized binomial theorem.  ``sign`` must be +1 or -1.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    caps = tuple(caps)
    if not 0 <= var < len(caps):
        raise ValueError(f"variable index {var} out of range for {len(caps)} variables")
    terms: dict[Exponents, Coeff] = {}
    for k in range(caps[var] + 1):
        coeff = binom(exponent, k) * (sign**k)
        if coeff == 0:
            continue
        expo = [0] * len(caps)
        expo[var] = k
        terms[tuple(expo)] = coeff
    return TruncatedMultiPoly(caps, terms)


def vandermonde_squared(caps: Sequence[int]) -> TruncatedMultiPoly:
    """The squared difference product prod_{i<j} (t_i - t_j)^2, truncated."""
    caps = tuple(caps)
    n = len(caps)
    result = TruncatedMultiPoly.one(caps)
    for i in range(n):
        for j in range(i + 1, n):
            ei = [0] * n
            ei[i] = 1
            ej = [0] * n
            ej[j] = 1
            diff = TruncatedMultiPoly(
                caps, {tuple(ei): 1, tuple(ej): -1}
            )
            result = result * diff * diff
    return result
