"""Frozen reference values used by the verification suites.

The stratified coefficients are the outputs of ``census.enumerate_W`` for
the pencil-family ranks, and the polynomials are the matching closed-form
counts as polynomials in the chain multiplicity u (coefficients listed in
ascending degree order, exact rationals).  The verification suites check
the engines against these tables; the tables themselves were produced by
the independent enumeration and are pinned here to guard against
regressions.
"""

from __future__ import annotations

from fractions import Fraction

# enumerate_W(2d-2, d) restricted to the nonzero strata k = 0..d-2
STRATA: dict[int, tuple[int, ...]] = {
    2: (4,),
    3: (40, 24),
    4: (364, 784, 148),
    5: (3264, 16920, 11664, 920),
    6: (29260, 308044, 501908, 155012, 5776),
}

# count_r1(d-1, u) as a polynomial in u; index = degree
POLYNOMIALS: dict[int, tuple[Fraction, ...]] = {
    2: tuple(Fraction(c) for c in (0, -2, 2)),
    3: (
        Fraction(0),
        Fraction(4, 3),
        Fraction(-12),
        Fraction(32, 3),
    ),
    4: tuple(Fraction(c) for c in (0, -2, 20, -72, 54)),
    5: (
        Fraction(0),
        Fraction(8, 5),
        Fraction(-100, 3),
        Fraction(556, 3),
        Fraction(-1280, 3),
        Fraction(4096, 15),
    ),
    6: (
        Fraction(0),
        Fraction(-2),
        Fraction(392, 9),
        Fraction(-386),
        Fraction(13100, 9),
        Fraction(-2500),
        Fraction(12500, 9),
    ),
}


def polynomial_value(d: int, u: int) -> Fraction:
    """Evaluate the degree-d reference polynomial at u."""
    coeffs = POLYNOMIALS[d]
    return sum(
        (c * Fraction(u) ** k for k, c in enumerate(coeffs)), Fraction(0)
    )
