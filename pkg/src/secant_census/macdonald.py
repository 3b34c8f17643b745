"""Intersection-theoretic counts of secant planes via coefficient extraction.

The count is the coefficient of a prescribed monomial in a symmetrized
generating function, normalized by the number of variables.  Two displayed
forms of the generating function are implemented; they must agree, and the
normalized result must be an integer — both facts are enforced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    binom,
    multinomial,
    univariate_power_series,
    vandermonde_squared,
)

__all__ = [
    "SecantParams",
    "eta",
    "macdonald_general",
    "macdonald_r1",
    "macdonald_rs1",
    "mu",
    "rho",
]


def rho(g: int, s: int, m: int) -> int:
    """Moduli count of (s+1)-dimensional degree-m series on genus-g curves."""
    return g - (s + 1) * (s + g - m)


def mu(d: int, r: int, s: int) -> int:
    """Expected dimension of the family of d-point divisors spanning only
    a (d-r-1)-plane inside the ambient projective s-space."""
    return d - r * (s + 1 - d + r)


@dataclass(frozen=True)
class SecantParams:
    """Parameters of a secant-plane count.

    g: genus; s: projective dimension of the ambient series' image span;
    m: degree of the ambient series; d: number of points in the secant
    divisor; r: number of conditions the divisor fails to impose, so the
    divisor spans only a (d-r-1)-plane.
    """

    g: int
    s: int
    m: int
    d: int
    r: int

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"genus must be nonnegative, got {self.g}")
        if self.s < 1:
            raise ValueError(f"need s >= 1, got {self.s}")
        if self.d < 1:
            raise ValueError(f"need d >= 1, got {self.d}")
        if not 1 <= self.r <= self.d:
            raise ValueError(f"need 1 <= r <= d, got r={self.r}, d={self.d}")
        if self.m <= self.d:
            raise ValueError(f"need m > d, got m={self.m}, d={self.d}")

    @property
    def rho(self) -> int:
        return rho(self.g, self.s, self.m)

    @property
    def mu(self) -> int:
        return mu(self.d, self.r, self.s)


def _extract_symmetrized(nvars: int, cap: int, base_exponent: int,
                         base_sign: int, g: int) -> int:
    """Total coefficient of (t_1*...*t_n)^cap in
    prod_i (1 + base_sign*t_i)^base_exponent * (1 + t_1+...+t_n)^g * D(t)^2,
    where D is the difference product of the variables.

    The first two factors are expanded as truncated series; the last factor
    is never expanded: its contribution to the monomial t^gamma is the
    closed form g! / ((g-|gamma|)! * prod gamma_i!).
    """
    caps = (cap,) * nvars
    poly = vandermonde_squared(caps)
    for var in range(nvars):
        poly = poly * univariate_power_series(caps, var, base_exponent, base_sign)
    total = 0
    for expo, coeff in poly.terms.items():
        gamma = [cap - e for e in expo]
        weight = sum(gamma)
        if weight > g:
            continue
        total += coeff * multinomial([g - weight, *gamma])
    return total


def _normalize(total: int, nvars: int) -> int:
    """Apply the symmetrization normalization (-1)^C(n,2) / n! and require
    the result to be an integer."""
    value = Fraction((-1) ** math.comb(nvars, 2) * total, math.factorial(nvars))
    if value.denominator != 1:
        raise ArithmeticError(
            f"normalized coefficient {value} is not an integer; "
            "the engine's invariant is violated"
        )
    return int(value)


def macdonald_general(p: SecantParams, version: str = "one") -> int:
    """Secant-plane count by coefficient extraction.

    version "one" uses r variables and per-variable factor
    (1 - t)^(g+s-m); version "two" uses s-d+r+1 variables and factor
    (1 + t)^(m-g-s).  Both extract the coefficient of every variable to
    the power s-d+2r and normalize by the variable count.  The two
    versions agree and always yield an integer.
    """
    if version not in ("one", "two"):
        raise ValueError(f"version must be 'one' or 'two', got {version!r}")
    cap = p.s - p.d + 2 * p.r
    if cap < 0:
        raise ValueError(
            f"extraction exponent s-d+2r = {cap} is negative; "
            "no secant-plane count is defined for these parameters"
        )
    if version == "one":
        nvars = p.r
        base_exponent = p.g + p.s - p.m
        base_sign = -1
    else:
        nvars = p.s - p.d + p.r + 1
        base_exponent = p.m - p.g - p.s
        base_sign = 1
        if nvars < 1:
            raise ValueError(
                f"second form needs s-d+r+1 >= 1 variables, got {nvars}"
            )
    total = _extract_symmetrized(nvars, cap, base_exponent, base_sign, p.g)
    return _normalize(total, nvars)


def macdonald_r1(d: int, g: int, m: int) -> int:
    """Closed form of the count when the divisor spans a (d-2)-plane:
    sum_i (-1)^i binom(g+2d-2-m, i) binom(g, d-i)."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return sum(
        (-1) ** i * binom(g + 2 * d - 2 - m, i) * binom(g, d - i)
        for i in range(d + 1)
    )


def macdonald_rs1(r: int, u: int) -> int:
    """Count for the included-pencil family: degree d = 2r divisors failing
    r conditions against an ambient series with s = r+1, on a genus
    (r+2)u curve of degree (r+1)(u+1).

    Evaluates the two-variable form: the coefficient of (t1*t2)^(r+1) in
    ((1+t1)(1+t2))^(m-g-s) (1+t1+t2)^g (t1-t2)^2, normalized by the
    two-variable symmetrization factor -1/2.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    s = r + 1
    params = SecantParams(
        g=(r + 2) * u, s=s, m=(r + 1) * (u + 1), d=2 * r, r=r
    )
    return macdonald_general(params, version="two")


def eta(g: int, s: int, m: int) -> int:
    """Number of (s+1)-dimensional degree-m series on a general genus-g
    curve in the zero-dimensional regime:
    g! * prod_{i=0..s} i! / (g-m+s+i)!.

    Defined only when rho(g,s,m) == 0; equals the number of standard Young
    tableaux of the (g-m+s) x (s+1) rectangle.
    """
    if rho(g, s, m) != 0:
        raise ValueError(
            f"eta requires rho(g,s,m) == 0, got rho = {rho(g, s, m)}"
        )
    if g - m + s < 0:
        raise ValueError(
            f"eta requires g-m+s >= 0, got {g - m + s}"
        )
    value = Fraction(math.factorial(g))
    for i in range(s + 1):
        value *= Fraction(math.factorial(i), math.factorial(g - m + s + i))
    assert value.denominator == 1
    return int(value)
