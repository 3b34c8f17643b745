"""Closed-form inclusion-exclusion cross-check of the tuple stratification.

``census.enumerate_W`` counts bounded-partial-sum tuples stratified by the
number k of negative entries.  This module rebuilds those counts from
closed forms: ``n_plus(d, j)`` counts configurations with at least j
marked negative steps grouped into runs (a sum over partitions weighted
by run-placement and multiplicity factors), and an inclusion-exclusion
with tabulated coefficients recovers the exact-k counts.  The top stratum
k = d-2 also has a direct two-term-product formula, ``n_top``.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .algebra import Partition, binom, multinomial, partitions_of, validate_partition
from .census import path_count_gamma

__all__ = [
    "c_d",
    "load_gamma_table",
    "m_d",
    "n_exact_closed",
    "n_plus",
    "n_top",
]

GammaTable = Mapping[tuple[int, int, int], int]


def c_d(d: int, lam: Sequence[int]) -> int:
    """Number of binary strings on d-1 bits whose maximal runs of ones have
    lengths equal to the parts of ``lam`` (as a multiset).

    With ell parts of total weight w, the count is the number of ways to
    order the runs times the number of ways to place them separated by
    zeros: multinomial(run-length multiplicities) * binom(d - w, ell).
    Zero when w + ell > d (the runs and separators do not fit).
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    lam = validate_partition(lam)
    weight = sum(lam)
    ell = len(lam)
    if weight + ell > d:
        return 0
    multiplicities: dict[int, int] = {}
    for part in lam:
        multiplicities[part] = multiplicities.get(part, 0) + 1
    return multinomial(list(multiplicities.values())) * binom(d - weight, ell)


def m_d(d: int, lam: Sequence[int]) -> int:
    """Multiplicity weight of a run profile ``lam``:
    prod_i path_count_gamma(lam_i + 1, 2d-2-2*lam_i) * (2d-2)^(d - ell - w),
    and zero whenever the trailing exponent is negative or a ladder factor
    is degenerate."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    lam = validate_partition(lam)
    weight = sum(lam)
    ell = len(lam)
    exponent = d - ell - weight
    if exponent < 0:
        return 0
    product = 1
    for part in lam:
        cols = 2 * d - 2 - 2 * part
        if cols < 1:
            return 0
        product *= path_count_gamma(part + 1, cols)
    return product * (2 * d - 2) ** exponent


def n_plus(d: int, j: int) -> int:
    """At-least-level count: sum over partitions of weight j of
    c_d(lam) * m_d(lam)."""
    if not 0 <= j <= d - 2:
        raise ValueError(f"need 0 <= j <= d-2, got j={j}, d={d}")
    return sum(c_d(d, lam) * m_d(d, lam) for lam in partitions_of(j))


def n_exact_closed(d: int, j: int, gammas: GammaTable) -> int:
    """Exact-level count via tabulated inclusion-exclusion:
    sum_{j <= k <= d-2} (-1)^(k-j) * gamma[d, j, k] * n_plus(d, k)."""
    if not 0 <= j <= d - 2:
        raise ValueError(f"need 0 <= j <= d-2, got j={j}, d={d}")
    total = 0
    for k in range(j, d - 1):
        key = (d, j, k)
        if key not in gammas:
            raise KeyError(
                f"gamma table has no entry for (d, j, k) = {key}"
            )
        total += (-1) ** (k - j) * gammas[key] * n_plus(d, k)
    return total


def n_top(d: int) -> int:
    """Direct closed form of the top stratum:
    sum_{j=1}^{d-1} binom(2d-j-1, j) * binom(d+j-1, d-j)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return sum(
        binom(2 * d - j - 1, j) * binom(d + j - 1, d - j)
        for j in range(1, d)
    )


def load_gamma_table(path: str | Path | None = None) -> dict[tuple[int, int, int], int]:
    """Load inclusion-exclusion coefficients keyed by (d, j, k).

    With no argument, the table shipped with the package is used.  The
    file format is line-oriented: comment lines start with '#', data lines
    hold four integers ``d j k value``.
    """
    if path is None:
        source = resources.files("secant_census").joinpath(
            "fixtures/gamma_coefficients.txt"
        )
        text = source.read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    table: dict[tuple[int, int, int], int] = {}
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(
                f"gamma table line {line_number}: expected 'd j k value', got {line!r}"
            )
        d, j, k, value = (int(x) for x in fields)
        table[(d, j, k)] = value
    return table
