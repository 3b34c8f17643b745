"""Counting engine for prohibition grids and their stratifications.

A prohibition grid has ``d`` rows and ``g`` columns; column ``c`` carries
the cyclic label ``1 + ((c-1) mod modulus)`` and each row may prohibit one
label.  A traversal picks one column per row, strictly increasing from top
to bottom, avoiding prohibited cells.  This module counts traversals three
ways (exhaustive, dynamic programming, and via a descent stratification)
and enumerates the bounded-partial-sum tuples whose negative-entry counts
stratify the traversal polynomial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .algebra import binom

ENUMERATION_GUARD = 10**7
TUPLE_GUARD = 10**8

__all__ = [
    "GridSpec",
    "ProhibitionSequence",
    "count_r1",
    "count_set_S",
    "count_traversals_brute",
    "count_traversals_dp",
    "enumerate_W",
    "path_count_gamma",
    "r1_grid",
    "word_descent_strata",
]


@dataclass(frozen=True)
class ProhibitionSequence:
    """Per-row prohibited labels: a label in [1, modulus], or 0 for none."""

    labels: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.labels) < 1:
            raise ValueError("need at least one row")
        for lab in self.labels:
            if not 0 <= lab <= self.modulus:
                raise ValueError(
                    f"label {lab} out of range [0, {self.modulus}]"
                )

    @property
    def rows(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class GridSpec:
    """A prohibition grid: ``g`` cyclically labelled columns, one prohibited
    label per row."""

    g: int
    modulus: int
    prohibition: ProhibitionSequence

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"column count must be nonnegative, got {self.g}")
        if self.modulus != self.prohibition.modulus:
            raise ValueError(
                f"grid modulus {self.modulus} != prohibition modulus "
                f"{self.prohibition.modulus}"
            )

    def column_label(self, c: int) -> int:
        """Cyclic label of column ``c`` (columns are 1-indexed)."""
        return 1 + ((c - 1) % self.modulus)

    def allowed(self, row: int, c: int) -> bool:
        """Whether column ``c`` may be chosen in ``row`` (rows are 0-indexed)."""
        lab = self.prohibition.labels[row]
        return lab == 0 or self.column_label(c) != lab


def count_traversals_dp(spec: GridSpec) -> int:
    """Count strictly increasing column choices avoiding prohibited cells.

    Row-by-row prefix-sum dynamic programming; linear in rows*columns, so
    it scales far beyond what exhaustive enumeration can reach.
    """
    g = spec.g
    d = spec.prohibition.rows
    if d > g:
        return 0
    # prev[c] = number of valid choices for the rows so far ending at column c;
    # the virtual column 0 seeds the first row.
    prev = [0] * (g + 1)
    prev[0] = 1
    for row in range(d):
        prefix = 0
        cur = [0] * (g + 1)
        for c in range(1, g + 1):
            prefix += prev[c - 1]
            if spec.allowed(row, c):
                cur[c] = prefix
        prev = cur
    return sum(prev)


def count_traversals_brute(spec: GridSpec) -> int:
    """Oracle: enumerate every strictly increasing column tuple directly.

    Guarded to at most ``ENUMERATION_GUARD`` candidate tuples; use
    ``count_traversals_dp`` beyond that.
    """
    g = spec.g
    d = spec.prohibition.rows
    if d > g:
        return 0
    if math.comb(g, d) > ENUMERATION_GUARD:
        raise ValueError(
            f"refusing exhaustive enumeration of C({g},{d}) tuples; "
            "use count_traversals_dp"
        )
    count = 0
    for cols in itertools.combinations(range(1, g + 1), d):
        if all(spec.allowed(row, c) for row, c in enumerate(cols)):
            count += 1
    return count


def count_set_S(t: int, u: int) -> int:
    """Count (t+1)-subsets j_1 < ... < j_{t+1} of [ (2t+1)u ] such that
    j_k is never congruent to 2k-1 modulo 2t+1.

    Direct enumeration, guarded to ``ENUMERATION_GUARD`` candidates.
    """
    if t < 1 or u < 1:
        raise ValueError(f"need t >= 1 and u >= 1, got t={t}, u={u}")
    n = (2 * t + 1) * u
    if t + 1 > n:
        return 0
    if math.comb(n, t + 1) > ENUMERATION_GUARD:
        raise ValueError(
            f"refusing exhaustive enumeration of C({n},{t + 1}) subsets; "
            "use count_traversals_dp on r1_grid"
        )
    modulus = 2 * t + 1
    forbidden = [(2 * k - 1) % modulus for k in range(1, t + 2)]
    count = 0
    for subset in itertools.combinations(range(1, n + 1), t + 1):
        if all(j % modulus != f for j, f in zip(subset, forbidden)):
            count += 1
    return count


def r1_grid(t: int, u: int) -> GridSpec:
    """The prohibition grid whose traversals realize ``count_set_S(t, u)``:
    (2t+1)u columns, modulus 2t+1, row k prohibiting the label of 2k-1."""
    if t < 1 or u < 1:
        raise ValueError(f"need t >= 1 and u >= 1, got t={t}, u={u}")
    modulus = 2 * t + 1
    labels = tuple(1 + ((2 * k - 2) % modulus) for k in range(1, t + 2))
    return GridSpec((2 * t + 1) * u, modulus, ProhibitionSequence(labels, modulus))


def path_count_gamma(d: int, e: int) -> int:
    """Number of top-to-bottom paths of the d-row, e-column ladder diagram:
    binom(d+e-1, d), satisfying the Pascal-type recursion
    N(d,e) = N(d-1,e) + N(d,e-1) with N(1,e)=e and N(d,1)=1."""
    if d < 1 or e < 1:
        raise ValueError(f"need d >= 1 and e >= 1, got d={d}, e={e}")
    return binom(d + e - 1, d)


@lru_cache(maxsize=None)
def enumerate_W(s: int, d: int) -> tuple[int, ...]:
    """Stratified counts of bounded-partial-sum tuples.

    Counts integer tuples (x_1, ..., x_d) whose partial sums satisfy
    j <= x_1 + ... + x_j <= s + j - 1 for every j, stratified by the number
    k of negative entries.  Returns (N_0, ..., N_d); the total is s**d and
    N_k = 0 for k > d - 2.
    """
    if s < 1 or d < 1:
        raise ValueError(f"need s >= 1 and d >= 1, got s={s}, d={d}")
    if s**d > TUPLE_GUARD:
        raise ValueError(f"refusing enumeration of {s}**{d} tuples")
    # level[sigma] = counts by number of negatives among x_1..x_j, where
    # sigma is the j-th partial sum.  Exact level-by-level accumulation.
    level: dict[int, list[int]] = {0: [1]}
    for j in range(1, d + 1):
        nxt: dict[int, list[int]] = {}
        for tau in range(j, s + j):
            counts = [0] * (j + 1)
            for sigma, prev_counts in level.items():
                negative = tau < sigma
                for k, c in enumerate(prev_counts):
                    if c:
                        counts[k + (1 if negative else 0)] += c
            nxt[tau] = counts
        level = nxt
    totals = [0] * (d + 1)
    for counts in level.values():
        for k, c in enumerate(counts):
            totals[k] += c
    return tuple(totals)


def _enumerate_W_bruteforce(s: int, d: int) -> tuple[int, ...]:
    """Literal tuple-by-tuple oracle for ``enumerate_W`` (tests only)."""
    totals = [0] * (d + 1)
    for sums in itertools.product(*(range(j, s + j) for j in range(1, d + 1))):
        prev = 0
        k = 0
        for sigma in sums:
            if sigma < prev:
                k += 1
            prev = sigma
        totals[k] += 1
    return tuple(totals)


def count_r1(t: int, u: int) -> int:
    """Traversal count of ``r1_grid(t, u)`` via the stratified closed form:
    sum over k of N_k * binom(t+1+u-2-k, t+1), with N_k from
    ``enumerate_W(2t, t+1)``."""
    if t < 1 or u < 1:
        raise ValueError(f"need t >= 1 and u >= 1, got t={t}, u={u}")
    d = t + 1
    strata = enumerate_W(2 * t, d)
    return sum(
        strata[k] * binom(d + u - 2 - k, d) for k in range(0, max(d - 1, 1))
    )


def word_descent_strata(prohibition: ProhibitionSequence) -> tuple[int, ...]:
    """Counts of prohibition-avoiding words stratified by descent number.

    A word is a sequence (l_1, ..., l_d) of labels in [1, modulus] with
    l_j distinct from the row-j prohibited label; a descent is a position
    with l_{j+1} <= l_j.  Returns (W_0, ..., W_{d-1}) where W_c counts
    words with exactly c descents.  These strata expand the traversal
    count of the corresponding grid with g = modulus*u columns as
    sum_c W_c * binom(u + d - 1 - c, d), exactly, for every u >= 0.
    """
    labels = prohibition.labels
    modulus = prohibition.modulus
    d = len(labels)
    # dp[(last letter, descents)] = word count
    dp: dict[tuple[int, int], int] = {}
    for letter in range(1, modulus + 1):
        if labels[0] != 0 and letter == labels[0]:
            continue
        dp[(letter, 0)] = dp.get((letter, 0), 0) + 1
    for row in range(1, d):
        nxt: dict[tuple[int, int], int] = {}
        for (last, desc), c in dp.items():
            for letter in range(1, modulus + 1):
                if labels[row] != 0 and letter == labels[row]:
                    continue
                key = (letter, desc + (1 if letter <= last else 0))
                nxt[key] = nxt.get(key, 0) + c
        dp = nxt
    totals = [0] * d
    for (_, desc), c in dp.items():
        totals[desc] += c
    return tuple(totals)
