"""Rank-2 subset poset, its maximal chains, and the chain-summed counts.

The vertices are the 2-element subsets of [n]; a cover increments one
element by 1.  Every maximal chain from {1,2} to {n-1,n} determines a
prohibition sequence (the common element of each consecutive pair), and
the grid-traversal counts of those prohibition sequences, summed over all
maximal chains, reproduce the intersection-theoretic secant-plane count
for divisors spanning one dimension less than expected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import binom
from .census import (
    GridSpec,
    ProhibitionSequence,
    count_traversals_brute,
    count_traversals_dp,
    word_descent_strata,
)

MAX_POSET_SIZE = 10

__all__ = [
    "PluckerChain",
    "chain_strata",
    "count_over_prohibitions",
    "count_rs1",
    "count_rs1_brute",
    "count_rs1_stratified",
    "maximal_chains",
    "plucker_poset",
    "prohibition_of_chain",
]

Vertex = tuple[int, int]


@dataclass(frozen=True)
class PluckerChain:
    """A maximal chain of 2-subsets of [n] under single-element increments."""

    n: int
    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices", tuple(tuple(v) for v in self.vertices)
        )
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        for a, b in self.vertices:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"invalid 2-subset ({a},{b}) of [1..{self.n}]")
        if self.vertices[0] != (1, 2):
            raise ValueError(f"chain must start at (1,2), got {self.vertices[0]}")
        if self.vertices[-1] != (self.n - 1, self.n):
            raise ValueError(
                f"chain must end at ({self.n - 1},{self.n}), got {self.vertices[-1]}"
            )
        for (a, b), (a2, b2) in zip(self.vertices, self.vertices[1:]):
            if not ((a2, b2) == (a + 1, b) or (a2, b2) == (a, b + 1)):
                raise ValueError(
                    f"({a2},{b2}) does not cover ({a},{b})"
                )

    @property
    def edges(self) -> int:
        return len(self.vertices) - 1

    @property
    def nu(self) -> tuple[int, ...]:
        """Common element of each consecutive pair of subsets."""
        out = []
        for (a, b), (a2, b2) in zip(self.vertices, self.vertices[1:]):
            common = {a, b} & {a2, b2}
            assert len(common) == 1
            out.append(common.pop())
        return tuple(out)


def plucker_poset(n: int) -> tuple[list[Vertex], list[tuple[Vertex, Vertex]]]:
    """Vertices (all 2-subsets of [n], sorted) and cover relations
    ({a,b} is covered by {a+1,b} and by {a,b+1} whenever those are
    2-subsets)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    vertices = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    vertices.sort()
    covers = []
    for a, b in vertices:
        if a + 1 < b:
            covers.append(((a, b), (a + 1, b)))
        if b + 1 <= n:
            covers.append(((a, b), (a, b + 1)))
    return vertices, covers


def maximal_chains(n: int) -> list[PluckerChain]:
    """All maximal chains from {1,2} to {n-1,n}, in depth-first order
    preferring the first-element increment.  Guarded to n <= 10."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n > MAX_POSET_SIZE:
        raise ValueError(f"need n <= {MAX_POSET_SIZE}, got {n}")
    chains: list[PluckerChain] = []
    target = (n - 1, n)

    def extend(path: list[Vertex]) -> None:
        a, b = path[-1]
        if (a, b) == target:
            chains.append(PluckerChain(n, tuple(path)))
            return
        if a + 1 < b:
            path.append((a + 1, b))
            extend(path)
            path.pop()
        if b + 1 <= n:
            path.append((a, b + 1))
            extend(path)
            path.pop()

    extend([(1, 2)])
    return chains


def prohibition_of_chain(chain: PluckerChain) -> ProhibitionSequence:
    """The per-row prohibited labels of a chain: the common element of the
    j-th edge, reduced modulo n into [1, n]."""
    n = chain.n
    labels = tuple(1 + ((common - 1) % n) for common in chain.nu)
    return ProhibitionSequence(labels, n)


def chain_strata(chain: PluckerChain) -> tuple[int, ...]:
    """Stratified coefficients (N_0, ..., N_{d-2}) of a chain's traversal
    polynomial: with g = n*u columns the traversal count equals
    sum_k N_k * binom(u + d - 2 - k, d) for every u.

    N_k counts the prohibition-avoiding words with exactly k+1 descents;
    a word with zero descents would contribute a binom(u+d-1, d) term,
    and none exists because every chain prohibits label 1 in row 1.
    """
    strata = word_descent_strata(prohibition_of_chain(chain))
    if strata[0] != 0:
        raise ArithmeticError(
            "descent-free prohibition-avoiding word found; the stratification "
            "offset is invalid for this chain"
        )
    # k = 0..d-2 corresponds to 1..d-1 descents
    return tuple(strata[1:])


def _rs1_chain_grids(r: int, u: int) -> list[GridSpec]:
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    n = r + 2
    g = n * u
    return [
        GridSpec(g, n, prohibition_of_chain(chain)) for chain in maximal_chains(n)
    ]


def count_rs1(r: int, u: int) -> int:
    """Chain-summed traversal count for the included-pencil family:
    sum over maximal chains of the 2-subset poset of [r+2] of the
    traversal count of the chain's prohibition grid with (r+2)u columns."""
    return sum(count_traversals_dp(grid) for grid in _rs1_chain_grids(r, u))


def count_rs1_brute(r: int, u: int) -> int:
    """Exhaustive-enumeration oracle for ``count_rs1`` (guarded)."""
    return sum(count_traversals_brute(grid) for grid in _rs1_chain_grids(r, u))


def count_rs1_stratified(r: int, u: int) -> int:
    """``count_rs1`` evaluated through each chain's descent stratification."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    n = r + 2
    d = 2 * (n - 2)
    total = 0
    for chain in maximal_chains(n):
        strata = chain_strata(chain)
        total += sum(
            strata[k] * binom(u + d - 2 - k, d) for k in range(d - 1)
        )
    return total


def count_over_prohibitions(
    prohibitions: list[ProhibitionSequence], g: int
) -> int:
    """Sum of traversal counts over caller-supplied prohibition sequences.

    Generic entry point for families whose chain poset is not built in;
    no correctness claim is attached beyond the per-grid counts.
    """
    return sum(
        count_traversals_dp(GridSpec(g, p.modulus, p)) for p in prohibitions
    )
