"""Series on elliptic chains: words, tableaux, vanishing orders, and shifts.

A zero-dimensional family of (s+1)-dimensional series on a g-component
elliptic chain is indexed by a length-g word over the alphabet [1, s+1]
(equivalently, a rectangular standard Young tableau).  The word drives a
deterministic evolution of vanishing sequences along the chain.  This
module implements that machinery, the gap-sequence shift bounds verified
exhaustively (the two claim verifiers), and the node-compatibility test
for tables of vanishing orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .macdonald import rho

MAX_TABLEAU_CELLS = 16
MAX_CLAIM_RANK = 8

__all__ = [
    "ClaimReport",
    "NearConsecSeq",
    "Tableau",
    "VanishingTable",
    "Word",
    "canonical_word",
    "eh_compatible",
    "enumerate_tableaux",
    "gap_sequence",
    "load_packaged_table",
    "load_vanishing_table",
    "parse_vanishing_table",
    "shift",
    "tableau_to_word",
    "vanishing_sequences",
    "verify_claim_A",
    "verify_claim_B",
    "word_to_tableau",
]

Tableau = tuple[tuple[int, ...], ...]
SeqPair = tuple[tuple[int, ...], tuple[int, ...]]

AMBIENT_TABLE_FIXTURE = "ambient_vanishing_table.txt"
INCLUDED_TABLE_FIXTURE = "included_vanishing_table.txt"


@dataclass(frozen=True)
class Word:
    """A length-g word over the alphabet [1, s+1]."""

    letters: tuple[int, ...]
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.s < 1:
            raise ValueError(f"need s >= 1, got {self.s}")
        if not self.letters:
            raise ValueError("word must be nonempty")
        for letter in self.letters:
            if not 1 <= letter <= self.s + 1:
                raise ValueError(
                    f"letter {letter} out of range [1, {self.s + 1}]"
                )

    @property
    def g(self) -> int:
        return len(self.letters)


def canonical_word(s: int, u: int) -> Word:
    """The word (1, 2, ..., s+1) repeated u times."""
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    return Word(tuple(range(1, s + 2)) * u, s)


def word_to_tableau(w: Word) -> Tableau:
    """The tableau whose (i, j) entry is the position of the i-th instance
    of letter j in the word.

    Rows then increase automatically; the column-increase condition holds
    exactly when every prefix of the word contains at least as many copies
    of each letter as of the next letter.  Words violating rectangularity
    or column increase are rejected.
    """
    counts = [0] * (w.s + 1)
    for letter in w.letters:
        counts[letter - 1] += 1
    height = counts[0]
    if counts != [height] * (w.s + 1):
        raise ValueError(
            f"letter multiset {counts} is not a rectangle: "
            f"every letter must appear the same number of times"
        )
    rows = [[0] * (w.s + 1) for _ in range(height)]
    seen = [0] * (w.s + 1)
    for position, letter in enumerate(w.letters, 1):
        seen[letter - 1] += 1
        rows[seen[letter - 1] - 1][letter - 1] = position
    tableau = tuple(tuple(row) for row in rows)
    _validate_tableau(tableau)
    return tableau


def _validate_tableau(t: Tableau) -> None:
    if not t or not t[0]:
        raise ValueError("tableau must be a nonempty rectangle")
    cols = len(t[0])
    if any(len(row) != cols for row in t):
        raise ValueError("tableau rows must all have the same length")
    cells = len(t) * cols
    entries = sorted(x for row in t for x in row)
    if entries != list(range(1, cells + 1)):
        raise ValueError(
            f"tableau entries must be exactly 1..{cells}, got {entries}"
        )
    for row in t:
        for a, b in zip(row, row[1:]):
            if a >= b:
                raise ValueError(f"row not increasing: {row}")
    for upper, lower in zip(t, t[1:]):
        for a, b in zip(upper, lower):
            if a >= b:
                raise ValueError(f"column not increasing: {a} above {b}")


def tableau_to_word(t: Tableau) -> Word:
    """Inverse of ``word_to_tableau``: the entry-(i,j) position of the
    tableau receives letter j."""
    t = tuple(tuple(row) for row in t)
    _validate_tableau(t)
    cells = len(t) * len(t[0])
    letters = [0] * cells
    for row in t:
        for j, position in enumerate(row, 1):
            letters[position - 1] = j
    return Word(tuple(letters), len(t[0]) - 1)


def enumerate_tableaux(rows: int, cols: int) -> list[Tableau]:
    """All standard Young tableaux of the rows x cols rectangle, in
    depth-first order by row index.  Guarded to 16 cells."""
    if rows < 1 or cols < 1:
        raise ValueError(f"need rows, cols >= 1, got {rows}, {cols}")
    if rows * cols > MAX_TABLEAU_CELLS:
        raise ValueError(
            f"refusing enumeration beyond {MAX_TABLEAU_CELLS} cells, "
            f"got {rows * cols}"
        )
    out: list[Tableau] = []
    grid = [[0] * cols for _ in range(rows)]
    heights = [0] * rows  # filled cells per row

    def fill(value: int) -> None:
        if value > rows * cols:
            out.append(tuple(tuple(row) for row in grid))
            return
        for i in range(rows):
            j = heights[i]
            if j < cols and (i == 0 or heights[i - 1] > j):
                grid[i][j] = value
                heights[i] += 1
                fill(value + 1)
                heights[i] -= 1
                grid[i][j] = 0

    fill(1)
    return out


@dataclass(frozen=True)
class NearConsecSeq:
    """A strictly increasing sequence whose consecutive differences are all
    1 except at most one difference of 2.

    ``gap_index`` is the 1-based position of the element just after the
    gap (so it lies in [2, len(values)]), or None when fully consecutive.
    """

    values: tuple[int, ...]
    gap_index: int | None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        diffs = [b - a for a, b in zip(self.values, self.values[1:])]
        gaps = [i + 2 for i, x in enumerate(diffs) if x == 2]
        if any(x not in (1, 2) for x in diffs) or len(gaps) > 1:
            raise ValueError(f"not nearly consecutive: {self.values}")
        expected = gaps[0] if gaps else None
        if self.gap_index != expected:
            raise ValueError(
                f"gap index {self.gap_index} does not match values "
                f"{self.values} (expected {expected})"
            )

    @classmethod
    def from_values(cls, values: tuple[int, ...] | list[int]) -> "NearConsecSeq":
        values = tuple(values)
        diffs = [b - a for a, b in zip(values, values[1:])]
        gaps = [i + 2 for i, x in enumerate(diffs) if x == 2]
        return cls(values, gaps[0] if gaps else None)


def gap_sequence(s: int, i0: int) -> tuple[int, ...]:
    """Length-(s+1) increasing sequence starting at 0 with all gaps 1
    except a single gap of 2 before the i0-th element; it ends at s+1."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    if not 2 <= i0 <= s + 1:
        raise ValueError(f"need 2 <= i0 <= s+1, got i0={i0}")
    return tuple(i - 1 + (1 if i >= i0 else 0) for i in range(1, s + 2))


@dataclass(frozen=True)
class VanishingTable:
    """Vanishing orders along a g-component chain: for each component j
    (1-indexed), the orders at its incoming node (increasing) and at its
    outgoing node (decreasing), each of length s+1 and bounded by m."""

    s: int
    m: int
    incoming: tuple[tuple[int, ...], ...]
    outgoing: tuple[tuple[int, ...], ...]

    @property
    def g(self) -> int:
        return len(self.incoming)


def vanishing_sequences(w: Word, m: int) -> VanishingTable:
    """Evolve vanishing orders along the chain directed by the word.

    The first component's incoming orders are (0, 1, ..., s).  Crossing
    component j increments every order except the one at index
    letters[j] - 1.  The outgoing orders of component j are the degree
    complement m - (next incoming orders), listed decreasingly aligned.
    Words that drive an order out of strict increase or past m are
    rejected, as is any (g, s, m) with nonzero moduli count.
    """
    s, g = w.s, w.g
    if rho(g, s, m) != 0:
        raise ValueError(
            f"need rho(g,s,m) == 0, got rho({g},{s},{m}) = {rho(g, s, m)}"
        )
    current = tuple(range(s + 1))
    incoming = [current]
    outgoing = []
    for j, letter in enumerate(w.letters, 1):
        fixed = letter - 1
        nxt = tuple(
            v + (0 if i == fixed else 1) for i, v in enumerate(current)
        )
        if any(a >= b for a, b in zip(nxt, nxt[1:])):
            raise ValueError(
                f"word drives orders out of strict increase at component {j}: {nxt}"
            )
        if nxt[-1] > m:
            raise ValueError(
                f"word drives orders past degree {m} at component {j}: {nxt}"
            )
        outgoing.append(tuple(m - v for v in nxt))
        if j < g:
            incoming.append(nxt)
        current = nxt
    return VanishingTable(s, m, tuple(incoming), tuple(outgoing))


def shift(v: list[int] | tuple[int, ...], w: list[int] | tuple[int, ...]) -> int:
    """Total displacement sum(w_i - v_i) between two strictly increasing
    index lists of the same length."""
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    for seq in (v, w):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"index list not strictly increasing: {seq}")
        if seq and seq[0] < 0:
            raise ValueError(f"index entries must be nonnegative: {seq}")
    return sum(w) - sum(v)


@dataclass(frozen=True)
class ClaimReport:
    """Result of an exhaustive shift-bound check."""

    s: int
    m: int
    i0: int
    M: int
    sstar: int
    bound: int
    min_shift: int | None
    vacuous: bool

    @property
    def holds(self) -> bool | None:
        if self.vacuous:
            return None
        return self.min_shift >= self.bound


def _verify_claim(
    s: int, m: int, i0: int, M: int, sstar: int, complement: tuple[int, ...],
    budget: tuple[int, ...],
) -> ClaimReport:
    seq = gap_sequence(s, i0)
    positions = range(s + 1)
    best: int | None = None
    for ps in itertools.combinations(positions, sstar + 1):
        for qs in itertools.combinations(positions, sstar + 1):
            if all(
                seq[p] + complement[q] <= b
                for p, q, b in zip(ps, qs, budget)
            ):
                total = sum(q - p for p, q in zip(ps, qs))
                if best is None or total < best:
                    best = total
    bound = M * sstar + 1
    report = ClaimReport(
        s=s, m=m, i0=i0, M=M, sstar=sstar, bound=bound,
        min_shift=best, vacuous=best is None,
    )
    if report.holds is False:
        raise ArithmeticError(
            f"shift bound violated: min_shift {best} < {bound} at "
            f"(s={s}, m={m}, i0={i0}, M={M}, sstar={sstar})"
        )
    return report


def _check_claim_args(s: int, m: int, i0: int, M: int, sstar: int) -> None:
    if s < 1 or s > MAX_CLAIM_RANK:
        raise ValueError(f"need 1 <= s <= {MAX_CLAIM_RANK}, got {s}")
    if not 2 <= i0 <= s:
        raise ValueError(f"need 2 <= i0 <= s, got i0={i0}, s={s}")
    if M < 2:
        raise ValueError(f"need M >= 2, got {M}")
    if not 0 <= sstar <= s:
        raise ValueError(f"need 0 <= sstar <= s, got {sstar}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")


def verify_claim_A(s: int, m: int, i0: int, M: int, sstar: int) -> ClaimReport:
    """Exhaustive check of the shift bound for the marked-index complement.

    The base sequence is ``gap_sequence(s, i0)``; its complement takes
    m-1-value at every position except the distinguished one, which takes
    m-value.  Over all increasing position choices for a length-(sstar+1)
    subsequence and its complement partner subject to the componentwise
    budget (m-M-1, ..., m-M-1, m-M), the minimum total positional shift is
    returned; when the feasible set is nonempty the bound
    min_shift >= M*sstar + 1 is asserted.
    """
    _check_claim_args(s, m, i0, M, sstar)
    seq = gap_sequence(s, i0)
    complement = tuple(
        m - seq[i] - (0 if i == i0 - 1 else 1) for i in range(s + 1)
    )
    budget = (m - M - 1,) * sstar + (m - M,)
    return _verify_claim(s, m, i0, M, sstar, complement, budget)


def verify_claim_B(s: int, m: int, i0: int, M: int, sstar: int) -> ClaimReport:
    """Exhaustive check of the shift bound for the plain complement
    m - value, with the uniform budget (m-M, ..., m-M)."""
    _check_claim_args(s, m, i0, M, sstar)
    seq = gap_sequence(s, i0)
    complement = tuple(m - seq[i] for i in range(s + 1))
    budget = (m - M,) * (sstar + 1)
    return _verify_claim(s, m, i0, M, sstar, complement, budget)


def eh_compatible(table: list[SeqPair], d: int) -> bool:
    """Node compatibility of a chain of vanishing-order pairs.

    ``table`` lists, per component, the orders at its incoming node
    (increasing) and outgoing node (decreasing).  At each interior node the
    outgoing orders of the left component plus the incoming orders of the
    right component must be at least d in every coordinate.  The two chain
    ends carry no condition.
    """
    if not table:
        raise ValueError("table must have at least one component")
    width = len(table[0][0])
    for incoming, outgoing in table:
        if len(incoming) != width or len(outgoing) != width:
            raise ValueError(
                f"all sequences must have length {width}: "
                f"{incoming} / {outgoing}"
            )
    for (_, left_out), (right_in, _) in zip(table, table[1:]):
        if any(a + b < d for a, b in zip(left_out, right_in)):
            return False
    return True


def parse_vanishing_table(text: str) -> list[SeqPair]:
    """Parse a vanishing table: blocks of two whitespace-separated integer
    lines (incoming then outgoing), blank lines between blocks, '#' for
    comments."""
    rows: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(tuple(int(x) for x in line.split()))
    if len(rows) % 2 != 0:
        raise ValueError(
            f"expected an even number of sequence lines, got {len(rows)}"
        )
    return [(rows[i], rows[i + 1]) for i in range(0, len(rows), 2)]


def load_vanishing_table(path: str | Path) -> list[SeqPair]:
    """Load a vanishing table from a file path."""
    return parse_vanishing_table(Path(path).read_text(encoding="utf-8"))


def load_packaged_table(name: str) -> list[SeqPair]:
    """Load one of the vanishing tables shipped with the package."""
    source = resources.files("secant_census").joinpath(f"fixtures/{name}")
    return parse_vanishing_table(source.read_text(encoding="utf-8"))
