"""Row insertion: standard tableaux, shapes, and second rows without insertion.

Insertion follows the classical rule: a value entering a row bumps the
leftmost entry strictly greater than it, and the bumped value drops to the
next row.  The recording tableau marks where each new cell appeared.  For a
boolean permutation the tableaux have at most two rows and their second rows
can be read straight off the canonical reduced word: add one to each run's
first letter for the insertion tableau, to each run's last letter for the
recording tableau.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .canonical import CanonicalWord, leftmost_letters, rightmost_letters
from .permutation import Permutation


@dataclass(frozen=True)
class Shape:
    """A partition: weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        for a, b in zip(self.parts, self.parts[1:]):
            if b > a:
                raise ValueError(f"parts {self.parts} not weakly decreasing")
        if self.parts and self.parts[-1] < 1:
            raise ValueError("parts must be positive")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Shape":
        if not self.parts:
            return Shape(())
        return Shape(tuple(sum(1 for p in self.parts if p > k) for k in range(self.parts[0])))


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a standard-style tableau: distinct positive entries increasing
    along rows and down columns, row lengths weakly decreasing.

    Insertion tableaux of whole permutations carry the values 1..n exactly
    (see ``has_contiguous_content``); partial insertion tableaux carry just
    the inserted prefix, which is why contiguity is not a construction
    invariant.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        if not self.rows or not all(self.rows):
            raise ValueError("rows must be nonempty")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must weakly decrease")
            for a, b in zip(upper, lower):
                if b <= a:
                    raise ValueError(f"column not increasing: {a} above {b}")
        for row in self.rows:
            for a, b in zip(row, row[1:]):
                if b <= a:
                    raise ValueError(f"row not increasing: {row}")
        entries = [v for row in self.rows for v in row]
        if len(set(entries)) != len(entries):
            raise ValueError("entries must be distinct")
        if min(entries) < 1:
            raise ValueError("entries must be positive")

    def has_contiguous_content(self) -> bool:
        """True when the entries are exactly 1..n."""
        entries = sorted(v for row in self.rows for v in row)
        return entries == list(range(1, len(entries) + 1))

    @property
    def n(self) -> int:
        return sum(len(row) for row in self.rows)

    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows))

    @property
    def row1(self) -> tuple[int, ...]:
        return self.rows[0]

    @property
    def row2(self) -> tuple[int, ...]:
        return self.rows[1] if len(self.rows) > 1 else ()


def _bump(rows: list[list[int]], value: int) -> int:
    """Insert ``value`` by row bumping; return the index of the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r
        row = rows[r]
        k = bisect.bisect_right(row, value)
        if k == len(row):
            row.append(value)
            return r
        value, row[k] = row[k], value
        r += 1


def rsk(w: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Insert w(1), ..., w(n); return the insertion and recording tableaux.

    >>> P, Q = rsk(Permutation((3, 4, 1, 2)))
    >>> P.rows
    ((1, 2), (3, 4))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(w.entries, start=1):
        r = _bump(p_rows, value)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(step)
    make = lambda rows: StandardTableau(tuple(tuple(row) for row in rows))
    return make(p_rows), make(q_rows)


def partial_insertion(w: Permutation, i: int) -> StandardTableau:
    """The insertion tableau of the prefix w(1), ..., w(i)."""
    if not 1 <= i <= w.n:
        raise ValueError(f"prefix length {i} out of range 1..{w.n}")
    rows: list[list[int]] = []
    for value in w.entries[:i]:
        _bump(rows, value)
    return StandardTableau(tuple(tuple(row) for row in rows))


def shape_of(w: Permutation) -> Shape:
    """The common shape of the insertion and recording tableaux.

    Its first part is the length of a longest increasing subsequence of w and
    the first part of its conjugate is the length of a longest decreasing one.
    """
    rows: list[list[int]] = []
    for value in w.entries:
        _bump(rows, value)
    return Shape(tuple(len(row) for row in rows))


def row2_from_canonical(canonical: CanonicalWord) -> tuple[frozenset[int], frozenset[int]]:
    """Second rows of the insertion and recording tableaux, read directly off
    the canonical word's run endpoints; no insertion is performed."""
    row2_p = frozenset(a + 1 for a in leftmost_letters(canonical))
    row2_q = frozenset(a + 1 for a in rightmost_letters(canonical))
    return row2_p, row2_q
