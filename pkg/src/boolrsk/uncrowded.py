"""Uncrowded sets and tableaux, and their bijection with binary words.

A set of integers is uncrowded when every window of 2x+1 consecutive integers
holds at most x+1 of its elements.  The two-row standard tableaux whose
second row is uncrowded are exactly the insertion (and recording) tableaux of
boolean permutations, and they are counted by the binary words of length n-1
whose maximal blocks of 1s all have odd length.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .canonical import CanonicalWord, leftmost_letters
from .errors import CrowdedError, DomainError
from .rsk import StandardTableau
from .words import RunWord


@dataclass(frozen=True)
class BinaryWord:
    """A 0/1 word of length n-1 attached to tableaux of size n."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits) + 1

    def one_runs(self) -> list[tuple[int, int]]:
        """Maximal blocks of 1s as (1-based start index, length) pairs."""
        runs = []
        i = 0
        while i < len(self.bits):
            if self.bits[i] == 1:
                j = i
                while j < len(self.bits) and self.bits[j] == 1:
                    j += 1
                runs.append((i + 1, j - i))
                i = j
            else:
                i += 1
        return runs

    def has_odd_one_runs(self) -> bool:
        return all(length % 2 == 1 for _, length in self.one_runs())

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def crowding_witness(values: Iterable[int]) -> tuple[int, int, int] | None:
    """A violating window as (y, x, count), or None when the set is uncrowded.

    Only windows starting at an element and spanning at most the set's range
    need checking: any violating window shrinks to one of those.
    """
    elements = sorted(set(values))
    if len(elements) <= 1:
        return None
    span = elements[-1] - elements[0]
    max_x = (span + 1) // 2
    for y in elements:
        lo = bisect_left(elements, y)
        for x in range(1, max_x + 1):
            count = bisect_right(elements, y + 2 * x) - lo
            if count > x + 1:
                return (y, x, count)
    return None


def is_uncrowded(values: Iterable[int]) -> bool:
    """True when every window [y, y+2x] holds at most x+1 elements.

    >>> is_uncrowded({3, 4})
    True
    >>> is_uncrowded({4, 6, 7, 8})
    False
    """
    return crowding_witness(values) is None


def is_uncrowded_tableau(tableau: StandardTableau) -> bool:
    """True when the (at most two-row) tableau has an uncrowded second row."""
    if len(tableau.rows) > 2:
        raise DomainError(f"tableau has {len(tableau.rows)} rows; at most two allowed")
    return is_uncrowded(tableau.row2)


def is_feasible_second_row(values: Iterable[int]) -> bool:
    """True when some two-row standard tableau has this set inside its second
    row: the j-th smallest element must be at least 2j."""
    return all(r >= 2 * j for j, r in enumerate(sorted(set(values)), start=1))


def uncrowded_after_adding_one(values: Iterable[int]) -> bool:
    """For a set realizable inside a second row, adjoining 1 cannot change
    crowdedness; returns the (common) verdict and insists the two agree."""
    elements = set(values)
    if not is_feasible_second_row(elements):
        raise DomainError(f"{sorted(elements)} is not realizable inside a second row")
    with_one = is_uncrowded(elements | {1})
    without = is_uncrowded(elements)
    if with_one != without:
        raise AssertionError(
            f"adjoining 1 changed the verdict for {sorted(elements)}; should be impossible"
        )
    return with_one


def realize_leftmost_letters(letters: Iterable[int], n: int) -> CanonicalWord:
    """A canonical word whose runs start exactly at the given letters.

    Exists if and only if the letter set together with 0 is uncrowded.  Writing
    the letters as m_0 < ... < m_k, uncrowdedness forces m_i >= 2i+1; when
    equality holds throughout the word is the stack of two-letter increasing
    runs (2k+1)(2k+2) ... 34.12.  Otherwise the smallest excess letter m_j
    heads a two-letter decreasing run, the letters above m_j recurse after a
    downward shift, and the letters below continue as two-letter increasing
    runs.  Rejects constructions needing letters outside 1..n-1.
    """
    wanted = sorted(set(letters))
    for a in wanted:
        if not 1 <= a <= n - 1:
            raise DomainError(f"letter {a} out of range 1..{n - 1}")
    witness = crowding_witness(set(wanted) | {0})
    if witness is not None:
        y, x, count = witness
        raise CrowdedError(
            f"{sorted(set(wanted) | {0})} is crowded: window [{y}, {y + 2 * x}] "
            f"holds {count} > {x + 1} elements"
        )
    dec, inc = _realize(wanted)
    top = max((a for run in dec + inc for a in run.letters), default=0)
    if top > n - 1:
        raise DomainError(f"construction needs letter {top} but the degree is {n}")
    return CanonicalWord(tuple(dec), tuple(inc), n)


def _realize(wanted: list[int]) -> tuple[list[RunWord], list[RunWord]]:
    if not wanted:
        return [], []
    if all(m == 2 * i + 1 for i, m in enumerate(wanted)):
        k = len(wanted) - 1
        return [], [RunWord((2 * i + 1, 2 * i + 2)) for i in range(k, -1, -1)]
    j = next((i for i, m in enumerate(wanted) if m > 2 * i + 1), None)
    assert j is not None, "uncrowdedness forces the i-th letter to be at least 2i+1"
    pivot = wanted[j]
    sub_dec, sub_inc = _realize([z - pivot for z in wanted if z > pivot])
    shift = lambda runs: [RunWord(tuple(a + pivot for a in r.letters)) for r in runs]
    dec = [RunWord((pivot, pivot - 1))] + shift(sub_dec)
    inc = shift(sub_inc) + [RunWord((2 * i - 1, 2 * i)) for i in range(j, 0, -1)]
    return dec, inc


def tableau_from_binary_word(word: BinaryWord) -> StandardTableau:
    """The uncrowded tableau encoded by a binary word with odd blocks of 1s.

    The all-zeros word gives the one-row tableau.  Otherwise index i counts
    down from the top (entry n+1-i): a 0 puts its entry in row one; a block of
    1s starting at i and ending at i+2k puts the entries at i, i+1, i+3, ...,
    i+2k-1 in row two and those at i+2, i+4, ..., i+2k in row one.
    """
    if not word.has_odd_one_runs():
        raise DomainError(f"{word} has an even block of 1s")
    n = word.n
    if all(b == 0 for b in word.bits):
        return StandardTableau((tuple(range(1, n + 1)),))
    row1 = {1}
    row2 = set()
    for i, bit in enumerate(word.bits, start=1):
        if bit == 0:
            row1.add(n + 1 - i)
    for start, length in word.one_runs():
        end = start + length - 1
        row2.add(n + 1 - start)
        for j in range(start + 1, end, 2):
            row2.add(n + 1 - j)
        for j in range(start + 2, end + 1, 2):
            row1.add(n + 1 - j)
    return StandardTableau((tuple(sorted(row1)), tuple(sorted(row2))))


def _window_matches(row2: set[int], z: int, k: int) -> bool:
    required = {z, z - 1} | {z - (2 * m - 1) for m in range(2, k + 1)}
    if not required <= row2:
        return False
    return all(e in required for e in range(z - 2 * k, z + 1) if e in row2)


def binary_word_from_tableau(tableau: StandardTableau) -> BinaryWord:
    """The binary word encoding an uncrowded tableau; inverse of
    tableau_from_binary_word.

    Working down from the largest second-row entry z, set the bit at n+1-z;
    when z-1 also sits in row two, the largest k with the window [z-2k, z]
    meeting row two exactly in {z, z-1, z-3, ..., z-(2k-1)} extends the block
    by 2k further 1s.  Crowded second rows are rejected; uncrowdedness is what
    keeps the block extension well defined.
    """
    if not tableau.has_contiguous_content():
        raise DomainError("tableau entries must be exactly 1..n")
    if not is_uncrowded_tableau(tableau):
        raise CrowdedError(f"second row {sorted(tableau.row2)} is crowded")
    n = tableau.n
    bits = [0] * (n - 1)
    row2 = set(tableau.row2)
    while row2:
        z = max(row2)
        bits[n - z] = 1
        if z - 1 not in row2:
            row2.remove(z)
            continue
        assert _window_matches(row2, z, 1), "uncrowdedness must allow k = 1"
        k = 1
        while _window_matches(row2, z, k + 1):
            k += 1
        for j in range(n + 2 - z, n + 2 * k + 2 - z):
            bits[j - 1] = 1
        row2 -= {z, z - 1} | {z - (2 * m - 1) for m in range(2, k + 1)}
    return BinaryWord(tuple(bits))


def odd_run_words(n: int) -> Iterator[BinaryWord]:
    """All binary words of length n-1 whose blocks of 1s have odd length, in
    lexicographic order."""
    if n < 1:
        raise ValueError("degree must be at least 1")

    def gen(m: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for rest in gen(m - 1):
            yield (0,) + rest
        for block in range(1, m + 1, 2):
            if block == m:
                yield (1,) * block
            else:
                for rest in gen(m - block - 1):
                    yield (1,) * block + (0,) + rest

    for bits in gen(n - 1):
        yield BinaryWord(bits)


class UncrowdedCounts(NamedTuple):
    total: int
    two_row: int
    max_in_row2: int


@lru_cache(maxsize=None)
def _count_words(m: int) -> int:
    if m == 0:
        return 1
    total = _count_words(m - 1)
    for block in range(1, m + 1, 2):
        total += 1 if block == m else _count_words(m - block - 1)
    return total


def _count_starting_with_one(m: int) -> int:
    return sum(
        1 if block == m else _count_words(m - block - 1) for block in range(1, m + 1, 2)
    )


def count_uncrowded(n: int) -> UncrowdedCounts:
    """Counts of uncrowded tableaux of size n: all of them, those with two
    rows, and those whose second row contains n (equivalently, binary words
    starting with 1)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    total = _count_words(n - 1)
    return UncrowdedCounts(total, total - 1, _count_starting_with_one(n - 1))
