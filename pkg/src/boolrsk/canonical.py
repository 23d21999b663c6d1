"""The canonical reduced word of a boolean permutation.

Every boolean permutation has a distinguished optimal run word: push each
decreasing run as far left as commutations allow and each increasing run as
far right, working upward from the smallest letter.  The same word falls out
of a left-to-right scan of the heap.  Its run endpoints determine the second
rows of both RSK tableaux, which is what makes it worth singling out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotBooleanError
from .words import Heap, RunWord, Word, evaluate, is_reduced


@dataclass(frozen=True)
class CanonicalWord:
    """A reduced word stored as its run partition: decreasing runs (smallest
    letters first), then increasing runs (largest letters first).

    The stored partition is authoritative; consumers read run endpoints from
    it rather than re-decomposing the flat word.
    """

    dec_runs: tuple[RunWord, ...]
    inc_runs: tuple[RunWord, ...]
    n: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for run in self.dec_runs + self.inc_runs:
            for a in run.letters:
                if not 1 <= a <= self.n - 1:
                    raise ValueError(f"letter {a} out of range 1..{self.n - 1}")
                if a in seen:
                    raise ValueError(f"letter {a} repeated across runs")
                seen.add(a)
        for run in self.dec_runs:
            if run.direction == "increasing":
                raise ValueError(f"increasing run {run.letters} in the decreasing list")
        for run in self.inc_runs:
            if run.direction != "increasing":
                raise ValueError(f"run {run.letters} in the increasing list must ascend")
        for left, right in zip(self.dec_runs, self.dec_runs[1:]):
            if max(left.letters) > min(right.letters):
                raise ValueError("decreasing runs must be ordered smaller letters first")
        for left, right in zip(self.inc_runs, self.inc_runs[1:]):
            if min(left.letters) < max(right.letters):
                raise ValueError("increasing runs must be ordered larger letters first")

    @property
    def runs(self) -> tuple[RunWord, ...]:
        return self.dec_runs + self.inc_runs

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(a for run in self.runs for a in run.letters)

    @property
    def word(self) -> Word:
        return Word(self.letters, self.n)

    def __len__(self) -> int:
        return len(self.letters)


def canonical_from_heap(heap: Heap) -> CanonicalWord:
    """Build the canonical word by scanning the heap left to right.

    Take the smallest element a.  If a+1 is absent, a is a singleton
    decreasing run.  If a+1 lies below a, walk right to the first minimal
    element b and append the decreasing run b..a.  If a+1 lies above a, walk
    right to the first maximal element b and prepend the increasing run a..b.
    Remove the consumed interval and repeat.
    """
    remaining = set(heap.elements)
    dec: list[RunWord] = []
    inc: list[RunWord] = []
    while remaining:
        a = min(remaining)
        if a + 1 not in remaining:
            dec.append(RunWord((a,)))
            remaining.remove(a)
            continue
        if heap.precedes(a + 1, a):
            b = a + 1
            while b + 1 in remaining and heap.precedes(b + 1, b):
                b += 1
            dec.append(RunWord(tuple(range(b, a - 1, -1))))
        else:
            b = a + 1
            while b + 1 in remaining and heap.precedes(b, b + 1):
                b += 1
            inc.insert(0, RunWord(tuple(range(a, b + 1))))
        remaining -= set(range(a, b + 1))
    return CanonicalWord(tuple(dec), tuple(inc), heap.n)


def canonical_from_word(word: Word) -> CanonicalWord:
    """Build the canonical word by peeling runs off an arbitrary reduced word.

    Take the smallest letter a.  If a+1 is absent, peel the singleton a to the
    left.  If a+1 sits left of a, peel the longest decreasing run b..a (each
    letter left of its predecessor) to the left.  If a+1 sits right of a, peel
    the longest increasing run a..b to the right.  Recurse on what remains.
    The result does not depend on which reduced word was supplied.
    """
    if not is_reduced(word):
        raise DomainError(f"word {word.letters} is not reduced")
    if len(set(word.letters)) != len(word.letters):
        # a reduced word with a repeated letter cannot come from a boolean permutation
        witness = evaluate(word).boolean_witness()
        assert witness is not None
        raise NotBooleanError(*witness)
    letters = list(word.letters)
    dec: list[RunWord] = []
    inc: list[RunWord] = []
    while letters:
        position = {a: i for i, a in enumerate(letters)}
        a = min(letters)
        if a + 1 not in position:
            dec.append(RunWord((a,)))
            b = a
        elif position[a + 1] < position[a]:
            b = a + 1
            while b + 1 in position and position[b + 1] < position[b]:
                b += 1
            dec.append(RunWord(tuple(range(b, a - 1, -1))))
        else:
            b = a + 1
            while b + 1 in position and position[b + 1] > position[b]:
                b += 1
            inc.insert(0, RunWord(tuple(range(a, b + 1))))
        consumed = set(range(a, b + 1))
        letters = [x for x in letters if x not in consumed]
    return CanonicalWord(tuple(dec), tuple(inc), word.n)


def leftmost_letters(canonical: CanonicalWord) -> frozenset[int]:
    """First letters of the runs, in the assembled word's reading order."""
    return frozenset(run.first for run in canonical.runs)


def rightmost_letters(canonical: CanonicalWord) -> frozenset[int]:
    """Last letters of the runs, in the assembled word's reading order."""
    return frozenset(run.last for run in canonical.runs)
