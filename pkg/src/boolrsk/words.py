"""Words in the adjacent-transposition generators, their runs, and heaps.

A word is a sequence of letters in 1..n-1; letter i names the transposition
swapping i and i+1.  For a boolean permutation every reduced word uses each
support letter exactly once, so the relative order of the letters i and i+1
is the same in all of its reduced words.  That order is recorded here as a
partial order (a "heap") on the support whose linear extensions are exactly
the reduced words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DegreeLimitError, DomainError
from .permutation import Permutation, _product_of_letters, identity

# all_reduced_words / commutation_class explode factorially past desk scale
ENUMERATION_DEGREE_LIMIT = 9


@dataclass(frozen=True)
class Word:
    """A letter sequence with an ambient degree ``n``; letters lie in 1..n-1."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError("degree must be at least 1")
        for a in self.letters:
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"letter {a} out of range 1..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class RunWord:
    """A nonempty run: consecutive integers stepping by +1 or by -1 throughout.

    >>> RunWord((3, 4, 5, 6)).direction
    'increasing'
    >>> RunWord((8, 7)).direction
    'decreasing'
    """

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("run must be nonempty")
        steps = {b - a for a, b in zip(self.letters, self.letters[1:])}
        if steps and steps != {1} and steps != {-1}:
            raise ValueError(f"not a run: {self.letters}")

    @property
    def direction(self) -> str:
        if len(self.letters) == 1:
            return "singleton"
        return "increasing" if self.letters[1] > self.letters[0] else "decreasing"

    @property
    def first(self) -> int:
        return self.letters[0]

    @property
    def last(self) -> int:
        return self.letters[-1]

    def reversed(self) -> "RunWord":
        return RunWord(self.letters[::-1])

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Heap:
    """The order forced between consecutive letters in reduced words of a
    boolean permutation.

    A cover (x, y) means x appears before y in every reduced word; covers only
    relate consecutive integers, so the order is a fence on a path.
    """

    elements: frozenset[int]
    covers: frozenset[tuple[int, int]]
    n: int

    def __post_init__(self) -> None:
        for x, y in self.covers:
            if abs(x - y) != 1:
                raise ValueError(f"cover ({x}, {y}) does not relate consecutive letters")
            if x not in self.elements or y not in self.elements:
                raise ValueError(f"cover ({x}, {y}) outside the element set")
            if (y, x) in self.covers:
                raise ValueError(f"both orientations present for {{{x}, {y}}}")
        for e in self.elements:
            if not 1 <= e <= self.n - 1:
                raise ValueError(f"element {e} out of range 1..{self.n - 1}")

    def precedes(self, x: int, y: int) -> bool:
        """True when x is forced before y (consecutive letters only)."""
        return (x, y) in self.covers


def evaluate(word: Word) -> Permutation:
    """The permutation equal to the product of the word's transpositions.

    >>> str(evaluate(Word((4, 2, 3, 2, 4, 1), 5)))
    '51342'
    """
    return _product_of_letters(word.letters, word.n)


def is_reduced(word: Word) -> bool:
    """True when the word has minimum length among words for its permutation."""
    return len(word) == evaluate(word).length()


def run_decomposition(word: Word) -> tuple[RunWord, ...]:
    """Greedy left-to-right split into maximal runs.

    Since every suffix of a run is again a run, greedy maximal extension also
    achieves the minimum possible number of pieces.  A one-letter prefix
    extends in whichever direction the next letter permits.

    >>> [r.letters for r in run_decomposition(Word((2, 1, 8, 7, 3, 4, 5, 6), 9))]
    [(2, 1), (8, 7), (3, 4, 5, 6)]
    """
    letters = word.letters
    runs = []
    i = 0
    while i < len(letters):
        j = i + 1
        if j < len(letters) and abs(letters[j] - letters[i]) == 1:
            step = letters[j] - letters[i]
            j += 1
            while j < len(letters) and letters[j] - letters[j - 1] == step:
                j += 1
        runs.append(RunWord(letters[i:j]))
        i = j
    return tuple(runs)


def reduced_word_of(w: Permutation) -> Word:
    """One reduced word for w, found by repeatedly undoing the leftmost descent."""
    entries = list(w.entries)
    picked = []
    while True:
        i = next((k for k in range(len(entries) - 1) if entries[k] > entries[k + 1]), None)
        if i is None:
            break
        picked.append(i + 1)
        entries[i], entries[i + 1] = entries[i + 1], entries[i]
    return Word(tuple(reversed(picked)), w.n)


def heap_of(w: Permutation) -> Heap:
    """The heap of a boolean permutation.

    Rejects non-boolean input; for boolean w one reduced word determines the
    orientation of every consecutive pair.
    """
    w.require_boolean()
    word = reduced_word_of(w).letters
    position = {letter: i for i, letter in enumerate(word)}
    support = frozenset(word)
    covers = set()
    for i in sorted(support):
        if i + 1 in support:
            if position[i] < position[i + 1]:
                covers.add((i, i + 1))
            else:
                covers.add((i + 1, i))
    return Heap(support, frozenset(covers), w.n)


def linear_extensions(heap: Heap) -> Iterator[Word]:
    """All linear extensions of the heap, in lexicographic order of letters.

    For the heap of a boolean permutation these are exactly its reduced words.
    """
    elements = sorted(heap.elements)
    below = {e: {x for (x, y) in heap.covers if y == e} for e in elements}
    placed: set[int] = set()
    sequence: list[int] = []

    def emit() -> Iterator[Word]:
        if len(sequence) == len(elements):
            yield Word(tuple(sequence), heap.n)
            return
        for e in elements:
            if e not in placed and below[e] <= placed:
                placed.add(e)
                sequence.append(e)
                yield from emit()
                sequence.pop()
                placed.remove(e)

    return emit()


def _word_moves(letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Words one commutation or braid move away."""
    for i in range(len(letters) - 1):
        a, b = letters[i], letters[i + 1]
        if abs(a - b) > 1:
            yield letters[:i] + (b, a) + letters[i + 2 :]
    for i in range(len(letters) - 2):
        a, b, c = letters[i], letters[i + 1], letters[i + 2]
        if a == c and abs(a - b) == 1:
            yield letters[:i] + (b, a, b) + letters[i + 3 :]


def all_reduced_words(w: Permutation) -> list[Word]:
    """Every reduced word for w, sorted lexicographically.

    Boolean permutations go through their heap; anything else is closed under
    commutation and braid moves starting from one reduced word.  Guarded to
    small degrees, since |R(w)| grows factorially.
    """
    if w.n > ENUMERATION_DEGREE_LIMIT:
        raise DegreeLimitError(
            f"degree {w.n} exceeds the enumeration limit {ENUMERATION_DEGREE_LIMIT}"
        )
    if w.is_boolean():
        return list(linear_extensions(heap_of(w)))
    seen = {reduced_word_of(w).letters}
    frontier = list(seen)
    while frontier:
        fresh = []
        for letters in frontier:
            for other in _word_moves(letters):
                if other not in seen:
                    seen.add(other)
                    fresh.append(other)
        frontier = fresh
    return [Word(letters, w.n) for letters in sorted(seen)]


def commutation_class(word: Word) -> list[Word]:
    """The closure of a reduced word under swaps of adjacent commuting letters,
    sorted lexicographically."""
    if word.n > ENUMERATION_DEGREE_LIMIT:
        raise DegreeLimitError(
            f"degree {word.n} exceeds the enumeration limit {ENUMERATION_DEGREE_LIMIT}"
        )
    if not is_reduced(word):
        raise DomainError(f"word {word.letters} is not reduced")
    seen = {word.letters}
    frontier = [word.letters]
    while frontier:
        fresh = []
        for letters in frontier:
            for i in range(len(letters) - 1):
                a, b = letters[i], letters[i + 1]
                if abs(a - b) > 1:
                    other = letters[:i] + (b, a) + letters[i + 2 :]
                    if other not in seen:
                        seen.add(other)
                        fresh.append(other)
        frontier = fresh
    return [Word(letters, word.n) for letters in sorted(seen)]
