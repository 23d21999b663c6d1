"""Permutations in one-line notation and the statistics this library lives on.

Everything is 1-based, matching the usual combinatorics conventions:
``Permutation((5, 1, 3, 4, 2))`` sends 1 to 5, 2 to 1, and so on.  Values are
immutable after construction and all operations are pure, so instances are
safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import NotBooleanError

_PATTERN_321 = (3, 2, 1)
_PATTERN_3412 = (3, 4, 1, 2)


@dataclass(frozen=True)
class Subsequence:
    """Strictly increasing 1-based positions together with the values they carry."""

    positions: tuple[int, ...]
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> w = Permutation((5, 1, 3, 4, 2))
    >>> w(1), w.position_of(5)
    (5, 1)
    >>> w.length()
    6
    >>> str(w)
    '51342'
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        n = len(self.entries)
        if n == 0:
            raise ValueError("one-line notation must not be empty")
        seen = [False] * (n + 1)
        for v in self.entries:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"duplicate value {v}")
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        """Apply the permutation to a position: w(i)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")
        return self.entries[i - 1]

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(self.entries, start=1):
            inv[v - 1] = i
        return tuple(inv)

    def position_of(self, value: int) -> int:
        """The position holding ``value``, i.e. the inverse permutation applied to it."""
        if not 1 <= value <= self.n:
            raise ValueError(f"value {value} out of range 1..{self.n}")
        return self._positions[value - 1]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.entries, start=1))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (w * u)(i) = w(u(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"cannot compose degrees {self.n} and {other.n}")
        return Permutation(tuple(self.entries[v - 1] for v in other.entries))

    def inverse(self) -> "Permutation":
        """The inverse permutation: u with u(w(i)) = i.

        >>> Permutation((3, 1, 4, 2)).inverse()
        Permutation(entries=(2, 4, 1, 3))
        """
        return Permutation(self._positions)

    def length(self) -> int:
        """Coxeter length: the number of inversions (i < j with w(i) > w(j))."""
        w = self.entries
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def support(self) -> frozenset[int]:
        """The set of letters appearing in every reduced word for w.

        Computed by the prefix-maximum criterion: letter i is in the support
        exactly when max(w(1), ..., w(i)) > i, so no word enumeration is needed.

        >>> sorted(Permutation((5, 1, 3, 4, 2)).support())
        [1, 2, 3, 4]
        """
        out = []
        running = 0
        for i, v in enumerate(self.entries[:-1], start=1):
            if v > running:
                running = v
            if running > i:
                out.append(i)
        return frozenset(out)

    def _pattern_witness(self, pattern: tuple[int, ...]) -> tuple[int, ...] | None:
        """Lexicographically least positions forming the pattern, or None."""
        w = self.entries
        n, k = self.n, len(pattern)

        def extend(chosen: list[int]) -> tuple[int, ...] | None:
            d = len(chosen)
            if d == k:
                return tuple(p + 1 for p in chosen)
            start = chosen[-1] + 1 if chosen else 0
            for p in range(start, n - (k - d) + 1):
                v = w[p]
                if all((v > w[q]) == (pattern[d] > pattern[e]) for e, q in enumerate(chosen)):
                    found = extend(chosen + [p])
                    if found is not None:
                        return found
            return None

        return extend([])

    def contains_pattern(self, sigma: "Permutation") -> bool:
        """True when some subsequence of w is in the same relative order as sigma.

        >>> w = Permutation((3, 1, 4, 5, 9, 2, 6, 8, 7))
        >>> w.contains_pattern(Permutation((1, 4, 2, 3)))
        True
        >>> w.contains_pattern(Permutation((3, 2, 4, 1)))
        False
        """
        if sigma.n > self.n:
            raise ValueError(f"pattern degree {sigma.n} exceeds permutation degree {self.n}")
        return self._pattern_witness(sigma.entries) is not None

    def _contains_321(self) -> bool:
        # some value with a larger one on its left and a smaller one on its right
        w = self.entries
        n = self.n
        suffix_min = [0] * (n + 1)
        suffix_min[n] = n + 1
        for i in range(n - 1, -1, -1):
            suffix_min[i] = min(suffix_min[i + 1], w[i])
        prefix_max = 0
        for i in range(n):
            if prefix_max > w[i] > suffix_min[i + 1]:
                return True
            if w[i] > prefix_max:
                prefix_max = w[i]
        return False

    def is_fully_commutative(self) -> bool:
        """True when w avoids 321; its reduced words then form one commutation class."""
        return not self._contains_321()

    def is_boolean(self) -> bool:
        """True when w avoids both 321 and 3412, i.e. some (hence every) reduced
        word for w uses all distinct letters."""
        if self._contains_321():
            return False
        return self._pattern_witness(_PATTERN_3412) is None

    def boolean_witness(self) -> tuple[str, tuple[int, ...]] | None:
        """A (pattern, positions) pair showing why w is not boolean, or None."""
        positions = self._pattern_witness(_PATTERN_321)
        if positions is not None:
            return ("321", positions)
        positions = self._pattern_witness(_PATTERN_3412)
        if positions is not None:
            return ("3412", positions)
        return None

    def require_boolean(self) -> None:
        witness = self.boolean_witness()
        if witness is not None:
            raise NotBooleanError(*witness)

    def apply_word(self, letters: Sequence[int], side: str) -> "Permutation":
        """Multiply by the product of adjacent transpositions named by ``letters``.

        ``side="right"`` forms w * s, ``side="left"`` forms s * w, with the
        letters composed left to right in both cases.

        >>> str(Permutation((3, 4, 2, 5, 1, 6)).apply_word((4, 3, 2, 1), "right"))
        '134256'
        """
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        product = _product_of_letters(letters, self.n)
        return self * product if side == "right" else product * self

    def lex_least_lis(self) -> Subsequence:
        """The longest increasing subsequence whose value sequence is
        lexicographically least among all longest increasing subsequences.

        >>> Permutation((5, 1, 6, 4, 2, 7, 3, 8)).lex_least_lis().values
        (1, 2, 3, 8)
        """
        w = self.entries
        n = self.n
        # longest[i]: length of the longest increasing subsequence starting at i
        longest = [1] * n
        for i in range(n - 2, -1, -1):
            best = 0
            for j in range(i + 1, n):
                if w[j] > w[i] and longest[j] > best:
                    best = longest[j]
            longest[i] = best + 1
        need = max(longest)
        positions: list[int] = []
        floor_val = 0
        start = 0
        while need > 0:
            pick = min(
                (p for p in range(start, n) if w[p] > floor_val and longest[p] == need),
                key=lambda p: w[p],
            )
            positions.append(pick)
            floor_val = w[pick]
            start = pick + 1
            need -= 1
        return Subsequence(tuple(p + 1 for p in positions), tuple(w[p] for p in positions))

    def __str__(self) -> str:
        return "".join(str(v) if v <= 9 else f"({v})" for v in self.entries)


def _product_of_letters(letters: Sequence[int], n: int) -> Permutation:
    """The permutation s_{i_1} ... s_{i_k} for the given letter sequence."""
    entries = list(range(1, n + 1))
    for a in letters:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range 1..{n - 1}")
        entries[a - 1], entries[a] = entries[a], entries[a - 1]
    return Permutation(tuple(entries))


def from_one_line(values: Sequence[int]) -> Permutation:
    """Build a permutation from one-line notation, rejecting malformed input."""
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n, in lexicographic order of one-line notation."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


def boolean_permutations(n: int) -> Iterator[Permutation]:
    """The boolean elements of S_n (those avoiding 321 and 3412)."""
    return (w for w in all_permutations(n) if w.is_boolean())
