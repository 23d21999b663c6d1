"""Parsing and display: permutations, words, tableaux, heaps, binary words.

Display mirrors the conventions used throughout the literature: one-line
notation concatenated with multi-digit values parenthesized (314627(10)589),
words in brackets with runs separated by a middle dot ([21·98·567·34]).
Parsers accept plain comma- or space-separated integers.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ParseError
from .permutation import Permutation
from .rsk import StandardTableau
from .uncrowded import BinaryWord
from .words import Heap, RunWord


def _tokens(text: str) -> list[str]:
    return text.replace(",", " ").split()


def parse_permutation(text: str) -> Permutation:
    values = parse_int_list(text)
    if not values:
        raise ParseError("empty permutation")
    n = len(values)
    seen: dict[int, int] = {}
    for pos, v in enumerate(values, start=1):
        if not 1 <= v <= n:
            raise ParseError(f"value {v} out of range 1..{n}", position=pos)
        if v in seen:
            raise ParseError(f"duplicate value {v}", position=pos)
        seen[v] = pos
    return Permutation(tuple(values))


def parse_int_list(text: str) -> list[int]:
    values = []
    for pos, token in enumerate(_tokens(text), start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise ParseError(f"not an integer: {token!r}", position=pos) from None
    return values


def parse_binary_word(text: str) -> BinaryWord:
    text = text.strip()
    for pos, ch in enumerate(text, start=1):
        if ch not in "01":
            raise ParseError(f"not a binary digit: {ch!r}", position=pos)
    return BinaryWord(tuple(int(ch) for ch in text))


def parse_tableau(text: str) -> StandardTableau:
    """Rows either one per line or separated by '/' on a single line."""
    raw = text.replace("/", "\n")
    rows = []
    for line in raw.splitlines():
        if line.strip():
            rows.append(tuple(parse_int_list(line)))
    if not rows:
        raise ParseError("empty tableau")
    try:
        return StandardTableau(tuple(rows))
    except ValueError as exc:
        raise ParseError(f"not a standard tableau: {exc}") from None


def format_letter(a: int) -> str:
    return str(a) if a <= 9 else f"({a})"


def format_flat_word(letters: Sequence[int]) -> str:
    return "[" + "".join(format_letter(a) for a in letters) + "]"


def format_run_word(runs: Iterable[RunWord]) -> str:
    pieces = ["".join(format_letter(a) for a in run.letters) for run in runs]
    return "[" + "·".join(pieces) + "]"


def format_int_set(values: Iterable[int]) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def format_tableau(tableau: StandardTableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in tableau.rows)


def space_separated(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def heap_cover_lines(heap: Heap) -> list[str]:
    """One line per adjacent pair in the heap: 'i < i+1' when i comes first."""
    lines = []
    for i in sorted(heap.elements):
        if i + 1 in heap.elements:
            lines.append(f"{i} < {i + 1}" if heap.precedes(i, i + 1) else f"{i} > {i + 1}")
    return lines


def heap_sketch(heap: Heap) -> str:
    """A small ASCII fence: elements placed left to right, raised or lowered
    according to the cover orientations, slashes between neighbours."""
    elements = sorted(heap.elements)
    if not elements:
        return "(empty heap)"
    height: dict[int, int] = {}
    for idx, e in enumerate(elements):
        if idx == 0 or elements[idx - 1] != e - 1:
            height[e] = 0
        elif heap.precedes(e - 1, e):
            height[e] = height[e - 1] + 1
        else:
            height[e] = height[e - 1] - 1
    width = max(len(str(e)) for e in elements)
    step = width + 2
    column = {e: i * step for i, e in enumerate(elements)}
    top = max(height.values())
    bottom = min(height.values())
    grid = [[" "] * (column[elements[-1]] + width) for _ in range(2 * (top - bottom) + 1)]
    for e in elements:
        row = 2 * (top - height[e])
        for k, ch in enumerate(str(e)):
            grid[row][column[e] + k] = ch
    for e in elements:
        if e + 1 in height and abs(height[e + 1] - height[e]) == 1:
            row = 2 * (top - max(height[e], height[e + 1])) + 1
            col = column[e] + width
            grid[row][col] = "/" if height[e + 1] > height[e] else "\\"
    return "\n".join("".join(line).rstrip() for line in grid)
