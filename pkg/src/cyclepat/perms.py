"""Permutations, standard cycle words, and adjacent-pair pattern counting.

A permutation of size n is a tuple of the values 1..n in one-line notation.
Its cycle form is written under one of four conventions: every cycle is
rotated so that its minimal (or maximal) element comes first, and the cycles
are listed in decreasing or increasing order of those anchor elements.  The
default convention anchors each cycle at its minimum and lists cycles by
decreasing minima, e.g. (4, 7, 6, 1, 3, 8, 5, 2) -> (2 7 5 3 6 8)(1 4).

A pattern is a word over {1, 2, 3} with one adjacent pair glued together.
The name writes a dash at the loose gap, so "2-13" glues the last two
letters and "12-3" glues the first two.  An occurrence in a word w takes the
glued letters at consecutive positions and the remaining letter anywhere on
its side of the dash, all three in the relative order given by the pattern.

Counting a pattern over the flattened cycle word splits occurrences into

* ``between``: the part before the dash sits inside one cycle, the part
  after the dash inside a later-listed cycle, and the glued pair does not
  straddle a cycle boundary;
* ``within``: the whole occurrence sits inside a single cycle.

Occurrences whose glued pair straddles a boundary count as neither.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

Word = tuple[int, ...]
Cycles = tuple[Word, ...]

CONVENTIONS = ("dec-min", "inc-min", "dec-max", "inc-max")
STANDARD_CONVENTION = "dec-min"


def convention_flags(convention: str) -> tuple[bool, bool]:
    """Return (anchor_is_max, order_is_decreasing) for a convention name."""
    parts = convention.split("-")
    if len(parts) == 2 and parts[0] in ("dec", "inc") and parts[1] in ("min", "max"):
        return parts[1] == "max", parts[0] == "dec"
    raise ValueError(
        f"unknown convention {convention!r}; expected one of {', '.join(CONVENTIONS)}"
    )


def validate_permutation(perm: Sequence[int]) -> Word:
    """Return perm as a tuple, checking it is a permutation of 1..n."""
    word = tuple(perm)
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {word!r}")
    return word


def reduce_word(values: Sequence[int]) -> Word:
    """Replace each entry by its rank, giving the permutation of the same shape.

    >>> reduce_word((4, 7, 1))
    (2, 3, 1)
    """
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError(f"cannot reduce a word with repeated entries: {vals!r}")
    order = sorted(vals)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in vals)


def to_cycle_form(perm: Sequence[int], convention: str = STANDARD_CONVENTION) -> Cycles:
    """Cycle form of a permutation under the given anchoring convention.

    >>> to_cycle_form((4, 7, 6, 1, 3, 8, 5, 2))
    ((2, 7, 5, 3, 6, 8), (1, 4))
    """
    word = validate_permutation(perm)
    anchor_max, order_dec = convention_flags(convention)
    n = len(word)
    seen = [False] * (n + 1)
    cycles: list[Word] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        v = word[start - 1]
        while v != start:
            orbit.append(v)
            seen[v] = True
            v = word[v - 1]
        if anchor_max:
            k = orbit.index(max(orbit))
            orbit = orbit[k:] + orbit[:k]
        cycles.append(tuple(orbit))
    cycles.sort(key=lambda c: c[0], reverse=order_dec)
    return tuple(cycles)


def flatten(cycles: Cycles) -> Word:
    """Concatenate the cycle words into a single word."""
    return tuple(v for cycle in cycles for v in cycle)


def unflatten(word: Sequence[int]) -> Cycles:
    """Recover the default-convention cycle form from its flattened word.

    Under the dec-min convention every cycle starts at a fresh left-to-right
    minimum of the flattened word, so the boundaries are forced.

    >>> unflatten((2, 7, 5, 3, 6, 8, 1, 4))
    ((2, 7, 5, 3, 6, 8), (1, 4))
    """
    flat = validate_permutation(word)
    cycles: list[Word] = []
    current: list[int] = []
    running_min: int | None = None
    for v in flat:
        if running_min is None or v < running_min:
            if current:
                cycles.append(tuple(current))
            current = [v]
            running_min = v
        else:
            current.append(v)
    if current:
        cycles.append(tuple(current))
    return tuple(cycles)


def perm_from_cycles(cycles: Cycles, n: int | None = None) -> Word:
    """One-line word of the permutation whose cycles are the given words."""
    elements = [v for cycle in cycles for v in cycle]
    if n is None:
        n = len(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise ValueError(f"cycle words do not cover 1..{n} exactly once: {cycles!r}")
    image = [0] * (n + 1)
    for cycle in cycles:
        for i, v in enumerate(cycle):
            image[v] = cycle[(i + 1) % len(cycle)]
    return tuple(image[1:])


def cycle_count(perm: Sequence[int]) -> int:
    """Number of cycles of a permutation (fixed points included)."""
    return len(to_cycle_form(perm))


# ---------------------------------------------------------------------------
# Patterns


@dataclass(frozen=True, order=True)
class Pattern:
    """A length-3 word over {1,2,3} with one adjacent pair glued.

    ``glued`` is the 0-based index of the first glued letter: 0 glues the
    first two letters ("ab-c"), 1 glues the last two ("a-bc").
    """

    word: tuple[int, int, int]
    glued: int

    def __post_init__(self) -> None:
        if sorted(self.word) != [1, 2, 3]:
            raise ValueError(f"pattern word must use 1, 2, 3 once each: {self.word!r}")
        if self.glued not in (0, 1):
            raise ValueError(f"glued index must be 0 or 1: {self.glued!r}")

    @property
    def name(self) -> str:
        a, b, c = self.word
        return f"{a}{b}-{c}" if self.glued == 0 else f"{a}-{b}{c}"

    def __str__(self) -> str:
        return self.name


def parse_pattern(text: str) -> Pattern:
    """Parse a pattern name such as "2-13" or "12-3"."""
    cleaned = text.strip().replace("–", "-")
    parts = cleaned.split("-")
    if len(parts) == 2 and all(p.isdigit() for p in parts) and len(parts[0]) + len(parts[1]) == 3:
        digits = tuple(int(ch) for ch in parts[0] + parts[1])
        if sorted(digits) == [1, 2, 3] and len(parts[0]) in (1, 2):
            return Pattern(digits, glued=0 if len(parts[0]) == 2 else 1)
    raise ValueError(
        f"unknown pattern {text!r}; valid patterns: {', '.join(PATTERN_NAMES)}"
    )


def _all_patterns() -> tuple[Pattern, ...]:
    words = sorted(itertools.permutations((1, 2, 3)))
    glued_last = [Pattern(w, glued=1) for w in words]
    glued_first = [Pattern(w, glued=0) for w in words]
    return tuple(glued_last + glued_first)


PATTERNS: tuple[Pattern, ...] = _all_patterns()
PATTERN_NAMES: tuple[str, ...] = tuple(p.name for p in PATTERNS)


def kernel_index(pattern: Pattern) -> int:
    """Index of a pattern in the fixed PATTERNS ordering."""
    return PATTERNS.index(pattern)


def reverse_pattern(pattern: Pattern) -> Pattern:
    """Reverse the word and mirror the glued pair, e.g. 2-13 -> 31-2."""
    return Pattern(tuple(reversed(pattern.word)), glued=1 - pattern.glued)


def complement_pattern(pattern: Pattern) -> Pattern:
    """Complement the letters, keeping the glued pair, e.g. 2-13 -> 2-31."""
    return Pattern(tuple(4 - v for v in pattern.word), glued=pattern.glued)


def exchange_blocks(pattern: Pattern) -> Pattern:
    """Swap the one-letter and two-letter blocks around the dash.

    Letter order inside each block is kept: 2-13 -> 13-2, 12-3 -> 3-12.
    """
    a, b, c = pattern.word
    if pattern.glued == 1:
        return Pattern((b, c, a), glued=0)
    return Pattern((c, a, b), glued=1)


def _matches(u: int, v: int, w: int, word: tuple[int, int, int]) -> bool:
    """Whether the distinct values (u, v, w) are ordered like the pattern word."""
    triple = (u, v, w)
    a = 1 + (u > v) + (u > w)
    b = 1 + (v > u) + (v > w)
    c = 1 + (w > u) + (w > v)
    return (a, b, c) == word and len({u, v, w}) == 3


def count_vincular(word: Sequence[int], pattern: Pattern) -> int:
    """Occurrences of the pattern in a word of distinct integers.

    >>> count_vincular((2, 7, 5, 3, 6, 8, 1, 4), parse_pattern("2-13"))
    4
    """
    w = tuple(word)
    n = len(w)
    total = 0
    if pattern.glued == 1:
        for j in range(1, n - 1):
            for i in range(j):
                if _matches(w[i], w[j], w[j + 1], pattern.word):
                    total += 1
    else:
        for i in range(n - 2):
            for j in range(i + 2, n):
                if _matches(w[i], w[i + 1], w[j], pattern.word):
                    total += 1
    return total


class CyclicCount(NamedTuple):
    between: int
    within: int

    @property
    def total(self) -> int:
        return self.between + self.within


def count_cyclic(cycles: Cycles, pattern: Pattern) -> CyclicCount:
    """Between/within occurrence counts over a flattened cycle word.

    >>> count_cyclic(((2, 7, 5, 3, 6, 8), (1, 4)), parse_pattern("2-13"))
    CyclicCount(between=2, within=2)
    """
    flat = flatten(cycles)
    block = tuple(b for b, cycle in enumerate(cycles) for _ in cycle)
    n = len(flat)
    between = within = 0
    if pattern.glued == 1:
        spots = [(i, j, j + 1, j) for j in range(1, n - 1) for i in range(j)]
    else:
        spots = [(i, i + 1, j, i) for i in range(n - 2) for j in range(i + 2, n)]
    for p1, p2, p3, pair_start in spots:
        if not _matches(flat[p1], flat[p2], flat[p3], pattern.word):
            continue
        if block[pair_start] != block[pair_start + 1]:
            continue
        single = p1 if pattern.glued == 1 else p3
        if block[single] == block[pair_start]:
            within += 1
        else:
            between += 1
    return CyclicCount(between, within)


def count_straddling(cycles: Cycles, pattern: Pattern) -> int:
    """Occurrences in the flattened word whose glued pair crosses a boundary."""
    flat = flatten(cycles)
    block = tuple(b for b, cycle in enumerate(cycles) for _ in cycle)
    total = 0
    for occ in _occurrence_positions(flat, pattern):
        pair_start = occ[1] if pattern.glued == 1 else occ[0]
        if block[pair_start] != block[pair_start + 1]:
            total += 1
    return total


def _occurrence_positions(word: Word, pattern: Pattern) -> Iterator[tuple[int, int, int]]:
    n = len(word)
    if pattern.glued == 1:
        for j in range(1, n - 1):
            for i in range(j):
                if _matches(word[i], word[j], word[j + 1], pattern.word):
                    yield (i, j, j + 1)
    else:
        for i in range(n - 2):
            for j in range(i + 2, n):
                if _matches(word[i], word[i + 1], word[j], pattern.word):
                    yield (i, i + 1, j)


def count_pair(cycles: Cycles, between_pattern: Pattern, within_pattern: Pattern) -> tuple[int, int]:
    """(between count of the first pattern, within count of the second)."""
    return (
        count_cyclic(cycles, between_pattern).between,
        count_cyclic(cycles, within_pattern).within,
    )


def complement_reverse(cycles: Cycles) -> Word:
    """Complement every entry, reverse each cycle and the cycle list.

    The result is returned in one-line notation; as a function it is the
    conjugate of the inverse by v -> n+1-v, hence an involution that
    preserves the number of cycles.
    """
    n = sum(len(c) for c in cycles)
    flipped = tuple(
        tuple(n + 1 - v for v in reversed(cycle)) for cycle in reversed(cycles)
    )
    return perm_from_cycles(flipped, n)


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_permutations(n: int) -> Iterator[Word]:
    """All permutations of 1..n in lexicographic order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    return iter(itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class MarkedPermutation:
    """A default-convention cycle form with a subset of cycles marked."""

    cycles: Cycles
    marks: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.cycles) != len(self.marks):
            raise ValueError("one mark flag is needed per cycle")

    @property
    def marked_count(self) -> int:
        return sum(self.marks)

    @property
    def unmarked_count(self) -> int:
        return len(self.marks) - sum(self.marks)


def enumerate_marked(n: int) -> Iterator[MarkedPermutation]:
    """All marked permutations of size n; there are (n+1)! of them."""
    for perm in enumerate_permutations(n):
        cycles = to_cycle_form(perm)
        for marks in itertools.product((False, True), repeat=len(cycles)):
            yield MarkedPermutation(cycles, marks)


# ---------------------------------------------------------------------------
# Text forms


def format_permutation(perm: Sequence[int], compact: bool = False) -> str:
    word = validate_permutation(perm)
    if compact:
        if len(word) > 9:
            raise ValueError("compact digit form only covers sizes up to 9")
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def parse_permutation(text: str) -> Word:
    """Parse "4,7,6,1,3,8,5,2" or the compact digit form "47613852"."""
    cleaned = text.strip()
    if "," in cleaned:
        return validate_permutation(int(p) for p in cleaned.split(","))
    if cleaned.isdigit():
        return validate_permutation(int(ch) for ch in cleaned)
    raise ValueError(f"cannot parse permutation: {text!r}")


def format_cycles(cycles: Cycles) -> str:
    return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in cycles)


def parse_cycles(text: str) -> Cycles:
    """Parse a cycle form such as "(2 7 5 3 6 8)(1 4)"."""
    cleaned = text.strip()
    if not (cleaned.startswith("(") and cleaned.endswith(")")):
        raise ValueError(f"cannot parse cycle form: {text!r}")
    cycles = []
    for chunk in cleaned[1:-1].split(")("):
        entries = chunk.replace(",", " ").split()
        if not entries or not all(e.isdigit() for e in entries):
            raise ValueError(f"cannot parse cycle form: {text!r}")
        cycles.append(tuple(int(e) for e in entries))
    elements = [v for c in cycles for v in c]
    if sorted(elements) != list(range(1, len(elements) + 1)):
        raise ValueError(f"cycle form must cover 1..n exactly once: {text!r}")
    return tuple(cycles)


def format_marked(marked: MarkedPermutation) -> str:
    return "".join(
        ("*" if flag else "") + "(" + " ".join(str(v) for v in cycle) + ")"
        for cycle, flag in zip(marked.cycles, marked.marks)
    )


def parse_marked(text: str) -> MarkedPermutation:
    """Parse a marked cycle form such as "*(2 3)(1)"."""
    cleaned = text.strip()
    cycles: list[Word] = []
    marks: list[bool] = []
    i = 0
    while i < len(cleaned):
        flag = cleaned[i] == "*"
        if flag:
            i += 1
        if i >= len(cleaned) or cleaned[i] != "(":
            raise ValueError(f"cannot parse marked cycle form: {text!r}")
        end = cleaned.find(")", i)
        if end < 0:
            raise ValueError(f"cannot parse marked cycle form: {text!r}")
        entries = cleaned[i + 1 : end].replace(",", " ").split()
        if not entries or not all(e.isdigit() for e in entries):
            raise ValueError(f"cannot parse marked cycle form: {text!r}")
        cycles.append(tuple(int(e) for e in entries))
        marks.append(flag)
        i = end + 1
    elements = [v for c in cycles for v in c]
    if sorted(elements) != list(range(1, len(elements) + 1)):
        raise ValueError(f"marked cycle form must cover 1..n exactly once: {text!r}")
    return MarkedPermutation(tuple(cycles), tuple(marks))
