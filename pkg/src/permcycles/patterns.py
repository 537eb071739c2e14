"""Pattern syntax and the occurrence matcher.

One representation covers classical, dashed (vincular) and partially
ordered patterns.  Pattern text is a word of digits, each optionally
followed by a prime, with optional dashes between letters:

* ``321``      consecutive pattern (letters must be adjacent),
* ``3-21``     the last two letters must be adjacent,
* ``2-1-2'``   fully dashed, and the two 2s are incomparable.

Comparability rule: two letters are comparable exactly when their digits
differ, and then they compare as the digits do.  So in ``121'`` the
letters 1 and 1' are incomparable while both are below 2; an occurrence
is any three adjacent values forming a peak.

Occurrences are counted in a word together with a set of cycle
boundaries.  An adjacency constraint is satisfied only by positions that
are consecutive *and* not separated by a boundary; with no boundaries
this is the classical index-form count, with the boundaries of a
flattened cycle form it is the cyclic count.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Sequence

from .exceptions import ParseError
from .permutations import CycleForm, Permutation, flatten, standard_cycle_form

PRIME_CHARS = "'′"
DASH_CHARS = "-–"


@dataclass(frozen=True)
class Pattern:
    """Ordered slots (digit, primed) plus the set of adjacent gaps.

    ``adjacency`` holds the 1-based gap indices j where slot j and slot
    j+1 must be adjacent in the word (no dash was written).
    """

    slots: tuple[tuple[int, bool], ...]
    adjacency: frozenset[int]

    def __post_init__(self):
        if not self.slots:
            raise ParseError("empty pattern")
        for digit, _ in self.slots:
            if digit < 1:
                raise ParseError("pattern digits must be positive")
        if len(set(self.slots)) != len(self.slots):
            raise ParseError("repeated pattern letter; at most one primed copy per digit")
        by_digit: dict[int, int] = {}
        for digit, _ in self.slots:
            by_digit[digit] = by_digit.get(digit, 0) + 1
        if any(count > 2 for count in by_digit.values()):
            raise ParseError("at most one primed duplicate per digit")
        bad = [j for j in self.adjacency if not 1 <= j < len(self.slots)]
        if bad:
            raise ParseError(f"adjacency gaps out of range: {bad}")

    @property
    def length(self) -> int:
        return len(self.slots)

    def text(self) -> str:
        parts = []
        for i, (digit, primed) in enumerate(self.slots):
            parts.append(str(digit) + ("'" if primed else ""))
            if i + 1 < len(self.slots) and (i + 1) not in self.adjacency:
                parts.append("-")
        return "".join(parts)

    def __str__(self) -> str:
        return self.text()


class BoundaryWord(NamedTuple):
    """A one-line word plus the 0-based gaps where a cycle boundary sits."""

    word: tuple[int, ...]
    boundary_after: frozenset[int]


def parse_pattern(text: str) -> Pattern:
    text = text.strip()
    if not text:
        raise ParseError("empty pattern")
    slots: list[tuple[int, bool]] = []
    adjacency: set[int] = set()
    pending_dash = False
    for ch in text:
        if ch.isdigit():
            if ch == "0":
                raise ParseError("pattern digit 0 is not allowed")
            if slots and not pending_dash:
                adjacency.add(len(slots))
            slots.append((int(ch), False))
            pending_dash = False
        elif ch in PRIME_CHARS:
            if not slots or pending_dash:
                raise ParseError(f"misplaced prime in {text!r}")
            digit, primed = slots[-1]
            if primed:
                raise ParseError(f"double prime in {text!r}")
            slots[-1] = (digit, True)
        elif ch in DASH_CHARS:
            if not slots or pending_dash:
                raise ParseError(f"misplaced dash in {text!r}")
            pending_dash = True
        elif ch.isspace():
            continue
        else:
            raise ParseError(f"invalid character {ch!r} in pattern {text!r}")
    if pending_dash:
        raise ParseError(f"trailing dash in {text!r}")
    return Pattern(tuple(slots), frozenset(adjacency))


class _Compiled(NamedTuple):
    length: int
    block_lengths: tuple[int, ...]
    block_offsets: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]  # slot index pairs, value[a] < value[b] required
    singletons: bool


@functools.lru_cache(maxsize=None)
def _compile(pattern: Pattern) -> _Compiled:
    k = pattern.length
    lengths = [1]
    for gap in range(1, k):
        if gap in pattern.adjacency:
            lengths[-1] += 1
        else:
            lengths.append(1)
    offsets = []
    shrink = 0
    for length in lengths:
        offsets.append(shrink)
        shrink += length - 1
    pairs = []
    for a in range(k):
        for b in range(a + 1, k):
            da, db = pattern.slots[a][0], pattern.slots[b][0]
            if da < db:
                pairs.append((a, b))
            elif da > db:
                pairs.append((b, a))
    return _Compiled(k, tuple(lengths), tuple(offsets), tuple(pairs), all(l == 1 for l in lengths))


def count_occurrences(
    word: Sequence[int] | BoundaryWord,
    pattern: Pattern,
    boundary_after: frozenset[int] | None = None,
) -> int:
    """Number of occurrences of ``pattern`` in ``word``.

    The matcher is exhaustive over index tuples: adjacent slot blocks
    slide as units, every remaining slot ranges freely, and each
    candidate tuple is checked against the pattern's comparability pairs.
    """
    if isinstance(word, BoundaryWord):
        if boundary_after is None:
            boundary_after = word.boundary_after
        word = word.word
    elif isinstance(word, Permutation):
        word = word.images
    else:
        word = tuple(word)
    bounds = boundary_after or frozenset()
    comp = _compile(pattern)
    n = len(word)
    k = comp.length
    if k > n:
        return 0
    count = 0
    pairs = comp.pairs
    if comp.singletons:
        for idx in combinations(range(n), k):
            for a, b in pairs:
                if word[idx[a]] >= word[idx[b]]:
                    break
            else:
                count += 1
        return count
    lengths = comp.block_lengths
    offsets = comp.block_offsets
    free = n - (k - len(lengths))
    for starts in combinations(range(free), len(lengths)):
        idx: list[int] = []
        ok = True
        for t, offset, length in zip(starts, offsets, lengths):
            s = t + offset
            if length > 1:
                for gap in range(s, s + length - 1):
                    if gap in bounds:
                        ok = False
                        break
                if not ok:
                    break
            idx.extend(range(s, s + length))
        if not ok:
            continue
        for a, b in pairs:
            if word[idx[a]] >= word[idx[b]]:
                break
        else:
            count += 1
    return count


def boundary_word(cf: CycleForm) -> BoundaryWord:
    """The flattened word of a cycle form with boundaries at cycle ends."""
    word = flatten(cf).images
    bounds = []
    position = 0
    for cycle in cf.cycles[:-1]:
        position += len(cycle)
        bounds.append(position - 1)
    return BoundaryWord(word, frozenset(bounds))


def count_cyclic_occurrences(cf: CycleForm | Permutation, pattern: Pattern) -> int:
    """Occurrences in the flattened word, adjacency broken at cycle boundaries."""
    if isinstance(cf, Permutation):
        cf = standard_cycle_form(cf)
    bw = boundary_word(cf)
    return count_occurrences(bw.word, pattern, bw.boundary_after)


def avoids(cf: CycleForm | Permutation, pattern: Pattern) -> bool:
    return count_cyclic_occurrences(cf, pattern) == 0
