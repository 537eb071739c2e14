"""Permutations of [n] = {1, ..., n}, standard cycle form, and arc diagrams.

A permutation is stored in one-line form as the tuple of images
(pi(1), ..., pi(n)).  Its standard cycle form writes each cycle starting
with its smallest element and orders the cycles by strictly decreasing
minima, e.g. 47613852 = (275368)(14).

Two classical bijections connect the forms.  ``flatten`` erases the
parentheses of a standard cycle form, giving a one-line word;
``unflatten`` recovers the cycles by cutting the word before each
left-to-right minimum, so the two are mutually inverse.  ``cycle_tail``
maps a single k-cycle to the order reduction of everything after its
leading minimum, a bijection between k-cycles and permutations of [k-1].

The arc diagram of a cycle form draws the values 1..n on a line with an
arc from each cycle element to its successor inside the cycle.  Each node
then carries a left and a right shape describing the arcs incident on
that side; these shapes drive the lattice-path map in ``paths``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exceptions import CapExceeded, ParseError

DEFAULT_CAP = 10

# Arc-diagram shapes: direction of the arrowheads drawn on one side of a node.
SHAPE_EMPTY = "empty"
SHAPE_RIGHT = "right"  # arc drawn pointing right on this side
SHAPE_LEFT = "left"  # arc drawn pointing left on this side
SHAPE_BOTH = "both"

_SHAPE_GLYPHS = {SHAPE_EMPTY: ".", SHAPE_RIGHT: ">", SHAPE_LEFT: "<", SHAPE_BOTH: "="}

# Shape pairs that cannot occur in any valid arc diagram.
FORBIDDEN_SHAPE_PAIRS = frozenset(
    {
        (SHAPE_RIGHT, SHAPE_LEFT),
        (SHAPE_RIGHT, SHAPE_BOTH),
        (SHAPE_LEFT, SHAPE_EMPTY),
        (SHAPE_LEFT, SHAPE_RIGHT),
        (SHAPE_LEFT, SHAPE_BOTH),
        (SHAPE_BOTH, SHAPE_RIGHT),
        (SHAPE_BOTH, SHAPE_LEFT),
        (SHAPE_BOTH, SHAPE_BOTH),
    }
)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line form: images[i-1] = pi(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ParseError(f"not a permutation of [{n}]: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def one_line(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    def __str__(self) -> str:
        return self.one_line() if self.images else "(empty)"


@dataclass(frozen=True)
class CycleForm:
    """A permutation in standard cycle form.

    Invariants: every cycle starts with its minimum, minima strictly
    decrease across the list, and the cycles partition {1, ..., n}.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        previous_min = None
        for cycle in self.cycles:
            if not cycle:
                raise ParseError("empty cycle")
            if cycle[0] != min(cycle):
                raise ParseError(f"cycle does not start with its minimum: {cycle}")
            if previous_min is not None and cycle[0] >= previous_min:
                raise ParseError("cycle minima must strictly decrease")
            previous_min = cycle[0]
            for v in cycle:
                if v in seen:
                    raise ParseError(f"value {v} repeated across cycles")
                seen.add(v)
        n = sum(len(c) for c in self.cycles)
        if seen and seen != set(range(1, n + 1)):
            raise ParseError(f"cycles do not partition [{n}]")

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def to_permutation(self) -> Permutation:
        """Compose the cycles back into one-line form."""
        images = list(range(1, self.size + 1))
        for cycle in self.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Permutation(tuple(images))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cycles]

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        if self.size <= 9:
            return "".join("(" + "".join(str(v) for v in c) + ")" for c in self.cycles)
        return "".join("(" + ",".join(str(v) for v in c) + ")" for c in self.cycles)


@dataclass(frozen=True)
class ArcDiagram:
    """Left/right shapes of each node of a cycle form's arc diagram."""

    shapes: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for k, pair in enumerate(self.shapes, start=1):
            if pair in FORBIDDEN_SHAPE_PAIRS:
                raise ValueError(f"forbidden shape pair {pair} at node {k}")

    @property
    def size(self) -> int:
        return len(self.shapes)

    def __str__(self) -> str:
        return " ".join(
            f"{k}:({_SHAPE_GLYPHS[l]},{_SHAPE_GLYPHS[r]})"
            for k, (l, r) in enumerate(self.shapes, start=1)
        )


def parse_permutation(text: str) -> Permutation | CycleForm:
    """Parse one-line or cycle-form text.

    One-line input is a digit word for n <= 9 ("47613852") or
    comma/space-separated values for larger n.  Cycle-form input is a
    parenthesized list like "(275368)(14)"; it is normalized to standard
    cycle form.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text")
    if text.startswith("("):
        return _parse_cycles(text)
    if "," in text or " " in text:
        parts = [part for part in text.replace(",", " ").split() if part]
    else:
        parts = list(text)
    try:
        values = tuple(int(part) for part in parts)
    except ValueError as exc:
        raise ParseError(f"invalid permutation text {text!r}") from exc
    return Permutation(values)


def _parse_cycles(text: str) -> CycleForm:
    cycles: list[tuple[int, ...]] = []
    i = 0
    while i < len(text):
        if text[i] != "(":
            raise ParseError(f"expected '(' at position {i} of {text!r}")
        j = text.find(")", i)
        if j < 0:
            raise ParseError(f"unbalanced parentheses in {text!r}")
        body = text[i + 1 : j].strip()
        if not body:
            raise ParseError("empty cycle")
        if "," in body or " " in body:
            parts = [part for part in body.replace(",", " ").split() if part]
        else:
            parts = list(body)
        try:
            cycle = tuple(int(part) for part in parts)
        except ValueError as exc:
            raise ParseError(f"invalid cycle {body!r}") from exc
        cycles.append(cycle)
        i = j + 1
    return normalize_cycles(cycles)


def normalize_cycles(cycles: Sequence[Sequence[int]]) -> CycleForm:
    """Rotate each cycle to start at its minimum and sort by decreasing minima."""
    rotated = []
    for cycle in cycles:
        cycle = tuple(cycle)
        if not cycle:
            raise ParseError("empty cycle")
        k = cycle.index(min(cycle))
        rotated.append(cycle[k:] + cycle[:k])
    rotated.sort(key=lambda c: -c[0])
    return CycleForm(tuple(rotated))


def standard_cycle_form(perm: Permutation) -> CycleForm:
    """Decompose into cycles, each led by its minimum, minima decreasing."""
    images = perm.images
    n = len(images)
    seen = bytearray(n + 1)
    cycles: list[tuple[int, ...]] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        v = images[start - 1]
        while v != start:
            cycle.append(v)
            seen[v] = 1
            v = images[v - 1]
        cycles.append(tuple(cycle))
    cycles.reverse()
    return CycleForm(tuple(cycles))


def flatten(cf: CycleForm) -> Permutation:
    """Erase the parentheses: concatenate the cycles into a one-line word."""
    word = tuple(v for cycle in cf.cycles for v in cycle)
    return Permutation(word)


def left_to_right_minima(word: Sequence[int]) -> list[int]:
    """Positions (1-based) holding a value smaller than everything before it."""
    positions = []
    current = None
    for i, v in enumerate(word, start=1):
        if current is None or v < current:
            positions.append(i)
            current = v
    return positions


def unflatten(perm: Permutation | Sequence[int]) -> CycleForm:
    """Cut a one-line word before each left-to-right minimum.

    Inverse of :func:`flatten`: the segment minima are exactly the
    left-to-right minima, which decrease along the word, so the segments
    form a standard cycle form.
    """
    word = perm.images if isinstance(perm, Permutation) else tuple(perm)
    cuts = left_to_right_minima(word) + [len(word) + 1]
    cycles = tuple(tuple(word[cuts[i] - 1 : cuts[i + 1] - 1]) for i in range(len(cuts) - 1))
    return CycleForm(cycles)


def invert(perm: Permutation) -> Permutation:
    out = [0] * perm.size
    for i, v in enumerate(perm.images, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def reduce_word(values: Sequence[int]) -> tuple[int, ...]:
    """Order reduction: smallest value maps to 1, next smallest to 2, ..."""
    ranks = {v: i for i, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


def cycle_tail(cycle: Sequence[int]) -> Permutation:
    """Drop the leading minimum of a cycle and order-reduce the rest.

    A bijection between k-cycles and permutations of [k-1]; a 1-cycle maps
    to the empty permutation so cycle-wise maps compose cleanly.
    """
    cycle = tuple(cycle)
    if not cycle:
        raise ValueError("empty cycle")
    if cycle[0] != min(cycle):
        raise ValueError(f"cycle must start with its minimum: {cycle}")
    return Permutation(reduce_word(cycle[1:]))


def arc_diagram(cf: CycleForm) -> ArcDiagram:
    """Shapes of each node of the arc diagram of a standard cycle form."""
    n = cf.size
    succ = [0] * (n + 1)  # arc k -> succ[k] within a cycle, 0 if none
    pred = [0] * (n + 1)
    for cycle in cf.cycles:
        for a, b in zip(cycle, cycle[1:]):
            succ[a] = b
            pred[b] = a
    shapes = []
    for k in range(1, n + 1):
        left = SHAPE_EMPTY
        right = SHAPE_EMPTY
        # Incoming arc drawn with its arrowhead at node k.
        if pred[k]:
            if pred[k] < k:
                left = SHAPE_RIGHT
            else:
                right = SHAPE_LEFT
        # Outgoing arc drawn leaving node k.
        if succ[k]:
            if succ[k] > k:
                right = SHAPE_BOTH if right != SHAPE_EMPTY else SHAPE_RIGHT
            else:
                left = SHAPE_BOTH if left != SHAPE_EMPTY else SHAPE_LEFT
        shapes.append((left, right))
    return ArcDiagram(tuple(shapes))


def enumerate_permutations(n: int, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    """All permutations of [n] in lexicographic order of their one-line form."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


# -- raw-tuple helpers used by the enumeration-heavy modules ----------------


def _raw_words(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def _flatten_raw(images: tuple[int, ...]) -> tuple[tuple[int, ...], frozenset[int], int]:
    """(flattened word, 0-based boundary gaps, cycle count) of a raw one-line tuple."""
    n = len(images)
    seen = bytearray(n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = 1
        v = images[start - 1]
        while v != start:
            cycle.append(v)
            seen[v] = 1
            v = images[v - 1]
        cycles.append(cycle)
    cycles.reverse()
    word: list[int] = []
    bounds = []
    for cycle in cycles[:-1]:
        word.extend(cycle)
        bounds.append(len(word) - 1)
    if cycles:
        word.extend(cycles[-1])
    return tuple(word), frozenset(bounds), len(cycles)
