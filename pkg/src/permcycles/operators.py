"""Growth operators, the transport bijections, and the flatten-inverse involution.

Six operator families each build an object of size n+1 from one of size
n; the empty object grows into a Dyck path or a pattern-avoiding
permutation in standard cycle form.  At any object the admissible
operator indices are 0..k for a k computed from the object, and operator
0 is the one that raises the transported statistic:

* dyck_peaks:   index 0 appends a peak NS; index i >= 1 raises all
  excursions from the i-th on under a new N...S.  k = number of
  excursions; statistic = peaks.
* avoid_123:    index 0 prepends the cycle (n+1); index i inserts n+1
  right after the minimum of cycle i.  k = index of the first cycle of
  size >= 2 (or the cycle count if all are singletons); the generated
  permutations are exactly the 1-2-3 avoiders; statistic = cycles.
* avoid_132:    index 0 prepends (n+1); index i appends n+1 to the i-th
  dominant cycle counted from the right, where a cycle is dominant if
  its minimum exceeds every element further right.  k = number of
  dominant cycles; generates the 1-3-2 avoiders.
* dyck_returns: index 0 appends NS; index i >= 1 rewrites the trailing
  descent S^k as S^(k-i) N S^(i+1).  k = trailing descent length;
  statistic = returns.
* avoid_213:    index 0 prepends (n+1); index i inserts n+1 after the
  i-th element of the first cycle.  k = length of the maximal increasing
  prefix of the first cycle; generates the 2-1-3 avoiders.
* avoid_312:    index 0 shifts all values up by one and appends the new
  fixed point (1); index i inserts n+1 into the last cycle after
  position m+1-i, where positions from the last ascent on are allowed.
  k = m+1-j with j the last ascent position; generates the 3-1-2
  avoiders.

Within a triple ({dyck_peaks, avoid_123, avoid_132} or {dyck_returns,
avoid_213, avoid_312}) an object is determined by its operator index
sequence, and replaying the sequence in a sibling family transports the
object, carrying peaks or returns to cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .exceptions import CapExceeded
from .patterns import parse_pattern
from .permutations import CycleForm, flatten, invert, unflatten
from .paths import excursions, path_stats


class NotInClassError(ValueError):
    """The object is not generated by the requested operator family."""


@dataclass(frozen=True)
class OperatorFamily:
    name: str
    domain: str  # "path" or "perm"
    statistic_name: str  # "peaks" or "returns", transported to cycles
    avoided: str | None  # pattern text for permutation families
    admissible: Callable
    apply: Callable
    unapply: Callable

    def empty(self):
        return "" if self.domain == "path" else CycleForm(())

    def size(self, obj) -> int:
        return len(obj) // 2 if self.domain == "path" else obj.size

    def statistic(self, obj) -> int:
        if self.domain == "perm":
            return obj.cycle_count
        stats = path_stats(obj)
        return stats.peaks if self.statistic_name == "peaks" else stats.returns


# -- Dyck path families ------------------------------------------------------


def _peaks_admissible(path: str) -> int:
    return len(excursions(path))


def _peaks_apply(path: str, i: int) -> str:
    if i == 0:
        return path + "NS"
    parts = excursions(path)
    if i > len(parts):
        raise ValueError(f"operator index {i} out of range for {path!r}")
    return "".join(parts[: i - 1]) + "N" + "".join(parts[i - 1 :]) + "S"


def _peaks_unapply(path: str) -> tuple[str, int]:
    if not path:
        raise NotInClassError("cannot unapply on the empty path")
    parts = excursions(path)
    inner = parts[-1][1:-1]
    if not inner:
        return path[:-2], 0
    return "".join(parts[:-1]) + inner, len(parts)


def _trailing_descent(path: str) -> int:
    k = 0
    for step in reversed(path):
        if step != "S":
            break
        k += 1
    return k


def _returns_admissible(path: str) -> int:
    return _trailing_descent(path)


def _returns_apply(path: str, i: int) -> str:
    if i == 0:
        return path + "NS"
    k = _trailing_descent(path)
    if i > k:
        raise ValueError(f"operator index {i} out of range for {path!r}")
    return path[: len(path) - k] + "S" * (k - i) + "N" + "S" * (i + 1)


def _returns_unapply(path: str) -> tuple[str, int]:
    if not path:
        raise NotInClassError("cannot unapply on the empty path")
    j = path.rindex("N")
    b = len(path) - j - 1  # S steps after the last N
    if b == 1:
        return path[:j], 0
    return path[:j] + "S" * (b - 1), b - 1


# -- permutation families ----------------------------------------------------


def _with_cycle(cf: CycleForm, index: int, cycle: tuple[int, ...]) -> CycleForm:
    cycles = list(cf.cycles)
    cycles[index] = cycle
    return CycleForm(tuple(cycles))


def _prepend(cf: CycleForm, value: int) -> CycleForm:
    return CycleForm(((value,),) + cf.cycles)


def _find_max(cf: CycleForm) -> tuple[int, int]:
    """(cycle index, position) of the largest value."""
    n = cf.size
    for j, cycle in enumerate(cf.cycles):
        if n in cycle:
            return j, cycle.index(n)
    raise NotInClassError("empty permutation")


def _avoid123_admissible(cf: CycleForm) -> int:
    for j, cycle in enumerate(cf.cycles):
        if len(cycle) >= 2:
            return j + 1
    return cf.cycle_count


def _avoid123_apply(cf: CycleForm, i: int) -> CycleForm:
    n = cf.size
    if i == 0:
        return _prepend(cf, n + 1)
    cycle = cf.cycles[i - 1]
    return _with_cycle(cf, i - 1, (cycle[0], n + 1) + cycle[1:])


def _avoid123_unapply(cf: CycleForm) -> tuple[CycleForm, int]:
    n = cf.size
    if n == 0:
        raise NotInClassError("cannot unapply on the empty permutation")
    j, pos = _find_max(cf)
    if len(cf.cycles[j]) == 1:
        return CycleForm(cf.cycles[1:]), 0
    if pos != 1:
        raise NotInClassError(f"{cf} is not generated (largest value not after a cycle minimum)")
    cycle = cf.cycles[j]
    return _with_cycle(cf, j, cycle[:1] + cycle[2:]), j + 1


def _dominant_indices(cf: CycleForm) -> list[int]:
    """0-based indices of cycles whose minimum beats everything to the right."""
    out = []
    suffix_max = 0
    for j in range(cf.cycle_count - 1, -1, -1):
        cycle = cf.cycles[j]
        if cycle[0] > suffix_max:
            out.append(j)
        suffix_max = max(suffix_max, max(cycle))
    out.reverse()
    return out


def _avoid132_admissible(cf: CycleForm) -> int:
    return len(_dominant_indices(cf))


def _avoid132_apply(cf: CycleForm, i: int) -> CycleForm:
    n = cf.size
    if i == 0:
        return _prepend(cf, n + 1)
    dominant = _dominant_indices(cf)
    if i > len(dominant):
        raise ValueError(f"operator index {i} out of range for {cf}")
    j = dominant[len(dominant) - i]
    return _with_cycle(cf, j, cf.cycles[j] + (n + 1,))


def _avoid132_unapply(cf: CycleForm) -> tuple[CycleForm, int]:
    n = cf.size
    if n == 0:
        raise NotInClassError("cannot unapply on the empty permutation")
    j, pos = _find_max(cf)
    if len(cf.cycles[j]) == 1:
        return CycleForm(cf.cycles[1:]), 0
    if pos != len(cf.cycles[j]) - 1:
        raise NotInClassError(f"{cf} is not generated (largest value not last in its cycle)")
    cycle = cf.cycles[j]
    parent = _with_cycle(cf, j, cycle[:-1])
    dominant = _dominant_indices(parent)
    if j not in dominant:
        raise NotInClassError(f"{cf} is not generated (insertion cycle not dominant)")
    return parent, len(dominant) - dominant.index(j)


def _increasing_prefix(cycle: tuple[int, ...]) -> int:
    k = 1
    while k < len(cycle) and cycle[k - 1] < cycle[k]:
        k += 1
    return k


def _avoid213_admissible(cf: CycleForm) -> int:
    if cf.cycle_count == 0:
        return 0
    return _increasing_prefix(cf.cycles[0])


def _avoid213_apply(cf: CycleForm, i: int) -> CycleForm:
    n = cf.size
    if i == 0:
        return _prepend(cf, n + 1)
    cycle = cf.cycles[0]
    if i > len(cycle):
        raise ValueError(f"operator index {i} out of range for {cf}")
    return _with_cycle(cf, 0, cycle[:i] + (n + 1,) + cycle[i:])


def _avoid213_unapply(cf: CycleForm) -> tuple[CycleForm, int]:
    n = cf.size
    if n == 0:
        raise NotInClassError("cannot unapply on the empty permutation")
    j, pos = _find_max(cf)
    if len(cf.cycles[j]) == 1:
        return CycleForm(cf.cycles[1:]), 0
    if j != 0:
        raise NotInClassError(f"{cf} is not generated (largest value outside the first cycle)")
    cycle = cf.cycles[0]
    return _with_cycle(cf, 0, cycle[:pos] + cycle[pos + 1 :]), pos


def _last_ascent(cycle: tuple[int, ...]) -> int:
    for j in range(len(cycle) - 1, 0, -1):
        if cycle[j - 1] < cycle[j]:
            return j
    return 0


def _avoid312_admissible(cf: CycleForm) -> int:
    if cf.cycle_count == 0:
        return 0
    last = cf.cycles[-1]
    if len(last) == 1:
        return 1
    return len(last) + 1 - _last_ascent(last)


def _avoid312_apply(cf: CycleForm, i: int) -> CycleForm:
    n = cf.size
    if i == 0:
        shifted = tuple(tuple(v + 1 for v in cycle) for cycle in cf.cycles)
        return CycleForm(shifted + ((1,),))
    last = cf.cycles[-1]
    position = len(last) + 1 - i
    if position < 1:
        raise ValueError(f"operator index {i} out of range for {cf}")
    new_last = last[:position] + (n + 1,) + last[position:]
    return _with_cycle(cf, cf.cycle_count - 1, new_last)


def _avoid312_unapply(cf: CycleForm) -> tuple[CycleForm, int]:
    n = cf.size
    if n == 0:
        raise NotInClassError("cannot unapply on the empty permutation")
    if cf.cycles[-1] == (1,):
        unshifted = tuple(tuple(v - 1 for v in cycle) for cycle in cf.cycles[:-1])
        return CycleForm(unshifted), 0
    last = cf.cycles[-1]
    if n not in last:
        raise NotInClassError(f"{cf} is not generated (largest value outside the last cycle)")
    pos = last.index(n)  # 0-based; 1-based position pos+1
    parent_last = last[:pos] + last[pos + 1 :]
    parent = _with_cycle(cf, cf.cycle_count - 1, parent_last)
    return parent, len(parent_last) + 1 - pos


FAMILIES: dict[str, OperatorFamily] = {
    "dyck_peaks": OperatorFamily(
        "dyck_peaks", "path", "peaks", None, _peaks_admissible, _peaks_apply, _peaks_unapply
    ),
    "avoid_123": OperatorFamily(
        "avoid_123", "perm", "peaks", "1-2-3", _avoid123_admissible, _avoid123_apply, _avoid123_unapply
    ),
    "avoid_132": OperatorFamily(
        "avoid_132", "perm", "peaks", "1-3-2", _avoid132_admissible, _avoid132_apply, _avoid132_unapply
    ),
    "dyck_returns": OperatorFamily(
        "dyck_returns", "path", "returns", None, _returns_admissible, _returns_apply, _returns_unapply
    ),
    "avoid_213": OperatorFamily(
        "avoid_213", "perm", "returns", "2-1-3", _avoid213_admissible, _avoid213_apply, _avoid213_unapply
    ),
    "avoid_312": OperatorFamily(
        "avoid_312", "perm", "returns", "3-1-2", _avoid312_admissible, _avoid312_apply, _avoid312_unapply
    ),
}

TRIPLES = {
    "peaks": ("dyck_peaks", "avoid_123", "avoid_132"),
    "returns": ("dyck_returns", "avoid_213", "avoid_312"),
}


def get_family(name: str) -> OperatorFamily:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown operator family {name!r}; choose from {tuple(FAMILIES)}") from None


def apply_operator(family: OperatorFamily | str, obj, i: int):
    family = get_family(family) if isinstance(family, str) else family
    if not 0 <= i <= family.admissible(obj):
        raise ValueError(f"operator index {i} not admissible (range 0..{family.admissible(obj)})")
    return family.apply(obj, i)


def apply_sequence(family: OperatorFamily | str, indices: Iterable[int]):
    family = get_family(family) if isinstance(family, str) else family
    obj = family.empty()
    for i in indices:
        obj = apply_operator(family, obj, i)
    return obj


def operator_sequence(family: OperatorFamily | str, obj) -> tuple[int, ...]:
    """The unique index sequence generating ``obj``, or NotInClassError."""
    family = get_family(family) if isinstance(family, str) else family
    indices: list[int] = []
    current = obj
    while family.size(current) > 0:
        parent, i = family.unapply(current)
        if not 0 <= i <= family.admissible(parent):
            raise NotInClassError(f"{obj} is not generated by {family.name}")
        indices.append(i)
        current = parent
    indices.reverse()
    return tuple(indices)


def transport(obj, from_family: OperatorFamily | str, to_family: OperatorFamily | str):
    """Replay an object's operator sequence in a sibling family."""
    from_family = get_family(from_family) if isinstance(from_family, str) else from_family
    to_family = get_family(to_family) if isinstance(to_family, str) else to_family
    if from_family.statistic_name != to_family.statistic_name:
        raise ValueError(
            f"{from_family.name} and {to_family.name} belong to different operator triples"
        )
    return apply_sequence(to_family, operator_sequence(from_family, obj))


def generate(family: OperatorFamily | str, n: int, cap: int = 10) -> set:
    """All objects of size n generated by the family (breadth-first growth)."""
    family = get_family(family) if isinstance(family, str) else family
    if n > cap:
        raise CapExceeded(f"n={n} exceeds generation cap {cap}")
    level = {family.empty()}
    for _ in range(n):
        level = {
            family.apply(obj, i)
            for obj in level
            for i in range(family.admissible(obj) + 1)
        }
    return level


def flattened_inverse(cf: CycleForm) -> CycleForm:
    """Flatten, invert the word, unflatten.

    An involution on standard cycle forms that preserves the number of
    cycles and swaps cyclic 3-1-2 occurrences with cyclic 2-3-1
    occurrences.
    """
    return unflatten(invert(flatten(cf)))


def first_peak_distribution(semilength: int, cap: int = 12) -> dict[int, int]:
    """{h: number of Dyck paths of the given semilength with first peak at height h}."""
    from .paths import enumerate_dyck

    counts: dict[int, int] = {}
    for path in enumerate_dyck(semilength, cap):
        h = path_stats(path).first_peak_height
        counts[h] = counts.get(h, 0) + 1
    return counts


def two_cycle_first_cycle_distribution(n: int, cap: int = 10) -> dict[int, int]:
    """Among two-cycle 3-2-1 avoiders of [n]: sizes of the first cycle."""
    from .permutations import _flatten_raw, _raw_words
    from .patterns import count_occurrences

    pattern = parse_pattern("3-2-1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    counts: dict[int, int] = {}
    for images in _raw_words(n):
        word, bounds, m = _flatten_raw(images)
        if m != 2:
            continue
        if count_occurrences(word, pattern, bounds) == 0:
            first_size = min(bounds) + 1  # single boundary: end of the first cycle
            counts[first_size] = counts.get(first_size, 0) + 1
    return counts


def check_321_two_cycle(n: int, cap: int = 10) -> bool:
    """Two-cycle 3-2-1 avoiders with first cycle of size k match Dyck paths
    of semilength n whose first peak is at height k+1, for every k."""
    perm_side = two_cycle_first_cycle_distribution(n, cap)
    path_side = first_peak_distribution(n)
    shifted = {k: c for k, c in perm_side.items()}
    compare = {h - 1: c for h, c in path_side.items() if h >= 2}
    # Paths with first peak at height 1 correspond to the one-cycle avoiders.
    return shifted == compare
