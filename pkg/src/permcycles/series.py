"""Brute-force generating functions, q-numbers and closed-form counts.

The central objects are truncations of

    F_pat(q, x, z) = sum over permutations of q^(cyclic occurrences)
                     * x^(cycles) * z^(length)

computed by exhaustive enumeration, and their index-form analogues
G_pat(q, z).  These serve both as results in their own right and as the
independent oracle against which continued fractions, closed forms and
bijections are checked.

All distribution helpers are cached: the verification suite asks for the
same tables many times.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator, Sequence

from .exceptions import CapExceeded
from .patterns import Pattern, count_occurrences
from .permutations import DEFAULT_CAP, _flatten_raw, _raw_words
from .polynomials import ONE, MultiPoly, SeriesZ

QNUMBER_VARIANTS = ("plain", "x_top", "pqx")


def qnumber(h: int, variant: str = "plain") -> MultiPoly:
    """The q-number <h> and its x- and (p,q,x)-weighted variants.

    plain:  1 + q + ... + q^(h-1)
    x_top:  1 + q + ... + q^(h-2) + x q^(h-1)
    pqx:    p^(h-1) + p^(h-2) q + ... + p q^(h-2) + x q^(h-1)
    """
    if h < 1:
        raise ValueError("q-number requires h >= 1")
    terms: dict[tuple[int, int, int], int] = {}
    if variant == "plain":
        for i in range(h):
            terms[(0, i, 0)] = 1
    elif variant == "x_top":
        for i in range(h - 1):
            terms[(0, i, 0)] = 1
        terms[(0, h - 1, 1)] = 1
    elif variant == "pqx":
        for i in range(h - 1):
            terms[(h - 1 - i, i, 0)] = 1
        terms[(0, h - 1, 1)] = 1
    else:
        raise ValueError(f"unknown q-number variant {variant!r}")
    return MultiPoly(terms)


def _single_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """One-line words of permutations of [n] consisting of a single n-cycle."""
    import itertools

    for rest in itertools.permutations(range(2, n + 1)):
        yield (1,) + rest


@functools.lru_cache(maxsize=None)
def joint_distribution(pattern: Pattern, n: int, cap: int = DEFAULT_CAP) -> dict:
    """{(k, m): count of permutations of [n] with k cyclic occurrences, m cycles}."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    counts: dict[tuple[int, int], int] = {}
    for images in _raw_words(n):
        word, bounds, m = _flatten_raw(images)
        k = count_occurrences(word, pattern, bounds)
        key = (k, m)
        counts[key] = counts.get(key, 0) + 1
    return counts


@functools.lru_cache(maxsize=None)
def classical_distribution(pattern: Pattern, n: int, cap: int = DEFAULT_CAP) -> dict:
    """{k: count of permutations of [n] with k index-form occurrences}."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    counts: dict[int, int] = {}
    for images in _raw_words(n):
        k = count_occurrences(images, pattern)
        counts[k] = counts.get(k, 0) + 1
    return counts


@functools.lru_cache(maxsize=None)
def single_cycle_distribution(pattern: Pattern, n: int, cap: int = DEFAULT_CAP) -> dict:
    """{k: count of n-cycles with k cyclic occurrences} (flattened word counts)."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    if n == 0:
        return {}
    counts: dict[int, int] = {}
    for word in _single_cycles(n):
        k = count_occurrences(word, pattern)
        counts[k] = counts.get(k, 0) + 1
    return counts


def brute_force_series(
    marked: Sequence[tuple[Pattern, str]] | Pattern,
    n_max: int,
    cap: int = DEFAULT_CAP,
) -> SeriesZ:
    """Truncation of the cyclic-occurrence generating function.

    ``marked`` is a pattern (marked q) or a sequence of (pattern, mark)
    pairs with marks in {"p", "q"}.  The z^n coefficient is the sum over
    permutations of [n] of p^.. q^.. x^(cycle count).
    """
    if isinstance(marked, Pattern):
        marked = [(marked, "q")]
    marked = tuple(marked)
    for _, mark in marked:
        if mark not in ("p", "q"):
            raise ValueError(f"marks must be 'p' or 'q', got {mark!r}")
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration cap {cap}")
    if len(marked) == 1 and marked[0][1] == "q":
        pattern = marked[0][0]
        coeffs = []
        for n in range(n_max + 1):
            terms = {
                (0, k, m): c for (k, m), c in joint_distribution(pattern, n, cap).items()
            }
            coeffs.append(MultiPoly(terms))
        return SeriesZ(coeffs, n_max)
    coeffs = []
    for n in range(n_max + 1):
        acc: dict[tuple[int, int, int], int] = {}
        for images in _raw_words(n):
            word, bounds, m = _flatten_raw(images)
            ep = eq = 0
            for pattern, mark in marked:
                k = count_occurrences(word, pattern, bounds)
                if mark == "p":
                    ep += k
                else:
                    eq += k
            key = (ep, eq, m)
            acc[key] = acc.get(key, 0) + 1
        coeffs.append(MultiPoly(acc))
    return SeriesZ(coeffs, n_max)


def classical_series(pattern: Pattern, n_max: int, cap: int = DEFAULT_CAP) -> SeriesZ:
    """Truncation of G_pat(q, z): index-form occurrence counts, no cycle mark."""
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration cap {cap}")
    coeffs = []
    for n in range(n_max + 1):
        terms = {(0, k, 0): c for k, c in classical_distribution(pattern, n, cap).items()}
        coeffs.append(MultiPoly(terms))
    return SeriesZ(coeffs, n_max)


def inversion_product_series(n_max: int) -> SeriesZ:
    """Product formula for the joint inversion statistics.

    The z^n coefficient is the product <1> <2> ... <n> of (p,q,x)-weighted
    q-numbers; the empty product gives 1 at z^0.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    coeffs = [ONE]
    current = ONE
    for i in range(1, n_max + 1):
        current = current * qnumber(i, "pqx")
        coeffs.append(current)
    return SeriesZ(coeffs, n_max)


def avoidance_table(pattern: Pattern, n_max: int, cap: int = DEFAULT_CAP) -> dict:
    """{n: (f(0,1,n), ..., f(0,n,n))}: avoiders of [n] counted by cycles."""
    table = {}
    for n in range(1, n_max + 1):
        dist = joint_distribution(pattern, n, cap)
        table[n] = tuple(dist.get((0, m), 0) for m in range(1, n + 1))
    return table


def cyclic_series_x_slice(series: SeriesZ) -> SeriesZ:
    """(F - 1)/(x z) at x = 0: the single-cycle layer, shifted down one length."""
    if series.order < 1:
        raise ValueError("need order >= 1")
    coeffs = [series[n + 1].coefficient("x", 1) for n in range(series.order)]
    return SeriesZ(coeffs, series.order - 1)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > max(n, 0):
        return 0
    return math.comb(n, k)


def narayana(n: int, k: int) -> int:
    """(1/k) C(n-1, k-1) C(n, k-1); counts Dyck paths of semilength n by peaks."""
    if not 1 <= k <= n:
        raise ValueError(f"narayana requires 1 <= k <= n, got ({n}, {k})")
    numerator = math.comb(n - 1, k - 1) * math.comb(n, k - 1)
    quotient, remainder = divmod(numerator, k)
    assert remainder == 0, "narayana division must be exact"
    return quotient


def catalan_triangle(n: int, m: int) -> int:
    """m/(2n-m) C(2n-m, n); counts Dyck paths of semilength n by returns."""
    if not 1 <= m <= n:
        raise ValueError(f"catalan_triangle requires 1 <= m <= n, got ({n}, {m})")
    numerator = m * math.comb(2 * n - m, n)
    quotient, remainder = divmod(numerator, 2 * n - m)
    assert remainder == 0, "catalan triangle division must be exact"
    return quotient


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan requires n >= 0")
    return math.comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks, via the standard recurrence."""
    if not 1 <= k <= n:
        raise ValueError(f"stirling2 requires 1 <= k <= n, got ({n}, {k})")
    if k == 1 or k == n:
        return 1
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def series_from_distribution(dist: dict, x_marked: bool) -> MultiPoly:
    """Assemble a z-coefficient polynomial from a distribution table."""
    if x_marked:
        return MultiPoly({(0, k, m): c for (k, m), c in dist.items()})
    return MultiPoly({(0, k, 0): c for k, c in dist.items()})


__all__ = [
    "qnumber",
    "joint_distribution",
    "classical_distribution",
    "single_cycle_distribution",
    "brute_force_series",
    "classical_series",
    "inversion_product_series",
    "avoidance_table",
    "cyclic_series_x_slice",
    "narayana",
    "catalan_triangle",
    "catalan",
    "stirling2",
    "binomial",
    "series_from_distribution",
]
