"""Bicoloured Motzkin paths, weighted enumeration and continued fractions.

A path is a string over N, S, E, F: north (1,1), south (1,-1) and two
colours of east step.  Every prefix has at least as many N as S steps and
the totals agree, so the path starts and ends on the axis.  A Dyck path
uses only N and S.

A weight scheme assigns each step a polynomial weight depending on the
step's starting height; the weight of a path is the product of its step
weights.  The generating function of weighted paths by length has the
classical continued-fraction form

    1 / (1 - (E0+F0) z - N0 S1 z^2 / (1 - (E1+F1) z - N1 S2 z^2 / ...))

which this module evaluates exactly over truncated series.  Truncating
the fraction at depth ceil(n/2)+1 is exact to order z^n because a path
of length n never climbs above height n/2.  Two additional named schemes
are general continued fractions (their levels contribute z^1 terms) and
are evaluated by the same engine.

The map from permutations to paths reads the arc diagram of a standard
cycle form node by node: isolated nodes and pass-through nodes become
east steps, nodes that only open an arc to the right become N, nodes
that only close arcs from the left become S.  Its image is exactly the
set of bicoloured Motzkin paths with no F step on the axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .exceptions import CapExceeded, ParseError
from .permutations import (
    SHAPE_BOTH,
    SHAPE_EMPTY,
    SHAPE_LEFT,
    SHAPE_RIGHT,
    CycleForm,
    arc_diagram,
)
from .polynomials import ONE, P, Q, X, ZERO, MultiPoly, SeriesZ
from .series import qnumber

PATH_CAP = 12
STEPS = "NSEF"

_STEP_TABLE = {
    (SHAPE_EMPTY, SHAPE_EMPTY): "E",
    (SHAPE_EMPTY, SHAPE_RIGHT): "N",
    (SHAPE_EMPTY, SHAPE_LEFT): "F",
    (SHAPE_EMPTY, SHAPE_BOTH): "N",
    (SHAPE_RIGHT, SHAPE_EMPTY): "S",
    (SHAPE_RIGHT, SHAPE_RIGHT): "E",
    (SHAPE_LEFT, SHAPE_LEFT): "F",
    (SHAPE_BOTH, SHAPE_EMPTY): "S",
}


def parse_path(text: str) -> str:
    """Normalize path text: NSEF words, or UD words for Dyck paths."""
    word = text.strip().upper()
    if word and set(word) <= set("UD"):
        word = word.replace("U", "N").replace("D", "S")
    if not set(word) <= set(STEPS):
        raise ParseError(f"invalid path step in {text!r}")
    heights(word)
    return word


def heights(path: str) -> list[int]:
    """Height after each step; raises if the path dips below the axis or ends high."""
    h = 0
    out = []
    for step in path:
        if step == "N":
            h += 1
        elif step == "S":
            h -= 1
        elif step not in "EF":
            raise ParseError(f"invalid step {step!r}")
        if h < 0:
            raise ParseError(f"path {path!r} dips below the axis")
        out.append(h)
    if h != 0:
        raise ParseError(f"path {path!r} does not end on the axis")
    return out


def is_dyck(path: str) -> bool:
    return set(path) <= {"N", "S"}


def max_height(path: str) -> int:
    return max(heights(path), default=0)


def enumerate_motzkin(n: int, bicoloured: bool = True, cap: int = PATH_CAP) -> Iterator[str]:
    """All (bicoloured) Motzkin paths of length n, in lexicographic step order."""
    if n > cap:
        raise CapExceeded(f"path length {n} exceeds cap {cap}")
    level_steps = ("E", "F") if bicoloured else ("E",)

    def grow(prefix: list[str], h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(prefix)
            return
        for step in level_steps:
            if h <= remaining - 1:
                prefix.append(step)
                yield from grow(prefix, h, remaining - 1)
                prefix.pop()
        if h + 1 <= remaining - 1:
            prefix.append("N")
            yield from grow(prefix, h + 1, remaining - 1)
            prefix.pop()
        if h > 0:
            prefix.append("S")
            yield from grow(prefix, h - 1, remaining - 1)
            prefix.pop()

    yield from grow([], 0, n)


def enumerate_dyck(semilength: int, cap: int = PATH_CAP) -> Iterator[str]:
    """All Dyck paths with ``semilength`` N steps, N before S lexicographically."""
    if semilength > cap:
        raise CapExceeded(f"semilength {semilength} exceeds cap {cap}")

    def grow(prefix: list[str], h: int, ups_left: int, downs_left: int) -> Iterator[str]:
        if ups_left == 0 and downs_left == 0:
            yield "".join(prefix)
            return
        if ups_left > 0:
            prefix.append("N")
            yield from grow(prefix, h + 1, ups_left - 1, downs_left)
            prefix.pop()
        if downs_left > ups_left and h > 0:
            prefix.append("S")
            yield from grow(prefix, h - 1, ups_left, downs_left - 1)
            prefix.pop()

    yield from grow([], 0, semilength, semilength)


@dataclass(frozen=True)
class WeightScheme:
    """Height-indexed step weights N_h, S_h, E_h, F_h (h = starting height)."""

    name: str
    north: Callable[[int], MultiPoly]
    south: Callable[[int], MultiPoly]
    east: Callable[[int], MultiPoly]
    flat: Callable[[int], MultiPoly]

    def weight(self, step: str, h: int) -> MultiPoly:
        if step == "N":
            return self.north(h)
        if step == "S":
            if h < 1:
                raise ValueError("S step cannot start at height 0")
            return self.south(h)
        if step == "E":
            return self.east(h)
        if step == "F":
            return self.flat(h)
        raise ValueError(f"unknown step {step!r}")

    def tables(self, height: int) -> dict[str, tuple[MultiPoly, ...]]:
        """Materialized weight tables for h = 0..height (S from h = 1)."""
        return {
            "N": tuple(self.north(h) for h in range(height + 1)),
            "S": (ZERO,) + tuple(self.south(h) for h in range(1, height + 1)),
            "E": tuple(self.east(h) for h in range(height + 1)),
            "F": tuple(self.flat(h) for h in range(height + 1)),
        }


@dataclass(frozen=True)
class ContinuedFractionScheme:
    """A general continued fraction n0/(d0 - n1/(d1 - ...)) over series in z.

    ``level(h)`` returns the numerator and denominator of level h as
    z-coefficient lists of polynomials.  The value of the scheme's series
    is ``prefix + multiplier * z^shift * K`` where K is the fraction; the
    wrapper places the fraction inside the permutation generating
    function it encodes.
    """

    name: str
    level: Callable[[int], tuple[tuple[MultiPoly, ...], tuple[MultiPoly, ...]]]
    prefix: MultiPoly = field(default=ONE)
    multiplier: MultiPoly = field(default=ONE)
    shift: int = 0


def evaluate_continued_fraction(levels, order: int) -> SeriesZ:
    """Evaluate n0/(d0 - n1/(d1 - n2/(...))) exactly to the given order."""
    tail = SeriesZ.zero(order)
    for num_coeffs, den_coeffs in reversed(list(levels)):
        num = SeriesZ(list(num_coeffs), order)
        den = SeriesZ(list(den_coeffs), order)
        tail = num * (den - tail).reciprocal()
    return tail


def path_weight(path: str, scheme: WeightScheme) -> MultiPoly:
    """Product of the step weights along a path (empty product is 1)."""
    h = 0
    weight = ONE
    for step in path:
        weight = weight * scheme.weight(step, h)
        if step == "N":
            h += 1
        elif step == "S":
            h -= 1
        if h < 0:
            raise ParseError(f"path {path!r} dips below the axis")
    if h != 0:
        raise ParseError(f"path {path!r} does not end on the axis")
    return weight


def weighted_sum_series(scheme: WeightScheme, n_max: int, cap: int = PATH_CAP) -> SeriesZ:
    """Direct weighted path enumeration; the oracle for ``cf_series``."""
    coeffs = []
    for n in range(n_max + 1):
        total = ZERO
        for path in enumerate_motzkin(n, bicoloured=True, cap=cap):
            total = total + path_weight(path, scheme)
        coeffs.append(total)
    return SeriesZ(coeffs, n_max)


def cf_series(scheme: WeightScheme | ContinuedFractionScheme, n_max: int) -> SeriesZ:
    """Continued-fraction expansion of a scheme's generating function."""
    if isinstance(scheme, WeightScheme):
        depth = n_max // 2 + 1
        levels = []
        for h in range(depth):
            den = (ONE, -(scheme.east(h) + scheme.flat(h)))
            if h == 0:
                num: tuple[MultiPoly, ...] = (ONE,)
            else:
                num = (ZERO, ZERO, scheme.north(h - 1) * scheme.south(h))
            levels.append((num, den))
        return evaluate_continued_fraction(levels, n_max)
    inner_order = n_max - scheme.shift
    if inner_order < 0:
        raise ValueError("order smaller than the scheme shift")
    levels = [scheme.level(h) for h in range(inner_order + 1)]
    fraction = evaluate_continued_fraction(levels, inner_order)
    coeffs = [ZERO] * (n_max + 1)
    coeffs[0] = coeffs[0] + scheme.prefix
    for j, poly in enumerate(fraction.coeffs):
        coeffs[j + scheme.shift] = coeffs[j + scheme.shift] + scheme.multiplier * poly
    return SeriesZ(coeffs, n_max)


def _asc_des_scheme() -> WeightScheme:
    # Ascent/descent weights: N_h = (h+1)q, S_h = (h-1)p + x, E_h = hq + x, F_h = hp.
    return WeightScheme(
        "asc_des",
        north=lambda h: Q * (h + 1),
        south=lambda h: P * (h - 1) + X,
        east=lambda h: Q * h + X,
        flat=lambda h: P * h,
    )


def _p123_scheme() -> WeightScheme:
    # Rising-triple weights with q only on pass-through (east) nodes:
    # N_h = h+1, S_h = (h-1) + x, E_h = hq + x, F_h = h.  The E+F sum is
    # h(1+q) + x and the product N_h S_{h+1} is (h+1)(h+x); this split, not
    # the free one, also matches the per-class node weights.
    return WeightScheme(
        "p123",
        north=lambda h: MultiPoly.constant(h + 1),
        south=lambda h: MultiPoly.constant(h - 1) + X,
        east=lambda h: Q * h + X,
        flat=lambda h: MultiPoly.constant(h),
    )


def _valleys_scheme() -> WeightScheme:
    # Only the sum E_h + F_h = 2h + x and product N_h S_{h+1} = (h+1)(hq + x)
    # are determined; the free split puts the sum on E and the product on N.
    # Individual path weights depend on the split, the series does not.
    return WeightScheme(
        "valleys",
        north=lambda h: (Q * h + X) * (h + 1),
        south=lambda h: ONE,
        east=lambda h: MultiPoly.constant(2 * h) + X,
        flat=lambda h: ZERO,
    )


def _inv_euler_scheme() -> ContinuedFractionScheme:
    # Euler's continued fraction for sum_n z^n <1><2>...<n> over the
    # (p,q,x)-weighted q-numbers, in the constant-inclusive form
    # 1/(1 - <1>z/(1 + <1>z - <2>z/(1 + <2>z - ...))).
    def level(h):
        if h == 0:
            return (ONE,), (ONE,)
        qn = qnumber(h, "pqx")
        return (ZERO, qn), (ONE, qn)

    return ContinuedFractionScheme("inv_euler", level, prefix=ZERO)


def _dash213_scheme() -> ContinuedFractionScheme:
    # Levels a_h = <h> + <h>_{x,q}, b_h = <h> <h+1>_{x,q} (1-based h).  The
    # fraction K generates the statistics of one length/cycle unit up:
    # the full series is 1 + x z K.
    def level(h):
        den = (ONE, -(qnumber(h + 1, "plain") + qnumber(h + 1, "x_top")))
        if h == 0:
            return (ONE,), den
        num = (ZERO, ZERO, qnumber(h, "plain") * qnumber(h + 1, "x_top"))
        return num, den

    return ContinuedFractionScheme("dash213", level, prefix=ONE, multiplier=X, shift=1)


_BUILTIN = {
    "asc_des": _asc_des_scheme,
    "p123": _p123_scheme,
    "valleys": _valleys_scheme,
    "inv_euler": _inv_euler_scheme,
    "dash213": _dash213_scheme,
}

SCHEME_NAMES = tuple(_BUILTIN)


def builtin_scheme(name: str) -> WeightScheme | ContinuedFractionScheme:
    try:
        return _BUILTIN[name]()
    except KeyError:
        raise ValueError(f"unknown scheme {name!r}; choose from {SCHEME_NAMES}") from None


class PathStats:
    """Peak, return and first-peak statistics of a Dyck path."""

    __slots__ = ("peaks", "returns", "first_peak_height")

    def __init__(self, peaks: int, returns: int, first_peak_height: int):
        self.peaks = peaks
        self.returns = returns
        self.first_peak_height = first_peak_height

    def __iter__(self):
        return iter((self.peaks, self.returns, self.first_peak_height))

    def __eq__(self, other):
        return tuple(self) == tuple(other)

    def __repr__(self):
        return f"PathStats(peaks={self.peaks}, returns={self.returns}, first_peak_height={self.first_peak_height})"


def path_stats(path: str) -> PathStats:
    """Statistics of a Dyck path.

    A peak is an N step immediately followed by an S step; a return is
    any visit to the axis except the starting point; the first peak
    height is 0 for the empty path.
    """
    if not is_dyck(path):
        raise ParseError(f"not a Dyck path: {path!r}")
    hs = heights(path)
    peaks = sum(1 for a, b in zip(path, path[1:]) if a == "N" and b == "S")
    returns = sum(1 for h in hs if h == 0)
    first_peak = 0
    for i in range(len(path) - 1):
        if path[i] == "N" and path[i + 1] == "S":
            first_peak = hs[i]
            break
    return PathStats(peaks, returns, first_peak)


def excursions(path: str) -> list[str]:
    """Maximal segments between consecutive visits to the axis."""
    out = []
    start = 0
    for i, h in enumerate(heights(path)):
        if h == 0:
            out.append(path[start : i + 1])
            start = i + 1
    return out


def arc_path(cf: CycleForm) -> str:
    """Map a standard cycle form to its bicoloured Motzkin path.

    Step k is read off the shape pair of node k of the arc diagram.  The
    result is always a valid path with no F step starting on the axis.
    """
    diagram = arc_diagram(cf)
    steps = []
    h = 0
    for k, pair in enumerate(diagram.shapes, start=1):
        step = _STEP_TABLE[pair]
        if step == "F" and h == 0:
            raise AssertionError(f"F step on the axis at node {k} of {cf}")
        steps.append(step)
        if step == "N":
            h += 1
        elif step == "S":
            h -= 1
            if h < 0:
                raise AssertionError(f"path of {cf} dips below the axis")
    if h != 0:
        raise AssertionError(f"path of {cf} does not close")
    return "".join(steps)


NODE_WEIGHT_RULES = ("asc_des", "p123")


def node_weights(cf: CycleForm, rule: str) -> list[MultiPoly]:
    """Per-node weights used by the class-sum identity.

    asc_des: x on the last node of each cycle, q when the node's arc
    leaves to the right, p otherwise.
    p123: x on the last node of each cycle, q on pass-through nodes
    (incoming from the left, outgoing to the right), 1 otherwise.
    """
    if rule not in NODE_WEIGHT_RULES:
        raise ValueError(f"unknown node-weight rule {rule!r}")
    n = cf.size
    succ = [0] * (n + 1)
    pred = [0] * (n + 1)
    for cycle in cf.cycles:
        for a, b in zip(cycle, cycle[1:]):
            succ[a] = b
            pred[b] = a
    weights = []
    for k in range(1, n + 1):
        if succ[k] == 0:
            weights.append(X)
        elif rule == "asc_des":
            weights.append(Q if succ[k] > k else P)
        else:
            weights.append(Q if (0 < pred[k] < k and succ[k] > k) else ONE)
    return weights


def verify_phi_weights(
    n: int,
    rule: str,
    scheme: WeightScheme | None = None,
    cap: int = 10,
) -> bool:
    """Check the class-sum identity at size n.

    Permutations are grouped by their path; for each class the sum over
    members of the product of node weights must equal the path weight
    under the scheme (default: the builtin scheme named after the rule).
    """
    from .permutations import _flatten_raw, _raw_words, unflatten

    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    if scheme is None:
        scheme = builtin_scheme(rule)
        assert isinstance(scheme, WeightScheme)
    class_sums: dict[str, MultiPoly] = {}
    for images in _raw_words(n):
        word, _, _ = _flatten_raw(images)
        cf = unflatten(word)
        path = arc_path(cf)
        weight = ONE
        for w in node_weights(cf, rule):
            weight = weight * w
        class_sums[path] = class_sums.get(path, ZERO) + weight
    for path, total in class_sums.items():
        if total != path_weight(path, scheme):
            return False
    return True
