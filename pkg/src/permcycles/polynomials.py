"""Exact integer polynomials in the marks p, q, x and truncated series in z.

Every counting statement in this library is an identity between exact
integer polynomials.  By convention q marks occurrences of a pattern,
x marks the number of cycles, p marks a second pattern (or a
complementary statistic), and z marks permutation length.

``MultiPoly`` is a sparse polynomial in (p, q, x) with arbitrary-precision
integer coefficients, stored as a map from exponent triples to nonzero
coefficients.  ``SeriesZ`` is a power series in z truncated at a fixed
order, with ``MultiPoly`` coefficients.  No floating point is used.

>>> (P + Q * X) * X == P * X + Q * X**2
True
>>> str(reciprocal_example())
'1 + z + 2 z^2 + 3 z^3 + 5 z^4'
"""

from __future__ import annotations

from typing import Iterator, Mapping

_VARS = ("p", "q", "x")


class MultiPoly:
    """A polynomial in p, q, x over the integers.

    Terms are held in ``self.terms`` as ``{(e_p, e_q, e_x): coeff}`` with no
    zero coefficients stored.  Instances are treated as immutable; all
    arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        clean: dict[tuple[int, int, int], int] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff == 0:
                    continue
                ep, eq, ex = key
                if ep < 0 or eq < 0 or ex < 0:
                    raise ValueError(f"negative exponent in {key}")
                clean[(ep, eq, ex)] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in _VARS:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0, 0, 0]
        exps[_VARS.index(name)] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def monomial(cls, coeff: int, ep: int = 0, eq: int = 0, ex: int = 0) -> "MultiPoly":
        return cls({(ep, eq, ex): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        result = MultiPoly.__new__(MultiPoly)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly.__new__(MultiPoly)
        result.terms = {key: -c for key, c in self.terms.items()}
        return result

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.constant(other) + (-self)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly()
            result = MultiPoly.__new__(MultiPoly)
            result.terms = {key: c * other for key, c in self.terms.items()}
            return result
        out: dict[tuple[int, int, int], int] = {}
        for (a0, a1, a2), ca in self.terms.items():
            for (b0, b1, b2), cb in other.terms.items():
                key = (a0 + b0, a1 + b1, a2 + b2)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    del out[key]
        result = MultiPoly.__new__(MultiPoly)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def substitute(self, **values: int) -> "MultiPoly":
        """Substitute integer values for any of p, q, x.

        >>> (P * X + Q * X**2).substitute(x=1) == P + Q
        True
        """
        for name in values:
            if name not in _VARS:
                raise ValueError(f"unknown variable {name!r}")
        out: dict[tuple[int, int, int], int] = {}
        for key, coeff in self.terms.items():
            new_key = list(key)
            for name, value in values.items():
                i = _VARS.index(name)
                coeff *= value ** key[i]
                new_key[i] = 0
            if coeff:
                k = tuple(new_key)
                new = out.get(k, 0) + coeff
                if new:
                    out[k] = new
                else:
                    del out[k]
        return MultiPoly(out)

    def coefficient(self, var: str, power: int) -> "MultiPoly":
        """The coefficient of ``var**power``, as a polynomial in the other marks.

        >>> (P * X + Q * X**2).coefficient("x", 2) == Q
        True
        """
        i = _VARS.index(var)
        out = {}
        for key, coeff in self.terms.items():
            if key[i] == power:
                reduced = list(key)
                reduced[i] = 0
                out[tuple(reduced)] = coeff
        return MultiPoly(out)

    def degree(self, var: str) -> int:
        """Largest exponent of ``var`` (-1 for the zero polynomial)."""
        i = _VARS.index(var)
        return max((key[i] for key in self.terms), default=-1)

    def as_int(self) -> int:
        """The value of a constant polynomial."""
        if not self.terms:
            return 0
        if set(self.terms) != {(0, 0, 0)}:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms[(0, 0, 0)]

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)})"


ZERO = MultiPoly()
ONE = MultiPoly.constant(1)
P = MultiPoly.variable("p")
Q = MultiPoly.variable("q")
X = MultiPoly.variable("x")


def _power_text(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{e}"


def format_poly(poly: MultiPoly) -> str:
    """Render grouped by ascending powers of x, q ascending inside each group.

    The layout matches the conventional display of these series: constants
    first inside a group, ``(1 + q)x``-style parentheses when a group mixes
    several p/q terms.
    """
    if not poly.terms:
        return "0"
    by_x: dict[int, list[tuple[int, int, int]]] = {}
    for key in poly.terms:
        by_x.setdefault(key[2], []).append(key)
    groups = []
    for ex in sorted(by_x):
        inner_parts = []
        for key in sorted(by_x[ex], key=lambda k: (k[1], k[0])):
            ep, eq, _ = key
            coeff = poly.terms[key]
            vars_text = _power_text("p", ep) + _power_text("q", eq)
            if vars_text and abs(coeff) == 1:
                text = vars_text if coeff == 1 else "-" + vars_text
            else:
                text = f"{coeff}{vars_text}"
            inner_parts.append(text)
        inner = " + ".join(inner_parts).replace("+ -", "- ")
        x_text = _power_text("x", ex)
        if not x_text:
            groups.append(inner)
        elif len(inner_parts) == 1 and inner not in ("1", "-1"):
            groups.append(inner + x_text)
        elif inner == "1":
            groups.append(x_text)
        elif inner == "-1":
            groups.append("-" + x_text)
        else:
            groups.append(f"({inner}){x_text}")
    return " + ".join(groups).replace("+ -", "- ")


class SeriesZ:
    """A power series in z, exact through ``z**order``.

    ``coeffs[n]`` is the ``MultiPoly`` coefficient of ``z**n``.  Binary
    operations require equal orders; use :meth:`truncate` to align.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.constant(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs[: order + 1])
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "SeriesZ":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "SeriesZ":
        return cls([ONE], order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesZ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _coerce(self, other) -> "SeriesZ":
        if isinstance(other, (int, MultiPoly)):
            return SeriesZ([other], self.order)
        if isinstance(other, SeriesZ):
            if other.order != self.order:
                raise ValueError(f"series orders differ: {self.order} vs {other.order}")
            return other
        raise TypeError(f"cannot combine SeriesZ with {type(other).__name__}")

    def __add__(self, other) -> "SeriesZ":
        other = self._coerce(other)
        return SeriesZ([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> "SeriesZ":
        return SeriesZ([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "SeriesZ":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SeriesZ":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SeriesZ":
        if isinstance(other, (int, MultiPoly)):
            return SeriesZ([c * other for c in self.coeffs], self.order)
        other = self._coerce(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return SeriesZ(out, self.order)

    __rmul__ = __mul__

    def reciprocal(self) -> "SeriesZ":
        """Multiplicative inverse; requires constant term exactly 1."""
        if self.coeffs[0] != ONE:
            raise ValueError("reciprocal requires constant term 1")
        out = [ONE] + [ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a:
                    acc = acc + a * out[n - k]
            out[n] = -acc
        return SeriesZ(out, self.order)

    def shift(self, k: int) -> "SeriesZ":
        """Multiply by z**k, keeping the order (top coefficients drop off)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return SeriesZ([ZERO] * k + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "SeriesZ":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return SeriesZ(self.coeffs[: order + 1], order)

    def map_coefficients(self, fn) -> "SeriesZ":
        return SeriesZ([fn(c) for c in self.coeffs], self.order)

    def substitute(self, **values: int) -> "SeriesZ":
        return self.map_coefficients(lambda c: c.substitute(**values))

    def to_json(self) -> dict:
        """Schema: {"order": N, "coefficients": [{"n", "terms": [{p,q,x,coeff}]}]}."""
        coefficients = []
        for n, poly in enumerate(self.coeffs):
            terms = [
                {"p": key[0], "q": key[1], "x": key[2], "coeff": str(poly.terms[key])}
                for key in sorted(poly.terms, key=lambda k: (k[2], k[1], k[0]))
            ]
            coefficients.append({"n": n, "terms": terms})
        return {"order": self.order, "coefficients": coefficients}

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"SeriesZ({format_series(self)})"


def format_series(series: SeriesZ, big_oh: bool = False) -> str:
    """Render ``1 + x z + (x + x^2) z^2 + ...`` with ascending powers of z."""
    parts = []
    for n, poly in enumerate(series.coeffs):
        if not poly:
            continue
        text = format_poly(poly)
        z_text = _power_text("z", n)
        if not z_text:
            parts.append(text)
        elif text == "1":
            parts.append(z_text)
        else:
            multi = len(poly.terms) > 1
            parts.append((f"({text})" if multi else text) + " " + z_text)
    if not parts:
        parts = ["0"]
    if big_oh:
        parts.append(f"O(z^{series.order + 1})")
    return " + ".join(parts)


def reciprocal_example() -> SeriesZ:
    """1/(1 - z - z^2) begins with the Fibonacci numbers (doctest helper)."""
    return SeriesZ([1, -1, -1], 4).reciprocal()
