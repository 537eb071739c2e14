"""Frozen reference expansions of the cyclic-occurrence generating functions.

Each entry transcribes a published series display for one statistic,
keyed by pattern, as ``{n: {(q_exponent, x_exponent): coefficient}}``.
Every coefficient here has been cross-checked against exhaustive
enumeration.  Where the printed source disagrees with enumeration, the
entry stores the enumerated value and an erratum note records what was
printed; the verification suite reports those entries separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polynomials import MultiPoly

_COMMON_LOW = {
    0: {(0, 0): 1},
    1: {(0, 1): 1},
    2: {(0, 1): 1, (0, 2): 1},
}


@dataclass(frozen=True)
class ReferenceSeries:
    key: str
    patterns: tuple[str, ...]  # pattern text(s) sharing this expansion
    order: int
    coefficients: dict  # n -> {(q_exp, x_exp): coefficient}
    errata: tuple[str, ...] = field(default=())

    def poly(self, n: int) -> MultiPoly:
        return MultiPoly({(0, k, m): c for (k, m), c in self.coefficients[n].items()})


def _entry(key, patterns, high, errata=()):
    coefficients = dict(_COMMON_LOW)
    coefficients.update(high)
    return ReferenceSeries(key, patterns, max(high), coefficients, tuple(errata))


REFERENCE_SERIES: dict[str, ReferenceSeries] = {
    ref.key: ref
    for ref in (
        _entry(
            "123",
            ("123",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 3, (1, 1): 2, (2, 1): 1, (0, 2): 7, (1, 2): 4, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 9, (1, 1): 11, (2, 1): 3, (3, 1): 1,
                    (0, 2): 25, (1, 2): 20, (2, 2): 5,
                    (0, 3): 25, (1, 3): 10, (0, 4): 10, (0, 5): 1,
                },
            },
        ),
        _entry(
            "132",
            ("132",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 2, (1, 1): 4, (0, 2): 7, (1, 2): 4, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 7, (1, 1): 14, (2, 1): 3,
                    (0, 2): 20, (1, 2): 30,
                    (0, 3): 25, (1, 3): 10, (0, 4): 10, (0, 5): 1,
                },
            },
        ),
        _entry(
            "213-231-312",
            ("213", "231", "312"),
            {
                3: {(0, 1): 2, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 5, (1, 1): 1, (0, 2): 11, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 16, (1, 1): 8, (0, 2): 45, (1, 2): 5,
                    (0, 3): 35, (0, 4): 10, (0, 5): 1,
                },
            },
        ),
        _entry(
            "321",
            ("321",),
            {
                3: {(0, 1): 2, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 5, (1, 1): 1, (0, 2): 11, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 17, (1, 1): 6, (2, 1): 1, (0, 2): 45, (1, 2): 5,
                    (0, 3): 35, (0, 4): 10, (0, 5): 1,
                },
            },
        ),
        _entry(
            "valleys-212'",
            ("212'",),
            {
                3: {(0, 1): 2, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 4, (1, 1): 2, (0, 2): 11, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 8, (1, 1): 16, (0, 2): 40, (1, 2): 10,
                    (0, 3): 35, (0, 4): 10, (0, 5): 1,
                },
            },
        ),
        _entry(
            "peaks-121'",
            ("121'",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 3, (0, 3): 1},
                4: {(0, 1): 1, (1, 1): 5, (0, 2): 7, (1, 2): 4, (0, 3): 6, (0, 4): 1},
                5: {
                    (0, 1): 1, (1, 1): 18, (2, 1): 5,
                    (0, 2): 15, (1, 2): 35,
                    (0, 3): 25, (1, 3): 10, (0, 4): 10, (0, 5): 1,
                },
            },
            errata=(
                "z^5: the constant of the x-coefficient is printed as 'x'; "
                "enumeration gives 1 (and 1+18+5 = 24 = number of 5-cycles)",
            ),
        ),
        _entry(
            "1-2-3",
            ("1-2-3",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 3, (0, 3): 1},
                4: {
                    (0, 1): 1, (1, 1): 2, (2, 1): 2, (4, 1): 1,
                    (0, 2): 6, (1, 2): 4, (2, 2): 1, (0, 3): 6, (0, 4): 1,
                },
            },
        ),
        _entry(
            "1-3-2",
            ("1-3-2",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 3, (0, 3): 1},
                4: {
                    (0, 1): 1, (1, 1): 1, (2, 1): 3, (3, 1): 1,
                    (0, 2): 6, (1, 2): 4, (2, 2): 1, (0, 3): 6, (0, 4): 1,
                },
            },
        ),
        _entry(
            "2-1-3",
            ("2-1-3",),
            {
                3: {(0, 1): 2, (0, 2): 2, (1, 2): 1, (0, 3): 1},
                4: {
                    (0, 1): 5, (1, 1): 1,
                    (0, 2): 5, (1, 2): 2, (2, 2): 4,
                    (0, 3): 3, (1, 3): 2, (3, 3): 1, (0, 4): 1,
                },
            },
        ),
        _entry(
            "3-1-2-and-2-3-1",
            ("3-1-2", "2-3-1"),
            {
                3: {(0, 1): 2, (0, 2): 2, (1, 2): 1, (0, 3): 1},
                4: {
                    (0, 1): 5, (1, 1): 1,
                    (0, 2): 5, (1, 2): 3, (2, 2): 2, (3, 2): 1,
                    (0, 3): 3, (1, 3): 1, (2, 3): 2, (0, 4): 1,
                },
            },
        ),
        _entry(
            "3-2-1",
            ("3-2-1",),
            {
                3: {(0, 1): 2, (0, 2): 3, (1, 3): 1},
                4: {
                    (0, 1): 5, (1, 1): 1, (0, 2): 9, (1, 2): 2,
                    (1, 3): 3, (2, 3): 3, (4, 4): 1,
                },
            },
        ),
        _entry(
            "2-1-2'",
            ("2-1-2'",),
            {
                3: {(0, 1): 2, (0, 2): 1, (1, 2): 2, (0, 3): 1},
                4: {
                    (0, 1): 4, (1, 1): 2,
                    (0, 2): 2, (2, 2): 7, (3, 2): 2,
                    (0, 3): 1, (1, 3): 2, (2, 3): 1, (3, 3): 2, (0, 4): 1,
                },
            },
            errata=(
                "z^4: the x^3 coefficient is printed as 1+2q+q^3+2q^4; "
                "enumeration gives 1+2q+q^2+2q^3, consistent with the "
                "one-occurrence count 2 and two-occurrence count 1 at n-1 cycles",
            ),
        ),
        _entry(
            "1-2-1'",
            ("1-2-1'",),
            {
                3: {(0, 1): 1, (1, 1): 1, (0, 2): 2, (1, 2): 1, (0, 3): 1},
                4: {
                    (0, 1): 1, (1, 1): 1, (2, 1): 2, (3, 1): 2,
                    (0, 2): 3, (1, 2): 2, (2, 2): 4, (3, 2): 2,
                    (0, 3): 3, (1, 3): 1, (2, 3): 2, (0, 4): 1,
                },
            },
        ),
    )
}
