import doctest

import pytest

import permcycles.polynomials
from permcycles.polynomials import ONE, P, Q, X, ZERO, MultiPoly, SeriesZ, format_poly, format_series


def test_doctests():
    failures, _ = doctest.testmod(permcycles.polynomials)
    assert failures == 0


def test_ring_axioms_on_samples():
    a = P + Q * X
    b = MultiPoly.constant(3) - Q
    c = X ** 2 - P
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


def test_distributivity_example():
    assert (P + Q * X) * X == P * X + Q * X ** 2


def test_substitute_and_coefficient():
    poly = P * X + Q * X ** 2
    assert poly.substitute(x=1) == P + Q
    assert poly.substitute(x=0) == ZERO
    assert poly.coefficient("x", 2) == Q
    assert poly.coefficient("x", 0) == ZERO
    assert (Q ** 3).substitute(q=1) == ONE


def test_power_and_int_coercion():
    assert (X + 1) ** 2 == X ** 2 + 2 * X + 1
    assert MultiPoly.constant(5).as_int() == 5
    with pytest.raises(ValueError):
        (X + 1).as_int()


def test_series_reciprocal_geometric():
    geometric = SeriesZ([ONE, -X], 5).reciprocal()
    assert all(geometric[n] == X ** n for n in range(6))


def test_series_reciprocal_identity():
    one = SeriesZ.one(4)
    assert one.reciprocal() == one


def test_series_reciprocal_fibonacci():
    # long-division oracle for 1/(1 - z - z^2)
    expected = [1, 1, 2, 3, 5, 8, 13]
    rem = [1] + [0] * 6
    quotient = []
    for _ in range(7):
        c = rem[0]
        quotient.append(c)
        rem = [rem[1] + c, rem[2] + c] + rem[3:] + [0]
    series = SeriesZ([1, -1, -1], 6).reciprocal()
    assert [series[n].as_int() for n in range(7)] == expected == quotient


def test_series_mul_inverse_roundtrip():
    series = SeriesZ([ONE, P + X, Q * X, ONE - P], 6)
    product = series * series.reciprocal()
    assert product == SeriesZ.one(6)


def test_reciprocal_requires_unit():
    with pytest.raises(ValueError):
        SeriesZ([MultiPoly.constant(2), ONE], 3).reciprocal()


def test_format_poly_layout():
    poly = MultiPoly({(0, 0, 1): 1, (0, 1, 1): 1, (0, 0, 2): 3, (0, 0, 3): 1})
    assert format_poly(poly) == "(1 + q)x + 3x^2 + x^3"


def test_format_series_layout():
    series = SeriesZ([ONE, X, X + X ** 2], 2)
    assert format_series(series) == "1 + x z + (x + x^2) z^2"


def test_series_json_roundtrip():
    series = SeriesZ([ONE, P * X + 2 * Q], 1)
    data = series.to_json()
    assert data["order"] == 1
    rebuilt = SeriesZ(
        [
            MultiPoly({(t["p"], t["q"], t["x"]): int(t["coeff"]) for t in entry["terms"]})
            for entry in data["coefficients"]
        ],
        data["order"],
    )
    assert rebuilt == series
