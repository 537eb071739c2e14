import itertools

import pytest

from permcycles.exceptions import CapExceeded
from permcycles.patterns import parse_pattern
from permcycles.polynomials import ONE, P, Q, X, MultiPoly
from permcycles.series import (
    avoidance_table,
    brute_force_series,
    catalan,
    catalan_triangle,
    classical_distribution,
    classical_series,
    cyclic_series_x_slice,
    inversion_product_series,
    joint_distribution,
    narayana,
    qnumber,
    single_cycle_distribution,
    stirling2,
)


def test_qnumber_values():
    assert qnumber(1, "pqx") == X
    assert qnumber(2, "x_top") == 1 + X * Q
    assert qnumber(3, "plain") == 1 + Q + Q ** 2
    assert qnumber(1, "plain") == ONE
    assert qnumber(1, "x_top") == X
    assert qnumber(3, "pqx") == P ** 2 + P * Q + X * Q ** 2
    with pytest.raises(ValueError):
        qnumber(0, "plain")
    with pytest.raises(ValueError):
        qnumber(2, "bogus")


def test_brute_force_series_low_orders():
    series = brute_force_series(parse_pattern("123"), 3)
    assert series[0] == ONE
    assert series[1] == X
    assert series[2] == X + X ** 2
    assert series[3] == (1 + Q) * X + 3 * X ** 2 + X ** 3


def test_joint_two_pattern_series():
    series = brute_force_series(
        [(parse_pattern("1-2"), "p"), (parse_pattern("2-1"), "q")], 2
    )
    assert series[2] == P * X + Q * X ** 2
    assert series[2] == qnumber(1, "pqx") * qnumber(2, "pqx")


def test_brute_force_rejects_bad_marks():
    with pytest.raises(ValueError):
        brute_force_series([(parse_pattern("12"), "z")], 2)
    with pytest.raises(CapExceeded):
        brute_force_series(parse_pattern("12"), 11)


def test_classical_series_inversions():
    series = classical_series(parse_pattern("2-1"), 3)
    assert series[3] == 1 + 2 * Q + 2 * Q ** 2 + Q ** 3
    assert series[2] == 1 + Q


def test_classical_valley_avoidance_direct_scan():
    # independent scan: count length-4 words with no interior strict valley
    def has_valley(word):
        return any(word[i - 1] > word[i] < word[i + 1] for i in range(1, len(word) - 1))

    free = sum(1 for w in itertools.permutations(range(1, 5)) if not has_valley(w))
    assert classical_distribution(parse_pattern("212'"), 4).get(0) == free == 8


def test_inversion_product_series():
    series = inversion_product_series(3)
    assert series[0] == ONE
    assert series[1] == X
    assert series[2] == P * X + Q * X ** 2
    assert series[3] == X * (P + X * Q) * (P ** 2 + P * Q + X * Q ** 2)


def test_inversion_theorem_small():
    joint = brute_force_series(
        [(parse_pattern("1-2"), "p"), (parse_pattern("2-1"), "q")], 6
    )
    assert joint == inversion_product_series(6)


def test_narayana_catalan_stirling_values():
    assert narayana(4, 2) == 6
    assert catalan_triangle(4, 1) == 5
    assert stirling2(4, 2) == 7
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    with pytest.raises(ValueError):
        narayana(3, 4)
    with pytest.raises(ValueError):
        catalan_triangle(3, 0)
    with pytest.raises(ValueError):
        stirling2(3, 4)


def test_narayana_row_symmetry():
    for n in range(1, 9):
        row = [narayana(n, k) for k in range(1, n + 1)]
        assert row == row[::-1]
        assert sum(row) == catalan(n)


def test_catalan_triangle_row_sums():
    for n in range(1, 9):
        assert sum(catalan_triangle(n, m) for m in range(1, n + 1)) == catalan(n)


def test_avoidance_table_rows():
    table = avoidance_table(parse_pattern("1-3-2"), 4)
    assert table[4] == (1, 6, 6, 1)
    table = avoidance_table(parse_pattern("2-1-2'"), 4)
    assert table[4] == (4, 2, 1, 1)
    table = avoidance_table(parse_pattern("1-2-1'"), 4)
    assert table[4] == (1, 3, 3, 1)


def test_single_cycle_distribution_matches_filter():
    pattern = parse_pattern("321")
    for n in range(2, 7):
        direct = single_cycle_distribution(pattern, n)
        table = {}
        from permcycles.patterns import count_cyclic_occurrences
        from permcycles.permutations import enumerate_permutations, standard_cycle_form

        for perm in enumerate_permutations(n):
            cf = standard_cycle_form(perm)
            if cf.cycle_count == 1:
                k = count_cyclic_occurrences(cf, pattern)
                table[k] = table.get(k, 0) + 1
        assert direct == table


def test_x_slice_shifts_single_cycle_layer():
    pattern = parse_pattern("212'")
    series = brute_force_series(pattern, 5)
    sliced = cyclic_series_x_slice(series)
    for n in range(1, 5):
        layer = MultiPoly(
            {(0, k, 0): c for k, c in single_cycle_distribution(pattern, n + 1).items()}
        )
        assert sliced[n] == layer


def test_distribution_caches_are_consistent():
    pattern = parse_pattern("1-2-3")
    for n in range(6):
        joint = joint_distribution(pattern, n)
        assert sum(joint.values()) == max(1, len(list(itertools.permutations(range(n)))))
