import itertools

import pytest

from permcycles.exceptions import ParseError
from permcycles.patterns import (
    Pattern,
    avoids,
    boundary_word,
    count_cyclic_occurrences,
    count_occurrences,
    parse_pattern,
)
from permcycles.permutations import (
    enumerate_permutations,
    parse_permutation,
    reduce_word,
    standard_cycle_form,
    flatten,
)


def test_parse_dashes_and_adjacency():
    pat = parse_pattern("3-21")
    assert [d for d, _ in pat.slots] == [3, 2, 1]
    assert pat.adjacency == frozenset({2})
    assert parse_pattern("123").adjacency == frozenset({1, 2})
    assert parse_pattern("1-2-3").adjacency == frozenset()


def test_parse_primes():
    pat = parse_pattern("2-1-2'")
    assert pat.slots == ((2, False), (1, False), (2, True))
    assert pat.adjacency == frozenset()
    assert parse_pattern("2-1-2′") == pat  # unicode prime accepted
    assert pat.text() == "2-1-2'"


@pytest.mark.parametrize("bad", ["", "102", "1--2", "-12", "12-", "1''2", "ab", "11"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_pattern(bad)


def test_boundary_blocks_adjacency():
    # 21 does not occur in (2)(1), but 2-1 does
    cf = parse_permutation("(2)(1)")
    assert count_cyclic_occurrences(cf, parse_pattern("21")) == 0
    assert count_cyclic_occurrences(cf, parse_pattern("2-1")) == 1
    assert avoids(cf, parse_pattern("21"))
    assert not avoids(cf, parse_pattern("2-1"))


def test_unique_decreasing_triple():
    assert count_occurrences((3, 2, 1), parse_pattern("3-2-1")) == 1


def test_cyclic_inversions_pair_scan_oracle():
    cf = parse_permutation("(275368)(14)")
    word = flatten(cf).images
    oracle = sum(
        1 for i in range( len(word)) for j in range(i + 1, len(word)) if word[i] > word[j]
    )
    assert count_cyclic_occurrences(cf, parse_pattern("2-1")) == oracle


def test_cyclic_adjacent_pairs():
    assert count_cyclic_occurrences(parse_permutation("(123)"), parse_pattern("12")) == 2
    cf = parse_permutation("(3)(2)(1)")
    assert count_cyclic_occurrences(cf, parse_pattern("12")) == 0


def test_length_one_pattern_counts_positions():
    assert count_occurrences((2, 1, 3), parse_pattern("1")) == 3


def test_pattern_longer_than_word():
    assert count_occurrences((1,), parse_pattern("12")) == 0
    assert avoids(parse_permutation("(1)"), parse_pattern("1-2-3"))


def _reduction_oracle(word, pattern_word):
    k = len(pattern_word)
    return sum(
        1
        for positions in itertools.combinations(range(len(word)), k)
        if reduce_word([word[i] for i in positions]) == pattern_word
    )


@pytest.mark.parametrize("text", ["1-2", "2-1", "1-2-3", "3-1-2", "2-3-1", "1-3-2"])
def test_classical_reduction_equivalence(text):
    # fully dashed total-order patterns agree with the subsequence-reduction oracle
    pattern = parse_pattern(text)
    pattern_word = tuple(d for d, _ in pattern.slots)
    for n in range(6):
        for word in itertools.permutations(range(1, n + 1)):
            assert count_occurrences(word, pattern) == _reduction_oracle(word, pattern_word)


def test_consecutive_matches_window_oracle():
    pattern = parse_pattern("132")
    for word in itertools.permutations(range(1, 6)):
        windows = sum(
            1
            for i in range(3)
            if reduce_word(word[i : i + 3]) == (1, 3, 2)
        )
        assert count_occurrences(word, pattern) == windows


@pytest.mark.parametrize(
    "pop,parts",
    [
        ("212'", ("213", "312")),
        ("121'", ("132", "231")),
        ("2-1-2'", ("2-1-3", "3-1-2")),
        ("1-2-1'", ("2-3-1", "1-3-2")),
    ],
)
def test_pop_union_identity(pop, parts):
    pop_pattern = parse_pattern(pop)
    part_patterns = [parse_pattern(p) for p in parts]
    for n in range(7):
        for word in itertools.permutations(range(1, n + 1)):
            assert count_occurrences(word, pop_pattern) == sum(
                count_occurrences(word, p) for p in part_patterns
            )


def test_pop_union_identity_cyclic():
    pop = parse_pattern("212'")
    parts = [parse_pattern("213"), parse_pattern("312")]
    for perm in enumerate_permutations(6):
        cf = standard_cycle_form(perm)
        assert count_cyclic_occurrences(cf, pop) == sum(
            count_cyclic_occurrences(cf, p) for p in parts
        )


def test_dash_monotonicity():
    # removing an adjacency constraint never decreases the count
    tight = parse_pattern("321")
    looser = [parse_pattern("3-21"), parse_pattern("32-1"), parse_pattern("3-2-1")]
    for word in itertools.permutations(range(1, 7)):
        base = count_occurrences(word, tight)
        for pattern in looser:
            assert count_occurrences(word, pattern) >= base


def test_boundary_rule_vs_classical():
    # cyclic count <= index count of the flattened word; equal when dash-free
    dashed = parse_pattern("1-3-2")
    tight = parse_pattern("132")
    for perm in enumerate_permutations(6):
        cf = standard_cycle_form(perm)
        bw = boundary_word(cf)
        assert count_cyclic_occurrences(cf, dashed) == count_occurrences(bw.word, dashed)
        assert count_cyclic_occurrences(cf, tight) <= count_occurrences(bw.word, tight)


def test_boundary_word_positions():
    bw = boundary_word(parse_permutation("(485)(3)(1276)"))
    assert bw.word == (4, 8, 5, 3, 1, 2, 7, 6)
    assert bw.boundary_after == frozenset({2, 3})


def test_pattern_validation():
    with pytest.raises(ParseError):
        Pattern(((1, False), (1, False)), frozenset())
    with pytest.raises(ParseError):
        Pattern(((1, False),), frozenset({3}))
