import itertools

import pytest

from permcycles.exceptions import CapExceeded, ParseError
from permcycles.permutations import (
    CycleForm,
    Permutation,
    arc_diagram,
    cycle_tail,
    enumerate_permutations,
    flatten,
    invert,
    left_to_right_minima,
    parse_permutation,
    reduce_word,
    standard_cycle_form,
    unflatten,
    FORBIDDEN_SHAPE_PAIRS,
)


def test_parse_one_line():
    perm = parse_permutation("47613852")
    assert isinstance(perm, Permutation)
    assert perm(1) == 4 and perm(8) == 2


def test_parse_cycles_normalizes():
    cf = parse_permutation("(275368)(14)")
    assert isinstance(cf, CycleForm)
    assert cf.cycles == ((2, 7, 5, 3, 6, 8), (1, 4))
    # non-standard input is normalized
    assert parse_permutation("(1276)(3)(485)").cycles == ((4, 8, 5), (3,), (1, 2, 7, 6))


def test_parse_singleton():
    assert parse_permutation("1") == Permutation((1,))


def test_parse_large_values_with_commas():
    perm = parse_permutation("10,1,2,3,4,5,6,7,8,9")
    assert perm.size == 10 and perm(1) == 10


@pytest.mark.parametrize(
    "bad", ["", "(", "()", "(12)(2)", "112", "120", "(12", "1 2 2"]
)
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_permutation(bad)


def test_standard_cycle_form_worked_example():
    cf = standard_cycle_form(parse_permutation("47613852"))
    assert str(cf) == "(275368)(14)"
    assert cf.to_permutation() == parse_permutation("47613852")


def test_standard_cycle_form_identity_and_cycle():
    assert str(standard_cycle_form(parse_permutation("123"))) == "(3)(2)(1)"
    assert str(standard_cycle_form(parse_permutation("231"))) == "(123)"


def test_flatten_unflatten():
    cf = parse_permutation("(275368)(14)")
    word = flatten(cf)
    assert word.one_line() == "27536814"
    assert unflatten(word) == cf
    assert flatten(parse_permutation("(2)(1)")).one_line() == "21"
    assert flatten(parse_permutation("(1276)(3)(485)")).one_line() == "48531276"


def test_unflatten_increasing_word():
    assert unflatten(parse_permutation("12345")).cycles == ((1, 2, 3, 4, 5),)


def test_flatten_bijection_exhaustive():
    for n in range(7):
        seen = set()
        for perm in enumerate_permutations(n):
            cf = standard_cycle_form(perm)
            word = flatten(cf)
            assert unflatten(word) == cf
            seen.add(word.images)
            assert len(left_to_right_minima(word.images)) == cf.cycle_count
        assert len(seen) == len(list(itertools.permutations(range(n))))


def test_invert():
    assert invert(parse_permutation("231")) == parse_permutation("312")
    assert invert(parse_permutation("21")) == parse_permutation("21")
    for perm in enumerate_permutations(5):
        assert invert(invert(perm)) == perm


def test_reduce_word():
    assert reduce_word((7, 5, 3, 6, 8)) == (4, 2, 1, 3, 5)
    assert reduce_word(()) == ()


def test_cycle_tail():
    assert cycle_tail((1, 4, 2, 3)) == parse_permutation("312")
    assert cycle_tail((1, 2)) == Permutation((1,))
    assert cycle_tail((2, 7, 5, 3, 6, 8)) == Permutation((4, 2, 1, 3, 5))
    assert cycle_tail((5,)).size == 0
    with pytest.raises(ValueError):
        cycle_tail((2, 1))


def test_cycle_tail_is_bijective():
    # k-cycles on [k] map bijectively onto permutations of [k-1]
    k = 5
    images = set()
    for rest in itertools.permutations(range(2, k + 1)):
        images.add(cycle_tail((1,) + rest))
    assert len(images) == 24


def test_arc_diagram_shapes():
    diagram = arc_diagram(parse_permutation("(12)"))
    assert diagram.shapes == (("empty", "right"), ("right", "empty"))
    trivial = arc_diagram(parse_permutation("(2)(1)"))
    assert trivial.shapes == (("empty", "empty"), ("empty", "empty"))


def test_arc_diagram_never_forbidden():
    for perm in enumerate_permutations(6):
        diagram = arc_diagram(standard_cycle_form(perm))
        for pair in diagram.shapes:
            assert pair not in FORBIDDEN_SHAPE_PAIRS


def test_enumerate_permutations():
    assert len(list(enumerate_permutations(3))) == 6
    assert [p.images for p in enumerate_permutations(0)] == [()]
    values = list(enumerate_permutations(5))
    assert len(values) == 120 and len(set(values)) == 120
    # lexicographic order
    assert values[0].one_line() == "12345" and values[-1].one_line() == "54321"
    with pytest.raises(CapExceeded):
        next(enumerate_permutations(11))


def test_cycle_form_validation():
    with pytest.raises(ParseError):
        CycleForm(((2, 1),))  # does not start with minimum
    with pytest.raises(ParseError):
        CycleForm(((1, 2), (3,)))  # minima not decreasing
    with pytest.raises(ParseError):
        CycleForm(((1, 3),))  # not a partition of [n]


def test_json_export():
    cf = parse_permutation("(275368)(14)")
    assert cf.to_json() == [[2, 7, 5, 3, 6, 8], [1, 4]]
