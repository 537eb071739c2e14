import pytest

from permcycles.operators import (
    FAMILIES,
    NotInClassError,
    apply_operator,
    apply_sequence,
    check_321_two_cycle,
    first_peak_distribution,
    flattened_inverse,
    generate,
    get_family,
    operator_sequence,
    transport,
    two_cycle_first_cycle_distribution,
)
from permcycles.paths import enumerate_dyck, path_stats
from permcycles.patterns import avoids, count_cyclic_occurrences, parse_pattern
from permcycles.permutations import enumerate_permutations, parse_permutation, standard_cycle_form
from permcycles.series import catalan, catalan_triangle, narayana


def test_peak_family_examples():
    fam = get_family("dyck_peaks")
    assert apply_operator(fam, "", 0) == "NS"
    assert apply_operator(fam, "NS", 1) == "NNSS"
    assert apply_operator(fam, "NS", 0) == "NSNS"
    assert apply_operator(fam, "NSNS", 2) == "NSNNSS"
    with pytest.raises(ValueError):
        apply_operator(fam, "NS", 2)


def test_avoid123_family_examples():
    fam = get_family("avoid_123")
    one = parse_permutation("(1)")
    assert apply_operator(fam, one, 0) == parse_permutation("(2)(1)")
    twelve = parse_permutation("(12)")
    assert apply_operator(fam, twelve, 1) == parse_permutation("(132)")


def test_avoid312_zero_operator_shifts():
    fam = get_family("avoid_312")
    assert apply_operator(fam, parse_permutation("(12)"), 0) == parse_permutation("(23)(1)")


def test_operator_sequences():
    assert operator_sequence("dyck_peaks", "NNSS") == (0, 1)
    assert operator_sequence("avoid_123", parse_permutation("(12)")) == (0, 1)
    assert operator_sequence("avoid_123", parse_permutation("(132)")) == (0, 1, 1)
    assert apply_sequence("avoid_123", (0, 1, 1)) == parse_permutation("(132)")


def test_operator_sequence_rejects_non_members():
    # (123) flattens to the word 123 which contains 1-2-3
    with pytest.raises(NotInClassError):
        operator_sequence("avoid_123", parse_permutation("(123)"))
    with pytest.raises(NotInClassError):
        operator_sequence("avoid_213", parse_permutation("(2)(13)"))


def test_sequence_roundtrip_all_families():
    for name, family in FAMILIES.items():
        for n in range(1, 6):
            for obj in generate(family, n):
                seq = operator_sequence(family, obj)
                assert len(seq) == n and seq[0] == 0
                assert apply_sequence(family, seq) == obj


def test_generation_matches_avoiders():
    for name in ("avoid_123", "avoid_132", "avoid_213", "avoid_312"):
        family = get_family(name)
        pattern = parse_pattern(family.avoided)
        for n in range(1, 7):
            generated = generate(family, n)
            avoiders = {
                standard_cycle_form(p)
                for p in enumerate_permutations(n)
                if avoids(standard_cycle_form(p), pattern)
            }
            assert generated == avoiders


def test_generation_matches_dyck():
    for name in ("dyck_peaks", "dyck_returns"):
        for n in range(1, 7):
            assert generate(name, n) == set(enumerate_dyck(n))


def test_transport_statistics():
    for n in range(1, 7):
        for path in enumerate_dyck(n):
            stats = path_stats(path)
            assert transport(path, "dyck_peaks", "avoid_123").cycle_count == stats.peaks
            assert transport(path, "dyck_peaks", "avoid_132").cycle_count == stats.peaks
            assert transport(path, "dyck_returns", "avoid_213").cycle_count == stats.returns
            assert transport(path, "dyck_returns", "avoid_312").cycle_count == stats.returns


def test_transport_roundtrip_and_cross():
    for n in range(1, 7):
        for path in enumerate_dyck(n):
            image = transport(path, "dyck_peaks", "avoid_132")
            assert transport(image, "avoid_132", "dyck_peaks") == path
            cross = transport(image, "avoid_132", "avoid_123")
            assert cross.cycle_count == image.cycle_count


def test_transport_example_two_peaks():
    path = "NNSSNNSS"  # semilength 4, two peaks
    image = transport(path, "dyck_peaks", "avoid_123")
    assert image.size == 4 and image.cycle_count == 2


def test_transport_rejects_mixed_triples():
    with pytest.raises(ValueError):
        transport("NS", "dyck_peaks", "avoid_213")


def test_avoider_counts_match_closed_forms():
    for n in range(1, 7):
        by_cycles: dict[int, int] = {}
        for cf in generate("avoid_132", n):
            by_cycles[cf.cycle_count] = by_cycles.get(cf.cycle_count, 0) + 1
        assert by_cycles == {k: narayana(n, k) for k in range(1, n + 1) if narayana(n, k)}
        by_cycles = {}
        for cf in generate("avoid_312", n):
            by_cycles[cf.cycle_count] = by_cycles.get(cf.cycle_count, 0) + 1
        assert by_cycles == {
            m: catalan_triangle(n, m) for m in range(1, n + 1) if catalan_triangle(n, m)
        }


def test_flattened_inverse_examples():
    assert flattened_inverse(parse_permutation("(2)(1)")) == parse_permutation("(2)(1)")
    assert flattened_inverse(parse_permutation("(123)")) == parse_permutation("(123)")
    assert flattened_inverse(parse_permutation("(1423)")) == parse_permutation("(1342)")


def test_flattened_inverse_involution_exhaustive():
    p312 = parse_pattern("3-1-2")
    p231 = parse_pattern("2-3-1")
    for perm in enumerate_permutations(6):
        cf = standard_cycle_form(perm)
        mapped = flattened_inverse(cf)
        assert flattened_inverse(mapped) == cf
        assert mapped.cycle_count == cf.cycle_count
        assert count_cyclic_occurrences(cf, p312) == count_cyclic_occurrences(mapped, p231)


def test_321_two_cycle_identity():
    assert check_321_two_cycle(2)
    assert check_321_two_cycle(4)
    assert check_321_two_cycle(6)


def test_321_one_cycle_catalan():
    from permcycles.series import single_cycle_distribution

    pattern = parse_pattern("3-2-1")
    for n in range(2, 8):
        assert single_cycle_distribution(pattern, n).get(0, 0) == catalan(n - 1)


def test_first_peak_distribution_matches_catalan_triangle():
    # first peak at height k is equidistributed with k returns
    for n in range(1, 7):
        dist = first_peak_distribution(n)
        assert dist == {k: catalan_triangle(n, k) for k in range(1, n + 1) if catalan_triangle(n, k)}


def test_two_cycle_distribution_small():
    assert two_cycle_first_cycle_distribution(2) == {1: 1}


def test_admissible_range_growth():
    # after operator i > 0 the admissible count becomes i (peaks triple)
    fam = get_family("dyck_peaks")
    path = "NSNSNS"
    for i in range(1, 4):
        assert fam.admissible(fam.apply(path, i)) == i
    rho = get_family("avoid_123")
    cf = parse_permutation("(3)(2)(1)")
    for i in range(1, 4):
        image = rho.apply(cf, i)
        assert rho.admissible(image) == i
        # the first i-1 cycles of the image are singletons
        assert all(len(c) == 1 for c in image.cycles[: i - 1])
