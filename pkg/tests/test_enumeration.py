import random
from itertools import permutations
from math import factorial

import pytest

from br_automata import (
    CensusTooLarge,
    UpdateRule,
    canonical_form,
    census,
    classify_rule,
    division_classes,
    induced_by_game,
    induced_rule,
    is_realizable,
    partition_of,
    synthesize_matrix,
)
from br_automata.enumeration import (
    all_realizable_rules,
    census_block,
    pair_table,
    rule_from_index,
    rule_index,
    violating_pair,
)


def test_classify_examples(hawk_dove):
    assert classify_rule(induced_rule(hawk_dove, 2))
    assert not classify_rule(UpdateRule(2, 2, (1, 2, 1)))
    assert violating_pair(UpdateRule(2, 2, (1, 2, 1))) == (1, 2)
    for k, d in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        assert classify_rule(UpdateRule.constant(k, d, 2))


def test_canonical_form_examples(hawk_dove):
    F = induced_rule(hawk_dove, 2)
    assert canonical_form(F) == canonical_form(F.relabeled((2, 1)))
    assert canonical_form(UpdateRule.constant(3, 2, 3)) == UpdateRule.constant(3, 2, 1)
    realizable = [rule_from_index(2, 2, i) for i in range(8)]
    realizable = [F for F in realizable if classify_rule(F)]
    assert len(realizable) == 6
    assert len({canonical_form(F) for F in realizable}) == 3


def test_canonical_form_idempotent_and_minimal():
    rng = random.Random(0)
    for _ in range(50):
        F = rule_from_index(3, 2, rng.randrange(3 ** 6))
        C = canonical_form(F)
        assert canonical_form(C) == C
        assert all(C.outputs <= F.relabeled(s).outputs for s in permutations((1, 2, 3)))


def test_index_round_trip():
    for i in (0, 1, 17, 3 ** 6 - 1):
        assert rule_index(rule_from_index(3, 2, i)) == i
    assert rule_from_index(2, 2, 0).outputs == (1, 1, 1)
    assert rule_from_index(2, 2, 1).outputs == (1, 1, 2)


@pytest.mark.parametrize("k,d,n,classes", [(2, 2, 6, 3), (3, 2, 285, 52), (2, 3, 8, 5)])
def test_small_censuses(k, d, n, classes):
    c = census(k, d)
    assert (c.non_identical, c.classes) == (n, classes)
    assert sum(c.orbit_sizes) == c.non_identical
    assert all(factorial(k) % o == 0 for o in c.orbit_sizes)
    assert all(canonical_form(F) == F for F in c.representatives)


@pytest.mark.parametrize("k,d", [(2, 2), (3, 2), (2, 3), (2, 4)])
def test_table_filter_matches_direct_classification(k, d):
    direct = [rule_from_index(k, d, i) for i in range(k ** len(rule_from_index(k, d, 0).outputs))]
    direct = [F for F in direct if classify_rule(F)]
    assert all_realizable_rules(k, d) == direct


def test_table_filter_matches_direct_classification_sampled_3_3():
    accepted = {F.outputs for F in all_realizable_rules(3, 3)}
    rng = random.Random(33)
    sample = [rule_from_index(3, 3, rng.randrange(3 ** 10)) for _ in range(400)]
    sample += rng.sample(all_realizable_rules(3, 3), 100)
    for F in sample:
        assert classify_rule(F) == (F.outputs in accepted)


def test_circuit_and_geometric_paths_agree_3_2():
    for i in range(3 ** 6):
        F = rule_from_index(3, 2, i)
        assert classify_rule(F) == is_realizable(partition_of(F))


def test_circuit_and_geometric_paths_agree_random_4_2():
    rng = random.Random(42)
    realizable = all_realizable_rules(4, 2)
    rules = [rule_from_index(4, 2, rng.randrange(4 ** 10)) for _ in range(9000)]
    rules += rng.sample(realizable, 1000)
    for F in rules:
        assert classify_rule(F) == is_realizable(partition_of(F)), F


def test_classify_permutation_invariant():
    rng = random.Random(7)
    for _ in range(200):
        F = rule_from_index(4, 2, rng.randrange(4 ** 10))
        sigma = [1, 2, 3, 4]
        rng.shuffle(sigma)
        assert classify_rule(F) == classify_rule(F.relabeled(sigma))


def test_pair_table_symmetric():
    table = pair_table(3, 2)
    for code in range(3 ** 6):
        digits = [(code // 3 ** p) % 3 for p in range(6)]
        swapped = sum((3 - t) % 3 * 3 ** p for p, t in enumerate(digits))
        assert table[code] == table[swapped]


def test_split_independence():
    whole = census_block(3, 2, 0, 3 ** 6, pair_table(3, 2))
    parts = census_block(3, 2, 0, 100, pair_table(3, 2))
    parts.update(census_block(3, 2, 100, 101, pair_table(3, 2)))
    parts.update(census_block(3, 2, 101, 3 ** 6, pair_table(3, 2)))
    assert parts == whole
    a = census(4, 2, block=1 << 13)
    b = census(4, 2, block=1 << 17)
    assert (a.non_identical, a.classes, a.representatives) == (b.non_identical, b.classes, b.representatives)


def test_parallel_matches_serial():
    serial = census(3, 3, jobs=1)
    parallel = census(3, 3, jobs=2, block=5000)
    assert serial.representatives == parallel.representatives
    assert serial.orbit_sizes == parallel.orbit_sizes


def test_witnesses_round_trip():
    c = census(3, 2, witness=True)
    for F, M in zip(c.representatives, c.witnesses):
        assert induced_rule(M, 2) == F


def test_witnesses_round_trip_3_3():
    c = census(3, 3)
    for F in c.representatives:
        assert induced_rule(synthesize_matrix(F), 3) == F


def test_division_classes():
    assert division_classes(2, 2) == 2
    assert division_classes(3, 2) == 12
    # all-one, {1 point | 3 points} (either end, by reflection), {2 | 2}
    assert division_classes(2, 3) == 3


def test_resource_guard():
    with pytest.raises(CensusTooLarge):
        census(4, 3)
    with pytest.raises(CensusTooLarge):
        census(3, 2, max_rules=100)


@pytest.mark.parametrize("k,d", [(2, 2), (3, 2), (2, 3)])
def test_exact_census_matches_pairwise_below_four(k, d):
    a, b = census(k, d), census(k, d, exact=True)
    assert (a.non_identical, a.classes) == (b.non_identical, b.classes)
    assert a.representatives == b.representatives


def test_pairwise_census_keeps_classes_without_a_game():
    # At k = 4 the pairwise criterion admits classes no game induces; the
    # exact census would drop them (about 5 minutes, so not run here).
    F = canonical_form(UpdateRule(4, 2, (1, 1, 1, 2, 1, 3, 1, 2, 2, 3)))
    assert F in census(4, 2).representatives
    assert not induced_by_game(F)


def test_witness_is_none_without_a_game():
    from br_automata.enumeration import _witness_or_none
    assert _witness_or_none(UpdateRule(4, 2, (2, 3, 3, 1, 3, 1, 2, 4, 4, 1))) is None
    assert _witness_or_none(UpdateRule(2, 2, (2, 2, 1))) is not None
