"""Whole-group censuses, kernel backends, and the bundled class table."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclepat import census, kernels, perms

pattern_names = st.sampled_from(perms.PATTERN_NAMES)


@given(pattern_names, pattern_names, st.integers(min_value=1, max_value=5))
@settings(deadline=None, max_examples=30)
def test_distribution_matches_direct_enumeration(name_b, name_w, n):
    p_b, p_w = perms.parse_pattern(name_b), perms.parse_pattern(name_w)
    brute: dict = {}
    for word in perms.enumerate_permutations(n):
        cycles = perms.to_cycle_form(word)
        b, w = perms.count_pair(cycles, p_b, p_w)
        key = (b, w, len(cycles))
        brute[key] = brute.get(key, 0) + 1
    assert census.distribution((name_b, name_w), n, "joint", True) == brute


@given(pattern_names, pattern_names, st.integers(min_value=1, max_value=6))
@settings(deadline=None, max_examples=20)
def test_distribution_counts_sum_to_factorial(name_b, name_w, n):
    for stat in ("sum", "joint"):
        dist = census.distribution((name_b, name_w), n, stat, False)
        assert sum(dist.values()) == math.factorial(n)


def test_sum_distribution_is_the_joint_marginal():
    for n in range(1, 6):
        joint = census.distribution(("2-13", "31-2"), n, "joint", False)
        summed = census.distribution(("2-13", "31-2"), n, "sum", False)
        folded: dict = {}
        for (b, w), count in joint.items():
            folded[b + w] = folded.get(b + w, 0) + count
        assert folded == summed


def test_unknown_statistic_rejected():
    with pytest.raises(ValueError):
        census.distribution(("2-13", "2-13"), 3, "median")


def test_backends_agree_cell_for_cell():
    if "numba" not in kernels.available_backends():
        pytest.skip("numba backend unavailable")
    for n in range(6):
        for convention in perms.CONVENTIONS:
            fast = kernels.pair_census(n, convention, backend="numba")
            pure = kernels.pair_census(n, convention, backend="python")
            assert np.array_equal(fast, pure)


def test_worker_split_matches_single_process():
    lone = kernels.pair_census(5)
    split = kernels.pair_census(5, workers=3)
    assert np.array_equal(lone, split)


def test_single_census_matches_direct_totals():
    pattern = perms.parse_pattern("2-13")
    for n in range(1, 6):
        table = kernels.single_census(n, pattern)
        brute: dict = {}
        for word in perms.enumerate_permutations(n):
            cycles = perms.to_cycle_form(word)
            key = (perms.count_cyclic(cycles, pattern).total, len(cycles))
            brute[key] = brute.get(key, 0) + 1
        got = {
            (occ, cyc): int(table[occ, cyc])
            for occ in range(table.shape[0])
            for cyc in range(table.shape[1])
            if table[occ, cyc]
        }
        assert got == brute


@given(pattern_names, st.integers(min_value=1, max_value=5))
@settings(deadline=None, max_examples=20)
def test_vincular_census_matches_word_counts(name, n):
    pattern = perms.parse_pattern(name)
    brute: dict = {}
    for word in perms.enumerate_permutations(n):
        k = perms.count_vincular(word, pattern)
        brute[k] = brute.get(k, 0) + 1
    assert census.vincular_distribution(name, n) == brute


def test_weight_identity_has_no_failures():
    for n in range(7):
        assert kernels.weight_identity_failures(n) == 0


def test_enumeration_cap_and_env(monkeypatch):
    with pytest.raises(census.EnumerationLimitError):
        census.distribution(("2-13", "2-13"), 6, cap=5)
    monkeypatch.setenv("CPL_MAX_N", "4")
    assert census.enumeration_cap() == 4
    with pytest.raises(census.EnumerationLimitError):
        census.partition_classes(5)


def test_partition_classes_is_a_sorted_partition():
    classes = census.partition_classes(4)
    seen = [pair for members in classes for pair in members]
    assert len(seen) == 144 and len(set(seen)) == 144
    assert classes == sorted(classes, key=lambda cls: cls[0])
    for members in classes:
        assert members == sorted(members)


def test_partition_refines_with_larger_bound():
    assert len(census.partition_classes(3)) <= len(census.partition_classes(4))


def test_class_count_progression_is_monotone():
    records = census.class_count_progression(5)
    plain = [r["plain"] for r in records]
    refined = [r["cycles"] for r in records]
    assert plain == sorted(plain) and refined == sorted(refined)
    assert all(r["plain"] <= r["cycles"] for r in records)
    assert plain[-1] == len(census.partition_classes(5))


def test_the_twelve_patterns_split_into_three_plain_classes():
    classes = census.partition_vincular_patterns(6)
    assert sorted(len(c) for c in classes) == [4, 4, 4]


def test_bundled_table_shape():
    groups = census.conjectured_equivalences()
    assert len(groups) == 29
    assert {g.kind for g in groups} <= {"plain", "cycles"}
    assert min(g.row for g in groups) == 1 and max(g.row for g in groups) == 27
    for group in groups:
        assert len(group.pairs) >= 2
        for p_b, p_w in group.pairs:
            assert p_b in perms.PATTERN_NAMES and p_w in perms.PATTERN_NAMES


def test_bundled_table_holds_at_small_bounds():
    records = census.check_conjectured_equivalences(4)
    assert all(record["holds"] for record in records)


def test_bundled_table_first_refutation():
    records = census.check_conjectured_equivalences(6)
    failing = [r for r in records if not r["holds"]]
    assert [(r["row"], r["kind"]) for r in failing] == [(27, "cycles")]
    assert failing[0]["first_failure"]["n"] == 6


def test_diagonal_collapse_small():
    records = census.check_diagonal_collapse(5)
    assert len(records) == 7
    assert all(record["holds"] for record in records)


def test_exchange_identities_small():
    records = census.check_exchange_identities(5)
    assert all(record["holds"] for record in records)


def test_anchor_identities_small():
    report = census.check_anchor_identities(5)
    assert report["complement_holds"]
    assert report["reverse_counterexample"]["n"] == 3


def test_dmap_transport_report():
    report = census.check_dmap_transport(5)
    assert not report["claim_holds"]
    assert report["witness_first_failure"]["n"] == 4
    assert report["witness_first_failure"]["word"] == [2, 4, 1, 3]
    assert report["cycles_preserved"]
    assert report["plain_census_equal"]
    assert report["census_equal_up_to"] == 5
