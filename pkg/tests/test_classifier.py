import itertools
import random

import pytest

from hsop.classifier import (
    _KeyedSearch,
    admissible,
    conjecture_scan,
    enumerate_minimal,
    enumerate_shard,
    enumeration_bounds,
    find_reduction,
    is_admissible,
    is_minimal,
    merge_shards,
    rules_for,
)
from hsop.conditions import theorem1_check
from hsop.errors import LengthMismatch, PreconditionFailed, UnsupportedDegree
from hsop.series import hsop_numerator
from reference_data import MINIMAL

# --- admissibility -----------------------------------------------------------


def test_counterexample_rejected_by_named_rule():
    report = admissible(6, [6, 6, 6, 20])
    assert not report.verdict
    assert report.rules == ["n6.no_three_in_2_6_17_21"]
    assert report.violations[0].witness == (6, 6, 6)


@pytest.mark.parametrize(
    "n,seq",
    [(8, (2, 3, 4, 5, 6, 7)), (7, (4, 8, 8, 12, 30)), (5, (4, 8, 12)), (3, (4,)), (4, (2, 3))],
)
def test_known_sequences_admissible(n, seq):
    assert admissible(n, seq).verdict


def test_forbidden_pair_quintic():
    report = admissible(5, [4, 8, 22])
    assert "n5.forbid_4_22" in report.rules
    assert admissible(5, [4, 24, 22]).rules == ["n5.forbid_4_22"]


def test_octavic_forbidden_patterns():
    assert "n8.forbid_2_2" in admissible(8, [2, 2, 3, 5, 6, 7]).rules
    assert "n8.forbid_2_3_7_7" in admissible(8, [2, 3, 7, 7, 10, 12]).rules


def test_rule_ids_are_unique():
    for n in range(3, 9):
        ids = [r.rule_id for r in rules_for(n)]
        assert len(ids) == len(set(ids))
        assert all(i.startswith(f"n{n}.") for i in ids)


def test_input_validation():
    with pytest.raises(UnsupportedDegree):
        admissible(9, [4] * 7)
    with pytest.raises(LengthMismatch):
        admissible(5, [4, 8])


# --- reductions and minimality -----------------------------------------------


def test_reduction_examples():
    w = find_reduction(4, [5, 6])
    assert (w.degree, w.left, w.right) == (5, 2, 3)
    assert (w.left_sequence, w.right_sequence) == ((2, 6), (3, 6))

    assert find_reduction(5, [4, 8, 12]) is None

    w = find_reduction(5, [4, 8, 30])
    assert (w.degree, w.left, w.right) == (30, 12, 18)
    assert (w.left_sequence, w.right_sequence) == ((4, 8, 12), (4, 8, 18))


def test_reduction_requires_admissible_input():
    with pytest.raises(PreconditionFailed):
        find_reduction(6, [6, 6, 6, 20])


def test_minimal_examples():
    assert is_minimal(4, [2, 3])
    assert not is_minimal(4, [4, 6])
    assert is_minimal(8, [2, 3, 4, 8, 9, 210])
    assert not is_minimal(6, [6, 6, 6, 20])


def random_admissible(n: int, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    pool = {7: range(2, 181, 2), 8: range(2, 60)}[n]
    pool = list(pool)
    out = []
    while len(out) < count:
        seq = tuple(sorted(rng.choice(pool) for _ in range(n - 2)))
        if is_admissible(n, seq):
            out.append(seq)
    return out


def all_admissible(n: int, top: int):
    for seq in itertools.combinations_with_replacement(range(1, top + 1), n - 2):
        if is_admissible(n, seq):
            yield seq


@pytest.mark.parametrize("n,top", [(3, 40), (4, 30), (5, 48), (6, 26)])
def test_reduction_soundness_and_necessity_exhaustive(n, top):
    for seq in all_admissible(n, top):
        assert admissible(n, seq).verdict
        assert theorem1_check(n, seq).verdict
        w = find_reduction(n, seq)
        if w is not None:
            assert w.left + w.right == w.degree
            assert admissible(n, w.left_sequence).verdict
            assert admissible(n, w.right_sequence).verdict


@pytest.mark.parametrize("n", [7, 8])
def test_reduction_soundness_and_necessity_sampled(n):
    for seq in random_admissible(n, 2000, seed=n):
        assert theorem1_check(n, seq).verdict
        w = find_reduction(n, seq)
        if w is not None:
            assert is_admissible(n, w.left_sequence) and is_admissible(n, w.right_sequence)


@pytest.mark.parametrize("n,top,limit", [(4, 30, None), (5, 48, None), (6, 30, 400), (7, 180, 150), (8, 59, 150)])
def test_admissible_numerators_nonnegative(n, top, limit):
    seqs = random_admissible(n, limit, seed=100 + n) if n >= 7 else list(all_admissible(n, top))
    if limit:
        seqs = seqs[:limit]
    for seq in seqs:
        assert hsop_numerator(n, seq).first_negative() is None, seq


@pytest.mark.parametrize("n", [7, 8])
def test_keyed_search_agrees_with_direct_reduction(n):
    search = _KeyedSearch(n, 180 if n == 7 else 60)
    for seq in random_admissible(n, 1500, seed=7 * n):
        assert search.minimal(seq) == (find_reduction(n, seq) is None), seq


@pytest.mark.parametrize("n,top", [(4, 12), (5, 48)])
def test_large_maximum_never_minimal(n, top):
    for seq in all_admissible(n, top):
        if seq[-1] > top // 2:
            assert find_reduction(n, seq) is not None, seq


# --- enumeration -------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_enumeration_matches_printed_lists(n):
    assert set(enumerate_minimal(n)) == MINIMAL[n]


def test_enumerated_maxima_within_half_bound():
    for n in (4, 5, 6):
        bound = enumeration_bounds(n)[-1]
        assert max(s[-1] for s in enumerate_minimal(n)) <= bound // 2


def test_shards_partition_and_merge_deterministically():
    whole = enumerate_minimal(6)
    for k in (4, 16):
        parts = [enumerate_shard(6, i, k) for i in range(k)]
        flat = [s for p in parts for s in p]
        assert len(flat) == len(set(flat))
        assert merge_shards(parts) == whole
        assert enumerate_minimal(6, shards=k) == whole


def test_shard_index_checked():
    with pytest.raises(ValueError):
        enumerate_shard(6, 4, 4)


# --- empirical scan ----------------------------------------------------------


def test_scan_single_sequence():
    report = conjecture_scan(3, 4, 4)
    assert report.checked == 1 and report.flagged == []


def test_scan_octavic_small_box_matches_forbidden_patterns():
    report = conjecture_scan(8, 2, 7)
    forbids = [r for r in rules_for(8) if r.kind == "forbid"]
    expected = [
        s
        for s in itertools.combinations_with_replacement(range(2, 8), 6)
        if theorem1_check(8, s).verdict and any(r.witness(s) is not None for r in forbids)
    ]
    assert report.checked > 0
    assert sorted(report.flagged) == sorted(expected)


def test_scan_sextic_flags_only_inadmissible():
    report = conjecture_scan(6, 2, 20)
    assert report.flagged
    assert (6, 6, 6, 20) not in report.flagged
    assert all(not admissible(6, s).verdict for s in report.flagged)
