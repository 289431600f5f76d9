import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hsop.combinatorics import (
    covariant_dim,
    dimension_table,
    ferrers_count,
    format_table_tsv,
    gaussian_binomial,
    invariant_dim,
    vanishing_classified,
)
from reference_data import printed_grid, printed_grid_square


def brute_partitions(n: int, m: int, t: int) -> int:
    """Count non-increasing m-tuples with entries in 0..n summing to t."""
    return sum(1 for parts in itertools.combinations_with_replacement(range(n + 1), m) if sum(parts) == t)


def test_ferrers_examples():
    assert ferrers_count(7, 2, 6) == 4
    assert ferrers_count(5, 3, 0) == 1
    assert ferrers_count(3, 2, 7) == 0
    assert ferrers_count(3, 2, -1) == 0


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("m", range(0, 9))
def test_ferrers_matches_brute_force(n, m):
    for t in range(-1, n * m + 2):
        assert ferrers_count(n, m, t) == brute_partitions(n, m, t)


def test_gaussian_binomial_is_symmetric_polynomial():
    coeffs = gaussian_binomial(4, 3)
    assert sum(coeffs) == 35
    assert list(coeffs) == list(reversed(coeffs))


@given(st.integers(0, 25), st.integers(0, 25), st.integers(-5, 700))
@settings(max_examples=300, deadline=None)
def test_ferrers_symmetries(n, m, t):
    assert ferrers_count(n, m, t) == ferrers_count(m, n, t)
    assert ferrers_count(n, m, t) == ferrers_count(n, m, n * m - t)


def test_covariant_examples():
    assert covariant_dim(7, 2, 2) == 1
    assert covariant_dim(5, 3, 1) == 0
    assert covariant_dim(6, 15, 0) == 1
    assert covariant_dim(4, 2, 10) == 0


def test_invariant_examples():
    assert invariant_dim(8, 14) == 31
    assert invariant_dim(12, 12) == 127
    assert invariant_dim(5, 0) == 1


def test_covariant_nonnegative_exhaustive_small():
    for n in range(1, 13):
        for m in range(1, 13):
            for a in range(0, n * m + 1):
                assert covariant_dim(n, m, a) >= 0


def test_covariant_nonnegative_random_sample():
    rng = random.Random(7)
    for _ in range(200):
        n, m = rng.randint(1, 30), rng.randint(1, 30)
        assert covariant_dim(n, m, rng.randint(0, n * m)) >= 0


def test_hermite_reciprocity():
    for n in range(1, 21):
        for m in range(1, 21):
            assert invariant_dim(n, m) == invariant_dim(m, n)


def test_vanishing_matches_dimension_grid():
    for n in range(1, 21):
        for m in range(1, 21):
            assert vanishing_classified(n, m) == (invariant_dim(n, m) == 0), (n, m)


def test_vanishing_examples():
    assert vanishing_classified(10, 7)
    assert not vanishing_classified(4, 2)
    assert vanishing_classified(3, 6)


def test_table_matches_printed_grid():
    for (n, m), h in printed_grid().items():
        assert invariant_dim(n, m) == h, (n, m)


def test_table_full_square_by_reciprocity():
    grid = dimension_table(18, 18)
    for (n, m), h in printed_grid_square(18).items():
        if h is not None:
            assert grid[m - 1][n - 1] == h


def test_table_tsv_layout():
    text = format_table_tsv(18, 18)
    lines = text.splitlines()
    assert len(lines) == 19
    assert lines[0].split("\t") == ["m\\n"] + [str(n) for n in range(1, 19)]
    row14 = lines[14].split("\t")
    assert row14[0] == "14" and row14[8] == "31"
    assert lines[1].split("\t")[1:] == ["."] * 18
