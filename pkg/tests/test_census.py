"""Tests for prohibition-grid counting and the tuple stratification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secant_census.algebra import binom
from secant_census.census import (
    GridSpec,
    ProhibitionSequence,
    count_r1,
    count_set_S,
    count_traversals_brute,
    count_traversals_dp,
    enumerate_W,
    path_count_gamma,
    r1_grid,
    word_descent_strata,
    _enumerate_W_bruteforce,
)

# Stratified tuple counts (N_0, ..., N_{d-2}), frozen from the exhaustive
# enumeration oracle.
FROZEN_STRATA = {
    2: (4,),
    3: (40, 24),
    4: (364, 784, 148),
    5: (3264, 16920, 11664, 920),
    6: (29260, 308044, 501908, 155012, 5776),
}

# count_r1(t, u) frozen from the exhaustive subset-enumeration oracle.
FROZEN_R1 = {
    1: (0, 4, 12, 24, 40),
    2: (0, 40, 184, 496, 1040),
    3: (0, 364, 2604, 9528, 25240),
}


# ---------------------------------------------------------------------------
# structures


def test_prohibition_sequence_validation():
    seq = ProhibitionSequence((1, 0, 3), 3)
    assert seq.rows == 3
    with pytest.raises(ValueError):
        ProhibitionSequence((), 3)
    with pytest.raises(ValueError):
        ProhibitionSequence((4,), 3)
    with pytest.raises(ValueError):
        ProhibitionSequence((-1,), 3)
    with pytest.raises(ValueError):
        ProhibitionSequence((1,), 0)


def test_grid_spec_validation_and_labels():
    grid = GridSpec(7, 3, ProhibitionSequence((1, 2), 3))
    assert [grid.column_label(c) for c in range(1, 8)] == [1, 2, 3, 1, 2, 3, 1]
    assert not grid.allowed(0, 1)  # label 1 prohibited in row 0
    assert grid.allowed(0, 2)
    assert not grid.allowed(1, 5)  # label 2 prohibited in row 1
    with pytest.raises(ValueError):
        GridSpec(7, 4, ProhibitionSequence((1, 2), 3))
    with pytest.raises(ValueError):
        GridSpec(-1, 3, ProhibitionSequence((1,), 3))


def test_zero_labels_disable_prohibition():
    grid = GridSpec(9, 3, ProhibitionSequence((0, 0), 3))
    assert count_traversals_dp(grid) == binom(9, 2)
    assert count_traversals_brute(grid) == binom(9, 2)


def test_more_rows_than_columns_gives_zero():
    grid = GridSpec(2, 3, ProhibitionSequence((0, 0, 0), 3))
    assert count_traversals_dp(grid) == 0
    assert count_traversals_brute(grid) == 0


def test_brute_force_guard():
    grid = GridSpec(60, 3, ProhibitionSequence((0,) * 10, 3))
    with pytest.raises(ValueError):
        count_traversals_brute(grid)


@given(
    g=st.integers(min_value=0, max_value=12),
    modulus=st.integers(min_value=1, max_value=5),
    data=st.data(),
)
@settings(deadline=None, max_examples=120)
def test_dp_matches_brute_force(g, modulus, data):
    rows = data.draw(st.integers(min_value=1, max_value=4))
    labels = data.draw(
        st.tuples(*[st.integers(min_value=0, max_value=modulus)] * rows)
    )
    grid = GridSpec(g, modulus, ProhibitionSequence(labels, modulus))
    assert count_traversals_dp(grid) == count_traversals_brute(grid)


# ---------------------------------------------------------------------------
# the r = 1 family


def test_r1_grid_shape():
    grid = r1_grid(2, 3)
    assert grid.g == 15
    assert grid.modulus == 5
    assert grid.prohibition.labels == (1, 3, 5)
    assert r1_grid(1, 1).prohibition.labels == (1, 3)
    assert r1_grid(3, 1).prohibition.labels == (1, 3, 5, 7)


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("u", [1, 2, 3, 4, 5])
def test_count_r1_frozen_values(t, u):
    assert count_r1(t, u) == FROZEN_R1[t][u - 1]


@pytest.mark.parametrize("t,u", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)])
def test_count_set_S_matches_grid_engines(t, u):
    expected = FROZEN_R1[t][u - 1]
    assert count_set_S(t, u) == expected
    assert count_traversals_dp(r1_grid(t, u)) == expected
    assert count_traversals_brute(r1_grid(t, u)) == expected


def test_count_set_S_guard_and_validation():
    with pytest.raises(ValueError):
        count_set_S(5, 10)
    with pytest.raises(ValueError):
        count_set_S(0, 1)
    with pytest.raises(ValueError):
        count_set_S(1, 0)


# ---------------------------------------------------------------------------
# ladder path counts


def test_path_count_gamma_base_cases():
    assert path_count_gamma(1, 7) == 7
    assert path_count_gamma(4, 1) == 1
    assert path_count_gamma(2, 4) == 10
    assert path_count_gamma(3, 2) == 4


@given(d=st.integers(min_value=2, max_value=12), e=st.integers(min_value=2, max_value=12))
def test_path_count_gamma_recursion(d, e):
    assert path_count_gamma(d, e) == path_count_gamma(d - 1, e) + path_count_gamma(
        d, e - 1
    )


def test_path_count_gamma_validation():
    with pytest.raises(ValueError):
        path_count_gamma(0, 3)
    with pytest.raises(ValueError):
        path_count_gamma(3, 0)


# ---------------------------------------------------------------------------
# the tuple stratification


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_enumerate_W_frozen_table(d):
    s = 2 * d - 2
    strata = enumerate_W(s, d)
    assert len(strata) == d + 1
    assert strata[: d - 1] == FROZEN_STRATA[d]
    assert all(x == 0 for x in strata[d - 1 :])
    assert sum(strata) == s**d


@pytest.mark.parametrize("s,d", [(2, 2), (3, 3), (4, 3), (6, 4), (5, 4), (2, 5)])
def test_enumerate_W_matches_brute_force(s, d):
    assert enumerate_W(s, d) == _enumerate_W_bruteforce(s, d)


def test_enumerate_W_validation_and_guard():
    with pytest.raises(ValueError):
        enumerate_W(0, 3)
    with pytest.raises(ValueError):
        enumerate_W(3, 0)
    with pytest.raises(ValueError):
        enumerate_W(100, 100)


@given(s=st.integers(min_value=1, max_value=6), d=st.integers(min_value=1, max_value=4))
@settings(deadline=None, max_examples=40)
def test_enumerate_W_brute_property(s, d):
    assert enumerate_W(s, d) == _enumerate_W_bruteforce(s, d)


# ---------------------------------------------------------------------------
# descent stratification of words


def test_word_descent_strata_unrestricted_row():
    # All words over [1,2] of length 2: descents of (l1, l2) with l2 <= l1.
    strata = word_descent_strata(ProhibitionSequence((0, 0), 2))
    assert strata == (1, 3)


@given(
    modulus=st.integers(min_value=2, max_value=5),
    data=st.data(),
)
@settings(deadline=None, max_examples=80)
def test_descent_strata_expand_traversal_counts(modulus, data):
    rows = data.draw(st.integers(min_value=1, max_value=4))
    labels = data.draw(
        st.tuples(*[st.integers(min_value=0, max_value=modulus)] * rows)
    )
    prohibition = ProhibitionSequence(labels, modulus)
    strata = word_descent_strata(prohibition)
    d = rows
    for u in range(0, 4):
        grid = GridSpec(modulus * u, modulus, prohibition)
        expected = count_traversals_dp(grid)
        expansion = sum(
            strata[c] * binom(u + d - 1 - c, d) for c in range(d)
        )
        assert expansion == expected


def test_descent_strata_total_is_word_count():
    # Each row excludes exactly one of 5 labels: 4^6 words in total.
    labels = (1, 3, 2, 4, 3, 5)
    strata = word_descent_strata(ProhibitionSequence(labels, 5))
    assert sum(strata) == 4**6
