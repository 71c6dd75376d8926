from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rationals
from vertex_identities.partitions import (
    b_coeff,
    conjugate,
    dominates,
    enumerate_partitions,
    even_column_coeff,
    has_even_columns,
    has_even_parts,
    interlaces,
    interlacing_below,
    length,
    make_partition,
    padded,
    parse_partition,
    partition_literal,
    psi_coeff,
)

F = Fraction
t = F(1, 3)
ALL_TO_10 = enumerate_partitions(10, 10)


def test_make_partition_validates():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((5, 5, 3, 3, 1, 1)) == (6, 4, 4, 2, 2)


@pytest.mark.parametrize("lam", ALL_TO_10)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_interlaces_examples():
    assert interlaces((3, 1), (2, 1))
    assert not interlaces((2,), (3,))
    assert interlaces((), ())


@pytest.mark.parametrize("lam", enumerate_partitions(6, 4))
def test_interlacing_consequences(lam):
    for mu in enumerate_partitions(6, 5):
        if interlaces(lam, mu):
            assert sum(lam) >= sum(mu)
            assert length(lam) <= length(mu) + 1


def _brute_interlacing_below(lam):
    """Oracle: every mu with lam_{i+1} <= mu_i <= lam_i."""
    ranges = [range(lam[i + 1] if i + 1 < len(lam) else 0, lam[i] + 1) for i in range(len(lam))]
    return {make_partition(c) for c in product(*ranges)}


@pytest.mark.parametrize("lam", enumerate_partitions(6, 4))
def test_interlacing_below_matches_brute_force(lam):
    assert set(interlacing_below(lam)) == _brute_interlacing_below(lam)


def test_enumerate_partitions_examples():
    assert enumerate_partitions(3, 2) == [(), (1,), (2,), (1, 1), (3,), (2, 1)]
    assert enumerate_partitions(0, 5) == [()]


def _brute_partition_count(max_weight, max_length):
    """Oracle: count weakly decreasing tuples by brute force over boxes."""
    count = 0
    for w in range(max_weight + 1):
        for parts in product(range(w + 1), repeat=max_length):
            if sum(parts) == w and list(parts) == sorted(parts, reverse=True):
                count += 1
    return count


def test_enumerate_partitions_count():
    assert len(enumerate_partitions(6, 6)) == _brute_partition_count(6, 6) == 30


def test_b_coeff_examples():
    assert b_coeff((1,), t) == 1 - t
    assert b_coeff((2, 2, 1), t) == (1 - t) ** 2 * (1 - t ** 2)
    assert b_coeff((1,), F(1, 2), include_zero_parts=2) == F(1, 4)
    with pytest.raises(ValueError):
        b_coeff((1, 1, 1), t, include_zero_parts=2)


@pytest.mark.parametrize("lam", enumerate_partitions(6, 5))
def test_b_coeff_zero_part_split(lam):
    for n in range(length(lam), 6):
        extra = F(1)
        for j in range(1, n - length(lam) + 1):
            extra *= 1 - t ** j
        assert b_coeff(lam, t, n) == b_coeff(lam, t, 0) * extra


def test_psi_examples():
    assert psi_coeff((1,), (), t) == 1
    assert psi_coeff((2, 1), (1, 1), t) == 1 - t ** 2
    assert psi_coeff((2,), (1,), t) == 1 - t
    with pytest.raises(ValueError):
        psi_coeff((1,), (2,), t)


@pytest.mark.parametrize("lam", enumerate_partitions(6, 4))
def test_coefficients_at_t_zero(lam):
    assert b_coeff(lam, 0) == 1
    for mu in interlacing_below(lam):
        assert psi_coeff(lam, mu, 0) == 1


def test_even_column_coeff_examples():
    assert even_column_coeff((1, 1), t) == 1 - t
    assert even_column_coeff((2, 2, 1, 1), t) == (1 - t) ** 2
    assert even_column_coeff((), t, total_variables=4) == (1 - t) * (1 - t ** 3) == F(2, 3) * F(26, 27)


@given(st.integers(0, 8).flatmap(lambda w: st.sampled_from(enumerate_partitions(w, 8))))
def test_even_columns_means_even_multiplicities(lam):
    mult_even = all(lam.count(p) % 2 == 0 for p in set(lam))
    assert has_even_columns(lam) == mult_even
    assert has_even_parts(lam) == has_even_columns(conjugate(lam))


def test_dominance():
    assert dominates((3,), (2, 1))
    assert not dominates((2, 1), (3,))
    assert dominates((2, 2), (2, 1, 1))


@given(st.sampled_from(ALL_TO_10))
def test_literal_round_trip(lam):
    assert parse_partition(partition_literal(lam)) == lam


def test_padded():
    assert padded((2,), 3) == (2, 0, 0)
    with pytest.raises(ValueError):
        padded((1, 1), 1)


@given(small_rationals())
def test_b_coeff_is_product_of_runs(tv):
    assert b_coeff((3, 3, 3, 1), tv) == (1 - tv) * (1 - tv ** 2) * (1 - tv ** 3) * (1 - tv)
