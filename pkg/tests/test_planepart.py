from collections import Counter
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vertex_identities.exact import TruncSeries
from vertex_identities.partitions import conjugate, has_even_parts, interlaces
from vertex_identities.planepart import (
    PlanePartition,
    branching_weight,
    chains_down,
    enumerate_pp,
    enumerate_symmetric_pp,
    enumerate_symplectic_pp,
    gs_lhs,
    height_zero_depths,
    path_stats,
    path_weight,
    positive_paths,
    symmetric_from_chain,
    symplectic_volume_stable,
)

F = Fraction
t = F(1, 3)
BOX3 = enumerate_pp(3, 3, 8)


def _brute_pp(m, n, max_volume):
    """Oracle: every m x n matrix with entries <= max_volume, filtered."""
    out = []
    for vals in product(range(max_volume + 1), repeat=m * n):
        if sum(vals) > max_volume:
            continue
        rows = [vals[i * n:(i + 1) * n] for i in range(m)]
        try:
            out.append(PlanePartition(tuple(rows)))
        except ValueError:
            pass
    return out


def test_construction_validates():
    with pytest.raises(ValueError):
        PlanePartition(((1, 2),))
    with pytest.raises(ValueError):
        PlanePartition(((1,), (2,)))
    with pytest.raises(ValueError):
        PlanePartition(((1, 0), (1,)))


def test_enumerate_pp_examples():
    assert enumerate_pp(2, 2, 0) == [PlanePartition.empty(2, 2)]
    assert len(enumerate_pp(1, 1, 5)) == 6
    volumes = Counter(pi.volume for pi in enumerate_pp(3, 3, 3))
    assert [volumes[v] for v in range(4)] == [1, 1, 3, 6]


@pytest.mark.parametrize("m,n,v", [(1, 2, 4), (2, 2, 4), (2, 3, 3)])
def test_enumerate_pp_matches_brute_force(m, n, v):
    assert set(enumerate_pp(m, n, v)) == set(_brute_pp(m, n, v))


def test_path_examples():
    assert path_stats(PlanePartition(((1,),))).by_depth == {1: 1}
    assert path_weight({1: 1}, t) == 1 - t
    assert path_stats(PlanePartition(((2, 1), (1, 1)))).by_depth == {1: 2}
    framed = path_stats(PlanePartition(((1,),)), framing=2).by_depth_framed
    assert framed == {1: 2}


def test_framing_smaller_than_support_is_an_error():
    with pytest.raises(ValueError):
        path_stats(PlanePartition(((1, 1),)), framing=1)
    assert height_zero_depths(PlanePartition.empty(2, 2), 2) == [1, 2]


def test_paths_partition_the_positive_cells():
    for pi in BOX3:
        cells = [c for _, path in positive_paths(pi) for c in path]
        positive = [(i, j) for i in range(1, 4) for j in range(1, 4) if pi.get(i, j) > 0]
        assert sorted(cells) == sorted(positive)


@pytest.mark.parametrize("pi", BOX3, ids=lambda p: p.to_json())
def test_vuletic_weight_equals_branching_weight(pi):
    assert path_weight(path_stats(pi).by_depth, t) == branching_weight(pi, t)


@pytest.mark.parametrize("pi", BOX3, ids=lambda p: p.to_json())
def test_slice_round_trip(pi):
    left, right = pi.left_chain(), pi.right_chain()
    for big, small in zip(left[1:], left[:-1]):
        assert interlaces(big, small)
    assert PlanePartition.from_chains(left, right) == pi
    assert sum(pi.x_exponents()) == sum(pi.central_slice()) == sum(pi.y_exponents())


@given(st.sampled_from(BOX3))
def test_serialisation_round_trip(pi):
    assert PlanePartition.from_text(pi.to_text()) == pi
    assert PlanePartition.from_json(pi.to_json()) == pi


def test_enumerate_symmetric_examples():
    assert enumerate_symmetric_pp(3, 0) == [PlanePartition.empty(3, 3)]


@pytest.mark.parametrize("condition", ["none", "evenCentral", "evenColumnsCentral"])
def test_symmetric_enumeration(condition):
    found = enumerate_symmetric_pp(3, 10, condition)
    brute = [pi for pi in enumerate_pp(3, 3, 10) if pi.is_symmetric()]
    if condition == "evenCentral":
        brute = [pi for pi in brute if has_even_parts(pi.central_slice())]
    elif condition == "evenColumnsCentral":
        brute = [pi for pi in brute if has_even_parts(conjugate(pi.central_slice()))]
    assert set(found) == set(brute)
    for pi in found:
        assert pi.is_symmetric()
        stats = path_stats(pi, framing=3)
        off = sum(v for d, v in path_stats(pi).by_depth.items()) - sum(stats.diagonal.values())
        assert off == 2 * sum(stats.off_diagonal_pairs.values())


def test_symmetric_from_chain():
    pi = symmetric_from_chain([(), (1,), (2, 1)])
    assert pi == PlanePartition(((2, 1), (1, 1)))


def test_chains_down():
    assert chains_down((1,), 1) == [((), (1,))]
    assert len(chains_down((1,), 2)) == 2


def test_symplectic_enumeration():
    assert len(enumerate_symplectic_pp(1, 1, 0)) == 1
    with pytest.raises(ValueError):
        enumerate_symplectic_pp(2, 1, 1)
    for ch in enumerate_symplectic_pp(2, 2, 3):
        for big, small in zip(ch.left[1:], ch.left[:-1]):
            assert interlaces(big, small)
        for big, small in zip(ch.right[1:], ch.right[:-1]):
            assert interlaces(big, small)
        for j, bar in enumerate(ch.right[0::2]):
            assert len(bar) <= j


def test_vol_pp_one_column():
    s = gs_lhs("vol-pp", m=1, n=1, order=5)
    assert s == TruncSeries(1, 5, {(k,): 1 for k in range(6)})


def test_pp_asm_gs_single_variable():
    x_cut, y = 6, F(2, 5)
    s = gs_lhs("pp-ASM-gs", n=1, D=x_cut, y=[y], t=t)
    # a 1 x 1 framing holds one depth-1 path at every height (the height-0 path
    # when the box is empty), so every term carries exactly one factor 1 - t
    expected = TruncSeries(1, x_cut, {(h,): (1 - t) * y ** h for h in range(x_cut + 1)})
    assert s == expected


def test_constant_terms():
    assert gs_lhs("s-little3-pp-gs", n=2, D=4).constant_term() == 1
    assert gs_lhs("macmahon", order=3).constant_term() == 1


def test_macmahon_and_vuletic_coefficients():
    assert [gs_lhs("macmahon", order=6).coefficient((k,)) for k in range(7)] == [1, 1, 3, 6, 13, 24, 48]
    # at t = 0 every path weight is 1
    assert gs_lhs("vuletic-gs", order=5, t=0) == gs_lhs("macmahon", order=5)


def test_symplectic_volume_stabilises():
    series, cutoff = symplectic_volume_stable(2, 2, 6)
    assert [series.coefficient((k,)) for k in range(7)] == [1, 2, 7, 14, 30, 54, 97]
    assert cutoff <= 6


def test_unknown_series():
    with pytest.raises(ValueError):
        gs_lhs("nope")
