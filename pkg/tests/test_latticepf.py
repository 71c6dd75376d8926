import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vertex_identities.latticepf import (
    DOMAIN_KINDS,
    STATE_GUARD,
    asm_count,
    boltzmann_weights,
    enumerate_lattice,
    izergin_row_reduced,
    lattice_configurations,
    lattice_vertex_types,
    z_asm_closed,
    z_asm_partial_closed,
    z_osasm_closed,
    z_osasm_odd_closed,
    z_uasm_closed,
    z_uasm_partial_closed,
)
from vertex_identities.symfunc import DegenerateSample
from vertex_identities.verify.sampling import draw_distinct, draw_symplectic, draw_t

F = Fraction
t0 = F(1, 11)


def _checked(rng_key, count, draw, lhs, rhs):
    rng = random.Random(rng_key)
    done = 0
    while done < count:
        args = draw(rng)
        try:
            a, b = lhs(*args), rhs(*args)
        except DegenerateSample:
            continue
        assert a == b, args
        done += 1


# -- boundary weights -------------------------------------------------------------------


def test_boltzmann_weights_at_zero_ratio():
    w = boltzmann_weights(F(0), t0)
    assert w["a+"] == w["a-"] == w["b+"] == 1
    assert w["b-"] == t0
    assert w["c+"] == 1 - t0
    assert w["c-"] == 0


def test_c_minus_never_contributes_at_zero_rapidity():
    x = [F(0), F(0), F(0)]
    y = [F(1, 2), F(1, 3), F(2, 5)]
    for cfg, names in zip(lattice_configurations("square", x, y, t0), lattice_vertex_types("square", x, y, t0)):
        if "c-" in names:
            assert cfg.weight == 0


# -- small cases --------------------------------------------------------------------------


def test_square_one_by_one():
    x, y = F(2, 3), F(1, 5)
    assert enumerate_lattice("square", [x], [y], t0) == (1, (1 - t0) / (1 - x * y))
    assert z_asm_closed([x], [y], t0) == (1 - t0) / (1 - x * y)


def test_square_two_by_two_example():
    x, y = [F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]
    count, weight = enumerate_lattice("square", x, y, t0)
    assert count == 2
    assert weight == z_asm_closed(x, y, t0)


def test_square_at_t_zero_is_cauchy_determinant():
    x, y = [F(1, 2), F(-1, 3)], [F(1, 5), F(3, 7)]
    den = F(1)
    for xi in x:
        for yj in y:
            den *= 1 - xi * yj
    # the Cauchy determinant cancels both Vandermonde factors
    assert z_asm_closed(x, y, 0) == 1 / den


def test_uturn_one():
    x, y = F(2, 3), F(3, 5)
    expected = (1 - t0) / ((1 - x * y) * (1 - x / y))
    assert enumerate_lattice("uTurn", [x], [y], t0)[1] == expected
    assert z_uasm_closed([x], [y], t0) == expected


def test_offdiagonal_two_lines():
    x = [F(2, 3), F(-1, 4)]
    expected = (1 - t0) / (1 - x[0] * x[1])
    assert z_osasm_closed(x, t0) == expected
    assert enumerate_lattice("offDiagonal", x, (), t0)[1] == expected


def test_offdiagonal_odd_single_line():
    assert enumerate_lattice("offDiagonalOdd", [F(3, 7)], (), t0) == (1, F(1))
    assert z_osasm_odd_closed([F(3, 7)], t0) == 1


def test_asm_counts():
    assert [asm_count(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]


def test_domain_errors():
    with pytest.raises(ValueError):
        enumerate_lattice("square", [F(1, 2)], [F(1, 3), F(1, 5)])
    with pytest.raises(ValueError):
        enumerate_lattice("offDiagonal", [F(1, 2)])
    with pytest.raises(ValueError):
        enumerate_lattice("hexagon", [F(1, 2)])
    with pytest.raises(ValueError):
        z_osasm_closed([F(1, 2)], t0)
    with pytest.raises(DegenerateSample):
        z_asm_closed([F(1, 2), F(1, 2)], [F(1, 3), F(1, 5)], t0)
    assert "offDiagonalOdd" in DOMAIN_KINDS and STATE_GUARD >= 10 ** 6


# -- closed forms equal brute force -----------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_square_matches_izergin(n):
    _checked(f"sq{n}", 3, lambda r: (draw_distinct(r, n), draw_distinct(r, n), draw_t(r)),
             lambda x, y, t: enumerate_lattice("square", x, y, t)[1], z_asm_closed)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_partial_square(m, n):
    _checked(f"psq{m}{n}", 3, lambda r: (draw_distinct(r, m), draw_distinct(r, n), draw_t(r)),
             lambda x, y, t: enumerate_lattice("partialSquare", x, y, t)[1], z_asm_partial_closed)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_uturn(n):
    _checked(f"ut{n}", 3, lambda r: (draw_distinct(r, n), draw_symplectic(r, n), draw_t(r)),
             lambda x, y, t: enumerate_lattice("uTurn", x, y, t)[1], z_uasm_closed)


@pytest.mark.parametrize("n", [1, 2])
def test_partial_uturn(n):
    _checked(f"put{n}", 3, lambda r: (draw_distinct(r, 1), draw_symplectic(r, n), draw_t(r)),
             lambda x, y, t: enumerate_lattice("partialUTurn", x, y, t)[1], z_uasm_partial_closed)


@pytest.mark.parametrize("N", [2, 4, 6])
def test_offdiagonal(N):
    _checked(f"od{N}", 3, lambda r: (draw_distinct(r, N), draw_t(r)),
             lambda x, t: enumerate_lattice("offDiagonal", x, (), t)[1], z_osasm_closed)


@pytest.mark.parametrize("N", [1, 3, 5])
def test_offdiagonal_odd(N):
    _checked(f"odo{N}", 3, lambda r: (draw_distinct(r, N), draw_t(r)),
             lambda x, t: enumerate_lattice("offDiagonalOdd", x, (), t)[1], z_osasm_odd_closed)


def test_partial_equal_sizes_is_full():
    x, y = [F(1, 2), F(-2, 3)], [F(3, 4), F(1, 5)]
    assert z_asm_partial_closed(x, y, t0) == z_asm_closed(x, y, t0)
    assert z_uasm_partial_closed(x, [F(3), F(-5, 2)], t0) == z_uasm_closed(x, [F(3), F(-5, 2)], t0)


# -- structural properties -----------------------------------------------------------------


rational = st.builds(F, st.integers(-9, 9).filter(bool), st.integers(1, 9))


@given(st.lists(rational, min_size=3, max_size=3, unique=True),
       st.lists(rational, min_size=3, max_size=3, unique=True), rational,
       st.permutations(range(3)), st.permutations(range(3)))
def test_izergin_rapidity_symmetry(x, y, t, px, py):
    try:
        base = z_asm_closed(x, y, t)
    except DegenerateSample:
        return
    assert z_asm_closed([x[i] for i in px], [y[i] for i in py], t) == base


@given(st.lists(rational, min_size=2, max_size=2, unique=True), rational, st.permutations(range(2)))
def test_tsuchiya_rapidity_symmetry(x, t, perm):
    y = [F(2), F(-3, 5)]
    try:
        base = z_uasm_closed(x, y, t)
    except DegenerateSample:
        return
    assert z_uasm_closed([x[i] for i in perm], y, t) == base
    assert z_uasm_closed(x, [y[1], y[0]], t) == base
    assert z_uasm_closed(x, [1 / y[0], y[1]], t) == base


@given(st.lists(rational, min_size=4, max_size=4, unique=True), rational)
def test_kuperberg_symmetry(x, t):
    try:
        base = z_osasm_closed(x, t)
    except DegenerateSample:
        return
    for perm in permutations(range(4)):
        assert z_osasm_closed([x[i] for i in perm], t) == base


@given(st.lists(rational, min_size=3, max_size=3, unique=True), rational)
def test_odd_kuperberg_symmetry(x, t):
    try:
        base = z_osasm_odd_closed(x, t)
    except DegenerateSample:
        return
    for perm in permutations(range(3)):
        assert z_osasm_odd_closed([x[i] for i in perm], t) == base


def _factor_run(k, t):
    acc = F(1)
    for i in range(1, k + 1):
        acc *= 1 - t ** i
    return acc


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 3)])
def test_zero_rows_give_partial_function(m, n):
    rng = random.Random(f"rows{m}{n}")
    done = 0
    while done < 3:
        x, y, t = draw_distinct(rng, m), draw_distinct(rng, n), draw_t(rng)
        try:
            reduced = izergin_row_reduced(x, [F(0)] * (n - m), y, t)
            partial = z_asm_partial_closed(x, y, t)
        except DegenerateSample:
            continue
        assert reduced / _factor_run(n - m, t) == partial
        done += 1


@pytest.mark.parametrize("m,n", [(1, 2), (2, 3)])
def test_row_reduced_form_is_izergin(m, n):
    rng = random.Random(f"rr{m}{n}")
    done = 0
    while done < 3:
        x, y, t = draw_distinct(rng, n), draw_distinct(rng, n), draw_t(rng)
        try:
            a = izergin_row_reduced(x[:m], x[m:], y, t)
            b = z_asm_closed(x, y, t)
        except DegenerateSample:
            continue
        assert a == b
        done += 1
