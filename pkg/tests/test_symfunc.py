import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rationals
from vertex_identities.exact import TruncSeries
from vertex_identities.partitions import enumerate_partitions
from vertex_identities.symfunc import (
    DegenerateSample,
    bchl_eval,
    branching_eval,
    expand_in_hl_basis,
    h_complete_eval,
    hl_eval,
    hl_expand,
    ktilde_coeffs,
    monomial_expand,
    schur_eval,
    schur_expand,
    sp_eval,
    sp_jacobi_trudi_eval,
    sp_tableau_eval,
    symplectic_tableaux,
)
from vertex_identities.verify import verify_identity
from vertex_identities.verify.sampling import draw_distinct, draw_symplectic, draw_t

F = Fraction
a, b = F(2, 3), F(-5, 7)
t = F(1, 3)


def X(i, k, D):
    return TruncSeries.variable(i, k, D)


def test_schur_examples():
    assert schur_eval((), [a, b]) == 1
    assert schur_eval((1,), [a, b]) == a + b
    assert schur_eval((2, 1), [1, 1, 1]) == 8
    assert schur_eval((1, 1, 1), [a, b]) == 0


def test_hl_eval_examples():
    assert hl_eval((1,), [a, b], t) == a + b
    with pytest.raises(DegenerateSample):
        hl_eval((1,), [a, a], t)


def test_hl_expand_examples():
    assert hl_expand((1, 1), 2, t, 4) == X(1, 2, 4) * X(2, 2, 4)
    x1, x2 = X(1, 2, 4), X(2, 2, 4)
    assert hl_expand((2,), 2, t, 4) == x1 * x1 + x2 * x2 + (x1 * x2).scale(1 - t)
    assert hl_expand((1,), 3, 0, 3) == X(1, 3, 3) + X(2, 3, 3) + X(3, 3, 3)
    assert hl_expand((1,), 3, 0, 3) == schur_expand((1,), 3, 3)
    with pytest.raises(ValueError):
        hl_expand((3,), 2, t, 2)


CASES = [(lam, n) for n in (1, 2, 3) for lam in enumerate_partitions(5, n)]


@pytest.mark.parametrize("lam,n", CASES)
def test_hl_expand_matches_group_sum(lam, n):
    rng = random.Random(f"{lam}{n}")
    for _ in range(3):
        tv = draw_t(rng)
        x = draw_distinct(rng, n)
        assert hl_expand(lam, n, tv, 5).evaluate(x) == hl_eval(lam, x, tv)
        assert branching_eval(lam, x, tv) == hl_eval(lam, x, tv)


@pytest.mark.parametrize("lam,n", CASES)
def test_hl_expand_symmetric(lam, n):
    s = hl_expand(lam, n, t, 5)
    for perm in permutations(range(n)):
        assert s.permute(perm) == s


@pytest.mark.parametrize("lam,n", CASES)
def test_schur_is_hl_at_zero(lam, n):
    x = draw_distinct(random.Random(str(lam)), n)
    assert schur_eval(lam, x) == hl_eval(lam, x, 0)


@pytest.mark.parametrize("lam,n", CASES)
def test_hl_basis_round_trip(lam, n):
    assert expand_in_hl_basis(hl_expand(lam, n, t, 5), n, t) == {lam: 1}


def test_hl_basis_examples():
    D = 3
    assert expand_in_hl_basis(X(1, 2, D) + X(2, 2, D), 2, t) == {(1,): 1}
    assert expand_in_hl_basis(schur_expand((2,), 2, D), 2, t) == {(2,): 1, (1, 1): t}
    assert expand_in_hl_basis(TruncSeries.constant(1, 2, D), 2, t) == {(): 1}
    with pytest.raises(ValueError):
        expand_in_hl_basis(X(1, 2, D), 2, t)


def test_schur_two_equals_monomials():
    D = 3
    x1, x2 = X(1, 2, D), X(2, 2, D)
    assert schur_expand((2,), 2, D) == monomial_expand((2,), 2, D) + monomial_expand((1, 1), 2, D)
    assert monomial_expand((1, 1), 2, D) == x1 * x2


def test_sp_examples():
    assert sp_eval((), [a]) == 1
    assert sp_eval((1,), [a]) == a + 1 / a
    assert sp_eval((1, 1), [2, 3]) == F(28, 3)
    assert sp_tableau_eval((1, 1), [2, 3]) == F(28, 3)
    with pytest.raises(DegenerateSample):
        sp_eval((1,), [1])


@pytest.mark.parametrize("lam,n", [(lam, n) for n in (1, 2) for lam in enumerate_partitions(4, n)])
def test_sp_weyl_matches_tableaux(lam, n):
    y = draw_symplectic(random.Random(str(lam)), n)
    assert sp_eval(lam, y) == sp_tableau_eval(lam, y)


def test_symplectic_tableaux_respect_row_bound():
    for tab in symplectic_tableaux((2, 2), 2):
        for (r, _), (k, _) in tab.items():
            assert k >= r + 1


def test_bchl_examples():
    assert bchl_eval((), [a], t) == 1
    for tv in (F(0), t, F(-4, 5)):
        assert bchl_eval((1,), [a], tv) == a + 1 / a


@pytest.mark.parametrize("lam", enumerate_partitions(3, 2))
def test_bchl_hyperoctahedral_symmetry(lam):
    y = draw_symplectic(random.Random(str(lam)), 2)
    v = bchl_eval(lam, y, t)
    assert bchl_eval(lam, [1 / y[0], y[1]], t) == v
    assert bchl_eval(lam, [y[0], 1 / y[1]], t) == v
    assert bchl_eval(lam, [y[1], y[0]], t) == v


@pytest.mark.parametrize("lam", enumerate_partitions(4, 2))
def test_bchl_at_zero_is_symplectic(lam):
    y = draw_symplectic(random.Random(str(lam)), 2)
    assert bchl_eval(lam, y, 0) == sp_eval(lam, y)


@given(st.integers(1, 5), st.lists(small_rationals(nonzero=False), min_size=1, max_size=3))
def test_h_complete_is_one_row_schur(k, xs):
    assert h_complete_eval(k, xs) == schur_eval((k,), xs)


def test_hl_eval_degenerate_t():
    with pytest.raises(DegenerateSample):
        hl_eval((), [a, b], -1)


def test_h_complete_examples():
    assert h_complete_eval(0, [a, b]) == 1
    assert h_complete_eval(2, [a, b]) == a * a + a * b + b * b


def test_ktilde_constant_term():
    c = ktilde_coeffs(2, [F(2), F(1, 2)], t, [0, 0, 0, 0], 1, 3)
    assert c[()] == 1


def test_ktilde_is_cutoff_stable():
    c1 = ktilde_coeffs(2, [F(2), F(1, 2)], t, [0, 0, 0, 0], 1, 3, validate=True)
    c2 = ktilde_coeffs(2, [F(2), F(1, 2)], t, [0, 0, 0, 0], 1, 5, validate=False)
    assert c1[(1,)] == c2[(1,)]


def test_ktilde_degenerates_to_symplectic():
    y = [F(2), F(-3, 5)]
    z = [y[0], 1 / y[0], y[1], 1 / y[1]]
    coeffs = ktilde_coeffs(4, z, 0, [0, 0, 0, 0], 4, 4)
    assert len(coeffs) == len(enumerate_partitions(4, 4))
    for lam, v in coeffs.items():
        assert v == sp_eval(lam, y)
    # beyond two rows the modification rules apply
    assert coeffs[(1, 1, 1)] == 0
    assert coeffs[(1, 1, 1, 1)] == -sp_eval((1, 1), y)


@pytest.mark.parametrize("lam,n", [(lam, n) for n in (1, 2, 3) for lam in enumerate_partitions(4, n)])
def test_jacobi_trudi_matches_weyl(lam, n):
    y = draw_symplectic(random.Random(f"jt{lam}"), n)
    assert sp_jacobi_trudi_eval(lam, y) == sp_eval(lam, y)


def test_hl_cauchy_identity():
    assert verify_identity("hl-cauch2", m=2, n=2, D=6, samples=3, seed=5).status == "pass"
