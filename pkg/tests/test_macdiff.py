import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rationals
from vertex_identities.latticepf import enumerate_lattice, z_asm_closed
from vertex_identities.macdiff import apply_Dn, cauchy_kernel, eigen_check, eigenfunction, eigenvalue
from vertex_identities.partitions import enumerate_partitions
from vertex_identities.symfunc import DegenerateSample, schur_eval
from vertex_identities.verify.sampling import draw_distinct, draw_t

F = Fraction
t = F(2, 7)


def test_z_zero_is_identity():
    f = lambda xs: xs[0] ** 2 + 3 * xs[1]
    pt = [F(1, 2), F(-3, 4)]
    assert apply_Dn(f, 0, F(5), t, pt) == f(pt)


def test_coincident_coordinates_rejected():
    with pytest.raises(ValueError):
        apply_Dn(lambda xs: F(1), 1, t, t, [F(1, 2), F(1, 2)])


def test_unsupported_q_rejected():
    with pytest.raises(ValueError):
        eigenfunction((1,), F(1, 2), t)


def test_eigenvalue_example():
    # lam = (1), n = 2, q = 0, z = -t: (1 - t * 0^1 * t) (1 - t * t^0) = 1 - t
    assert eigenvalue((1,), 2, -t, 0, t) == 1 - t


def test_eigen_check_example():
    assert eigen_check((2, 1), 3, F(3, 5), t, t, samples=3, seed=1)


@pytest.mark.parametrize("lam,n", [(lam, n) for n in (1, 2, 3) for lam in enumerate_partitions(4, n)])
@pytest.mark.parametrize("q", [t, F(0)])
def test_eigenfunctions(lam, n, q):
    assert eigen_check(lam, n, F(-3, 4), q, t, samples=3, seed=n)


def test_eigen_check_detects_wrong_eigenvalue():
    # Schur functions are not eigenfunctions at q = 0 once t != 0
    f = lambda xs: schur_eval((2,), xs)
    pt = [F(1, 2), F(2, 3)]
    ev = eigenvalue((2,), 2, F(1, 3), 0, t)
    assert apply_Dn(f, F(1, 3), 0, t, pt) != ev * f(pt)


@given(st.lists(small_rationals(), min_size=2, max_size=2, unique=True), small_rationals(), small_rationals())
def test_linearity(pt, z, q):
    f = lambda xs: xs[0] * xs[1] + 1
    g = lambda xs: xs[0] ** 3 - xs[1]
    lhs = apply_Dn(lambda xs: f(xs) + g(xs), z, q, t, pt)
    assert lhs == apply_Dn(f, z, q, t, pt) + apply_Dn(g, z, q, t, pt)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kernel_gives_domain_wall_function(n):
    """Three representations of the same function: operator, determinant, lattice."""
    rng = random.Random(f"kernel{n}")
    done = 0
    while done < 3:
        x, y, tv = draw_distinct(rng, n), draw_distinct(rng, n), draw_t(rng)
        try:
            via_operator = apply_Dn(cauchy_kernel(y, tv), -tv, 0, tv, x)
            via_det = z_asm_closed(x, y, tv)
        except DegenerateSample:
            continue
        assert via_operator == via_det == enumerate_lattice("square", x, y, tv)[1]
        done += 1
