"""Schur, Hall-Littlewood, symplectic and BC_n Hall-Littlewood polynomials.

Two kinds of routines live here:

* point evaluators (``*_eval``) that return an exact Fraction at rational
  arguments, each following a closed formula (Weyl alternant, group sum);
* formal expanders (``hl_expand``, ``schur_expand``) that build the
  polynomial as a :class:`TruncSeries` by branching over interlacing
  sequences.

The branching and group-sum routes are independent, so each is used as the
oracle for the other in the tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple

from .exact import TruncSeries, det, series_geom, vandermonde
from .partitions import (
    Partition,
    b_coeff,
    interlacing_below,
    length,
    padded,
    partitions_of,
    psi_coeff,
    v_coeff,
)


class DegenerateSample(ValueError):
    """A sample point hits a pole or a vanishing denominator of the formula."""


def _fr(values: Sequence) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def _distinct(values: Sequence[Fraction]) -> bool:
    return len(set(values)) == len(values)


# -- Schur ----------------------------------------------------------------------


def schur_eval(lam: Partition, x_values: Sequence) -> Fraction:
    """s_lam(x_1..x_n) by the Weyl alternant ratio.

    Repeated coordinates make the alternant 0/0; there the value is taken
    from the tableau (branching) sum instead.
    """
    xs = _fr(x_values)
    n = len(xs)
    if length(lam) > n:
        return Fraction(0)
    if not _distinct(xs):
        return branching_eval(tuple(lam), xs, Fraction(0))
    lp = padded(lam, n)
    num = det([[x ** (lp[j] - j - 1 + n) for j in range(n)] for x in xs])
    return num / vandermonde(xs)


def branching_eval(lam: Partition, x_values: Sequence, t) -> Fraction:
    """P_lam(x; t) at a point as a sum over interlacing sequences.

    Valid at any point (repeated or zero coordinates included).  At t = 0
    this is the semistandard tableau sum for s_lam.
    """
    xs = _fr(x_values)
    return _branch_point(tuple(lam), xs, Fraction(t))


@lru_cache(maxsize=200000)
def _branch_point(lam: Partition, xs: Tuple[Fraction, ...], t: Fraction) -> Fraction:
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    if not lam:
        return Fraction(1)
    if n == 0:
        return Fraction(0)
    last = xs[-1]
    total = Fraction(0)
    size = sum(lam)
    for mu in interlacing_below(lam, max_length=n - 1):
        coeff = psi_coeff(lam, mu, t)
        if coeff == 0:
            continue
        total += coeff * last ** (size - sum(mu)) * _branch_point(mu, xs[:-1], t)
    return total


def schur_tableau_eval(lam: Partition, x_values: Sequence) -> Fraction:
    """s_lam as a sum over semistandard tableaux (branching at t = 0)."""
    return branching_eval(lam, x_values, 0)


def schur_expand(lam: Partition, n: int, D: int) -> TruncSeries:
    """s_lam(X_1..X_n) as a TruncSeries."""
    return hl_expand(lam, n, 0, D)


# -- Hall-Littlewood ----------------------------------------------------------------


def hl_eval(lam: Partition, x_values: Sequence, t) -> Fraction:
    """P_lam(x; t) by the symmetric-group sum (distinct coordinates only)."""
    xs = _fr(x_values)
    t = Fraction(t)
    n = len(xs)
    if length(lam) > n:
        return Fraction(0)
    if not _distinct(xs):
        raise DegenerateSample("hl_eval needs distinct coordinates")
    lp = padded(lam, n)
    total = Fraction(0)
    for sigma in permutations(range(n)):
        ys = [xs[s] for s in sigma]
        term = Fraction(1)
        for i in range(n):
            term *= ys[i] ** lp[i]
        for i in range(n):
            for j in range(i + 1, n):
                term *= (ys[i] - t * ys[j]) / (ys[i] - ys[j])
        total += term
    v = v_coeff(lam, t, n)
    if v == 0:
        raise DegenerateSample(f"v_lam(t) vanishes at t = {t}; the group sum is 0/0 there")
    return total / v


def hl_expand(lam: Partition, n: int, t, D: int) -> TruncSeries:
    """P_lam(X_1..X_n; t) as an exact homogeneous TruncSeries with cutoff D.

    Built by peeling off the last variable:
    P_lam(x_1..x_n) = sum_{mu < lam} psi_{lam/mu}(t) x_n^{|lam|-|mu|} P_mu(x_1..x_{n-1}).
    """
    lam = tuple(lam)
    if sum(lam) > D:
        raise ValueError(f"|{lam}| = {sum(lam)} exceeds the cutoff {D}")
    terms = _hl_terms(lam, n, Fraction(t))
    return TruncSeries._raw(n, D, dict(terms))


@lru_cache(maxsize=50000)
def _hl_terms(lam: Partition, n: int, t: Fraction) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    """Monomial expansion of P_lam in n variables as a sorted tuple of terms."""
    if len(lam) > n:
        return ()
    if n == 0:
        return (((), Fraction(1)),) if not lam else ()
    if not lam:
        return (((0,) * n, Fraction(1)),)
    size = sum(lam)
    acc: Dict[Tuple[int, ...], Fraction] = {}
    for mu in interlacing_below(lam, max_length=n - 1):
        coeff = psi_coeff(lam, mu, t)
        if coeff == 0:
            continue
        k = size - sum(mu)
        for exp, c in _hl_terms(mu, n - 1, t):
            key = exp + (k,)
            acc[key] = acc.get(key, 0) + coeff * c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def monomial_expand(lam: Partition, n: int, D: int) -> TruncSeries:
    """The monomial symmetric polynomial m_lam(X_1..X_n)."""
    if len(lam) > n:
        return TruncSeries(n, D)
    exps = set(permutations(padded(lam, n)))
    return TruncSeries(n, D, {e: Fraction(1) for e in exps})


# -- symplectic characters ------------------------------------------------------------


def _check_symplectic_point(ys: Sequence[Fraction]) -> None:
    for i, y in enumerate(ys):
        if y == 0 or y * y == 1:
            raise DegenerateSample(f"y_{i + 1} = {y} is 0 or +-1")
        for j in range(i + 1, len(ys)):
            if ys[i] == ys[j] or ys[i] * ys[j] == 1:
                raise DegenerateSample(f"y_{i + 1}, y_{j + 1} coincide up to inversion")


def sp_eval(lam: Partition, y_values: Sequence) -> Fraction:
    """sp_lam(y_1, 1/y_1, ..., y_n, 1/y_n) by the Weyl determinant formula.

    For l(lam) > n there is no Sp(2n) character; the value returned is the
    universal character specialised to these 2n variables, computed by
    :func:`sp_jacobi_trudi_eval` (it is 0 or +- a genuine character).
    """
    ys = _fr(y_values)
    n = len(ys)
    _check_symplectic_point(ys)
    if length(lam) > n:
        return sp_jacobi_trudi_eval(lam, ys)
    lp = padded(lam, n)
    mat = []
    for y in ys:
        row = []
        for j in range(n):
            e = lp[j] - j - 1 + n + 1
            row.append(y ** e - y ** (-e))
        mat.append(row)
    den = Fraction(1)
    for i in range(n):
        den *= ys[i] - 1 / ys[i]
        for j in range(i + 1, n):
            den *= (ys[i] - ys[j]) * (1 - 1 / (ys[i] * ys[j]))
    return det(mat) / den


def sp_jacobi_trudi_eval(lam: Partition, y_values: Sequence) -> Fraction:
    """Symplectic Jacobi-Trudi determinant in complete symmetric functions of
    (y_1, 1/y_1, ..., y_n, 1/y_n):

        det[ h_{lam_i - i + 1} | h_{lam_i - i + j} + h_{lam_i - i - j + 2} (j >= 2) ].

    Defined for every lam; for l(lam) <= n it equals the Weyl formula.
    """
    ys = _fr(y_values)
    if any(y == 0 for y in ys):
        raise DegenerateSample("y = 0 in a symplectic evaluation")
    zs = [v for y in ys for v in (y, 1 / y)]
    lam = tuple(lam)
    size = length(lam)
    if size == 0:
        return Fraction(1)
    top = max(lam) + size
    h = [h_complete_eval(k, zs) for k in range(top + 1)]

    def hk(k: int) -> Fraction:
        return h[k] if k >= 0 else Fraction(0)

    mat = []
    for i in range(1, size + 1):
        a = lam[i - 1] - i
        mat.append([hk(a + 1)] + [hk(a + j) + hk(a - j + 2) for j in range(2, size + 1)])
    return det(mat)


def symplectic_tableaux(lam: Partition, n: int) -> Iterator[Dict[Tuple[int, int], Tuple[int, int]]]:
    """All symplectic tableaux of shape lam over the alphabet 1 < 1' < ... < n < n'.

    A letter is encoded as ``(k, bar)`` with ``bar`` in {0, 1}; the order is
    the lexicographic order of these pairs.  Rows weakly increase, columns
    strictly increase, and every entry in row i is at least i.  Cells are
    keyed by (row, column), 0-based.
    """
    cells = [(r, c) for r, size in enumerate(lam) for c in range(size)]
    letters = [(k, bar) for k in range(1, n + 1) for bar in (0, 1)]
    filling: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        for letter in letters:
            if letter[0] < r + 1:
                continue
            if c > 0 and letter < filling[(r, c - 1)]:
                continue
            if r > 0 and letter <= filling[(r - 1, c)]:
                continue
            filling[(r, c)] = letter
            yield from rec(idx + 1)
            del filling[(r, c)]

    yield from rec(0)


def sp_tableau_eval(lam: Partition, y_values: Sequence) -> Fraction:
    """sp_lam as the weighted sum over symplectic tableaux: prod y_k^{#k - #k'}."""
    ys = _fr(y_values)
    total = Fraction(0)
    for tab in symplectic_tableaux(tuple(lam), len(ys)):
        term = Fraction(1)
        for k, bar in tab.values():
            term *= ys[k - 1] if bar == 0 else 1 / ys[k - 1]
        total += term
    return total


# -- BC_n Hall-Littlewood ------------------------------------------------------------


def bchl_eval(lam: Partition, y_values: Sequence, t) -> Fraction:
    """K_lam(y_1, 1/y_1, ..., y_n, 1/y_n; t) by the hyperoctahedral group sum.

    All 2^n n! signed permutations are summed explicitly.
    """
    ys = _fr(y_values)
    t = Fraction(t)
    n = len(ys)
    if length(lam) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} parts")
    _check_symplectic_point(ys)
    lp = padded(lam, n)
    total = Fraction(0)
    for sigma in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            zs = [ys[s] ** e for s, e in zip(sigma, signs)]
            term = Fraction(1)
            for i in range(n):
                term *= zs[i] ** lp[i] / (1 - zs[i] ** -2)
            for i in range(n):
                for j in range(i + 1, n):
                    zi, zj = zs[i], zs[j]
                    inv = 1 / (zi * zj)
                    term *= (zi - t * zj) * (1 - t * inv) / ((zi - zj) * (1 - inv))
            total += term
    return total / v_coeff(lam, t, n)


# -- complete symmetric functions --------------------------------------------------


def h_complete_eval(k: int, x_values: Sequence) -> Fraction:
    """h_k(x): sum of all monomials of degree k (0 for k < 0)."""
    if k < 0:
        return Fraction(0)
    xs = _fr(x_values)
    # h[d] for the variables seen so far
    h = [Fraction(1)] + [Fraction(0)] * k
    for x in xs:
        for d in range(1, k + 1):
            h[d] += x * h[d - 1]
    return h[k]


# -- Hall-Littlewood basis expansion ------------------------------------------------


def expand_in_hl_basis(f: TruncSeries, n: int, t) -> Dict[Partition, Fraction]:
    """Coefficients c_lam with f = sum c_lam P_lam(X_1..X_n; t), |lam| <= D.

    Within each degree the partitions are visited in lexicographically
    descending order, a linear extension of dominance.  Since P_lam is x^lam
    plus dominance-smaller monomials, the coefficient of x^lam in the current
    remainder is c_lam.  Only nonzero coefficients are returned.
    """
    if f.k != n:
        raise ValueError(f"series has {f.k} variables, expected {n}")
    if not f.is_symmetric():
        raise ValueError("input series is not symmetric in its variables")
    t = Fraction(t)
    D = f.cutoff
    remainder = dict(f.terms)
    out: Dict[Partition, Fraction] = {}
    for d in range(D + 1):
        for lam in partitions_of(d, max_length=n):
            c = remainder.get(padded(lam, n), Fraction(0))
            if c == 0:
                continue
            out[lam] = c
            for exp, v in _hl_terms(lam, n, t):
                nv = remainder.get(exp, 0) - c * v
                if nv:
                    remainder[exp] = nv
                else:
                    remainder.pop(exp, None)
    if remainder:
        raise ValueError("series is not in the span of Hall-Littlewood polynomials")
    return out


# -- K-tilde via its Cauchy kernel ----------------------------------------------------


def ktilde_kernel(z_values: Sequence, t, t_params: Sequence, m: int, D: int) -> TruncSeries:
    """The kernel whose Hall-Littlewood Q-expansion defines K-tilde, in X_1..X_m.

    prod_{i,j} (1 - t X_i z_j)/(1 - X_i z_j) * prod_{i<j} (1 - X_i X_j)/(1 - t X_i X_j)
    * prod_i (1 - t_0 X_i)(1 - t_1 X_i)(1 - t_2 X_i)(1 - t_3 X_i)/(1 - t X_i^2)
    """
    zs = _fr(z_values)
    t = Fraction(t)
    tp = _fr(t_params)
    if len(tp) != 4:
        raise ValueError("expected four parameters t_0..t_3")
    one = TruncSeries.constant(1, m, D)
    X = [TruncSeries.variable(i + 1, m, D) for i in range(m)]
    acc = one
    for i in range(m):
        for z in zs:
            acc = acc * (one - X[i].scale(t * z)) * series_geom(z, i + 1, m, D)
    for i in range(m):
        for j in range(i + 1, m):
            xx = X[i] * X[j]
            acc = acc * (one - xx) * (one - xx.scale(t)).inverse()
    for i in range(m):
        for p in tp:
            acc = acc * (one - X[i].scale(p))
        acc = acc * (one - (X[i] * X[i]).scale(t)).inverse()
    return acc


def ktilde_coeffs(
    ell: int,
    z_values: Sequence,
    t,
    t_params: Sequence,
    m: int,
    D: int,
    validate: bool = True,
) -> Dict[Partition, Fraction]:
    """K-tilde_lam(z_1..z_ell; t_0..t_3; t) for all |lam| <= D with l(lam) <= m.

    Expands the kernel in m formal variables, reads off Hall-Littlewood
    coefficients and divides by b_lam(t).  With ``validate`` the extraction
    is repeated at cutoff D + 1 and the two results must agree.
    """
    if len(z_values) != ell:
        raise ValueError(f"expected {ell} z-values, got {len(z_values)}")
    t = Fraction(t)
    result = _ktilde_once(z_values, t, t_params, m, D)
    if validate:
        wider = _ktilde_once(z_values, t, t_params, m, D + 1)
        for lam, v in result.items():
            if wider[lam] != v:
                raise ArithmeticError(f"K-tilde coefficient of {lam} moved when the cutoff grew")
    return result


def _ktilde_once(z_values, t, t_params, m, D) -> Dict[Partition, Fraction]:
    kernel = ktilde_kernel(z_values, t, t_params, m, D)
    coeffs = expand_in_hl_basis(kernel, m, t)
    out: Dict[Partition, Fraction] = {}
    for d in range(D + 1):
        for lam in partitions_of(d, max_length=m):
            b = b_coeff(lam, t, 0)
            if b == 0:
                raise DegenerateSample(f"b_{lam}(t) vanishes at t = {t}")
            out[lam] = coeffs.get(lam, Fraction(0)) / b
    return out
