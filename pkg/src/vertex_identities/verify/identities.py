"""Left- and right-hand side builders for every registered identity.

A builder takes the resolved size parameters and a seeded RNG, draws one
sample point, and returns both sides in a common representation: a Fraction
(``rationalPoint``), a TruncSeries in the formal x variables with sampled
y and t (``seriesInX``), or a one-variable TruncSeries in q (``qSeries``).

In ``seriesInX`` mode both sides are multiplied by the identity's clearing
factor (a Vandermonde product in x, possibly times a monomial), so that both
are genuine polynomials.  The clearing factor has a known degree c, the
comparison cutoff is D + c, and the left-hand sum runs over |lam| <= D.
Every omitted term has x-degree at least D + 1 + c, so the comparison is
exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..exact import TruncSeries, det, pfaffian, rational_literal, series_geom, vandermonde
from ..latticepf import enumerate_lattice, z_asm_closed, z_osasm_closed, z_uasm_closed
from ..partitions import (
    b_coeff,
    enumerate_partitions,
    even_column_coeff,
    has_even_columns,
    has_even_parts,
    padded,
)
from ..planepart import gs_lhs, symplectic_volume_stable
from ..symfunc import (
    DegenerateSample,
    bchl_eval,
    hl_eval,
    hl_expand,
    ktilde_coeffs,
    ktilde_kernel,
    schur_eval,
    schur_expand,
    sp_eval,
)
from .sampling import draw_distinct, draw_rational, draw_symplectic, draw_t

MODES = ("rationalPoint", "seriesInX", "qSeries")


@dataclass
class Outcome:
    lhs: object
    rhs: object
    sample: Dict[str, object]


Builder = Callable[[Dict[str, object], random.Random], Outcome]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    equation: str
    mode: str
    status: str  # theorem | conjecture | classical
    defaults: Dict[str, int]
    clearing: str
    summary: str
    randomized: bool = True
    builder: Builder = field(default=None, repr=False, compare=False)


# -- helpers --------------------------------------------------------------------------


def _lits(values: Sequence[Fraction]) -> List[str]:
    return [rational_literal(v) for v in values]


def _nz(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise DegenerateSample(f"{what} vanishes at this sample")
    return value


def _one(k: int, D: int) -> TruncSeries:
    return TruncSeries.constant(1, k, D)


def _vars(k: int, D: int) -> List[TruncSeries]:
    return [TruncSeries.variable(i + 1, k, D) for i in range(k)]


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def alternant(exps: Sequence[int], k: int, D: int) -> TruncSeries:
    """det[X_i^{e_j}] as a polynomial in X_1..X_k."""
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for perm in permutations(range(k)):
        e = tuple(exps[perm[i]] for i in range(k))
        terms[e] = terms.get(e, 0) + _perm_sign(perm)
    return TruncSeries(k, D, terms)


def vandermonde_series(k: int, D: int) -> TruncSeries:
    """prod_{i<j} (X_i - X_j)."""
    return alternant([k - 1 - j for j in range(k)], k, D)


def schur_times_vandermonde(lam, k: int, D: int) -> TruncSeries:
    lp = padded(lam, k)
    return alternant([lp[j] - j - 1 + k for j in range(k)], k, D)


def _geom(c: Fraction, i: int, k: int, D: int) -> TruncSeries:
    """1/(1 - c X_i), 0-based i."""
    return series_geom(c, i + 1, k, D)


def _izergin_series(i: int, y: Fraction, t: Fraction, k: int, D: int) -> TruncSeries:
    """(1 - t)/((1 - X_i y)(1 - t X_i y))."""
    return (_geom(y, i, k, D) * _geom(t * y, i, k, D)).scale(1 - t)


def _tsuchiya_series(i: int, y: Fraction, t: Fraction, k: int, D: int) -> TruncSeries:
    yb = 1 / y
    return (_geom(y, i, k, D) * _geom(t * y, i, k, D) * _geom(yb, i, k, D) * _geom(t * yb, i, k, D)).scale(1 - t)


def _pair_kernel(i: int, j: int, t: Fraction, k: int, D: int) -> TruncSeries:
    """(X_i - X_j)(1 - t)/((1 - X_i X_j)(1 - t X_i X_j)) = (X_i - X_j) sum_r (1 - t^{r+1}) (X_i X_j)^r."""
    terms = {}
    for r in range(D // 2 + 1):
        e = [0] * k
        e[i] += r
        e[j] += r
        terms[tuple(e)] = 1 - t ** (r + 1)
    X = _vars(k, D)
    return TruncSeries(k, D, terms) * (X[i] - X[j])


def _prod_pairs(k: int, D: int, fn) -> TruncSeries:
    acc = _one(k, D)
    for i in range(k):
        for j in range(i + 1, k):
            acc = acc * fn(i, j)
    return acc


def _xx(i: int, j: int, k: int, D: int) -> TruncSeries:
    X = _vars(k, D)
    return X[i] * X[j]


def _central_factor(lam, n: int, t: Fraction, positions=None) -> Fraction:
    lp = padded(lam, n)
    acc = Fraction(1)
    for i in positions if positions is not None else range(1, n + 1):
        acc *= 1 - t ** (lp[i - 1] - i + n + 1)
    return acc


def _sym_y_factor(y: Sequence[Fraction]) -> Fraction:
    """Delta(y) prod_{i<j} (1 - 1/(y_i y_j))."""
    acc = vandermonde(y)
    for i in range(len(y)):
        for j in range(i + 1, len(y)):
            acc *= 1 - 1 / (y[i] * y[j])
    return _nz(acc, "Delta(y) prod (1 - ybar ybar)")


def _q_geom(step: int, order: int) -> TruncSeries:
    """1/(1 - q^step) in one variable."""
    return TruncSeries(1, order, {(step * j,): Fraction(1) for j in range(order // step + 1)})


def _q_poly(coeffs: Dict[int, Fraction], order: int) -> TruncSeries:
    return TruncSeries(1, order, {(e,): c for e, c in coeffs.items()})


# -- right-hand sides in x-series form (already multiplied by the clearing factor) ----------


def _rhs_izergin(n: int, y, t, C: int) -> TruncSeries:
    """prod (1 - t X_i y_j) det[izergin] / Delta(y)   (= Delta(X) * RHS)."""
    pref = _one(n, C)
    X = _vars(n, C)
    for i in range(n):
        for yj in y:
            pref = pref * (1 - X[i].scale(t * yj))
    mat = [[_izergin_series(i, yj, t, n, C) for yj in y] for i in range(n)]
    return (pref * det(mat)).scale(1 / _nz(vandermonde(y), "Delta(y)"))


def _rhs_thm1(n: int, y, t, C: int) -> TruncSeries:
    mat = [[_izergin_series(i, yj, t, n, C) for yj in y] for i in range(n)]
    return det(mat).scale(1 / _nz(vandermonde(y), "Delta(y)"))


def _rhs_thm3(n: int, y, t, C: int) -> TruncSeries:
    X = _vars(n, C)
    pref = _one(n, C)
    for i in range(n):
        pref = pref * (1 - (X[i] * X[i]).scale(t))
    mat = [[_tsuchiya_series(i, yj, t, n, C) for yj in y] for i in range(n)]
    return (pref * det(mat)).scale(1 / _sym_y_factor(y))


def _rhs_tsuchiya(m: int, n: int, y, t, C: int) -> TruncSeries:
    """Cleared right side of the U-turn identity (m = n) or its m < n form."""
    X = _vars(m, C)
    pref = _one(m, C)
    for i in range(m):
        for yj in y:
            pref = pref * (1 - X[i].scale(t * yj)) * (1 - X[i].scale(t / yj))
    pref = pref * _prod_pairs(m, C, lambda i, j: (1 - _xx(i, j, m, C).scale(t)).inverse())
    rows = [[_tsuchiya_series(i, yj, t, m, C) for yj in y] for i in range(m)]
    for i in range(m + 1, n + 1):
        e = n - i + 1
        rows.append([TruncSeries.constant((yj ** e - yj ** (-e)) / (yj - 1 / yj), m, C) for yj in y])
    scal = Fraction(1)
    for i in range(1, n - m + 1):
        scal *= 1 - t ** i
    return (pref * det(rows)).scale(scal / _sym_y_factor(y))


def _rhs_kuperberg(N: int, t, C: int) -> TruncSeries:
    mat = [[_pair_kernel(i, j, t, N, C) if i != j else TruncSeries(N, C) for j in range(N)] for i in range(N)]
    pref = _prod_pairs(N, C, lambda i, j: 1 - _xx(i, j, N, C).scale(t))
    return pref * pfaffian(mat)


def _rhs_thm4(N: int, t, C: int) -> TruncSeries:
    mat = [[_pair_kernel(i, j, t, N, C) if i != j else TruncSeries(N, C) for j in range(N)] for i in range(N)]
    return pfaffian(mat)


def _rhs_kuperberg_odd(N: int, t, C: int) -> TruncSeries:
    """(1-t)^n prod (1 - t X_i X_j) Pf[O], O_{i,2n} = X_i   (N = 2n - 1)."""
    size = N + 1
    X = _vars(N, C)
    zero = TruncSeries(N, C)
    mat = [[zero] * size for _ in range(size)]
    for i in range(N):
        for j in range(i + 1, N):
            v = _pair_kernel(i, j, t, N, C).scale(1 / (1 - t))
            mat[i][j], mat[j][i] = v, -v
        mat[i][N], mat[N][i] = X[i], -X[i]
    pref = _prod_pairs(N, C, lambda i, j: 1 - _xx(i, j, N, C).scale(t))
    return (pref * pfaffian(mat)).scale((1 - t) ** (size // 2))


def _rhs_cauchy(m: int, y, C: int, t: Fraction = Fraction(0)) -> TruncSeries:
    X = _vars(m, C)
    acc = _one(m, C)
    for i in range(m):
        for yj in y:
            acc = acc * _geom(yj, i, m, C)
            if t:
                acc = acc * (1 - X[i].scale(t * yj))
    return acc


def _rhs_symp_cauchy(m: int, y, C: int) -> TruncSeries:
    acc = _prod_pairs(m, C, lambda i, j: 1 - _xx(i, j, m, C))
    for i in range(m):
        for yj in y:
            acc = acc * _geom(yj, i, m, C) * _geom(1 / yj, i, m, C)
    return acc


def _rhs_littlewood(n: int, C: int, t: Fraction, single: Optional[str]) -> TruncSeries:
    """prod_{i<j} (1 - t X_i X_j)/(1 - X_i X_j) times the single-variable factor."""
    acc = _prod_pairs(n, C, lambda i, j: (1 - _xx(i, j, n, C).scale(t)) * (1 - _xx(i, j, n, C)).inverse())
    X = _vars(n, C)
    for i in range(n):
        if single == "linear":
            acc = acc * _geom(Fraction(1), i, n, C)
        elif single == "square":
            acc = acc * (1 - X[i] * X[i]).inverse()
    return acc


# -- identity builders -------------------------------------------------------------------


def _b_cauchy_det(p, rng) -> Outcome:
    n = p["n"]
    x, y = draw_distinct(rng, n), draw_distinct(rng, n)
    lhs = det([[1 / _nz(1 - xi * yj, "1 - x y") for yj in y] for xi in x])
    den = Fraction(1)
    for xi in x:
        for yj in y:
            den *= 1 - xi * yj
    rhs = vandermonde(x) * vandermonde(y) / den
    return Outcome(lhs, rhs, {"x": _lits(x), "y": _lits(y)})


def _b_further_cauchy_det(p, rng) -> Outcome:
    n = p["n"]
    x, y = draw_distinct(rng, n), draw_symplectic(rng, n)
    yb = [1 / v for v in y]
    lhs = det([[1 / _nz((1 - xi * yj) * (1 - xi * ybj), "1 - x y") for yj, ybj in zip(y, yb)] for xi in x])
    num = vandermonde(x) * vandermonde(y)
    for i in range(n):
        for j in range(i + 1, n):
            num *= (1 - x[i] * x[j]) * (1 - yb[i] * yb[j])
    den = Fraction(1)
    for xi in x:
        for yj, ybj in zip(y, yb):
            den *= (1 - xi * yj) * (1 - xi * ybj)
    return Outcome(lhs, num / den, {"x": _lits(x), "y": _lits(y)})


def _b_stembridge(p, rng) -> Outcome:
    N = 2 * p["n"]
    x = draw_distinct(rng, N)
    mat = [[Fraction(0)] * N for _ in range(N)]
    rhs = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            v = (x[i] - x[j]) / _nz(1 - x[i] * x[j], "1 - x x")
            mat[i][j], mat[j][i] = v, -v
            rhs *= v
    return Outcome(pfaffian(mat), rhs, {"x": _lits(x)})


def _b_dwpf_lattice(p, rng) -> Outcome:
    n = p["n"]
    t = draw_t(rng, p.get("t"))
    x, y = draw_distinct(rng, n), draw_distinct(rng, n)
    rhs = z_asm_closed(x, y, t)
    lhs = enumerate_lattice("square", x, y, t)[1]
    return Outcome(lhs, rhs, {"x": _lits(x), "y": _lits(y), "t": rational_literal(t)})


def _b_uasm_lattice(p, rng) -> Outcome:
    n = p["n"]
    t = draw_t(rng, p.get("t"))
    x, y = draw_distinct(rng, n, exclude=(Fraction(1), Fraction(-1))), draw_symplectic(rng, n)
    rhs = z_uasm_closed(x, y, t)
    lhs = enumerate_lattice("uTurn", x, y, t)[1]
    return Outcome(lhs, rhs, {"x": _lits(x), "y": _lits(y), "t": rational_literal(t)})


def _b_osasm_lattice(p, rng) -> Outcome:
    N = 2 * p["n"]
    t = draw_t(rng, p.get("t"))
    x = draw_distinct(rng, N)
    rhs = z_osasm_closed(x, t)
    lhs = enumerate_lattice("offDiagonal", x, (), t)[1]
    return Outcome(lhs, rhs, {"x": _lits(x), "t": rational_literal(t)})


def _b_cb(p, rng, vandermonde_case: bool) -> Outcome:
    m, M = p["m"], p["M"]
    if m % 2 or not m <= M:
        raise ValueError("need m even and m <= M")
    A = [[Fraction(0)] * M for _ in range(M)]
    for k in range(M):
        for l in range(k + 1, M):
            v = draw_rational(rng)
            A[k][l], A[l][k] = v, -v
    sample: Dict[str, object] = {"A": [_lits(r) for r in A]}
    if vandermonde_case:
        x = draw_distinct(rng, m)
        T = [[xi ** j for j in range(M)] for xi in x]
        sample["x"] = _lits(x)
    else:
        T = [[draw_rational(rng) for _ in range(M)] for _ in range(m)]
        sample["T"] = [_lits(r) for r in T]
    lhs = Fraction(0)
    for S in combinations(range(M), m):
        sub = [[A[a][b] for b in S] for a in S]
        lhs += pfaffian(sub) * det([[T[i][s] for s in S] for i in range(m)])
    B = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            B[i][j] = sum(
                (A[k][l] * (T[i][k] * T[j][l] - T[i][l] * T[j][k]) for k in range(M) for l in range(k + 1, M)),
                Fraction(0),
            )
    return Outcome(lhs, pfaffian(B), sample)


def _series_sample(y=None, t=None, **extra) -> Dict[str, object]:
    out: Dict[str, object] = {}
    if y is not None:
        out["y"] = _lits(y)
    if t is not None:
        out["t"] = rational_literal(t)
    out.update(extra)
    return out


def _b_s_cauch(p, rng) -> Outcome:
    m, n, D = p["m"], p["n"], p["D"]
    y = draw_distinct(rng, n)
    lhs = TruncSeries(m, D)
    for lam in enumerate_partitions(D, min(m, n)):
        lhs = lhs + schur_expand(lam, m, D).scale(schur_eval(lam, y))
    return Outcome(lhs, _rhs_cauchy(m, y, D), _series_sample(y))


def _b_hl_cauch(p, rng) -> Outcome:
    m, n, D = p["m"], p["n"], p["D"]
    t = draw_t(rng, p.get("t"))
    y = draw_distinct(rng, n)
    lhs = TruncSeries(m, D)
    for lam in enumerate_partitions(D, min(m, n)):
        lhs = lhs + hl_expand(lam, m, t, D).scale(b_coeff(lam, t) * hl_eval(lam, y, t))
    return Outcome(lhs, _rhs_cauchy(m, y, D, t), _series_sample(y, t))


def _b_symp_cauch(p, rng) -> Outcome:
    m, n, D = p["m"], p["n"], p["D"]
    if m > n:
        raise ValueError("need m <= n")
    y = draw_symplectic(rng, n)
    lhs = TruncSeries(m, D)
    for lam in enumerate_partitions(D, m):
        lhs = lhs + schur_expand(lam, m, D).scale(sp_eval(lam, y))
    return Outcome(lhs, _rhs_symp_cauchy(m, y, D), _series_sample(y))


_LITTLEWOOD_SHAPES = {"1": lambda lam: True, "2": has_even_parts, "3": has_even_columns}
_LITTLEWOOD_SINGLE = {"1": "linear", "2": "square", "3": None}


def _b_s_little(which: str):
    def build(p, rng) -> Outcome:
        n, D = p["n"], p["D"]
        lhs = TruncSeries(n, D)
        for lam in enumerate_partitions(D, n):
            if _LITTLEWOOD_SHAPES[which](lam):
                lhs = lhs + schur_expand(lam, n, D)
        return Outcome(lhs, _rhs_littlewood(n, D, Fraction(0), _LITTLEWOOD_SINGLE[which]), {})

    return build


def _b_hl_little(which: str):
    def build(p, rng) -> Outcome:
        n, D = p["n"], p["D"]
        t = draw_t(rng, p.get("t"))
        lhs = TruncSeries(n, D)
        for lam in enumerate_partitions(D, n):
            if _LITTLEWOOD_SHAPES[which](lam):
                c = even_column_coeff(lam, t) if which == "3" else Fraction(1)
                lhs = lhs + hl_expand(lam, n, t, D).scale(c)
        return Outcome(lhs, _rhs_littlewood(n, D, t, _LITTLEWOOD_SINGLE[which]), _series_sample(t=t))

    return build


def _b_thm1(p, rng) -> Outcome:
    n, D = p["n"], p["D"]
    t = draw_t(rng, p.get("t"))
    y = draw_distinct(rng, n)
    C = D + n * (n - 1) // 2
    lhs = TruncSeries(n, C)
    for lam in enumerate_partitions(D, n):
        c = _central_factor(lam, n, t)
        if c:
            lhs = lhs + schur_times_vandermonde(lam, n, C).scale(c * schur_eval(lam, y))
    return Outcome(lhs, _rhs_thm1(n, y, t, C), _series_sample(y, t))


def _b_thm2(p, rng) -> Outcome:
    n, D = p["n"], p["D"]
    t = draw_t(rng, p.get("t"))
    y = draw_distinct(rng, n)
    C = D + n * (n - 1) // 2
    vdm = vandermonde_series(n, C)
    lhs = TruncSeries(n, C)
    for lam in enumerate_partitions(D, n):
        c = b_coeff(lam, t, n) * hl_eval(lam, y, t)
        if c:
            lhs = lhs + hl_expand(lam, n, t, C).scale(c)
    return Outcome(lhs * vdm, _rhs_izergin(n, y, t, C), _series_sample(y, t))


def _b_knw_pdwpf(p, rng) -> Outcome:
    m, n, D = p["m"], p["n"], p["D"]
    if m > n:
        raise ValueError("need m <= n")
    t = draw_t(rng, p.get("t"))
    y = draw_distinct(rng, n)
    C = D + m * (m - 1) // 2 + m * (n - m)
    X = _vars(m, C)
    clear = vandermonde_series(m, C)
    for i in range(m):
        clear = clear * X[i] ** (n - m)
    lhs = TruncSeries(m, C)
    for lam in enumerate_partitions(D, m):
        c = b_coeff(lam, t, n) * hl_eval(lam, y, t)
        if c:
            lhs = lhs + hl_expand(lam, m, t, C).scale(c)
    pref = _one(m, C)
    for i in range(m):
        for yj in y:
            pref = pref * (1 - X[i].scale(t * yj))
    rows = [[_izergin_series(i, yj, t, m, C) for yj in y] for i in range(m)]
    for i in range(m + 1, n + 1):
        rows.append([TruncSeries.constant(yj ** (n - i), m, C) for yj in y])
    scal = Fraction(1)
    for i in range(1, n - m + 1):
        scal *= 1 - t ** i
    rhs = (pref * det(rows)).scale(scal / _nz(vandermonde(y), "Delta(y)"))
    return Outcome(lhs * clear, rhs, _series_sample(y, t))


def _b_thm3(p, rng) -> Outcome:
    n, D = p["n"], p["D"]
    t = draw_t(rng, p.get("t"))
    y = draw_symplectic(rng, n)
    C = D + n * (n - 1) // 2
    lhs = TruncSeries(n, C)
    for lam in enumerate_partitions(D, n):
        c = _central_factor(lam, n, t)
        if c:
            lhs = lhs + schur_times_vandermonde(lam, n, C).scale(c * sp_eval(lam, y))
    return Outcome(lhs, _rhs_thm3(n, y, t, C), _series_sample(y, t))


def _b_conj1(p, rng) -> Outcome:
    n, D = p["n"], p["D"]
    t = draw_t(rng, p.get("t"))
    y = draw_symplectic(rng, n)
    C = D + n * (n - 1) // 2
    lhs = TruncSeries(n, C)
    for lam in enumerate_partitions(D, n):
        c = b_coeff(lam, t, n) * bchl_eval(lam, y, t)
        if c:
            lhs = lhs + hl_expand(lam, n, t, C).scale(c)
    return Outcome(lhs * vandermonde_series(n, C), _rhs_tsuchiya(n, n, y, t, C), _series_sample(y, t))


def _b_conj1prime(p, rng) -> Outcome:
    m, n, D = p["m"], p["n"], p["D"]
    if m > n:
        raise ValueError("need m <= n")
    t = draw_t(rng, p.get("t"))
    y = draw_symplectic(rng, n)
    C = D + m * (m - 1) // 2 + m * (n - m)
    X = _vars(m, C)
    clear = vandermonde_series(m, C)
    for i in range(m):
        clear = clear * X[i] ** (n - m)
    lhs = TruncSeries(m, C)
    for lam in enumerate_partitions(D, m):
        c = b_coeff(lam, t, n) * bchl_eval(lam, y, t)
        if c:
            lhs = lhs + hl_expand(lam, m, t, C).scale(c)
    return Outcome(lhs * clear, _rhs_tsuchiya(m, n, y, t, C), _series_sample(y, t))


def _even_column_partitions(D: int, length_bound: int):
    return [lam for lam in enumerate_partitions(D, length_bound) if has_even_columns(lam)]


def _b_thm4(p, rng) -> Outcome:
    N = 2 * p["n"]
    D = p["D"]
    t = draw_t(rng, p.get("t"))
    C = D + N * (N - 1) // 2
    lhs = TruncSeries(N, C)
    for lam in _even_column_partitions(D, N):
        c = _central_factor(lam, N, t, positions=range(2, N + 1, 2))
        if c:
            lhs = lhs + schur_times_vandermonde(lam, N, C).scale(c)
    return Outcome(lhs, _rhs_thm4(N, t, C), _series_sample(t=t))


def _b_conj2(p, rng) -> Outcome:
    N = 2 * p["n"]
    D = p["D"]
    t = draw_t(rng, p.get("t"))
    C = D + N * (N - 1) // 2
    lhs = TruncSeries(N, C)
    for lam in _even_column_partitions(D, N):
        c = even_column_coeff(lam, t, N)
        if c:
            lhs = lhs + hl_expand(lam, N, t, C).scale(c)
    return Outcome(lhs * vandermonde_series(N, C), _rhs_kuperberg(N, t, C), _series_sample(t=t))


def _b_conj2prime(p, rng) -> Outcome:
    n, D = p["n"], p["D"]
    N = 2 * n - 1
    t = draw_t(rng, p.get("t"))
    C = D + N + N * (N - 1) // 2
    X = _vars(N, C)
    clear = vandermonde_series(N, C)
    for i in range(N):
        clear = clear * X[i]
    lhs = TruncSeries(N, C)
    for lam in _even_column_partitions(D, N):
        c = even_column_coeff(lam, t, 2 * n)
        if c:
            lhs = lhs + hl_expand(lam, N, t, C).scale(c)
    return Outcome(lhs * clear, _rhs_kuperberg_odd(N, t, C), _series_sample(t=t))


def _b_ktilde(p, rng) -> Outcome:
    m, ell, D = p["m"], p["ell"], p["D"]
    t = draw_t(rng, p.get("t"))
    z = draw_distinct(rng, ell)
    tp = [draw_rational(rng) for _ in range(4)]
    # K-tilde read off in m + 1 variables, then re-summed in m variables
    coeffs = ktilde_coeffs(ell, z, t, tp, m + 1, D, validate=False)
    lhs = TruncSeries(m, D)
    for lam, v in coeffs.items():
        if len(lam) <= m and v:
            lhs = lhs + hl_expand(lam, m, t, D).scale(b_coeff(lam, t) * v)
    rhs = ktilde_kernel(z, t, tp, m, D)
    return Outcome(lhs, rhs, {"z": _lits(z), "t": rational_literal(t), "tParams": _lits(tp)})


# plane-partition generating series


def _b_pp(series_id: str):
    def build(p, rng) -> Outcome:
        D = p["D"]
        if series_id in ("s-pp-gs", "hl-pp-gs"):
            m, n = p["m"], p["n"]
            y = draw_distinct(rng, n)
            t = draw_t(rng, p.get("t")) if series_id == "hl-pp-gs" else Fraction(0)
            lhs = gs_lhs(series_id, m=m, n=n, D=D, y=y, t=t)
            return Outcome(lhs, _rhs_cauchy(m, y, D, t), _series_sample(y, t if t else None))
        if series_id == "pp-ASM-gs":
            n = p["n"]
            t = draw_t(rng, p.get("t"))
            y = draw_distinct(rng, n)
            C = D + n * (n - 1) // 2
            lhs = gs_lhs(series_id, n=n, D=D, y=y, t=t).truncate(C) * vandermonde_series(n, C)
            return Outcome(lhs, _rhs_izergin(n, y, t, C), _series_sample(y, t))
        if series_id == "symp-cauch-pp":
            m, n = p["m"], p["n"]
            y = draw_symplectic(rng, n)
            lhs = gs_lhs(series_id, m=m, n=n, D=D, y=y)
            return Outcome(lhs, _rhs_symp_cauchy(m, y, D), _series_sample(y))
        if series_id == "symp-pp-UASM":
            n = p["n"]
            t = draw_t(rng, p.get("t"))
            y = draw_symplectic(rng, n)
            C = D + n * (n - 1) // 2
            lhs = gs_lhs(series_id, n=n, D=D, y=y, t=t).truncate(C) * vandermonde_series(n, C)
            return Outcome(lhs, _rhs_thm3(n, y, t, C), _series_sample(y, t))
        if series_id == "s-little3-pp-gs":
            n = p["n"]
            return Outcome(gs_lhs(series_id, n=n, D=D), _rhs_littlewood(n, D, Fraction(0), None), {})
        if series_id == "hl-little3-pp-gs":
            n = p["n"]
            t = draw_t(rng, p.get("t"))
            return Outcome(gs_lhs(series_id, n=n, D=D, t=t), _rhs_littlewood(n, D, t, None), _series_sample(t=t))
        if series_id == "sym-pp-OSASM":
            N = 2 * p["n"]
            t = draw_t(rng, p.get("t"))
            C = D + N * (N - 1) // 2
            lhs = gs_lhs(series_id, n=N, D=D, t=t).truncate(C) * vandermonde_series(N, C)
            return Outcome(lhs, _rhs_kuperberg(N, t, C), _series_sample(t=t))
        raise ValueError(series_id)

    return build


# q-series


def _b_vol_pp(p, rng) -> Outcome:
    m, n, order = p["m"], p["n"], p["order"]
    rhs = TruncSeries.constant(1, 1, order)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            rhs = rhs * _q_geom(i + j - 1, order)
    return Outcome(gs_lhs("vol-pp", m=m, n=n, order=order), rhs, {})


def _b_macmahon(p, rng) -> Outcome:
    order = p["order"]
    rhs = TruncSeries.constant(1, 1, order)
    for i in range(1, order + 1):
        rhs = rhs * _q_geom(i, order) ** i
    return Outcome(gs_lhs("macmahon", order=order), rhs, {})


def _b_vuletic(p, rng) -> Outcome:
    order = p["order"]
    t = draw_t(rng, p.get("t"))
    rhs = TruncSeries.constant(1, 1, order)
    for i in range(1, order + 1):
        rhs = rhs * (_q_poly({0: Fraction(1), i: -t}, order) * _q_geom(i, order)) ** i
    return Outcome(gs_lhs("vuletic-gs", order=order, t=t), rhs, _series_sample(t=t))


def _b_symp_pp_vol(p, rng) -> Outcome:
    m, n, order = p["m"], p["n"], p["order"]
    lhs, cutoff = symplectic_volume_stable(m, n, order)
    rhs = TruncSeries.constant(1, 1, order)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            rhs = rhs * _q_poly({0: Fraction(1), i + j + 1: Fraction(-1)}, order)
        rhs = rhs * _q_geom(i, order) ** n * _q_geom(i + 1, order) ** n
    return Outcome(lhs, rhs, {"stableCentralCutoff": cutoff})


# -- registry --------------------------------------------------------------------------------


def _spec(id, equation, mode, status, defaults, clearing, summary, builder, randomized=True):
    return IdentitySpec(id, equation, mode, status, dict(defaults), clearing, summary, randomized, builder)


REGISTRY: Dict[str, IdentitySpec] = {
    s.id: s
    for s in [
        _spec("cauchy-det", "cauch-det", "rationalPoint", "classical", {"n": 3}, "none",
              "Cauchy determinant factorisation", _b_cauchy_det),
        _spec("further-cauchy-det", "further-cauch-det", "rationalPoint", "classical", {"n": 3}, "none",
              "Symplectic-type Cauchy determinant factorisation", _b_further_cauchy_det),
        _spec("stembridge-pf", "stem-pf", "rationalPoint", "classical", {"n": 2}, "none",
              "Pfaffian of (x_i - x_j)/(1 - x_i x_j) over 2n variables", _b_stembridge),
        _spec("dwpf-lattice", "ize-det", "rationalPoint", "classical", {"n": 3}, "none",
              "Domain wall lattice sum equals the Izergin determinant", _b_dwpf_lattice),
        _spec("uasm-lattice", "tsu-det", "rationalPoint", "classical", {"n": 2}, "none",
              "U-turn lattice sum equals the Tsuchiya determinant", _b_uasm_lattice),
        _spec("osasm-lattice", "kup-osasm", "rationalPoint", "classical", {"n": 2}, "none",
              "Off-diagonal lattice sum (2n lines) equals the Kuperberg Pfaffian", _b_osasm_lattice),
        _spec("cb-analog1", "cb-analog1", "rationalPoint", "classical", {"m": 2, "M": 4}, "none",
              "Pfaffian Cauchy-Binet analogue, random T", lambda p, r: _b_cb(p, r, False)),
        _spec("cb-analog2", "cb-analog2", "rationalPoint", "classical", {"m": 2, "M": 4}, "none",
              "Pfaffian Cauchy-Binet analogue, T_ij = x_i^(j-1)", lambda p, r: _b_cb(p, r, True)),
        _spec("s-cauch", "s-cauch", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Schur Cauchy identity", _b_s_cauch),
        _spec("hl-cauch2", "hl-cauch2", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Hall-Littlewood Cauchy identity", _b_hl_cauch),
        _spec("symp-cauch", "symp-cauch", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Schur / symplectic Cauchy identity (m <= n)", _b_symp_cauch),
        _spec("s-little1", "s-little1", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Schur Littlewood identity, all shapes", _b_s_little("1"), randomized=False),
        _spec("s-little2", "s-little2", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Schur Littlewood identity, even rows", _b_s_little("2"), randomized=False),
        _spec("s-little3", "s-little3", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Schur Littlewood identity, even columns", _b_s_little("3"), randomized=False),
        _spec("HL-little1", "HL-little1", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Hall-Littlewood Littlewood identity, all shapes", _b_hl_little("1")),
        _spec("HL-little2", "HL-little2", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Hall-Littlewood Littlewood identity, even rows", _b_hl_little("2")),
        _spec("HL-little3", "HL-little3", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Hall-Littlewood Littlewood identity, even columns", _b_hl_little("3")),
        _spec("thm1", "s-cauchy-refine", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x)",
              "Schur expansion of the Izergin determinant", _b_thm1),
        _spec("thm2", "knw-id", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x)",
              "Hall-Littlewood expansion of the Izergin determinant", _b_thm2),
        _spec("knw-pdwpf", "knw-pdwpf", "seriesInX", "theorem", {"m": 1, "n": 2, "D": 6},
              "Delta(x_1..x_m) prod x_i^(n-m)", "Rectangular (m < n) form of thm2", _b_knw_pdwpf),
        _spec("thm3", "s-uasm", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x)",
              "Schur / symplectic expansion of the U-turn determinant", _b_thm3),
        _spec("conj1", "uasm-conj", "seriesInX", "conjecture", {"n": 2, "D": 6}, "Delta(x)",
              "Hall-Littlewood / BC_n Hall-Littlewood expansion of the U-turn determinant", _b_conj1),
        _spec("conj1prime", "uasm-conj-pdwpf", "seriesInX", "conjecture", {"m": 1, "n": 2, "D": 5},
              "Delta(x_1..x_m) prod x_i^(n-m)", "Rectangular (m < n) form of conj1", _b_conj1prime),
        _spec("thm4", "s-refined-little", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x_1..x_2n)",
              "Refined Schur Littlewood identity in 2n variables", _b_thm4),
        _spec("conj2", "osasm-conj", "seriesInX", "conjecture", {"n": 2, "D": 6}, "Delta(x_1..x_2n)",
              "Hall-Littlewood expansion of the Kuperberg Pfaffian in 2n variables", _b_conj2),
        _spec("conj2prime", "osasm-conj-pdwpf", "seriesInX", "conjecture", {"n": 2, "D": 5},
              "Delta(x_1..x_2n-1) prod x_i", "Odd (2n - 1 variables) form of conj2", _b_conj2prime),
        _spec("ktilde-cauchy", "Ktilde-cauchy", "seriesInX", "classical", {"m": 1, "ell": 2, "D": 6}, "none",
              "K-tilde read off in m + 1 variables re-sums to the m-variable kernel", _b_ktilde),
        _spec("s-pp-gs", "s-pp-gs", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Plane partitions in an m x n box", _b_pp("s-pp-gs")),
        _spec("hl-pp-gs", "hl-pp-gs", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Path-weighted plane partitions", _b_pp("hl-pp-gs")),
        _spec("pp-ASM-gs", "pp-ASM-gs", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x)",
              "Plane partitions with height-0 paths versus the domain wall partition function", _b_pp("pp-ASM-gs")),
        _spec("symp-cauch-pp", "symp-cauch-pp", "seriesInX", "classical", {"m": 2, "n": 2, "D": 6}, "none",
              "Symplectic plane partitions", _b_pp("symp-cauch-pp")),
        _spec("symp-pp-UASM", "symp-pp-UASM", "seriesInX", "theorem", {"n": 2, "D": 6}, "Delta(x)",
              "Centrally refined symplectic plane partitions", _b_pp("symp-pp-UASM")),
        _spec("s-little3-pp-gs", "s-little3-pp-gs", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Symmetric plane partitions with paired diagonal", _b_pp("s-little3-pp-gs"), randomized=False),
        _spec("hl-little3-pp-gs", "hl-little3-pp-gs", "seriesInX", "classical", {"n": 3, "D": 6}, "none",
              "Path-weighted symmetric plane partitions with paired diagonal", _b_pp("hl-little3-pp-gs")),
        _spec("sym-pp-OSASM", "sym-pp-OSASM", "seriesInX", "conjecture", {"n": 2, "D": 6}, "Delta(x_1..x_2n)",
              "Symmetric plane partitions with height-0 diagonal paths (2n variables)", _b_pp("sym-pp-OSASM")),
        _spec("vol-pp", "vol-pp", "qSeries", "classical", {"m": 2, "n": 3, "order": 8}, "none",
              "Volume generating series in an m x n box", _b_vol_pp, randomized=False),
        _spec("macmahon", "macmahon", "qSeries", "classical", {"order": 6}, "none",
              "MacMahon generating series", _b_macmahon, randomized=False),
        _spec("vuletic-gs", "vuletic-gs", "qSeries", "classical", {"order": 6}, "none",
              "t-refined MacMahon generating series", _b_vuletic),
        _spec("symp-pp-vol", "symp-pp-vol", "qSeries", "classical", {"m": 2, "n": 2, "order": 6}, "none",
              "Volume-weighted symplectic plane partitions", _b_symp_pp_vol, randomized=False),
    ]
}
