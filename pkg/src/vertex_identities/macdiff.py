"""Macdonald difference operators at the specialisations q = t and q = 0.

Operators act on point evaluators: a function ``f`` taking a sequence of n
Fractions and returning a Fraction.  ``apply_Dn`` computes

    D_n(z; q, t) f = sum_r z^r sum_{|S| = r} t^{r(r-1)/2}
                     prod_{i in S, j not in S} (t x_i - x_j)/(x_i - x_j)
                     f(x with x_i -> q x_i for i in S)

exactly.  At q = 0 the scaled coordinates become 0, so ``f`` must be total
there (the Cauchy kernel is; for polynomial families use the branching
evaluator, which accepts repeated coordinates).
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .partitions import Partition, padded
from .symfunc import DegenerateSample, branching_eval, schur_eval

Evaluator = Callable[[Sequence[Fraction]], Fraction]


def apply_Dn(f: Evaluator, z, q, t, point: Sequence) -> Fraction:
    """D_n(z; q, t) applied to ``f`` and evaluated at ``point``."""
    xs = [Fraction(v) for v in point]
    z, q, t = Fraction(z), Fraction(q), Fraction(t)
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("difference operators need pairwise distinct coordinates")
    total = Fraction(0)
    for r in range(n + 1):
        zr = z ** r
        if zr == 0:
            continue
        inner = Fraction(0)
        for S in combinations(range(n), r):
            inside = set(S)
            c = Fraction(1)
            for i in S:
                for j in range(n):
                    if j not in inside:
                        c *= (t * xs[i] - xs[j]) / (xs[i] - xs[j])
            if c == 0:
                continue
            shifted = [q * x if i in inside else x for i, x in enumerate(xs)]
            inner += c * f(shifted)
        total += zr * t ** (r * (r - 1) // 2) * inner
    return total


def eigenvalue(lam: Partition, n: int, z, q, t) -> Fraction:
    """prod_i (1 + z q^{lam_i} t^{n-i}), with q^0 = 1 also at q = 0."""
    z, q, t = Fraction(z), Fraction(q), Fraction(t)
    acc = Fraction(1)
    for i, part in enumerate(padded(lam, n), 1):
        qp = Fraction(1) if part == 0 else q ** part
        acc *= 1 + z * qp * t ** (n - i)
    return acc


def _sample_point(rng: random.Random, n: int) -> list:
    pts: list = []
    while len(pts) < n:
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if v != 0 and v not in pts:
            pts.append(v)
    return pts


def eigenfunction(lam: Partition, q, t) -> Evaluator:
    """The polynomial evaluator whose eigenvalue is tested at this q."""
    q, t = Fraction(q), Fraction(t)
    if q == t:
        return lambda xs: schur_eval(lam, xs)
    if q == 0:
        return lambda xs: branching_eval(lam, xs, t)
    raise ValueError("only the specialisations q = t and q = 0 are implemented")


def eigen_check(lam: Partition, n: int, z, q, t, samples: int = 3, seed: int = 0) -> bool:
    """True iff D_n(z; q, t) f = eigenvalue * f at ``samples`` random points."""
    f = eigenfunction(tuple(lam), q, t)
    ev = eigenvalue(lam, n, z, q, t)
    rng = random.Random(seed)
    done = attempts = 0
    while done < samples:
        attempts += 1
        if attempts > 100 * samples:
            raise DegenerateSample("could not draw a non-degenerate sample")
        pt = _sample_point(rng, n)
        try:
            lhs = apply_Dn(f, z, q, t, pt)
            rhs = ev * f(pt)
        except (DegenerateSample, ZeroDivisionError):
            continue
        if lhs != rhs:
            return False
        done += 1
    return True


def cauchy_kernel(y: Sequence, t) -> Evaluator:
    """x -> prod_{i,j} (1 - t x_i y_j)/(1 - x_i y_j) for fixed y."""
    ys = [Fraction(v) for v in y]
    t = Fraction(t)

    def f(xs: Sequence[Fraction]) -> Fraction:
        acc = Fraction(1)
        for x in xs:
            for yv in ys:
                d = 1 - x * yv
                if d == 0:
                    raise DegenerateSample("x y = 1 in the Cauchy kernel")
                acc *= (1 - t * x * yv) / d
        return acc

    return f
