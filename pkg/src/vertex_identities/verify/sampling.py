"""Deterministic rational sample points.

Samples are small rationals p/q with 1 <= |p| <= 9 and 1 <= q <= 9.  Each
draw rejects values that would make a formula degenerate; the identity
builders additionally raise :class:`DegenerateSample` for any vanishing
denominator they meet, and the engine then draws again.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, List, Optional

from ..symfunc import DegenerateSample

HEIGHT = 9


def draw_rational(rng: random.Random, exclude: Iterable[Fraction] = ()) -> Fraction:
    banned = set(exclude)
    for _ in range(1000):
        num = rng.randint(-HEIGHT, HEIGHT)
        if num == 0:
            continue
        v = Fraction(num, rng.randint(1, HEIGHT))
        if v not in banned:
            return v
    raise DegenerateSample("could not draw an admissible rational")


def draw_t(rng: random.Random, fixed: Optional[Fraction] = None) -> Fraction:
    """A generic t (never 0 or +-1) unless a value was fixed by the caller."""
    if fixed is not None:
        return Fraction(fixed)
    return draw_rational(rng, exclude=(Fraction(1), Fraction(-1)))


def draw_distinct(rng: random.Random, k: int, exclude: Iterable[Fraction] = ()) -> List[Fraction]:
    out: List[Fraction] = []
    banned = set(exclude)
    while len(out) < k:
        v = draw_rational(rng, banned)
        out.append(v)
        banned.add(v)
    return out


def draw_symplectic(rng: random.Random, k: int) -> List[Fraction]:
    """Values y_i avoiding +-1 with y_i != y_j^{+-1} and y_i != -y_j^{+-1}."""
    out: List[Fraction] = []
    banned = {Fraction(1), Fraction(-1)}
    while len(out) < k:
        v = draw_rational(rng, banned)
        out.append(v)
        banned.update({v, -v, 1 / v, -1 / v})
    return out
