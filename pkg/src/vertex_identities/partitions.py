"""Integer partitions and the t-coefficients attached to them.

A partition is a plain tuple of positive ints in weakly decreasing order;
the empty partition is ``()``.  Functions that need padded zero parts take
the ambient number of variables explicitly.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Partition = Tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise (drop trailing zeros)."""
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing: {parts}")
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    return tuple(parts)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p > 0)


def padded(lam: Sequence[int], n: int) -> Tuple[int, ...]:
    if len(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than {n} parts")
    return tuple(lam) + (0,) * (n - len(lam))


def multiplicities(lam: Sequence[int]) -> Dict[int, int]:
    """m_i(lambda) for the nonzero parts i."""
    return dict(Counter(p for p in lam if p > 0))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def interlaces(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... (written lam > mu)."""
    size = max(len(lam), len(mu)) + 1
    a = padded(lam, size)
    b = padded(mu, size)
    for i in range(size):
        if a[i] < b[i]:
            return False
        if i + 1 < size and b[i] < a[i + 1]:
            return False
    return True


def interlacing_below(lam: Sequence[int], max_length: int | None = None) -> Iterator[Partition]:
    """All mu with lam > mu (mu obtained by removing a horizontal strip).

    If ``max_length`` is given only mu with at most that many parts are
    produced.
    """
    lam = tuple(lam)
    k = len(lam)
    if max_length is not None and k - 1 > max_length:
        return
    ranges = []
    for i in range(k):
        low = lam[i + 1] if i + 1 < k else 0
        ranges.append(range(lam[i], low - 1, -1))
    for mu in product(*ranges):
        part = make_partition(mu)
        if max_length is None or len(part) <= max_length:
            yield part


def interlacing_above(mu: Sequence[int], max_weight: int, max_length: int | None = None) -> Iterator[Partition]:
    """All lam with lam > mu and |lam| <= max_weight (adding a horizontal strip)."""
    mu = tuple(mu)
    k = len(mu)
    budget = max_weight - sum(mu)
    if budget < 0:
        return
    # lam has at most k+1 parts: lam_1 >= mu_1, mu_{i-1} >= lam_i >= mu_i
    out: List[int] = []

    def rec(i: int, left: int):
        if i == k + 1:
            part = make_partition(out)
            if max_length is None or len(part) <= max_length:
                yield part
            return
        low = mu[i] if i < k else 0
        high = low + left if i == 0 else mu[i - 1]
        high = min(high, low + left)
        for v in range(low, high + 1):
            out.append(v)
            yield from rec(i + 1, left - (v - low))
            out.pop()

    yield from rec(0, budget)


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> List[Partition]:
    """Partitions of exactly ``n``, lexicographically descending."""
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n
    out: List[Partition] = []

    def rec(left: int, cap: int, acc: List[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_length:
            return
        for p in range(min(left, cap), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()

    rec(n, max_part, [])
    return out


def enumerate_partitions(max_weight: int, max_length: int) -> List[Partition]:
    """All partitions with |lam| <= max_weight and l(lam) <= max_length.

    Ordered by weight, then lexicographically descending within a weight.
    """
    if max_weight < 0 or max_length < 0:
        raise ValueError("bounds must be nonnegative")
    out: List[Partition] = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, max_length=max_length))
    return out


# -- t-coefficients -------------------------------------------------------------


def _factor_run(count: int, t: Fraction) -> Fraction:
    """prod_{j=1}^{count} (1 - t^j)."""
    acc = Fraction(1)
    for j in range(1, count + 1):
        acc *= 1 - t ** j
    return acc


def b_coeff(lam: Sequence[int], t, include_zero_parts: int = 0) -> Fraction:
    """prod_i prod_{j=1}^{m_i(lam)} (1 - t^j).

    With ``include_zero_parts = n > 0`` the i = 0 factor with
    m_0 = n - l(lam) is included as well.
    """
    t = Fraction(t)
    acc = Fraction(1)
    for m in multiplicities(lam).values():
        acc *= _factor_run(m, t)
    if include_zero_parts:
        zeros = include_zero_parts - length(lam)
        if zeros < 0:
            raise ValueError(f"{tuple(lam)} has more than {include_zero_parts} parts")
        acc *= _factor_run(zeros, t)
    return acc


def q_integer(j: int, t) -> Fraction:
    """[j]_t = 1 + t + ... + t^{j-1}."""
    t = Fraction(t)
    return sum((t ** i for i in range(j)), Fraction(0))


def v_coeff(lam: Sequence[int], t, n: int) -> Fraction:
    """v_lam(t) = prod_{i>=0} prod_{j=1}^{m_i} (1-t^j)/(1-t), m_0 = n - l(lam).

    Written as a product of t-integers so that it is also defined at t = 1.
    """
    zeros = n - length(lam)
    if zeros < 0:
        raise ValueError(f"{tuple(lam)} has more than {n} parts")
    acc = Fraction(1)
    for m in list(multiplicities(lam).values()) + [zeros]:
        for j in range(1, m + 1):
            acc *= q_integer(j, t)
    return acc


def psi_coeff(lam: Sequence[int], mu: Sequence[int], t) -> Fraction:
    """Branching coefficient for removing the horizontal strip lam/mu.

    Product of (1 - t^{m_i(mu)}) over the parts i >= 1 whose multiplicity
    in mu exceeds the multiplicity in lam by exactly one.
    """
    if not interlaces(lam, mu):
        raise ValueError(f"{tuple(lam)} and {tuple(mu)} do not interlace")
    t = Fraction(t)
    ml, mm = multiplicities(lam), multiplicities(mu)
    acc = Fraction(1)
    for i, m in mm.items():
        if m == ml.get(i, 0) + 1:
            acc *= 1 - t ** m
    return acc


def phi_coeff(lam: Sequence[int], mu: Sequence[int], t) -> Fraction:
    """Companion coefficient: product of (1 - t^{m_i(lam)}) over parts i >= 1
    whose multiplicity in lam exceeds that in mu by exactly one."""
    if not interlaces(lam, mu):
        raise ValueError(f"{tuple(lam)} and {tuple(mu)} do not interlace")
    t = Fraction(t)
    ml, mm = multiplicities(lam), multiplicities(mu)
    acc = Fraction(1)
    for i, m in ml.items():
        if m == mm.get(i, 0) + 1:
            acc *= 1 - t ** m
    return acc


def even_column_coeff(lam: Sequence[int], t, total_variables: int = 0) -> Fraction:
    """prod_{i} prod_{j=2,4,...}^{m_i(lam)} (1 - t^{j-1}).

    The i >= 1 factors are always included.  With ``total_variables = N > 0``
    the i = 0 factor with m_0 = N - l(lam) is included as well.
    """
    t = Fraction(t)

    def run(m: int) -> Fraction:
        acc = Fraction(1)
        for j in range(2, m + 1, 2):
            acc *= 1 - t ** (j - 1)
        return acc

    acc = Fraction(1)
    for m in multiplicities(lam).values():
        acc *= run(m)
    if total_variables:
        zeros = total_variables - length(lam)
        if zeros < 0:
            raise ValueError(f"{tuple(lam)} has more than {total_variables} parts")
        acc *= run(zeros)
    return acc


def has_even_parts(lam: Sequence[int]) -> bool:
    return all(p % 2 == 0 for p in lam)


def has_even_columns(lam: Sequence[int]) -> bool:
    """True iff the conjugate partition has only even parts."""
    return has_even_parts(conjugate(lam))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order lam >= mu (equal weights assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return a == b


def partition_literal(lam: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")" if lam else "()"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return make_partition(int(p) for p in text.replace(" ", ",").split(",") if p)
