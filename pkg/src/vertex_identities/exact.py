"""Exact scalars, truncated multivariate series, determinants and Pfaffians.

Scalars are :class:`fractions.Fraction`.  Series are polynomials in formal
variables ``X_1..X_k`` with rational coefficients, truncated at a total
degree ``D``.  Both determinant and Pfaffian work over any commutative ring
whose elements support ``+``, ``-`` and ``*`` with ints, which covers
``Fraction`` and :class:`TruncSeries`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` literals to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def rational_literal(value: Fraction) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class TruncSeries:
    """Polynomial in ``X_1..X_k`` over Q with all terms of degree > D dropped.

    Instances are treated as immutable.  Exponents are dense tuples of
    length ``k``; zero coefficients are never stored.
    """

    __slots__ = ("k", "cutoff", "terms", "_hash")

    def __init__(self, k: int, cutoff: int, terms: Dict[Exponent, Fraction] | None = None):
        if k < 0 or cutoff < 0:
            raise ValueError("variable count and cutoff must be nonnegative")
        self.k = k
        self.cutoff = cutoff
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != k:
                    raise ValueError(f"exponent {exp} does not have length {k}")
                if sum(exp) > cutoff or c == 0:
                    continue
                clean[tuple(exp)] = as_rational(c)
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c, k: int, cutoff: int) -> "TruncSeries":
        return cls(k, cutoff, {(0,) * k: as_rational(c)})

    @classmethod
    def variable(cls, index: int, k: int, cutoff: int) -> "TruncSeries":
        """The series ``X_index`` (1-based)."""
        return cls.monomial(_unit(index, k), 1, k, cutoff)

    @classmethod
    def monomial(cls, exp: Sequence[int], c, k: int, cutoff: int) -> "TruncSeries":
        return cls(k, cutoff, {tuple(exp): as_rational(c)})

    @classmethod
    def _raw(cls, k: int, cutoff: int, terms: Dict[Exponent, Fraction]) -> "TruncSeries":
        obj = cls.__new__(cls)
        obj.k = k
        obj.cutoff = cutoff
        obj.terms = terms
        obj._hash = None
        return obj

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "TruncSeries") -> None:
        if self.k != other.k or self.cutoff != other.cutoff:
            raise ValueError(
                f"incompatible series: (k={self.k}, D={self.cutoff}) vs "
                f"(k={other.k}, D={other.cutoff})"
            )

    def _lift(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.k, self.cutoff)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return TruncSeries._raw(self.k, self.cutoff, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.k, self.cutoff, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "TruncSeries":
        c = as_rational(c)
        if c == 0:
            return TruncSeries._raw(self.k, self.cutoff, {})
        return TruncSeries._raw(self.k, self.cutoff, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if not a or not b:
            return TruncSeries._raw(self.k, self.cutoff, {})
        D = self.cutoff
        by_deg: Dict[int, List[Tuple[Exponent, Fraction]]] = {}
        for exp, c in b.items():
            by_deg.setdefault(sum(exp), []).append((exp, c))
        degs = sorted(by_deg)
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for ea, ca in a.items():
            room = D - sum(ea)
            for d in degs:
                if d > room:
                    break
                for eb, cb in by_deg[d]:
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = get(e, 0) + ca * cb
        return TruncSeries._raw(self.k, self.cutoff, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncSeries.constant(1, self.k, self.cutoff)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not a unit")
        # 1/f = (1/c0) * sum_j (1 - f/c0)^j, exact up to the cutoff
        h = TruncSeries.constant(1, self.k, self.cutoff) - self.scale(1 / c0)
        acc = TruncSeries.constant(1, self.k, self.cutoff)
        power = acc
        for _ in range(self.cutoff):
            power = power * h
            if not power.terms:
                break
            acc = acc + power
        return acc.scale(1 / c0)

    # -- comparisons and inspection ---------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.k, self.cutoff)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.k, self.cutoff, self.terms) == (other.k, other.cutoff, other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.cutoff, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"TruncSeries(k={self.k}, D={self.cutoff}, {self.pretty()})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"X{i + 1}" for i in range(self.k)]
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.terms[exp]
            mono = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(names, exp) if p
            )
            coef = rational_literal(c)
            parts.append(coef if not mono else (mono if c == 1 else f"{coef}*{mono}"))
        return " + ".join(parts)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.k)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in graded order (degree, then exponent descending)."""
        for exp in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            yield exp, self.terms[exp]

    def homogeneous_part(self, degree: int) -> "TruncSeries":
        return TruncSeries._raw(
            self.k, self.cutoff, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def truncate(self, cutoff: int) -> "TruncSeries":
        """Re-cut at ``cutoff`` (which may be larger; no new terms appear)."""
        return TruncSeries(self.k, cutoff, self.terms)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(point)}")
        pt = [as_rational(v) for v in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, p in zip(pt, exp):
                if p:
                    term *= v ** p
            total += term
        return total

    def permute(self, perm: Sequence[int]) -> "TruncSeries":
        """Rename ``X_i -> X_perm[i]`` (0-based permutation)."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.k
            for i, p in enumerate(exp):
                new[perm[i]] = p
            out[tuple(new)] = c
        return TruncSeries._raw(self.k, self.cutoff, out)

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent transposition of variables."""
        for i in range(self.k - 1):
            perm = list(range(self.k))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def first_difference(self, other: "TruncSeries"):
        """Lowest graded exponent where two series disagree, or None."""
        self._check(other)
        keys = set(self.terms) | set(other.terms)
        for exp in sorted(keys, key=lambda e: (sum(e), tuple(-x for x in e))):
            a, b = self.coefficient(exp), other.coefficient(exp)
            if a != b:
                return exp, a, b
        return None


def _unit(index: int, k: int) -> Exponent:
    if not 1 <= index <= k:
        raise ValueError(f"variable index {index} out of range 1..{k}")
    return tuple(1 if i == index - 1 else 0 for i in range(k))


def series_geom(c, var_index: int, k: int, D: int) -> TruncSeries:
    """``sum_{j=0}^{D} c^j X_var_index^j``, i.e. ``1/(1 - c X)`` truncated."""
    c = as_rational(c)
    base = _unit(var_index, k)
    terms = {}
    power = Fraction(1)
    for j in range(D + 1):
        if power:
            terms[tuple(j * b for b in base)] = power
        power *= c
    return TruncSeries(k, D, terms)


def series_linear(coeffs: Dict[Exponent, object], k: int, D: int) -> TruncSeries:
    """Small helper: build a polynomial from an exponent->coefficient map."""
    return TruncSeries(k, D, {tuple(e): as_rational(c) for e, c in coeffs.items()})


# -- linear algebra -----------------------------------------------------------


def _is_scalar_matrix(m: Sequence[Sequence]) -> bool:
    return all(isinstance(v, (int, Fraction)) for row in m for v in row)


def det(m: Sequence[Sequence]):
    """Exact determinant.

    Rational matrices use fraction-free Bareiss elimination.  Anything else
    goes through a division-free Laplace expansion over column subsets
    (``n * 2^n`` ring multiplications).
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    if _is_scalar_matrix(m):
        return _bareiss(m)
    return _laplace_det(m)


def _bareiss(m: Sequence[Sequence]) -> Fraction:
    # Clear denominators row by row so the elimination runs over Z.
    n = len(m)
    rows = []
    scale = Fraction(1)
    for row in m:
        row = [as_rational(v) for v in row]
        den = reduce(lambda a, b: a * b // _gcd(a, b), (v.denominator for v in row), 1)
        rows.append([int(v * den) for v in row])
        scale /= den
    a = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _laplace_det(m: Sequence[Sequence]):
    n = len(m)
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors = {0: 1}
    for r in range(n):
        nxt = {}
        for mask, val in minors.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = m[r][j]
                if isinstance(entry, (int, Fraction)) and entry == 0:
                    continue
                # sign: number of chosen columns to the right of j
                above = bin(mask >> (j + 1)).count("1")
                term = entry * val
                if above & 1:
                    term = -term
                key = mask | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        minors = nxt
    full = (1 << n) - 1
    return minors.get(full, Fraction(0))


def check_antisymmetric(a: Sequence[Sequence]) -> None:
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix is not square")
        if a[i][i] != 0:
            raise ValueError("antisymmetric matrix needs a zero diagonal")
        for j in range(i + 1, n):
            if a[i][j] != -a[j][i]:
                raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")


def pfaffian(a: Sequence[Sequence], check: bool = True):
    """Pfaffian by division-free expansion along the first remaining row.

    Sub-Pfaffians are memoised on the set of remaining indices.
    """
    n = len(a)
    if n % 2:
        raise ValueError(f"Pfaffian needs even order, got {n}")
    if check:
        check_antisymmetric(a)
    memo: Dict[Tuple[int, ...], object] = {(): Fraction(1)}

    def pf(idx: Tuple[int, ...]):
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = None
        for pos, j in enumerate(rest):
            entry = a[first][j]
            if isinstance(entry, (int, Fraction)) and entry == 0:
                continue
            term = entry * pf(rest[:pos] + rest[pos + 1:])
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        result = Fraction(0) if total is None else total
        memo[idx] = result
        return result

    return pf(tuple(range(n)))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(a: Sequence[Sequence]) -> List[List]:
    return [list(col) for col in zip(*a)]


def prod(values: Iterable, start=None):
    """Product that works for Fractions and series alike."""
    acc = Fraction(1) if start is None else start
    for v in values:
        acc = acc * v
    return acc


def vandermonde(values: Sequence) -> object:
    """``prod_{i<j} (v_i - v_j)``."""
    acc = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            acc = acc * (values[i] - values[j])
    return acc
