"""Plane partitions as interlacing diagonal slices, path statistics, and the
left-hand sides of the plane-partition generating series.

Indexing is 1-based in the mathematical API (``pi.get(i, j)``) and the
matrix is stored as a tuple of row tuples.  The diagonal slice ``pi^(i)``
has parts ``pi(j - i, j)`` for i <= 0 and ``pi(j, i + j)`` for i >= 0.
For a plane partition in an m x n box the slices are read as two chains

    () = lam^(0) < lam^(1) < ... < lam^(m) = mu^(n) > ... > mu^(1) > mu^(0) = ()

with lam^(m - k) = pi^(-k) and mu^(n - k) = pi^(k).
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exact import TruncSeries
from .partitions import (
    Partition,
    b_coeff,
    enumerate_partitions,
    has_even_columns,
    interlacing_below,
    make_partition,
    psi_coeff,
)

CENTRAL_CONDITIONS = ("none", "evenCentral", "evenColumnsCentral")


@dataclass(frozen=True)
class PlanePartition:
    """A nonnegative integer matrix, weakly decreasing along rows and columns.

    The matrix shape is the framing (base rows m, base columns n).
    """

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows have different lengths")
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v < 0:
                    raise ValueError("entries must be nonnegative")
                if j + 1 < len(row) and row[j + 1] > v:
                    raise ValueError(f"row {i + 1} is not weakly decreasing")
                if i + 1 < len(rows) and rows[i + 1][j] > v:
                    raise ValueError(f"column {j + 1} is not weakly decreasing")

    @classmethod
    def empty(cls, m: int = 0, n: int = 0) -> "PlanePartition":
        return cls(tuple((0,) * n for _ in range(m)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def get(self, i: int, j: int) -> int:
        """pi(i, j), 1-based, zero outside the framing."""
        if 1 <= i <= self.rows and 1 <= j <= self.cols:
            return self.entries[i - 1][j - 1]
        return 0

    @property
    def volume(self) -> int:
        return sum(sum(r) for r in self.entries)

    def support(self) -> Tuple[int, int]:
        """Smallest (rows, cols) box containing every nonzero entry."""
        r = c = 0
        for i, row in enumerate(self.entries, 1):
            for j, v in enumerate(row, 1):
                if v:
                    r, c = max(r, i), max(c, j)
        return r, c

    def reframed(self, m: int, n: int) -> "PlanePartition":
        r, c = self.support()
        if r > m or c > n:
            raise ValueError(f"support {r}x{c} does not fit in {m}x{n}")
        return PlanePartition(tuple(tuple(self.get(i, j) for j in range(1, n + 1)) for i in range(1, m + 1)))

    def is_symmetric(self) -> bool:
        size = max(self.rows, self.cols)
        return all(self.get(i, j) == self.get(j, i) for i in range(1, size + 1) for j in range(1, size + 1))

    # -- slices --------------------------------------------------------------------

    def slice(self, i: int) -> Partition:
        parts = []
        j = 1
        while True:
            v = self.get(j - i, j) if i <= 0 else self.get(j, i + j)
            if v == 0:
                break
            parts.append(v)
            j += 1
        return tuple(parts)

    def central_slice(self) -> Partition:
        return self.slice(0)

    def left_chain(self) -> List[Partition]:
        """lam^(0) = () < lam^(1) < ... < lam^(m) = central slice."""
        m = self.rows
        return [()] + [self.slice(-(m - k)) for k in range(1, m + 1)]

    def right_chain(self) -> List[Partition]:
        """mu^(0) = () < mu^(1) < ... < mu^(n) = central slice."""
        n = self.cols
        return [()] + [self.slice(n - k) for k in range(1, n + 1)]

    def x_exponents(self) -> Tuple[int, ...]:
        ch = self.left_chain()
        return tuple(sum(ch[i]) - sum(ch[i - 1]) for i in range(1, len(ch)))

    def y_exponents(self) -> Tuple[int, ...]:
        ch = self.right_chain()
        return tuple(sum(ch[j]) - sum(ch[j - 1]) for j in range(1, len(ch)))

    @classmethod
    def from_chains(cls, left: Sequence[Partition], right: Sequence[Partition]) -> "PlanePartition":
        """Rebuild from lam^(0..m) and mu^(0..n) (sharing the last entry)."""
        m, n = len(left) - 1, len(right) - 1
        if tuple(left[m]) != tuple(right[n]):
            raise ValueError("the two chains must end in the same partition")
        mat = [[0] * n for _ in range(m)]
        for k in range(m):
            part = left[m - k]
            for j, v in enumerate(part, 1):
                if j + k > m or j > n:
                    raise ValueError("slice does not fit in the framing")
                mat[j + k - 1][j - 1] = v
        for k in range(1, n):
            part = right[n - k]
            for j, v in enumerate(part, 1):
                if j > m or j + k > n:
                    raise ValueError("slice does not fit in the framing")
                mat[j - 1][j + k - 1] = v
        return cls(tuple(tuple(r) for r in mat))

    # -- serialisation -----------------------------------------------------------------

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "PlanePartition":
        rows = [tuple(int(v) for v in line.split()) for line in text.strip().splitlines() if line.strip()]
        return cls(tuple(rows))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.entries])

    @classmethod
    def from_json(cls, text: str) -> "PlanePartition":
        return cls(tuple(tuple(r) for r in json.loads(text)))


# -- path statistics ---------------------------------------------------------------------


@dataclass
class PathStats:
    """Path counts by depth.

    ``by_depth``: paths at positive height (p_d).
    ``by_depth_framed``: including height-0 paths (p~_d), square framing only.
    ``off_diagonal_pairs``: mirror pairs of paths avoiding the diagonal (p°_d).
    ``diagonal``: paths meeting the diagonal (p•_d).
    ``diagonal_framed``: the same including height-0 paths (p~•_d).
    The last three are filled only for symmetric plane partitions.
    """

    by_depth: Dict[int, int] = field(default_factory=dict)
    by_depth_framed: Optional[Dict[int, int]] = None
    off_diagonal_pairs: Optional[Dict[int, int]] = None
    diagonal: Optional[Dict[int, int]] = None
    diagonal_framed: Optional[Dict[int, int]] = None


def _neighbours(i: int, j: int):
    yield i - 1, j
    yield i + 1, j
    yield i, j - 1
    yield i, j + 1


def _components(cells: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    """Label 4-connected classes of equal-value cells."""
    label: Dict[Tuple[int, int], int] = {}
    nxt = 0
    for start in cells:
        if start in label:
            continue
        stack = [start]
        label[start] = nxt
        while stack:
            c = stack.pop()
            for nb in _neighbours(*c):
                if nb in cells and nb not in label and cells[nb] == cells[c]:
                    label[nb] = nxt
                    stack.append(nb)
        nxt += 1
    return label


def positive_paths(pi: PlanePartition) -> List[Tuple[int, frozenset]]:
    """All paths at positive height as (depth, set of cells)."""
    cells = {(i, j): pi.get(i, j) for i in range(1, pi.rows + 1) for j in range(1, pi.cols + 1) if pi.get(i, j) > 0}
    comp = _components(cells)
    depth: Dict[Tuple[int, int], int] = {}
    for (i, j) in cells:
        d = 1
        while (i + d, j + d) in comp and comp[(i + d, j + d)] == comp[(i, j)]:
            d += 1
        depth[(i, j)] = d
    # paths: 4-connected classes of cells sharing component and depth
    keyed = {c: (comp[c], depth[c]) for c in cells}
    paths_label = _components(keyed)
    groups: Dict[int, set] = defaultdict(set)
    for c, lab in paths_label.items():
        groups[lab].add(c)
    return [(depth[next(iter(g))], frozenset(g)) for g in groups.values()]


def height_zero_depths(pi: PlanePartition, framing: int) -> List[int]:
    """Depths d with a (nonempty) height-0 path in the n x n framing.

    The height-0 path at depth d is the set of zero cells with
    max(i, j) = n - d + 1; it is nonempty exactly when pi(k, k) = 0 for
    k = n - d + 1, and then it is connected and contains (k, k).
    """
    r, c = pi.support()
    if r > framing or c > framing:
        raise ValueError(f"framing {framing} is smaller than the support {r}x{c}")
    return [d for d in range(1, framing + 1) if pi.get(framing - d + 1, framing - d + 1) == 0]


def path_stats(pi: PlanePartition, framing: Optional[int] = None) -> PathStats:
    stats = PathStats()
    paths = positive_paths(pi)
    by = defaultdict(int)
    for d, _ in paths:
        by[d] += 1
    stats.by_depth = dict(by)
    zero_depths: List[int] = []
    if framing is not None:
        zero_depths = height_zero_depths(pi, framing)
        framed = defaultdict(int, by)
        for d in zero_depths:
            framed[d] += 1
        stats.by_depth_framed = dict(framed)
    if pi.is_symmetric():
        off = defaultdict(int)
        diag = defaultdict(int)
        for d, cells in paths:
            if any(i == j for i, j in cells):
                diag[d] += 1
            else:
                off[d] += 1
        for d, v in off.items():
            if v % 2:
                raise AssertionError("off-diagonal paths of a symmetric plane partition must pair up")
        stats.off_diagonal_pairs = {d: v // 2 for d, v in off.items()}
        stats.diagonal = dict(diag)
        if framing is not None:
            framed_diag = defaultdict(int, diag)
            for d in zero_depths:
                framed_diag[d] += 1
            stats.diagonal_framed = dict(framed_diag)
    return stats


def path_weight(counts: Dict[int, int], t, depths=None) -> Fraction:
    """prod_d (1 - t^d)^{counts[d]}, optionally restricted to some depths."""
    t = Fraction(t)
    acc = Fraction(1)
    for d, k in counts.items():
        if depths is None or d in depths:
            acc *= (1 - t ** d) ** k
    return acc


def branching_weight(pi: PlanePartition, t) -> Fraction:
    """b_{centre}(t) times the psi coefficients along both slice chains."""
    t = Fraction(t)
    acc = b_coeff(pi.central_slice(), t, 0)
    for chain in (pi.left_chain(), pi.right_chain()):
        for k in range(1, len(chain)):
            acc *= psi_coeff(chain[k], chain[k - 1], t)
    return acc


# -- enumeration --------------------------------------------------------------------------


def enumerate_pp(m: int, n: int, max_volume: int) -> List[PlanePartition]:
    """All plane partitions with base in the m x n box and volume <= max_volume."""
    if m < 0 or n < 0:
        raise ValueError("box sides must be nonnegative")
    out: List[PlanePartition] = []
    mat = [[0] * n for _ in range(m)]
    cells = [(i, j) for i in range(m) for j in range(n)]

    def rec(idx: int, left: int):
        if idx == len(cells):
            out.append(PlanePartition(tuple(tuple(r) for r in mat)))
            return
        i, j = cells[idx]
        cap = left
        if i > 0:
            cap = min(cap, mat[i - 1][j])
        if j > 0:
            cap = min(cap, mat[i][j - 1])
        for v in range(cap + 1):
            mat[i][j] = v
            rec(idx + 1, left - v)
        mat[i][j] = 0

    rec(0, max_volume)
    out.sort(key=lambda p: (p.volume, tuple(-v for r in p.entries for v in r)))
    return out


def central_condition_holds(diagonal: Sequence[int], condition: str) -> bool:
    if condition == "none":
        return True
    if condition == "evenCentral":
        return all(v % 2 == 0 for v in diagonal)
    if condition == "evenColumnsCentral":
        return has_even_columns(make_partition(sorted((v for v in diagonal if v), reverse=True)))
    raise ValueError(f"unknown central condition {condition!r}")


def paired_diagonal(pi: PlanePartition) -> bool:
    """pi(2k-1, 2k-1) = pi(2k, 2k) for all k (the pairing form of the condition)."""
    size = max(pi.rows, pi.cols)
    return all(pi.get(2 * k - 1, 2 * k - 1) == pi.get(2 * k, 2 * k) for k in range(1, size // 2 + 2))


def enumerate_symmetric_pp(size: int, max_volume: int, central_condition: str = "none") -> List[PlanePartition]:
    """Symmetric plane partitions in the size x size box with volume <= max_volume."""
    if central_condition not in CENTRAL_CONDITIONS:
        raise ValueError(f"unknown central condition {central_condition!r}")
    out: List[PlanePartition] = []
    mat = [[0] * size for _ in range(size)]
    cells = [(i, j) for i in range(size) for j in range(i, size)]

    def rec(idx: int, left: int):
        if idx == len(cells):
            diag = [mat[k][k] for k in range(size)]
            if central_condition_holds(diag, central_condition):
                out.append(PlanePartition(tuple(tuple(r) for r in mat)))
            return
        i, j = cells[idx]
        cost = 1 if i == j else 2
        cap = left // cost
        if i > 0:
            cap = min(cap, mat[i - 1][j])
        if j > i:
            cap = min(cap, mat[i][j - 1])
        for v in range(cap + 1):
            mat[i][j] = mat[j][i] = v
            rec(idx + 1, left - cost * v)
        mat[i][j] = mat[j][i] = 0

    rec(0, max_volume)
    out.sort(key=lambda p: (p.volume, tuple(-v for r in p.entries for v in r)))
    return out


def chains_down(lam: Partition, steps: int) -> List[Tuple[Partition, ...]]:
    """All chains () = lam^(0) < ... < lam^(steps) = lam with l(lam^(i)) <= i."""
    return list(_chains_down(tuple(lam), steps))


@lru_cache(maxsize=None)
def _chains_down(lam: Partition, steps: int) -> Tuple[Tuple[Partition, ...], ...]:
    if len(lam) > steps:
        return ()
    if steps == 0:
        return (((),),) if not lam else ()
    out = []
    for mu in interlacing_below(lam, max_length=steps - 1):
        for ch in _chains_down(mu, steps - 1):
            out.append(ch + (lam,))
    return tuple(out)


@dataclass(frozen=True)
class SymplecticChain:
    """A symplectic plane partition as its slice chains.

    ``left``  = (lam^(0), ..., lam^(m)).
    ``right`` = (mu_bar^(0), mu^(1), mu_bar^(1), ..., mu^(n), mu_bar^(n)).
    lam^(m) = mu_bar^(n), and l(mu_bar^(i)) <= i.
    """

    left: Tuple[Partition, ...]
    right: Tuple[Partition, ...]

    @property
    def central(self) -> Partition:
        return self.left[-1]

    def x_exponents(self) -> Tuple[int, ...]:
        return tuple(sum(self.left[i]) - sum(self.left[i - 1]) for i in range(1, len(self.left)))

    def y_exponents(self) -> Tuple[int, ...]:
        """2|mu^(j)| - |mu_bar^(j)| - |mu_bar^(j-1)| for j = 1..n."""
        n = (len(self.right) - 1) // 2
        out = []
        for j in range(1, n + 1):
            mu = self.right[2 * j - 1]
            bar = self.right[2 * j]
            prev = self.right[2 * j - 2]
            out.append(2 * sum(mu) - sum(bar) - sum(prev))
        return tuple(out)


@lru_cache(maxsize=None)
def _symplectic_right(lam: Partition, n: int) -> Tuple[Tuple[Partition, ...], ...]:
    """Chains mu_bar^(0) < mu^(1) < mu_bar^(1) < ... < mu^(n) < mu_bar^(n) = lam."""
    if len(lam) > n:
        return ()
    if n == 0:
        return (((),),) if not lam else ()
    out = []
    for mu in interlacing_below(lam, max_length=n):
        for bar in interlacing_below(mu, max_length=n - 1):
            for ch in _symplectic_right(bar, n - 1):
                out.append(ch + (mu, lam))
    return tuple(out)


def symplectic_right_chains(lam: Partition, n: int) -> List[Tuple[Partition, ...]]:
    return list(_symplectic_right(tuple(lam), n))


def enumerate_symplectic_pp(m: int, n: int, max_central_weight: int) -> List[SymplecticChain]:
    """All symplectic plane partitions with |centre| <= max_central_weight."""
    if m > n:
        raise ValueError("symplectic plane partitions need m <= n")
    out = []
    for lam in enumerate_partitions(max_central_weight, min(m, n)):
        for left in _chains_down(lam, m):
            for right in _symplectic_right(lam, n):
                out.append(SymplecticChain(left, right))
    return out


def symmetric_from_chain(chain: Sequence[Partition]) -> PlanePartition:
    """The symmetric plane partition with left chain lam^(0..n) (mirrored right)."""
    chain = [tuple(c) for c in chain]
    return PlanePartition.from_chains(chain, chain)


# -- generating-series left-hand sides ------------------------------------------------------


def _monomial(k: int, exps: Sequence[int]) -> Tuple[int, ...]:
    return tuple(exps) + (0,) * (k - len(exps))


def _y_factor(ys: Sequence[Fraction], exps: Sequence[int]) -> Fraction:
    acc = Fraction(1)
    for y, e in zip(ys, exps):
        if e:
            acc *= y ** e
    return acc


def _pp_series(m: int, n: int, D: int, ys, weight_fn) -> TruncSeries:
    """sum over pi in the m x n box with |centre| <= D of weight(pi) X^{x-exps} y^{y-exps}."""
    ys = [Fraction(y) for y in ys]
    if len(ys) != n:
        raise ValueError(f"expected {n} y values")
    terms: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for lam in enumerate_partitions(D, min(m, n)):
        lefts = _chains_down(lam, m)
        rights = _chains_down(lam, n)
        for left in lefts:
            xexp = tuple(sum(left[i]) - sum(left[i - 1]) for i in range(1, m + 1))
            for right in rights:
                yexp = [sum(right[j]) - sum(right[j - 1]) for j in range(1, n + 1)]
                w = weight_fn(left, right)
                if w:
                    terms[xexp] += w * _y_factor(ys, yexp)
    return TruncSeries(m, D, dict(terms))


def _symmetric_series(size: int, D: int, condition: str, weight_fn) -> TruncSeries:
    terms: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for lam in enumerate_partitions(D, size):
        padded_diag = list(lam) + [0] * (size - len(lam))
        if not central_condition_holds(padded_diag, condition):
            continue
        for chain in _chains_down(lam, size):
            w = weight_fn(chain)
            if w:
                xexp = tuple(sum(chain[i]) - sum(chain[i - 1]) for i in range(1, size + 1))
                terms[xexp] += w
    return TruncSeries(size, D, dict(terms))


def _central_refinement(lam: Partition, n: int, t: Fraction, positions=None) -> Fraction:
    """prod_{i in positions} (1 - t^{lam_i - i + n + 1}), lam padded with zeros."""
    acc = Fraction(1)
    idx = positions if positions is not None else range(1, n + 1)
    for i in idx:
        v = lam[i - 1] if i <= len(lam) else 0
        acc *= 1 - t ** (v - i + n + 1)
    return acc


def _symplectic_series(m: int, n: int, D: int, ys, weight_fn) -> TruncSeries:
    ys = [Fraction(y) for y in ys]
    if len(ys) != n:
        raise ValueError(f"expected {n} y values")
    terms: Dict[Tuple[int, ...], Fraction] = defaultdict(Fraction)
    for ch in enumerate_symplectic_pp(m, n, D):
        w = weight_fn(ch)
        if w:
            terms[ch.x_exponents()] += w * _y_factor(ys, ch.y_exponents())
    return TruncSeries(m, D, dict(terms))


def symplectic_volume_series(m: int, n: int, order: int, max_central_weight: int) -> TruncSeries:
    """sum over symplectic plane partitions of q^(weight) with x_i = q^{m-i+3/2}, y = q^{1/2}.

    Exponents are tracked in p = q^{1/2} and halved at the end (they are
    always even).  Only objects with |centre| <= max_central_weight are
    summed; q-powers above ``order`` are dropped.
    """
    terms: Dict[Tuple[int], Fraction] = defaultdict(Fraction)
    for ch in enumerate_symplectic_pp(m, n, max_central_weight):
        p_exp = sum((2 * m - 2 * i + 3) * a for i, a in enumerate(ch.x_exponents(), 1))
        p_exp += sum(ch.y_exponents())
        if p_exp % 2:
            raise AssertionError("odd power of q^(1/2) in the symplectic volume series")
        if p_exp // 2 <= order:
            terms[(p_exp // 2,)] += 1
    return TruncSeries(1, order, dict(terms))


GS_IDS = (
    "s-pp-gs",
    "hl-pp-gs",
    "pp-ASM-gs",
    "thm1-pp",
    "symp-cauch-pp",
    "symp-pp-UASM",
    "s-little1-pp",
    "s-little2-pp",
    "s-little3-pp-gs",
    "hl-little1-pp",
    "hl-little2-pp",
    "hl-little3-pp-gs",
    "thm4-pp",
    "sym-pp-OSASM",
    "vol-pp",
    "macmahon",
    "vuletic-gs",
    "symp-pp-vol",
)


def gs_lhs(series_id: str, **params) -> TruncSeries:
    """Enumerated left-hand side of a plane-partition generating series.

    Series in x (``X_1..``) take formal x variables with sampled ``y`` and
    ``t``; the cutoff ``D`` bounds the central-slice weight, which equals the
    x-degree.  q-series (``vol-pp``, ``macmahon``, ``vuletic-gs``,
    ``symp-pp-vol``) return a one-variable series in q up to ``order``.
    """
    t = Fraction(params.get("t", 0))
    if series_id in ("s-pp-gs", "hl-pp-gs"):
        m, n, D = params["m"], params["n"], params["D"]
        if series_id == "s-pp-gs":
            return _pp_series(m, n, D, params["y"], lambda l, r: Fraction(1))

        def hl_weight(left, right):
            pi = PlanePartition.from_chains(left, right)
            return path_weight(path_stats(pi).by_depth, t)

        return _pp_series(m, n, D, params["y"], hl_weight)
    if series_id == "pp-ASM-gs":
        n, D = params["n"], params["D"]

        def framed_weight(left, right):
            pi = PlanePartition.from_chains(left, right)
            return path_weight(path_stats(pi, framing=n).by_depth_framed, t)

        return _pp_series(n, n, D, params["y"], framed_weight)
    if series_id == "thm1-pp":
        n, D = params["n"], params["D"]
        return _pp_series(n, n, D, params["y"], lambda l, r: _central_refinement(l[-1], n, t))
    if series_id == "symp-cauch-pp":
        m, n, D = params["m"], params["n"], params["D"]
        return _symplectic_series(m, n, D, params["y"], lambda ch: Fraction(1))
    if series_id == "symp-pp-UASM":
        n, D = params["n"], params["D"]
        return _symplectic_series(n, n, D, params["y"], lambda ch: _central_refinement(ch.central, n, t))
    if series_id in ("s-little1-pp", "s-little2-pp", "s-little3-pp-gs", "thm4-pp"):
        n, D = params["n"], params["D"]
        condition = {
            "s-little1-pp": "none",
            "s-little2-pp": "evenCentral",
            "s-little3-pp-gs": "evenColumnsCentral",
            "thm4-pp": "evenColumnsCentral",
        }[series_id]
        if series_id == "thm4-pp":
            if n % 2:
                raise ValueError("the refined Littlewood series needs an even number of variables")
            return _symmetric_series(
                n, D, condition, lambda ch: _central_refinement(ch[-1], n, t, positions=range(2, n + 1, 2))
            )
        return _symmetric_series(n, D, condition, lambda ch: Fraction(1))
    if series_id in ("hl-little1-pp", "hl-little2-pp", "hl-little3-pp-gs", "sym-pp-OSASM"):
        n, D = params["n"], params["D"]
        condition = {
            "hl-little1-pp": "none",
            "hl-little2-pp": "evenCentral",
            "hl-little3-pp-gs": "evenColumnsCentral",
            "sym-pp-OSASM": "evenColumnsCentral",
        }[series_id]
        odd = {d for d in range(1, 2 * n + 2, 2)}

        def weight(chain):
            pi = symmetric_from_chain(chain)
            framing = n if series_id == "sym-pp-OSASM" else None
            st = path_stats(pi, framing=framing)
            w = path_weight(st.off_diagonal_pairs, t)
            if series_id == "hl-little3-pp-gs":
                w *= path_weight(st.diagonal, t, depths=odd)
            elif series_id == "sym-pp-OSASM":
                w *= path_weight(st.diagonal_framed, t, depths=odd)
            return w

        if series_id == "sym-pp-OSASM" and n % 2:
            raise ValueError("sym-pp-OSASM needs an even number of variables")
        return _symmetric_series(n, D, condition, weight)
    if series_id == "vol-pp":
        m, n, order = params["m"], params["n"], params["order"]
        terms: Dict[Tuple[int], Fraction] = defaultdict(Fraction)
        for pi in enumerate_pp(m, n, order):
            terms[(pi.volume,)] += 1
        return TruncSeries(1, order, dict(terms))
    if series_id in ("macmahon", "vuletic-gs"):
        order = params["order"]
        terms = defaultdict(Fraction)
        for pi in enumerate_pp(order, order, order):
            w = Fraction(1) if series_id == "macmahon" else path_weight(path_stats(pi).by_depth, t)
            terms[(pi.volume,)] += w
        return TruncSeries(1, order, dict(terms))
    if series_id == "symp-pp-vol":
        m, n, order = params["m"], params["n"], params["order"]
        cutoff = params.get("max_central_weight", order)
        return symplectic_volume_series(m, n, order, cutoff)
    raise ValueError(f"unknown generating series {series_id!r}; known: {', '.join(GS_IDS)}")


def symplectic_volume_stable(m: int, n: int, order: int, start: Optional[int] = None) -> Tuple[TruncSeries, int]:
    """Raise the central-weight cutoff until two consecutive cutoffs agree.

    Returns the stabilised series and the cutoff at which it was reached.
    """
    w = order if start is None else start
    prev = symplectic_volume_series(m, n, order, w)
    while True:
        cur = symplectic_volume_series(m, n, order, w + 1)
        if cur == prev:
            return cur, w
        prev, w = cur, w + 1
