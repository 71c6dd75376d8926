"""Six-vertex partition functions: closed forms and brute-force enumeration.

Conventions used by the enumerator
----------------------------------
Every lattice line carries an orientation and a rapidity.  An edge state is
recorded as *forward* (``True``: the arrow points along its line's
orientation) or *backward* (``False``).  At a crossing one line plays the
"x role" and the other the "y role": the x-role line is the one whose
direction, rotated a quarter turn counter-clockwise, gives the direction of
the other line.  Writing a vertex as
``(x_in, x_out, y_in, y_out)`` the six ice-rule configurations are

    a+ = (F, F, F, F)    a- = (B, B, B, B)
    b+ = (F, F, B, B)    b- = (B, B, F, F)
    c+ = (F, B, B, F)    c- = (B, F, F, B)

with weights a = (1 - t r)/(1 - r), b+ = 1, b- = t, c+ = (1 - t)/(1 - r),
c- = (1 - t) r/(1 - r) at the rapidity ratio r = (x-role rapidity) /
(y-role rapidity).  Vertical lines carry reciprocated rapidities, so a row
x_i crossing a column labelled y_j has r = x_i * y_j.

This is the unique assignment, among the natural candidates, that
reproduces the closed forms at n = 1 and n = 2 for all six domains; the
tests pin it.

Domains:

* square: rows x_1..x_n run east, columns run north.  Left edges point in
  (F), right edges point in (B), bottom edges point out (B), top edges point
  out (F).  ``partialSquare`` keeps m rows and frees the bottom edges.
* uTurn: pair i consists of a row x_i running east (lower) and a row
  1/x_i running west (upper), joined on the right by a U-turn that carries
  the arrow through and weighs 1/(1 - x_i^2).  All left boundary arrows
  point east.  On the westward rows the column plays the x role, so the
  ratio there is x_i / y_j.  ``partialUTurn`` keeps m pairs and frees the
  bottom edges.
* offDiagonal: line i enters from the left as a row, turns at the diagonal
  corner (weight 1) and leaves through the top as a column.  The corner
  reverses the arrow relative to the line orientation (both arrows point
  into the corner or both out).  Row i crosses the columns of lines j < i
  with ratio x_i x_j.  Left edges point in, top edges point out.
  ``offDiagonalOdd`` frees the left edges subject to exactly one of them
  pointing out.  This is what remains after a line with rapidity 0 is
  deleted from the even domain: such a line can absorb a single backward
  arrow (through one c+ vertex) and contributes the common factor (1 - t).
  Without the quota, configurations with 3, 5, ... outward left edges would
  also be counted, and those are not part of the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import det, pfaffian, vandermonde
from .symfunc import DegenerateSample

DOMAIN_KINDS = (
    "square",
    "partialSquare",
    "uTurn",
    "partialUTurn",
    "offDiagonal",
    "offDiagonalOdd",
)

STATE_GUARD = 10 ** 7

# (x_in, x_out, y_in, y_out) -> vertex name
VERTEX_TYPES = {
    (True, True, True, True): "a+",
    (False, False, False, False): "a-",
    (True, True, False, False): "b+",
    (False, False, True, True): "b-",
    (True, False, False, True): "c+",
    (False, True, True, False): "c-",
}


def boltzmann_weights(r, t) -> Dict[str, Fraction]:
    """Weights of the six vertices at rapidity ratio r."""
    r = Fraction(r)
    t = Fraction(t)
    if r == 1:
        raise DegenerateSample("rapidity ratio equal to 1 is a pole")
    a = (1 - t * r) / (1 - r)
    return {
        "a+": a,
        "a-": a,
        "b+": Fraction(1),
        "b-": t,
        "c+": (1 - t) / (1 - r),
        "c-": (1 - t) * r / (1 - r),
    }


def uturn_weight(x) -> Fraction:
    x = Fraction(x)
    if x * x == 1:
        raise DegenerateSample("U-turn weight has a pole at x = +-1")
    return 1 / (1 - x * x)


# -- generic lattice ------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeRef:
    """Reference to an edge, optionally read with reversed orientation."""

    edge: int
    flip: bool = False


@dataclass
class Lattice:
    """Vertices reference edges; boundary edges may be fixed or left free."""

    edge_count: int
    vertices: List[Tuple[EdgeRef, EdgeRef, EdgeRef, EdgeRef, Fraction]]
    fixed: Dict[int, bool]
    constant: Fraction = Fraction(1)
    # optional (edges, k): exactly k of these edges must be backward
    backward_quota: Optional[Tuple[Tuple[int, ...], int]] = None


@dataclass
class VertexConfig:
    """One configuration: the kind of domain and the state of every edge."""

    domain_kind: str
    arrows: Tuple[bool, ...]
    weight: Fraction


class _Builder:
    def __init__(self):
        self.count = 0
        self.fixed: Dict[int, bool] = {}
        self.vertices = []

    def new(self, state: Optional[bool] = None) -> int:
        e = self.count
        self.count += 1
        if state is not None:
            self.fixed[e] = state
        return e


def _square_lattice(x, y, free_bottom: bool) -> Lattice:
    m, n = len(x), len(y)
    b = _Builder()
    # column edges below the current row, bottom row first
    cols = [b.new(None if free_bottom else False) for _ in range(n)]
    rows_bottom_up = list(range(m - 1, -1, -1))
    for i in rows_bottom_up:
        h = b.new(True)
        for j in range(n):
            h_next = b.new(False) if j == n - 1 else b.new()
            up = b.new(True) if i == 0 else b.new()
            b.vertices.append((EdgeRef(h), EdgeRef(h_next), EdgeRef(cols[j]), EdgeRef(up), Fraction(x[i]) * Fraction(y[j])))
            cols[j] = up
            h = h_next
    return Lattice(b.count, b.vertices, b.fixed)


def _uturn_lattice(x, y, free_bottom: bool) -> Lattice:
    m, n = len(x), len(y)
    b = _Builder()
    cols = [b.new(None if free_bottom else False) for _ in range(n)]
    const = Fraction(1)
    for i in range(m - 1, -1, -1):
        xi = Fraction(x[i])
        const *= uturn_weight(xi)
        top_pair = i == 0
        # lower row: runs east, row is x-role, ratio x*y
        h = b.new(True)
        for j in range(n):
            h_next = b.new()
            up = b.new()
            b.vertices.append((EdgeRef(h), EdgeRef(h_next), EdgeRef(cols[j]), EdgeRef(up), xi * Fraction(y[j])))
            cols[j] = up
            h = h_next
        # the U-turn carries the arrow from the lower row into the upper row;
        # the upper row runs west, column is x-role, ratio x / y
        for j in range(n - 1, -1, -1):
            h_next = b.new(False) if j == 0 else b.new()
            up = b.new(True) if top_pair else b.new()
            b.vertices.append((EdgeRef(cols[j]), EdgeRef(up), EdgeRef(h), EdgeRef(h_next), xi / Fraction(y[j])))
            cols[j] = up
            h = h_next
    return Lattice(b.count, b.vertices, b.fixed, const)


def _offdiagonal_lattice(x, free_left: bool) -> Lattice:
    N = len(x)
    b = _Builder()
    # col_edge[j]: current edge of column j (line j) below the next row
    col_edge: Dict[int, Tuple[int, bool]] = {}
    left_edges = []
    for i in range(N):  # row i at height i, bottom to top
        h = b.new(None if free_left else True)
        left_edges.append(h)
        h_flip = False
        for j in range(i):
            e, fl = col_edge[j]
            nxt = b.new()
            up = b.new(True) if i == N - 1 else b.new()
            b.vertices.append((EdgeRef(h, h_flip), EdgeRef(nxt), EdgeRef(e, fl), EdgeRef(up), Fraction(x[i]) * Fraction(x[j])))
            col_edge[j] = (up, False)
            h, h_flip = nxt, False
        # corner: the column of line i starts with the row's last edge read
        # with reversed orientation
        if i == N - 1:
            # the top line's column leaves at once through the top boundary,
            # which points out (forward); reversed, the row edge is backward
            b.fixed[h] = False
        col_edge[i] = (h, True)
    quota = (tuple(left_edges), 1) if free_left else None
    return Lattice(b.count, b.vertices, b.fixed, backward_quota=quota)


def build_lattice(domain: str, x: Sequence, y: Sequence = ()) -> Lattice:
    if domain == "square":
        if len(x) != len(y):
            raise ValueError("square domain needs as many x as y rapidities")
        return _square_lattice(x, y, free_bottom=False)
    if domain == "partialSquare":
        if len(x) > len(y):
            raise ValueError("partial square domain needs m <= n")
        return _square_lattice(x, y, free_bottom=True)
    if domain == "uTurn":
        if len(x) != len(y):
            raise ValueError("U-turn domain needs as many x as y rapidities")
        return _uturn_lattice(x, y, free_bottom=False)
    if domain == "partialUTurn":
        if len(x) > len(y):
            raise ValueError("partial U-turn domain needs m <= n")
        return _uturn_lattice(x, y, free_bottom=True)
    if domain == "offDiagonal":
        if len(x) % 2:
            raise ValueError("off-diagonal domain needs an even number of lines")
        return _offdiagonal_lattice(x, free_left=False)
    if domain == "offDiagonalOdd":
        if len(x) % 2 == 0:
            raise ValueError("odd off-diagonal domain needs an odd number of lines")
        return _offdiagonal_lattice(x, free_left=True)
    raise ValueError(f"unknown domain kind {domain!r}; expected one of {DOMAIN_KINDS}")


def _run(lattice: Lattice, t, collect: bool, domain: str):
    t = Fraction(t)
    weights = [boltzmann_weights(v[4], t) for v in lattice.vertices]
    state: List[Optional[bool]] = [None] * lattice.edge_count
    for e, s in lattice.fixed.items():
        state[e] = s
    configs: List[VertexConfig] = []
    count = 0
    total = Fraction(0)
    visited = 0
    verts = lattice.vertices
    quota = lattice.backward_quota

    def read(ref: EdgeRef):
        s = state[ref.edge]
        if s is None:
            return None
        return (not s) if ref.flip else s

    def rec(idx: int, w: Fraction):
        nonlocal count, total, visited
        visited += 1
        if visited > STATE_GUARD:
            raise OverflowError(f"lattice enumeration exceeded {STATE_GUARD} states")
        if idx == len(verts):
            if quota is not None and sum(1 for e in quota[0] if not state[e]) != quota[1]:
                return
            count += 1
            total += w
            if collect:
                configs.append(VertexConfig(domain, tuple(bool(s) for s in state), w))
            return
        refs = verts[idx][:4]
        current = [read(r) for r in refs]
        for pattern, name in VERTEX_TYPES.items():
            if any(c is not None and c != p for c, p in zip(current, pattern)):
                continue
            assigned = []
            for ref, c, p in zip(refs, current, pattern):
                if c is None and state[ref.edge] is None:
                    state[ref.edge] = (not p) if ref.flip else p
                    assigned.append(ref.edge)
            # an edge referenced twice by one vertex cannot occur here
            rec(idx + 1, w * weights[idx][name])
            for e in assigned:
                state[e] = None

    if verts or lattice.constant != 0:
        rec(0, Fraction(1))
    return count, total * lattice.constant, configs


def enumerate_lattice(domain: str, x: Sequence, y: Sequence = (), t=0) -> Tuple[int, Fraction]:
    """Count ice-rule configurations of a domain and sum their weights exactly."""
    count, total, _ = _run(build_lattice(domain, x, y), t, False, domain)
    return count, total


def lattice_configurations(domain: str, x: Sequence, y: Sequence = (), t=0) -> List[VertexConfig]:
    """All configurations with their individual weights."""
    return _run(build_lattice(domain, x, y), t, True, domain)[2]


def lattice_vertex_types(domain: str, x: Sequence, y: Sequence = (), t=0) -> List[List[str]]:
    """For each configuration, the list of vertex types in lattice order."""
    lattice = build_lattice(domain, x, y)
    out = []
    for cfg in _run(lattice, t, True, domain)[2]:
        names = []
        for v in lattice.vertices:
            vals = tuple((not cfg.arrows[r.edge]) if r.flip else cfg.arrows[r.edge] for r in v[:4])
            names.append(VERTEX_TYPES[vals])
        out.append(names)
    return out


def asm_count(n: int) -> int:
    """Number of n x n alternating sign matrices, by enumeration."""
    ones = [Fraction(0)] * n
    return enumerate_lattice("square", ones, ones, 0)[0]


# -- closed forms ---------------------------------------------------------------------


def _fr(values) -> List[Fraction]:
    return [Fraction(v) for v in values]


def _nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise DegenerateSample(f"{what} vanishes at this sample")
    return value


def _izergin_entry(x: Fraction, y: Fraction, t: Fraction) -> Fraction:
    d = (1 - x * y) * (1 - t * x * y)
    return (1 - t) / _nonzero(d, "1 - x y or 1 - t x y")


def z_asm_closed(x: Sequence, y: Sequence, t) -> Fraction:
    """Domain wall partition function as the Izergin determinant."""
    x, y, t = _fr(x), _fr(y), Fraction(t)
    n = len(x)
    if len(y) != n:
        raise ValueError("need as many x as y values")
    pref = Fraction(1)
    for xi in x:
        for yj in y:
            pref *= 1 - t * xi * yj
    den = _nonzero(vandermonde(x) * vandermonde(y), "Vandermonde product")
    return pref / den * det([[_izergin_entry(xi, yj, t) for yj in y] for xi in x])


def z_asm_partial_closed(x: Sequence, y: Sequence, t) -> Fraction:
    """Partial domain wall partition function (m rows, n columns, free bottom)."""
    x, y, t = _fr(x), _fr(y), Fraction(t)
    m, n = len(x), len(y)
    if m > n:
        raise ValueError("need m <= n")
    rows = [[_izergin_entry(xi, yj, t) for yj in y] for xi in x]
    for i in range(m + 1, n + 1):
        rows.append([yj ** (n - i) for yj in y])
    pref = Fraction(1)
    for xi in x:
        for yj in y:
            pref *= 1 - t * xi * yj
    den = vandermonde(x) * vandermonde(y)
    for xi in x:
        den *= xi ** (n - m)
    return pref / _nonzero(den, "monomial or Vandermonde denominator") * det(rows)


def izergin_row_reduced(x_top: Sequence, x_bottom: Sequence, y: Sequence, t) -> Fraction:
    """Domain wall partition function with the bottom rows in limit-free form.

    The rows belonging to ``x_bottom`` are replaced by
    sum_k (1 - t^{k+1}) h_{k+i-n}(x_i..x_n) y^k
      = y^{n-i} / prod_{l>=i} (1 - x_l y) - t (t y)^{n-i} / prod_{l>=i} (1 - t x_l y),
    and the bottom Vandermonde factor is cancelled, so any values (including
    zeros and repeats) are allowed for ``x_bottom``.
    """
    xt, xb, y, t = _fr(x_top), _fr(x_bottom), _fr(y), Fraction(t)
    m = len(xt)
    x = xt + xb
    n = len(x)
    if len(y) != n:
        raise ValueError("need n = m + len(x_bottom) y values")
    rows = [[_izergin_entry(xi, yj, t) for yj in y] for xi in xt]
    for i in range(m + 1, n + 1):
        tail = x[i - 1:]
        row = []
        for yj in y:
            p1 = Fraction(1)
            p2 = Fraction(1)
            for xl in tail:
                p1 *= 1 - xl * yj
                p2 *= 1 - t * xl * yj
            row.append(yj ** (n - i) / _nonzero(p1, "1 - x y") - t * (t * yj) ** (n - i) / _nonzero(p2, "1 - t x y"))
        rows.append(row)
    pref = Fraction(1)
    for xi in x:
        for yj in y:
            pref *= 1 - t * xi * yj
    den = vandermonde(xt) * vandermonde(y)
    for xi in xt:
        for xj in xb:
            den *= xi - xj
    return pref / _nonzero(den, "Vandermonde denominator") * det(rows)


def _tsuchiya_entry(x: Fraction, y: Fraction, t: Fraction) -> Fraction:
    yb = 1 / y
    d = (1 - x * y) * (1 - t * x * y) * (1 - x * yb) * (1 - t * x * yb)
    return (1 - t) / _nonzero(d, "Tsuchiya entry denominator")


def _uasm_prefactor(x, y, t) -> Tuple[Fraction, Fraction]:
    num = Fraction(1)
    for xi in x:
        for yj in y:
            num *= (1 - t * xi * yj) * (1 - t * xi / yj)
    den = vandermonde(x) * vandermonde(y)
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            den *= 1 - t * x[i] * x[j]
    for i in range(len(y)):
        for j in range(i + 1, len(y)):
            den *= 1 - 1 / (y[i] * y[j])
    return num, den


def _check_y(y: Sequence[Fraction]) -> None:
    for v in y:
        if v == 0 or v * v == 1:
            raise DegenerateSample("y values must avoid 0 and +-1")


def z_uasm_closed(x: Sequence, y: Sequence, t) -> Fraction:
    """U-turn domain wall partition function as the Tsuchiya determinant."""
    x, y, t = _fr(x), _fr(y), Fraction(t)
    if len(x) != len(y):
        raise ValueError("need as many x as y values")
    _check_y(y)
    num, den = _uasm_prefactor(x, y, t)
    return num / _nonzero(den, "Tsuchiya prefactor denominator") * det(
        [[_tsuchiya_entry(xi, yj, t) for yj in y] for xi in x]
    )


def z_uasm_partial_closed(x: Sequence, y: Sequence, t) -> Fraction:
    """U-turn partition function with m double rows and free bottom edges."""
    x, y, t = _fr(x), _fr(y), Fraction(t)
    m, n = len(x), len(y)
    if m > n:
        raise ValueError("need m <= n")
    _check_y(y)
    rows = [[_tsuchiya_entry(xi, yj, t) for yj in y] for xi in x]
    for i in range(m + 1, n + 1):
        e = n - i + 1
        rows.append([(yj ** e - yj ** (-e)) / (yj - 1 / yj) for yj in y])
    num, den = _uasm_prefactor(x, y, t)
    for xi in x:
        den *= xi ** (n - m)
    return num / _nonzero(den, "prefactor denominator") * det(rows)


def _kuperberg_entry(a: Fraction, b: Fraction, t: Fraction) -> Fraction:
    d = (1 - a * b) * (1 - t * a * b)
    return (a - b) * (1 - t) / _nonzero(d, "1 - x x or 1 - t x x")


def z_osasm_closed(x: Sequence, t) -> Fraction:
    """Off-diagonally symmetric partition function as the Kuperberg Pfaffian."""
    x, t = _fr(x), Fraction(t)
    N = len(x)
    if N % 2:
        raise ValueError("need an even number of variables; use z_osasm_odd_closed")
    mat = [[_kuperberg_entry(x[i], x[j], t) if i != j else Fraction(0) for j in range(N)] for i in range(N)]
    pref = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            pref *= (1 - t * x[i] * x[j]) / _nonzero(x[i] - x[j], "x_i - x_j")
    return pref * pfaffian(mat)


def z_osasm_odd_closed(x: Sequence, t) -> Fraction:
    """Odd off-diagonal partition function (free left edges)."""
    x, t = _fr(x), Fraction(t)
    N = len(x)
    if N % 2 == 0:
        raise ValueError("need an odd number of variables")
    n = (N + 1) // 2
    size = N + 1
    mat = [[Fraction(0)] * size for _ in range(size)]
    for i in range(N):
        for j in range(i + 1, N):
            d = (1 - x[i] * x[j]) * (1 - t * x[i] * x[j])
            v = (x[i] - x[j]) / _nonzero(d, "1 - x x or 1 - t x x")
            mat[i][j], mat[j][i] = v, -v
        mat[i][N], mat[N][i] = x[i], -x[i]
    pref = (1 - t) ** (n - 1)
    for i in range(N):
        pref /= _nonzero(x[i], "x_i")
        for j in range(i + 1, N):
            pref *= (1 - t * x[i] * x[j]) / _nonzero(x[i] - x[j], "x_i - x_j")
    return pref * pfaffian(mat)
