"""Exact integer linear algebra: rank, kernels and determinants.

Everything here runs on Python integers (and ``Fraction`` for the final
back-substitution). No floating point is used anywhere.

Elimination is the fraction-free Bareiss scheme. Rows are stored sparsely and
a row whose pivot-column entry is zero is not touched during a step; instead
it remembers how many steps behind it is and is brought up to date
(``x * p_now // p_then``, exact by Sylvester's identity) only when it next
participates. The results are identical to dense Bareiss.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ShapeViolation
from .graph import Graph

IntegerVector = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ShapeViolation(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        data = [tuple(int(x) for x in r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ShapeViolation("ragged rows")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def apply(self, v: Sequence[int]) -> IntegerVector:
        """Exact matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeViolation("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))


def _as_matrix(m: IntegerMatrix | Sequence[Sequence[int]]) -> IntegerMatrix:
    return m if isinstance(m, IntegerMatrix) else IntegerMatrix.from_rows(m)


def adjacency_matrix(g: Graph) -> IntegerMatrix:
    n = g.order
    entries = [0] * (n * n)
    for u, v in g.edges:
        entries[u * n + v] = 1
        entries[v * n + u] = 1
    return IntegerMatrix(n, n, tuple(entries))


@dataclass
class _Echelon:
    pivots: list[tuple[int, dict[int, int]]]  # (pivot column, row) in step order
    sign: int
    last_pivot: int


def _echelon(mat: IntegerMatrix) -> _Echelon:
    m, n = mat.rows, mat.cols
    rows = []
    for i in range(m):
        r = mat.row(i)
        rows.append({j: x for j, x in enumerate(r) if x})
    level = [0] * m
    # divisors[s] is the pivot of step s-1; divisors[0] = 1
    divisors = [1]
    order = list(range(m))
    sign = 1
    out = []
    step = 0
    for c in range(n):
        if step == m:
            break
        cand = [pos for pos in range(step, m) if c in rows[order[pos]]]
        if not cand:
            continue
        for pos in cand:
            i = order[pos]
            if level[i] < step:
                num, den = divisors[step], divisors[level[i]]
                rows[i] = {j: x * num // den for j, x in rows[i].items()}
                level[i] = step
        best = min(cand, key=lambda pos: (abs(rows[order[pos]][c]), pos))
        if best != step:
            order[step], order[best] = order[best], order[step]
            sign = -sign
            cand = [step if pos == best else (best if pos == step else pos) for pos in cand]
        pi = order[step]
        prow = rows[pi]
        p = prow[c]
        prev = divisors[step]
        tail = [(j, y) for j, y in prow.items() if j > c]
        for pos in cand:
            if pos == step:
                continue
            i = order[pos]
            r = rows[i]
            f = r.pop(c)
            new = {}
            for j, x in r.items():
                if j > c:
                    new[j] = x * p
            for j, y in tail:
                new[j] = new.get(j, 0) - f * y
            rows[i] = {j: x // prev for j, x in new.items() if x}
            level[i] = step + 1
        out.append((c, prow))
        divisors.append(p)
        step += 1
    return _Echelon(out, sign, divisors[-1])


def rank(m: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    return len(_echelon(_as_matrix(m)).pivots)


def determinant(m: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination."""
    mat = _as_matrix(m)
    if mat.rows != mat.cols:
        raise ShapeViolation("determinant needs a square matrix")
    if mat.rows == 0:
        return 1
    ech = _echelon(mat)
    if len(ech.pivots) < mat.rows:
        return 0
    return ech.sign * ech.last_pivot


def primitive(v: Iterable[int]) -> IntegerVector:
    """Scale an integer vector to gcd 1 with its first nonzero entry positive."""
    v = tuple(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def kernel_basis(m: IntegerMatrix | Sequence[Sequence[int]]) -> list[IntegerVector]:
    """Canonical integer basis of the rational nullspace.

    The basis is the reduced row echelon form of the nullspace, each row
    scaled to a primitive integer vector. Rows are therefore ordered by the
    position of their first nonzero coordinate, which is positive.
    """
    mat = _as_matrix(m)
    n = mat.cols
    ech = _echelon(mat)
    pivot_cols = {c for c, _ in ech.pivots}
    free = [c for c in range(n) if c not in pivot_cols]
    if not free:
        return []
    vectors = []
    for f in free:
        x: dict[int, Fraction | int] = {f: 1}
        for c, row in reversed(ech.pivots):
            s = 0
            for j, a in row.items():
                if j != c:
                    xj = x.get(j)
                    if xj:
                        s += a * xj
            if s:
                x[c] = Fraction(-s) / row[c]
        vectors.append([Fraction(x.get(j, 0)) for j in range(n)])
    return [primitive(_clear_denominators(r)) for r in _rref(vectors)]


def _rref(vectors: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [list(v) for v in vectors]
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows[:r]


def _clear_denominators(v: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in v]


def cyclic_corner_determinant(m: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant of an odd-order matrix supported on the cyclic off-diagonals.

    Only entries with ``|i - j| = 1`` or in the two corners may be nonzero.
    Every other permutation term of the determinant vanishes, leaving the
    product along the cycle in each direction.
    """
    mat = _as_matrix(m)
    n = mat.rows
    if mat.cols != n or n < 3 or n % 2 == 0:
        raise ShapeViolation("need a square matrix of odd order >= 3")
    for i in range(n):
        for j in range(n):
            if mat[i, j] and not (abs(i - j) == 1 or (i, j) in ((0, n - 1), (n - 1, 0))):
                raise ShapeViolation(f"nonzero entry at disallowed position ({i}, {j})")
    down = mat[0, n - 1]
    up = mat[n - 1, 0]
    for i in range(n - 1):
        down *= mat[i + 1, i]
        up *= mat[i, i + 1]
    return down + up
