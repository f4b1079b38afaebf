"""Exact rational scalars and dense rational matrices.

Scalars are :class:`fractions.Fraction` (always reduced, positive denominator).
A :class:`RationalMatrix` keeps one positive common denominator and a grid of
integer numerators, normalised so that the denominator and all numerators are
coprime.  Two matrices are equal exactly when their dimensions, denominators and
numerator grids are equal, so structural equality is entrywise equality.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from itertools import repeat
from operator import add, mul, sub
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "DimensionError",
    "SingularMatrixError",
    "parse_rational",
    "format_rational",
    "identity",
    "zeros",
    "mat_mul",
    "mat_transpose",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_eq",
    "rref",
    "solve_full_rank",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_from_csv",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational")
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def _lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        if v != 1:
            out = out * v // math.gcd(out, v)
    return out


class RationalMatrix:
    """Immutable dense rational matrix stored as ``numerators / denominator``."""

    __slots__ = ("rows", "cols", "_num", "_den")

    def __init__(self, entries: Iterable[Iterable[int | Fraction | str]]):
        grid = [[parse_rational(x) for x in row] for row in entries]
        den = _lcm_all(x.denominator for row in grid for x in row)
        num = [[x.numerator * (den // x.denominator) for x in row] for row in grid]
        self._set(num, den)

    @classmethod
    def from_integers(cls, numerators: Sequence[Sequence[int]], denominator: int = 1) -> "RationalMatrix":
        """Build ``numerators / denominator`` without going through Fractions."""
        obj = cls.__new__(cls)
        obj._set(numerators, denominator)
        return obj

    def _set(self, num, den: int) -> None:
        rows = len(num)
        cols = len(num[0]) if rows else 0
        if rows < 1 or cols < 1:
            raise DimensionError(f"matrix dimensions must be >= 1, got {rows}x{cols}")
        if any(len(r) != cols for r in num):
            raise DimensionError("ragged rows")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [[-x for x in r] for r in num]
        if den != 1:
            g = math.gcd(den, *(math.gcd(*r) for r in num))
            if g != 1:
                den //= g
                num = [[x // g for x in r] for r in num]
        self.rows = rows
        self.cols = cols
        self._num = tuple(tuple(int(x) for x in r) for r in num)
        self._den = int(den)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def numerators(self) -> tuple[tuple[int, ...], ...]:
        return self._num

    @property
    def entries(self) -> list[list[Fraction]]:
        d = self._den
        return [[Fraction(x, d) for x in r] for r in self._num]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return Fraction(self._num[i][j], self._den)

    def row(self, i: int) -> list[Fraction]:
        return [Fraction(x, self._den) for x in self._num[i]]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._num)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self._num == tuple(zip(*self._num))

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "RationalMatrix":
        rows = range(self.rows) if rows is None else rows
        cols = range(self.cols) if cols is None else cols
        return RationalMatrix.from_integers([[self._num[i][j] for j in cols] for i in rows], self._den)

    # -- operators ------------------------------------------------------
    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_add(self, other)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_sub(self, other)

    def __neg__(self) -> "RationalMatrix":
        return mat_scale(self, -1)

    @property
    def T(self) -> "RationalMatrix":
        return mat_transpose(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return mat_eq(self, other)

    def __hash__(self) -> int:
        return hash((self._den, self._num))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, den={self._den})"

    def __str__(self) -> str:
        return "\n".join(" ".join(format_rational(x) for x in r) for r in self.entries)


def identity(n: int) -> RationalMatrix:
    return RationalMatrix.from_integers([[int(i == j) for j in range(n)] for i in range(n)])


def zeros(rows: int, cols: int) -> RationalMatrix:
    return RationalMatrix.from_integers([[0] * cols for _ in range(rows)])


def _int_transpose(num):
    return [list(c) for c in zip(*num)]


def _rows_times(a_sparse, b_rows, width: int) -> list[list[int]]:
    """Row kernel: output row i = sum_k a[i][k] * b[k] over the nonzeros of a's row."""
    out = []
    for nz in a_sparse:
        acc = [0] * width
        for k, v in nz:
            bk = b_rows[k]
            if v == 1:
                acc = list(map(add, acc, bk))
            elif v == -1:
                acc = list(map(sub, acc, bk))
            else:
                acc = list(map(add, acc, map(mul, repeat(v, width), bk)))
        out.append(acc)
    return out


def _sparse_rows(num) -> list[list[tuple[int, int]]]:
    return [[(k, v) for k, v in enumerate(r) if v] for r in num]


def _int_matmul(a, b, r: int, k: int, p: int) -> list[list[int]]:
    a_sp = _sparse_rows(a)
    bt = _int_transpose(b)
    bt_sp = _sparse_rows(bt)
    nnz_a = sum(map(len, a_sp))
    nnz_b = sum(map(len, bt_sp))
    # Rough per-element costs: dense dot product ~1, sparse accumulate ~3.
    dense_cost = r * p * k
    row_cost = 3 * nnz_a * p
    col_cost = 3 * nnz_b * r
    best = min(dense_cost, row_cost, col_cost)
    if best == row_cost:
        return _rows_times(a_sp, b, p)
    if best == col_cost:
        # (A B)^T = B^T A^T; accumulate over the nonzeros of each column of B.
        return _int_transpose(_rows_times(bt_sp, _int_transpose(a), r))
    return [[sum(map(mul, ar, bc)) for bc in bt] for ar in a]


def _check_same_shape(a: RationalMatrix, b: RationalMatrix, op: str) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"{op}: shapes {a.shape} and {b.shape} differ")


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact product; sparse-aware so incidence-matrix products stay quadratic."""
    if a.cols != b.rows:
        raise DimensionError(f"mat_mul: {a.shape} @ {b.shape}")
    num = _int_matmul(a._num, b._num, a.rows, a.cols, b.cols)
    return RationalMatrix.from_integers(num, a._den * b._den)


def mat_transpose(a: RationalMatrix) -> RationalMatrix:
    return RationalMatrix.from_integers(_int_transpose(a._num), a._den)


def _combine(a: RationalMatrix, b: RationalMatrix, op) -> RationalMatrix:
    den = a._den * b._den // math.gcd(a._den, b._den)
    fa, fb = den // a._den, den // b._den
    num = [
        [op(x * fa, y * fb) for x, y in zip(ra, rb)]
        for ra, rb in zip(a._num, b._num)
    ]
    return RationalMatrix.from_integers(num, den)


def mat_add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    _check_same_shape(a, b, "mat_add")
    return _combine(a, b, add)


def mat_sub(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    _check_same_shape(a, b, "mat_sub")
    return _combine(a, b, sub)


def mat_scale(a: RationalMatrix, c: int | Fraction | str) -> RationalMatrix:
    c = parse_rational(c)
    num = [[x * c.numerator for x in r] for r in a._num]
    return RationalMatrix.from_integers(num, a._den * c.denominator)


def mat_eq(a: RationalMatrix, b: RationalMatrix) -> bool:
    return a.shape == b.shape and a._den == b._den and a._num == b._num


# -- elimination ---------------------------------------------------------


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _gauss_jordan(rows: list[list[int]], ncols: int) -> list[int]:
    """Fraction-free Gauss-Jordan on integer rows, in place.

    Pivot search takes the first nonzero entry in column order.  Every row is
    kept primitive (content 1) to bound coefficient growth.  Returns the pivot
    column of each leading row; row ``i`` has its pivot at ``pivots[i]`` and
    zeros in every other pivot column.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if rows[i][col]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        prow = rows[r]
        pv = prow[col]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[col]
            if f:
                g = math.gcd(pv, f)
                a, b = pv // g, f // g
                rows[i] = _primitive([a * x - b * y for x, y in zip(row, prow)])
        pivots.append(col)
        r += 1
    return pivots


def rref(a: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and pivot columns (0-based)."""
    rows = [list(r) for r in a._num]
    pivots = _gauss_jordan(rows, a.cols)
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            pv = row[pivots[i]]
            out.append([Fraction(x, pv) for x in row])
        else:
            out.append([Fraction(0)] * a.cols)
    return RationalMatrix(out), pivots


def solve_full_rank(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Solve ``a @ x == b`` exactly for square invertible ``a``."""
    if a.rows != a.cols:
        raise DimensionError(f"solve_full_rank: coefficient matrix {a.shape} is not square")
    if b.rows != a.rows:
        raise DimensionError(f"solve_full_rank: {a.shape} vs right-hand side {b.shape}")
    n = a.rows
    # a = Na/da, b = Nb/db  =>  Na x = (da/db) Nb
    rows = [list(ra) + list(rb) for ra, rb in zip(a._num, b._num)]
    pivots = _gauss_jordan(rows, n)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    scale = Fraction(a._den, b._den)
    out = []
    for i, row in enumerate(rows):
        pv = row[i]
        out.append([Fraction(x, pv) * scale for x in row[n:]])
    return RationalMatrix(out)


# -- serialisation -------------------------------------------------------


def matrix_to_json(m: RationalMatrix, **extra) -> dict:
    doc = {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_rational(x) for x in r] for r in m.entries],
    }
    doc.update(extra)
    return doc


def matrix_from_json(doc: dict | str) -> RationalMatrix:
    if isinstance(doc, str):
        doc = json.loads(doc)
    m = RationalMatrix(doc["entries"])
    if (m.rows, m.cols) != (doc.get("rows", m.rows), doc.get("cols", m.cols)):
        raise DimensionError("declared rows/cols disagree with entries")
    return m


def matrix_to_csv(m: RationalMatrix, row_labels=None, col_labels=None, corner: str = "") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if col_labels is not None:
        w.writerow(([corner] if row_labels is not None else []) + list(col_labels))
    for i, r in enumerate(m.entries):
        cells = [format_rational(x) for x in r]
        if row_labels is not None:
            cells.insert(0, row_labels[i])
        w.writerow(cells)
    return buf.getvalue()


def _is_rational(cell: str) -> bool:
    try:
        parse_rational(cell)
    except ValueError:
        return False
    return True


def matrix_from_csv(text: str) -> RationalMatrix:
    """Read ``p/q`` cells; a header row and a leading label column are skipped."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    rows = list(csv.reader(lines))
    if rows and not all(_is_rational(c) for c in rows[0][1:]):
        rows = rows[1:]
    if rows and not _is_rational(rows[0][0]):
        rows = [r[1:] for r in rows]
    return RationalMatrix(rows)
