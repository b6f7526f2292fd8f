"""Exact linear algebra over the rationals.

Elimination is fraction-free: each row is first scaled to integers (which
leaves the row space, and hence the RREF, unchanged), then reduced with
Bareiss-style Gauss-Jordan steps in which every division is exact.  Only
the final normalisation produces fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence, Tuple


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, rc: Tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> list[Fraction]:
        return list(self.entries[r * self.cols : (r + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(r) for r in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self[r, c] for c in range(self.cols) for r in range(self.rows)),
        )

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(self.row(r), v)), Fraction(0)) for r in range(self.rows)]

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if other.rows != self.rows:
            raise ValueError("row count mismatch")
        return QMatrix.from_rows(
            [a + b for a, b in zip(self.to_rows(), other.to_rows())], self.cols + other.cols
        )

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return QMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _integer_rows(M: QMatrix) -> list[list[int]]:
    out = []
    for row in M.to_rows():
        scale = lcm(*(e.denominator for e in row)) if row else 1
        ints = [int(e * scale) for e in row]
        g = gcd(*ints)
        out.append([v // g for v in ints] if g > 1 else ints)
    return out


def _gauss_jordan(a: list[list[int]], cols: int, upward: bool = True) -> Tuple[list[int], int]:
    """Fraction-free Gauss-Jordan on an integer matrix, in place.

    Returns (pivot_columns, last_pivot).  On exit the pivot rows occupy the
    top of ``a``, every pivot entry equals ``last_pivot`` and ``a / last_pivot``
    is the RREF.  Pivot choice: first row at or below the current one with a
    nonzero entry in the column.  With ``upward=False`` rows above the pivot
    are left alone (plain Bareiss), which is all a rank count needs.
    """
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        sel = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if sel is None:
            continue
        if sel != r:
            a[r], a[sel] = a[sel], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(0 if upward else r + 1, nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if i < r:
                # earlier pivot rows: their pivot entries go from prev to p
                a[i] = [(p * u - f * v) // prev for u, v in zip(row, prow)]
            elif f == 0:
                if prev != p:
                    a[i] = [(p * u) // prev for u in row]
            else:
                a[i] = [(p * u - f * v) // prev for u, v in zip(row, prow)]
        pivots.append(c)
        prev = p
        r += 1
    return pivots, prev


def rref(M: QMatrix) -> Tuple[QMatrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    a = _integer_rows(M)
    pivots, d = _gauss_jordan(a, M.cols)
    rank = len(pivots)
    rows = [[Fraction(e, d) for e in a[i]] for i in range(rank)]
    rows += [[Fraction(0)] * M.cols for _ in range(M.rows - rank)]
    return QMatrix.from_rows(rows, M.cols), pivots


def rank(M: QMatrix) -> int:
    a = _integer_rows(M)
    return len(_gauss_jordan(a, M.cols, upward=False)[0])


def nullspace(M: QMatrix) -> list[list[Fraction]]:
    """Basis of ``{v : Mv = 0}``, one vector per free column.

    Each vector has 1 at its free column, 0 at the other free columns and the
    back-substituted values at pivot columns.
    """
    R, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i, f]
        basis.append(v)
    return basis


def solve(M: QMatrix, b: Sequence) -> Optional[list[Fraction]]:
    """Some exact solution of ``Mv = b`` with free variables zeroed, or None."""
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {M.rows}")
    aug = M.hstack(QMatrix.from_rows([[e] for e in b], 1))
    R, pivots = rref(aug)
    if pivots and pivots[-1] == M.cols:
        return None
    v = [Fraction(0)] * M.cols
    for i, pc in enumerate(pivots):
        v[pc] = R[i, M.cols]
    return v


def det(M: QMatrix) -> Fraction:
    """Determinant via fraction-free (Bareiss) forward elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    scales = 1
    a = []
    for row in M.to_rows():
        s = lcm(*(e.denominator for e in row))
        scales *= s
        a.append([int(e * s) for e in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sel is None:
                return Fraction(0)
            a[k], a[sel] = a[sel], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (p * a[i][j] - f * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return Fraction(sign * a[n - 1][n - 1], scales)
