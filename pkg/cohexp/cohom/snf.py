from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from loguru import logger

from cohexp.cohom.matrix import IntegerMatrix
from cohexp.exceptions import ContractError

Dense = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class SmithForm(NamedTuple):
    """D = U A V with U, V unimodular and D diagonal, d1 | d2 | ..."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def divisors(self) -> list[int]:
        return [d for d in self.D.diagonal_values() if d]


class _Reducer:
    """
    Dense elimination state. Row operations are mirrored on U and column
    operations on V, so U A V == D holds after every step.
    """

    def __init__(self, data: Dense, rows: int, cols: int, track: bool) -> None:
        self.D = data
        self.m = rows
        self.n = cols
        self.track = track
        self.U = [[int(i == j) for j in range(rows)] for i in range(rows)] if track else []
        self.V = [[int(i == j) for j in range(cols)] for i in range(cols)] if track else []

    # -- elementary operations -------------------------------------------

    def swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        self.D[i], self.D[k] = self.D[k], self.D[i]
        if self.track:
            self.U[i], self.U[k] = self.U[k], self.U[i]

    def swap_cols(self, j: int, k: int) -> None:
        if j == k:
            return
        for row in self.D:
            row[j], row[k] = row[k], row[j]
        if self.track:
            for row in self.V:
                row[j], row[k] = row[k], row[j]

    def negate_row(self, i: int) -> None:
        self.D[i] = [-v for v in self.D[i]]
        if self.track:
            self.U[i] = [-v for v in self.U[i]]

    def _combine_rows(self, mats: list[Dense], i: int, k: int, x: int, y: int, u: int, v: int) -> None:
        # row_i, row_k <- x row_i + y row_k, u row_i + v row_k
        for mat in mats:
            ri, rk = mat[i], mat[k]
            mat[i] = [x * a + y * b for a, b in zip(ri, rk)]
            mat[k] = [u * a + v * b for a, b in zip(ri, rk)]

    def _combine_cols(self, mats: list[Dense], j: int, k: int, x: int, y: int, u: int, v: int) -> None:
        for mat in mats:
            for row in mat:
                a, b = row[j], row[k]
                row[j] = x * a + y * b
                row[k] = u * a + v * b

    def clear_below(self, t: int, i: int) -> None:
        """Make D[i][t] zero using rows t and i; D[t][t] becomes a gcd."""
        a, b = self.D[t][t], self.D[i][t]
        if b == 0:
            return
        mats = [self.D, self.U] if self.track else [self.D]
        if b % a == 0:
            self._combine_rows(mats, t, i, 1, 0, -(b // a), 1)
            return
        x, y, g = xgcd(a, b)
        self._combine_rows(mats, t, i, x, y, -b // g, a // g)

    def clear_right(self, t: int, j: int) -> None:
        a, b = self.D[t][t], self.D[t][j]
        if b == 0:
            return
        mats = [self.D, self.V] if self.track else [self.D]
        if b % a == 0:
            self._combine_cols(mats, t, j, 1, 0, -(b // a), 1)
            return
        x, y, g = xgcd(a, b)
        self._combine_cols(mats, t, j, x, y, -b // g, a // g)

    def add_row(self, target: int, source: int) -> None:
        self.D[target] = [a + b for a, b in zip(self.D[target], self.D[source])]
        if self.track:
            self.U[target] = [a + b for a, b in zip(self.U[target], self.U[source])]

    # -- driver ----------------------------------------------------------

    def _min_pivot(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                v = self.D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return i, j
        return None if best is None else (best[1], best[2])

    def run(self) -> None:
        for t in range(min(self.m, self.n)):
            pivot = self._min_pivot(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            while True:
                for i in range(t + 1, self.m):
                    self.clear_below(t, i)
                for j in range(t + 1, self.n):
                    self.clear_right(t, j)
                if any(self.D[i][t] for i in range(t + 1, self.m)):
                    continue
                d = self.D[t][t]
                # divisibility: pull a row with a non-multiple up and repeat
                offender = next(
                    (
                        i
                        for i in range(t + 1, self.m)
                        if any(v % d for v in self.D[i][t + 1 :])
                    ),
                    None,
                )
                if offender is None:
                    break
                self.add_row(t, offender)
            if self.D[t][t] < 0:
                self.negate_row(t)


def smith_normal_form(a: IntegerMatrix) -> SmithForm:
    """
    Smith normal form with transforms.

    Pivots are the nonzero entries of least absolute value; rows and columns
    are cleared with unimodular 2x2 operations built from extended gcds, and a
    row is folded into the pivot row whenever the divisibility chain would
    break.
    """
    reducer = _Reducer(a.to_dense(), a.rows, a.cols, track=True)
    reducer.run()
    return SmithForm(
        IntegerMatrix.from_dense(reducer.U, cols=a.rows),
        IntegerMatrix.from_dense(reducer.D, cols=a.cols),
        IntegerMatrix.from_dense(reducer.V, cols=a.cols),
    )


def _dense_divisors(data: Dense, rows: int, cols: int) -> list[int]:
    reducer = _Reducer(data, rows, cols, track=False)
    reducer.run()
    return [reducer.D[i][i] for i in range(min(rows, cols)) if reducer.D[i][i]]


def _eliminate_units(a: IntegerMatrix) -> tuple[int, dict[int, dict[int, int]]]:
    """
    Remove unit pivots from a sparse matrix.

    For a pivot +-1 at (i, j) the other entries of column j are cleared with
    row operations; row i can then be cleared by column operations that touch
    nothing else, so row i and column j are dropped and a divisor 1 recorded.
    Returns the number of unit divisors and the remaining rows.
    """
    rows = a.row_dicts()
    columns: dict[int, set[int]] = {}
    for (i, j) in a.entries:
        columns.setdefault(j, set()).add(i)
    units = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(columns):
            holders = columns.get(j)
            if not holders:
                columns.pop(j, None)
                continue
            candidates = [i for i in holders if abs(rows[i][j]) == 1]
            if not candidates:
                continue
            pivot = min(candidates, key=lambda i: (len(rows[i]), i))
            pivot_row = rows.pop(pivot)
            sign = pivot_row[j]
            for i in list(holders):
                if i == pivot:
                    continue
                row = rows[i]
                factor = row[j] * sign
                for k, v in pivot_row.items():
                    value = row.get(k, 0) - factor * v
                    if value:
                        if k not in row:
                            columns.setdefault(k, set()).add(i)
                        row[k] = value
                    else:
                        row.pop(k, None)
                        columns[k].discard(i)
                if not row:
                    del rows[i]
            for k in pivot_row:
                columns[k].discard(pivot)
            columns.pop(j, None)
            units += 1
            progress = True
    return units, rows


def elementary_divisors(a: IntegerMatrix) -> list[int]:
    """
    Nonzero invariant factors d1 | d2 | ... of A, units included.

    Unit pivots are eliminated on the sparse form first; only the remainder
    goes through the dense Smith reduction.
    """
    units, rest = _eliminate_units(a)
    if not rest:
        return [1] * units
    row_ids = sorted(rest)
    col_ids = sorted({j for row in rest.values() for j in row})
    col_pos = {j: k for k, j in enumerate(col_ids)}
    dense = [[0] * len(col_ids) for _ in row_ids]
    for r, i in enumerate(row_ids):
        for j, v in rest[i].items():
            dense[r][col_pos[j]] = v
    logger.debug(
        f"{a!r}: {units} unit pivots, dense remainder {len(row_ids)}x{len(col_ids)}"
    )
    return [1] * units + _dense_divisors(dense, len(row_ids), len(col_ids))


def integer_rank(a: IntegerMatrix) -> int:
    return len(elementary_divisors(a))


def determinant(data: Dense) -> int:
    """Fraction-free Bareiss elimination on a square integer matrix."""
    n = len(data)
    if n == 0:
        return 1
    m = [list(r) for r in data]
    if any(len(r) != n for r in m):
        raise ContractError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def minor_gcd(a: IntegerMatrix, k: int) -> int:
    """gcd of all k x k minors, by brute force. Used as an oracle for small matrices."""
    if not 0 <= k <= min(a.rows, a.cols):
        raise ContractError(f"minor size {k} outside [0, {min(a.rows, a.cols)}]")
    dense = a.to_dense()
    g = 0
    for rows in itertools.combinations(range(a.rows), k):
        for cols in itertools.combinations(range(a.cols), k):
            g = math.gcd(g, determinant([[dense[i][j] for j in cols] for i in rows]))
    return g
