"""Exact integer linear algebra: Smith normal form and ranks.

Matrices are handled either as dense lists of rows or as sparse column maps
``cols[j] = {row: value}``.  Python integers keep every step exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Dense = list[list[int]]


@dataclass(frozen=True)
class SparseMatrix:
    """Integer matrix stored column-wise; zero entries are never stored."""

    nrows: int
    ncols: int
    cols: tuple[dict[int, int], ...]

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> SparseMatrix:
        return cls(nrows, ncols, tuple({} for _ in range(ncols)))

    @classmethod
    def from_dense(cls, rows: Dense) -> SparseMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = tuple({i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols))
        return cls(nrows, ncols, cols)

    def to_dense(self) -> Dense:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def rows(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        my_cols = self.cols
        out = []
        for col in other.cols:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for i, a in my_cols[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append({i: v for i, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, tuple(out))

    def scaled(self, s: int) -> SparseMatrix:
        return SparseMatrix(self.nrows, self.ncols, tuple({i: s * v for i, v in c.items()} for c in self.cols))


def identity(n: int) -> Dense:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Dense, b: Dense) -> Dense:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(ncols)] for i in range(len(a))]


def determinant(m: Dense) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``D`` diagonal; ``factors`` are its nonzero entries."""

    factors: tuple[int, ...]
    U: Dense
    V: Dense
    D: Dense


def smith_normal_form(matrix: Dense) -> SmithForm:
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [list(map(int, row)) for row in matrix]
    U = identity(m)
    V = identity(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            rest_col = [i for i in range(t + 1, m) if a[i][t]]
            rest_row = [j for j in range(t + 1, n) if a[t][j]]
            if rest_col or rest_row:
                # a smaller remainder appeared; move it to the pivot and repeat
                cand = [(abs(a[i][t]), i, t) for i in rest_col] + [(abs(a[t][j]), t, j) for j in rest_row]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = tuple(a[i][i] for i in range(min(m, n)) if a[i][i])
    return SmithForm(factors, U, V, a)


def _pop_unit_pivots(rows: dict[int, dict[int, int]], modulus: int | None) -> int:
    """Eliminate unit pivots in place and return how many were removed.

    With ``modulus`` every nonzero entry is a unit and the result is the full
    rank over the prime field.  Over the integers only entries equal to +-1
    are used, which leaves the invariant factors of the remainder untouched.
    """
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    count = 0
    while True:
        pivot = None
        best_cost = None
        for r, row in rows.items():
            for c, v in row.items():
                if modulus is None and v not in (1, -1):
                    continue
                cost = (len(row) - 1) * (len(cols[c]) - 1)
                if best_cost is None or cost < best_cost:
                    pivot, best_cost = (r, c), cost
                    if cost == 0:
                        break
            if best_cost == 0:
                break
        if pivot is None:
            return count
        r, c = pivot
        prow = rows.pop(r)
        pv = prow[c]
        inv = pow(pv, -1, modulus) if modulus else pv  # pv is +-1 over the integers
        for c2 in prow:
            cols[c2].discard(r)
        for r2 in list(cols[c]):
            row2 = rows[r2]
            factor = row2[c] * inv
            if modulus:
                factor %= modulus
            for c2, v in prow.items():
                nv = row2.get(c2, 0) - factor * v
                if modulus:
                    nv %= modulus
                if nv:
                    if c2 not in row2:
                        cols.setdefault(c2, set()).add(r2)
                    row2[c2] = nv
                elif c2 in row2:
                    del row2[c2]
                    cols[c2].discard(r2)
            if not row2:
                del rows[r2]
        del cols[c]
        count += 1


def _row_dict(mat: SparseMatrix | Dense, modulus: int | None = None) -> dict[int, dict[int, int]]:
    rows = mat.rows() if isinstance(mat, SparseMatrix) else [
        {j: v for j, v in enumerate(row) if v} for row in mat]
    out = {}
    for i, row in enumerate(rows):
        if modulus:
            row = {j: v % modulus for j, v in row.items() if v % modulus}
        if row:
            out[i] = dict(row)
    return out


def invariant_factors(mat: SparseMatrix | Dense) -> tuple[int, ...]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    rows = _row_dict(mat)
    units = _pop_unit_pivots(rows, None)
    if not rows:
        return (1,) * units
    row_ids = sorted(rows)
    col_ids = sorted({c for row in rows.values() for c in row})
    dense = [[rows[r].get(c, 0) for c in col_ids] for r in row_ids]
    return (1,) * units + smith_normal_form(dense).factors


def rank_mod_p(mat: SparseMatrix | Dense, p: int) -> int:
    rows = _row_dict(mat, p)
    return _pop_unit_pivots(rows, p)


def rank_rational(mat: SparseMatrix | Dense) -> int:
    """Rank over the rationals by Gaussian elimination on fractions."""
    rows = [dict((c, Fraction(v)) for c, v in row.items()) for row in _row_dict(mat).values()]
    rank = 0
    while rows:
        row = rows.pop()
        if not row:
            continue
        c, pv = min(row.items())
        rank += 1
        nxt = []
        for other in rows:
            if c in other:
                f = other[c] / pv
                for c2, v in row.items():
                    nv = other.get(c2, 0) - f * v
                    if nv:
                        other[c2] = nv
                    else:
                        other.pop(c2, None)
            if other:
                nxt.append(other)
        rows = nxt
    return rank


def rank_integer(mat: SparseMatrix | Dense) -> int:
    return len(invariant_factors(mat))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normalize_torsion(orders: list[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of a direct sum of cyclic groups."""
    powers: dict[int, list[int]] = {}
    for n in orders:
        if n < 0:
            raise ValueError("negative cyclic order")
        if n in (0, 1):
            continue
        for q, e in prime_factors(n).items():
            powers.setdefault(q, []).append(q ** e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    factors = [1] * length
    for vals in powers.values():
        vals.sort(reverse=True)
        for k, v in enumerate(vals):
            factors[k] *= v
    return tuple(sorted(factors))


__all__ = [
    "SparseMatrix", "SmithForm", "smith_normal_form", "invariant_factors",
    "rank_mod_p", "rank_rational", "rank_integer", "determinant",
    "normalize_torsion", "is_prime", "gcd",
]
