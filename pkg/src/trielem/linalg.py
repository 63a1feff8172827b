"""Exact dense linear algebra over the integers and rationals.

Everything runs on Python ints and ``fractions.Fraction``: determinants via
fraction-free elimination, Smith normal form with tracked unimodular
transforms, inverses over the rationals, and eigenvalue sign counts from the
integer characteristic polynomial.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotSymmetric, SingularMatrix


class Matrix:
    """Immutable dense matrix with int or Fraction entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]):
        entries = tuple(tuple(row) for row in rows)
        if entries and any(len(row) != len(entries[0]) for row in entries):
            raise ValueError("matrix rows have unequal lengths")
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_symmetric(self) -> bool:
        return self.entries == tuple(zip(*self.entries))

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_int(self) -> "Matrix":
        """Copy with plain int entries; requires ``is_integral``."""
        return Matrix([[int(x) for x in row] for row in self.entries])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shapes do not match")
        cols = tuple(zip(*other.entries))
        return Matrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.entries
            ]
        )

    def mul_vec(self, vec: Sequence) -> tuple:
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "Matrix":
        return self.scaled(-1)

    def scaled(self, c) -> "Matrix":
        return Matrix([[c * x for x in row] for row in self.entries])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Matrix({[list(row) for row in self.entries]!r})"


def pair_value(g: Matrix, x: Sequence, y: Sequence):
    """The bilinear value x^T g y, exactly."""
    gy = g.mul_vec(y)
    return sum(a * b for a, b in zip(x, gy))


@lru_cache(maxsize=None)
def determinant(a: Matrix):
    """Exact determinant of a square matrix.

    Integer input goes through fraction-free Bareiss elimination, so every
    intermediate value stays an integer; rational input falls back to plain
    Gaussian elimination over Fraction.
    """
    if not a.is_square:
        raise ValueError("determinant of a non-square matrix")
    if a.nrows == 0:
        return 1
    if a.is_integral:
        return _det_bareiss([[int(x) for x in row] for row in a.entries])
    return _det_fraction([[Fraction(x) for x in row] for row in a.entries])


def _det_bareiss(m):
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_fraction(m):
    n = len(m)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = m[i][k] / pivot
            if factor:
                m[i] = [a - factor * b for a, b in zip(m[i], m[k])]
    return sign * det


def rational_inverse(a: Matrix) -> Matrix:
    """Exact inverse over the rationals; raises SingularMatrix when det = 0."""
    if not a.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = a.nrows
    work = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a.entries)
    ]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if work[i][k]), None)
        if pivot_row is None:
            raise SingularMatrix("matrix has determinant zero")
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
        pivot = work[k][k]
        work[k] = [x / pivot for x in work[k]]
        for i in range(n):
            if i != k and work[i][k]:
                factor = work[i][k]
                work[i] = [a - factor * b for a, b in zip(work[i], work[k])]
    return Matrix([row[n:] for row in work])


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Decompose an integer matrix as U @ A @ V = D.

    U and V are unimodular; D is diagonal with nonnegative entries forming a
    divisibility chain d1 | d2 | ...  Pivots are always the smallest
    surviving |entry| (ties broken by lowest row, then column), which makes
    the decomposition deterministic.
    """
    if not a.is_integral:
        raise ValueError("Smith normal form needs integer entries")
    nr, nc = a.nrows, a.ncols
    d = [[int(x) for x in row] for row in a.entries]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        for j in range(nc):
            d[dst][j] += c * d[src][j]
        for j in range(nr):
            u[dst][j] += c * u[src][j]

    def add_col(dst, src, c):
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    def clear_cross(t):
        # Drive column t below the pivot and row t right of it to zero;
        # any division remainder is strictly smaller than the pivot, so
        # promoting it and restarting terminates.
        while True:
            if d[t][t] < 0:
                negate_row(t)
            pivot = d[t][t]
            promoted = False
            for i in range(t + 1, nr):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // pivot))
                    if d[i][t]:
                        swap_rows(t, i)
                        promoted = True
                        break
            if promoted:
                continue
            for j in range(t + 1, nc):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // pivot))
                    if d[t][j]:
                        swap_cols(t, j)
                        promoted = True
                        break
            if promoted:
                continue
            return

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = d[i][j]
                if e and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        while True:
            clear_cross(t)
            pivot = d[t][t]
            offender = None
            for i in range(t + 1, nr):
                if any(d[i][j] % pivot for j in range(t + 1, nc)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
    return Matrix(u), Matrix(d), Matrix(v)


@lru_cache(maxsize=None)
def signature(g: Matrix) -> tuple[int, int, int]:
    """(positive, zero, negative) eigenvalue counts of a symmetric matrix.

    Exact: split into diagonal blocks along the sparsity pattern, take the
    integer characteristic polynomial of each block, count trailing zero
    coefficients for the kernel, and apply Descartes' sign-variation rule,
    which is sharp because symmetric matrices have only real eigenvalues.
    """
    if not g.is_symmetric:
        raise NotSymmetric("signature needs a symmetric matrix")
    if not g.is_integral:
        raise ValueError("signature needs integer entries")
    n_plus = n_zero = n_minus = 0
    for block in _diagonal_blocks(g):
        coeffs = _char_poly(block)
        n = len(block)
        nz = 0
        while nz < n and coeffs[n - nz] == 0:
            nz += 1
        seq = [c for c in coeffs[: n - nz + 1] if c != 0]
        plus = sum(1 for x, y in zip(seq, seq[1:]) if (x > 0) != (y > 0))
        n_plus += plus
        n_zero += nz
        n_minus += n - nz - plus
    return (n_plus, n_zero, n_minus)


def _diagonal_blocks(g: Matrix):
    """Principal submatrices along connected components of the off-diagonal
    support; their spectra concatenate to the full spectrum."""
    n = g.nrows
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and g[i, j] != 0:
                    seen[j] = True
                    stack.append(j)
        comp.sort()
        yield [[g[i, j] for j in comp] for i in comp]


def _char_poly(rows):
    """Coefficients [1, c1, ..., cn] of det(x*I - A), exactly.

    Uses the trace recursion in which every intermediate matrix stays
    integral for integral input; the divisions by k are exact.
    """
    n = len(rows)
    if n == 0:
        return [1]
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        b = [
            [sum(rows[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(b[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("characteristic polynomial recursion broke")
        coeffs.append(q)
        for i in range(n):
            b[i][i] += q
        m = b
    return coeffs
