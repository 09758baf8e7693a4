"""Exact dense linear algebra over the rationals and integers.

Vectors are plain tuples.  ``Matrix`` is a small immutable rectangular
array of Fractions; the integer-only routines (Smith normal form) work on
lists of ints.  Everything here is deterministic and allocation-light,
sized for the small dimensions (n <= 6) this package targets.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InputError, InternalError

IntVector = tuple[int, ...]
Vector = tuple[Fraction, ...]


def intvec(coords: Iterable[int]) -> IntVector:
    v = tuple(int(c) for c in coords)
    return v


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def vec_dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v, strict=True))


class Matrix:
    """Immutable rectangular matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(Fraction(x) for x in row) for row in entries]
        if not rows or not rows[0]:
            raise InputError("matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("matrix rows must have equal length")
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        return cls(list(zip(*columns)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.entries]})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError("matrix dimensions do not match")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix(
            [[vec_dot(r, c) for c in cols] for r in self.entries]
        )

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise InputError("vector length does not match matrix width")
        return tuple(vec_dot(r, v) for r in self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.entries for x in r)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise InputError("determinant requires a square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        sign = 1
        result = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                sign = -sign
            result *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                factor = a[r][col] * inv
                if factor:
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return sign * result

    def rank(self) -> int:
        a = [list(r) for r in self.entries]
        rank = 0
        for col in range(self.cols):
            pivot = next((r for r in range(rank, self.rows) if a[r][col] != 0), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            inv = 1 / a[rank][col]
            a[rank] = [x * inv for x in a[rank]]
            for r in range(self.rows):
                if r != rank and a[r][col]:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[rank])]
            rank += 1
            if rank == self.rows:
                break
        return rank

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise InputError("inverse requires a square matrix")
        n = self.rows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise InputError("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])


def solve_linear(matrix: Matrix, rhs: Sequence) -> Optional[Vector]:
    """Solve matrix @ x = rhs exactly.

    Returns one solution, or None when the system is inconsistent.  For
    underdetermined consistent systems the free variables are set to 0.
    """
    m, n = matrix.rows, matrix.cols
    if len(rhs) != m:
        raise InputError("right-hand side length does not match matrix")
    a = [list(matrix.row(i)) + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if a[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = a[r][n]
    return tuple(x)


def nullspace(matrix: Matrix) -> list[Vector]:
    """Basis of the right kernel, echelon-derived, deterministic order."""
    m, n = matrix.rows, matrix.cols
    a = [list(r) for r in matrix.entries]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(tuple(v))
    return basis


def hyperplane_through(points: Sequence[Sequence[int]]) -> Vector:
    """Coefficients e with <e, p> = 1 for each of the n given points.

    The points must be n linearly independent vectors in R^n, which is
    equivalent to being affinely independent with the origin outside
    their affine span.  Inconsistent or degenerate systems raise.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        raise InputError("no points given")
    n = len(pts[0])
    if len(pts) != n:
        raise InputError(f"need exactly {n} points in dimension {n}, got {len(pts)}")
    solution = solve_linear(Matrix(pts), [Fraction(1)] * n)
    if solution is None:
        raise InputError("no hyperplane <e, x> = 1 through the given points")
    m = Matrix(pts)
    if m.rank() < n:
        # consistent but underdetermined: affine span passes through the origin
        raise InputError("points do not determine a unique hyperplane avoiding the origin")
    return solution


def smith_normal_form(matrix: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form of a nonsingular integer matrix.

    Returns (U, S, V) with U, V unimodular and U @ matrix @ V == S,
    S = diag(s_1, ..., s_n), each s_i > 0 and s_1 | s_2 | ... | s_n.
    """
    if matrix.rows != matrix.cols:
        raise InputError("Smith normal form implemented for square matrices only")
    if not matrix.is_integral():
        raise InputError("Smith normal form requires integer entries")
    n = matrix.rows
    a = [[int(x) for x in row] for row in matrix.entries]
    if Matrix(a).det() == 0:
        raise InputError("matrix is singular")
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for k in range(n):
        while True:
            # move a minimal-magnitude nonzero entry of the trailing block to (k, k)
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                raise InternalError("unexpected zero block in nonsingular matrix")
            bi, bj = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            dirty = False
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    add_row(i, k, -q)
                    if a[i][k] != 0:
                        dirty = True
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    add_col(j, k, -q)
                    if a[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole trailing block for the chain condition
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if a[i][j] % a[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(k, offender, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]

    um, sm, vm = Matrix(u), Matrix(a), Matrix(v)
    if (um @ matrix @ vm) != sm:
        raise InternalError("Smith normal form decomposition failed to verify")
    if abs(um.det()) != 1 or abs(vm.det()) != 1:
        raise InternalError("Smith normal form transforms are not unimodular")
    diag = [int(sm[i, i]) for i in range(n)]
    for i in range(n - 1):
        if diag[i] <= 0 or diag[i + 1] % diag[i] != 0:
            raise InternalError("Smith normal form divisibility chain violated")
    return um, sm, vm


def lcm(values: Iterable[int]) -> int:
    out = 1
    for x in values:
        x = abs(int(x))
        if x:
            out = out * x // gcd(out, x)
    return out
