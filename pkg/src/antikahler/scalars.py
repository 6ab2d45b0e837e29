"""Exact field arithmetic and small dense matrix algebra.

All computation in this package runs over the rationals or the Gaussian
rationals, with arbitrary-precision integers underneath.  Matrices are
immutable and field-generic: entries may be ``fractions.Fraction`` or
:class:`GaussianRational`, mixed freely.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class SingularMatrixError(ValueError):
    """Matrix has determinant zero where an inverse is required."""


class NotSymmetricError(ValueError):
    """Symmetric input required (signature computation)."""


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


def parse_rational(token: str) -> Fraction:
    """Parse 'p', '-p' or 'p/q' (q > 0).  Rejects floats and spaces."""
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"not a rational token: {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rational(x: Fraction) -> str:
    """Inverse of parse_rational; Fraction already normalizes sign and gcd."""
    return str(x)


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i): re + im*i with exact rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(Fraction(value))

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.of(other)
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self):
        if self.im >= 0:
            return f"{self.re} + {self.im}i"
        return f"{self.re} - {-self.im}i"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def gaussian_sqrt(z: GaussianRational) -> Optional[GaussianRational]:
    """Exact square root in Q(i), or None when no such root exists.

    For z = p + qi a root x + yi needs x^2 - y^2 = p and 2xy = q, which
    reduces to rational square roots of (p +- sqrt(p^2 + q^2)) / 2.
    """
    p, q = z.re, z.im
    if q == 0:
        if p >= 0:
            r = rational_sqrt(p)
            return GaussianRational(r) if r is not None else None
        r = rational_sqrt(-p)
        return GaussianRational(Fraction(0), r) if r is not None else None
    n = rational_sqrt(p * p + q * q)
    if n is None:
        return None
    x = rational_sqrt((p + n) / 2)
    if x is None or x == 0:
        return None
    y = q / (2 * x)
    root = GaussianRational(x, y)
    return root if root * root == z else None


def _is_zero(x) -> bool:
    return x == 0


class Matrix:
    """Immutable dense matrix over Q or Q(i)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if not rows:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @staticmethod
    def identity(n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return Matrix([[zero] * ncols for _ in range(nrows)])

    @staticmethod
    def diagonal(entries: Sequence) -> "Matrix":
        n = len(entries)
        zero = Fraction(0)
        return Matrix([[entries[i] if i == j else zero for j in range(n)]
                       for i in range(n)])

    @staticmethod
    def from_cols(cols: Sequence[Sequence]) -> "Matrix":
        return Matrix(list(zip(*cols)))

    def __getitem__(self, i: int):
        return self.rows[i]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows)
                   for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.nrows}x{self.ncols} by "
                    f"{other.nrows}x{other.ncols}")
            cols = list(zip(*other.rows))
            return Matrix([[_dot(row, col) for col in cols] for row in self.rows])
        return Matrix([[a * other for a in row] for row in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * a for a in row] for row in self.rows])

    __matmul__ = __mul__

    def _check_same_shape(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatchError("shape mismatch")

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def apply(self, vector: Sequence) -> tuple:
        if len(vector) != self.ncols:
            raise DimensionMismatchError("vector length mismatch")
        return tuple(_dot(row, vector) for row in self.rows)

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def is_zero(self) -> bool:
        return all(_is_zero(a) for row in self.rows for a in row)

    def det(self):
        if not self.is_square():
            raise DimensionMismatchError("determinant of non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        det = Fraction(1)
        for c in range(n):
            pivot_row = next((r for r in range(c, n) if not _is_zero(work[r][c])), None)
            if pivot_row is None:
                return Fraction(0) * det
            if pivot_row != c:
                work[c], work[pivot_row] = work[pivot_row], work[c]
                det = -det
            pivot = work[c][c]
            det = det * pivot
            for r in range(c + 1, n):
                if not _is_zero(work[r][c]):
                    factor = work[r][c] / pivot
                    work[r] = [a - factor * b for a, b in zip(work[r], work[c])]
        return det

    def rank(self) -> int:
        work = [list(row) for row in self.rows]
        nrows, ncols = self.nrows, self.ncols
        rank = 0
        for c in range(ncols):
            pivot_row = next((r for r in range(rank, nrows)
                              if not _is_zero(work[r][c])), None)
            if pivot_row is None:
                continue
            work[rank], work[pivot_row] = work[pivot_row], work[rank]
            pivot = work[rank][c]
            for r in range(nrows):
                if r != rank and not _is_zero(work[r][c]):
                    factor = work[r][c] / pivot
                    work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
            rank += 1
            if rank == nrows:
                break
        return rank

    def nullspace(self) -> list[tuple]:
        """Basis of the exact kernel, via reduced row echelon form."""
        nrows, ncols = self.nrows, self.ncols
        work = [list(row) for row in self.rows]
        pivots = []
        r = 0
        for c in range(ncols):
            pivot_row = next((p for p in range(r, nrows)
                              if not _is_zero(work[p][c])), None)
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            pivot = work[r][c]
            work[r] = [a / pivot for a in work[r]]
            for p in range(nrows):
                if p != r and not _is_zero(work[p][c]):
                    factor = work[p][c]
                    work[p] = [a - factor * b for a, b in zip(work[p], work[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * ncols
            vec[f] = Fraction(1)
            for row_idx, c in enumerate(pivots):
                vec[c] = -work[row_idx][f]
            basis.append(tuple(vec))
        return basis

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; exact over any field of entries."""
        if not self.is_square():
            raise DimensionMismatchError("inverse of non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        out = [list(row) for row in Matrix.identity(n).rows]
        for c in range(n):
            pivot_row = next((r for r in range(c, n) if not _is_zero(work[r][c])), None)
            if pivot_row is None:
                raise SingularMatrixError("matrix is singular")
            if pivot_row != c:
                work[c], work[pivot_row] = work[pivot_row], work[c]
                out[c], out[pivot_row] = out[pivot_row], out[c]
            pivot = work[c][c]
            work[c] = [a / pivot for a in work[c]]
            out[c] = [a / pivot for a in out[c]]
            for r in range(n):
                if r != c and not _is_zero(work[r][c]):
                    factor = work[r][c]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[c])]
                    out[r] = [a - factor * b for a, b in zip(out[r], out[c])]
        return Matrix(out)

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in row] for row in self.rows])

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in row) for row in self.rows)
        return f"Matrix[{body}]"


def _dot(u: Sequence, v: Sequence):
    total = None
    for a, b in zip(u, v):
        term = a * b
        total = term if total is None else total + term
    return total


def invert(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when det = 0."""
    return m.inverse()


def signature(m: Matrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric rational matrix.

    Symmetric congruence elimination with rational pivoting: when every
    remaining diagonal entry vanishes, a congruence row/column addition
    manufactures a nonzero diagonal pivot (valid away from characteristic 2).
    Sylvester's law makes the counts basis-independent.
    """
    if not m.is_square():
        raise DimensionMismatchError("signature of non-square matrix")
    if not m.is_symmetric():
        raise NotSymmetricError("signature requires a symmetric matrix")
    n = m.nrows
    work = [[Fraction(a) for a in row] for row in m.rows]
    pos = neg = zero = 0
    i = 0
    while i < n:
        pivot_row = next((p for p in range(i, n) if work[p][p] != 0), None)
        if pivot_row is None:
            hit = next(((p, q) for p in range(i, n) for q in range(p + 1, n)
                        if work[p][q] != 0), None)
            if hit is None:
                zero += n - i
                break
            p, q = hit
            # congruence e_p <- e_p + e_q turns the zero diagonal into 2*work[p][q]
            for c in range(n):
                work[p][c] = work[p][c] + work[q][c]
            for r in range(n):
                work[r][p] = work[r][p] + work[r][q]
            pivot_row = p
        if pivot_row != i:
            work[i], work[pivot_row] = work[pivot_row], work[i]
            for r in range(n):
                work[r][i], work[r][pivot_row] = work[r][pivot_row], work[r][i]
        d = work[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            if work[r][i] != 0:
                factor = work[r][i] / d
                for c in range(n):
                    work[r][c] = work[r][c] - factor * work[i][c]
                for c in range(n):
                    work[c][r] = work[c][r] - factor * work[c][i]
        i += 1
    return pos, neg, zero
