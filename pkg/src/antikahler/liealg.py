"""Lie algebras from structure-constant tables.

A :class:`LieAlgebra` stores the brackets of basis pairs (i, j) with i < j
and synthesizes antisymmetry.  Construction validates the Jacobi identity;
unvalidated tables only exist as the raw mapping passed to
:func:`jacobi_residual` or :meth:`LieAlgebra.from_brackets`.

Linear maps on the algebra (complex structures, adjoint maps, isomorphism
witnesses) are plain :class:`~antikahler.scalars.Matrix` objects over the
chosen basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .scalars import DimensionMismatchError, Matrix

BracketTable = Mapping[tuple[int, int], Sequence]


class AntisymmetryViolation(ValueError):
    """Bracket table lists a pair (i, j) with i >= j."""


class JacobiViolation(ValueError):
    """Bracket table fails the Jacobi identity."""


class NotComplexStructureError(ValueError):
    """Linear map J does not satisfy J^2 = -I."""


def _zero(dim: int) -> tuple:
    return (Fraction(0),) * dim


def _as_vector(dim: int, value) -> tuple:
    if isinstance(value, Mapping):
        vec = [Fraction(0)] * dim
        for k, coeff in value.items():
            vec[k] = Fraction(coeff)
        return tuple(vec)
    vec = tuple(Fraction(x) for x in value)
    if len(vec) != dim:
        raise DimensionMismatchError("bracket vector has wrong length")
    return vec


def jacobi_residual(dim, brackets: BracketTable = None) -> Fraction:
    """Max-abs component of [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples.

    Zero exactly when the (antisymmetrized) table defines a Lie algebra.
    Works on raw tables, before any validation; a validated LieAlgebra may
    be passed directly (and then always yields zero).
    """
    if isinstance(dim, LieAlgebra):
        dim, brackets = dim.dim, dim.nonzero_brackets()
    table = {key: _as_vector(dim, vec) for key, vec in brackets.items()}

    def basis_bracket(i: int, j: int) -> tuple:
        if i == j:
            return _zero(dim)
        if (i, j) in table:
            return table[(i, j)]
        if (j, i) in table:
            return tuple(-x for x in table[(j, i)])
        return _zero(dim)

    def vec_bracket(x: Sequence, j: int) -> list:
        out = [Fraction(0)] * dim
        for i, xi in enumerate(x):
            if xi:
                w = basis_bracket(i, j)
                for k in range(dim):
                    out[k] += xi * w[k]
        return out

    worst = Fraction(0)
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                res = [Fraction(0)] * dim
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = basis_bracket(a, b)
                    outer = vec_bracket(inner, c)
                    for m in range(dim):
                        res[m] += outer[m]
                worst = max(worst, max((abs(x) for x in res), default=Fraction(0)))
    return worst


class LieAlgebra:
    """Validated Lie algebra over Q given by its structure constants."""

    __slots__ = ("dim", "_table", "_killing")

    def __init__(self, dim: int, table: dict, _validated: bool = False):
        if not _validated:
            raise TypeError("use LieAlgebra.from_brackets")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_killing", None)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_brackets(cls, dim: int, brackets: BracketTable) -> "LieAlgebra":
        """Build and validate; keys must satisfy i < j, values are coefficient
        vectors (or {index: coeff} mappings) of [e_i, e_j]."""
        table = {}
        for (i, j), value in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError(f"basis index out of range: {(i, j)}")
            if i >= j:
                raise AntisymmetryViolation(
                    f"bracket ({i}, {j}) must be listed with i < j")
            vec = _as_vector(dim, value)
            if any(vec):
                table[(i, j)] = vec
        residual = jacobi_residual(dim, table)
        if residual != 0:
            raise JacobiViolation(f"Jacobi identity fails, residual {residual}")
        return cls(dim, table, _validated=True)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, {}, _validated=True)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self._table.items()))))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self._table)})"

    def nonzero_brackets(self) -> dict:
        """Copy of the stored i<j table (only nonzero brackets)."""
        return dict(self._table)

    def bracket_basis(self, i: int, j: int) -> tuple:
        if i == j:
            return _zero(self.dim)
        if (i, j) in self._table:
            return self._table[(i, j)]
        if (j, i) in self._table:
            return tuple(-x for x in self._table[(j, i)])
        return _zero(self.dim)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j)[k]

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear expansion of [x, y] through the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("vector length mismatch")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                w = self.bracket_basis(i, j)
                coeff = xi * yj
                for k in range(self.dim):
                    if w[k]:
                        out[k] += coeff * w[k]
        return tuple(out)

    def ad_basis(self, i: int) -> Matrix:
        """Matrix of ad_{e_i}: columns are [e_i, e_j]."""
        return Matrix.from_cols([self.bracket_basis(i, j) for j in range(self.dim)])

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad_x = [x, .]."""
        return Matrix.from_cols([self.bracket(x, _basis(self.dim, j))
                                 for j in range(self.dim)])

    def killing_form(self) -> Matrix:
        """B_ij = trace(ad_{e_i} ad_{e_j}); cached, symmetric."""
        if self._killing is None:
            ads = [self.ad_basis(i) for i in range(self.dim)]
            rows = []
            for i in range(self.dim):
                row = []
                for j in range(self.dim):
                    prod = ads[i] * ads[j]
                    row.append(sum((prod[k][k] for k in range(self.dim)),
                                   Fraction(0)))
                rows.append(row)
            object.__setattr__(self, "_killing", Matrix(rows))
        return self._killing

    def is_unimodular(self) -> bool:
        for i in range(self.dim):
            ad_i = self.ad_basis(i)
            if sum((ad_i[k][k] for k in range(self.dim)), Fraction(0)) != 0:
                return False
        return True

    def is_abelian(self) -> bool:
        return not self._table

    def derived_dim(self) -> int:
        """Dimension of span{[e_i, e_j]}, by exact rank."""
        vecs = [self.bracket_basis(i, j)
                for i in range(self.dim) for j in range(i + 1, self.dim)]
        vecs = [v for v in vecs if any(v)]
        if not vecs:
            return 0
        return Matrix(vecs).rank()

    def center_dim(self) -> int:
        """dim ker(x -> ad_x), by exact rank of the stacked system."""
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([self.structure_constant(i, j, k)
                             for i in range(self.dim)])
        return self.dim - Matrix(rows).rank()


def _basis(dim: int, i: int) -> tuple:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))


def check_complex_structure(j_map: Matrix) -> None:
    """Raise unless J^2 = -I exactly."""
    if not j_map.is_square():
        raise NotComplexStructureError("J must be square")
    n = j_map.nrows
    if j_map * j_map != -Matrix.identity(n):
        raise NotComplexStructureError("J^2 != -I")


def nijenhuis(algebra: LieAlgebra, j_map: Matrix) -> tuple:
    """Table N(e_i, e_j) of [Jx,Jy] - J[Jx,y] - J[x,JY] - [x,y] on basis pairs.

    Vanishes identically iff J is integrable in the left-invariant sense.
    """
    check_complex_structure(j_map)
    n = algebra.dim
    table = []
    for i in range(n):
        row = []
        ji = j_map.col(i)
        for j in range(n):
            jj = j_map.col(j)
            ej = _basis(n, j)
            ei = _basis(n, i)
            term1 = algebra.bracket(ji, jj)
            term2 = j_map.apply(algebra.bracket(ji, ej))
            term3 = j_map.apply(algebra.bracket(ei, jj))
            term4 = algebra.bracket_basis(i, j)
            row.append(tuple(term1[k] - term2[k] - term3[k] - term4[k]
                             for k in range(n)))
        table.append(tuple(row))
    return tuple(table)


def nijenhuis_is_zero(algebra: LieAlgebra, j_map: Matrix) -> bool:
    return all(not any(vec) for row in nijenhuis(algebra, j_map) for vec in row)


def is_abelian_j(algebra: LieAlgebra, j_map: Matrix) -> bool:
    """[Jx, Jy] = [x, y] on all basis pairs."""
    check_complex_structure(j_map)
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = algebra.bracket(j_map.col(i), j_map.col(j))
            if lhs != algebra.bracket_basis(i, j):
                return False
    return True


def is_bi_invariant_j(algebra: LieAlgebra, j_map: Matrix) -> bool:
    """[Jx, y] = J[x, y] on all basis pairs."""
    check_complex_structure(j_map)
    n = algebra.dim
    for i in range(n):
        ji = j_map.col(i)
        for j in range(n):
            lhs = algebra.bracket(ji, _basis(n, j))
            rhs = j_map.apply(algebra.bracket_basis(i, j))
            if lhs != rhs:
                return False
    return True


def is_anti_abelian_j(algebra: LieAlgebra, j_map: Matrix) -> bool:
    """[Jx, Jy] = -[x, y] on all basis pairs."""
    check_complex_structure(j_map)
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = algebra.bracket(j_map.col(i), j_map.col(j))
            rhs = tuple(-x for x in algebra.bracket_basis(i, j))
            if lhs != rhs:
                return False
    return True
