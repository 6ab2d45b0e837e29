"""Anti-Hermitian structures, the Koszul connection, and curvature.

An anti-Hermitian (Norden) structure on a Lie algebra is a pair (g, J) with
J^2 = -I, g symmetric invertible and g(Jx, Jy) = -g(x, y); the signature is
forced to be neutral.  Everything downstream of the Koszul formula is exact.

Curvature convention: R(x, y)z = nabla_x nabla_y z - nabla_y nabla_x z
- nabla_[x,y] z, the sign for which a bi-invariant metric satisfies
R(x, y)z = -1/4 [[x, y], z].  The Ricci tensor is the trace over the first
slot, Rc_jk = sum_i R^i_ijk.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .liealg import LieAlgebra, check_complex_structure
from .scalars import (
    DimensionMismatchError,
    GaussianRational,
    Matrix,
    SingularMatrixError,
    signature,
)


class BadJSquareError(ValueError):
    """J^2 != -I."""


class SingularMetricError(ValueError):
    """Metric matrix is not invertible."""


class NotAntiIsometryError(ValueError):
    """g(Jx, Jy) = -g(x, y) fails (or g is not symmetric)."""


def _basis(dim: int, i: int) -> tuple:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(dim))


class AntiHermitianStructure:
    """Validated triple (algebra, g, J); geometric computations are cached."""

    __slots__ = ("algebra", "g", "J", "g_inv", "_cache")

    def __init__(self, algebra: LieAlgebra, g: Matrix, j_map: Matrix):
        n = algebra.dim
        if g.nrows != n or g.ncols != n or j_map.nrows != n or j_map.ncols != n:
            raise DimensionMismatchError("g and J must be dim x dim")
        if j_map * j_map != -Matrix.identity(n):
            raise BadJSquareError("J^2 != -I")
        if not g.is_symmetric():
            raise NotAntiIsometryError("metric matrix is not symmetric")
        try:
            g_inv = g.inverse()
        except SingularMatrixError:
            raise SingularMetricError("metric matrix is singular") from None
        if j_map.transpose() * g * j_map != -g:
            raise NotAntiIsometryError("g(Jx, Jy) != -g(x, y)")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "J", j_map)
        object.__setattr__(self, "g_inv", g_inv)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("AntiHermitianStructure is immutable")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __eq__(self, other):
        if not isinstance(other, AntiHermitianStructure):
            return NotImplemented
        return (self.algebra == other.algebra and self.g == other.g
                and self.J == other.J)

    def __repr__(self):
        return f"AntiHermitianStructure(dim={self.dim})"

    def metric(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((xi * gy for xi, gy in zip(x, self.g.apply(y))), Fraction(0))

    def metric_signature(self) -> tuple[int, int, int]:
        return signature(self.g)

    def _memo(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]


class Connection:
    """Levi-Civita data: operators M_i with M_i column j = nabla_{e_i} e_j."""

    __slots__ = ("operators",)

    def __init__(self, operators: Sequence[Matrix]):
        object.__setattr__(self, "operators", tuple(operators))

    def __setattr__(self, name, value):
        raise AttributeError("Connection is immutable")

    @property
    def dim(self) -> int:
        return len(self.operators)

    def nabla_basis(self, i: int) -> Matrix:
        return self.operators[i]

    def gamma(self, i: int, j: int, k: int) -> Fraction:
        """Coefficient of e_k in nabla_{e_i} e_j."""
        return self.operators[i][k][j]

    def nabla_direction(self, x: Sequence) -> Matrix:
        """Operator nabla_x = sum_i x_i nabla_{e_i}."""
        n = self.dim
        out = Matrix.zeros(n, n)
        for i, xi in enumerate(x):
            if xi:
                out = out + xi * self.operators[i]
        return out

    def apply(self, x: Sequence, y: Sequence) -> tuple:
        return self.nabla_direction(x).apply(y)

    def __eq__(self, other):
        if not isinstance(other, Connection):
            return NotImplemented
        return self.operators == other.operators


def levi_civita(s: AntiHermitianStructure) -> Connection:
    """Unique metric, torsion-free connection via the Koszul formula.

    2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j], e_k) - g([e_j,e_k], e_i)
                                + g([e_k,e_i], e_j), solved by g^{-1}.
    """
    def build():
        alg, g, g_inv = s.algebra, s.g, s.g_inv
        n = alg.dim
        half = Fraction(1, 2)

        def g_of(vec: Sequence, k: int) -> Fraction:
            return sum((vec[m] * g[m][k] for m in range(n) if vec[m]), Fraction(0))

        operators = []
        for i in range(n):
            cols = []
            for j in range(n):
                rhs = [half * (g_of(alg.bracket_basis(i, j), k)
                               - g_of(alg.bracket_basis(j, k), i)
                               + g_of(alg.bracket_basis(k, i), j))
                       for k in range(n)]
                cols.append(g_inv.apply(rhs))
            operators.append(Matrix.from_cols(cols))
        return Connection(operators)

    return s._memo("levi_civita", build)


def nabla_j_operators(s: AntiHermitianStructure,
                      conn: Optional[Connection] = None) -> tuple[Matrix, ...]:
    """Operators (nabla_{e_i} J) = nabla_i J - J nabla_i; all zero iff anti-Kahler."""
    conn = conn or levi_civita(s)
    return tuple(m * s.J - s.J * m for m in conn.operators)


def is_anti_kahler(s: AntiHermitianStructure) -> bool:
    def build():
        return all(op.is_zero() for op in nabla_j_operators(s))
    return s._memo("anti_kahler", build)


class CurvatureTensor:
    """R(e_i, e_j) as operators for i < j, with the g-lowered form available."""

    __slots__ = ("dim", "g", "_ops")

    def __init__(self, dim: int, g: Matrix, ops: dict):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "_ops", ops)

    def __setattr__(self, name, value):
        raise AttributeError("CurvatureTensor is immutable")

    def op(self, i: int, j: int) -> Matrix:
        """Operator R(e_i, e_j); antisymmetric in (i, j) by construction."""
        if i == j:
            return Matrix.zeros(self.dim, self.dim)
        if i < j:
            return self._ops[(i, j)]
        return -self._ops[(j, i)]

    def component(self, i: int, j: int, k: int, l: int) -> Fraction:
        """R^l_{ijk}: coefficient of e_l in R(e_i, e_j) e_k."""
        return self.op(i, j)[l][k]

    def lowered(self, i: int, j: int, k: int, l: int) -> Fraction:
        """R_{ijkl} = g(R(e_i, e_j) e_k, e_l)."""
        rk = self.op(i, j).col(k)
        return sum((rk[m] * self.g[m][l] for m in range(self.dim) if rk[m]),
                   Fraction(0))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._ops.values())


def curvature(s: AntiHermitianStructure,
              conn: Optional[Connection] = None) -> CurvatureTensor:
    """R(x,y) = [nabla_x, nabla_y] - nabla_{[x,y]} on basis pairs."""
    conn_in = conn

    def build():
        c = conn_in or levi_civita(s)
        alg = s.algebra
        n = alg.dim
        ops = {}
        for i in range(n):
            mi = c.nabla_basis(i)
            for j in range(i + 1, n):
                mj = c.nabla_basis(j)
                r = mi * mj - mj * mi
                w = alg.bracket_basis(i, j)
                for l in range(n):
                    if w[l]:
                        r = r - w[l] * c.nabla_basis(l)
                ops[(i, j)] = r
        return CurvatureTensor(n, s.g, ops)

    if conn_in is None:
        return s._memo("curvature", build)
    return build()


def ricci(s: AntiHermitianStructure,
          conn: Optional[Connection] = None) -> tuple[Matrix, Matrix]:
    """Ricci tensor Rc and operator Ric with Rc(x, y) = g(Ric x, y).

    Rc_jk = sum_i R^i_{ijk} (trace over the first curvature slot);
    Ric = g^{-1} Rc.
    """
    conn_in = conn

    def build():
        r = curvature(s, conn_in)
        n = s.dim
        rc = Matrix([[sum((r.component(i, j, k, i) for i in range(n)), Fraction(0))
                      for k in range(n)] for j in range(n)])
        ric = s.g_inv * rc
        return rc, ric

    if conn_in is None:
        return s._memo("ricci", build)
    return build()


def is_flat(s: AntiHermitianStructure) -> bool:
    return curvature(s).is_zero()


def is_einstein(s: AntiHermitianStructure) -> tuple[bool, Optional[Fraction]]:
    """Exact test Rc = lambda g; lambda from the first nonzero g entry.

    All-zero Rc reports (True, 0): Ricci-flat counts as Einstein.
    """
    rc, _ = ricci(s)
    n = s.dim
    lam = None
    for i in range(n):
        for j in range(n):
            if s.g[i][j] != 0:
                lam = rc[i][j] / s.g[i][j]
                break
        if lam is not None:
            break
    if rc == lam * s.g:
        return True, lam
    return False, None


def is_ricci_flat(s: AntiHermitianStructure) -> bool:
    rc, _ = ricci(s)
    return rc.is_zero()


def curvature_is_pure(s: AntiHermitianStructure) -> bool:
    """Lowered curvature is pure: moving J across any slot preserves it,
    R(Jx,y,z,w) = R(x,Jy,z,w) = R(x,y,Jz,w) = R(x,y,z,Jw) on the basis."""
    r = curvature(s)
    n = s.dim
    J = s.J

    def slot(i, j, k, l, which):
        total = Fraction(0)
        for m in range(n):
            idx = [i, j, k, l]
            coeff = J[m][idx[which]]
            if coeff:
                idx[which] = m
                total += coeff * r.lowered(*idx)
        return total

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(n):
                    t0 = slot(i, j, k, l, 0)
                    if (slot(i, j, k, l, 1) != t0 or slot(i, j, k, l, 2) != t0
                            or slot(i, j, k, l, 3) != t0):
                        return False
    return True


def curvature_j_anticommutes(s: AntiHermitianStructure) -> bool:
    """R(Je_i, Je_j) = -R(e_i, e_j) as operators."""
    r = curvature(s)
    n = s.dim
    J = s.J
    for i in range(n):
        for j in range(i + 1, n):
            acc = Matrix.zeros(n, n)
            for m in range(n):
                if not J[m][i]:
                    continue
                for p in range(n):
                    coeff = J[m][i] * J[p][j]
                    if coeff:
                        acc = acc + coeff * r.op(m, p)
            if acc != -r.op(i, j):
                return False
    return True


def is_bi_invariant_metric(s: AntiHermitianStructure) -> bool:
    """g([x,y], z) + g(y, [x,z]) = 0 on all basis triples (ad-invariance)."""
    alg, g = s.algebra, s.g
    n = alg.dim

    def g_of(vec, k):
        return sum((vec[m] * g[m][k] for m in range(n) if vec[m]), Fraction(0))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if g_of(alg.bracket_basis(i, j), k) + g_of(alg.bracket_basis(i, k), j) != 0:
                    return False
    return True


def twin_metric(s: AntiHermitianStructure) -> AntiHermitianStructure:
    """Twin structure with g~(x, y) = g(Jx, y) on the same (algebra, J)."""
    return AntiHermitianStructure(s.algebra, s.J.transpose() * s.g, s.J)


class ComplexifiedForm:
    """C-bilinear symmetric form <v,w> - i <Jv,w> on the J-complex space."""

    __slots__ = ("structure", "complex_basis", "gram")

    def __init__(self, structure: AntiHermitianStructure):
        object.__setattr__(self, "structure", structure)
        basis = _complex_basis(structure.J)
        object.__setattr__(self, "complex_basis", basis)
        gram = Matrix([[self.eval(u, v) for v in basis] for u in basis])
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexifiedForm is immutable")

    def eval(self, v: Sequence, w: Sequence) -> GaussianRational:
        s = self.structure
        jv = s.J.apply(v)
        return GaussianRational(s.metric(v, w), -s.metric(jv, w))

    def is_isometry(self, t: Matrix) -> bool:
        """T preserves the complexified form on all basis pairs."""
        n = self.structure.dim
        cols = [t.col(i) for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                if self.eval(cols[i], cols[j]) != self.eval(_basis(n, i), _basis(n, j)):
                    return False
        return True


def _complex_basis(j_map: Matrix) -> tuple:
    """Greedy basis f_1..f_m of the J-complex space: {f_p, J f_p} spans R^2m."""
    check_complex_structure(j_map)
    n = j_map.nrows
    chosen: list = []
    spanning_rows: list = []
    for i in range(n):
        cand = _basis(n, i)
        trial = spanning_rows + [cand, j_map.apply(cand)]
        if Matrix(trial).rank() == len(trial):
            chosen.append(cand)
            spanning_rows = trial
            if len(spanning_rows) == n:
                break
    return tuple(chosen)


def complexify(s: AntiHermitianStructure) -> ComplexifiedForm:
    return s._memo("complexified", lambda: ComplexifiedForm(s))


def preserves_metric_and_j(s: AntiHermitianStructure, t: Matrix) -> bool:
    """T is a g-isometry commuting with J."""
    return t.transpose() * s.g * t == s.g and t * s.J == s.J * t


def preserves_complexified_form(s: AntiHermitianStructure, t: Matrix) -> bool:
    return complexify(s).is_isometry(t)


def satisfies_abelian_connection_rule(s: AntiHermitianStructure,
                                      conn: Optional[Connection] = None) -> bool:
    """nabla_{Jx} y = -J nabla_x y on the basis."""
    conn = conn or levi_civita(s)
    return _j_direction_rule(s, conn, Fraction(-1))


def satisfies_bi_invariant_connection_rule(s: AntiHermitianStructure,
                                           conn: Optional[Connection] = None) -> bool:
    """nabla_{Jx} y = J nabla_x y on the basis."""
    conn = conn or levi_civita(s)
    return _j_direction_rule(s, conn, Fraction(1))


def _j_direction_rule(s, conn, sign):
    n = s.dim
    for i in range(n):
        lhs = conn.nabla_direction(s.J.col(i))
        if lhs != sign * (s.J * conn.nabla_basis(i)):
            return False
    return True


def epsilon_parallel_holds(s: AntiHermitianStructure, eps: int,
                           conn: Optional[Connection] = None) -> bool:
    """(nabla_{Jx} J) y = eps J (nabla_x J) y on the basis, eps in {+1, -1}."""
    conn = conn or levi_civita(s)
    ops = nabla_j_operators(s, conn)
    n = s.dim
    for i in range(n):
        ji = s.J.col(i)
        lhs = Matrix.zeros(n, n)
        for m in range(n):
            if ji[m]:
                lhs = lhs + ji[m] * ops[m]
        if lhs != Fraction(eps) * (s.J * ops[i]):
            return False
    return True


def abelian_j_connection(s: AntiHermitianStructure) -> Connection:
    """Closed form nabla_x y = 1/2 ([x, y] - J [x, Jy]).

    Valid Levi-Civita formula exactly when the structure is anti-Kahler with
    an abelian J; exposed independently so the Koszul path can be checked
    against it.
    """
    alg, J = s.algebra, s.J
    n = alg.dim
    half = Fraction(1, 2)
    operators = []
    for i in range(n):
        cols = []
        ei = _basis(n, i)
        for j in range(n):
            plain = alg.bracket_basis(i, j)
            twisted = J.apply(alg.bracket(ei, J.col(j)))
            cols.append(tuple(half * (plain[k] - twisted[k]) for k in range(n)))
        operators.append(Matrix.from_cols(cols))
    return Connection(operators)


def killing_anti_invariant(s: AntiHermitianStructure) -> bool:
    """B(Jx, Jy) = -B(x, y) for the Killing form B."""
    b = s.algebra.killing_form()
    return s.J.transpose() * b * s.J == -b


def second_derivatives_commute(s: AntiHermitianStructure,
                               conn: Optional[Connection] = None) -> bool:
    """nabla_{e_i} nabla_{e_j} = nabla_{e_j} nabla_{e_i} as operator tables."""
    conn = conn or levi_civita(s)
    n = s.dim
    for i in range(n):
        for j in range(i + 1, n):
            mi, mj = conn.nabla_basis(i), conn.nabla_basis(j)
            if mi * mj != mj * mi:
                return False
    return True
