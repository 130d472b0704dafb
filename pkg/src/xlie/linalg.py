"""Exact linear algebra: matrices, RREF, kernels, subspaces, quotients.

Vectors are plain tuples of scalars.  A linear map K^a -> K^b is a (b x a)
Matrix acting on column vectors via `apply`.  Subspaces are held by their
unique RREF basis, so equality of subspaces is entrywise equality and every
set-level statement becomes decidable.

Mod-p row reduction and matrix products are delegated to `xlie._kernels`
(compiled when available); the rational path runs on `fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from xlie import _kernels
from xlie.fields import FieldSpec, Scalar

Vector = tuple[Scalar, ...]


def zero_vec(field: FieldSpec, n: int) -> Vector:
    return (field.zero(),) * n

def basis_vec(field: FieldSpec, n: int, i: int) -> Vector:
    return tuple(field.one() if j == i else field.zero() for j in range(n))

def vec_add(field: FieldSpec, u: Vector, v: Vector) -> Vector:
    if field.p:
        return tuple((a + b) % field.p for a, b in zip(u, v))
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(field: FieldSpec, u: Vector, v: Vector) -> Vector:
    if field.p:
        return tuple((a - b) % field.p for a, b in zip(u, v))
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(field: FieldSpec, c: Scalar, v: Vector) -> Vector:
    if field.p:
        return tuple(c * a % field.p for a in v)
    return tuple(c * a for a in v)

def vec_is_zero(v: Vector) -> bool:
    return not any(v)


def _rref_q(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = -1
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                for j in range(c, ncols):
                    row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
    return m, pivots


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref_cache")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        coerce = field.coerce
        self.field = field
        self.rows = tuple(tuple(coerce(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(row) for row in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols = {ncols} but rows have length {width}")
            self.ncols = width
        else:
            if ncols is None:
                raise ValueError("ncols required for a matrix with no rows")
            self.ncols = ncols
        self._rref_cache: Optional[tuple["Matrix", tuple[int, ...], int]] = None

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_cols(cls, field: FieldSpec, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        """Matrix whose j-th column is cols[j]; handy for maps given on a basis."""
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            raise ValueError("nrows required for a matrix with no columns")
        return cls(field, [[col[i] for col in cols] for i in range(nrows)], ncols=len(cols))

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix-vector product (v as a column)."""
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != cols {self.ncols}")
        p = self.field.p
        if p:
            return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.rows)
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} vs {other.nrows}")
        if self.nrows == 0 or self.ncols == 0 or other.ncols == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        p = self.field.p
        if p:
            rows = _kernels.matmul_mod([list(r) for r in self.rows],
                                       [list(r) for r in other.rows], p)
            return Matrix(self.field, rows, ncols=other.ncols)
        cols = list(zip(*other.rows))
        return Matrix(self.field,
                      [[sum(a * b for a, b in zip(row, col)) for col in cols]
                       for row in self.rows],
                      ncols=other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)], ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.rows], ncols=self.ncols)

    def scale(self, c: Scalar) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in row] for row in self.rows], ncols=self.ncols)

    def transpose(self) -> "Matrix":
        if self.nrows and self.ncols:
            return Matrix(self.field, list(zip(*self.rows)), ncols=self.nrows)
        return Matrix(self.field, [[] for _ in range(self.ncols)], ncols=self.nrows)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.ncols != other.ncols:
            raise ValueError("stack mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.nrows != other.nrows:
            raise ValueError("stack mismatch")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols + other.ncols)

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def rref(self) -> tuple["Matrix", tuple[int, ...], int]:
        """(RREF matrix, pivot columns, rank); cached."""
        if self._rref_cache is None:
            if self.nrows == 0 or self.ncols == 0:
                self._rref_cache = (self, (), 0)
            elif self.field.p:
                rows, pivots = _kernels.rref_mod([list(r) for r in self.rows], self.field.p)
                self._rref_cache = (Matrix(self.field, rows, ncols=self.ncols),
                                    tuple(pivots), len(pivots))
            else:
                rows, pivots = _rref_q([list(r) for r in self.rows])
                self._rref_cache = (Matrix(self.field, rows, ncols=self.ncols),
                                    tuple(pivots), len(pivots))
        return self._rref_cache

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self) -> "Subspace":
        """Null space {v : self @ v = 0} as a canonical subspace of K^ncols."""
        n = self.ncols
        if n == 0:
            return Subspace.zero(self.field, 0)
        if self.nrows == 0:
            return Subspace.full(self.field, n)
        red, pivots, rank = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        neg = self.field.neg
        basis = []
        for f in free:
            v = [self.field.zero()] * n
            v[f] = self.field.one()
            for r, pc in enumerate(pivots):
                v[pc] = neg(red.rows[r][f])
            basis.append(v)
        return Subspace(self.field, n, basis)

    def inverse(self) -> Optional["Matrix"]:
        """Inverse of a square matrix, or None when singular."""
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        if n == 0:
            return self
        aug = self.hstack(Matrix.identity(self.field, n))
        red, pivots, rank = aug.rref()
        if rank != n or any(c >= n for c in pivots):
            return None
        return Matrix(self.field, [row[n:] for row in red.rows], ncols=n)

    def to_lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self.rows]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, {[list(map(str, r)) for r in self.rows]})"


def solve(a: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """Some x with a @ x = b, or None; free variables are set to zero."""
    if len(b) != a.nrows:
        raise ValueError("rhs length mismatch")
    x = solve_many(a, Matrix(a.field, [[v] for v in b], ncols=1))
    return x.col(0) if x is not None else None


def solve_many(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """X with a @ X = b (columnwise), or None; free variables zero."""
    if a.nrows != b.nrows:
        raise ValueError("rhs row mismatch")
    n = a.ncols
    if b.ncols == 0:
        return Matrix.zeros(a.field, n, 0)
    if a.nrows == 0:
        return Matrix.zeros(a.field, n, b.ncols)
    red, pivots, _ = a.hstack(b).rref()
    if any(c >= n for c in pivots):
        return None
    zero = a.field.zero()
    out = [[zero] * b.ncols for _ in range(n)]
    for r, pc in enumerate(pivots):
        out[pc] = list(red.rows[r][n:])
    return Matrix(a.field, out, ncols=b.ncols)


class Subspace:
    """Subspace of K^n held by its unique RREF basis (no zero rows)."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field: FieldSpec, ambient_dim: int, vectors: Iterable[Iterable]):
        # canonicalize whatever spanning set we are given
        m = Matrix(field, vectors, ncols=ambient_dim)
        red, _, rank = m.rref()
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = Matrix(field, red.rows[:rank], ncols=ambient_dim)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def pivots(self) -> tuple[int, ...]:
        return self.basis.rref()[1]

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.coords_of(v) is not None

    def coords_of(self, v: Sequence[Scalar]) -> Optional[Vector]:
        """Coordinates of v in the RREF basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector length != ambient dim")
        field = self.field
        residual = list(field.coerce(x) for x in v)
        coords = []
        for row, pc in zip(self.basis.rows, self.pivots()):
            c = residual[pc]
            coords.append(c)
            if c:
                for j in range(pc, self.ambient_dim):
                    residual[j] = field.sub(residual[j], field.mul(c, row[j]))
        if any(residual):
            return None
        return tuple(coords)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.rows)

    def linear_combination(self, coords: Sequence[Scalar]) -> Vector:
        """The vector with the given coordinates in the RREF basis."""
        field = self.field
        v = list(zero_vec(field, self.ambient_dim))
        for c, row in zip(coords, self.basis.rows):
            if c:
                for j in range(self.ambient_dim):
                    v[j] = field.add(v[j], field.mul(c, row[j]))
        return tuple(v)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of K^{self.ambient_dim})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.field != v.field or u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient mismatch")
    return Subspace(u.field, u.ambient_dim, u.basis.rows + v.basis.rows)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """U ∩ V via the kernel of the stacked-basis system."""
    if u.field != v.field or u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient mismatch")
    ku, kv = u.dim, v.dim
    if ku == 0 or kv == 0:
        return Subspace.zero(u.field, u.ambient_dim)
    # columns: coefficients (a, b) with a·basis(U) - b·basis(V) = 0
    stacked = u.basis.transpose().hstack(v.basis.transpose().scale(u.field.neg(u.field.one())))
    vectors = []
    for coeffs in stacked.kernel().basis.rows:
        a = coeffs[:ku]
        vec = zero_vec(u.field, u.ambient_dim)
        for c, row in zip(a, u.basis.rows):
            vec = vec_add(u.field, vec, vec_scale(u.field, c, row))
        vectors.append(vec)
    return Subspace(u.field, u.ambient_dim, vectors)


class QuotientCoords:
    """Coordinates on K^n / S with a deterministic section.

    The section basis consists of the standard coordinates not hit by the
    pivots of S's RREF basis, so project and lift are canonical: project
    sends a vector to its coset coordinates, lift picks the representative
    supported on non-pivot coordinates.  project @ lift = identity and
    project(v) = 0 exactly when v ∈ S.
    """

    __slots__ = ("field", "ambient_dim", "subspace", "section", "project", "lift")

    def __init__(self, field: FieldSpec, ambient_dim: int, subspace: Subspace,
                 section: Matrix, project: Matrix, lift: Matrix):
        self.field = field
        self.ambient_dim = ambient_dim
        self.subspace = subspace
        self.section = section
        self.project = project
        self.lift = lift

    @property
    def dim(self) -> int:
        return self.section.nrows

    def project_vec(self, v: Sequence[Scalar]) -> Vector:
        return self.project.apply(v)

    def lift_vec(self, w: Sequence[Scalar]) -> Vector:
        return self.lift.apply(w)

    def __repr__(self) -> str:
        return f"QuotientCoords(K^{self.ambient_dim} / dim-{self.subspace.dim})"


def quotient_coords(ambient_dim: int, s: Subspace) -> QuotientCoords:
    if s.ambient_dim != ambient_dim:
        raise ValueError("ambient mismatch")
    field = s.field
    pivot_set = set(s.pivots())
    free = [c for c in range(ambient_dim) if c not in pivot_set]
    zero, one = field.zero(), field.one()
    section_rows = []
    project_rows = []
    for c in free:
        sec = [zero] * ambient_dim
        sec[c] = one
        section_rows.append(sec)
        proj = [zero] * ambient_dim
        proj[c] = one
        for r, pc in enumerate(s.pivots()):
            proj[pc] = field.neg(s.basis.rows[r][c])
        project_rows.append(proj)
    section = Matrix(field, section_rows, ncols=ambient_dim)
    project = Matrix(field, project_rows, ncols=ambient_dim)
    lift = section.transpose()
    return QuotientCoords(field, ambient_dim, s, section, project, lift)


def matrix_maps_subspace(f: Matrix, source: Subspace, target: Subspace) -> bool:
    """Does f send every vector of `source` into `target`?"""
    return all(target.contains(f.apply(row)) for row in source.basis.rows)


def restrict_matrix(f: Matrix, source: Subspace, target: Subspace) -> Optional[Matrix]:
    """Matrix of f|source in the RREF basis coordinates, or None if f escapes target."""
    cols = []
    for row in source.basis.rows:
        coords = target.coords_of(f.apply(row))
        if coords is None:
            return None
        cols.append(coords)
    return Matrix.from_cols(f.field, cols, nrows=target.dim)


def induced_on_quotient(f: Matrix, source_q: QuotientCoords,
                        target_q: QuotientCoords) -> Optional[Matrix]:
    """Matrix induced by f on quotient coordinates; None if not well defined."""
    if not matrix_maps_subspace(f, source_q.subspace, target_q.subspace):
        return None
    return target_q.project @ f @ source_q.lift
