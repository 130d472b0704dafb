"""Lie algebras by structure constants over an exact field.

A LieAlgebra stores the full tensor c with c[i][j] the coordinates of
[e_i, e_j].  The classical computations (center, derived subalgebra,
lower-central and derived series, derivation algebra) are all exact
kernel/span calculations, and Lie-algebra isoclinism is verified on the
central quotients and derived subalgebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from xlie.fields import FieldSpec, Scalar
from xlie.linalg import (
    Matrix,
    QuotientCoords,
    Subspace,
    Vector,
    basis_vec,
    quotient_coords,
    vec_add,
    zero_vec,
)
from xlie.validation import ValidationReport

Tensor = tuple[tuple[Vector, ...], ...]


def _coerce_tensor(field: FieldSpec, dim: int, structure) -> Tensor:
    tensor = tuple(tuple(tuple(field.coerce(x) for x in vec) for vec in row)
                   for row in structure)
    if len(tensor) != dim or any(len(row) != dim for row in tensor) \
            or any(len(vec) != dim for row in tensor for vec in row):
        raise ValueError(f"structure tensor is not {dim}x{dim}x{dim}")
    return tensor


class LieAlgebra:
    """Lie algebra on K^dim with structure tensor c[i][j] = [e_i, e_j]."""

    __slots__ = ("field", "dim", "structure")

    def __init__(self, field: FieldSpec, dim: int, structure):
        self.field = field
        self.dim = dim
        self.structure = _coerce_tensor(field, dim, structure)

    @classmethod
    def from_brackets(cls, field: FieldSpec, dim: int,
                      brackets: dict[tuple[int, int], Sequence[Scalar]],
                      check: bool = True) -> "LieAlgebra":
        """Build from the i<j brackets only; antisymmetry fills the rest."""
        zero = zero_vec(field, dim)
        c = [[list(zero) for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket key must have 0 <= i < j < dim, got ({i}, {j})")
            v = tuple(field.coerce(x) for x in vec)
            c[i][j] = list(v)
            c[j][i] = [field.neg(x) for x in v]
        g = cls(field, dim, c)
        if check:
            validate_lie(g).raise_if_invalid("not a Lie algebra")
        return g

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        return bracket(self, x, y)

    def basis(self) -> list[Vector]:
        return [basis_vec(self.field, self.dim, i) for i in range(self.dim)]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LieAlgebra) and self.field == other.field
                and self.dim == other.dim and self.structure == other.structure)

    def __hash__(self) -> int:
        return hash((self.field, self.dim, self.structure))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim {self.dim} over {self.field})"


def direct_sum_lie(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    """Block direct sum of Lie algebras, g coordinates first."""
    if g.field != h.field:
        raise ValueError("field mismatch")
    field = g.field
    n = g.dim + h.dim
    zero = zero_vec(field, n)
    c = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(g.dim):
        for j in range(g.dim):
            c[i][j] = tuple(g.structure[i][j]) + zero_vec(field, h.dim)
    for i in range(h.dim):
        for j in range(h.dim):
            c[g.dim + i][g.dim + j] = zero_vec(field, g.dim) + tuple(h.structure[i][j])
    return LieAlgebra(field, n, c)


def validate_lie(g: LieAlgebra) -> ValidationReport:
    """Check alternating, antisymmetry, and Jacobi; report every violation."""
    report = ValidationReport()
    c = g.structure
    n = g.dim
    field = g.field
    for i in range(n):
        if any(c[i][i]):
            report.add("alternating", (i,), f"[e_{i}, e_{i}] = {list(map(str, c[i][i]))}")
    for i in range(n):
        for j in range(i + 1, n):
            if any(field.add(a, b) for a, b in zip(c[i][j], c[j][i])):
                report.add("antisymmetry", (i, j),
                           f"[e_{i}, e_{j}] + [e_{j}, e_{i}] != 0")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = bracket(g, basis_vec(field, n, i), c[j][k])
                s = vec_add(field, s, bracket(g, basis_vec(field, n, j), c[k][i]))
                s = vec_add(field, s, bracket(g, basis_vec(field, n, k), c[i][j]))
                if any(s):
                    report.add("jacobi", (i, j, k),
                               f"cyclic sum = {list(map(str, s))}")
    return report


def bracket(g: LieAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """Bilinear extension of the structure tensor."""
    n = g.dim
    if len(x) != n or len(y) != n:
        raise ValueError("vector length != dim")
    field = g.field
    c = g.structure
    out = [field.zero()] * n
    p = field.p
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = c[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            f = xi * yj
            vec = ci[j]
            if p:
                for k in range(n):
                    if vec[k]:
                        out[k] = (out[k] + f * vec[k]) % p
            else:
                for k in range(n):
                    if vec[k]:
                        out[k] = out[k] + f * vec[k]
    return tuple(out)


def ad(g: LieAlgebra, x: Sequence[Scalar]) -> Matrix:
    """Adjoint map ad_x = [x, -] as a dim x dim matrix."""
    cols = [bracket(g, x, e) for e in g.basis()]
    return Matrix.from_cols(g.field, cols, nrows=g.dim)


def center(g: LieAlgebra) -> Subspace:
    """{v : [v, e_j] = 0 for all j} via the stacked adjoint system."""
    n = g.dim
    c = g.structure
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([c[i][j][k] for i in range(n)])
    return Matrix(g.field, rows, ncols=n).kernel()


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    """Span of all brackets [e_i, e_j]."""
    vectors = [g.structure[i][j] for i in range(g.dim) for j in range(i + 1, g.dim)]
    return Subspace(g.field, g.dim, vectors)


def bracket_subspaces(g: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of [x, y] over basis vectors x of u, y of v."""
    vectors = [bracket(g, x, y) for x in u.basis.rows for y in v.basis.rows]
    return Subspace(g.field, g.dim, vectors)


LOWER_CENTRAL = "lower_central"
DERIVED = "derived"


@dataclass(frozen=True)
class SeriesResult:
    """A descending chain of subspaces; terminates means it reaches 0.

    For a terminating lower central series `class_or_length` is the
    nilpotency class; for a terminating derived series it is the derived
    length.  Non-terminating chains stabilize at a nonzero term and
    report None.
    """

    kind: str
    terms: tuple[Subspace, ...]
    terminates: bool
    class_or_length: Optional[int]


def lie_series(g: LieAlgebra, kind: str) -> SeriesResult:
    if kind not in (LOWER_CENTRAL, DERIVED):
        raise ValueError(f"unknown series kind: {kind!r}")
    full = Subspace.full(g.field, g.dim)
    terms = [full]
    # chains in dimension n strictly descend, so n+1 terms suffice
    for _ in range(g.dim + 1):
        prev = terms[-1]
        if prev.dim == 0:
            break
        nxt = bracket_subspaces(g, full if kind == LOWER_CENTRAL else prev, prev)
        if nxt == prev:
            break
        terms.append(nxt)
    terminates = terms[-1].dim == 0
    return SeriesResult(kind, tuple(terms), terminates,
                        len(terms) - 1 if terminates else None)


def is_nilpotent(g: LieAlgebra) -> bool:
    return lie_series(g, LOWER_CENTRAL).terminates


def is_solvable(g: LieAlgebra) -> bool:
    return lie_series(g, DERIVED).terminates


def nilpotency_class(g: LieAlgebra) -> Optional[int]:
    return lie_series(g, LOWER_CENTRAL).class_or_length


def derived_length(g: LieAlgebra) -> Optional[int]:
    return lie_series(g, DERIVED).class_or_length


def _flatten(m: Matrix) -> Vector:
    return tuple(x for row in m.rows for x in row)


def _unflatten(field: FieldSpec, v: Sequence[Scalar], nrows: int, ncols: int) -> Matrix:
    return Matrix(field, [v[r * ncols:(r + 1) * ncols] for r in range(nrows)], ncols=ncols)


@dataclass(frozen=True)
class DerAlgebra:
    """Der(g): realization matrices, abstract structure constants, and the
    flat coordinate subspace of K^(n^2) the basis spans."""

    matrices: tuple[Matrix, ...]
    algebra: LieAlgebra
    flat: Subspace

    @property
    def dim(self) -> int:
        return len(self.matrices)

    def coords_of(self, d: Matrix) -> Optional[Vector]:
        return self.flat.coords_of(_flatten(d))


def derivation_algebra(g: LieAlgebra) -> DerAlgebra:
    """Solve D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] for n x n matrices D."""
    n = g.dim
    c = g.structure
    field = g.field
    zero = field.zero()
    rows = []
    # unknown D is flattened row-major: D[r][k] at index r*n + k
    for i in range(n):
        for j in range(i + 1, n):
            for m in range(n):
                row = [zero] * (n * n)
                for k in range(n):
                    if c[i][j][k]:
                        row[m * n + k] = field.add(row[m * n + k], c[i][j][k])
                for r in range(n):
                    if c[r][j][m]:
                        row[r * n + i] = field.sub(row[r * n + i], c[r][j][m])
                    if c[i][r][m]:
                        row[r * n + j] = field.sub(row[r * n + j], c[i][r][m])
                rows.append(row)
    if rows:
        flat = Matrix(field, rows, ncols=n * n).kernel()
    else:
        flat = Subspace.full(field, n * n)
    matrices = tuple(_unflatten(field, v, n, n) for v in flat.basis.rows)
    d = len(matrices)
    structure = [[zero_vec(field, d) for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(a + 1, d):
            comm = matrices[a] @ matrices[b] - matrices[b] @ matrices[a]
            coords = flat.coords_of(_flatten(comm))
            if coords is None:
                raise AssertionError("derivations not closed under commutator")
            structure[a][b] = coords
            structure[b][a] = tuple(field.neg(x) for x in coords)
    algebra = LieAlgebra(field, d, structure)
    return DerAlgebra(matrices, algebra, flat)


def inner_derivations(g: LieAlgebra, der: DerAlgebra | None = None) -> Subspace:
    """Span of the adjoint maps, in derivation-algebra coordinates."""
    if der is None:
        der = derivation_algebra(g)
    vectors = []
    for e in g.basis():
        coords = der.coords_of(ad(g, e))
        if coords is None:
            raise AssertionError("ad is not a derivation")
        vectors.append(coords)
    return Subspace(g.field, der.dim, vectors)


@dataclass(frozen=True)
class LieHom:
    """Linear map between Lie algebras, matrix is (target dim x source dim)."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.nrows != self.target.dim or self.matrix.ncols != self.source.dim:
            raise ValueError("homomorphism matrix shape mismatch")

    def apply(self, v: Sequence[Scalar]) -> Vector:
        return self.matrix.apply(v)

    def violations(self) -> ValidationReport:
        report = ValidationReport()
        m = self.matrix
        for i in range(self.source.dim):
            for j in range(i + 1, self.source.dim):
                lhs = m.apply(self.source.structure[i][j])
                rhs = bracket(self.target, m.col(i), m.col(j))
                if lhs != rhs:
                    report.add("homomorphism", (i, j),
                               f"f[e_{i}, e_{j}] != [f e_{i}, f e_{j}]")
        return report

    def is_homomorphism(self) -> bool:
        return self.violations().ok

    def is_bijective(self) -> bool:
        return (self.source.dim == self.target.dim
                and self.matrix.rank() == self.source.dim)


def central_quotient_algebra(g: LieAlgebra) -> tuple[LieAlgebra, QuotientCoords]:
    """g / Z(g) on the deterministic section coordinates."""
    qc = quotient_coords(g.dim, center(g))
    reps = qc.section.rows
    q = qc.dim
    structure = [[qc.project_vec(bracket(g, reps[a], reps[b])) for b in range(q)]
                 for a in range(q)]
    return LieAlgebra(g.field, q, structure), qc


def restricted_algebra(g: LieAlgebra, sub: Subspace) -> LieAlgebra:
    """A bracket-closed subspace as an algebra in its RREF basis coordinates."""
    basis = sub.basis.rows
    k = sub.dim
    structure = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            coords = sub.coords_of(bracket(g, basis[a], basis[b]))
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            structure[a][b] = coords
    return LieAlgebra(g.field, k, structure)


def is_ideal(g: LieAlgebra, sub: Subspace) -> bool:
    """Is [g, sub] contained in sub?"""
    return all(sub.contains(bracket(g, e, v))
               for e in g.basis() for v in sub.basis.rows)


def derived_restricted_algebra(g: LieAlgebra) -> tuple[LieAlgebra, Subspace]:
    """[g, g] as an algebra in its RREF basis coordinates."""
    sub = derived_subalgebra(g)
    return restricted_algebra(g, sub), sub


@dataclass(frozen=True)
class LieIsoclinismWitness:
    """Isomorphisms eta: g/Z(g) -> h/Z(h) and xi: [g,g] -> [h,h] making the
    commutator squares commute."""

    eta: LieHom
    xi: LieHom
    verified: bool


def lie_isoclinism_verify(g: LieAlgebra, h: LieAlgebra, eta: Matrix,
                          xi: Matrix) -> tuple[Optional[LieIsoclinismWitness], ValidationReport]:
    """Check (eta, xi) is a Lie-algebra isoclinism from g to h."""
    report = ValidationReport()
    gq_alg, gq = central_quotient_algebra(g)
    hq_alg, hq = central_quotient_algebra(h)
    gd_alg, gd = derived_restricted_algebra(g)
    hd_alg, hd = derived_restricted_algebra(h)
    if eta.nrows != hq_alg.dim or eta.ncols != gq_alg.dim:
        raise ValueError(f"eta must be {hq_alg.dim}x{gq_alg.dim}, got {eta.nrows}x{eta.ncols}")
    if xi.nrows != hd_alg.dim or xi.ncols != gd_alg.dim:
        raise ValueError(f"xi must be {hd_alg.dim}x{gd_alg.dim}, got {xi.nrows}x{xi.ncols}")
    eta_hom = LieHom(gq_alg, hq_alg, eta)
    xi_hom = LieHom(gd_alg, hd_alg, xi)
    if not eta_hom.is_bijective():
        report.add("eta_bijective", (), "eta is not a bijection of central quotients")
    if not xi_hom.is_bijective():
        report.add("xi_bijective", (), "xi is not a bijection of derived subalgebras")
    for v in eta_hom.violations().violations:
        report.add("eta_homomorphism", v.at, v.detail)
    for v in xi_hom.violations().violations:
        report.add("xi_homomorphism", v.at, v.detail)
    # square: xi(c_g(a, b)) = c_h(eta a, eta b) on quotient basis pairs
    for a in range(gq_alg.dim):
        for b in range(a + 1, gq_alg.dim):
            w = bracket(g, gq.section.rows[a], gq.section.rows[b])
            coords = gd.coords_of(w)
            if coords is None:
                raise AssertionError("commutator escaped the derived subalgebra")
            lhs = xi.apply(coords)
            ea = hq.lift_vec(eta.col(a))
            eb = hq.lift_vec(eta.col(b))
            rhs = hd.coords_of(bracket(h, ea, eb))
            if rhs is None:
                raise AssertionError("commutator escaped the derived subalgebra")
            if lhs != rhs:
                report.add("square", (a, b),
                           "xi(c_g) != c_h(eta, eta) at quotient basis pair")
    if not report.ok:
        return None, report
    return LieIsoclinismWitness(eta_hom, xi_hom, True), report
