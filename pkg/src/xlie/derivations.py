"""Derivation spaces and actors of crossed modules.

Two flavours of derivation live here.  A Whitehead derivation is a linear
map p: L0 -> L1 obeying p[x,y] = [x,p(y)] - [y,p(x)], with bracket
[p,q] = p d q - q d p.  A crossed-module derivation is a pair (alpha, beta)
of Lie-algebra derivations tied together by beta d = d alpha and the mixed
Leibniz law.  Both solution spaces carry Lie brackets, and the boundary
p -> (p d, d p) with action [(alpha, beta), p] = alpha p - p beta makes
them into a crossed module again: the actor.

The class-preserving subspaces are spanned by bracketing with a single
element: f in L1 gives the map l0 -> [l0, f], and e in L0 gives the pair
([e, -], ad e).  Restricting the actor to these spans yields the
class-preserving actor, and the spans themselves form the inner actor, an
ideal subcrossed module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from xlie.fields import FieldSpec, Scalar
from xlie.liealg import LieAlgebra, _flatten, _unflatten, ad, validate_lie
from xlie.linalg import Matrix, Subspace, Vector, basis_vec, vec_sub, zero_vec
from xlie.validation import StructureError, ValidationReport
from xlie.xmod import (
    CrossedModule,
    SubXMod,
    action_endomorphism,
    action_into_l1,
)

WHITEHEAD = "whitehead"
XMOD = "xmod"
WHITEHEAD_CLASS = "whitehead_class"
XMOD_CLASS = "xmod_class"

KINDS = (WHITEHEAD, XMOD, WHITEHEAD_CLASS, XMOD_CLASS)


@dataclass(frozen=True)
class WhiteheadDerivation:
    """A linear map L0 -> L1 with p[x,y] = [x,p(y)] - [y,p(x)]."""

    parent: CrossedModule
    matrix: Matrix

    def __post_init__(self):
        shape = (self.matrix.nrows, self.matrix.ncols)
        if shape != (self.parent.n1, self.parent.n0):
            raise ValueError(f"expected a {self.parent.n1} x {self.parent.n0} matrix")

    def apply(self, v: Sequence[Scalar]) -> Vector:
        return self.matrix.apply(v)

    def violations(self) -> ValidationReport:
        x = self.parent
        field = x.field
        report = ValidationReport()
        for i in range(x.n0):
            e_i = basis_vec(field, x.n0, i)
            for j in range(i + 1, x.n0):
                e_j = basis_vec(field, x.n0, j)
                lhs = self.matrix.apply(x.l0.structure[i][j])
                rhs = vec_sub(field, x.act(e_i, self.matrix.col(j)),
                              x.act(e_j, self.matrix.col(i)))
                if lhs != rhs:
                    report.add("derivation", (i, j), f"p[e{i},e{j}] != [e{i},p(e{j})] - [e{j},p(e{i})]")
        return report

    def is_derivation(self) -> bool:
        return self.violations().ok


@dataclass(frozen=True)
class XModDerivation:
    """A pair (alpha, beta) of derivations of L1 and L0 with beta d = d alpha
    and alpha[x,v] = [x,alpha(v)] + [beta(x),v]."""

    parent: CrossedModule
    alpha: Matrix
    beta: Matrix

    def __post_init__(self):
        if (self.alpha.nrows, self.alpha.ncols) != (self.parent.n1, self.parent.n1):
            raise ValueError(f"alpha must be {self.parent.n1} x {self.parent.n1}")
        if (self.beta.nrows, self.beta.ncols) != (self.parent.n0, self.parent.n0):
            raise ValueError(f"beta must be {self.parent.n0} x {self.parent.n0}")

    def violations(self) -> ValidationReport:
        x = self.parent
        field = x.field
        report = ValidationReport()
        report.extend(_derivation_violations(x.l1, self.alpha, "alpha_derivation"))
        report.extend(_derivation_violations(x.l0, self.beta, "beta_derivation"))
        if not (self.beta @ x.boundary - x.boundary @ self.alpha).is_zero():
            report.add("boundary_compat", None, "beta d != d alpha")
        for i in range(x.n0):
            e_i = basis_vec(field, x.n0, i)
            for j in range(x.n1):
                lhs = self.alpha.apply(x.action[i][j])
                moved = x.act(self.beta.col(i), basis_vec(field, x.n1, j))
                residual = vec_sub(field, vec_sub(field, lhs, x.act(e_i, self.alpha.col(j))), moved)
                if any(residual):
                    report.add("mixed_leibniz", (i, j),
                               f"alpha[e{i},f{j}] != [e{i},alpha(f{j})] + [beta(e{i}),f{j}]")
        return report

    def is_derivation(self) -> bool:
        return self.violations().ok


def _derivation_violations(g: LieAlgebra, m: Matrix, law: str) -> ValidationReport:
    report = ValidationReport()
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = m.apply(g.structure[i][j])
            rhs = vec_sub(g.field, g.bracket(basis_vec(g.field, g.dim, i), m.col(j)),
                          g.bracket(basis_vec(g.field, g.dim, j), m.col(i)))
            if lhs != rhs:
                report.add(law, (i, j), "derivation law fails")
    return report


def _flat_of(der) -> Vector:
    if isinstance(der, XModDerivation):
        return _flatten(der.alpha) + _flatten(der.beta)
    return _flatten(der.matrix)


@dataclass(frozen=True)
class DerivationSpace:
    """A bracket-closed space of derivations.

    `flat` is the span of the row-major matrix coordinates (alpha then beta
    concatenated for pair kinds); `abstract` carries the bracket of `basis`
    as structure constants in those coordinates."""

    parent: CrossedModule
    kind: str
    basis: tuple
    abstract: LieAlgebra
    flat: Subspace

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords_of(self, der) -> Optional[Vector]:
        return self.flat.coords_of(_flat_of(der))

    def contains(self, der) -> bool:
        return self.coords_of(der) is not None


def _pair_kind(kind: str) -> bool:
    return kind in (XMOD, XMOD_CLASS)


def _bracket_flat(x: CrossedModule, kind: str, u, v) -> Vector:
    if _pair_kind(kind):
        alpha = u.alpha @ v.alpha - v.alpha @ u.alpha
        beta = u.beta @ v.beta - v.beta @ u.beta
        return _flatten(alpha) + _flatten(beta)
    d = x.boundary
    return _flatten(u.matrix @ (d @ v.matrix) - v.matrix @ (d @ u.matrix))


def _space_from_flat(x: CrossedModule, kind: str, flat: Subspace) -> DerivationSpace:
    field = x.field
    if _pair_kind(kind):
        na = x.n1 * x.n1
        basis = tuple(XModDerivation(x, _unflatten(field, v[:na], x.n1, x.n1),
                                     _unflatten(field, v[na:], x.n0, x.n0))
                      for v in flat.basis.rows)
    else:
        basis = tuple(WhiteheadDerivation(x, _unflatten(field, v, x.n1, x.n0))
                      for v in flat.basis.rows)
    n = len(basis)
    structure = [[zero_vec(field, n) for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            coords = flat.coords_of(_bracket_flat(x, kind, basis[a], basis[b]))
            if coords is None:
                raise AssertionError(f"{kind} derivation space is not bracket-closed")
            structure[a][b] = coords
            structure[b][a] = tuple(field.neg(s) for s in coords)
    abstract = LieAlgebra(field, n, structure)
    validate_lie(abstract).raise_if_invalid(f"{kind} derivation bracket")
    return DerivationSpace(x, kind, basis, abstract, flat)


def whitehead_derivations(x: CrossedModule) -> DerivationSpace:
    """Solve p[e_i,e_j] = [e_i,p(e_j)] - [e_j,p(e_i)] for n1 x n0 matrices p."""
    n1, n0 = x.n1, x.n0
    c = x.l0.structure
    a = x.action
    field = x.field
    zero = field.zero()
    rows = []
    # unknown p is flattened row-major: p[t][k] at index t*n0 + k
    for i in range(n0):
        for j in range(i + 1, n0):
            for t in range(n1):
                row = [zero] * (n1 * n0)
                for k in range(n0):
                    if c[i][j][k]:
                        row[t * n0 + k] = field.add(row[t * n0 + k], c[i][j][k])
                for m in range(n1):
                    if a[i][m][t]:
                        row[m * n0 + j] = field.sub(row[m * n0 + j], a[i][m][t])
                    if a[j][m][t]:
                        row[m * n0 + i] = field.add(row[m * n0 + i], a[j][m][t])
                rows.append(row)
    if rows:
        flat = Matrix(field, rows, ncols=n1 * n0).kernel()
    else:
        flat = Subspace.full(field, n1 * n0)
    return _space_from_flat(x, WHITEHEAD, flat)


def _derivation_rows(rows: list, c, n: int, offset: int, width: int, field: FieldSpec) -> None:
    zero = field.zero()
    for i in range(n):
        for j in range(i + 1, n):
            for m in range(n):
                row = [zero] * width
                for k in range(n):
                    if c[i][j][k]:
                        row[offset + m * n + k] = field.add(row[offset + m * n + k], c[i][j][k])
                for r in range(n):
                    if c[r][j][m]:
                        row[offset + r * n + i] = field.sub(row[offset + r * n + i], c[r][j][m])
                    if c[i][r][m]:
                        row[offset + r * n + j] = field.sub(row[offset + r * n + j], c[i][r][m])
                rows.append(row)


def xmod_derivations(x: CrossedModule) -> DerivationSpace:
    """Joint solve for pairs (alpha, beta): both derivations, beta d = d alpha,
    and the mixed Leibniz law; bracket is the componentwise commutator."""
    n1, n0 = x.n1, x.n0
    a = x.action
    d = x.boundary
    field = x.field
    zero = field.zero()
    na = n1 * n1
    width = na + n0 * n0
    rows: list = []
    # unknowns: alpha[t][k] at t*n1 + k, beta[s][m] at na + s*n0 + m
    _derivation_rows(rows, x.l1.structure, n1, 0, width, field)
    _derivation_rows(rows, x.l0.structure, n0, na, width, field)
    for s in range(n0):
        for j in range(n1):
            row = [zero] * width
            for m in range(n0):
                if d.rows[m][j]:
                    row[na + s * n0 + m] = field.add(row[na + s * n0 + m], d.rows[m][j])
            for m in range(n1):
                if d.rows[s][m]:
                    row[m * n1 + j] = field.sub(row[m * n1 + j], d.rows[s][m])
            rows.append(row)
    for i in range(n0):
        for j in range(n1):
            for t in range(n1):
                row = [zero] * width
                for m in range(n1):
                    if a[i][j][m]:
                        row[t * n1 + m] = field.add(row[t * n1 + m], a[i][j][m])
                    if a[i][m][t]:
                        row[m * n1 + j] = field.sub(row[m * n1 + j], a[i][m][t])
                for s in range(n0):
                    if a[s][j][t]:
                        row[na + s * n0 + i] = field.sub(row[na + s * n0 + i], a[s][j][t])
                rows.append(row)
    if rows:
        flat = Matrix(field, rows, ncols=width).kernel()
    else:
        flat = Subspace.full(field, width)
    return _space_from_flat(x, XMOD, flat)


def _canonical_map(x: CrossedModule, f: Sequence[Scalar]) -> Matrix:
    """The Whitehead derivation l0 -> [l0, f] attached to f in L1."""
    return action_into_l1(x, f)


def _canonical_pair(x: CrossedModule, e: Sequence[Scalar]) -> tuple[Matrix, Matrix]:
    """The crossed-module derivation ([e, -], ad e) attached to e in L0."""
    return action_endomorphism(x, e), ad(x.l0, e)


def _class_whitehead_from(x: CrossedModule, full: DerivationSpace) -> DerivationSpace:
    gens = []
    for f in x.l1.basis():
        vec = _flatten(_canonical_map(x, f))
        if full.flat.coords_of(vec) is None:
            raise AssertionError("bracketing map violates the derivation law")
        gens.append(vec)
    flat = Subspace(x.field, x.n1 * x.n0, gens)
    return _space_from_flat(x, WHITEHEAD_CLASS, flat)


def _class_xmod_from(x: CrossedModule, full: DerivationSpace) -> DerivationSpace:
    gens = []
    for e in x.l0.basis():
        alpha, beta = _canonical_pair(x, e)
        vec = _flatten(alpha) + _flatten(beta)
        if full.flat.coords_of(vec) is None:
            raise AssertionError("bracketing pair is not a crossed-module derivation")
        gens.append(vec)
    flat = Subspace(x.field, x.n1 * x.n1 + x.n0 * x.n0, gens)
    return _space_from_flat(x, XMOD_CLASS, flat)


def class_preserving_whitehead(x: CrossedModule) -> DerivationSpace:
    """Span of the maps l0 -> [l0, f] for f running over L1."""
    return _class_whitehead_from(x, whitehead_derivations(x))


def class_preserving_xmod(x: CrossedModule) -> DerivationSpace:
    """Span of the pairs ([e, -], ad e) for e running over L0."""
    return _class_xmod_from(x, xmod_derivations(x))


def _actor_between(x: CrossedModule, src: DerivationSpace, tgt: DerivationSpace,
                   on_escape) -> CrossedModule:
    field = x.field
    d = x.boundary
    cols = []
    for j, der in enumerate(src.basis):
        coords = tgt.coords_of(XModDerivation(x, der.matrix @ d, d @ der.matrix))
        if coords is None:
            raise on_escape(f"boundary image of derivation {j} leaves the target space")
        cols.append(coords)
    boundary = Matrix.from_cols(field, cols, nrows=tgt.dim)
    action = []
    for i, pair in enumerate(tgt.basis):
        row = []
        for j, der in enumerate(src.basis):
            moved = pair.alpha @ der.matrix - der.matrix @ pair.beta
            coords = src.flat.coords_of(_flatten(moved))
            if coords is None:
                raise on_escape(f"pair {i} moves derivation {j} out of the source space")
            row.append(coords)
        action.append(row)
    return CrossedModule.build(src.abstract, tgt.abstract, boundary, action)


def actor(x: CrossedModule) -> CrossedModule:
    """The crossed module Der(L0,L1) -> Der(L), p -> (p d, d p), with
    action [(alpha, beta), p] = alpha p - p beta."""
    return _actor_between(x, whitehead_derivations(x), xmod_derivations(x), AssertionError)


def class_actor(x: CrossedModule) -> CrossedModule:
    """The actor restricted to the class-preserving spans on both levels."""
    full1 = whitehead_derivations(x)
    full0 = xmod_derivations(x)
    src = _class_whitehead_from(x, full1)
    tgt = _class_xmod_from(x, full0)
    return _actor_between(x, src, tgt, StructureError)


def inner_actor(x: CrossedModule) -> SubXMod:
    """The image of f -> [., f] and e -> ([e, -], ad e) inside actor(x),
    checked to sit as an ideal inside the class-preserving actor."""
    full1 = whitehead_derivations(x)
    full0 = xmod_derivations(x)
    field = x.field

    rows1 = []
    for f in x.l1.basis():
        coords = full1.flat.coords_of(_flatten(_canonical_map(x, f)))
        assert coords is not None, "bracketing map violates the derivation law"
        rows1.append(coords)
    rows0 = []
    for e in x.l0.basis():
        alpha, beta = _canonical_pair(x, e)
        coords = full0.coords_of(XModDerivation(x, alpha, beta))
        assert coords is not None, "bracketing pair is not a crossed-module derivation"
        rows0.append(coords)
    s1 = Subspace(field, full1.dim, rows1)
    s0 = Subspace(field, full0.dim, rows0)

    cls1 = _class_whitehead_from(x, full1)
    cls0 = _class_xmod_from(x, full0)
    span1 = Subspace(field, full1.dim, [full1.flat.coords_of(_flat_of(b)) for b in cls1.basis])
    span0 = Subspace(field, full0.dim, [full0.coords_of(b) for b in cls0.basis])
    if not (span1.contains_subspace(s1) and span0.contains_subspace(s0)):
        raise AssertionError("inner span escapes the class-preserving span")

    # ideal containment in the class-preserving actor
    cact = _actor_between(x, cls1, cls0, StructureError)
    i1 = Subspace(field, cls1.dim, [cls1.flat.coords_of(_flatten(_canonical_map(x, f)))
                                    for f in x.l1.basis()])
    i0 = Subspace(field, cls0.dim, [cls0.coords_of(XModDerivation(x, *_canonical_pair(x, e)))
                                    for e in x.l0.basis()])
    SubXMod.build(cact, i1, i0, ideal=True)

    act = _actor_between(x, full1, full0, AssertionError)
    return SubXMod.build(act, s1, s0, ideal=True)
