"""Crossed modules of Lie algebras: d: L1 -> L0 with an action of L0 on L1.

The action tensor a[i][j] holds the coordinates of [e_i, f_j] for e_i in
basis(L0), f_j in basis(L1).  Validation checks the boundary is a
homomorphism, the action is a genuine Lie action, and the two crossed
module axioms: equivariance d([l0,l1]) = [l0, d(l1)] and the Peiffer
identity [d(l1), l1'] = [l1, l1'].

Centers, displacements, commutators, quotients, restrictions, series, and
direct sums all recompute structure constants in the new coordinates and
re-validate, so every object this module hands back is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from xlie.fields import FieldSpec, Scalar
from xlie.liealg import (
    LieAlgebra,
    LieHom,
    bracket,
    bracket_subspaces,
    center,
    derived_subalgebra,
    direct_sum_lie,
    validate_lie,
)
from xlie.linalg import (
    Matrix,
    QuotientCoords,
    Subspace,
    Vector,
    quotient_coords,
    subspace_intersect,
    subspace_sum,
    zero_vec,
)
from xlie.validation import ValidationReport


def _coerce_action(field: FieldSpec, n0: int, n1: int, action) -> tuple:
    tensor = tuple(tuple(tuple(field.coerce(x) for x in vec) for vec in row)
                   for row in action)
    if len(tensor) != n0 or any(len(row) != n1 for row in tensor) \
            or any(len(vec) != n1 for row in tensor for vec in row):
        raise ValueError(f"action tensor is not {n0}x{n1}x{n1}")
    return tensor


class CrossedModule:
    """d: L1 -> L0 with L0 acting on L1."""

    __slots__ = ("l1", "l0", "boundary", "action")

    def __init__(self, l1: LieAlgebra, l0: LieAlgebra, boundary: Matrix, action):
        if l1.field != l0.field:
            raise ValueError("field mismatch between degrees")
        if boundary.field != l1.field:
            raise ValueError("boundary field mismatch")
        if boundary.nrows != l0.dim or boundary.ncols != l1.dim:
            raise ValueError(f"boundary must be {l0.dim}x{l1.dim}, "
                             f"got {boundary.nrows}x{boundary.ncols}")
        self.l1 = l1
        self.l0 = l0
        self.boundary = boundary
        self.action = _coerce_action(l1.field, l0.dim, l1.dim, action)

    @classmethod
    def build(cls, l1: LieAlgebra, l0: LieAlgebra, boundary: Matrix, action,
              check: bool = True) -> "CrossedModule":
        x = cls(l1, l0, boundary, action)
        if check:
            validate_xmod(x).raise_if_invalid("not a crossed module")
        return x

    @property
    def field(self) -> FieldSpec:
        return self.l1.field

    @property
    def n1(self) -> int:
        return self.l1.dim

    @property
    def n0(self) -> int:
        return self.l0.dim

    def act(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        return act(self, u, v)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CrossedModule) and self.l1 == other.l1
                and self.l0 == other.l0 and self.boundary == other.boundary
                and self.action == other.action)

    def __hash__(self) -> int:
        return hash((self.l1, self.l0, self.boundary, self.action))

    def __repr__(self) -> str:
        return f"CrossedModule({self.n1} -> {self.n0} over {self.field})"


def act(x: CrossedModule, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Bilinear extension of the action tensor: [u, v] for u in L0, v in L1."""
    if len(u) != x.n0 or len(v) != x.n1:
        raise ValueError("action operand length mismatch")
    field = x.field
    n1 = x.n1
    a = x.action
    out = [field.zero()] * n1
    p = field.p
    for i, ui in enumerate(u):
        if not ui:
            continue
        ai = a[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            f = ui * vj
            vec = ai[j]
            if p:
                for k in range(n1):
                    if vec[k]:
                        out[k] = (out[k] + f * vec[k]) % p
            else:
                for k in range(n1):
                    if vec[k]:
                        out[k] = out[k] + f * vec[k]
    return tuple(out)


def action_endomorphism(x: CrossedModule, u: Sequence[Scalar]) -> Matrix:
    """[u, -]: L1 -> L1 as an n1 x n1 matrix."""
    cols = [act(x, u, f) for f in x.l1.basis()]
    return Matrix.from_cols(x.field, cols, nrows=x.n1)


def action_into_l1(x: CrossedModule, v: Sequence[Scalar]) -> Matrix:
    """[-, v]: L0 -> L1 as an n1 x n0 matrix."""
    cols = [act(x, e, v) for e in x.l0.basis()]
    return Matrix.from_cols(x.field, cols, nrows=x.n1)


def validate_xmod(x: CrossedModule) -> ValidationReport:
    """Exhaustive basis-level check of all crossed module axioms."""
    report = ValidationReport()
    field = x.field
    n0, n1 = x.n0, x.n1
    for v in validate_lie(x.l1).violations:
        report.add(f"l1_{v.law}", v.at, v.detail)
    for v in validate_lie(x.l0).violations:
        report.add(f"l0_{v.law}", v.at, v.detail)
    d = x.boundary
    e0 = x.l0.basis()
    f1 = x.l1.basis()
    # boundary is a homomorphism
    for i in range(n1):
        for j in range(i + 1, n1):
            lhs = d.apply(x.l1.structure[i][j])
            rhs = bracket(x.l0, d.col(i), d.col(j))
            if lhs != rhs:
                report.add("boundary_homomorphism", (i, j),
                           "d[f_i, f_j] != [d f_i, d f_j]")
    # the action map L0 -> End(L1) is a Lie homomorphism
    for i in range(n0):
        for j in range(i + 1, n0):
            for k in range(n1):
                lhs = act(x, x.l0.structure[i][j], f1[k])
                rhs = tuple(field.sub(a, b) for a, b in zip(
                    act(x, e0[i], act(x, e0[j], f1[k])),
                    act(x, e0[j], act(x, e0[i], f1[k]))))
                if lhs != rhs:
                    report.add("action_algebra", (i, j, k),
                               "[[e_i,e_j], f_k] != [e_i,[e_j,f_k]] - [e_j,[e_i,f_k]]")
    # L0 acts by derivations of L1
    for i in range(n0):
        for j in range(n1):
            for k in range(j + 1, n1):
                lhs = act(x, e0[i], x.l1.structure[j][k])
                rhs = tuple(field.add(a, b) for a, b in zip(
                    bracket(x.l1, act(x, e0[i], f1[j]), f1[k]),
                    bracket(x.l1, f1[j], act(x, e0[i], f1[k]))))
                if lhs != rhs:
                    report.add("action_leibniz", (i, j, k),
                               "[e_i, [f_j,f_k]] != [[e_i,f_j], f_k] + [f_j, [e_i,f_k]]")
    # equivariance: d([e_i, f_j]) = [e_i, d f_j]
    for i in range(n0):
        for j in range(n1):
            lhs = d.apply(x.action[i][j])
            rhs = bracket(x.l0, e0[i], d.col(j))
            if lhs != rhs:
                report.add("cm1", (i, j), "d[e_i, f_j] != [e_i, d f_j]")
    # Peiffer identity: [d f_i, f_j] = [f_i, f_j]
    for i in range(n1):
        for j in range(n1):
            lhs = act(x, d.col(i), f1[j])
            rhs = x.l1.structure[i][j]
            if lhs != rhs:
                report.add("cm2", (i, j), "[d f_i, f_j] != [f_i, f_j]")
    return report


def fixed_points(x: CrossedModule) -> Subspace:
    """L1^{L0} = {v : [e_i, v] = 0 for all i}, the kernel of the stacked action."""
    rows = []
    for i in range(x.n0):
        for k in range(x.n1):
            rows.append([x.action[i][j][k] for j in range(x.n1)])
    return Matrix(x.field, rows, ncols=x.n1).kernel()


def stabilizer(x: CrossedModule) -> Subspace:
    """St_{L0}(L1) = {u : [u, f_j] = 0 for all j}."""
    rows = []
    for j in range(x.n1):
        for k in range(x.n1):
            rows.append([x.action[i][j][k] for i in range(x.n0)])
    return Matrix(x.field, rows, ncols=x.n0).kernel()


def displacement(x: CrossedModule) -> Subspace:
    """D_{L0}(L1): the span of all action values [e_i, f_j]."""
    vectors = [x.action[i][j] for i in range(x.n0) for j in range(x.n1)]
    return Subspace(x.field, x.n1, vectors)


@dataclass(frozen=True)
class SubXMod:
    """A pair of subspaces closed under the crossed module structure."""

    parent: CrossedModule
    s1: Subspace
    s0: Subspace
    ideal: bool = False

    @classmethod
    def build(cls, parent: CrossedModule, s1: Subspace, s0: Subspace,
              ideal: bool = False, check: bool = True) -> "SubXMod":
        sub = cls(parent, s1, s0, ideal)
        if check:
            validate_subxmod(sub).raise_if_invalid("not a subcrossed module")
        return sub

    @property
    def dims(self) -> tuple[int, int]:
        return self.s1.dim, self.s0.dim

    def is_zero(self) -> bool:
        return self.s1.dim == 0 and self.s0.dim == 0

    def same_subspaces(self, other: "SubXMod") -> bool:
        return self.s1 == other.s1 and self.s0 == other.s0


def full_subxmod(x: CrossedModule, ideal: bool = True) -> SubXMod:
    return SubXMod(x, Subspace.full(x.field, x.n1), Subspace.full(x.field, x.n0), ideal)


def zero_subxmod(x: CrossedModule, ideal: bool = True) -> SubXMod:
    return SubXMod(x, Subspace.zero(x.field, x.n1), Subspace.zero(x.field, x.n0), ideal)


def validate_subxmod(sub: SubXMod) -> ValidationReport:
    report = ValidationReport()
    x = sub.parent
    s1, s0 = sub.s1, sub.s0
    if s1.ambient_dim != x.n1 or s0.ambient_dim != x.n0:
        report.add("ambient", (), "subspace ambient dims do not match the module")
        return report
    for a, u in enumerate(s1.basis.rows):
        for b, v in enumerate(s1.basis.rows):
            if not s1.contains(bracket(x.l1, u, v)):
                report.add("s1_subalgebra", (a, b), "[s1, s1] escapes s1")
    for a, u in enumerate(s0.basis.rows):
        for b, v in enumerate(s0.basis.rows):
            if not s0.contains(bracket(x.l0, u, v)):
                report.add("s0_subalgebra", (a, b), "[s0, s0] escapes s0")
    for a, v in enumerate(s1.basis.rows):
        if not s0.contains(x.boundary.apply(v)):
            report.add("boundary_image", (a,), "d(s1) escapes s0")
    for a, u in enumerate(s0.basis.rows):
        for b, v in enumerate(s1.basis.rows):
            if not s1.contains(act(x, u, v)):
                report.add("action_closure", (a, b), "[s0, s1] escapes s1")
    if sub.ideal:
        for a, u in enumerate(x.l1.basis()):
            for b, v in enumerate(s1.basis.rows):
                if not s1.contains(bracket(x.l1, u, v)):
                    report.add("s1_ideal", (a, b), "[L1, s1] escapes s1")
        for a, u in enumerate(x.l0.basis()):
            for b, v in enumerate(s0.basis.rows):
                if not s0.contains(bracket(x.l0, u, v)):
                    report.add("s0_ideal", (a, b), "[L0, s0] escapes s0")
        for a, u in enumerate(x.l0.basis()):
            for b, v in enumerate(s1.basis.rows):
                if not s1.contains(act(x, u, v)):
                    report.add("ideal_action_left", (a, b), "[L0, s1] escapes s1")
        for a, u in enumerate(s0.basis.rows):
            for b, v in enumerate(x.l1.basis()):
                if not s1.contains(act(x, u, v)):
                    report.add("ideal_action_right", (a, b), "[s0, L1] escapes s1")
    return report


def center_xmod(x: CrossedModule) -> SubXMod:
    """Z(L) = (L1^{L0} -> St_{L0}(L1) ∩ Z(L0)), an ideal."""
    s1 = fixed_points(x)
    s0 = subspace_intersect(stabilizer(x), center(x.l0))
    sub = SubXMod(x, s1, s0, ideal=True)
    report = validate_subxmod(sub)
    if not report.ok:
        raise AssertionError(f"center is not an ideal: {report.summary()}")
    return sub


def commutator_xmod(x: CrossedModule) -> SubXMod:
    """[L, L] = (D_{L0}(L1) -> [L0, L0]), an ideal."""
    sub = SubXMod(x, displacement(x), derived_subalgebra(x.l0), ideal=True)
    report = validate_subxmod(sub)
    if not report.ok:
        raise AssertionError(f"commutator is not an ideal: {report.summary()}")
    return sub


def commutator_ideals(x: CrossedModule, m: SubXMod, n: SubXMod) -> SubXMod:
    """[M, N] = (span([m0, n1] and [n0, m1]) -> [M0, N0]) for ideals M, N."""
    for sub, name in ((m, "m"), (n, "n")):
        if sub.parent is not x and sub.parent != x:
            raise ValueError(f"{name} belongs to a different module")
        if not sub.ideal:
            raise ValueError(f"{name} is not an ideal")
    vectors = [act(x, u, v) for u in m.s0.basis.rows for v in n.s1.basis.rows]
    vectors += [act(x, u, v) for u in n.s0.basis.rows for v in m.s1.basis.rows]
    s1 = Subspace(x.field, x.n1, vectors)
    s0 = bracket_subspaces(x.l0, m.s0, n.s0)
    return SubXMod.build(x, s1, s0, ideal=True)


@dataclass(frozen=True)
class XModMorphism:
    """A pair (alpha, beta) of Lie homomorphisms compatible with boundaries
    and actions."""

    source: CrossedModule
    target: CrossedModule
    alpha: Matrix
    beta: Matrix

    def __post_init__(self):
        if self.alpha.nrows != self.target.n1 or self.alpha.ncols != self.source.n1:
            raise ValueError("alpha shape mismatch")
        if self.beta.nrows != self.target.n0 or self.beta.ncols != self.source.n0:
            raise ValueError("beta shape mismatch")

    def violations(self) -> ValidationReport:
        report = ValidationReport()
        for v in LieHom(self.source.l1, self.target.l1, self.alpha).violations().violations:
            report.add("alpha_homomorphism", v.at, v.detail)
        for v in LieHom(self.source.l0, self.target.l0, self.beta).violations().violations:
            report.add("beta_homomorphism", v.at, v.detail)
        if self.beta @ self.source.boundary != self.target.boundary @ self.alpha:
            report.add("boundary_square", (), "beta d != d' alpha")
        for i in range(self.source.n0):
            for j in range(self.source.n1):
                lhs = self.alpha.apply(self.source.action[i][j])
                rhs = act(self.target, self.beta.col(i), self.alpha.col(j))
                if lhs != rhs:
                    report.add("action_compat", (i, j),
                               "alpha[e_i, f_j] != [beta e_i, alpha f_j]")
        return report

    def is_morphism(self) -> bool:
        return self.violations().ok

    def is_isomorphism(self) -> bool:
        return (self.source.n1 == self.target.n1 and self.source.n0 == self.target.n0
                and self.alpha.rank() == self.source.n1
                and self.beta.rank() == self.source.n0
                and self.is_morphism())

    def compose(self, other: "XModMorphism") -> "XModMorphism":
        """self after other."""
        if other.target != self.source:
            raise ValueError("composition mismatch")
        return XModMorphism(other.source, self.target,
                            self.alpha @ other.alpha, self.beta @ other.beta)

    def invert(self) -> "XModMorphism":
        ai = self.alpha.inverse()
        bi = self.beta.inverse()
        if ai is None or bi is None:
            raise ValueError("morphism is not invertible")
        return XModMorphism(self.target, self.source, ai, bi)


@dataclass(frozen=True)
class QuotientXMod:
    module: CrossedModule
    projection: XModMorphism
    q1: QuotientCoords
    q0: QuotientCoords


def quotient_xmod(x: CrossedModule, n: SubXMod) -> QuotientXMod:
    """L/N for an ideal N, on the deterministic section coordinates."""
    if not n.ideal:
        raise ValueError("quotient requires an ideal")
    validate_subxmod(n).raise_if_invalid("not an ideal subcrossed module")
    q1 = quotient_coords(x.n1, n.s1)
    q0 = quotient_coords(x.n0, n.s0)
    reps1 = q1.section.rows
    reps0 = q0.section.rows
    k1, k0 = q1.dim, q0.dim
    l1_structure = [[q1.project_vec(bracket(x.l1, reps1[a], reps1[b]))
                     for b in range(k1)] for a in range(k1)]
    l0_structure = [[q0.project_vec(bracket(x.l0, reps0[a], reps0[b]))
                     for b in range(k0)] for a in range(k0)]
    l1q = LieAlgebra(x.field, k1, l1_structure)
    l0q = LieAlgebra(x.field, k0, l0_structure)
    boundary = q0.project @ x.boundary @ q1.lift
    action = [[q1.project_vec(act(x, reps0[i], reps1[j])) for j in range(k1)]
              for i in range(k0)]
    module = CrossedModule.build(l1q, l0q, boundary, action)
    projection = XModMorphism(x, module, q1.project, q0.project)
    report = projection.violations()
    if not report.ok:
        raise AssertionError(f"projection is not a morphism: {report.summary()}")
    return QuotientXMod(module, projection, q1, q0)


@dataclass(frozen=True)
class SubRestriction:
    module: CrossedModule
    inclusion: XModMorphism


def restrict_to_sub(x: CrossedModule, m: SubXMod) -> SubRestriction:
    """The subcrossed module M as a standalone module in basis coordinates."""
    validate_subxmod(m).raise_if_invalid("not a subcrossed module")
    b1 = m.s1.basis.rows
    b0 = m.s0.basis.rows
    k1, k0 = m.s1.dim, m.s0.dim
    l1_structure = [[m.s1.coords_of(bracket(x.l1, b1[a], b1[b])) for b in range(k1)]
                    for a in range(k1)]
    l0_structure = [[m.s0.coords_of(bracket(x.l0, b0[a], b0[b])) for b in range(k0)]
                    for a in range(k0)]
    l1r = LieAlgebra(x.field, k1, l1_structure)
    l0r = LieAlgebra(x.field, k0, l0_structure)
    boundary_cols = [m.s0.coords_of(x.boundary.apply(v)) for v in b1]
    boundary = Matrix.from_cols(x.field, boundary_cols, nrows=k0)
    action = [[m.s1.coords_of(act(x, b0[i], b1[j])) for j in range(k1)]
              for i in range(k0)]
    module = CrossedModule.build(l1r, l0r, boundary, action)
    alpha = Matrix.from_cols(x.field, list(b1), nrows=x.n1)
    beta = Matrix.from_cols(x.field, list(b0), nrows=x.n0)
    inclusion = XModMorphism(module, x, alpha, beta)
    report = inclusion.violations()
    if not report.ok:
        raise AssertionError(f"inclusion is not a morphism: {report.summary()}")
    return SubRestriction(module, inclusion)


def _coords_subspace(container: Subspace, inner: Subspace) -> Subspace:
    """Express inner (contained in container) in container's basis coordinates."""
    vecs = []
    for row in inner.basis.rows:
        coords = container.coords_of(row)
        if coords is None:
            raise ValueError("subspace is not contained in the container")
        vecs.append(coords)
    return Subspace(container.field, container.dim, vecs)


def second_isomorphism(x: CrossedModule, m: SubXMod, n: SubXMod) -> XModMorphism:
    """The canonical isomorphism M/(M ∩ N) -> (M + N)/N for N an ideal."""
    validate_subxmod(m).raise_if_invalid("m is not a subcrossed module")
    if not n.ideal:
        raise ValueError("n must be an ideal")
    validate_subxmod(n).raise_if_invalid("n is not an ideal subcrossed module")
    # left side: M restricted, then quotient by M ∩ N
    rm = restrict_to_sub(x, m)
    i1 = subspace_intersect(m.s1, n.s1)
    i0 = subspace_intersect(m.s0, n.s0)
    ideal_in_m = SubXMod.build(rm.module, _coords_subspace(m.s1, i1),
                               _coords_subspace(m.s0, i0), ideal=True)
    qa = quotient_xmod(rm.module, ideal_in_m)
    # right side: M + N restricted, then quotient by N
    sum1 = subspace_sum(m.s1, n.s1)
    sum0 = subspace_sum(m.s0, n.s0)
    msum = SubXMod.build(x, sum1, sum0)
    rs = restrict_to_sub(x, msum)
    n_in_sum = SubXMod.build(rs.module, _coords_subspace(sum1, n.s1),
                             _coords_subspace(sum0, n.s0), ideal=True)
    qb = quotient_xmod(rs.module, n_in_sum)
    # canonical map: lift a coset rep of M/(M∩N) into ambient, read it in M+N
    alpha_cols = []
    for rep in qa.q1.section.rows:
        ambient = m.s1.linear_combination(rep)
        alpha_cols.append(qb.q1.project_vec(sum1.coords_of(ambient)))
    beta_cols = []
    for rep in qa.q0.section.rows:
        ambient = m.s0.linear_combination(rep)
        beta_cols.append(qb.q0.project_vec(sum0.coords_of(ambient)))
    iso = XModMorphism(qa.module, qb.module,
                       Matrix.from_cols(x.field, alpha_cols, nrows=qb.module.n1),
                       Matrix.from_cols(x.field, beta_cols, nrows=qb.module.n0))
    if not iso.is_isomorphism():
        raise AssertionError("canonical map failed to verify as an isomorphism")
    return iso


@dataclass(frozen=True)
class XModPredicates:
    aspherical: bool
    simply_connected: bool
    abelian: bool
    finite_dimensional: bool = True


def predicates(x: CrossedModule) -> XModPredicates:
    aspherical = x.boundary.kernel().dim == 0
    simply_connected = x.boundary.rank() == x.n0
    z = center_xmod(x)
    abelian = z.s1.dim == x.n1 and z.s0.dim == x.n0
    return XModPredicates(aspherical, simply_connected, abelian)


LOWER_CENTRAL = "lower_central"
DERIVED = "derived"


@dataclass(frozen=True)
class XModSeriesResult:
    kind: str
    terms: tuple[SubXMod, ...]
    terminates: bool
    class_or_length: Optional[int]


def xmod_series(x: CrossedModule, kind: str) -> XModSeriesResult:
    if kind not in (LOWER_CENTRAL, DERIVED):
        raise ValueError(f"unknown series kind: {kind!r}")
    full = full_subxmod(x)
    terms = [full]
    for _ in range(x.n1 + x.n0 + 1):
        prev = terms[-1]
        if prev.is_zero():
            break
        nxt = commutator_ideals(x, full if kind == LOWER_CENTRAL else prev, prev)
        if nxt.same_subspaces(prev):
            break
        terms.append(nxt)
    terminates = terms[-1].is_zero()
    return XModSeriesResult(kind, tuple(terms), terminates,
                            len(terms) - 1 if terminates else None)


def is_nilpotent_xmod(x: CrossedModule) -> bool:
    return xmod_series(x, LOWER_CENTRAL).terminates


def is_solvable_xmod(x: CrossedModule) -> bool:
    return xmod_series(x, DERIVED).terminates


def direct_sum_xmod(x: CrossedModule, y: CrossedModule) -> CrossedModule:
    """Componentwise direct sum; the cross action is zero."""
    if x.field != y.field:
        raise ValueError("field mismatch")
    field = x.field
    l1 = direct_sum_lie(x.l1, y.l1)
    l0 = direct_sum_lie(x.l0, y.l0)
    n1, n0 = x.n1 + y.n1, x.n0 + y.n0
    boundary_rows = []
    for i in range(x.n0):
        boundary_rows.append(tuple(x.boundary.rows[i]) + zero_vec(field, y.n1))
    for i in range(y.n0):
        boundary_rows.append(zero_vec(field, x.n1) + tuple(y.boundary.rows[i]))
    boundary = Matrix(field, boundary_rows, ncols=n1)
    zero1 = zero_vec(field, n1)
    action = [[zero1 for _ in range(n1)] for _ in range(n0)]
    for i in range(x.n0):
        for j in range(x.n1):
            action[i][j] = tuple(x.action[i][j]) + zero_vec(field, y.n1)
    for i in range(y.n0):
        for j in range(y.n1):
            action[x.n0 + i][x.n1 + j] = zero_vec(field, x.n1) + tuple(y.action[i][j])
    return CrossedModule.build(l1, l0, boundary, action)


def check_connectivity_identities(x: CrossedModule) -> ValidationReport:
    """Degenerations of the center and commutator under connectivity.

    Simply connected: the fixed points are exactly Z(L1) and the
    displacement is exactly [L1, L1].  Aspherical: Z(L0) lies inside the
    stabilizer, so St ∩ Z(L0) = Z(L0).
    """
    report = ValidationReport()
    preds = predicates(x)
    if preds.simply_connected:
        if fixed_points(x) != center(x.l1):
            report.add("fixed_points_vs_center", (),
                       "simply connected but L1^{L0} != Z(L1)")
        if displacement(x) != derived_subalgebra(x.l1):
            report.add("displacement_vs_derived", (),
                       "simply connected but D_{L0}(L1) != [L1, L1]")
    if preds.aspherical:
        st = stabilizer(x)
        z0 = center(x.l0)
        if subspace_intersect(st, z0) != z0:
            report.add("center_vs_stabilizer", (),
                       "aspherical but Z(L0) escapes the stabilizer")
    return report
