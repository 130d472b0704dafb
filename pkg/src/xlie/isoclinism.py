"""Isoclinism of crossed modules.

The center and the commutator of a crossed module are tied together by the
pairings c1: L1/fix x L0/(st&z) -> D and c0: L0/(st&z) x L0/(st&z) -> [L0,L0]
induced by the action and the bracket.  Two crossed modules are isoclinic
when their central quotients and commutator subcrossed modules are
isomorphic through maps commuting with these pairings.  This module builds
the pairings, checks candidate witnesses, derives the canonical witnesses
(identity, inverse, composite, center-split), projects witnesses down to
Lie-algebra isoclinisms, and computes the integer fingerprint used to rule
pairs out quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from xlie.fields import FieldSpec, Scalar
from xlie.liealg import (
    LieAlgebra,
    LieIsoclinismWitness,
    bracket,
    center,
    derived_subalgebra,
    lie_isoclinism_verify,
)
from xlie.linalg import (
    Matrix,
    QuotientCoords,
    Subspace,
    Vector,
    basis_vec,
    quotient_coords,
    subspace_intersect,
    subspace_sum,
    vec_add,
    vec_scale,
    zero_vec,
)
from xlie.validation import StructureError, ValidationReport
from xlie.xmod import (
    CrossedModule,
    QuotientXMod,
    SubRestriction,
    SubXMod,
    XModMorphism,
    center_xmod,
    commutator_xmod,
    displacement,
    fixed_points,
    is_nilpotent_xmod,
    is_solvable_xmod,
    predicates,
    quotient_xmod,
    restrict_to_sub,
    stabilizer,
    validate_subxmod,
    xmod_series,
)
from xlie.xmod import DERIVED, LOWER_CENTRAL


@dataclass(frozen=True)
class CommutatorPairing:
    """The pairings c1 and c0 in quotient/commutator coordinates.

    c1[i][j] holds [lift(e_j), lift(f_i)] in displacement coordinates for
    f_i over q1 and e_j over q0; c0[i][j] holds [lift(e_i), lift(e_j)] in
    derived-subalgebra coordinates."""

    parent: CrossedModule
    q1: QuotientCoords
    q0: QuotientCoords
    disp: Subspace
    derived0: Subspace
    c1: tuple
    c0: tuple


def _central_subspaces(x: CrossedModule) -> tuple[Subspace, Subspace]:
    return fixed_points(x), subspace_intersect(stabilizer(x), center(x.l0))


def commutator_pairing(x: CrossedModule, check: bool = True) -> CommutatorPairing:
    """Evaluate the pairings on lifted quotient basis vectors.

    With check=True the lifts are perturbed by central basis vectors and the
    values compared, exercising well-definedness instead of assuming it."""
    field = x.field
    fixed, stz = _central_subspaces(x)
    q1 = quotient_coords(x.n1, fixed)
    q0 = quotient_coords(x.n0, stz)
    disp = displacement(x)
    derived0 = derived_subalgebra(x.l0)
    lifts1 = [q1.lift_vec(basis_vec(field, q1.dim, i)) for i in range(q1.dim)]
    lifts0 = [q0.lift_vec(basis_vec(field, q0.dim, j)) for j in range(q0.dim)]
    c1 = []
    for u in lifts1:
        row = []
        for v in lifts0:
            coords = disp.coords_of(x.act(v, u))
            assert coords is not None, "pairing value escapes the displacement"
            row.append(coords)
        c1.append(tuple(row))
    c0 = []
    for u in lifts0:
        row = []
        for v in lifts0:
            coords = derived0.coords_of(bracket(x.l0, u, v))
            assert coords is not None, "pairing value escapes the derived subalgebra"
            row.append(coords)
        c0.append(tuple(row))
    pairing = CommutatorPairing(x, q1, q0, disp, derived0, tuple(c1), tuple(c0))
    if check:
        report = pairing_well_definedness(x, pairing)
        assert report.ok, f"commutator pairing ill defined: {report.summary()}"
    return pairing


def pairing_well_definedness(x: CrossedModule,
                             pairing: Optional[CommutatorPairing] = None) -> ValidationReport:
    """Shift each lifted representative by every central basis vector and
    compare the pairing values in the parent."""
    if pairing is None:
        pairing = commutator_pairing(x, check=False)
    field = x.field
    q1, q0 = pairing.q1, pairing.q0
    fixed, stz = q1.subspace, q0.subspace
    lifts1 = [q1.lift_vec(basis_vec(field, q1.dim, i)) for i in range(q1.dim)]
    lifts0 = [q0.lift_vec(basis_vec(field, q0.dim, j)) for j in range(q0.dim)]
    report = ValidationReport()
    for i, u in enumerate(lifts1):
        for j, v in enumerate(lifts0):
            base = x.act(v, u)
            for k, z in enumerate(fixed.basis.rows):
                if x.act(v, vec_add(field, u, z)) != base:
                    report.add("c1_shift_l1", (i, j, k), "value moved with the L1 representative")
            for k, z in enumerate(stz.basis.rows):
                if x.act(vec_add(field, v, z), u) != base:
                    report.add("c1_shift_l0", (i, j, k), "value moved with the L0 representative")
    for i, u in enumerate(lifts0):
        for j, v in enumerate(lifts0):
            base = bracket(x.l0, u, v)
            for k, z in enumerate(stz.basis.rows):
                if bracket(x.l0, vec_add(field, u, z), v) != base:
                    report.add("c0_shift_left", (i, j, k), "value moved with the left representative")
                if bracket(x.l0, u, vec_add(field, v, z)) != base:
                    report.add("c0_shift_right", (i, j, k), "value moved with the right representative")
    return report


def central_quotient(x: CrossedModule) -> QuotientXMod:
    """The quotient of x by its center, with projection morphism."""
    return quotient_xmod(x, center_xmod(x))


def commutator_restriction(x: CrossedModule) -> SubRestriction:
    """The commutator subcrossed module of x as a crossed module of its own."""
    return restrict_to_sub(x, commutator_xmod(x))


@dataclass(frozen=True)
class IsoContext:
    """Everything isoclinism checks need about one endpoint, computed once."""

    parent: CrossedModule
    quotient: QuotientXMod
    commutator: SubRestriction
    pairing: CommutatorPairing


def iso_context(x: CrossedModule) -> IsoContext:
    return IsoContext(x, central_quotient(x), commutator_restriction(x),
                      commutator_pairing(x))


@dataclass(frozen=True)
class IsoclinismWitness:
    source: CrossedModule
    target: CrossedModule
    eta: XModMorphism
    xi: XModMorphism
    verified: bool


def _eval_pairing(field: FieldSpec, tensor, u, v, out_dim: int) -> Vector:
    out = zero_vec(field, out_dim)
    for a, ua in enumerate(u):
        if not ua:
            continue
        for b, vb in enumerate(v):
            if not vb:
                continue
            out = vec_add(field, out, vec_scale(field, field.mul(ua, vb), tensor[a][b]))
    return out


def isoclinism_verify(x: CrossedModule, y: CrossedModule,
                      eta1: Matrix, eta0: Matrix, xi1: Matrix, xi0: Matrix,
                      cx: Optional[IsoContext] = None,
                      cy: Optional[IsoContext] = None,
                      ) -> tuple[Optional[IsoclinismWitness], ValidationReport]:
    """Check a candidate witness: eta an isomorphism of central quotients,
    xi an isomorphism of commutator subcrossed modules, and both pairing
    squares commuting on quotient basis pairs."""
    if x.field != y.field:
        raise ValueError("field mismatch")
    cx = cx or iso_context(x)
    cy = cy or iso_context(y)
    eta = XModMorphism(cx.quotient.module, cy.quotient.module, eta1, eta0)
    xi = XModMorphism(cx.commutator.module, cy.commutator.module, xi1, xi0)
    report = ValidationReport()
    for v in eta.violations().violations:
        report.add(f"eta_{v.law}", v.at, v.detail)
    if not eta.is_isomorphism():
        report.add("eta_bijective", None, "eta is not bijective")
    for v in xi.violations().violations:
        report.add(f"xi_{v.law}", v.at, v.detail)
    if not xi.is_isomorphism():
        report.add("xi_bijective", None, "xi is not bijective")
    if not report.ok:
        return None, report
    field = x.field
    px, py = cx.pairing, cy.pairing
    for i in range(px.q1.dim):
        ei = basis_vec(field, px.q1.dim, i)
        for j in range(px.q0.dim):
            ej = basis_vec(field, px.q0.dim, j)
            lhs = xi1.apply(px.c1[i][j])
            rhs = _eval_pairing(field, py.c1, eta1.apply(ei), eta0.apply(ej),
                                py.disp.dim)
            if lhs != rhs:
                report.add("square_c1", (i, j), "xi1.c1 != c1'.(eta1 x eta0)")
    for i in range(px.q0.dim):
        ei = basis_vec(field, px.q0.dim, i)
        for j in range(px.q0.dim):
            ej = basis_vec(field, px.q0.dim, j)
            lhs = xi0.apply(px.c0[i][j])
            rhs = _eval_pairing(field, py.c0, eta0.apply(ei), eta0.apply(ej),
                                py.derived0.dim)
            if lhs != rhs:
                report.add("square_c0", (i, j), "xi0.c0 != c0'.(eta0 x eta0)")
    if not report.ok:
        return None, report
    return IsoclinismWitness(x, y, eta, xi, True), report


def identity_isoclinism(x: CrossedModule) -> IsoclinismWitness:
    ctx = iso_context(x)
    field = x.field
    witness, report = isoclinism_verify(
        x, x,
        Matrix.identity(field, ctx.quotient.q1.dim),
        Matrix.identity(field, ctx.quotient.q0.dim),
        Matrix.identity(field, ctx.commutator.module.n1),
        Matrix.identity(field, ctx.commutator.module.n0),
        cx=ctx, cy=ctx)
    assert witness is not None, f"identity witness rejected: {report.summary()}"
    return witness


def isoclinism_invert(w: IsoclinismWitness) -> IsoclinismWitness:
    """Invert all four maps and re-verify."""
    if not w.verified:
        raise ValueError("can only invert a verified witness")
    eta, xi = w.eta.invert(), w.xi.invert()
    witness, report = isoclinism_verify(w.target, w.source,
                                        eta.alpha, eta.beta, xi.alpha, xi.beta)
    assert witness is not None, f"inverse witness rejected: {report.summary()}"
    return witness


def isoclinism_compose(w1: IsoclinismWitness, w2: IsoclinismWitness) -> IsoclinismWitness:
    """Composite witness along a matching middle crossed module."""
    if not (w1.verified and w2.verified):
        raise ValueError("can only compose verified witnesses")
    if w1.target != w2.source:
        raise ValueError("middle crossed modules do not match")
    eta = w2.eta.compose(w1.eta)
    xi = w2.xi.compose(w1.xi)
    witness, report = isoclinism_verify(w1.source, w2.target,
                                        eta.alpha, eta.beta, xi.alpha, xi.beta)
    assert witness is not None, f"composite witness rejected: {report.summary()}"
    return witness


def split_center_isoclinism(x: CrossedModule, m: SubXMod) -> IsoclinismWitness:
    """Witness from a subcrossed module m to x when x = m + Z(x).

    The sum need not be direct: the overlap is exactly the center of m, so
    the inclusion still induces an isomorphism of central quotients.  The
    commutator maps are the identity on the shared commutator subspaces."""
    if m.parent != x:
        raise ValueError("m is not a subcrossed module of x")
    validate_subxmod(m).raise_if_invalid("subcrossed module")
    field = x.field
    fixed, stz = _central_subspaces(x)
    if subspace_sum(m.s1, fixed).dim != x.n1:
        raise StructureError("M1 and the fixed points do not span L1")
    if subspace_sum(m.s0, stz).dim != x.n0:
        raise StructureError("M0 and the central stabilizer do not span L0")

    restriction = restrict_to_sub(x, m)
    sub = restriction.module
    fixed_m, stz_m = _central_subspaces(sub)
    in_parent1 = Subspace(field, x.n1, [m.s1.linear_combination(r) for r in fixed_m.basis.rows])
    in_parent0 = Subspace(field, x.n0, [m.s0.linear_combination(r) for r in stz_m.basis.rows])
    assert in_parent1 == subspace_intersect(m.s1, fixed), "fixed points of m disagree"
    assert in_parent0 == subspace_intersect(m.s0, stz), "central stabilizer of m disagrees"

    ctx_m = iso_context(sub)
    ctx_x = iso_context(x)
    eta1 = _quotient_map_through(m.s1, ctx_m.quotient.q1, ctx_x.quotient.q1)
    eta0 = _quotient_map_through(m.s0, ctx_m.quotient.q0, ctx_x.quotient.q0)
    xi1 = _subspace_transfer(m.s1, displacement(sub), displacement(x))
    xi0 = _subspace_transfer(m.s0, derived_subalgebra(sub.l0), derived_subalgebra(x.l0))
    witness, report = isoclinism_verify(sub, x, eta1, eta0, xi1, xi0,
                                        cx=ctx_m, cy=ctx_x)
    assert witness is not None, f"split witness rejected: {report.summary()}"
    return witness


def _quotient_map_through(inclusion: Subspace, q_src: QuotientCoords,
                          q_tgt: QuotientCoords) -> Matrix:
    """Quotient coordinates of src basis classes after including into the
    ambient space of tgt."""
    field = inclusion.field
    cols = []
    for i in range(q_src.dim):
        v = q_src.lift_vec(basis_vec(field, q_src.dim, i))
        cols.append(q_tgt.project_vec(inclusion.linear_combination(v)))
    return Matrix.from_cols(field, cols, nrows=q_tgt.dim)


def _subspace_transfer(inclusion: Subspace, src: Subspace, tgt: Subspace) -> Matrix:
    """Coordinates in tgt of the src basis pushed through the inclusion."""
    field = inclusion.field
    cols = []
    for row in src.basis.rows:
        coords = tgt.coords_of(inclusion.linear_combination(row))
        assert coords is not None, "commutator subspace escapes under inclusion"
        cols.append(coords)
    return Matrix.from_cols(field, cols, nrows=tgt.dim)


def lift_lie_isoclinism(g: LieAlgebra, h: LieAlgebra,
                        w: LieIsoclinismWitness) -> IsoclinismWitness:
    """Double a Lie-algebra isoclinism g ~ h into id(g) ~ id(h).

    For an identity crossed module the fixed points and the central
    stabilizer both reduce to the algebra center, and the displacement to
    the derived subalgebra, so (eta, eta) and (xi, xi) reuse the Lie-level
    coordinates verbatim."""
    if not w.verified:
        raise ValueError("witness not verified")
    xg = CrossedModule.build(g, g, Matrix.identity(g.field, g.dim), g.structure)
    xh = CrossedModule.build(h, h, Matrix.identity(h.field, h.dim), h.structure)
    eta, xi = w.eta.matrix, w.xi.matrix
    witness, report = isoclinism_verify(xg, xh, eta, eta, xi, xi)
    assert witness is not None, f"doubled witness rejected: {report.summary()}"
    return witness


ASPHERICAL = "aspherical"
SIMPLY_CONNECTED = "simply_connected"
FINITE_DIMENSIONAL = "finite_dimensional"


def component_isoclinisms(w: IsoclinismWitness, case: str) -> dict[str, LieIsoclinismWitness]:
    """Project a crossed-module isoclinism down to Lie-algebra isoclinisms.

    aspherical: (eta0, xi0) relates the base algebras; simply_connected:
    (eta1, xi1) relates the top algebras; finite_dimensional: induced and
    restricted maps relate both coordinates.  Every returned witness is
    re-verified, not assumed."""
    if not w.verified:
        raise ValueError("witness not verified")
    x, y = w.source, w.target
    eta1, eta0 = w.eta.alpha, w.eta.beta
    xi1, xi0 = w.xi.alpha, w.xi.beta
    if case == ASPHERICAL:
        if not (predicates(x).aspherical and predicates(y).aspherical):
            raise StructureError("both crossed modules must be aspherical")
        for g, side in ((x, "source"), (y, "target")):
            _, stz = _central_subspaces(g)
            assert stz == center(g.l0), f"central stabilizer of the {side} is not the center"
        return {"l0": _verified_lie_witness(x.l0, y.l0, eta0, xi0)}
    if case == SIMPLY_CONNECTED:
        if not (predicates(x).simply_connected and predicates(y).simply_connected):
            raise StructureError("both crossed modules must be simply connected")
        for g, side in ((x, "source"), (y, "target")):
            fixed, _ = _central_subspaces(g)
            assert fixed == center(g.l1), f"fixed points of the {side} are not the center"
            assert displacement(g) == derived_subalgebra(g.l1), \
                f"displacement of the {side} is not the derived subalgebra"
        return {"l1": _verified_lie_witness(x.l1, y.l1, eta1, xi1)}
    if case == FINITE_DIMENSIONAL:
        cx, cy = iso_context(x), iso_context(y)
        eta1_ind = _induce_on_center_quotient(x.l1, y.l1, eta1,
                                              cx.quotient.q1, cy.quotient.q1)
        xi1_res = _restrict_to_derived(x.l1, y.l1, xi1,
                                       cx.pairing.disp, cy.pairing.disp)
        eta0_ind = _induce_on_center_quotient(x.l0, y.l0, eta0,
                                              cx.quotient.q0, cy.quotient.q0)
        return {"l1": _verified_lie_witness(x.l1, y.l1, eta1_ind, xi1_res),
                "l0": _verified_lie_witness(x.l0, y.l0, eta0_ind, xi0)}
    raise ValueError(f"unknown case {case!r}")


def _verified_lie_witness(g: LieAlgebra, h: LieAlgebra,
                          eta: Matrix, xi: Matrix) -> LieIsoclinismWitness:
    witness, report = lie_isoclinism_verify(g, h, eta, xi)
    if witness is None:
        raise StructureError(f"induced Lie witness rejected: {report.summary()}")
    return witness


def _induce_on_center_quotient(g_src: LieAlgebra, g_tgt: LieAlgebra, eta: Matrix,
                               q_src: QuotientCoords, q_tgt: QuotientCoords) -> Matrix:
    """Push a map of crossed-module quotients down to a map of the central
    quotients of the algebras (the crossed-module center sits inside the
    algebra center on both levels)."""
    field = g_src.field
    z_src, z_tgt = center(g_src), center(g_tgt)
    assert z_src.contains_subspace(q_src.subspace), "crossed-module center escapes the algebra center"
    assert z_tgt.contains_subspace(q_tgt.subspace), "crossed-module center escapes the algebra center"
    qz_src = quotient_coords(g_src.dim, z_src)
    qz_tgt = quotient_coords(g_tgt.dim, z_tgt)
    for z in z_src.basis.rows:
        img = q_tgt.lift_vec(eta.apply(q_src.project_vec(z)))
        if any(qz_tgt.project_vec(img)):
            raise StructureError("quotient map does not preserve the centers")
    cols = []
    for i in range(qz_src.dim):
        v = qz_src.lift_vec(basis_vec(field, qz_src.dim, i))
        img = q_tgt.lift_vec(eta.apply(q_src.project_vec(v)))
        cols.append(qz_tgt.project_vec(img))
    return Matrix.from_cols(field, cols, nrows=qz_tgt.dim)


def _restrict_to_derived(g_src: LieAlgebra, g_tgt: LieAlgebra, xi1: Matrix,
                         disp_src: Subspace, disp_tgt: Subspace) -> Matrix:
    """Restrict the displacement map to [L1,L1] on both sides."""
    field = g_src.field
    der_src, der_tgt = derived_subalgebra(g_src), derived_subalgebra(g_tgt)
    cols = []
    for row in der_src.basis.rows:
        u = disp_src.coords_of(row)
        assert u is not None, "derived subalgebra escapes the displacement"
        img = disp_tgt.linear_combination(xi1.apply(u))
        coords = der_tgt.coords_of(img)
        if coords is None:
            raise StructureError("xi1 does not restrict to the derived subalgebras")
        cols.append(coords)
    return Matrix.from_cols(field, cols, nrows=der_tgt.dim)


@dataclass(frozen=True)
class Fingerprint:
    """Integer profile of a crossed module.

    recorded: (n1, n0, dim fixed, dim st&z, dim displacement, dim [L0,L0]),
    then the lower-central and derived series dimension profiles as (d1, d0)
    pairs, then rank d and rank of d restricted to the displacement.
    invariant: the subvector preserved by every isoclinism, used to rule
    pairs out: quotient dims, commutator dims, both boundary ranks, the
    nilpotency/solvability flags, and class/length guarded to non-abelian
    terminating cases (-1 otherwise)."""

    recorded: tuple[int, ...]
    invariant: tuple[int, ...]


def fingerprint(x: CrossedModule) -> Fingerprint:
    fixed, stz = _central_subspaces(x)
    disp = displacement(x)
    derived0 = derived_subalgebra(x.l0)
    lc = xmod_series(x, LOWER_CENTRAL)
    dv = xmod_series(x, DERIVED)
    rank_d = x.boundary.rank()
    image_on_disp = Subspace(x.field, x.n0,
                             [x.boundary.apply(row) for row in disp.basis.rows])
    rank_d_disp = image_on_disp.dim
    recorded = (x.n1, x.n0, fixed.dim, stz.dim, disp.dim, derived0.dim)
    for series in (lc, dv):
        for term in series.terms:
            recorded += term.dims
    recorded += (rank_d, rank_d_disp)

    quotient_boundary = central_quotient(x).module.boundary
    abelian = predicates(x).abelian
    nilpotent, solvable = is_nilpotent_xmod(x), is_solvable_xmod(x)
    cls = lc.class_or_length if (nilpotent and not abelian) else -1
    length = dv.class_or_length if (solvable and not abelian) else -1
    invariant = (x.n1 - fixed.dim, x.n0 - stz.dim, disp.dim, derived0.dim,
                 quotient_boundary.rank(), rank_d_disp,
                 int(nilpotent), int(solvable), cls, length)
    return Fingerprint(recorded, invariant)


def fingerprints_match(x: CrossedModule, y: CrossedModule) -> bool:
    """Necessary condition for isoclinism."""
    return fingerprint(x).invariant == fingerprint(y).invariant


def nilpotency_transport_check(x: CrossedModule, y: CrossedModule,
                               w: IsoclinismWitness) -> ValidationReport:
    """Isoclinic crossed modules share nilpotency and solvability, and the
    class/length when both are nonzero."""
    if not w.verified:
        raise ValueError("witness not verified")
    report = ValidationReport()
    lcx, lcy = xmod_series(x, LOWER_CENTRAL), xmod_series(y, LOWER_CENTRAL)
    dvx, dvy = xmod_series(x, DERIVED), xmod_series(y, DERIVED)
    if lcx.terminates != lcy.terminates:
        report.add("nilpotency", None, "one side is nilpotent and the other is not")
    if dvx.terminates != dvy.terminates:
        report.add("solvability", None, "one side is solvable and the other is not")
    nontrivial = (x.n1 + x.n0) and (y.n1 + y.n0)
    if nontrivial and lcx.terminates and lcy.terminates \
            and lcx.class_or_length != lcy.class_or_length:
        report.add("class", None,
                   f"classes {lcx.class_or_length} and {lcy.class_or_length} differ")
    if nontrivial and dvx.terminates and dvy.terminates \
            and dvx.class_or_length != dvy.class_or_length:
        report.add("length", None,
                   f"lengths {dvx.class_or_length} and {dvy.class_or_length} differ")
    return report
