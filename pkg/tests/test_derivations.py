import pytest
from hypothesis import given, settings

from tests.strategies import xmods
from xlie.catalog import abelian_lie, build_entry, module_xmod
from xlie.derivations import (
    WHITEHEAD,
    WHITEHEAD_CLASS,
    XMOD,
    XMOD_CLASS,
    WhiteheadDerivation,
    XModDerivation,
    actor,
    class_actor,
    class_preserving_whitehead,
    class_preserving_xmod,
    inner_actor,
    whitehead_derivations,
    xmod_derivations,
)
from xlie.fields import GF, QQ
from xlie.liealg import ad, derivation_algebra, validate_lie
from xlie.linalg import Matrix, vec_scale
from xlie.validation import StructureError
from xlie.xmod import (
    action_endomorphism,
    action_into_l1,
    validate_subxmod,
    validate_xmod,
)


class TestWhiteheadDerivation:
    def test_shape_enforced(self):
        x = build_entry("id_h3")
        with pytest.raises(ValueError):
            WhiteheadDerivation(x, Matrix.identity(QQ, 2))

    def test_adjoint_is_a_derivation(self):
        x = build_entry("id_h3")
        der = WhiteheadDerivation(x, ad(x.l0, (1, 0, 0)))
        assert der.is_derivation()
        assert der.apply((0, 1, 0)) == (0, 0, 1)

    def test_violation_located(self):
        x = build_entry("id_h3")
        bad = WhiteheadDerivation(x, Matrix(QQ, [[0, 0, 0], [0, 0, 0], [0, 0, 1]]))
        report = bad.violations()
        # p(z) = z fails p[x,y] = [x,p(y)] - [y,p(x)] at the (x, y) pair only
        assert [v.at for v in report.violations] == [(0, 1)]
        assert report.violations[0].law == "derivation"


class TestXModDerivation:
    def test_shapes_enforced(self):
        x = build_entry("id_h3")
        with pytest.raises(ValueError):
            XModDerivation(x, Matrix.identity(QQ, 2), Matrix.identity(QQ, 3))
        with pytest.raises(ValueError):
            XModDerivation(x, Matrix.identity(QQ, 3), Matrix.identity(QQ, 2))

    def test_adjoint_pair_is_a_derivation(self):
        x = build_entry("id_h3")
        e = (1, 0, 0)
        pair = XModDerivation(x, action_endomorphism(x, e), ad(x.l0, e))
        assert pair.is_derivation()

    def test_boundary_compat_violation(self):
        x = build_entry("id_h3")
        # alpha = 2 id is not even a derivation of h3; beta = id breaks beta d = d alpha
        pair = XModDerivation(x, Matrix.identity(QQ, 3).scale(2), Matrix.identity(QQ, 3))
        laws = {v.law for v in pair.violations().violations}
        assert "boundary_compat" in laws
        assert "alpha_derivation" in laws

    def test_mixed_leibniz_violation(self):
        x = build_entry("mod_scaling_a1")
        # alpha[e,f] = 0 but [e, alpha f] + [beta e, f] = f
        pair = XModDerivation(x, Matrix.zeros(QQ, 1, 1), Matrix.identity(QQ, 1))
        laws = {v.law for v in pair.violations().violations}
        assert laws == {"mixed_leibniz"}


class TestWhiteheadSpace:
    def test_identity_xmod_matches_derivation_algebra(self):
        for name, g_name in (("id_a1", "a_1"), ("id_h3", "h3"), ("id_sl2", "sl2")):
            x = build_entry(name)
            w = whitehead_derivations(x)
            assert w.kind == WHITEHEAD
            assert w.dim == derivation_algebra(build_entry(g_name)).dim

    def test_zero_action_zero_boundary_gives_all_maps(self):
        v, g = abelian_lie(QQ, 2), abelian_lie(QQ, 3)
        x = module_xmod(v, g, [[(0, 0)] * 2 for _ in range(3)])
        assert whitehead_derivations(x).dim == 6

    def test_sl2_dim_over_f5(self):
        assert whitehead_derivations(build_entry("id_sl2", GF(5))).dim == 3

    @given(xmods())
    @settings(deadline=None)
    def test_basis_satisfies_law_and_bracket_closes(self, x):
        w = whitehead_derivations(x)
        assert all(der.is_derivation() for der in w.basis)
        assert validate_lie(w.abstract).ok
        d = x.boundary
        for a in range(w.dim):
            for b in range(w.dim):
                pa, pb = w.basis[a].matrix, w.basis[b].matrix
                comm = pa @ (d @ pb) - pb @ (d @ pa)
                coords = w.coords_of(WhiteheadDerivation(x, comm))
                assert coords == w.abstract.structure[a][b]


class TestXModSpace:
    def test_identity_xmod_forces_equal_components(self):
        x = build_entry("id_h3")
        space = xmod_derivations(x)
        assert space.kind == XMOD
        assert space.dim == 6
        assert all(pair.alpha == pair.beta for pair in space.basis)

    def test_independent_scalings(self):
        assert xmod_derivations(build_entry("mod_trivial_a1")).dim == 2

    def test_sl2_dim(self):
        assert xmod_derivations(build_entry("id_sl2")).dim == 3

    @given(xmods())
    @settings(deadline=None)
    def test_basis_satisfies_laws_and_bracket_closes(self, x):
        space = xmod_derivations(x)
        assert all(pair.is_derivation() for pair in space.basis)
        assert validate_lie(space.abstract).ok
        for a in range(space.dim):
            for b in range(space.dim):
                pa, pb = space.basis[a], space.basis[b]
                comm = XModDerivation(x, pa.alpha @ pb.alpha - pb.alpha @ pa.alpha,
                                      pa.beta @ pb.beta - pb.beta @ pa.beta)
                assert space.coords_of(comm) == space.abstract.structure[a][b]


class TestActor:
    def test_identity_sl2_boundary_bijective(self):
        a = actor(build_entry("id_sl2"))
        assert (a.n1, a.n0) == (3, 3)
        assert a.boundary.rank() == 3

    def test_zero_boundary_kills_delta(self):
        a = actor(build_entry("mod_trivial_a1"))
        assert (a.n1, a.n0) == (1, 2)
        assert a.boundary.is_zero()

    def test_action_is_alpha_p_minus_p_beta(self):
        x = build_entry("id_h3")
        w = whitehead_derivations(x)
        space = xmod_derivations(x)
        a = actor(x)
        for i, pair in enumerate(space.basis):
            for j, der in enumerate(w.basis):
                moved = pair.alpha @ der.matrix - der.matrix @ pair.beta
                assert a.action[i][j] == w.coords_of(WhiteheadDerivation(x, moved))

    @given(xmods())
    @settings(deadline=None)
    def test_actor_is_a_crossed_module(self, x):
        assert validate_xmod(actor(x)).ok


class TestClassPreserving:
    def test_dims(self):
        for name, expect in (("id_h3", 2), ("id_sl2", 3)):
            x = build_entry(name)
            cw = class_preserving_whitehead(x)
            cd = class_preserving_xmod(x)
            assert cw.kind == WHITEHEAD_CLASS and cd.kind == XMOD_CLASS
            assert (cw.dim, cd.dim) == (expect, expect)

    def test_zero_action_gives_zero_spaces(self):
        x = build_entry("mod_trivial_a1")
        assert class_preserving_whitehead(x).dim == 0
        assert class_preserving_xmod(x).dim == 0

    def test_abelian_xmod_gives_zero_spaces(self):
        x = build_entry("id_a3")
        assert class_preserving_whitehead(x).dim == 0
        assert class_preserving_xmod(x).dim == 0

    def test_generators_recovered(self):
        x = build_entry("id_sl2")
        cw = class_preserving_whitehead(x)
        cd = class_preserving_xmod(x)
        for f in x.l1.basis():
            assert cw.contains(WhiteheadDerivation(x, action_into_l1(x, f)))
        for e in x.l0.basis():
            pair = XModDerivation(x, action_endomorphism(x, e), ad(x.l0, e))
            assert cd.contains(pair)

    @given(xmods())
    @settings(deadline=None)
    def test_spans_are_bracket_closed_subspaces(self, x):
        w = whitehead_derivations(x)
        cw = class_preserving_whitehead(x)
        assert validate_lie(cw.abstract).ok
        assert w.flat.contains_subspace(cw.flat)
        space = xmod_derivations(x)
        cd = class_preserving_xmod(x)
        assert validate_lie(cd.abstract).ok
        assert space.flat.contains_subspace(cd.flat)


class TestClassActor:
    def test_dims(self):
        ca = class_actor(build_entry("id_h3"))
        assert (ca.n1, ca.n0) == (2, 2)
        ca = class_actor(build_entry("id_sl2"))
        assert (ca.n1, ca.n0) == (3, 3)

    def test_abelian_gives_zero_xmod(self):
        ca = class_actor(build_entry("id_a2"))
        assert (ca.n1, ca.n0) == (0, 0)

    @given(xmods())
    @settings(deadline=None)
    def test_class_actor_is_a_crossed_module(self, x):
        assert validate_xmod(class_actor(x)).ok


class TestInnerActor:
    def test_coincides_with_class_spans_on_sl2(self):
        inn = inner_actor(build_entry("id_sl2"))
        assert inn.dims == (3, 3)
        assert inn.ideal

    def test_boundary_image_matches_negated_canonical_pair(self):
        x = build_entry("id_h3")
        for f in x.l1.basis():
            delta = action_into_l1(x, f)
            neg_df = vec_scale(x.field, -1, x.boundary.apply(f))
            assert delta @ x.boundary == action_endomorphism(x, neg_df)
            assert x.boundary @ delta == ad(x.l0, neg_df)

    @given(xmods())
    @settings(deadline=None)
    def test_chain_holds_everywhere(self, x):
        inn = inner_actor(x)
        assert validate_subxmod(inn).ok
        full = actor(x)
        assert inn.s1.dim <= full.n1 and inn.s0.dim <= full.n0
