import hypothesis.strategies as st
import pytest
from hypothesis import given

from tests.strategies import (
    abelian,
    fields,
    heisenberg,
    lie_algebras,
    nonabelian2,
    scalars,
    sl2,
)
from xlie.fields import GF, QQ
from xlie.liealg import (
    DERIVED,
    LOWER_CENTRAL,
    LieAlgebra,
    LieHom,
    ad,
    bracket,
    center,
    central_quotient_algebra,
    derivation_algebra,
    derived_length,
    derived_restricted_algebra,
    derived_subalgebra,
    inner_derivations,
    is_nilpotent,
    is_solvable,
    lie_isoclinism_verify,
    lie_series,
    nilpotency_class,
    validate_lie,
)
from xlie.linalg import Matrix, Subspace
from xlie.validation import StructureError


def vectors_of(g):
    return st.lists(scalars(g.field), min_size=g.dim, max_size=g.dim).map(tuple)


class TestValidate:
    def test_abelian_valid(self):
        assert validate_lie(abelian(3)).ok

    def test_alternating_violation(self):
        c = [[[0, 0, 0]] * 3 for _ in range(3)]
        c[1][1] = [0, 0, 1]
        report = validate_lie(LieAlgebra(QQ, 3, c))
        assert any(v.law == "alternating" and v.at == (1,) for v in report.violations)

    def test_antisymmetry_violation(self):
        c = [[[0, 0, 0]] * 3 for _ in range(3)]
        c[0][1] = [0, 0, 1]  # c[1][0] left at zero
        report = validate_lie(LieAlgebra(QQ, 3, c))
        assert any(v.law == "antisymmetry" and v.at == (0, 1) for v in report.violations)

    def test_jacobi_violation(self):
        # [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0: cyclic sum is -2*e0 at (0,1,2)
        g = LieAlgebra.from_brackets(
            QQ, 3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, 1), (1, 2): (1, 0, 0)},
            check=False)
        report = validate_lie(g)
        assert [v.law for v in report.violations] == ["jacobi"]
        assert report.violations[0].at == (0, 1, 2)

    def test_from_brackets_raises_on_invalid(self):
        with pytest.raises(StructureError):
            LieAlgebra.from_brackets(
                QQ, 3, {(0, 1): (0, 1, 0), (0, 2): (0, 0, 1), (1, 2): (1, 0, 0)})

    @given(lie_algebras())
    def test_fixtures_valid(self, g):
        assert validate_lie(g).ok


class TestBracket:
    def test_heisenberg(self):
        h3 = heisenberg()
        assert bracket(h3, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)

    def test_sl2_ef_is_h(self):
        g = sl2()
        assert bracket(g, (1, 0, 0), (0, 1, 0)) == (0, 0, 1)
        assert bracket(g, (0, 0, 1), (1, 0, 0)) == (2, 0, 0)
        assert bracket(g, (0, 0, 1), (0, 1, 0)) == (0, -2, 0)

    @given(lie_algebras().flatmap(lambda g: st.tuples(st.just(g), vectors_of(g))))
    def test_alternating(self, data):
        g, v = data
        assert not any(bracket(g, v, v))

    @given(lie_algebras().flatmap(lambda g: st.tuples(
        st.just(g), vectors_of(g), vectors_of(g), vectors_of(g))))
    def test_jacobi_on_random_triples(self, data):
        g, x, y, z = data
        f = g.field
        s = bracket(g, x, bracket(g, y, z))
        s = tuple(f.add(a, b) for a, b in zip(s, bracket(g, y, bracket(g, z, x))))
        s = tuple(f.add(a, b) for a, b in zip(s, bracket(g, z, bracket(g, x, y))))
        assert not any(s)


class TestCenter:
    def test_abelian_full(self):
        assert center(abelian(2)) == Subspace.full(QQ, 2)

    def test_heisenberg_span_z(self):
        assert center(heisenberg()) == Subspace(QQ, 3, [[0, 0, 1]])

    def test_sl2_trivial(self):
        assert center(sl2()).dim == 0

    def test_nonabelian2_trivial(self):
        assert center(nonabelian2()).dim == 0

    @given(lie_algebras().flatmap(lambda g: st.tuples(st.just(g), vectors_of(g))))
    def test_center_brackets_vanish(self, data):
        g, v = data
        for row in center(g).basis.rows:
            assert not any(bracket(g, row, v))


class TestDerived:
    def test_abelian_zero(self):
        assert derived_subalgebra(abelian(3)).dim == 0

    def test_heisenberg_span_z(self):
        assert derived_subalgebra(heisenberg()) == Subspace(QQ, 3, [[0, 0, 1]])

    def test_sl2_full(self):
        assert derived_subalgebra(sl2()) == Subspace.full(QQ, 3)

    @given(lie_algebras())
    def test_contains_all_brackets(self, g):
        d = derived_subalgebra(g)
        for i in range(g.dim):
            for j in range(g.dim):
                assert d.contains(g.structure[i][j])


class TestSeries:
    def test_heisenberg_lower_central(self):
        s = lie_series(heisenberg(), LOWER_CENTRAL)
        assert [t.dim for t in s.terms] == [3, 1, 0]
        assert s.terminates and s.class_or_length == 2

    def test_abelian(self):
        assert nilpotency_class(abelian(4)) == 1
        assert derived_length(abelian(4)) == 1
        assert nilpotency_class(abelian(0)) == 0

    def test_sl2_diverges(self):
        g = sl2()
        assert not is_nilpotent(g)
        assert not is_solvable(g)
        assert lie_series(g, LOWER_CENTRAL).class_or_length is None

    def test_nonabelian2(self):
        g = nonabelian2()
        assert not is_nilpotent(g)
        assert is_solvable(g)
        assert derived_length(g) == 2

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            lie_series(heisenberg(), "upper_central")

    @given(lie_algebras())
    def test_lower_central_descending_ideals(self, g):
        s = lie_series(g, LOWER_CENTRAL)
        full = Subspace.full(g.field, g.dim)
        for prev, nxt in zip(s.terms, s.terms[1:]):
            assert prev.contains_subspace(nxt)
            # each term brackets into the next one
            for x in full.basis.rows:
                for y in prev.basis.rows:
                    assert nxt.contains(bracket(g, x, y))

    @given(lie_algebras())
    def test_derived_descending(self, g):
        s = lie_series(g, DERIVED)
        for prev, nxt in zip(s.terms, s.terms[1:]):
            assert prev.contains_subspace(nxt)


class TestDerivationAlgebra:
    def test_dim_a1(self):
        der = derivation_algebra(abelian(1))
        assert der.dim == 1

    def test_dim_sl2(self):
        assert derivation_algebra(sl2()).dim == 3

    def test_dim_heisenberg(self):
        assert derivation_algebra(heisenberg()).dim == 6

    @given(lie_algebras())
    def test_leibniz_recheck(self, g):
        der = derivation_algebra(g)
        f = g.field
        for D in der.matrices:
            for i in range(g.dim):
                for j in range(i + 1, g.dim):
                    lhs = D.apply(g.structure[i][j])
                    rhs = tuple(f.add(a, b) for a, b in zip(
                        bracket(g, D.col(i), g.basis()[j]),
                        bracket(g, g.basis()[i], D.col(j))))
                    assert lhs == rhs

    @given(lie_algebras())
    def test_abstract_algebra_valid(self, g):
        der = derivation_algebra(g)
        assert validate_lie(der.algebra).ok
        assert der.algebra.dim == der.dim

    @given(lie_algebras())
    def test_structure_matches_matrix_commutators(self, g):
        der = derivation_algebra(g)
        for a in range(der.dim):
            for b in range(der.dim):
                comm = der.matrices[a] @ der.matrices[b] - der.matrices[b] @ der.matrices[a]
                assert der.coords_of(comm) == der.algebra.structure[a][b]


class TestInnerDerivations:
    def test_abelian_zero(self):
        assert inner_derivations(abelian(3)).dim == 0

    def test_sl2_everything(self):
        g = sl2()
        der = derivation_algebra(g)
        assert inner_derivations(g, der) == Subspace.full(QQ, 3)

    def test_heisenberg_dim2(self):
        g = heisenberg()
        assert inner_derivations(g).dim == 2
        assert ad(g, (0, 0, 1)).is_zero()

    @given(lie_algebras())
    def test_inner_is_ideal(self, g):
        der = derivation_algebra(g)
        inner = inner_derivations(g, der)
        for D in der.matrices:
            for e in g.basis():
                adx = ad(g, e)
                comm = D @ adx - adx @ D
                coords = der.coords_of(comm)
                assert coords is not None and inner.contains(coords)
                # and it is ad of D(x)
                assert comm == ad(g, D.apply(e))


class TestLieHom:
    def test_identity_is_hom(self):
        g = heisenberg()
        hom = LieHom(g, g, Matrix.identity(QQ, 3))
        assert hom.is_homomorphism() and hom.is_bijective()

    def test_swap_is_not_hom(self):
        g = heisenberg()
        swap = Matrix(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        hom = LieHom(g, g, swap)
        # [y, x] = -z but the identity would need +z
        assert not hom.is_homomorphism()

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            LieHom(heisenberg(), abelian(2), Matrix.identity(QQ, 3))


class TestQuotientAndRestriction:
    def test_heisenberg_central_quotient_abelian(self):
        q_alg, qc = central_quotient_algebra(heisenberg())
        assert q_alg.dim == 2
        assert derived_subalgebra(q_alg).dim == 0
        assert validate_lie(q_alg).ok

    def test_sl2_quotient_is_itself(self):
        q_alg, _ = central_quotient_algebra(sl2())
        assert q_alg.dim == 3
        assert q_alg.structure == sl2().structure

    @given(lie_algebras())
    def test_derived_restriction_valid(self, g):
        d_alg, sub = derived_restricted_algebra(g)
        assert d_alg.dim == sub.dim
        assert validate_lie(d_alg).ok


class TestIsoclinismVerify:
    @given(lie_algebras())
    def test_reflexive(self, g):
        q_alg, _ = central_quotient_algebra(g)
        d_alg, _ = derived_restricted_algebra(g)
        w, report = lie_isoclinism_verify(
            g, g, Matrix.identity(g.field, q_alg.dim), Matrix.identity(g.field, d_alg.dim))
        assert report.ok and w is not None and w.verified

    def test_abelian_algebras_all_isoclinic(self):
        w, report = lie_isoclinism_verify(
            abelian(2), abelian(3), Matrix(QQ, [], ncols=0), Matrix(QQ, [], ncols=0))
        assert report.ok and w is not None

    def test_heisenberg_vs_abelian_fails(self):
        # quotient dims 2 vs 0 and derived dims 1 vs 0: no bijections exist
        w, report = lie_isoclinism_verify(
            heisenberg(), abelian(3), Matrix(QQ, [], ncols=2), Matrix(QQ, [], ncols=1))
        assert w is None
        laws = {v.law for v in report.violations}
        assert "eta_bijective" in laws and "xi_bijective" in laws

    def test_square_violation_detected(self):
        # negate xi only: square then fails for h3
        g = heisenberg()
        w, report = lie_isoclinism_verify(
            g, g, Matrix.identity(QQ, 2), Matrix(QQ, [[-1]]))
        assert w is None
        assert any(v.law == "square" for v in report.violations)

    def test_shape_mismatch_raises(self):
        with pytest.raises(ValueError):
            lie_isoclinism_verify(
                heisenberg(), heisenberg(), Matrix.identity(QQ, 3), Matrix.identity(QQ, 1))
