import hypothesis.strategies as st
import pytest
from hypothesis import given

from tests.strategies import fields, matrices, scalars, subspaces
from xlie.fields import GF, QQ
from xlie.linalg import (
    Matrix,
    Subspace,
    induced_on_quotient,
    matrix_maps_subspace,
    quotient_coords,
    restrict_matrix,
    solve,
    solve_many,
    subspace_intersect,
    subspace_sum,
)


class TestRref:
    def test_identity(self):
        m = Matrix.identity(QQ, 2)
        red, pivots, rank = m.rref()
        assert red == m
        assert pivots == (0, 1)
        assert rank == 2

    def test_dependent_rows(self):
        red, _, rank = Matrix(QQ, [[2, 4], [1, 2]]).rref()
        assert red == Matrix(QQ, [[1, 2], [0, 0]])
        assert rank == 1

    def test_char_2_cancellation(self):
        red, _, rank = Matrix(GF(2), [[1, 1], [1, 1]]).rref()
        assert red == Matrix(GF(2), [[1, 1], [0, 0]])
        assert rank == 1

    @given(matrices())
    def test_idempotent(self, m):
        red, pivots, rank = m.rref()
        red2, pivots2, rank2 = red.rref()
        assert red2 == red
        assert pivots2 == pivots
        assert rank2 == rank

    @given(matrices())
    def test_pivots_strictly_increasing(self, m):
        _, pivots, rank = m.rref()
        assert list(pivots) == sorted(set(pivots))
        assert len(pivots) == rank

    def test_empty_shapes(self):
        for m in [Matrix(QQ, [], ncols=3), Matrix.zeros(QQ, 3, 0), Matrix.zeros(QQ, 0, 0)]:
            red, pivots, rank = m.rref()
            assert red == m
            assert pivots == ()
            assert rank == 0


class TestKernel:
    def test_zero_matrix(self):
        k = Matrix.zeros(QQ, 3, 3).kernel()
        assert k == Subspace.full(QQ, 3)

    def test_identity(self):
        assert Matrix.identity(QQ, 3).kernel() == Subspace.zero(QQ, 3)

    def test_multiply_back(self):
        m = Matrix(QQ, [[1, 2, 3]])
        k = m.kernel()
        assert k.dim == 2
        for row in k.basis.rows:
            assert not any(m.apply(row))

    @given(matrices())
    def test_rank_nullity(self, m):
        k = m.kernel()
        assert k.dim == m.ncols - m.rank()
        for row in k.basis.rows:
            assert not any(m.apply(row))


class TestSolve:
    def test_identity(self):
        assert solve(Matrix.identity(QQ, 3), (1, 2, 3)) == (1, 2, 3)

    def test_free_variable_zero(self):
        assert solve(Matrix(QQ, [[1, 1]]), [1]) == (1, 0)

    def test_inconsistent(self):
        assert solve(Matrix(QQ, [[1], [1]]), (1, 2)) is None

    @given(matrices().flatmap(lambda m: st.tuples(
        st.just(m),
        st.lists(scalars(m.field), min_size=m.ncols, max_size=m.ncols))))
    def test_solution_satisfies_system(self, data):
        m, x = data
        b = m.apply(x)
        got = solve(m, b)
        assert got is not None
        assert m.apply(got) == b

    def test_solve_many_columnwise(self):
        a = Matrix(QQ, [[1, 1], [0, 1]])
        b = Matrix(QQ, [[1, 0], [0, 2]])
        x = solve_many(a, b)
        assert a @ x == b


class TestInverse:
    @given(matrices(square=True))
    def test_inverse_contract(self, m):
        inv = m.inverse()
        if m.rank() == m.nrows:
            assert inv is not None
            assert m @ inv == Matrix.identity(m.field, m.nrows)
            assert inv @ m == Matrix.identity(m.field, m.nrows)
        else:
            assert inv is None

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            Matrix.zeros(QQ, 2, 3).inverse()


class TestMatrixOps:
    @given(matrices())
    def test_transpose_involution(self, m):
        assert m.transpose().transpose() == m

    @given(fields().flatmap(lambda f: st.tuples(
        matrices(field=f, min_dim=1, max_dim=3),
        matrices(field=f, min_dim=1, max_dim=3),
        matrices(field=f, min_dim=1, max_dim=3))))
    def test_product_associative(self, data):
        a, b, c = data
        # resample b's entries into the shape that makes a @ b @ c defined
        b = Matrix(a.field, [[b.rows[i % b.nrows][j % b.ncols] for j in range(c.nrows)]
                             for i in range(a.ncols)], ncols=c.nrows)
        assert (a @ b) @ c == a @ (b @ c)

    @given(matrices())
    def test_apply_matches_product(self, m):
        for j in range(m.ncols):
            e = [m.field.zero()] * m.ncols
            e[j] = m.field.one()
            assert m.apply(e) == m.col(j)

    def test_shape_errors(self):
        with pytest.raises(ValueError):
            Matrix(QQ, [[1, 2], [3]])
        with pytest.raises(ValueError):
            Matrix(QQ, [], ncols=None)
        with pytest.raises(ValueError):
            Matrix.zeros(QQ, 2, 2) @ Matrix.zeros(QQ, 3, 2)
        with pytest.raises(ValueError):
            Matrix.zeros(QQ, 2, 2) @ Matrix.zeros(GF(2), 2, 2)


class TestSubspaceLattice:
    def test_sum_with_zero(self):
        u = Subspace(QQ, 3, [[1, 0, 2]])
        assert subspace_sum(u, Subspace.zero(QQ, 3)) == u

    def test_sum_of_axes(self):
        u = Subspace(QQ, 2, [[1, 0]])
        v = Subspace(QQ, 2, [[0, 1]])
        assert subspace_sum(u, v) == Subspace.full(QQ, 2)

    def test_char_2_coincidence(self):
        u = Subspace(GF(2), 2, [[1, 1]])
        v = Subspace(GF(2), 2, [[1, -1]])
        assert subspace_sum(u, v) == u

    def test_self_intersection(self):
        u = Subspace(QQ, 3, [[1, 2, 0], [0, 0, 1]])
        assert subspace_intersect(u, u) == u

    def test_disjoint_axes(self):
        u = Subspace(QQ, 2, [[1, 0]])
        v = Subspace(QQ, 2, [[0, 1]])
        assert subspace_intersect(u, v) == Subspace.zero(QQ, 2)

    @given(fields().flatmap(lambda f: st.tuples(subspaces(field=f), subspaces(field=f))))
    def test_modular_law(self, data):
        u, v = data
        s = subspace_sum(u, v)
        i = subspace_intersect(u, v)
        assert s.dim + i.dim == u.dim + v.dim
        assert s.contains_subspace(u) and s.contains_subspace(v)
        assert u.contains_subspace(i) and v.contains_subspace(i)

    @given(subspaces())
    def test_canonical_equality(self, u):
        # re-span by sums of consecutive basis vectors: same space, same basis
        rows = list(u.basis.rows)
        respanned = rows + [tuple(u.field.add(a, b) for a, b in zip(rows[i], rows[i + 1]))
                            for i in range(len(rows) - 1)]
        assert Subspace(u.field, u.ambient_dim, respanned) == u

    @given(subspaces().flatmap(lambda u: st.tuples(
        st.just(u), st.lists(scalars(u.field), min_size=u.dim, max_size=u.dim))))
    def test_membership_and_coords(self, data):
        u, coeffs = data
        v = u.linear_combination(coeffs)
        assert u.contains(v)
        got = u.coords_of(v)
        assert u.linear_combination(got) == v


class TestQuotientCoords:
    def test_by_zero_subspace(self):
        qc = quotient_coords(3, Subspace.zero(QQ, 3))
        assert qc.project == Matrix.identity(QQ, 3)
        assert qc.dim == 3

    def test_by_full_space(self):
        qc = quotient_coords(3, Subspace.full(QQ, 3))
        assert qc.dim == 0
        assert qc.project_vec((1, 2, 3)) == ()

    def test_kill_last_axis(self):
        qc = quotient_coords(3, Subspace(QQ, 3, [[0, 0, 1]]))
        assert qc.project_vec((1, 2, 3)) == (1, 2)
        assert qc.lift_vec((1, 2)) == (1, 2, 0)

    @given(subspaces())
    def test_projection_contract(self, s):
        qc = quotient_coords(s.ambient_dim, s)
        assert qc.dim == s.ambient_dim - s.dim
        assert qc.project @ qc.lift == Matrix.identity(s.field, qc.dim)
        for row in s.basis.rows:
            assert not any(qc.project_vec(row))

    @given(subspaces().flatmap(lambda s: st.tuples(
        st.just(s),
        st.lists(scalars(s.field), min_size=s.ambient_dim, max_size=s.ambient_dim))))
    def test_membership_iff_projects_to_zero(self, data):
        s, v = data
        qc = quotient_coords(s.ambient_dim, s)
        assert (not any(qc.project_vec(v))) == s.contains(v)


class TestRestrictionAndInduction:
    def test_restrict_matrix(self):
        f = Matrix(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 2]])  # swap e1,e2; scale e3
        s = Subspace(QQ, 3, [[0, 0, 1]])
        r = restrict_matrix(f, s, s)
        assert r == Matrix(QQ, [[2]])

    def test_restrict_escapes(self):
        f = Matrix(QQ, [[0, 1], [1, 0]])
        s = Subspace(QQ, 2, [[1, 0]])
        assert not matrix_maps_subspace(f, s, s)
        assert restrict_matrix(f, s, s) is None

    def test_induced_on_quotient(self):
        f = Matrix(QQ, [[1, 0, 0], [0, 1, 0], [5, 0, 1]])
        s = Subspace(QQ, 3, [[0, 0, 1]])
        qc = quotient_coords(3, s)
        ind = induced_on_quotient(f, qc, qc)
        assert ind == Matrix.identity(QQ, 2)

    def test_induced_not_well_defined(self):
        f = Matrix(QQ, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        s = Subspace(QQ, 3, [[0, 0, 1]])
        qc = quotient_coords(3, s)
        assert induced_on_quotient(f, qc, qc) is None
