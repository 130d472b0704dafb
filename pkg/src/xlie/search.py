"""Exhaustive isomorphism and isoclinism searches over finite prime fields.

Candidate maps are built column by column, each column ranging over the
coordinate vectors of the target in lexicographic order.  A partial map is
extended only while its columns stay linearly independent and every bracket,
boundary, and action constraint that is already decidable holds, so most of
the space is discarded without ever being visited.  The first complete map
found is the lexicographically least one, making results deterministic.

For isoclinism the quotient-level maps (eta) are enumerated and the
commutator-level maps (xi) are then forced: the pairing values span the
displacement and the derived subalgebra, so the commuting squares determine
xi by a linear solve.  Inconsistent systems prune the current eta.

Budgets are charged per attempted column; exhausting one yields a distinct
verdict instead of an error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from xlie.fields import FieldSpec
from xlie.linalg import Matrix, Subspace, solve_many, vec_add, vec_scale, zero_vec
from xlie.liealg import LieAlgebra, LieHom, bracket, center, derived_subalgebra
from xlie.xmod import CrossedModule, XModMorphism, act, displacement, fixed_points
from xlie.derivations import (
    class_actor,
    class_preserving_whitehead,
    class_preserving_xmod,
)
from xlie.isoclinism import (
    IsoclinismWitness,
    fingerprints_match,
    iso_context,
    isoclinism_verify,
)

VERIFIED = "verified"
NOT_ISOCLINIC = "not_isoclinic"
ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_BUDGET = 10**6

Witness = Union[LieHom, XModMorphism, IsoclinismWitness]


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search: a verdict, the witness when one was found, the
    number of column assignments attempted, and a human-readable reason."""

    status: str
    witness: Optional[Witness]
    nodes: int
    detail: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None


class _OutOfBudget(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self) -> None:
        if self.used >= self.limit:
            raise _OutOfBudget
        self.used += 1


def _check_budget(budget) -> None:
    if not isinstance(budget, int) or isinstance(budget, bool) or budget <= 0:
        raise ValueError("budget must be a positive integer")


def _require_finite(field: FieldSpec, what: str) -> None:
    if not field.is_prime_field:
        raise ValueError(f"{what} requires a finite field")


def _combo(field: FieldSpec, coeffs: Sequence, cols: Sequence, dim: int):
    out = zero_vec(field, dim)
    for k, c in enumerate(coeffs):
        if c:
            out = vec_add(field, out, vec_scale(field, c, cols[k]))
    return out


def _bracket_schedule(structure, n: int) -> list:
    """For each column index, the bracket relations that become decidable
    once that column is assigned: both arguments and the whole support of
    the structure-constant value must be in the assigned prefix."""
    ready = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            last = j
            for k, c in enumerate(structure[i][j]):
                if c:
                    last = max(last, k)
            ready[last].append((i, j))
    return ready


def _action_schedule(action, n0: int, n1: int) -> list:
    """Action relations keyed by the degree-one column completing them; the
    degree-zero map is fully known by the time these run."""
    ready = [[] for _ in range(n1)]
    for i in range(n0):
        for j in range(n1):
            last = j
            for k, c in enumerate(action[i][j]):
                if c:
                    last = max(last, k)
            ready[last].append((i, j))
    return ready


def _any_column(m: int, cand) -> bool:
    return True


def _independent_columns(field: FieldSpec, ambient: int, count: int,
                         budget: _Budget,
                         column_ok: Callable[[int, tuple], bool],
                         step_ok: Callable[[int, list], bool]):
    """Yield linearly independent column lists in lexicographic order.

    column_ok filters a candidate for position m on its own; step_ok then
    sees the extended prefix and checks every constraint that position m
    completes.  One budget unit per candidate tried."""
    cols: list = []

    def extend():
        m = len(cols)
        if m == count:
            yield list(cols)
            return
        for cand in itertools.product(range(field.p), repeat=ambient):
            budget.charge()
            if not column_ok(m, cand):
                continue
            cols.append(cand)
            if (Subspace(field, ambient, cols).dim == m + 1
                    and step_ok(m, cols)):
                yield from extend()
            cols.pop()

    yield from extend()


def _hom_step(target: LieAlgebra, structure, schedule) -> Callable[[int, list], bool]:
    field = target.field
    dim = target.dim

    def check(m: int, cols: list) -> bool:
        for i, j in schedule[m]:
            want = _combo(field, structure[i][j], cols, dim)
            if bracket(target, cols[i], cols[j]) != want:
                return False
        return True

    return check


def lie_isomorphism_search(g: LieAlgebra, h: LieAlgebra,
                           budget: int = DEFAULT_BUDGET) -> SearchResult:
    """First Lie-algebra isomorphism g -> h in lexicographic column order."""
    _check_budget(budget)
    if g.field != h.field:
        raise ValueError("field mismatch")
    _require_finite(g.field, "isomorphism search")
    spent = _Budget(budget)
    if (g.dim != h.dim
            or center(g).dim != center(h).dim
            or derived_subalgebra(g).dim != derived_subalgebra(h).dim):
        return SearchResult(NOT_ISOMORPHIC, None, spent.used,
                            "invariant dimensions differ")
    schedule = _bracket_schedule(g.structure, g.dim)
    step = _hom_step(h, g.structure, schedule)
    try:
        for cols in _independent_columns(g.field, h.dim, g.dim, spent,
                                         _any_column, step):
            hom = LieHom(g, h, Matrix.from_cols(g.field, cols, nrows=h.dim))
            assert hom.is_homomorphism() and hom.is_bijective()
            return SearchResult(ISOMORPHIC, hom, spent.used)
    except _OutOfBudget:
        return SearchResult(BUDGET_EXHAUSTED, None, spent.used,
                            f"budget of {budget} nodes exhausted")
    return SearchResult(NOT_ISOMORPHIC, None, spent.used,
                        "search space exhausted")


def _xmod_invariants(x: CrossedModule) -> tuple:
    return (x.n1, x.n0,
            fixed_points(x).dim, displacement(x).dim,
            center(x.l1).dim, center(x.l0).dim,
            derived_subalgebra(x.l1).dim, derived_subalgebra(x.l0).dim,
            x.boundary.rank())


def _morphism_pair_search(x: CrossedModule, y: CrossedModule,
                          spent: _Budget):
    """Yield (alpha, beta) column pairs for isomorphisms x -> y, beta first;
    alpha columns are filtered by the boundary square as they are placed."""
    field = x.field
    schedule0 = _bracket_schedule(x.l0.structure, x.n0)
    schedule1 = _bracket_schedule(x.l1.structure, x.n1)
    act_schedule = _action_schedule(x.action, x.n0, x.n1)
    step0 = _hom_step(y.l0, x.l0.structure, schedule0)

    for bcols in _independent_columns(field, y.n0, x.n0, spent,
                                      _any_column, step0):
        beta = Matrix.from_cols(field, bcols, nrows=y.n0)
        forced = [beta.apply(x.boundary.col(j)) for j in range(x.n1)]

        def column_ok(m: int, cand) -> bool:
            return y.boundary.apply(cand) == forced[m]

        def step1(m: int, cols: list) -> bool:
            for i, j in schedule1[m]:
                want = _combo(field, x.l1.structure[i][j], cols, y.n1)
                if bracket(y.l1, cols[i], cols[j]) != want:
                    return False
            for i, j in act_schedule[m]:
                want = _combo(field, x.action[i][j], cols, y.n1)
                if act(y, bcols[i], cols[j]) != want:
                    return False
            return True

        for acols in _independent_columns(field, y.n1, x.n1, spent,
                                          column_ok, step1):
            yield acols, beta


def xmod_isomorphism_search(x: CrossedModule, y: CrossedModule,
                            budget: int = DEFAULT_BUDGET) -> SearchResult:
    """First crossed-module isomorphism x -> y, degree-zero columns before
    degree-one columns, each block in lexicographic order."""
    _check_budget(budget)
    if x.field != y.field:
        raise ValueError("field mismatch")
    _require_finite(x.field, "isomorphism search")
    spent = _Budget(budget)
    if _xmod_invariants(x) != _xmod_invariants(y):
        return SearchResult(NOT_ISOMORPHIC, None, spent.used,
                            "invariant dimensions differ")
    try:
        for acols, beta in _morphism_pair_search(x, y, spent):
            alpha = Matrix.from_cols(x.field, acols, nrows=y.n1)
            morphism = XModMorphism(x, y, alpha, beta)
            assert morphism.is_isomorphism()
            return SearchResult(ISOMORPHIC, morphism, spent.used)
    except _OutOfBudget:
        return SearchResult(BUDGET_EXHAUSTED, None, spent.used,
                            f"budget of {budget} nodes exhausted")
    return SearchResult(NOT_ISOMORPHIC, None, spent.used,
                        "search space exhausted")


def _pairing_transport(field: FieldSpec, src_vals: list, tgt_vals: list,
                       src_dim: int, tgt_dim: int) -> Optional[Matrix]:
    """The linear map sending each source pairing value to its target value.

    The source values span their space, so the map is unique when it exists;
    an inconsistent system means the candidate eta admits no xi."""
    v = Matrix.from_cols(field, src_vals, nrows=src_dim)
    w = Matrix.from_cols(field, tgt_vals, nrows=tgt_dim)
    assert v.rank() == src_dim, "pairing values do not span"
    solved = solve_many(v.transpose(), w.transpose())
    return solved.transpose() if solved is not None else None


def _eval_pairing_tensor(field: FieldSpec, tensor, u, v, out_dim: int):
    out = zero_vec(field, out_dim)
    for a, ua in enumerate(u):
        if not ua:
            continue
        for b, vb in enumerate(v):
            if not vb:
                continue
            out = vec_add(field, out,
                          vec_scale(field, field.mul(ua, vb), tensor[a][b]))
    return out


def isoclinism_search(x: CrossedModule, y: CrossedModule,
                      budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Decide whether x and y are isoclinic by exhaustive search.

    A fingerprint mismatch settles the question over any field without any
    enumeration; only the search itself needs the field to be finite.  For
    each candidate eta (a quotient isomorphism enumerated like any other
    crossed-module isomorphism) the commuting squares force xi, and the full
    verifier has the last word on the assembled witness."""
    _check_budget(budget)
    if x.field != y.field:
        raise ValueError("field mismatch")
    spent = _Budget(budget)
    if not fingerprints_match(x, y):
        return SearchResult(NOT_ISOCLINIC, None, spent.used,
                            "fingerprint mismatch")
    _require_finite(x.field, "isoclinism search")
    field = x.field
    cx, cy = iso_context(x), iso_context(y)
    px, py = cx.pairing, cy.pairing
    q1, q0 = px.q1.dim, px.q0.dim
    pairs1 = [(i, j) for i in range(q1) for j in range(q0)]
    pairs0 = [(i, j) for i in range(q0) for j in range(q0)]
    src1 = [px.c1[i][j] for i, j in pairs1]
    src0 = [px.c0[i][j] for i, j in pairs0]
    try:
        for e1cols, eta0 in _morphism_pair_search(cx.quotient.module,
                                                  cy.quotient.module, spent):
            eta1 = Matrix.from_cols(field, e1cols, nrows=py.q1.dim)
            tgt1 = [_eval_pairing_tensor(field, py.c1,
                                         e1cols[i], eta0.col(j), py.disp.dim)
                    for i, j in pairs1]
            xi1 = _pairing_transport(field, src1, tgt1,
                                     px.disp.dim, py.disp.dim)
            if xi1 is None:
                continue
            tgt0 = [_eval_pairing_tensor(field, py.c0,
                                         eta0.col(i), eta0.col(j),
                                         py.derived0.dim)
                    for i, j in pairs0]
            xi0 = _pairing_transport(field, src0, tgt0,
                                     px.derived0.dim, py.derived0.dim)
            if xi0 is None:
                continue
            witness, _ = isoclinism_verify(x, y, eta1, eta0, xi1, xi0, cx, cy)
            if witness is not None:
                return SearchResult(VERIFIED, witness, spent.used)
    except _OutOfBudget:
        return SearchResult(BUDGET_EXHAUSTED, None, spent.used,
                            f"budget of {budget} nodes exhausted")
    return SearchResult(NOT_ISOCLINIC, None, spent.used,
                        "search space exhausted")


@dataclass(frozen=True)
class TransportReport:
    """Dimension and isomorphism evidence that class-preserving derivation
    data transports across a verified isoclinism.

    Search fields are None when the field is infinite and searching is not
    an option; dimensions are still compared exactly."""

    whitehead_dims: tuple[int, int]
    xmod_dims: tuple[int, int]
    whitehead_search: Optional[SearchResult]
    xmod_search: Optional[SearchResult]
    actor_search: Optional[SearchResult]

    @property
    def dims_equal(self) -> bool:
        return (self.whitehead_dims[0] == self.whitehead_dims[1]
                and self.xmod_dims[0] == self.xmod_dims[1])

    @property
    def ok(self) -> bool:
        searches = (self.whitehead_search, self.xmod_search,
                    self.actor_search)
        return self.dims_equal and all(
            s is None or s.status == ISOMORPHIC for s in searches)


def derc_dimension_transport_check(x: CrossedModule, y: CrossedModule,
                                   w: IsoclinismWitness,
                                   budget: int = DEFAULT_BUDGET,
                                   ) -> TransportReport:
    """Check that isoclinic crossed modules share class-preserving data.

    Both flavours of class-preserving derivation space must have equal
    dimensions; over finite fields the abstract algebras and the class
    actors are additionally matched up by isomorphism search."""
    _check_budget(budget)
    if not w.verified:
        raise ValueError("witness is not verified")
    if w.source != x or w.target != y:
        raise ValueError("witness endpoints do not match the arguments")
    cw_x, cw_y = class_preserving_whitehead(x), class_preserving_whitehead(y)
    cd_x, cd_y = class_preserving_xmod(x), class_preserving_xmod(y)
    assert cw_x.dim == cw_y.dim, "class-preserving derivation dims differ"
    assert cd_x.dim == cd_y.dim, "class-preserving pair dims differ"
    whitehead_search = xmod_search = actor_search = None
    if x.field.is_prime_field:
        whitehead_search = lie_isomorphism_search(cw_x.abstract, cw_y.abstract,
                                                  budget)
        xmod_search = lie_isomorphism_search(cd_x.abstract, cd_y.abstract,
                                             budget)
        actor_search = xmod_isomorphism_search(class_actor(x), class_actor(y),
                                               budget)
    return TransportReport((cw_x.dim, cw_y.dim), (cd_x.dim, cd_y.dim),
                           whitehead_search, xmod_search, actor_search)
