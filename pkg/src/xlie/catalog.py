"""Deterministic builders for the standard small algebras and crossed
modules used by the tests and the CLI.

Every entry re-validates on construction.  All builders take the field as
a parameter; sl2-based entries refuse characteristic 2 and 3, where its
structure constants degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from xlie.fields import QQ, FieldSpec
from xlie.liealg import (
    LieAlgebra,
    ad,
    derivation_algebra,
    derived_subalgebra,
    direct_sum_lie,
    is_ideal,
    restricted_algebra,
)
from xlie.linalg import Matrix, Subspace
from xlie.validation import StructureError
from xlie.xmod import CrossedModule, direct_sum_xmod


def abelian_lie(field: FieldSpec, n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(field, n, {})


def heisenberg_lie(field: FieldSpec) -> LieAlgebra:
    """Basis x, y, z with [x, y] = z."""
    return LieAlgebra.from_brackets(field, 3, {(0, 1): (0, 0, 1)})


def nonabelian2_lie(field: FieldSpec) -> LieAlgebra:
    """Basis e1, e2 with [e1, e2] = e2."""
    return LieAlgebra.from_brackets(field, 2, {(0, 1): (0, 1)})


def sl2_lie(field: FieldSpec) -> LieAlgebra:
    """Basis e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    if field.characteristic in (2, 3):
        raise StructureError("sl2 is refused over characteristic 2 and 3")
    return LieAlgebra.from_brackets(
        field, 3, {(0, 1): (0, 0, 1), (0, 2): (-2, 0, 0), (1, 2): (0, 2, 0)})


def identity_xmod(g: LieAlgebra) -> CrossedModule:
    """id: g -> g with the adjoint action."""
    return CrossedModule.build(g, g, Matrix.identity(g.field, g.dim), g.structure)


def inclusion_xmod(g: LieAlgebra, ideal: Subspace) -> CrossedModule:
    """inc: h -> g for an ideal h of g, with the adjoint action."""
    if not is_ideal(g, ideal):
        raise StructureError("subspace is not an ideal")
    h = restricted_algebra(g, ideal)
    boundary = Matrix.from_cols(g.field, list(ideal.basis.rows), nrows=g.dim)
    action = [[ideal.coords_of(ad(g, e).apply(v)) for v in ideal.basis.rows]
              for e in g.basis()]
    return CrossedModule.build(h, g, boundary, action)


def module_xmod(v: LieAlgebra, g: LieAlgebra, action) -> CrossedModule:
    """0: V -> g for a g-module V (an abelian algebra acted on by g)."""
    if derived_subalgebra(v).dim != 0:
        raise StructureError("module part must be abelian")
    return CrossedModule.build(v, g, Matrix.zeros(g.field, g.dim, v.dim), action)


def adjoint_actor_xmod(g: LieAlgebra) -> CrossedModule:
    """ad: g -> Der(g) with the evaluation action D . x = D(x)."""
    der = derivation_algebra(g)
    boundary_cols = []
    for e in g.basis():
        coords = der.coords_of(ad(g, e))
        if coords is None:
            raise AssertionError("ad is not a derivation")
        boundary_cols.append(coords)
    boundary = Matrix.from_cols(g.field, boundary_cols, nrows=der.dim)
    action = [[der.matrices[i].col(j) for j in range(g.dim)] for i in range(der.dim)]
    return CrossedModule.build(g, der.algebra, boundary, action)


def zero_xmod(field: FieldSpec) -> CrossedModule:
    return CrossedModule.build(abelian_lie(field, 0), abelian_lie(field, 0),
                               Matrix.zeros(field, 0, 0), [])


def _trivial_module_a1(field: FieldSpec) -> CrossedModule:
    return module_xmod(abelian_lie(field, 1), abelian_lie(field, 1),
                       [[(0,)]])


def _scaling_module_a1(field: FieldSpec) -> CrossedModule:
    return module_xmod(abelian_lie(field, 1), abelian_lie(field, 1),
                       [[(1,)]])


def _natural_module_n2(field: FieldSpec) -> CrossedModule:
    # e1, e2 act on K^2 as the matrix units E_11 and E_12
    action = [
        [(1, 0), (0, 0)],
        [(0, 0), (1, 0)],
    ]
    return module_xmod(abelian_lie(field, 2), nonabelian2_lie(field), action)


def _span(field: FieldSpec, ambient: int, *vectors) -> Subspace:
    return Subspace(field, ambient, list(vectors))


Value = Union[LieAlgebra, CrossedModule]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "lie" or "xmod"
    description: str
    build: Callable[[FieldSpec], Value]


_LIE_ENTRIES = [
    CatalogEntry("a_0", "lie", "zero algebra", lambda f: abelian_lie(f, 0)),
    CatalogEntry("a_1", "lie", "abelian, dim 1", lambda f: abelian_lie(f, 1)),
    CatalogEntry("a_2", "lie", "abelian, dim 2", lambda f: abelian_lie(f, 2)),
    CatalogEntry("a_3", "lie", "abelian, dim 3", lambda f: abelian_lie(f, 3)),
    CatalogEntry("n2", "lie", "non-abelian dim 2: [e1,e2]=e2", nonabelian2_lie),
    CatalogEntry("h3", "lie", "Heisenberg: [x,y]=z", heisenberg_lie),
    CatalogEntry("sl2", "lie", "sl2 (char not 2, 3)", sl2_lie),
    CatalogEntry("h3_plus_a1", "lie", "h3 + abelian line",
                 lambda f: direct_sum_lie(heisenberg_lie(f), abelian_lie(f, 1))),
]

_XMOD_ENTRIES = [
    CatalogEntry("zero", "xmod", "0 -> 0", zero_xmod),
    CatalogEntry("id_a1", "xmod", "identity on a_1",
                 lambda f: identity_xmod(abelian_lie(f, 1))),
    CatalogEntry("id_a2", "xmod", "identity on a_2",
                 lambda f: identity_xmod(abelian_lie(f, 2))),
    CatalogEntry("id_a3", "xmod", "identity on a_3",
                 lambda f: identity_xmod(abelian_lie(f, 3))),
    CatalogEntry("id_n2", "xmod", "identity on n2",
                 lambda f: identity_xmod(nonabelian2_lie(f))),
    CatalogEntry("id_h3", "xmod", "identity on h3",
                 lambda f: identity_xmod(heisenberg_lie(f))),
    CatalogEntry("id_sl2", "xmod", "identity on sl2",
                 lambda f: identity_xmod(sl2_lie(f))),
    CatalogEntry("id_h3_plus_a1", "xmod", "identity on h3 + a_1",
                 lambda f: identity_xmod(direct_sum_lie(heisenberg_lie(f),
                                                        abelian_lie(f, 1)))),
    CatalogEntry("inc_0_h3", "xmod", "0 included in h3",
                 lambda f: inclusion_xmod(heisenberg_lie(f), Subspace.zero(f, 3))),
    CatalogEntry("inc_z_h3", "xmod", "center line included in h3",
                 lambda f: inclusion_xmod(heisenberg_lie(f), _span(f, 3, (0, 0, 1)))),
    CatalogEntry("inc_yz_h3", "xmod", "span{y,z} included in h3",
                 lambda f: inclusion_xmod(heisenberg_lie(f),
                                          _span(f, 3, (0, 1, 0), (0, 0, 1)))),
    CatalogEntry("mod_trivial_a1", "xmod", "1-dim module over a_1, zero action",
                 _trivial_module_a1),
    CatalogEntry("mod_scaling_a1", "xmod", "1-dim module over a_1, scaling action",
                 _scaling_module_a1),
    CatalogEntry("mod_natural_n2", "xmod", "natural 2-dim module over n2",
                 _natural_module_n2),
    CatalogEntry("adj_a1", "xmod", "a_1 over its derivation algebra",
                 lambda f: adjoint_actor_xmod(abelian_lie(f, 1))),
    CatalogEntry("adj_h3", "xmod", "h3 over its derivation algebra",
                 lambda f: adjoint_actor_xmod(heisenberg_lie(f))),
    CatalogEntry("adj_sl2", "xmod", "sl2 over its derivation algebra",
                 lambda f: adjoint_actor_xmod(sl2_lie(f))),
    CatalogEntry("sum_id_h3_id_a1", "xmod", "id(h3) + id(a_1)",
                 lambda f: direct_sum_xmod(identity_xmod(heisenberg_lie(f)),
                                           identity_xmod(abelian_lie(f, 1)))),
    CatalogEntry("sum_id_h3_mod_trivial_a1", "xmod", "id(h3) + trivial module line",
                 lambda f: direct_sum_xmod(identity_xmod(heisenberg_lie(f)),
                                           _trivial_module_a1(f))),
]

_ENTRIES = {e.name: e for e in _LIE_ENTRIES + _XMOD_ENTRIES}
assert len(_ENTRIES) == len(_LIE_ENTRIES) + len(_XMOD_ENTRIES)


def catalog_names(kind: str | None = None) -> list[str]:
    entries = _LIE_ENTRIES + _XMOD_ENTRIES
    if kind is not None:
        entries = [e for e in entries if e.kind == kind]
    return [e.name for e in entries]


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog name: {name!r}") from None


def build_entry(name: str, field: FieldSpec = QQ) -> Value:
    return catalog_entry(name).build(field)


def supports_field(name: str, field: FieldSpec) -> bool:
    """sl2-based entries are unavailable in characteristic 2 and 3."""
    if field.characteristic in (2, 3):
        return "sl2" not in name
    return True


def xmod_entries(field: FieldSpec = QQ) -> list[tuple[str, CrossedModule]]:
    """All buildable crossed module entries over the field, in stable order."""
    return [(name, build_entry(name, field)) for name in catalog_names("xmod")
            if supports_field(name, field)]


def lie_entries(field: FieldSpec = QQ) -> list[tuple[str, LieAlgebra]]:
    return [(name, build_entry(name, field)) for name in catalog_names("lie")
            if supports_field(name, field)]
