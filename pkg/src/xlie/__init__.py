"""Crossed modules of Lie algebras over exact fields.

Structure-constant representations of Lie algebras and crossed modules,
with centers, commutator subcrossed modules, derivation algebras, actors,
class-preserving actors, and isoclinism verification and search.

The headline API is re-exported here; everything else lives in the
submodules (``xlie.linalg``, ``xlie.documents``, ...).
"""

from xlie.catalog import build_entry, catalog_names
from xlie.derivations import (
    actor,
    class_actor,
    class_preserving_whitehead,
    class_preserving_xmod,
    inner_actor,
    whitehead_derivations,
    xmod_derivations,
)
from xlie.fields import GF, QQ, FieldSpec
from xlie.isoclinism import (
    fingerprint,
    fingerprints_match,
    identity_isoclinism,
    iso_context,
    isoclinism_compose,
    isoclinism_invert,
    isoclinism_verify,
    lift_lie_isoclinism,
    split_center_isoclinism,
)
from xlie.liealg import (
    LieAlgebra,
    LieHom,
    center,
    derived_subalgebra,
    direct_sum_lie,
    validate_lie,
)
from xlie.linalg import Matrix, Subspace
from xlie.search import (
    DEFAULT_BUDGET,
    SearchResult,
    derc_dimension_transport_check,
    isoclinism_search,
    lie_isomorphism_search,
    xmod_isomorphism_search,
)
from xlie.validation import StructureError, ValidationReport, Violation
from xlie.xmod import (
    CrossedModule,
    SubXMod,
    XModMorphism,
    center_xmod,
    commutator_xmod,
    direct_sum_xmod,
    displacement,
    fixed_points,
    quotient_xmod,
    restrict_to_sub,
    stabilizer,
    validate_xmod,
    xmod_series,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "FieldSpec",
    "Matrix",
    "Subspace",
    "StructureError",
    "ValidationReport",
    "Violation",
    "LieAlgebra",
    "LieHom",
    "center",
    "derived_subalgebra",
    "direct_sum_lie",
    "validate_lie",
    "CrossedModule",
    "SubXMod",
    "XModMorphism",
    "center_xmod",
    "commutator_xmod",
    "direct_sum_xmod",
    "displacement",
    "fixed_points",
    "quotient_xmod",
    "restrict_to_sub",
    "stabilizer",
    "validate_xmod",
    "xmod_series",
    "actor",
    "class_actor",
    "class_preserving_whitehead",
    "class_preserving_xmod",
    "inner_actor",
    "whitehead_derivations",
    "xmod_derivations",
    "fingerprint",
    "fingerprints_match",
    "identity_isoclinism",
    "iso_context",
    "isoclinism_compose",
    "isoclinism_invert",
    "isoclinism_verify",
    "lift_lie_isoclinism",
    "split_center_isoclinism",
    "DEFAULT_BUDGET",
    "SearchResult",
    "derc_dimension_transport_check",
    "isoclinism_search",
    "lie_isomorphism_search",
    "xmod_isomorphism_search",
    "build_entry",
    "catalog_names",
    "__version__",
]
