"""JSON document formats for every object that crosses the CLI boundary.

Scalars travel as strings ("a/b" reduced with positive denominator over the
rationals, decimal residues mod p), so documents contain no floats and diff
cleanly.  Emitters are canonical: sorted keys where order matters and only
nonzero brackets or action values listed.  Parsers never run axiom checks;
`validate` exists to report violations, so a document describing a broken
algebra must still parse.

Parse failures raise DocumentError carrying a JSON-path-style location."""

from __future__ import annotations

from typing import Optional, Union

from xlie.fields import PRIME, QQ, RATIONAL, FieldSpec, GF
from xlie.liealg import LieAlgebra
from xlie.linalg import Matrix
from xlie.xmod import CrossedModule

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Malformed document, annotated with the path of the offending value."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _expect_dict(doc, path: str) -> dict:
    if not isinstance(doc, dict):
        raise DocumentError(path, f"expected an object, got {type(doc).__name__}")
    return doc


def _expect_list(doc, path: str) -> list:
    if not isinstance(doc, list):
        raise DocumentError(path, f"expected an array, got {type(doc).__name__}")
    return doc


def _get(doc: dict, key: str, path: str):
    if key not in doc:
        raise DocumentError(path, f"missing key {key!r}")
    return doc[key]


def _expect_index(value, path: str, bound: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(path, f"expected an integer, got {value!r}")
    if not 0 <= value < bound:
        raise DocumentError(path, f"index {value} out of range [0, {bound})")
    return value


def parse_field(doc, path: str = "$.field") -> FieldSpec:
    _expect_dict(doc, path)
    kind = _get(doc, "kind", path)
    if kind == RATIONAL:
        return QQ
    if kind == PRIME:
        p = _get(doc, "p", path)
        if not isinstance(p, int) or isinstance(p, bool):
            raise DocumentError(f"{path}.p", f"expected an integer, got {p!r}")
        try:
            return GF(p)
        except ValueError as e:
            raise DocumentError(f"{path}.p", str(e)) from None
    raise DocumentError(f"{path}.kind",
                        f"expected {RATIONAL!r} or {PRIME!r}, got {kind!r}")


def emit_field(field: FieldSpec) -> dict:
    if field.p:
        return {"kind": PRIME, "p": field.p}
    return {"kind": RATIONAL}


def parse_scalar(field: FieldSpec, doc, path: str):
    try:
        return field.parse(doc)
    except ValueError as e:
        raise DocumentError(path, str(e)) from None


def parse_vector(field: FieldSpec, doc, length: int, path: str) -> tuple:
    _expect_list(doc, path)
    if len(doc) != length:
        raise DocumentError(path, f"expected {length} entries, got {len(doc)}")
    return tuple(parse_scalar(field, v, f"{path}[{k}]")
                 for k, v in enumerate(doc))


def parse_matrix(field: FieldSpec, doc, nrows: int, ncols: int,
                 path: str) -> Matrix:
    _expect_list(doc, path)
    if len(doc) != nrows:
        raise DocumentError(path, f"expected {nrows} rows, got {len(doc)}")
    rows = [parse_vector(field, row, ncols, f"{path}[{r}]")
            for r, row in enumerate(doc)]
    return Matrix(field, rows, ncols=ncols)


def emit_matrix(field: FieldSpec, m: Matrix) -> list:
    return [[field.format(v) for v in row] for row in m.rows]


def emit_vector(field: FieldSpec, v) -> list:
    return [field.format(x) for x in v]


def _parse_coeff_triples(field: FieldSpec, doc, rows: int, cols: int,
                         width: int, path: str, what: str) -> dict:
    """[[i, j, [coeffs]]] entries into a {(i, j): vector} map."""
    _expect_list(doc, path)
    out = {}
    for k, item in enumerate(doc):
        here = f"{path}[{k}]"
        _expect_list(item, here)
        if len(item) != 3:
            raise DocumentError(here, f"expected [i, j, coeffs], got {len(item)} entries")
        i = _expect_index(item[0], f"{here}[0]", rows)
        j = _expect_index(item[1], f"{here}[1]", cols)
        if (i, j) in out:
            raise DocumentError(here, f"duplicate {what} ({i}, {j})")
        out[(i, j)] = parse_vector(field, item[2], width, f"{here}[2]")
    return out


def parse_lie(doc, path: str = "$") -> LieAlgebra:
    _expect_dict(doc, path)
    dim = _get(doc, "dim", path)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise DocumentError(f"{path}.dim", f"expected a non-negative integer, got {dim!r}")
    field = parse_field(_get(doc, "field", path), f"{path}.field")
    triples = _parse_coeff_triples(field, _get(doc, "brackets", path),
                                   dim, dim, dim, f"{path}.brackets", "bracket")
    for k, (i, j) in enumerate(triples):
        if i >= j:
            raise DocumentError(f"{path}.brackets", f"bracket ({i}, {j}) needs i < j")
    return LieAlgebra.from_brackets(field, dim, triples, check=False)


def emit_lie(g: LieAlgebra) -> dict:
    zero = (g.field.zero(),) * g.dim
    brackets = [[i, j, emit_vector(g.field, g.structure[i][j])]
                for i in range(g.dim) for j in range(i + 1, g.dim)
                if tuple(g.structure[i][j]) != zero]
    return {"dim": g.dim, "field": emit_field(g.field), "brackets": brackets}


def parse_xmod(doc, path: str = "$") -> CrossedModule:
    _expect_dict(doc, path)
    field = parse_field(_get(doc, "field", path), f"{path}.field")
    l1 = parse_lie(_get(doc, "L1", path), f"{path}.L1")
    l0 = parse_lie(_get(doc, "L0", path), f"{path}.L0")
    if l1.field != field or l0.field != field:
        raise DocumentError(f"{path}.field", "degree fields disagree with the document field")
    boundary = parse_matrix(field, _get(doc, "d", path), l0.dim, l1.dim,
                            f"{path}.d")
    triples = _parse_coeff_triples(field, _get(doc, "action", path),
                                   l0.dim, l1.dim, l1.dim,
                                   f"{path}.action", "action value")
    zero = tuple(field.zero() for _ in range(l1.dim))
    action = [[triples.get((i, j), zero) for j in range(l1.dim)]
              for i in range(l0.dim)]
    return CrossedModule(l1, l0, boundary, action)


def emit_xmod(x: CrossedModule) -> dict:
    field = x.field
    zero = (field.zero(),) * x.n1
    action = [[i, j, emit_vector(field, x.action[i][j])]
              for i in range(x.n0) for j in range(x.n1)
              if tuple(x.action[i][j]) != zero]
    return {"field": emit_field(field), "L1": emit_lie(x.l1),
            "L0": emit_lie(x.l0), "d": emit_matrix(field, x.boundary),
            "action": action}


def parse_document(doc, path: str = "$") -> Union[LieAlgebra, CrossedModule]:
    """Dispatch on shape: crossed-module documents carry L1/L0/d."""
    _expect_dict(doc, path)
    if "d" in doc or "L1" in doc or "L0" in doc:
        return parse_xmod(doc, path)
    if "brackets" in doc:
        return parse_lie(doc, path)
    raise DocumentError(path, "neither a crossed-module nor a Lie-algebra document")


def parse_witness_matrices(doc, shapes: dict, path: str = "$") -> tuple:
    """The four witness matrices against expected shapes {name: (rows, cols)}.

    The verified flag in the document is informational; verification is
    always re-run on parse-side objects."""
    _expect_dict(doc, path)
    field = shapes["field"]
    out = []
    for name in ("eta1", "eta0", "xi1", "xi0"):
        rows, cols = shapes[name]
        out.append(parse_matrix(field, _get(doc, name, path), rows, cols,
                                f"{path}.{name}"))
    return tuple(out)


def emit_witness(w) -> dict:
    field = w.source.field
    return {"eta1": emit_matrix(field, w.eta.alpha),
            "eta0": emit_matrix(field, w.eta.beta),
            "xi1": emit_matrix(field, w.xi.alpha),
            "xi0": emit_matrix(field, w.xi.beta),
            "verified": bool(w.verified)}


def emit_verdict(status: str, detail: str = "") -> dict:
    return {"status": status, "detail": detail}


def emit_subspace(field: FieldSpec, space) -> list:
    """A subspace as its canonical basis, row vectors."""
    return emit_matrix(field, space.basis)


def emit_violations(report) -> list:
    return [{"law": v.law, "at": list(v.at) if isinstance(v.at, tuple) else v.at,
             "detail": v.detail} for v in report.violations]
