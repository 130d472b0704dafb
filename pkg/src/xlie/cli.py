"""Command-line front end: exact-scalar JSON in, one JSON report out.

Each invocation prints a single report to standard output carrying the
schema version, the command, sha256 hashes of every input document, the
verdicts, the serialized result objects, and the wall time.  Exit codes:
0 success or verified, 1 verified negative (axioms violated, witness
rejected, not isoclinic), 2 usage or document error, 3 search budget
exhausted.

Inputs are validated before analysis: a document that fails its axiom
checks yields a violation verdict rather than feeding garbage downstream.
The total-dimension safety rail XLIE_MAX_DIM (default 12) applies to every
parsed document.  Nothing is written to disk unless --out is given."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional

from xlie import derivations as der_mod
from xlie.catalog import build_entry, catalog_entry, catalog_names, supports_field
from xlie.documents import (
    SCHEMA_VERSION,
    DocumentError,
    emit_lie,
    emit_matrix,
    emit_subspace,
    emit_verdict,
    emit_violations,
    emit_witness,
    emit_xmod,
    parse_document,
    parse_witness_matrices,
    parse_xmod,
)
from xlie.fields import GF, QQ
from xlie.isoclinism import fingerprint, iso_context, isoclinism_verify
from xlie.liealg import LieAlgebra, validate_lie
from xlie.search import (
    BUDGET_EXHAUSTED,
    NOT_ISOCLINIC,
    VERIFIED,
    isoclinism_search,
)
from xlie.xmod import (
    DERIVED,
    LOWER_CENTRAL,
    CrossedModule,
    center_xmod,
    commutator_xmod,
    quotient_xmod,
    restrict_to_sub,
    validate_xmod,
    xmod_series,
)

DEFAULT_MAX_DIM = 12

_SERIES_KINDS = {"lc": LOWER_CENTRAL, "derived": DERIVED}
_DER_KINDS = {
    "whitehead": der_mod.whitehead_derivations,
    "xmod": der_mod.xmod_derivations,
    "whitehead-class": der_mod.class_preserving_whitehead,
    "xmod-class": der_mod.class_preserving_xmod,
}

OK, NEGATIVE, USAGE, EXHAUSTED = 0, 1, 2, 3


class CliError(Exception):
    """Fatal usage or document problem; message goes to stderr."""

    def __init__(self, message: str, exit_code: int = USAGE):
        super().__init__(message)
        self.exit_code = exit_code


def _max_total_dim() -> int:
    raw = os.environ.get("XLIE_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"XLIE_MAX_DIM must be an integer, got {raw!r}") from None
    if cap < 0:
        raise CliError(f"XLIE_MAX_DIM must be non-negative, got {cap}")
    return cap


def _load_json(path: str, role: str, hashes: dict):
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise CliError(f"{role}: cannot read {path}: {e.strerror}") from None
    hashes[role] = "sha256:" + hashlib.sha256(raw).hexdigest()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise CliError(
            f"{role}: {path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _check_cap(obj, role: str) -> None:
    cap = _max_total_dim()
    total = obj.dim if isinstance(obj, LieAlgebra) else obj.n1 + obj.n0
    if total > cap:
        raise CliError(f"{role}: total dimension {total} exceeds "
                       f"XLIE_MAX_DIM = {cap}")


def _load_document(path: str, role: str, hashes: dict):
    doc = _load_json(path, role, hashes)
    try:
        obj = parse_document(doc)
    except DocumentError as e:
        raise CliError(f"{role}: {path}: {e}") from None
    _check_cap(obj, role)
    return obj


def _load_xmod(path: str, role: str, hashes: dict) -> CrossedModule:
    doc = _load_json(path, role, hashes)
    try:
        x = parse_xmod(doc)
    except DocumentError as e:
        raise CliError(f"{role}: {path}: {e}") from None
    _check_cap(x, role)
    return x


def _invalid_input(role: str, report):
    verdict = emit_verdict("violated", f"{role} fails axiom checks")
    return NEGATIVE, {"validate": verdict}, {"violations": emit_violations(report)}


def _checked_xmod(path: str, role: str, hashes: dict):
    """A crossed module, or an early negative result when axioms fail."""
    x = _load_xmod(path, role, hashes)
    report = validate_xmod(x)
    if not report.ok:
        return x, _invalid_input(role, report)
    return x, None


def _emit_subxmod(sub) -> dict:
    field = sub.parent.field
    return {"degree1": emit_subspace(field, sub.s1),
            "degree0": emit_subspace(field, sub.s0)}


def _cmd_validate(args, hashes):
    obj = _load_document(args.x, "x", hashes)
    report = validate_lie(obj) if isinstance(obj, LieAlgebra) else validate_xmod(obj)
    status = "verified" if report.ok else "violated"
    code = OK if report.ok else NEGATIVE
    return code, {"validate": emit_verdict(status, report.summary())}, \
        {"violations": emit_violations(report)}


def _cmd_center(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    return OK, {}, {"center": _emit_subxmod(center_xmod(x))}


def _cmd_commutator(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    sub = commutator_xmod(x)
    restriction = restrict_to_sub(x, sub)
    return OK, {}, {"commutator": _emit_subxmod(sub),
                    "module": emit_xmod(restriction.module)}


def _cmd_series(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    series = xmod_series(x, _SERIES_KINDS[args.kind])
    terms = [_emit_subxmod(t) for t in series.terms]
    return OK, {}, {"series": {"kind": series.kind, "terms": terms,
                               "terminates": series.terminates,
                               "class_or_length": series.class_or_length}}


def _emit_derivation_space(space) -> dict:
    field = space.parent.field
    basis = []
    for d in space.basis:
        if isinstance(d, der_mod.WhiteheadDerivation):
            basis.append(emit_matrix(field, d.matrix))
        else:
            basis.append([emit_matrix(field, d.alpha), emit_matrix(field, d.beta)])
    return {"kind": space.kind, "dim": space.dim, "basis": basis,
            "structure": emit_lie(space.abstract)}


def _cmd_der(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    space = _DER_KINDS[args.kind](x)
    return OK, {}, {"derivations": _emit_derivation_space(space)}


def _cmd_actor(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    if args.inner:
        sub = der_mod.inner_actor(x)
        restriction = restrict_to_sub(sub.parent, sub)
        return OK, {}, {"inner": _emit_subxmod(sub),
                        "module": emit_xmod(restriction.module)}
    builder = der_mod.class_actor if args.class_ else der_mod.actor
    return OK, {}, {"actor": emit_xmod(builder(x))}


def _cmd_quotient(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    quotient = quotient_xmod(x, center_xmod(x))
    return OK, {}, {"quotient": emit_xmod(quotient.module)}


def _cmd_fingerprint(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    fp = fingerprint(x)
    return OK, {}, {"fingerprint": {"recorded": list(fp.recorded),
                                    "invariant": list(fp.invariant)}}


def _witness_shapes(cx, cy) -> dict:
    return {"field": cx.parent.field,
            "eta1": (cy.quotient.q1.dim, cx.quotient.q1.dim),
            "eta0": (cy.quotient.q0.dim, cx.quotient.q0.dim),
            "xi1": (cy.commutator.module.n1, cx.commutator.module.n1),
            "xi0": (cy.commutator.module.n0, cx.commutator.module.n0)}


def _cmd_isoclinic_verify(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    y, bad = _checked_xmod(args.y, "y", hashes)
    if bad:
        return bad
    if x.field != y.field:
        raise CliError("x and y live over different fields")
    doc = _load_json(args.w, "w", hashes)
    cx, cy = iso_context(x), iso_context(y)
    try:
        eta1, eta0, xi1, xi0 = parse_witness_matrices(doc, _witness_shapes(cx, cy))
    except DocumentError as e:
        raise CliError(f"w: {args.w}: {e}") from None
    witness, report = isoclinism_verify(x, y, eta1, eta0, xi1, xi0, cx, cy)
    if witness is None:
        return NEGATIVE, {"isoclinic": emit_verdict("violated", report.summary())}, \
            {"violations": emit_violations(report)}
    return OK, {"isoclinic": emit_verdict("verified", "")}, \
        {"witness": emit_witness(witness)}


def _cmd_isoclinic_search(args, hashes):
    x, bad = _checked_xmod(args.x, "x", hashes)
    if bad:
        return bad
    y, bad = _checked_xmod(args.y, "y", hashes)
    if bad:
        return bad
    if args.jobs < 1:
        raise CliError(f"--jobs must be at least 1, got {args.jobs}")
    try:
        result = isoclinism_search(x, y, args.budget)
    except ValueError as e:
        raise CliError(str(e)) from None
    verdict = emit_verdict(result.status, result.detail)
    objects = {"nodes": result.nodes}
    if result.status == VERIFIED:
        objects["witness"] = emit_witness(result.witness)
        return OK, {"isoclinic": verdict}, objects
    if result.status == NOT_ISOCLINIC:
        return NEGATIVE, {"isoclinic": verdict}, objects
    assert result.status == BUDGET_EXHAUSTED
    return EXHAUSTED, {"isoclinic": verdict}, objects


def _parse_field_flag(raw: str):
    if raw == "Q":
        return QQ
    text = raw[2:] if raw.startswith("F_") else raw
    try:
        return GF(int(text))
    except ValueError as e:
        raise CliError(f"--field: {e}") from None


def _cmd_catalog_list(args, hashes):
    entries = [{"name": name, "kind": catalog_entry(name).kind,
                "description": catalog_entry(name).description}
               for name in catalog_names()]
    return OK, {}, {"entries": entries}


def _cmd_catalog_emit(args, hashes):
    field = _parse_field_flag(args.field)
    try:
        catalog_entry(args.name)
    except KeyError as e:
        raise CliError(str(e.args[0])) from None
    if not supports_field(args.name, field):
        raise CliError(f"{args.name} is not defined over {field}")
    built = build_entry(args.name, field)
    doc = emit_lie(built) if isinstance(built, LieAlgebra) else emit_xmod(built)
    return OK, {}, {"name": args.name, "document": doc}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xlie",
        description="Crossed modules of Lie algebras: exact analyses and "
                    "isoclinism checks over Q and F_p.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH",
                        help="also write the report to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, parents=[common], **kwargs)
        p.set_defaults(handler=handler, command_path=name)
        return p

    p = add("validate", _cmd_validate, help="check axioms of a document")
    p.add_argument("x")

    for name, handler in (("center", _cmd_center),
                          ("commutator", _cmd_commutator),
                          ("fingerprint", _cmd_fingerprint)):
        p = add(name, handler, help=f"compute the {name}")
        p.add_argument("x")

    p = add("series", _cmd_series, help="lower central or derived series")
    p.add_argument("x")
    p.add_argument("--kind", choices=sorted(_SERIES_KINDS), required=True)

    p = add("der", _cmd_der, help="derivation spaces of all four kinds")
    p.add_argument("x")
    p.add_argument("--kind", choices=sorted(_DER_KINDS), required=True)

    p = add("actor", _cmd_actor, help="actor crossed module")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--class", dest="class_", action="store_true",
                       help="class-preserving actor")
    group.add_argument("--inner", action="store_true",
                       help="inner actor inside the class-preserving one")
    p.add_argument("x")

    p = add("quotient", _cmd_quotient, help="quotient by a central ideal")
    p.add_argument("x")
    p.add_argument("--by", choices=["center"], required=True)

    iso = sub.add_parser("isoclinic", help="verify or search for isoclinisms")
    iso_sub = iso.add_subparsers(dest="subcommand", required=True)
    p = iso_sub.add_parser("verify", parents=[common],
                           help="check a witness document")
    p.set_defaults(handler=_cmd_isoclinic_verify, command_path="isoclinic verify")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("w")
    p = iso_sub.add_parser("search", parents=[common],
                           help="exhaustive search over a finite field")
    p.set_defaults(handler=_cmd_isoclinic_search, command_path="isoclinic search")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--budget", type=int, default=10**6,
                   help="column assignments to try before giving up")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker bound; results are identical for every value")

    cat = sub.add_parser("catalog", help="built-in example families")
    cat_sub = cat.add_subparsers(dest="subcommand", required=True)
    p = cat_sub.add_parser("list", parents=[common], help="name every entry")
    p.set_defaults(handler=_cmd_catalog_list, command_path="catalog list")
    p = cat_sub.add_parser("emit", parents=[common],
                           help="emit one entry as a document")
    p.set_defaults(handler=_cmd_catalog_emit, command_path="catalog emit")
    p.add_argument("name")
    p.add_argument("--field", default="Q",
                   help="Q (default) or a prime p / F_p")
    return parser


def run(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else 0
    start = time.monotonic()
    hashes: dict = {}
    try:
        code, verdicts, objects = args.handler(args, hashes)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    report = {"schema": SCHEMA_VERSION,
              "command": args.command_path,
              "inputs": hashes,
              "verdicts": verdicts,
              "objects": objects,
              "wall_time_ms": int((time.monotonic() - start) * 1000)}
    text = json.dumps(report, indent=2)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
