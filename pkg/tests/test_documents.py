import json

import pytest
from hypothesis import given

from xlie.documents import (
    DocumentError,
    emit_field,
    emit_lie,
    emit_matrix,
    emit_verdict,
    emit_violations,
    emit_witness,
    emit_xmod,
    parse_document,
    parse_field,
    parse_lie,
    parse_matrix,
    parse_witness_matrices,
    parse_xmod,
)
from xlie.catalog import build_entry, lie_entries, xmod_entries
from xlie.fields import GF, QQ
from xlie.isoclinism import iso_context, split_center_isoclinism
from xlie.liealg import LieAlgebra, validate_lie
from xlie.linalg import Matrix, Subspace
from xlie.xmod import SubXMod, validate_xmod

from tests.strategies import FIELDS, matrices


def through_json(doc):
    """Emitted documents must survive a real serialization cycle."""
    return json.loads(json.dumps(doc))


class TestFieldDocuments:
    def test_round_trip(self):
        for field in FIELDS:
            assert parse_field(through_json(emit_field(field))) == field

    def test_rational_has_no_p(self):
        assert emit_field(QQ) == {"kind": "Rational"}

    def test_prime_carries_p(self):
        assert emit_field(GF(7)) == {"kind": "Prime", "p": 7}

    def test_unknown_kind_rejected(self):
        with pytest.raises(DocumentError) as e:
            parse_field({"kind": "Real"})
        assert e.value.path == "$.field.kind"

    def test_missing_kind_rejected(self):
        with pytest.raises(DocumentError, match="missing key 'kind'"):
            parse_field({})

    def test_composite_p_rejected(self):
        with pytest.raises(DocumentError) as e:
            parse_field({"kind": "Prime", "p": 6})
        assert e.value.path == "$.field.p"

    def test_bool_p_rejected(self):
        with pytest.raises(DocumentError):
            parse_field({"kind": "Prime", "p": True})

    def test_non_dict_rejected(self):
        with pytest.raises(DocumentError, match="expected an object"):
            parse_field(["Rational"])


class TestMatrixDocuments:
    @given(matrices())
    def test_round_trip(self, m):
        doc = through_json(emit_matrix(m.field, m))
        back = parse_matrix(m.field, doc, m.nrows, m.ncols, "$")
        assert back == m

    def test_entries_are_strings(self):
        doc = emit_matrix(QQ, Matrix(QQ, [["1/2", -3]], ncols=2))
        assert doc == [["1/2", "-3"]]

    def test_row_count_checked(self):
        with pytest.raises(DocumentError, match="expected 2 rows, got 1"):
            parse_matrix(QQ, [["0", "0"]], 2, 2, "$.d")

    def test_column_count_checked(self):
        with pytest.raises(DocumentError) as e:
            parse_matrix(QQ, [["0"], ["0", "1"]], 2, 2, "$.d")
        assert e.value.path == "$.d[0]"

    def test_bad_scalar_locates_entry(self):
        with pytest.raises(DocumentError) as e:
            parse_matrix(GF(5), [["0", "x"]], 1, 2, "$.d")
        assert e.value.path == "$.d[0][1]"


class TestLieDocuments:
    def test_round_trip_every_entry(self):
        for field in FIELDS:
            for name, g in lie_entries(field):
                assert parse_lie(through_json(emit_lie(g))) == g, name

    def test_abelian_emits_no_brackets(self):
        assert emit_lie(build_entry("a_3"))["brackets"] == []

    def test_zero_brackets_omitted(self):
        doc = emit_lie(build_entry("h3"))
        assert doc["brackets"] == [[0, 1, ["0", "0", "1"]]]

    def test_unlisted_brackets_default_to_zero(self):
        doc = {"dim": 2, "field": {"kind": "Rational"}, "brackets": []}
        g = parse_lie(doc)
        assert all(not any(v) for row in g.structure for v in row)

    def test_lower_triangle_rejected(self):
        doc = {"dim": 2, "field": {"kind": "Rational"},
               "brackets": [[1, 0, ["0", "1"]]]}
        with pytest.raises(DocumentError, match="needs i < j"):
            parse_lie(doc)

    def test_duplicate_bracket_rejected(self):
        doc = {"dim": 2, "field": {"kind": "Rational"},
               "brackets": [[0, 1, ["0", "1"]], [0, 1, ["0", "2"]]]}
        with pytest.raises(DocumentError, match="duplicate bracket"):
            parse_lie(doc)

    def test_index_out_of_range(self):
        doc = {"dim": 2, "field": {"kind": "Rational"},
               "brackets": [[0, 2, ["0", "1"]]]}
        with pytest.raises(DocumentError) as e:
            parse_lie(doc)
        assert e.value.path == "$.brackets[0][1]"

    def test_negative_dim_rejected(self):
        with pytest.raises(DocumentError) as e:
            parse_lie({"dim": -1, "field": {"kind": "Rational"}, "brackets": []})
        assert e.value.path == "$.dim"

    def test_parsing_skips_axiom_checks(self):
        # Violates Jacobi; the document must still parse so that the
        # validate command can report what is wrong.
        doc = {"dim": 3, "field": {"kind": "Rational"},
               "brackets": [[0, 1, ["0", "1", "0"]], [0, 2, ["0", "0", "1"]],
                            [1, 2, ["1", "0", "0"]]]}
        g = parse_lie(doc)
        assert not validate_lie(g).ok


class TestXModDocuments:
    def test_round_trip_every_entry(self):
        for field in FIELDS:
            for name, x in xmod_entries(field):
                assert parse_xmod(through_json(emit_xmod(x))) == x, name

    def test_zero_action_values_omitted(self):
        doc = emit_xmod(build_entry("mod_trivial_a1"))
        assert doc["action"] == []

    def test_degree_field_mismatch_rejected(self):
        doc = emit_xmod(build_entry("id_h3"))
        doc["L1"]["field"] = {"kind": "Prime", "p": 5}
        with pytest.raises(DocumentError) as e:
            parse_xmod(doc)
        assert e.value.path == "$.field"

    def test_boundary_shape_is_n0_by_n1(self):
        doc = emit_xmod(build_entry("inc_z_h3"))
        assert len(doc["d"]) == 3 and len(doc["d"][0]) == 1

    def test_duplicate_action_value_rejected(self):
        doc = emit_xmod(build_entry("id_h3"))
        doc["action"] = doc["action"] + [doc["action"][0]]
        with pytest.raises(DocumentError, match="duplicate action value"):
            parse_xmod(doc)

    def test_missing_key_named(self):
        doc = emit_xmod(build_entry("id_a1"))
        del doc["d"]
        with pytest.raises(DocumentError, match="missing key 'd'"):
            parse_xmod(doc)

    def test_parsing_skips_axiom_checks(self):
        doc = emit_xmod(build_entry("id_h3"))
        doc["action"] = [[0, 2, ["7", "0", "0"]]] + doc["action"][1:]
        x = parse_xmod(doc)
        assert not validate_xmod(x).ok


class TestDocumentDispatch:
    def test_xmod_keys_win(self):
        doc = emit_xmod(build_entry("id_n2"))
        assert parse_document(doc) == build_entry("id_n2")

    def test_lie_keys(self):
        assert isinstance(parse_document(emit_lie(build_entry("sl2"))),
                          LieAlgebra)

    def test_neither_shape_rejected(self):
        with pytest.raises(DocumentError, match="neither a crossed-module"):
            parse_document({"field": {"kind": "Rational"}})

    def test_error_reports_str_and_attrs(self):
        with pytest.raises(DocumentError) as e:
            parse_document([])
        assert str(e.value) == "$: expected an object, got list"
        assert e.value.path == "$" and e.value.message.startswith("expected")


def split_witness(field):
    x = build_entry("sum_id_h3_mod_trivial_a1", field)
    span = [[1 if i == j else 0 for i in range(4)] for j in range(3)]
    sub = SubXMod.build(x, Subspace(field, 4, span), Subspace(field, 4, span))
    return split_center_isoclinism(x, sub)


class TestWitnessDocuments:
    def test_round_trip(self):
        w = split_witness(GF(3))
        cx, cy = iso_context(w.source), iso_context(w.target)
        shapes = {"field": GF(3),
                  "eta1": (cy.quotient.q1.dim, cx.quotient.q1.dim),
                  "eta0": (cy.quotient.q0.dim, cx.quotient.q0.dim),
                  "xi1": (cy.commutator.module.n1, cx.commutator.module.n1),
                  "xi0": (cy.commutator.module.n0, cx.commutator.module.n0)}
        doc = through_json(emit_witness(w))
        eta1, eta0, xi1, xi0 = parse_witness_matrices(doc, shapes)
        assert (eta1, eta0) == (w.eta.alpha, w.eta.beta)
        assert (xi1, xi0) == (w.xi.alpha, w.xi.beta)

    def test_emits_verified_flag(self):
        doc = emit_witness(split_witness(QQ))
        assert doc["verified"] is True
        assert set(doc) == {"eta1", "eta0", "xi1", "xi0", "verified"}

    def test_shape_mismatch_rejected(self):
        doc = emit_witness(split_witness(GF(3)))
        shapes = {"field": GF(3), "eta1": (5, 5), "eta0": (2, 2),
                  "xi1": (1, 1), "xi0": (1, 1)}
        with pytest.raises(DocumentError) as e:
            parse_witness_matrices(doc, shapes)
        assert e.value.path == "$.eta1"

    def test_missing_matrix_rejected(self):
        doc = emit_witness(split_witness(GF(3)))
        del doc["xi0"]
        shapes = {"field": GF(3), "eta1": (2, 2), "eta0": (2, 2),
                  "xi1": (1, 1), "xi0": (1, 1)}
        with pytest.raises(DocumentError, match="missing key 'xi0'"):
            parse_witness_matrices(doc, shapes)


class TestReportPieces:
    def test_verdict_shape(self):
        assert emit_verdict("verified") == {"status": "verified", "detail": ""}

    def test_violations_list(self):
        doc = emit_xmod(build_entry("id_h3"))
        doc["action"] = [[0, 2, ["7", "0", "0"]]] + doc["action"][1:]
        report = validate_xmod(parse_xmod(doc))
        emitted = emit_violations(report)
        assert emitted and all({"law", "at", "detail"} == set(v) for v in emitted)
        assert through_json(emitted) == emitted
