import json

import pytest

from conftest import built
from hopfkit.errors import AntipodeAxiomFails, ParseError
from hopfkit.exact_linalg.cyclotomic import CycNumber
from hopfkit.exact_linalg.matrix import ExactMatrix
from hopfkit.serialize import (FORMAT_VERSION, dumps, loads, parse_algebra, parse_matrix, schema, validate)


@pytest.fixture(scope="module")
def taft_doc(taft3):
    return json.loads(dumps(taft3))


def _text(doc):
    return json.dumps(doc)


@pytest.mark.parametrize("name", ["taft", "uq_sl2", "group_dual", "taft_x_c3"])
def test_round_trip_is_byte_identical(name):
    text = dumps(built(name))
    assert dumps(loads(text)) == text
    assert text.endswith("}\n") and "\r" not in text


def test_document_layout(taft3):
    doc = json.loads(dumps(taft3))
    assert list(doc) == ["format_version", "field", "dim", "labels", "delta", "mu", "eps", "unit", "antipode"]
    assert doc["format_version"] == FORMAT_VERSION
    assert doc["field"] == {"cyclotomic_order": 3}
    assert doc["delta"] == sorted(doc["delta"])
    validate(doc)


def test_whitespace_does_not_matter(taft3, taft_doc):
    # any JSON spelling of the same document loads to the same algebra
    assert dumps(loads(json.dumps(taft_doc, indent=7))) == dumps(taft3)


def test_unknown_field_is_rejected(taft_doc):
    doc = dict(taft_doc, comment="x")
    with pytest.raises(ParseError, match="schema violation"):
        parse_algebra(_text(doc))


def test_missing_field_is_rejected(taft_doc):
    doc = dict(taft_doc)
    del doc["mu"]
    with pytest.raises(ParseError, match="mu"):
        parse_algebra(_text(doc))


def test_wrong_version(taft_doc):
    with pytest.raises(ParseError):
        parse_algebra(_text(dict(taft_doc, format_version="hopfkit/2")))


@pytest.mark.parametrize("bad", ["1/0", "z^", "abc", ""])
def test_bad_coefficient(taft_doc, bad):
    doc = json.loads(_text(taft_doc))
    doc["eps"][0] = bad
    with pytest.raises(ParseError):
        parse_algebra(_text(doc))


def test_duplicate_entries(taft_doc):
    doc = json.loads(_text(taft_doc))
    doc["mu"].append(doc["mu"][0])
    with pytest.raises(ParseError, match="duplicate"):
        parse_algebra(_text(doc))


def test_index_out_of_range(taft_doc):
    doc = json.loads(_text(taft_doc))
    doc["delta"].append([9, 0, 0, "1"])
    with pytest.raises(ParseError, match="out of range"):
        parse_algebra(_text(doc))


def test_length_mismatch(taft_doc):
    doc = json.loads(_text(taft_doc))
    doc["eps"] = doc["eps"][:-1]
    with pytest.raises(ParseError, match="eps"):
        parse_algebra(_text(doc))


def test_truncated_json(taft3):
    with pytest.raises(ParseError, match="not valid JSON"):
        loads(dumps(taft3)[:-20])


def test_parse_is_separate_from_axioms(taft_doc):
    doc = json.loads(_text(taft_doc))
    doc["antipode"][1][1] = "1"           # S(x) has a wrong diagonal entry now
    data = parse_algebra(_text(doc))      # parses fine
    with pytest.raises(AntipodeAxiomFails):
        data.build()


def test_matrix_document_round_trip():
    M = ExactMatrix.from_rows([[1, CycNumber.zeta(3)], [0, CycNumber.rational(-1, 3) / 2]], 3)
    text = dumps(M)
    assert json.loads(text)["kind"] == "matrix"
    assert parse_matrix(text) == M
    assert dumps(parse_matrix(text)) == text


def test_matrix_and_algebra_are_not_interchangeable(taft3):
    M = ExactMatrix.identity(2)
    with pytest.raises(ParseError):
        parse_matrix(dumps(taft3))
    with pytest.raises(ParseError):
        parse_algebra(dumps(M))


def test_report_documents_validate():
    validate({"format_version": FORMAT_VERSION, "kind": "catalog", "ok": True, "entries": [], "unseparated": []})
    with pytest.raises(ParseError):
        validate({"format_version": FORMAT_VERSION, "kind": "catalog", "ok": True})
    with pytest.raises(ParseError):
        validate({"format_version": FORMAT_VERSION, "kind": "bogus"})


def test_schema_is_draft_2020_12():
    assert schema()["$schema"].endswith("2020-12/schema")


def test_dumps_rejects_other_objects():
    with pytest.raises(TypeError):
        dumps(3)
