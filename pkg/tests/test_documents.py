import json

import pytest

from grpd.documents import (
    Report,
    bihom_from_doc,
    bihom_to_doc,
    dump_document,
    groupoid_to_doc,
    hom_from_doc,
    hom_to_doc,
    norm_from_doc,
    norm_to_doc,
    parse_document,
    partition_from_doc,
    partition_to_doc,
    raw_groupoid_from_doc,
)
from grpd.errors import ParseError, SchemaError
from grpd.groupoid import validate_groupoid
from grpd.homs import congruence_from_hom
from grpd.norm import norm_from_sip
from grpd.sip import sip_from_thetas


def rebuild(groupoid):
    return validate_groupoid(raw_groupoid_from_doc(groupoid_to_doc(groupoid)))


def test_groupoid_document_round_trip(p2, a3, c4):
    for groupoid, _ in (p2, a3, c4):
        rebuilt = rebuild(groupoid)
        assert rebuilt.object_labels == groupoid.object_labels
        assert rebuilt.arrow_labels == groupoid.arrow_labels
        assert rebuilt.compose_table == groupoid.compose_table
        assert rebuilt.inverse == groupoid.inverse
        assert rebuilt.identity == groupoid.identity


def test_parse_serialize_parse_is_identity(p5):
    doc = groupoid_to_doc(p5[0])
    kind, payload = parse_document(dump_document(doc))
    assert kind == "groupoid" and payload == doc
    assert dump_document(payload) == dump_document(doc)


def test_parse_document_sniffing(p2):
    groupoid, homs = p2
    assert parse_document(dump_document(groupoid_to_doc(groupoid)))[0] == "groupoid"
    assert parse_document(dump_document(hom_to_doc(homs["theta"])))[0] == "hom"
    partition = congruence_from_hom(homs["theta"])
    assert (
        parse_document(dump_document(partition_to_doc(groupoid, partition)))[0]
        == "partition"
    )
    bihom = sip_from_thetas(groupoid, [homs["theta"]])
    assert parse_document(dump_document(bihom_to_doc(bihom)))[0] == "bihom"
    assert (
        parse_document(dump_document(norm_to_doc(norm_from_sip(bihom))))[0] == "norm"
    )
    with pytest.raises(SchemaError):
        parse_document("{\"nonsense\": 1}")
    with pytest.raises(SchemaError):
        parse_document("[1, 2]")


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_document("{\n  \"objects\": [,]\n}")
    assert err.value.line == 2


def test_empty_objects_rejected():
    with pytest.raises(SchemaError) as err:
        raw_groupoid_from_doc({"objects": [], "arrows": [], "compose": []})
    assert err.value.path == "objects"
    assert "nonempty" in str(err.value)


def test_non_composable_triple_rejected(p2):
    doc = groupoid_to_doc(p2[0])
    doc["compose"] = [["(0,1)", "(0,1)", "e0"]] + doc["compose"]
    with pytest.raises(SchemaError) as err:
        raw_groupoid_from_doc(doc)
    assert err.value.path == "compose[0]"


def test_unknown_labels_rejected(p2):
    doc = groupoid_to_doc(p2[0])
    doc["arrows"][0] = {"id": "e0", "src": "9", "dst": "0"}
    with pytest.raises(SchemaError):
        raw_groupoid_from_doc(doc)

    doc = groupoid_to_doc(p2[0])
    doc["compose"][0] = ["ghost", "e0", "e0"]
    with pytest.raises(SchemaError):
        raw_groupoid_from_doc(doc)


def test_hom_document_round_trip(p2, a3, c4):
    for groupoid, homs in (p2, a3, c4):
        for hom in homs.values():
            rebuilt = hom_from_doc(groupoid, hom_to_doc(hom))
            assert rebuilt.values == hom.values
            assert rebuilt.target == hom.target


def test_hom_document_schema_errors(p2):
    groupoid, _ = p2
    with pytest.raises(SchemaError):
        hom_from_doc(groupoid, {"target": [], "map": {}})
    with pytest.raises(SchemaError):
        hom_from_doc(groupoid, {"target": ["R"], "map": {}})
    with pytest.raises(SchemaError):
        hom_from_doc(groupoid, {"target": [{"mod": 1}], "map": {}})
    with pytest.raises(SchemaError):
        hom_from_doc(
            groupoid,
            {"target": ["Z"], "map": {label: [0, 0] for label in groupoid.arrow_labels}},
        )
    with pytest.raises(SchemaError):
        hom_from_doc(
            groupoid,
            {"target": ["Q"], "map": {label: ["x"] for label in groupoid.arrow_labels}},
        )


def test_partition_document_round_trip(p5):
    groupoid, homs = p5
    partition = congruence_from_hom(homs["theta"])
    rebuilt = partition_from_doc(groupoid, partition_to_doc(groupoid, partition))
    assert rebuilt == partition


def test_partition_document_must_cover(p2):
    groupoid, _ = p2
    with pytest.raises(SchemaError) as err:
        partition_from_doc(groupoid, {"classes": [["e0", "e1"]]})
    assert err.value.path == "classes"
    with pytest.raises(SchemaError):
        partition_from_doc(groupoid, {"classes": [["e0", "e0"], ["e1", "(0,1)", "(1,0)"]]})


def test_bihom_document_variants(p2, p2_sip):
    groupoid, homs = p2
    from_table = bihom_from_doc(groupoid, bihom_to_doc(p2_sip))
    assert from_table.table == p2_sip.table

    thetas_doc = {"thetas": [hom_to_doc(homs["theta"])]}
    from_thetas = bihom_from_doc(groupoid, thetas_doc)
    assert from_thetas.table == p2_sip.table


def test_bihom_document_round_trip_with_complex_entries(c4, c4_sip):
    rebuilt = bihom_from_doc(c4[0], bihom_to_doc(c4_sip))
    assert rebuilt.table == c4_sip.table
    assert rebuilt.field_tag == "complex"


def test_norm_document_round_trip(p5, p5_norm):
    groupoid, _ = p5
    rebuilt = norm_from_doc(groupoid, norm_to_doc(p5_norm))
    assert rebuilt.sq == p5_norm.sq
    with pytest.raises(SchemaError):
        norm_from_doc(groupoid, {"sq": {"(0,1)": "1"}})
    with pytest.raises(SchemaError):
        norm_from_doc(
            groupoid,
            {
                "sq": {
                    groupoid.arrow_label(g): "-1" for g in groupoid.arrows()
                }
            },
        )


def test_report_status_and_exit_codes():
    report = Report()
    report.add("first", True)
    report.add("note", "3 classes")
    assert report.status == "pass" and report.exit_code == 0

    report.add("second", False, witness="(a, object 1)")
    assert report.status == "fail" and report.exit_code == 1
    text = report.render("text")
    assert "second: fail, witness: (a, object 1)" in text
    assert text.endswith("status: fail\n")

    machine = json.loads(report.render("json"))
    assert machine["status"] == "fail"
    assert machine["checks"][2]["witness"] == "(a, object 1)"

    na = Report()
    na.add("skipped", "not_applicable")
    assert na.status == "not_applicable" and na.exit_code == 1
