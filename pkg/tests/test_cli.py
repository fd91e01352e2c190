import json

import pytest

from grpd.cli import run_command
from grpd.documents import dump_document, groupoid_to_doc, norm_to_doc, partition_to_doc
from grpd.homs import congruence_from_hom
from grpd.sip import b_partition


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


@pytest.fixture()
def p2_bundle(tmp_path, capsys):
    assert run_command(["gen", "pair", "--size", "2", "-o", str(tmp_path / "p2.grpd")]) == 0
    capsys.readouterr()
    return tmp_path / "p2.grpd", tmp_path / "p2.theta.hom"


def test_gen_then_validate(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    assert grpd_file.exists() and theta_file.exists()
    code, out = run(capsys, "validate", str(grpd_file))
    assert code == 0
    assert "groupoid_axioms: pass" in out


def test_gen_to_stdout(capsys):
    code, out = run(capsys, "gen", "affine_cyclic", "--size", "3")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["arrows"]) == 9


def test_validate_reports_axiom_failure(capsys, tmp_path, p2):
    doc = groupoid_to_doc(p2[0])
    doc["inverse"]["(0,1)"] = "(0,1)"
    bad = tmp_path / "bad.grpd"
    bad.write_text(dump_document(doc), encoding="utf-8")
    code, out = run(capsys, "validate", str(bad))
    assert code == 1
    assert "groupoid_axioms: fail" in out
    assert "(0,1)" in out


def test_congruence_profile_exit_and_witness(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    code, out = run(
        capsys, "congruence", str(grpd_file), "--hom", str(theta_file), "--profile"
    )
    assert code == 1
    assert "complete: fail, witness: ((0,1), object 1)" in out
    assert "simple: pass" in out


def test_congruence_axiom_check_passes(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    code, out = run(
        capsys, "congruence", str(grpd_file), "--hom", str(theta_file), "--check-axioms"
    )
    assert code == 0
    assert "congruence_axioms: pass" in out


def test_congruence_with_partition_document(capsys, tmp_path, p2):
    groupoid, homs = p2
    partition = congruence_from_hom(homs["theta"])
    part_file = tmp_path / "classes.json"
    part_file.write_text(
        dump_document(partition_to_doc(groupoid, partition)), encoding="utf-8"
    )
    grpd_file = tmp_path / "p2.grpd"
    grpd_file.write_text(dump_document(groupoid_to_doc(groupoid)), encoding="utf-8")
    code, out = run(
        capsys,
        "congruence",
        str(grpd_file),
        "--partition",
        str(part_file),
        "--check-axioms",
        "--profile",
    )
    assert code == 1  # completeness fails on this fixture
    assert "congruence_axioms: pass" in out


def test_sip_check_with_thetas(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    code, out = run(capsys, "sip", "check", str(grpd_file), "--thetas", str(theta_file))
    assert code == 0
    for line in (
        "bihom_valid: pass",
        "conjugate_symmetry: pass",
        "positive_definiteness: pass",
        "cauchy_schwarz: pass",
    ):
        assert line in out


def test_sip_relate_and_scalar_set(capsys, p2_bundle, tmp_path, p2, p2_sip):
    grpd_file, theta_file = p2_bundle
    from grpd.documents import bihom_to_doc

    table_file = tmp_path / "pairing.json"
    table_file.write_text(dump_document(bihom_to_doc(p2_sip)), encoding="utf-8")

    code, out = run(
        capsys,
        "sip",
        "relate",
        str(grpd_file),
        "--table",
        str(table_file),
        "--g",
        "(0,1)",
        "--h",
        "(1,0)",
    )
    assert code == 0
    assert "congruent: false" in out
    assert "opposite: true" in out
    assert "orthogonal: false" in out

    code, out = run(
        capsys,
        "sip",
        "scalar-set",
        str(grpd_file),
        "--table",
        str(table_file),
        "--c",
        "-1",
        "--g",
        "(0,1)",
    )
    assert code == 0
    assert "members: 1, witness: (1,0)" in out

    code, out = run(
        capsys,
        "sip",
        "scalar-set",
        str(grpd_file),
        "--table",
        str(table_file),
        "--c",
        "0,1",
        "--g",
        "(0,1)",
    )
    assert code == 0
    assert "members: 0, witness: (empty)" in out

    code, out = run(
        capsys,
        "sip",
        "scalar-set",
        str(grpd_file),
        "--table",
        str(table_file),
        "--c",
        "0",
        "--g",
        "(0,1)",
        "--at",
        "1",
    )
    assert code == 0
    assert "members: 1, witness: e1" in out


def test_norm_check_from_sip(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    bihom_doc = {"thetas": [json.loads(theta_file.read_text())]}
    sip_file = grpd_file.parent / "sip.json"
    sip_file.write_text(dump_document(bihom_doc), encoding="utf-8")
    code, out = run(capsys, "norm", "check", str(grpd_file), "--from-sip", str(sip_file))
    assert code == 0
    assert "identity_zero: pass" in out
    assert "consistency_doubling: vacuous" in out


def test_norm_check_with_explicit_tables(capsys, tmp_path, p5, p5_sip, p5_norm):
    groupoid, _ = p5
    grpd_file = tmp_path / "p5.grpd"
    grpd_file.write_text(dump_document(groupoid_to_doc(groupoid)), encoding="utf-8")
    sq_file = tmp_path / "norm.json"
    sq_file.write_text(dump_document(norm_to_doc(p5_norm)), encoding="utf-8")
    lam_file = tmp_path / "classes.json"
    lam_file.write_text(
        dump_document(partition_to_doc(groupoid, b_partition(p5_sip).partition)),
        encoding="utf-8",
    )
    code, out = run(
        capsys,
        "norm",
        "check",
        str(grpd_file),
        "--sq",
        str(sq_file),
        "--lambda",
        str(lam_file),
    )
    assert code == 0
    assert "triangle: pass" in out
    assert "consistency_doubling: pass" in out


def test_polarize_round_trip_via_cli(capsys, tmp_path, p5, p5_sip, p5_norm):
    groupoid, _ = p5
    grpd_file = tmp_path / "p5.grpd"
    grpd_file.write_text(dump_document(groupoid_to_doc(groupoid)), encoding="utf-8")
    sq_file = tmp_path / "norm.json"
    sq_file.write_text(dump_document(norm_to_doc(p5_norm)), encoding="utf-8")
    lam_file = tmp_path / "classes.json"
    lam_file.write_text(
        dump_document(partition_to_doc(groupoid, b_partition(p5_sip).partition)),
        encoding="utf-8",
    )
    out_file = tmp_path / "polarized.json"
    code, out = run(
        capsys,
        "polarize",
        str(grpd_file),
        "--sq",
        str(sq_file),
        "--lambda",
        str(lam_file),
        "-o",
        str(out_file),
    )
    assert code == 0
    assert "coverage: 485/625" in out
    payload = json.loads(out_file.read_text())
    assert payload["table"]["(0,1)"]["(0,1)"] == {"re": "1", "im": "0"}


def test_polarize_failure_reported(capsys, tmp_path, p2, p2_norm):
    groupoid, _ = p2
    grpd_file = tmp_path / "p2.grpd"
    grpd_file.write_text(dump_document(groupoid_to_doc(groupoid)), encoding="utf-8")
    sq_file = tmp_path / "norm.json"
    sq_file.write_text(dump_document(norm_to_doc(p2_norm)), encoding="utf-8")
    lam_file = tmp_path / "single.json"
    lam_file.write_text(
        dump_document({"classes": [["e0", "e1", "(0,1)", "(1,0)"]]}), encoding="utf-8"
    )
    code, out = run(
        capsys,
        "polarize",
        str(grpd_file),
        "--sq",
        str(sq_file),
        "--lambda",
        str(lam_file),
    )
    assert code == 1
    assert "polarize: fail" in out


def test_report_all_passes_and_is_deterministic(capsys, tmp_path):
    assert run_command(["gen", "pair", "--size", "3", "-o", str(tmp_path / "p3.grpd")]) == 0
    capsys.readouterr()
    outputs = []
    for _ in range(2):
        code, out = run(
            capsys,
            "report",
            "--all",
            str(tmp_path / "p3.grpd"),
            "--thetas",
            str(tmp_path / "p3.theta.hom"),
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    assert "status: pass" in outputs[0]


def test_report_all_complex_bundle(capsys, tmp_path):
    assert (
        run_command(
            ["gen", "complex_pair", "--size", "2", "-o", str(tmp_path / "c4.grpd")]
        )
        == 0
    )
    capsys.readouterr()
    code, out = run(
        capsys,
        "report",
        "--all",
        str(tmp_path / "c4.grpd"),
        "--thetas",
        str(tmp_path / "c4.theta.hom"),
    )
    assert code == 0
    assert "polarization_round_trip: not_applicable" in out
    assert "scalar_set_imaginary_empty: not_applicable" in out


def test_report_all_modular_bundle_is_not_applicable_past_congruence(capsys, tmp_path):
    assert (
        run_command(
            ["gen", "affine_cyclic", "--size", "3", "-o", str(tmp_path / "a3.grpd")]
        )
        == 0
    )
    capsys.readouterr()
    code, out = run(
        capsys,
        "report",
        "--all",
        str(tmp_path / "a3.grpd"),
        "--thetas",
        str(tmp_path / "a3.theta.hom"),
    )
    assert code == 0
    assert "theta_congruence_axioms: pass" in out
    assert "profile: complete=true simple=true efficient=true" in out
    assert "monomorphism_implies_simple: pass" in out
    assert "sip_construction: not_applicable" in out
    assert "status: pass" in out


def test_report_all_non_separating_bundle_fails(capsys, tmp_path, p2):
    groupoid, _ = p2
    grpd_file = tmp_path / "p2.grpd"
    grpd_file.write_text(dump_document(groupoid_to_doc(groupoid)), encoding="utf-8")
    zero_file = tmp_path / "zero.hom"
    zero_file.write_text(
        dump_document(
            {
                "target": ["QI"],
                "map": {
                    label: [{"re": "0", "im": "0"}] for label in groupoid.arrow_labels
                },
            }
        ),
        encoding="utf-8",
    )
    code, out = run(
        capsys, "report", "--all", str(grpd_file), "--thetas", str(zero_file)
    )
    assert code == 1
    assert "sip_construction: fail" in out
    assert "(0,1)" in out


def test_report_all_with_coordinate_thetas(capsys, tmp_path):
    assert (
        run_command(
            ["gen", "complex_pair", "--size", "2", "-o", str(tmp_path / "c4.grpd")]
        )
        == 0
    )
    capsys.readouterr()
    code, out = run(
        capsys,
        "report",
        "--all",
        str(tmp_path / "c4.grpd"),
        "--thetas",
        str(tmp_path / "c4.theta1.hom"),
        str(tmp_path / "c4.theta2.hom"),
    )
    assert code == 0
    assert "row_partition_matches_hom: pass" in out
    assert "polarization_round_trip: pass" in out


def test_json_format(capsys, p2_bundle):
    grpd_file, theta_file = p2_bundle
    code, out = run(
        capsys,
        "congruence",
        str(grpd_file),
        "--hom",
        str(theta_file),
        "--profile",
        "--format",
        "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["status"] == "fail"
    by_name = {c["name"]: c for c in payload["checks"]}
    assert by_name["complete"]["result"] == "fail"
    assert by_name["complete"]["witness"] == "((0,1), object 1)"


def test_usage_and_input_errors(capsys, tmp_path, p2):
    assert run_command(["gen", "torus", "--size", "2"]) == 2
    assert run_command(["gen", "pair", "--size", "0"]) == 2
    assert run_command(["validate", str(tmp_path / "missing.grpd")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run_command(["validate", str(bad)]) == 2
    wrong_kind = tmp_path / "wrong.json"
    wrong_kind.write_text('{"sq": {}}', encoding="utf-8")
    assert run_command(["validate", str(wrong_kind)]) == 2
    assert run_command([]) == 2

    # a groupoid that fails validation is an input error everywhere but
    # in the validate command itself
    doc = groupoid_to_doc(p2[0])
    doc["inverse"]["(0,1)"] = "(0,1)"
    broken = tmp_path / "broken.grpd"
    broken.write_text(dump_document(doc), encoding="utf-8")
    theta = tmp_path / "p2.theta.hom"
    assert run_command(["gen", "pair", "--size", "2", "-o", str(tmp_path / "p2.grpd")]) == 0
    assert (
        run_command(["congruence", str(broken), "--hom", str(theta), "--profile"]) == 2
    )
    capsys.readouterr()
