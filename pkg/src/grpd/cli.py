"""Command line driver: documents in, verification reports out.

Exit codes: 0 when every check passes, 1 when a check fails (the report
carries a witness), 2 for input or usage errors. Reports are deterministic:
the same input always produces byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents as docs
from .errors import (
    GroupoidError,
    GrpdError,
    HomError,
    NormError,
    NotScalarTarget,
    SipError,
)
from .families import FAMILIES, generate
from .groupoid import FiniteGroupoid, validate_groupoid
from .homs import (
    congruence_from_hom,
    congruence_profile,
    is_monomorphism,
    product_hom,
    validate_affine_congruence,
)
from .norm import (
    FAILS,
    HOLDS,
    NO_WITNESS,
    VACUOUS,
    consistency_check,
    norm_from_sip,
    parallelogram_survey,
    polarize,
    scale_check,
    validate_norm,
)
from .scalars import GaussianRational, conj, gaussian, rational
from .sip import (
    REAL,
    b_partition,
    b_relate,
    scalar_set,
    sip_from_thetas,
    transitive_props_check,
    validate_sip,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grpd", description="exact verification of finite groupoid structures"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("gen", help="generate a built-in groupoid family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("validate", help="check every groupoid axiom on a document")
    p.add_argument("file", type=Path)
    add_format(p)

    p = sub.add_parser("congruence", help="build or check a congruence on a groupoid")
    p.add_argument("file", type=Path)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--hom", type=Path)
    group.add_argument("--partition", type=Path)
    p.add_argument("--profile", action="store_true")
    p.add_argument("--check-axioms", action="store_true")
    add_format(p)

    p_sip = sub.add_parser("sip", help="pairing construction and queries")
    sip_sub = p_sip.add_subparsers(dest="sip_command", required=True)

    p = sip_sub.add_parser("check", help="verify the semi-inner-product conditions")
    p.add_argument("file", type=Path)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--thetas", type=Path, nargs="+")
    group.add_argument("--table", type=Path)
    add_format(p)

    p = sip_sub.add_parser("relate", help="compare the pairing rows of two arrows")
    p.add_argument("file", type=Path)
    p.add_argument("--table", type=Path, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    add_format(p)

    p = sip_sub.add_parser("scalar-set", help="arrows whose row is a scalar multiple")
    p.add_argument("file", type=Path)
    p.add_argument("--table", type=Path, required=True)
    p.add_argument("--c", required=True, metavar="RE[,IM]")
    p.add_argument("--g", required=True)
    p.add_argument("--at", default=None, metavar="OBJECT")
    add_format(p)

    p_norm = sub.add_parser("norm", help="norm axioms and congruence consistency")
    norm_sub = p_norm.add_subparsers(dest="norm_command", required=True)
    p = norm_sub.add_parser("check")
    p.add_argument("file", type=Path)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-sip", type=Path, dest="from_sip")
    group.add_argument("--sq", type=Path)
    p.add_argument("--lambda", type=Path, dest="lam")
    add_format(p)

    p = sub.add_parser("polarize", help="recover a pairing from a consistent norm")
    p.add_argument("file", type=Path)
    p.add_argument("--sq", type=Path, required=True)
    p.add_argument("--lambda", type=Path, dest="lam", required=True)
    p.add_argument("-o", "--output", type=Path)
    add_format(p)

    p = sub.add_parser("report", help="run the full verification suite on a bundle")
    p.add_argument("--all", action="store_true", required=True)
    p.add_argument("file", type=Path)
    p.add_argument("--thetas", type=Path, nargs="+", required=True)
    add_format(p)

    return parser


# --- input helpers ------------------------------------------------------------


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _load_typed(path: Path, kind: str) -> dict:
    found, payload = docs.parse_document(_read(path))
    if found != kind:
        raise docs.SchemaError("", f"{path}: expected a {kind} document, found {found}")
    return payload


def _load_groupoid(path: Path) -> FiniteGroupoid:
    return validate_groupoid(docs.raw_groupoid_from_doc(_load_typed(path, "groupoid")))


def _parse_scalar(text: str) -> GaussianRational:
    parts = text.split(",")
    if len(parts) == 1:
        return gaussian(rational(parts[0]))
    if len(parts) == 2:
        return gaussian(rational(parts[0]), rational(parts[1]))
    raise docs.SchemaError("--c", f"expected RE or RE,IM, got {text!r}")


def _emit(report: docs.Report, fmt: str) -> int:
    sys.stdout.write(report.render(fmt))
    return report.exit_code


def _arrow_pair(groupoid: FiniteGroupoid, witness: tuple[int, int]) -> str:
    return f"({groupoid.arrow_label(witness[0])}, {groupoid.arrow_label(witness[1])})"


def _profile_witness(groupoid: FiniteGroupoid, witness: tuple[int, int]) -> str:
    g, p = witness
    return f"({groupoid.arrow_label(g)}, object {groupoid.object_label(p)})"


# --- command handlers ------------------------------------------------------------


def cmd_gen(args) -> int:
    groupoid, homs = generate(args.family, args.size)
    doc = docs.groupoid_to_doc(groupoid)
    if args.output is None:
        sys.stdout.write(docs.dump_document(doc))
        return 0
    args.output.write_text(docs.dump_document(doc), encoding="utf-8")
    print(f"wrote {args.output}")
    base = args.output.with_suffix("")
    for name, hom in homs.items():
        hom_path = Path(f"{base}.{name}.hom")
        hom_path.write_text(docs.dump_document(docs.hom_to_doc(hom)), encoding="utf-8")
        print(f"wrote {hom_path}")
    return 0


def cmd_validate(args) -> int:
    report = docs.Report()
    raw = docs.raw_groupoid_from_doc(_load_typed(args.file, "groupoid"))
    try:
        groupoid = validate_groupoid(raw)
    except GroupoidError as exc:
        report.add("groupoid_axioms", False, witness=str(exc))
        return _emit(report, args.format)
    report.add("groupoid_axioms", True)
    report.add("objects", str(groupoid.n_objects))
    report.add("arrows", str(groupoid.n_arrows))
    return _emit(report, args.format)


def cmd_congruence(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    if args.hom is not None:
        try:
            hom = docs.hom_from_doc(groupoid, _load_typed(args.hom, "hom"))
        except HomError as exc:
            report.add("hom_valid", False, witness=str(exc))
            return _emit(report, args.format)
        report.add("hom_valid", True)
        partition = congruence_from_hom(hom)
    else:
        partition = docs.partition_from_doc(groupoid, _load_typed(args.partition, "partition"))
    report.add("classes", str(len(partition.classes)))

    axioms = None
    if args.check_axioms or args.profile:
        axioms = validate_affine_congruence(groupoid, partition)
    if args.check_axioms:
        report.add(
            "congruence_axioms",
            axioms.ok,
            witness=None if axioms.ok else axioms.describe(groupoid),
        )
    if args.profile:
        if not axioms.ok:
            report.add("profile", FAILS, witness=axioms.describe(groupoid))
        else:
            profile = congruence_profile(groupoid, partition)
            report.add(
                "complete",
                profile.complete,
                witness=None
                if profile.complete
                else _profile_witness(groupoid, profile.complete_witness),
            )
            report.add(
                "simple",
                profile.simple,
                witness=None
                if profile.simple
                else _profile_witness(groupoid, profile.simple_witness),
            )
            report.add("efficient", profile.efficient)
    return _emit(report, args.format)


def _load_bihom_from_args(groupoid: FiniteGroupoid, args, report: docs.Report):
    """Build the pairing for sip check, adding the construction check."""
    try:
        if args.thetas:
            homs = [docs.hom_from_doc(groupoid, _load_typed(f, "hom")) for f in args.thetas]
            bihom = sip_from_thetas(groupoid, homs)
        else:
            bihom = docs.bihom_from_doc(groupoid, _load_typed(args.table, "bihom"))
    except (SipError, HomError) as exc:
        report.add("bihom_valid", False, witness=str(exc))
        return None
    report.add("bihom_valid", True)
    return bihom


def cmd_sip_check(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    bihom = _load_bihom_from_args(groupoid, args, report)
    if bihom is None:
        return _emit(report, args.format)
    sip_report = validate_sip(bihom)
    report.add(
        "conjugate_symmetry",
        sip_report.conjugate_symmetric,
        witness=None
        if sip_report.conjugate_symmetric
        else _arrow_pair(groupoid, sip_report.symmetry_witness),
    )
    report.add(
        "positive_definiteness",
        sip_report.positive_definite,
        witness=None
        if sip_report.positive_definite
        else groupoid.arrow_label(sip_report.definiteness_witness),
    )
    report.add(
        "cauchy_schwarz",
        sip_report.cauchy_schwarz,
        witness=None
        if sip_report.cauchy_schwarz
        else _arrow_pair(groupoid, sip_report.cauchy_witness),
    )
    return _emit(report, args.format)


def cmd_sip_relate(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    bihom = docs.bihom_from_doc(groupoid, _load_typed(args.table, "bihom"))
    relation = b_relate(bihom, groupoid.arrow_index(args.g), groupoid.arrow_index(args.h))
    report.add("congruent", str(relation.congruent).lower())
    report.add("opposite", str(relation.opposite).lower())
    report.add("orthogonal", str(relation.orthogonal).lower())
    return _emit(report, args.format)


def cmd_sip_scalar_set(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    bihom = docs.bihom_from_doc(groupoid, _load_typed(args.table, "bihom"))
    c = _parse_scalar(args.c)
    at = None if args.at is None else groupoid.object_index(args.at)
    members = scalar_set(bihom, c, groupoid.arrow_index(args.g), at)
    labels = ", ".join(groupoid.arrow_label(k) for k in members)
    report.add("members", str(len(members)), witness=labels or "(empty)")
    return _emit(report, args.format)


def _add_norm_checks(report: docs.Report, groupoid: FiniteGroupoid, norm_report) -> None:
    report.add(
        "identity_zero",
        norm_report.identity_zero,
        witness=None
        if norm_report.identity_zero
        else groupoid.arrow_label(norm_report.identity_witness),
    )
    report.add(
        "triangle",
        norm_report.triangle,
        witness=None
        if norm_report.triangle
        else _arrow_pair(groupoid, norm_report.triangle_witness),
    )
    report.add(
        "inverse_invariance",
        norm_report.inverse_invariant,
        witness=None
        if norm_report.inverse_invariant
        else groupoid.arrow_label(norm_report.inverse_witness),
    )
    report.add(
        "reverse_triangle",
        norm_report.reverse_triangle,
        witness=None
        if norm_report.reverse_triangle
        else _arrow_pair(groupoid, norm_report.reverse_witness),
    )


def _add_consistency_checks(report: docs.Report, groupoid, consistency) -> None:
    report.add(
        "consistency_class_norms",
        consistency.class_norms,
        witness=None
        if consistency.class_norms
        else _arrow_pair(groupoid, consistency.class_witness),
    )
    if consistency.doubling == FAILS:
        report.add(
            "consistency_doubling",
            False,
            witness=_arrow_pair(groupoid, consistency.doubling_witness),
        )
    elif consistency.doubling == VACUOUS:
        report.add("consistency_doubling", VACUOUS, witness="no composable class mates")
    else:
        report.add("consistency_doubling", True)


def cmd_norm_check(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    partition = None
    if args.from_sip is not None:
        bihom = docs.bihom_from_doc(groupoid, _load_typed(args.from_sip, "bihom"))
        try:
            norm = norm_from_sip(bihom)
        except NormError as exc:
            report.add("norm_from_sip", False, witness=str(exc))
            return _emit(report, args.format)
        report.add("norm_from_sip", True)
        partition = b_partition(bihom).partition
    else:
        norm = docs.norm_from_doc(groupoid, _load_typed(args.sq, "norm"))
    if args.lam is not None:
        partition = docs.partition_from_doc(groupoid, _load_typed(args.lam, "partition"))
    _add_norm_checks(report, groupoid, validate_norm(norm))
    if partition is not None:
        _add_consistency_checks(report, groupoid, consistency_check(norm, partition))
    return _emit(report, args.format)


def cmd_polarize(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    norm = docs.norm_from_doc(groupoid, _load_typed(args.sq, "norm"))
    partition = docs.partition_from_doc(groupoid, _load_typed(args.lam, "partition"))
    try:
        result = polarize(norm, partition)
    except NormError as exc:
        report.add("polarize", False, witness=str(exc))
        return _emit(report, args.format)
    report.add("polarize", True)
    report.add("coverage", f"{result.defined_pairs}/{result.total_pairs}")
    report.add("symmetric", result.report.symmetric)
    report.add("matches_squared_norm", result.report.matches_squared_norm)
    report.add("cauchy_schwarz", result.report.cauchy_schwarz)
    report.add("additive", result.report.additive)
    if args.output is not None:
        args.output.write_text(
            docs.dump_document(docs.bihom_to_doc(result.bihom)), encoding="utf-8"
        )
        print(f"wrote {args.output}")
    return _emit(report, args.format)


def cmd_report_all(args) -> int:
    groupoid = _load_groupoid(args.file)
    report = docs.Report()
    report.add("groupoid_axioms", True)

    homs = []
    for path in args.thetas:
        try:
            homs.append(docs.hom_from_doc(groupoid, _load_typed(path, "hom")))
        except HomError as exc:
            report.add("hom_valid", False, witness=f"{path}: {exc}")
            return _emit(report, args.format)
    report.add("hom_valid", True)

    bundle = product_hom(homs)
    partition = congruence_from_hom(bundle)
    axioms = validate_affine_congruence(groupoid, partition)
    report.add(
        "theta_congruence_axioms",
        axioms.ok,
        witness=None if axioms.ok else axioms.describe(groupoid),
    )
    if axioms.ok:
        profile = congruence_profile(groupoid, partition)
        report.add(
            "profile",
            f"complete={str(profile.complete).lower()} "
            f"simple={str(profile.simple).lower()} "
            f"efficient={str(profile.efficient).lower()}",
        )
        mono, _ = is_monomorphism(bundle)
        if mono:
            report.add("monomorphism_implies_simple", profile.simple)
        else:
            report.add("monomorphism_implies_simple", docs.NOT_APPLICABLE)

    try:
        bihom = sip_from_thetas(groupoid, homs)
    except NotScalarTarget as exc:
        # modular-valued bundles have no scalar pairing; nothing failed,
        # the pairing checks simply do not apply
        report.add("sip_construction", docs.NOT_APPLICABLE, witness=str(exc))
        return _emit(report, args.format)
    except SipError as exc:
        report.add("sip_construction", False, witness=str(exc))
        return _emit(report, args.format)
    report.add("sip_construction", True)
    sip_report = validate_sip(bihom)
    report.add("sip_conjugate_symmetry", sip_report.conjugate_symmetric)
    report.add("sip_positive_definiteness", sip_report.positive_definite)
    report.add("sip_cauchy_schwarz", sip_report.cauchy_schwarz)

    rows = b_partition(bihom)
    report.add(
        "row_congruence_axioms",
        rows.is_affine_congruence,
        witness=None if rows.is_affine_congruence else rows.axiom_report.describe(groupoid),
    )
    report.add(
        "row_congruence_simple",
        rows.simple,
        witness=None if rows.simple else _profile_witness(groupoid, rows.simple_witness),
    )
    if rows.matches_hom_partition is None:
        report.add("row_partition_matches_hom", docs.NOT_APPLICABLE)
    else:
        report.add("row_partition_matches_hom", rows.matches_hom_partition)

    props = transitive_props_check(bihom)
    if not props.applicable:
        report.add("transitive_fiber_props", docs.NOT_APPLICABLE)
    else:
        report.add("transitive_fiber_props", props.ok)

    norm = norm_from_sip(bihom)
    _add_norm_checks(report, groupoid, validate_norm(norm))
    _add_consistency_checks(report, groupoid, consistency_check(norm, rows.partition))

    survey = parallelogram_survey(norm, rows.partition)
    outcomes = [r.status for r in survey.values()]
    fails = outcomes.count(FAILS)
    holds = outcomes.count(HOLDS)
    missing = outcomes.count(NO_WITNESS)
    report.add(
        "parallelogram",
        fails == 0,
        witness=f"holds={holds} no_witness={missing} fails={fails}",
    )

    if bihom.field_tag == REAL:
        try:
            pol = polarize(norm, rows.partition)
        except NormError as exc:
            report.add("polarization_round_trip", False, witness=str(exc))
            return _emit(report, args.format)
        agree = all(pol.bihom.table[pair] == bihom.table[pair] for pair in pol.bihom.table)
        report.add(
            "polarization_round_trip",
            agree and pol.report.ok,
            witness=f"coverage={pol.defined_pairs}/{pol.total_pairs}",
        )
    else:
        report.add("polarization_round_trip", docs.NOT_APPLICABLE)

    identities = tuple(sorted(groupoid.identity))
    zero_ok = all(
        scalar_set(bihom, gaussian(0), g) == identities for g in groupoid.arrows()
    )
    report.add("scalar_set_zero_is_identities", zero_ok)

    if bihom.field_tag == REAL:
        # at an identity arrow the row vanishes, so i times it is again the
        # zero row; emptiness is only meaningful for nonvanishing rows
        imag_ok = all(
            scalar_set(bihom, gaussian(0, 1), g) == ()
            for g in groupoid.arrows()
            if not groupoid.is_identity(g)
        )
        report.add("scalar_set_imaginary_empty", imag_ok)
    else:
        report.add("scalar_set_imaginary_empty", docs.NOT_APPLICABLE)

    sample = (gaussian(0), gaussian(1), gaussian(-1), gaussian(0, 1), gaussian(2))
    conj_ok = True
    scale_ok = True
    for c in sample:
        cc = conj(c)
        for h in groupoid.arrows():
            scaled = scale_check(norm, bihom, c, h)
            if not scaled.ok:
                scale_ok = False
            if scaled.members:
                expected = [cc * bihom.table[(g, h)] for g in groupoid.arrows()]
                for k in scaled.members:
                    if any(
                        bihom.table[(g, k)] != expected[g] for g in groupoid.arrows()
                    ):
                        conj_ok = False
    report.add("conjugate_scalar_law", conj_ok)
    report.add("norm_scaling_law", scale_ok)

    return _emit(report, args.format)


HANDLERS = {
    "gen": cmd_gen,
    "validate": cmd_validate,
    "congruence": cmd_congruence,
    "polarize": cmd_polarize,
    "report": cmd_report_all,
}


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "sip":
            handler = {
                "check": cmd_sip_check,
                "relate": cmd_sip_relate,
                "scalar-set": cmd_sip_scalar_set,
            }[args.sip_command]
        elif args.command == "norm":
            handler = cmd_norm_check
        else:
            handler = HANDLERS[args.command]
        return handler(args)
    except (GrpdError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
