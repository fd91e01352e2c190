"""Scalar pairings on a groupoid: bihomomorphisms and semi-inner products.

A bihomomorphism assigns a Gaussian-rational value to every ordered pair
of arrows and is additive over composition in each slot separately. A
semi-inner product additionally satisfies conjugate symmetry, positive
definiteness away from identities, and the Cauchy-Schwarz bound (checked
in exact squared form). Row equality under the pairing induces a partition
of the arrows that this module verifies to be an affine congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    MixedGroupoids,
    NotBihom,
    NotScalarTarget,
    NotSeparating,
    ScalarSetNotSingleton,
)
from .groupoid import FiniteGroupoid
from .homs import (
    CongruenceReport,
    GroupoidHom,
    Partition,
    congruence_from_hom,
    partition_from_classes,
    product_hom,
    validate_affine_congruence,
)
from .scalars import GaussianRational, abs_sq, conj, gaussian

REAL = "real"
COMPLEX = "complex"


@dataclass(frozen=True, eq=False)
class Bihom:
    """A tabulated pairing on all arrow pairs of one groupoid.

    ``field_tag`` is "real" when every entry has zero imaginary part.
    ``thetas`` records the generating homomorphism family when the table
    was built from one. Tables produced by polarization may be partial;
    everything built by :func:`validate_bihom` or :func:`sip_from_thetas`
    is total.
    """

    groupoid: FiniteGroupoid
    table: dict[tuple[int, int], GaussianRational]
    field_tag: str
    thetas: tuple[GroupoidHom, ...] | None = None

    def entry(self, g: int, h: int) -> GaussianRational:
        return self.table[(g, h)]

    def defined(self, g: int, h: int) -> bool:
        return (g, h) in self.table

    def row(self, g: int) -> tuple[GaussianRational, ...]:
        return tuple(self.table[(g, h)] for h in self.groupoid.arrows())


def _field_tag(table: Mapping[tuple[int, int], GaussianRational]) -> str:
    return REAL if all(v.im == 0 for v in table.values()) else COMPLEX


def _scalar_values(hom: GroupoidHom) -> list[GaussianRational]:
    if len(hom.target.components) != 1:
        raise NotScalarTarget(
            "pairing construction needs scalar-valued homomorphisms; "
            f"got {len(hom.target.components)} components"
        )
    kind = hom.target.components[0].kind
    if kind == "Zmod":
        raise NotScalarTarget(
            "a modular component has no additive embedding into the scalars"
        )
    out = []
    for (v,) in hom.values:
        out.append(v if isinstance(v, GaussianRational) else gaussian(v))
    return out


def sip_from_thetas(
    groupoid: FiniteGroupoid, homs: Sequence[GroupoidHom]
) -> Bihom:
    """Sum of products pairing: entry (g, h) is sum_i v_i(g) * conj(v_i(h)).

    The family must jointly separate identities: a non-identity arrow on
    which every homomorphism vanishes is rejected with a witness. The
    resulting table is verified to be a bihomomorphism and a semi-inner
    product before it is returned.
    """
    for hom in homs:
        if hom.groupoid is not groupoid:
            raise MixedGroupoids()
    values = [_scalar_values(hom) for hom in homs]

    for g in groupoid.arrows():
        if groupoid.is_identity(g):
            continue
        if all(vals[g].is_zero() for vals in values):
            raise NotSeparating(groupoid.arrow_label(g))

    table: dict[tuple[int, int], GaussianRational] = {}
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            acc = gaussian(0)
            for vals in values:
                acc = acc + vals[g] * conj(vals[h])
            table[(g, h)] = acc
    bihom = Bihom(groupoid, table, _field_tag(table), thetas=tuple(homs))

    _check_bihom_axioms(bihom)
    report = validate_sip(bihom)
    if not report.is_sip:
        raise RuntimeError(
            f"internal error: constructed pairing is not a semi-inner product: {report.summary()}"
        )
    return bihom


def validate_bihom(
    groupoid: FiniteGroupoid, table: Mapping[tuple[int, int], GaussianRational]
) -> Bihom:
    """Check totality and two-sided additivity of an explicit table."""
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            if (g, h) not in table:
                raise NotBihom(
                    "missing",
                    groupoid.arrow_label(g),
                    groupoid.arrow_label(h),
                    "-",
                )
    bihom = Bihom(groupoid, dict(table), _field_tag(table))
    _check_bihom_axioms(bihom)
    return bihom


def _check_bihom_axioms(bihom: Bihom) -> None:
    groupoid = bihom.groupoid
    table = bihom.table
    for g, h in groupoid.composable_pairs():
        gh = groupoid.compose_table[(g, h)]
        for k in groupoid.arrows():
            if table[(gh, k)] != table[(g, k)] + table[(h, k)]:
                raise NotBihom(
                    "first",
                    groupoid.arrow_label(g),
                    groupoid.arrow_label(h),
                    groupoid.arrow_label(k),
                )
        for k in groupoid.arrows():
            if table[(k, gh)] != table[(k, g)] + table[(k, h)]:
                raise NotBihom(
                    "second",
                    groupoid.arrow_label(g),
                    groupoid.arrow_label(h),
                    groupoid.arrow_label(k),
                )


@dataclass(frozen=True)
class SipReport:
    """Per-condition outcome of the semi-inner-product axioms."""

    conjugate_symmetric: bool
    symmetry_witness: tuple[int, int] | None
    positive_definite: bool
    definiteness_witness: int | None
    cauchy_schwarz: bool
    cauchy_witness: tuple[int, int] | None

    @property
    def is_sip(self) -> bool:
        return self.conjugate_symmetric and self.positive_definite and self.cauchy_schwarz

    def summary(self) -> str:
        bits = [
            f"conjugate_symmetric={self.conjugate_symmetric}",
            f"positive_definite={self.positive_definite}",
            f"cauchy_schwarz={self.cauchy_schwarz}",
        ]
        return ", ".join(bits)


def validate_sip(bihom: Bihom) -> SipReport:
    """Check the three semi-inner-product conditions on a validated pairing.

    Positive definiteness requires an exactly real diagonal before the sign
    test; a complex diagonal entry is a conjugate-symmetry failure at (g, g)
    and is reported there, as the root cause. Cauchy-Schwarz is decided in
    squared form: |entry|^2 <= diag(g) * diag(h).
    """
    groupoid = bihom.groupoid
    table = bihom.table

    symmetry_witness = None
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            if table[(g, h)] != conj(table[(h, g)]):
                symmetry_witness = (g, h)
                break
        if symmetry_witness is not None:
            break

    definiteness_witness = None
    for g in groupoid.arrows():
        if groupoid.is_identity(g):
            continue
        diag = table[(g, g)]
        if diag.im != 0:
            continue  # surfaced by the symmetry check at (g, g)
        if diag.re <= 0:
            definiteness_witness = g
            break

    cauchy_witness = None
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            if abs_sq(table[(g, h)]) > table[(g, g)].re * table[(h, h)].re:
                cauchy_witness = (g, h)
                break
        if cauchy_witness is not None:
            break

    return SipReport(
        conjugate_symmetric=symmetry_witness is None,
        symmetry_witness=symmetry_witness,
        positive_definite=definiteness_witness is None,
        definiteness_witness=definiteness_witness,
        cauchy_schwarz=cauchy_witness is None,
        cauchy_witness=cauchy_witness,
    )


@dataclass(frozen=True)
class RowRelation:
    congruent: bool
    opposite: bool
    orthogonal: bool


def b_relate(bihom: Bihom, g1: int, g2: int) -> RowRelation:
    """Row comparison: equal rows, negated rows, and vanishing pairing."""
    congruent = True
    opposite = True
    for h in bihom.groupoid.arrows():
        a, b = bihom.table[(g1, h)], bihom.table[(g2, h)]
        if a != b:
            congruent = False
        if a != -b:
            opposite = False
        if not congruent and not opposite:
            break
    return RowRelation(
        congruent=congruent,
        opposite=opposite,
        orthogonal=bihom.table[(g1, g2)].is_zero(),
    )


@dataclass(frozen=True)
class BPartitionReport:
    """Row-equality partition of the arrows, with verified properties.

    ``is_affine_congruence`` and ``simple`` are verified by brute force,
    not assumed. Completeness witnesses scan objects first, then arrows.
    ``matches_hom_partition`` records whether the partition was checked
    against the one induced by the generating homomorphism family; it is
    None when no family or no unit-vector witnesses are available.
    """

    partition: Partition
    is_affine_congruence: bool
    axiom_report: CongruenceReport
    simple: bool
    simple_witness: tuple[int, int] | None
    complete: bool
    complete_witness: tuple[int, int] | None
    matches_hom_partition: bool | None

    @property
    def b_affine(self) -> bool:
        return self.complete


def b_partition(bihom: Bihom) -> BPartitionReport:
    """Partition arrows by equal pairing rows and verify its properties."""
    groupoid = bihom.groupoid
    by_row: dict[tuple, list[int]] = {}
    for g in groupoid.arrows():
        by_row.setdefault(bihom.row(g), []).append(g)
    partition = partition_from_classes(groupoid.n_arrows, list(by_row.values()))

    axiom_report = validate_affine_congruence(groupoid, partition)

    simple_witness = None
    for members in partition.classes:
        by_source: dict[int, list[int]] = {}
        for g in members:
            by_source.setdefault(groupoid.source[g], []).append(g)
        for p, group in by_source.items():
            if len(group) > 1:
                cand = (min(group), p)
                if simple_witness is None or cand < simple_witness:
                    simple_witness = cand
    complete_witness = None
    for p in groupoid.objects():
        for h in groupoid.arrows():
            if all(groupoid.source[m] != p for m in partition.members(h)):
                complete_witness = (h, p)
                break
        if complete_witness is not None:
            break

    matches = None
    if bihom.thetas:
        matches = _kronecker_partition_check(bihom, partition)

    return BPartitionReport(
        partition=partition,
        is_affine_congruence=axiom_report.ok,
        axiom_report=axiom_report,
        simple=simple_witness is None,
        simple_witness=simple_witness,
        complete=complete_witness is None,
        complete_witness=complete_witness,
        matches_hom_partition=matches,
    )


def _kronecker_partition_check(bihom: Bihom, partition: Partition) -> bool | None:
    """When arrows with unit-vector values exist, the row partition must
    coincide with the value partition of the bundled homomorphism family."""
    homs = bihom.thetas
    values = [_scalar_values(hom) for hom in homs]
    for j in range(len(homs)):
        unit = None
        for h in bihom.groupoid.arrows():
            if values[j][h] == gaussian(1) and all(
                values[i][h].is_zero() for i in range(len(homs)) if i != j
            ):
                unit = h
                break
        if unit is None:
            return None
    expected = congruence_from_hom(product_hom(list(homs)))
    if partition != expected:
        raise RuntimeError(
            "internal error: row partition disagrees with the homomorphism partition"
        )
    return True


def scalar_set(
    bihom: Bihom, c: GaussianRational, g: int, at_object: int | None = None
) -> tuple[int, ...]:
    """Arrows whose pairing row is c times the row of ``g``.

    Membership is decided against every arrow of the groupoid, not a
    generating subset. With ``at_object`` given, the result is intersected
    with the source fiber there and must then have at most one member.
    """
    groupoid = bihom.groupoid
    target_row = [c * bihom.table[(g, h)] for h in groupoid.arrows()]
    members = []
    for k in groupoid.arrows():
        if all(bihom.table[(k, h)] == target_row[h] for h in groupoid.arrows()):
            members.append(k)
    if at_object is not None:
        members = [k for k in members if groupoid.source[k] == at_object]
        if len(members) > 1:
            raise ScalarSetNotSingleton(
                groupoid.object_label(at_object),
                tuple(groupoid.arrow_label(k) for k in members),
            )
    return tuple(members)


@dataclass(frozen=True)
class TransitivePropsReport:
    """Outcome of the two fiber propositions for transitive groupoids.

    ``applicable`` is False when the groupoid is not transitive, in which
    case nothing was checked. The vanishing property states that a row
    vanishing on one source fiber vanishes everywhere; the fiber-reduction
    property states that comparing rows on any single source fiber induces
    the same partition as comparing them globally.
    """

    applicable: bool
    vanishing: bool | None = None
    vanishing_witness: tuple[int, int, int] | None = None  # (g, p, k)
    fiber_reduction: bool | None = None
    fiber_witness: int | None = None  # object s where the partitions differ

    @property
    def ok(self) -> bool:
        return self.applicable and bool(self.vanishing) and bool(self.fiber_reduction)


def transitive_props_check(bihom: Bihom) -> TransitivePropsReport:
    groupoid = bihom.groupoid
    if not groupoid.is_transitive():
        return TransitivePropsReport(applicable=False)

    fibers = [groupoid.source_fiber(p) for p in groupoid.objects()]

    vanishing_witness = None
    for g in groupoid.arrows():
        for p in groupoid.objects():
            if any(not bihom.table[(g, h)].is_zero() for h in fibers[p]):
                continue
            for k in groupoid.arrows():
                if not bihom.table[(g, k)].is_zero():
                    vanishing_witness = (g, p, k)
                    break
            if vanishing_witness is not None:
                break
        if vanishing_witness is not None:
            break

    global_rows: dict[tuple, list[int]] = {}
    for g in groupoid.arrows():
        global_rows.setdefault(bihom.row(g), []).append(g)
    global_partition = partition_from_classes(groupoid.n_arrows, list(global_rows.values()))

    fiber_witness = None
    for s in groupoid.objects():
        rows: dict[tuple, list[int]] = {}
        for g in groupoid.arrows():
            key = tuple(bihom.table[(g, h)] for h in fibers[s])
            rows.setdefault(key, []).append(g)
        if partition_from_classes(groupoid.n_arrows, list(rows.values())) != global_partition:
            fiber_witness = s
            break

    return TransitivePropsReport(
        applicable=True,
        vanishing=vanishing_witness is None,
        vanishing_witness=vanishing_witness,
        fiber_reduction=fiber_witness is None,
        fiber_witness=fiber_witness,
    )
