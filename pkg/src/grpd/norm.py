"""Groupoid norms in exact squared arithmetic.

Norm values are stored squared, as nonnegative rationals, because every
identity in this module is quadratic except the triangle inequalities,
and those are decided exactly by :func:`grpd.scalars.sqrt_leq`. The norm
induced by a semi-inner product, consistency with a congruence, the
parallelogram identity over class witnesses, and the polarization
reconstruction all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    NoWitness,
    NotConsistent,
    NotSip,
    ResultNotSip,
    WitnessDisagreement,
)
from .groupoid import FiniteGroupoid
from .homs import Partition
from .scalars import GaussianRational, abs_sq, ensure_sq, sqrt_leq
from .sip import REAL, Bihom, scalar_set, validate_sip


@dataclass(frozen=True, eq=False)
class NormTable:
    """Squared norm value for every arrow of one groupoid."""

    groupoid: FiniteGroupoid
    sq: tuple[Fraction, ...]


def norm_table(groupoid: FiniteGroupoid, sq: Sequence) -> NormTable:
    if len(sq) != groupoid.n_arrows:
        raise ValueError(f"expected {groupoid.n_arrows} squared values, got {len(sq)}")
    return NormTable(groupoid, tuple(ensure_sq(v) for v in sq))


def norm_from_sip(bihom: Bihom) -> NormTable:
    """Diagonal of a semi-inner product as a squared-norm table."""
    report = validate_sip(bihom)
    if not report.is_sip:
        raise NotSip(report)
    return norm_table(
        bihom.groupoid, [bihom.table[(g, g)].re for g in bihom.groupoid.arrows()]
    )


@dataclass(frozen=True)
class NormReport:
    """Outcome of the norm axioms plus the derived reverse triangle bound."""

    identity_zero: bool
    identity_witness: int | None
    triangle: bool
    triangle_witness: tuple[int, int] | None
    inverse_invariant: bool
    inverse_witness: int | None
    reverse_triangle: bool
    reverse_witness: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return (
            self.identity_zero
            and self.triangle
            and self.inverse_invariant
            and self.reverse_triangle
        )


def validate_norm(norm: NormTable) -> NormReport:
    """Check the three norm axioms and the reverse triangle inequality.

    The squared value must vanish exactly on identity arrows; products obey
    sqrt(sq(gh)) <= sqrt(sq(g)) + sqrt(sq(h)); inversion preserves values;
    and for arrows with a common source, |norm(h) - norm(g)| is bounded by
    the norm of inverse(g) * h. All inequalities go through sqrt_leq.
    """
    groupoid = norm.groupoid
    sq = norm.sq

    identity_witness = None
    for g in groupoid.arrows():
        if (sq[g] == 0) != groupoid.is_identity(g):
            identity_witness = g
            break

    triangle_witness = None
    for g, h in groupoid.composable_pairs():
        gh = groupoid.compose_table[(g, h)]
        if not sqrt_leq(sq[gh], sq[g], sq[h]):
            triangle_witness = (g, h)
            break

    inverse_witness = None
    for g in groupoid.arrows():
        if sq[groupoid.inverse_of(g)] != sq[g]:
            inverse_witness = g
            break

    reverse_witness = None
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            if groupoid.source[g] != groupoid.source[h]:
                continue
            mid = groupoid.compose_table[(groupoid.inverse_of(g), h)]
            if not (sqrt_leq(sq[h], sq[g], sq[mid]) and sqrt_leq(sq[g], sq[h], sq[mid])):
                reverse_witness = (g, h)
                break
        if reverse_witness is not None:
            break

    return NormReport(
        identity_zero=identity_witness is None,
        identity_witness=identity_witness,
        triangle=triangle_witness is None,
        triangle_witness=triangle_witness,
        inverse_invariant=inverse_witness is None,
        inverse_witness=inverse_witness,
        reverse_triangle=reverse_witness is None,
        reverse_witness=reverse_witness,
    )


HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"
NO_WITNESS = "no_witness"


@dataclass(frozen=True)
class ConsistencyReport:
    """Consistency of a norm with a congruence.

    Condition 1: squared values are constant on classes. Condition 2:
    composing two related arrows doubles the norm, checked as
    sq(g1 g2) == 4 sq(g1) over every composable ordered pair of class
    mates. Pairs of the form (identity, itself) hold trivially; when they
    are the only composable mates, condition 2 is reported as vacuous.
    """

    class_norms: bool
    class_witness: tuple[int, int] | None
    doubling: str  # holds | fails | vacuous
    doubling_witness: tuple[int, int] | None
    effective_pairs: int

    @property
    def ok(self) -> bool:
        return self.class_norms and self.doubling != FAILS


def consistency_check(norm: NormTable, partition: Partition) -> ConsistencyReport:
    groupoid = norm.groupoid
    sq = norm.sq

    class_witness = None
    for members in partition.classes:
        first = members[0]
        for g in members[1:]:
            if sq[g] != sq[first]:
                class_witness = (first, g)
                break
        if class_witness is not None:
            break

    doubling_witness = None
    effective = 0
    for members in partition.classes:
        for g1 in members:
            for g2 in members:
                prod = groupoid.try_compose(g1, g2)
                if prod is None:
                    continue
                if not (g1 == g2 and groupoid.is_identity(g1)):
                    effective += 1
                if sq[prod] != 4 * sq[g1] and doubling_witness is None:
                    doubling_witness = (g1, g2)
    if doubling_witness is not None:
        doubling = FAILS
    elif effective == 0:
        doubling = VACUOUS
    else:
        doubling = HOLDS

    return ConsistencyReport(
        class_norms=class_witness is None,
        class_witness=class_witness,
        doubling=doubling,
        doubling_witness=doubling_witness,
        effective_pairs=effective,
    )


@dataclass(frozen=True)
class ParallelogramResult:
    """Result of the parallelogram identity for one pair of arrows.

    ``witnesses_checked`` counts the quadruples (g1, g2, h1, h2) of class
    mates with g1*h1 and inverse(g2)*h2 both defined. The identity must
    hold for every one of them; a single witness suffices for the
    existential reading, but witness independence is what makes the
    polarization below well defined, so any disagreeing witness fails the
    check.
    """

    status: str  # holds | fails | no_witness
    witness: tuple[int, int, int, int] | None
    witnesses_checked: int


def _require_consistent(norm: NormTable, partition: Partition) -> None:
    report = consistency_check(norm, partition)
    if not report.ok:
        if not report.class_norms:
            g1, g2 = report.class_witness
            detail = (
                f"norms differ inside a class at "
                f"({norm.groupoid.arrow_label(g1)}, {norm.groupoid.arrow_label(g2)})"
            )
        else:
            g1, g2 = report.doubling_witness
            detail = (
                f"composing class mates does not double the norm at "
                f"({norm.groupoid.arrow_label(g1)}, {norm.groupoid.arrow_label(g2)})"
            )
        raise NotConsistent(detail)


def _witness_products(
    groupoid: FiniteGroupoid, partition: Partition, g: int, h: int
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Composable (g1, h1, g1*h1) and (g2, h2, inverse(g2)*h2) triples."""
    firsts = []
    seconds = []
    for gi in partition.members(g):
        for hi in partition.members(h):
            prod = groupoid.try_compose(gi, hi)
            if prod is not None:
                firsts.append((gi, hi, prod))
            prod = groupoid.try_compose(groupoid.inverse_of(gi), hi)
            if prod is not None:
                seconds.append((gi, hi, prod))
    return firsts, seconds


def parallelogram_check(
    norm: NormTable, partition: Partition, g: int, h: int
) -> ParallelogramResult:
    """Evaluate sq(g1 h1) + sq(inv(g2) h2) == 2 sq(g) + 2 sq(h) over all witnesses."""
    _require_consistent(norm, partition)
    return _parallelogram(norm, partition, g, h)


def _parallelogram(
    norm: NormTable, partition: Partition, g: int, h: int
) -> ParallelogramResult:
    groupoid = norm.groupoid
    sq = norm.sq
    firsts, seconds = _witness_products(groupoid, partition, g, h)
    total = len(firsts) * len(seconds)
    if total == 0:
        return ParallelogramResult(NO_WITNESS, None, 0)
    rhs = 2 * sq[g] + 2 * sq[h]
    for g1, h1, p1 in firsts:
        for g2, h2, p2 in seconds:
            if sq[p1] + sq[p2] != rhs:
                return ParallelogramResult(FAILS, (g1, g2, h1, h2), total)
    return ParallelogramResult(HOLDS, None, total)


def parallelogram_survey(
    norm: NormTable, partition: Partition
) -> dict[tuple[int, int], ParallelogramResult]:
    """Parallelogram status for every ordered pair of arrows."""
    _require_consistent(norm, partition)
    return {
        (g, h): _parallelogram(norm, partition, g, h)
        for g in norm.groupoid.arrows()
        for h in norm.groupoid.arrows()
    }


@dataclass(frozen=True)
class PolarizeReport:
    """Validation of the polarized pairing over its defined pairs."""

    symmetric: bool
    symmetry_witness: tuple[int, int] | None
    matches_squared_norm: bool
    diagonal_witness: int | None
    cauchy_schwarz: bool
    cauchy_witness: tuple[int, int] | None
    additive: bool
    additivity_witness: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        return (
            self.symmetric
            and self.matches_squared_norm
            and self.cauchy_schwarz
            and self.additive
        )

    def summary(self) -> str:
        return (
            f"symmetric={self.symmetric}, matches_squared_norm={self.matches_squared_norm}, "
            f"cauchy_schwarz={self.cauchy_schwarz}, additive={self.additive}"
        )


@dataclass(frozen=True, eq=False)
class PolarizedSip:
    """Real pairing recovered from a consistent norm by polarization.

    The table covers exactly the witness-admitting pairs; asking for any
    other pair raises NoWitness rather than inventing a value. ``coverage``
    is the fraction of all ordered pairs that are defined.
    """

    bihom: Bihom
    defined_pairs: int
    total_pairs: int
    report: PolarizeReport

    @property
    def coverage(self) -> Fraction:
        return Fraction(self.defined_pairs, self.total_pairs)

    def at(self, g: int, h: int) -> GaussianRational:
        value = self.bihom.table.get((g, h))
        if value is None:
            groupoid = self.bihom.groupoid
            raise NoWitness(groupoid.arrow_label(g), groupoid.arrow_label(h))
        return value


def polarize(norm: NormTable, partition: Partition) -> PolarizedSip:
    """Recover a real pairing from quarter differences of witness products.

    For each pair (g, h) admitting witnesses, the value is
    (sq(g1 h1) - sq(inv(g2) h2)) / 4, computed from every witness; the
    witnesses must agree, which consistency of the norm guarantees when the
    partition really is an affine congruence. The result is then validated
    over its defined pairs: symmetry, diagonal equal to the squared norm,
    the one-sided Cauchy-Schwarz bound in squared form (the two-sided bound
    follows because the scan also covers (inverse(g), h)), and additivity
    in the first slot. Any failure raises ResultNotSip with the report.
    """
    _require_consistent(norm, partition)
    groupoid = norm.groupoid
    sq = norm.sq

    table: dict[tuple[int, int], GaussianRational] = {}
    for g in groupoid.arrows():
        for h in groupoid.arrows():
            firsts, seconds = _witness_products(groupoid, partition, g, h)
            if not firsts or not seconds:
                continue
            values = {
                Fraction(sq[p1] - sq[p2], 4)
                for _, _, p1 in firsts
                for _, _, p2 in seconds
            }
            if len(values) > 1:
                raise WitnessDisagreement(
                    groupoid.arrow_label(g),
                    groupoid.arrow_label(h),
                    tuple(sorted(values)),
                )
            table[(g, h)] = GaussianRational(values.pop())

    report = _validate_polarized(norm, table)
    result = PolarizedSip(
        bihom=Bihom(groupoid, table, REAL),
        defined_pairs=len(table),
        total_pairs=groupoid.n_arrows * groupoid.n_arrows,
        report=report,
    )
    if not report.ok:
        raise ResultNotSip(report)
    return result


def _validate_polarized(
    norm: NormTable, table: Mapping[tuple[int, int], GaussianRational]
) -> PolarizeReport:
    groupoid = norm.groupoid
    sq = norm.sq

    symmetry_witness = None
    for (g, h), value in table.items():
        other = table.get((h, g))
        if other is not None and other != value:
            symmetry_witness = min((g, h), (h, g))
            break

    diagonal_witness = None
    for g in groupoid.arrows():
        value = table.get((g, g))
        if value is not None and value.re != sq[g]:
            diagonal_witness = g
            break

    cauchy_witness = None
    for (g, h), value in sorted(table.items()):
        if value.re > 0 and value.re * value.re > sq[g] * sq[h]:
            cauchy_witness = (g, h)
            break

    additivity_witness = None
    for g, h in groupoid.composable_pairs():
        gh = groupoid.compose_table[(g, h)]
        for k in groupoid.arrows():
            left = table.get((gh, k))
            a, b = table.get((g, k)), table.get((h, k))
            if left is None or a is None or b is None:
                continue
            if left != a + b:
                additivity_witness = (g, h, k)
                break
        if additivity_witness is not None:
            break

    return PolarizeReport(
        symmetric=symmetry_witness is None,
        symmetry_witness=symmetry_witness,
        matches_squared_norm=diagonal_witness is None,
        diagonal_witness=diagonal_witness,
        cauchy_schwarz=cauchy_witness is None,
        cauchy_witness=cauchy_witness,
        additive=additivity_witness is None,
        additivity_witness=additivity_witness,
    )


@dataclass(frozen=True)
class ScaleReport:
    """Norm scaling over a scalar set: sq(member) == |c|^2 * sq(g)."""

    members: tuple[int, ...]
    ok: bool
    witness: int | None


def scale_check(
    norm: NormTable, bihom: Bihom, c: GaussianRational, g: int
) -> ScaleReport:
    """Check the scaling law on every member of the scalar set of (c, g)."""
    members = scalar_set(bihom, c, g)
    factor = abs_sq(c)
    witness = None
    for k in members:
        if norm.sq[k] != factor * norm.sq[g]:
            witness = k
            break
    return ScaleReport(members=members, ok=witness is None, witness=witness)
