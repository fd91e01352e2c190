"""Homomorphisms into commutative groups, induced congruences, and their axioms.

A homomorphism assigns each arrow an element of a product of component
groups (integers, integers mod m, rationals, Gaussian rationals) so that
values add along composition. Equal values induce a partition of the
arrows; this module checks whether an arbitrary partition satisfies the
two affine-congruence axioms (closure under composition and the
parallelism exchange law) and classifies congruences as complete, simple,
or efficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    EmptyList,
    MissingArrow,
    MixedGroupoids,
    NotACongruence,
    NotAdditive,
    UnknownObject,
)
from .groupoid import FiniteGroupoid
from .scalars import GaussianRational, gaussian, rational


@dataclass(frozen=True)
class Component:
    """One factor of a commutative target group.

    kind is one of "Z" (integers), "Zmod" (integers mod ``modulus``),
    "Q" (rationals), "QI" (Gaussian rationals).
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Zmod", "Q", "QI"):
            raise ValueError(f"unknown component kind {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modular component needs a modulus >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} component takes no modulus")

    def zero(self):
        if self.kind == "Z" or self.kind == "Zmod":
            return 0
        if self.kind == "Q":
            return Fraction(0)
        return gaussian(0)

    def coerce(self, value):
        if self.kind == "Z":
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"integer component got {value!r}")
            return value
        if self.kind == "Zmod":
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"modular component got {value!r}")
            return value % self.modulus
        if self.kind == "Q":
            if isinstance(value, GaussianRational):
                raise ValueError("rational component got a Gaussian rational")
            return rational(value)
        if isinstance(value, GaussianRational):
            return value
        return gaussian(value)

    def add(self, a, b):
        if self.kind == "Zmod":
            return (a + b) % self.modulus
        return a + b

    def neg(self, a):
        if self.kind == "Zmod":
            return (-a) % self.modulus
        return -a


@dataclass(frozen=True)
class AbelianGroupSig:
    """Signature of a finite product of commutative component groups."""

    components: tuple[Component, ...]

    def zero(self) -> tuple:
        return tuple(c.zero() for c in self.components)

    def coerce(self, values: Sequence) -> tuple:
        if len(values) != len(self.components):
            raise ValueError(
                f"expected {len(self.components)} component values, got {len(values)}"
            )
        return tuple(c.coerce(v) for c, v in zip(self.components, values))

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def is_zero(self, a: tuple) -> bool:
        return a == self.zero()


SIG_Z = AbelianGroupSig((Component("Z"),))
SIG_Q = AbelianGroupSig((Component("Q"),))
SIG_QI = AbelianGroupSig((Component("QI"),))


def sig_zmod(m: int) -> AbelianGroupSig:
    return AbelianGroupSig((Component("Zmod", m),))


@dataclass(frozen=True, eq=False)
class GroupoidHom:
    """A validated homomorphism from a groupoid into a commutative group."""

    groupoid: FiniteGroupoid
    target: AbelianGroupSig
    values: tuple[tuple, ...]  # arrow index -> element

    def value(self, g: int) -> tuple:
        return self.values[g]


def validate_hom(
    groupoid: FiniteGroupoid,
    values: Mapping[str, Sequence] | Sequence[Sequence],
    target: AbelianGroupSig,
) -> GroupoidHom:
    """Check totality and additivity of a raw arrow-to-element map.

    ``values`` is either a mapping from arrow labels or a sequence aligned
    with arrow indices. The witness for an additivity failure is the first
    composable pair, in lexicographic arrow-index order, where the value of
    the product differs from the sum of the values.
    """
    n = groupoid.n_arrows
    if isinstance(values, Mapping):
        elems = []
        for g in groupoid.arrows():
            label = groupoid.arrow_label(g)
            if label not in values:
                raise MissingArrow(label)
            elems.append(target.coerce(values[label]))
        for label in values:
            groupoid.arrow_index(label)  # surfaces unknown labels
    else:
        if len(values) != n:
            raise MissingArrow(f"<index {len(values)}>")
        elems = [target.coerce(v) for v in values]

    for g, h in groupoid.composable_pairs():
        gh = groupoid.compose_table[(g, h)]
        expected = target.add(elems[g], elems[h])
        if elems[gh] != expected:
            raise NotAdditive(
                groupoid.arrow_label(g),
                groupoid.arrow_label(h),
                f"value of product is {elems[gh]}, sum is {expected}",
            )
    return GroupoidHom(groupoid, target, tuple(elems))


def zero_hom(groupoid: FiniteGroupoid, target: AbelianGroupSig = SIG_Z) -> GroupoidHom:
    return GroupoidHom(groupoid, target, tuple(target.zero() for _ in groupoid.arrows()))


def product_hom(homs: Sequence[GroupoidHom]) -> GroupoidHom:
    """Bundle a family of homomorphisms into one with a product target."""
    if not homs:
        raise EmptyList()
    base = homs[0].groupoid
    if any(h.groupoid is not base for h in homs[1:]):
        raise MixedGroupoids()
    sig = AbelianGroupSig(tuple(c for h in homs for c in h.target.components))
    values = tuple(
        tuple(v for h in homs for v in h.values[g]) for g in base.arrows()
    )
    return GroupoidHom(base, sig, values)


def is_monomorphism(hom: GroupoidHom) -> tuple[bool, int | None]:
    """True when only identity arrows map to zero; else the first offender."""
    for g in hom.groupoid.arrows():
        if hom.target.is_zero(hom.values[g]) and not hom.groupoid.is_identity(g):
            return False, g
    return True, None


# --- partitions ---------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A partition of the arrow set in canonical form.

    Classes are sorted by their least member and each class is sorted
    ascending, so structural equality compares partitions directly.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def n_arrows(self) -> int:
        return len(self.class_of)

    def members(self, g: int) -> tuple[int, ...]:
        return self.classes[self.class_of[g]]

    def related(self, g: int, h: int) -> bool:
        return self.class_of[g] == self.class_of[h]


def partition_from_classes(n_arrows: int, classes: Sequence[Sequence[int]]) -> Partition:
    seen: set[int] = set()
    for cls in classes:
        for g in cls:
            if not 0 <= g < n_arrows:
                raise ValueError(f"arrow index {g} out of range")
            if g in seen:
                raise ValueError(f"arrow index {g} appears in more than one class")
            seen.add(g)
    if len(seen) != n_arrows:
        missing = min(set(range(n_arrows)) - seen)
        raise ValueError(f"arrow index {missing} is not covered by any class")
    canon = tuple(sorted((tuple(sorted(cls)) for cls in classes if cls), key=lambda c: c[0]))
    class_of = [0] * n_arrows
    for i, cls in enumerate(canon):
        for g in cls:
            class_of[g] = i
    return Partition(tuple(class_of), canon)


def partition_from_labels(
    groupoid: FiniteGroupoid, classes: Sequence[Sequence[str]]
) -> Partition:
    return partition_from_classes(
        groupoid.n_arrows,
        [[groupoid.arrow_index(lab) for lab in cls] for cls in classes],
    )


def congruence_from_hom(hom: GroupoidHom) -> Partition:
    """Partition arrows by equal homomorphism value."""
    by_value: dict[tuple, list[int]] = {}
    for g in hom.groupoid.arrows():
        by_value.setdefault(hom.values[g], []).append(g)
    return partition_from_classes(hom.groupoid.n_arrows, list(by_value.values()))


def class_at(
    groupoid: FiniteGroupoid, partition: Partition, g: int, p: int
) -> tuple[int, ...]:
    """Members of the class of ``g`` whose source is ``p``."""
    if not 0 <= p < groupoid.n_objects:
        raise UnknownObject(str(p))
    return tuple(h for h in partition.members(g) if groupoid.source[h] == p)


# --- affine congruence axioms ---------------------------------------------------


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of the two congruence axioms, with the first failing witness.

    The witness is the lexicographically least violating tuple
    ``(g1, g2, h1, h2)`` of arrow indices for the first axiom that fails.
    """

    ok: bool
    axiom: str | None = None
    witness: tuple[int, int, int, int] | None = None

    def describe(self, groupoid: FiniteGroupoid) -> str:
        if self.ok:
            return "affine congruence axioms hold"
        labels = tuple(groupoid.arrow_label(g) for g in self.witness)
        return f"{self.axiom} fails at (g1={labels[0]}, g2={labels[1]}, h1={labels[2]}, h2={labels[3]})"


def validate_affine_congruence(
    groupoid: FiniteGroupoid, partition: Partition
) -> CongruenceReport:
    """Check closure under composition and the parallelism exchange law.

    The scan groups composed pairs by their (class, class) bucket instead of
    enumerating raw 4-tuples: the composition axiom holds exactly when every
    bucket lands in a single class, and the parallelism axiom holds exactly
    when mirrored buckets land in the same class. Witness extraction only
    pays the quadratic cost on failing buckets.
    """
    if partition.n_arrows != groupoid.n_arrows:
        raise ValueError("partition size does not match the groupoid")
    cls = partition.class_of
    buckets: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for g, h in groupoid.composable_pairs():
        buckets.setdefault((cls[g], cls[h]), []).append((g, h, groupoid.compose_table[(g, h)]))

    # congruence: g1~g2, h1~h2, both products defined => products related
    best: tuple[int, int, int, int] | None = None
    for plist in buckets.values():
        if len({cls[p] for _, _, p in plist}) <= 1:
            continue
        for g1, h1, p1 in plist:
            for g2, h2, p2 in plist:
                if cls[p1] != cls[p2]:
                    cand = (g1, g2, h1, h2)
                    if best is None or cand < best:
                        best = cand
    if best is not None:
        return CongruenceReport(False, "congruence", best)

    # parallelism: g1~g2, h1~h2, g1*h2 and h1*g2 defined => products related
    for (ci, cj), plist in buckets.items():
        mirror = buckets.get((cj, ci))
        if mirror is None:
            continue
        if cls[plist[0][2]] == cls[mirror[0][2]]:
            continue
        for g1, h2, p1 in plist:
            for h1, g2, p2 in mirror:
                if cls[p1] != cls[p2]:
                    cand = (g1, g2, h1, h2)
                    if best is None or cand < best:
                        best = cand
    if best is not None:
        return CongruenceReport(False, "parallelism", best)
    return CongruenceReport(True)


@dataclass(frozen=True)
class CongruenceProfile:
    """Completeness and simplicity of a congruence, with first witnesses.

    Witnesses are ``(arrow, object)`` pairs: for completeness the first
    empty class-fiber scanning arrows then objects, for simplicity the
    first class-fiber with more than one member.
    """

    complete: bool
    complete_witness: tuple[int, int] | None
    simple: bool
    simple_witness: tuple[int, int] | None

    @property
    def efficient(self) -> bool:
        return self.complete and self.simple


def congruence_profile(groupoid: FiniteGroupoid, partition: Partition) -> CongruenceProfile:
    """Classify a congruence; raises NotACongruence if the axioms fail."""
    report = validate_affine_congruence(groupoid, partition)
    if not report.ok:
        witness = tuple(groupoid.arrow_label(g) for g in report.witness)
        raise NotACongruence(report.axiom, witness)

    counts: list[dict[int, int]] = []
    for members in partition.classes:
        per_source: dict[int, int] = {}
        for g in members:
            per_source[groupoid.source[g]] = per_source.get(groupoid.source[g], 0) + 1
        counts.append(per_source)

    complete_witness = None
    simple_witness = None
    for g in groupoid.arrows():
        per_source = counts[partition.class_of[g]]
        for p in groupoid.objects():
            k = per_source.get(p, 0)
            if k == 0 and complete_witness is None:
                complete_witness = (g, p)
            if k > 1 and simple_witness is None:
                simple_witness = (g, p)
        if complete_witness is not None and simple_witness is not None:
            break
    return CongruenceProfile(
        complete=complete_witness is None,
        complete_witness=complete_witness,
        simple=simple_witness is None,
        simple_witness=simple_witness,
    )
