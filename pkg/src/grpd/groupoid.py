"""Finite groupoid data model with exhaustive axiom validation.

A groupoid is stored as explicit tables over dense integer indices:
source and target maps, a partial composition table, inverses, and one
identity arrow per object. Composition is diagrammatic: ``g * h`` is
defined exactly when ``target(g) == source(h)``, and then
``source(g*h) == source(g)`` and ``target(g*h) == target(h)``.

Instances are immutable once validated; every query is read-only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BadCompositionDomain,
    BadInverse,
    CapExceeded,
    DanglingReference,
    EmptyBase,
    MissingIdentity,
    NotAssociative,
    NotComposable,
    UnknownArrow,
    UnknownObject,
)

OBJECT_CAP = 64
DEFAULT_ARROW_CAP = 4096
ARROW_CAP_ENV = "GRPD_MAX_ARROWS"


def arrow_cap() -> int:
    """Arrow cap, overridable through the GRPD_MAX_ARROWS environment variable."""
    raw = os.environ.get(ARROW_CAP_ENV)
    if raw is None:
        return DEFAULT_ARROW_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CapExceeded(f"{ARROW_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CapExceeded(f"{ARROW_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass
class RawGroupoid:
    """Unvalidated groupoid data, as read from a document or a generator.

    ``compose`` lists triples ``(f, g, fg)`` of arrow labels. ``inverse``
    and ``identity`` are optional; when present they are cross-checked
    against the derived maps.
    """

    objects: list[str]
    arrows: list[tuple[str, str, str]]  # (label, source, target)
    compose: list[tuple[str, str, str]]
    inverse: dict[str, str] | None = None
    identity: dict[str, str] | None = None


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """A validated finite groupoid. Construct through :func:`validate_groupoid`."""

    object_labels: tuple[str, ...]
    arrow_labels: tuple[str, ...]
    source: tuple[int, ...]
    target: tuple[int, ...]
    compose_table: dict[tuple[int, int], int]
    inverse: tuple[int, ...]
    identity: tuple[int, ...]  # object index -> identity arrow index

    # --- basic queries ---

    @property
    def n_objects(self) -> int:
        return len(self.object_labels)

    @property
    def n_arrows(self) -> int:
        return len(self.arrow_labels)

    def objects(self) -> range:
        return range(self.n_objects)

    def arrows(self) -> range:
        return range(self.n_arrows)

    def object_label(self, p: int) -> str:
        return self.object_labels[p]

    def arrow_label(self, g: int) -> str:
        return self.arrow_labels[g]

    def object_index(self, label: str) -> int:
        try:
            return self.object_labels.index(label)
        except ValueError:
            raise UnknownObject(label) from None

    def arrow_index(self, label: str) -> int:
        try:
            return self.arrow_labels.index(label)
        except ValueError:
            raise UnknownArrow(label) from None

    def is_identity(self, g: int) -> bool:
        return self.identity[self.source[g]] == g

    # --- arrow algebra ---

    def try_compose(self, g: int, h: int) -> int | None:
        return self.compose_table.get((g, h))

    def compose(self, g: int, h: int) -> int:
        gh = self.compose_table.get((g, h))
        if gh is None:
            raise NotComposable(self.arrow_labels[g], self.arrow_labels[h])
        return gh

    def inverse_of(self, g: int) -> int:
        return self.inverse[g]

    def identity_at(self, p: int) -> int:
        if not 0 <= p < self.n_objects:
            raise UnknownObject(str(p))
        return self.identity[p]

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """All composable pairs in lexicographic arrow-index order."""
        by_source: list[list[int]] = [[] for _ in self.objects()]
        for h in self.arrows():
            by_source[self.source[h]].append(h)
        for g in self.arrows():
            for h in by_source[self.target[g]]:
                yield g, h

    # --- slices ---

    def slice(self, sources: Iterable[int], targets: Iterable[int]) -> tuple[int, ...]:
        """Arrows with source in ``sources`` and target in ``targets``."""
        src = self._object_set(sources)
        dst = self._object_set(targets)
        return tuple(
            g for g in self.arrows() if self.source[g] in src and self.target[g] in dst
        )

    def _object_set(self, objs: Iterable[int]) -> frozenset[int]:
        objs = frozenset(objs)
        for p in objs:
            if not 0 <= p < self.n_objects:
                raise UnknownObject(str(p))
        return objs

    def source_fiber(self, p: int) -> tuple[int, ...]:
        return self.slice([p], self.objects())

    def target_fiber(self, q: int) -> tuple[int, ...]:
        return self.slice(self.objects(), [q])

    def isotropy(self, p: int) -> tuple[int, ...]:
        return self.slice([p], [p])

    def is_transitive(self) -> bool:
        """True when every ordered pair of objects is joined by an arrow."""
        seen = {(self.source[g], self.target[g]) for g in self.arrows()}
        return len(seen) == self.n_objects * self.n_objects

    # --- restriction ---

    def restrict(self, objects: Iterable[int]) -> FiniteGroupoid:
        """Full subgroupoid on the given objects, re-validated from scratch."""
        keep = self._object_set(objects)
        if not keep:
            raise EmptyBase()
        kept_objects = [self.object_labels[p] for p in sorted(keep)]
        kept_arrows = [
            g for g in self.arrows() if self.source[g] in keep and self.target[g] in keep
        ]
        kept_set = set(kept_arrows)
        raw = RawGroupoid(
            objects=kept_objects,
            arrows=[
                (
                    self.arrow_labels[g],
                    self.object_labels[self.source[g]],
                    self.object_labels[self.target[g]],
                )
                for g in kept_arrows
            ],
            compose=[
                (self.arrow_labels[g], self.arrow_labels[h], self.arrow_labels[gh])
                for (g, h), gh in sorted(self.compose_table.items())
                if g in kept_set and h in kept_set
            ],
            inverse={
                self.arrow_labels[g]: self.arrow_labels[self.inverse[g]]
                for g in kept_arrows
            },
            identity={
                self.object_labels[p]: self.arrow_labels[self.identity[p]]
                for p in sorted(keep)
            },
        )
        return validate_groupoid(raw)

    def to_raw(self) -> RawGroupoid:
        return RawGroupoid(
            objects=list(self.object_labels),
            arrows=[
                (
                    self.arrow_labels[g],
                    self.object_labels[self.source[g]],
                    self.object_labels[self.target[g]],
                )
                for g in self.arrows()
            ],
            compose=[
                (self.arrow_labels[g], self.arrow_labels[h], self.arrow_labels[gh])
                for (g, h), gh in sorted(self.compose_table.items())
            ],
            inverse={
                self.arrow_labels[g]: self.arrow_labels[self.inverse[g]]
                for g in self.arrows()
            },
            identity={
                self.object_labels[p]: self.arrow_labels[self.identity[p]]
                for p in self.objects()
            },
        )

    def __repr__(self) -> str:
        return f"FiniteGroupoid({self.n_objects} objects, {self.n_arrows} arrows)"


def validate_groupoid(raw: RawGroupoid) -> FiniteGroupoid:
    """Check every groupoid axiom on raw tables and build a validated instance.

    Axioms are checked in a fixed order so the first violation reported is
    deterministic: references and caps, composition domain and endpoints,
    identities, associativity, inverses. Declared identity and inverse maps
    are cross-checked against the derived ones.
    """
    if len(raw.objects) > OBJECT_CAP:
        raise CapExceeded(f"{len(raw.objects)} objects exceeds the cap of {OBJECT_CAP}")
    cap = arrow_cap()
    if len(raw.arrows) > cap:
        raise CapExceeded(f"{len(raw.arrows)} arrows exceeds the cap of {cap}")

    obj_index: dict[str, int] = {}
    for label in raw.objects:
        if label in obj_index:
            raise DanglingReference("object", label, "duplicate")
        obj_index[label] = len(obj_index)

    arr_index: dict[str, int] = {}
    source: list[int] = []
    target: list[int] = []
    for label, src, dst in raw.arrows:
        if label in arr_index:
            raise DanglingReference("arrow", label, "duplicate")
        if src not in obj_index:
            raise DanglingReference("object", src)
        if dst not in obj_index:
            raise DanglingReference("object", dst)
        arr_index[label] = len(arr_index)
        source.append(obj_index[src])
        target.append(obj_index[dst])

    labels = tuple(label for label, _, _ in raw.arrows)
    n_arrows = len(labels)

    def need_arrow(label: str) -> int:
        if label not in arr_index:
            raise DanglingReference("arrow", label)
        return arr_index[label]

    table: dict[tuple[int, int], int] = {}
    for f_lab, g_lab, fg_lab in raw.compose:
        f, g, fg = need_arrow(f_lab), need_arrow(g_lab), need_arrow(fg_lab)
        if target[f] != source[g]:
            raise BadCompositionDomain(f_lab, g_lab, "product declared but not composable")
        if (f, g) in table and table[(f, g)] != fg:
            raise BadCompositionDomain(f_lab, g_lab, "conflicting products declared")
        if source[fg] != source[f] or target[fg] != target[g]:
            raise BadCompositionDomain(
                f_lab, g_lab, f"product {fg_lab!r} has wrong endpoints"
            )
        table[(f, g)] = fg

    by_source: list[list[int]] = [[] for _ in raw.objects]
    by_target: list[list[int]] = [[] for _ in raw.objects]
    for g in range(n_arrows):
        by_source[source[g]].append(g)
        by_target[target[g]].append(g)

    for g in range(n_arrows):
        for h in by_source[target[g]]:
            if (g, h) not in table:
                raise BadCompositionDomain(
                    labels[g], labels[h], "composable pair has no declared product"
                )

    # identities: derive the neutral arrow at each object, then cross-check
    # any declared map
    identity: list[int] = []
    for p, p_lab in enumerate(raw.objects):
        neutral = None
        for e in by_source[p]:
            if target[e] != p:
                continue
            if all(table[(e, g)] == g for g in by_source[p]) and all(
                table[(h, e)] == h for h in by_target[p]
            ):
                neutral = e
                break
        if neutral is None:
            raise MissingIdentity(p_lab)
        identity.append(neutral)
    if raw.identity is not None:
        for p_lab, e_lab in raw.identity.items():
            if p_lab not in obj_index:
                raise DanglingReference("object", p_lab)
            if identity[obj_index[p_lab]] != need_arrow(e_lab):
                raise MissingIdentity(p_lab, f"declared identity {e_lab!r} is not neutral")

    for g in range(n_arrows):
        for h in by_source[target[g]]:
            gh = table[(g, h)]
            for k in by_source[target[h]]:
                if table[(gh, k)] != table[(g, table[(h, k)])]:
                    raise NotAssociative(labels[g], labels[h], labels[k])

    # inverses: derive, then cross-check any declared map
    inverse: list[int] = []
    for g in range(n_arrows):
        inv = None
        for k in by_source[target[g]]:
            if target[k] != source[g]:
                continue
            if table[(g, k)] == identity[source[g]] and table[(k, g)] == identity[target[g]]:
                inv = k
                break
        if inv is None:
            raise BadInverse(labels[g], "no two-sided inverse")
        inverse.append(inv)
    if raw.inverse is not None:
        for g_lab, k_lab in raw.inverse.items():
            if inverse[need_arrow(g_lab)] != need_arrow(k_lab):
                raise BadInverse(g_lab, f"declared inverse {k_lab!r} fails the inverse law")

    return FiniteGroupoid(
        object_labels=tuple(raw.objects),
        arrow_labels=labels,
        source=tuple(source),
        target=tuple(target),
        compose_table=table,
        inverse=tuple(inverse),
        identity=tuple(identity),
    )
