"""JSON document formats for groupoids, homomorphisms, partitions, pairings,
and norm tables, plus the report structure emitted by the command line.

Documents are plain JSON and always refer to arrows and objects by label.
Serialization is deterministic: keys follow arrow and object index order,
so the same input produces byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError, SchemaError
from .groupoid import FiniteGroupoid, RawGroupoid
from .homs import AbelianGroupSig, Component, GroupoidHom, Partition, partition_from_labels, validate_hom
from .norm import NormTable, norm_table
from .scalars import (
    GaussianRational,
    format_gaussian,
    format_rational,
    parse_gaussian,
    rational,
)
from .sip import Bihom, sip_from_thetas, validate_bihom

DOCUMENT_KINDS = ("groupoid", "hom", "bihom", "norm", "partition")


def parse_document(text: str) -> tuple[str, dict]:
    """Parse JSON text and classify it by its top-level keys."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from exc
    if not isinstance(payload, dict):
        raise SchemaError("", "document must be a JSON object")
    if "objects" in payload or "arrows" in payload:
        return "groupoid", payload
    if "target" in payload or "map" in payload:
        return "hom", payload
    if "thetas" in payload or "table" in payload:
        return "bihom", payload
    if "sq" in payload:
        return "norm", payload
    if "classes" in payload:
        return "partition", payload
    raise SchemaError("", "unrecognized document: no known top-level key")


def _expect(payload: dict, key: str, kind, path: str):
    full = f"{path}{key}" if path else key
    if key not in payload:
        raise SchemaError(full, f"missing required key {key!r}")
    value = payload[key]
    if not isinstance(value, kind):
        raise SchemaError(full, f"expected {kind.__name__}")
    return value


# --- groupoid documents -------------------------------------------------------


def raw_groupoid_from_doc(payload: dict) -> RawGroupoid:
    objects = _expect(payload, "objects", list, "")
    if not objects:
        raise SchemaError("objects", "nonempty required")
    if not all(isinstance(o, str) for o in objects):
        raise SchemaError("objects", "labels must be strings")

    arrows_doc = _expect(payload, "arrows", list, "")
    arrows: list[tuple[str, str, str]] = []
    src_of: dict[str, str] = {}
    dst_of: dict[str, str] = {}
    for i, entry in enumerate(arrows_doc):
        path = f"arrows[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected an object with id, src, dst")
        for key in ("id", "src", "dst"):
            if key not in entry or not isinstance(entry[key], str):
                raise SchemaError(f"{path}.{key}", "required string")
        if entry["src"] not in objects:
            raise SchemaError(f"{path}.src", f"unknown object {entry['src']!r}")
        if entry["dst"] not in objects:
            raise SchemaError(f"{path}.dst", f"unknown object {entry['dst']!r}")
        if entry["id"] in src_of:
            raise SchemaError(f"{path}.id", f"duplicate arrow {entry['id']!r}")
        arrows.append((entry["id"], entry["src"], entry["dst"]))
        src_of[entry["id"]] = entry["src"]
        dst_of[entry["id"]] = entry["dst"]

    compose_doc = _expect(payload, "compose", list, "")
    compose: list[tuple[str, str, str]] = []
    for i, triple in enumerate(compose_doc):
        path = f"compose[{i}]"
        if not (isinstance(triple, list) and len(triple) == 3):
            raise SchemaError(path, "expected a triple [f, g, fg]")
        f, g, fg = triple
        for lab in (f, g, fg):
            if not isinstance(lab, str) or lab not in src_of:
                raise SchemaError(path, f"unknown arrow {lab!r}")
        if dst_of[f] != src_of[g]:
            raise SchemaError(path, f"arrows {f!r} and {g!r} are not composable")
        compose.append((f, g, fg))

    inverse = payload.get("inverse")
    if inverse is not None and not isinstance(inverse, dict):
        raise SchemaError("inverse", "expected an object")
    identity = payload.get("identity")
    if identity is not None and not isinstance(identity, dict):
        raise SchemaError("identity", "expected an object")
    return RawGroupoid(
        objects=list(objects),
        arrows=arrows,
        compose=compose,
        inverse=dict(inverse) if inverse is not None else None,
        identity=dict(identity) if identity is not None else None,
    )


def groupoid_to_doc(groupoid: FiniteGroupoid) -> dict:
    raw = groupoid.to_raw()
    return {
        "objects": raw.objects,
        "arrows": [{"id": a, "src": s, "dst": d} for a, s, d in raw.arrows],
        "compose": [list(t) for t in raw.compose],
        "inverse": raw.inverse,
        "identity": raw.identity,
    }


# --- homomorphism documents -----------------------------------------------------


def _component_from_doc(entry, path: str) -> Component:
    if entry == "Z":
        return Component("Z")
    if entry == "Q":
        return Component("Q")
    if entry == "QI":
        return Component("QI")
    if isinstance(entry, dict) and set(entry) == {"mod"} and isinstance(entry["mod"], int):
        try:
            return Component("Zmod", entry["mod"])
        except ValueError as exc:
            raise SchemaError(path, str(exc)) from exc
    raise SchemaError(path, f"unknown component {entry!r}")


def _component_to_doc(component: Component):
    if component.kind == "Zmod":
        return {"mod": component.modulus}
    return component.kind


def _value_from_doc(component: Component, entry, path: str):
    try:
        if component.kind in ("Z", "Zmod"):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ValueError(f"expected an integer, got {entry!r}")
            return entry
        if component.kind == "Q":
            return rational(entry)
        return parse_gaussian(entry)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(path, str(exc)) from exc


def _value_to_doc(component: Component, value):
    if component.kind in ("Z", "Zmod"):
        return value
    if component.kind == "Q":
        return format_rational(value)
    return format_gaussian(value)


def hom_from_doc(groupoid: FiniteGroupoid, payload: dict) -> GroupoidHom:
    target_doc = _expect(payload, "target", list, "")
    if not target_doc:
        raise SchemaError("target", "at least one component required")
    components = tuple(
        _component_from_doc(entry, f"target[{i}]") for i, entry in enumerate(target_doc)
    )
    sig = AbelianGroupSig(components)
    map_doc = _expect(payload, "map", dict, "")
    values: dict[str, tuple] = {}
    for label, entry in map_doc.items():
        path = f"map.{label}"
        if not (isinstance(entry, list) and len(entry) == len(components)):
            raise SchemaError(path, f"expected {len(components)} component values")
        values[label] = tuple(
            _value_from_doc(c, v, f"{path}[{i}]")
            for i, (c, v) in enumerate(zip(components, entry))
        )
    return validate_hom(groupoid, values, sig)


def hom_to_doc(hom: GroupoidHom) -> dict:
    sig = hom.target
    return {
        "target": [_component_to_doc(c) for c in sig.components],
        "map": {
            hom.groupoid.arrow_label(g): [
                _value_to_doc(c, v) for c, v in zip(sig.components, hom.values[g])
            ]
            for g in hom.groupoid.arrows()
        },
    }


# --- partition documents ----------------------------------------------------------


def partition_from_doc(groupoid: FiniteGroupoid, payload: dict) -> Partition:
    classes = _expect(payload, "classes", list, "")
    for i, cls in enumerate(classes):
        if not (isinstance(cls, list) and all(isinstance(x, str) for x in cls)):
            raise SchemaError(f"classes[{i}]", "expected a list of arrow labels")
    try:
        return partition_from_labels(groupoid, classes)
    except ValueError as exc:
        raise SchemaError("classes", str(exc)) from exc


def partition_to_doc(groupoid: FiniteGroupoid, partition: Partition) -> dict:
    return {
        "classes": [
            [groupoid.arrow_label(g) for g in members] for members in partition.classes
        ]
    }


# --- pairing documents ---------------------------------------------------------------


def bihom_from_doc(groupoid: FiniteGroupoid, payload: dict) -> Bihom:
    if "thetas" in payload:
        thetas_doc = _expect(payload, "thetas", list, "")
        homs = [hom_from_doc(groupoid, entry) for entry in thetas_doc]
        return sip_from_thetas(groupoid, homs)
    table_doc = _expect(payload, "table", dict, "")
    table: dict[tuple[int, int], GaussianRational] = {}
    for g_label, row in table_doc.items():
        g = groupoid.arrow_index(g_label)
        if not isinstance(row, dict):
            raise SchemaError(f"table.{g_label}", "expected an object of rows")
        for h_label, entry in row.items():
            h = groupoid.arrow_index(h_label)
            try:
                table[(g, h)] = parse_gaussian(entry)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise SchemaError(f"table.{g_label}.{h_label}", str(exc)) from exc
    return validate_bihom(groupoid, table)


def bihom_to_doc(bihom: Bihom) -> dict:
    groupoid = bihom.groupoid
    table: dict[str, dict[str, dict]] = {}
    for g in groupoid.arrows():
        row = {
            groupoid.arrow_label(h): format_gaussian(bihom.table[(g, h)])
            for h in groupoid.arrows()
            if (g, h) in bihom.table
        }
        if row:
            table[groupoid.arrow_label(g)] = row
    return {"table": table}


# --- norm documents ----------------------------------------------------------------


def norm_from_doc(groupoid: FiniteGroupoid, payload: dict) -> NormTable:
    sq_doc = _expect(payload, "sq", dict, "")
    values = []
    for g in groupoid.arrows():
        label = groupoid.arrow_label(g)
        if label not in sq_doc:
            raise SchemaError(f"sq.{label}", "missing squared value")
        try:
            values.append(rational(sq_doc[label]))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SchemaError(f"sq.{label}", str(exc)) from exc
    for label in sq_doc:
        groupoid.arrow_index(label)
    try:
        return norm_table(groupoid, values)
    except ValueError as exc:
        raise SchemaError("sq", str(exc)) from exc


def norm_to_doc(norm: NormTable) -> dict:
    return {
        "sq": {
            norm.groupoid.arrow_label(g): format_rational(norm.sq[g])
            for g in norm.groupoid.arrows()
        }
    }


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# --- reports ---------------------------------------------------------------------


PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass
class Check:
    """One named verification result with an optional witness string."""

    name: str
    result: str
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.result != FAIL


@dataclass
class Report:
    """Ordered list of checks; overall status is pass only if all checks pass."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, result, witness: str | None = None) -> Check:
        if isinstance(result, bool):
            result = PASS if result else FAIL
        check = Check(name, result, witness)
        self.checks.append(check)
        return check

    @property
    def status(self) -> str:
        if any(not c.ok for c in self.checks):
            return FAIL
        if self.checks and all(c.result == NOT_APPLICABLE for c in self.checks):
            return NOT_APPLICABLE
        return PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.status == PASS else 1

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "checks": [
                {"name": c.name, "result": c.result, "witness": c.witness}
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.name}: {c.result}"
            if c.witness is not None:
                line += f", witness: {c.witness}"
            lines.append(line)
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2) + "\n"
        return self.to_text()
