"""Exception types for the groupoid toolkit.

Errors that carry witnesses name arrows and objects by their labels, never
by internal indices, so messages can be surfaced to users unchanged.
"""

from __future__ import annotations


class GrpdError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(GrpdError):
    """A structure exceeds the configured size caps."""


# --- groupoid construction and validation ---------------------------------


class GroupoidError(GrpdError):
    pass


class DanglingReference(GroupoidError):
    def __init__(self, kind: str, label: str, detail: str = "unknown") -> None:
        super().__init__(f"{detail} {kind} label {label!r}")
        self.kind = kind
        self.label = label


class MissingIdentity(GroupoidError):
    def __init__(self, obj: str, detail: str = "no neutral arrow") -> None:
        super().__init__(f"object {obj!r}: {detail}")
        self.object = obj


class NotAssociative(GroupoidError):
    def __init__(self, g: str, h: str, k: str) -> None:
        super().__init__(f"associativity fails at ({g!r}, {h!r}, {k!r})")
        self.witness = (g, h, k)


class BadInverse(GroupoidError):
    def __init__(self, g: str, detail: str) -> None:
        super().__init__(f"arrow {g!r}: {detail}")
        self.arrow = g


class BadCompositionDomain(GroupoidError):
    def __init__(self, g: str, h: str, detail: str) -> None:
        super().__init__(f"pair ({g!r}, {h!r}): {detail}")
        self.witness = (g, h)


class NotComposable(GroupoidError):
    def __init__(self, g: str, h: str) -> None:
        super().__init__(f"arrows {g!r} and {h!r} are not composable")
        self.witness = (g, h)


class UnknownObject(GroupoidError):
    def __init__(self, label: str) -> None:
        super().__init__(f"unknown object {label!r}")
        self.label = label


class UnknownArrow(GroupoidError):
    def __init__(self, label: str) -> None:
        super().__init__(f"unknown arrow {label!r}")
        self.label = label


class EmptyBase(GroupoidError):
    def __init__(self) -> None:
        super().__init__("restriction base must be nonempty")


class BadParams(GroupoidError):
    pass


# --- homomorphisms and congruences -----------------------------------------


class HomError(GrpdError):
    pass


class NotAdditive(HomError):
    def __init__(self, g: str, h: str, detail: str = "") -> None:
        msg = f"additivity fails at ({g!r}, {h!r})"
        super().__init__(msg + (f": {detail}" if detail else ""))
        self.witness = (g, h)


class MissingArrow(HomError):
    def __init__(self, label: str) -> None:
        super().__init__(f"no value for arrow {label!r}")
        self.label = label


class EmptyList(HomError):
    def __init__(self) -> None:
        super().__init__("at least one homomorphism required")


class MixedGroupoids(GrpdError):
    def __init__(self) -> None:
        super().__init__("homomorphisms are not all over the same groupoid")


class NotACongruence(HomError):
    def __init__(self, axiom: str, witness: tuple[str, str, str, str]) -> None:
        super().__init__(f"{axiom} axiom fails at {witness}")
        self.axiom = axiom
        self.witness = witness


# --- bihomomorphisms and semi-inner products --------------------------------


class SipError(GrpdError):
    pass


class NotScalarTarget(SipError):
    def __init__(self, detail: str) -> None:
        super().__init__(detail)


class NotSeparating(SipError):
    def __init__(self, arrow: str) -> None:
        super().__init__(
            f"family does not separate identities: all values vanish on {arrow!r}"
        )
        self.arrow = arrow


class NotBihom(SipError):
    def __init__(self, slot: str, g: str, h: str, k: str) -> None:
        super().__init__(f"{slot}-slot additivity fails at ({g!r}, {h!r}, {k!r})")
        self.slot = slot
        self.witness = (g, h, k)


class ScalarSetNotSingleton(SipError):
    def __init__(self, obj: str, members: tuple[str, ...]) -> None:
        super().__init__(
            f"scalar set at object {obj!r} has more than one element: {members}"
        )
        self.object = obj
        self.members = members


# --- norms -------------------------------------------------------------------


class NormError(GrpdError):
    pass


class NotSip(NormError):
    def __init__(self, report) -> None:
        super().__init__(f"pairing is not a semi-inner product: {report.summary()}")
        self.report = report


class NotConsistent(NormError):
    def __init__(self, detail: str) -> None:
        super().__init__(f"norm is not consistent with the congruence: {detail}")


class NoWitness(NormError):
    def __init__(self, g: str, h: str) -> None:
        super().__init__(f"no witness quadruple for pair ({g!r}, {h!r})")
        self.witness = (g, h)


class WitnessDisagreement(NormError):
    def __init__(self, g: str, h: str, values: tuple) -> None:
        super().__init__(
            f"witness quadruples for ({g!r}, {h!r}) give conflicting values {values}"
        )
        self.witness = (g, h)
        self.values = values


class ResultNotSip(NormError):
    def __init__(self, report) -> None:
        super().__init__(f"polarized pairing fails validation: {report.summary()}")
        self.report = report


# --- documents ----------------------------------------------------------------


class DocumentError(GrpdError):
    pass


class ParseError(DocumentError):
    def __init__(self, line: int, col: int, detail: str) -> None:
        super().__init__(f"line {line}, column {col}: {detail}")
        self.line = line
        self.col = col


class SchemaError(DocumentError):
    def __init__(self, path: str, detail: str) -> None:
        super().__init__(f"{path}: {detail}" if path else detail)
        self.path = path
        self.detail = detail
