"""Exception hierarchy for the calculation layer.

Every error derives from ``ValueError`` through :class:`FanolabError`, so code
that only guards against bad input values keeps working. The CLI maps the
families below to exit codes (see ``fanolab.app.cli.errors``).
"""

from __future__ import annotations


class FanolabError(ValueError):
    """Base class for every error raised by fanolab."""


# Lattice and polygons ---------------------------------------------------------


class LatticeError(FanolabError):
    pass


class DegenerateSegment(LatticeError):
    def __init__(self, point: object) -> None:
        super().__init__(f"Segment endpoints coincide at {point}")
        self.point = point


class OriginOnBoundary(LatticeError):
    def __init__(self, index: int, source: object, target: object) -> None:
        super().__init__(
            f"Edge {index} from {source} to {target} passes through the origin"
        )
        self.index = index


class NotUnimodular(LatticeError):
    def __init__(self, determinant: int) -> None:
        super().__init__(f"Matrix determinant is {determinant}, expected +1 or -1")
        self.determinant = determinant


class PolygonValidationError(LatticeError):
    """Raised when a vertex list does not describe a Fano polygon."""


class TooFewVertices(PolygonValidationError):
    def __init__(self, count: int) -> None:
        super().__init__(f"A polygon needs at least 3 vertices, got {count}")
        self.count = count


class NotPrimitiveVertex(PolygonValidationError):
    def __init__(self, index: int, vertex: object) -> None:
        super().__init__(f"Vertex {index} {vertex} is not primitive")
        self.index = index


class WrongOrientation(PolygonValidationError):
    def __init__(self) -> None:
        super().__init__("Vertices are ordered clockwise; anticlockwise order is required")


class OriginNotInterior(PolygonValidationError):
    def __init__(self, index: int) -> None:
        super().__init__(
            f"Origin is not strictly interior: det(v_{index + 1}, v_{index + 2}) <= 0"
        )
        self.index = index


class NotConvex(PolygonValidationError):
    def __init__(self, index: int | None = None, reason: str = "") -> None:
        where = f" at vertex {index}" if index is not None else ""
        super().__init__(f"Polygon is not strictly convex{where}{reason}")
        self.index = index


# Cones ------------------------------------------------------------------------


class ConeError(FanolabError):
    pass


class DegenerateCone(ConeError):
    def __init__(self, ray1: object, ray2: object) -> None:
        super().__init__(f"Rays {ray1} and {ray2} do not span a two-dimensional cone")


# r-modular sequences ----------------------------------------------------------


class SequenceError(FanolabError):
    pass


class NotPrimitive(SequenceError):
    def __init__(self, index: int, vector: object) -> None:
        super().__init__(f"Vector {index} {vector} is not primitive")
        self.index = index


class ZeroDeterminant(SequenceError):
    def __init__(self, index: int) -> None:
        super().__init__(f"Consecutive vectors {index} and {index + 1} are parallel")
        self.index = index


class NonUniformDeterminant(SequenceError):
    def __init__(self, index: int, expected: int, found: int) -> None:
        super().__init__(
            f"|det| at position {index} is {found}; the sequence started with {expected}"
        )
        self.index = index


class NonIntegralWinding(SequenceError):
    def __init__(self, numerator: int) -> None:
        super().__init__(
            f"Sum of coefficients plus three times the signs is {numerator}, "
            "which is not divisible by 12"
        )
        self.numerator = numerator


class GenerationExhausted(SequenceError):
    def __init__(self, r: int, k: int, attempts: int) -> None:
        super().__init__(f"No closed {r}-modular loop of length {k} after {attempts} attempts")


# Number theory ----------------------------------------------------------------


class NumberTheoryError(FanolabError):
    pass


class NotOddPrime(NumberTheoryError):
    def __init__(self, p: int) -> None:
        super().__init__(f"{p} is not an odd prime")
        self.p = p


class InputTooLarge(NumberTheoryError):
    def __init__(self, n: int, limit: int) -> None:
        super().__init__(f"{n} exceeds the trial-division limit {limit}")


class InvalidParameters(FanolabError):
    pass


# Families and classification --------------------------------------------------


class ClassificationError(FanolabError):
    pass


class UnknownFamily(ClassificationError):
    def __init__(self, family_id: str) -> None:
        super().__init__(f"Unknown family '{family_id}'")
        self.family_id = family_id


class GcdConditionViolated(ClassificationError):
    def __init__(self, family_id: str, condition: str, r: int, s: int) -> None:
        super().__init__(f"{family_id} requires {condition}; fails at (r, s) = ({r}, {s})")
        self.condition = condition


class NotConvexAtParameters(ClassificationError):
    def __init__(self, family_id: str, r: int, s: int, detail: str) -> None:
        super().__init__(f"{family_id} at (r, s) = ({r}, {s}) is not a Fano polygon: {detail}")


# Verification failures (exit code 2) ------------------------------------------


class VerificationError(FanolabError):
    """A computed result contradicts the classification being checked."""


class OrphanPolygonFound(VerificationError):
    def __init__(self, r: int, vertices: object) -> None:
        super().__init__(f"Polygon {vertices} at r = {r} matches no family model")
        self.r = r
        self.vertices = vertices


class PredicateMismatch(VerificationError):
    def __init__(self, cells: list[tuple[int, int, int]], criterion: str) -> None:
        preview = ", ".join(str(c) for c in cells[:8])
        more = "" if len(cells) <= 8 else f" (+{len(cells) - 8} more)"
        super().__init__(f"Enumeration disagrees with {criterion} at (k, r, s) in {preview}{more}")
        self.cells = cells
        self.criterion = criterion


class UniquenessViolation(VerificationError):
    def __init__(self, k: int, r: int, s: int, count: int, expected: int) -> None:
        super().__init__(f"(k, r, s) = ({k}, {r}, {s}) has {count} models, expected {expected}")


class RuleViolation(VerificationError):
    pass


# Documents --------------------------------------------------------------------


class DocumentError(FanolabError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"Invalid JSON at line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NonIntegerCoordinate(DocumentError):
    def __init__(self, index: int, value: object) -> None:
        super().__init__(f"Entry {index} has a non-integer coordinate: {value!r}")
        self.index = index


class MissingField(DocumentError):
    def __init__(self, field: str) -> None:
        super().__init__(f"Missing required field '{field}'")
        self.field = field
