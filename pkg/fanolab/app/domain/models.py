"""Domain models for lattice geometry and classification results.

These dataclasses stay free of Pydantic concerns so the calculation layer can
be reused from the CLI, batch census runs and notebooks alike. All of them are
immutable; operations in ``core`` and ``classify`` build new values.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd

from ..core.exceptions import DegenerateCone, InvalidParameters, NotUnimodular


@dataclass(frozen=True, slots=True, order=True)
class LatticeVector:
    x: int
    y: int

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, factor: int) -> LatticeVector:
        return LatticeVector(factor * self.x, factor * self.y)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x},{self.y})"

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def as_list(self) -> list[int]:
        return [self.x, self.y]


@dataclass(frozen=True, slots=True)
class UnimodularMap:
    """Integer matrix [[a, b], [c, d]] acting on column vectors."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if abs(det) != 1:
            raise NotUnimodular(det)

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, v: LatticeVector) -> LatticeVector:
        return LatticeVector(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def compose(self, other: UnimodularMap) -> UnimodularMap:
        """Return ``self @ other`` (apply ``other`` first)."""
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> UnimodularMap:
        det = self.determinant
        return UnimodularMap(det * self.d, -det * self.b, -det * self.c, det * self.a)


@dataclass(frozen=True, slots=True)
class FanoPolygon:
    """Validated Fano polygon. Build it with ``core.lattice.validate_polygon``."""

    vertices: tuple[LatticeVector, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[LatticeVector, LatticeVector]]:
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]


@dataclass(frozen=True, slots=True)
class Cone:
    """Two-dimensional cone spanned by two rays, stored anticlockwise.

    A cone is a set, so rays given clockwise are swapped on construction;
    afterwards ``det2(ray1, ray2) > 0`` always holds.
    """

    ray1: LatticeVector
    ray2: LatticeVector

    def __post_init__(self) -> None:
        det = self.ray1.x * self.ray2.y - self.ray1.y * self.ray2.x
        if det == 0:
            raise DegenerateCone(self.ray1, self.ray2)
        if det < 0:
            ray1, ray2 = self.ray2, self.ray1
            object.__setattr__(self, "ray1", ray1)
            object.__setattr__(self, "ray2", ray2)


@dataclass(frozen=True, slots=True, order=True)
class CyclicQuotientSingularity:
    """The germ 1/r(1, s), encoded by the cone span((0,1), (r,-s))."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidParameters(f"Group order must be positive, got r = {self.r}")
        if self.r == 1:
            if self.s != 0:
                raise InvalidParameters("The smooth cone is written 1/1(1,0)")
            return
        if not 0 <= self.s < self.r:
            raise InvalidParameters(f"Weight s = {self.s} outside [0, {self.r})")
        if gcd(self.r, self.s) != 1:
            raise InvalidParameters(f"gcd(r, s) must be 1 for 1/{self.r}(1,{self.s})")

    @property
    def lattice_length(self) -> int:
        return gcd(self.r, self.s + 1)

    @property
    def lattice_height(self) -> int:
        return self.r // self.lattice_length

    def is_r_singularity(self) -> bool:
        return self.lattice_length < self.lattice_height

    def is_t_singularity(self) -> bool:
        return self.lattice_length % self.lattice_height == 0

    @property
    def label(self) -> str:
        return f"1/{self.r}(1,{self.s})"

    def __str__(self) -> str:
        return self.label


class ConeClassTag(str, Enum):
    PRIMITIVE_T = "PrimitiveT"
    T = "T"
    R = "R"
    COMPOSITE = "Composite"


@dataclass(frozen=True, slots=True)
class ConeClass:
    tag: ConeClassTag
    length: int
    height: int
    n: int
    remainder: int = 0
    residual: CyclicQuotientSingularity | None = None


@dataclass(frozen=True, slots=True)
class SingularityContent:
    n: int
    basket: tuple[CyclicQuotientSingularity, ...] = ()


@dataclass(frozen=True, slots=True)
class EdgeCone:
    """Per-edge breakdown used by content reports."""

    position: int
    cone: Cone
    singularity: CyclicQuotientSingularity
    cone_class: ConeClass


@dataclass(frozen=True, slots=True)
class RModularSequence:
    vectors: tuple[LatticeVector, ...]
    r: int
    eps: tuple[int, ...]
    coeffs: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vectors)


RationalVector = tuple[Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class DualSequence:
    vectors: tuple[RationalVector, ...]


@dataclass(frozen=True, slots=True)
class Factorization:
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


# Family templates -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AffineForm:
    """The integer expression r_coef*r + s_coef*s + const."""

    r_coef: int = 0
    s_coef: int = 0
    const: int = 0

    def evaluate(self, r: int, s: int) -> int:
        return self.r_coef * r + self.s_coef * s + self.const

    def __str__(self) -> str:
        parts: list[str] = []
        for coef, name in ((self.r_coef, "r"), (self.s_coef, "s")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else ("+" if parts else "")
            mag = "" if abs(coef) == 1 else str(abs(coef))
            parts.append(f"{sign}{mag}{name}")
        if self.const or not parts:
            sign = "-" if self.const < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(self.const)}")
        return "".join(parts)


@dataclass(frozen=True, slots=True)
class VertexTemplate:
    x: AffineForm
    y: AffineForm

    def evaluate(self, r: int, s: int) -> LatticeVector:
        return LatticeVector(self.x.evaluate(r, s), self.y.evaluate(r, s))

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True, slots=True)
class FamilyModel:
    """One vertex family; ``vertex_template`` starts at v_1 = (r,-s), v_2 = (0,1)."""

    family_id: str
    k: int
    vertex_template: tuple[VertexTemplate, ...]
    gcd_conditions: tuple[AffineForm, ...]


class ConeTypeStatus(str, Enum):
    CLOSED_FORM = "closed_form"
    UNKNOWN = "unknown"
    DEGENERATE = "degenerate"


@dataclass(frozen=True, slots=True)
class ExpectedConeType:
    position: int
    status: ConeTypeStatus
    formula: str
    singularity: CyclicQuotientSingularity | None = None


# Classification reports ---------------------------------------------------------


Model = tuple[LatticeVector, ...]


@dataclass(frozen=True, slots=True)
class CensusEntry:
    r: int
    k: int
    s: int
    polygon_count: int
    canonical_models: tuple[Model, ...]
    basket_homogeneous: bool = True


@dataclass(frozen=True, slots=True)
class Discrepancy:
    """A (k, r, s) cell where enumeration and the published criterion differ."""

    k: int
    r: int
    s: int
    enumerated: bool
    predicate: bool
    congruence: bool

    @property
    def explained(self) -> bool:
        return self.enumerated == self.congruence


@dataclass(frozen=True, slots=True)
class CensusReport:
    r_max: int
    entries: tuple[CensusEntry, ...]
    discrepancies: tuple[Discrepancy, ...] = ()
    polygon_totals: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True, slots=True)
class FamilyMatch:
    family_id: str
    s: int
    canonical: Model


@dataclass(frozen=True, slots=True)
class FamilyCoverageReport:
    r: int
    matches: tuple[FamilyMatch, ...]
    excluded_order: bool = False

    @property
    def polygon_count(self) -> int:
        return len(self.matches)


@dataclass(frozen=True, slots=True)
class K2rReport:
    k: int
    r: int
    l: int  # noqa: E741
    bound: int


@dataclass(frozen=True, slots=True)
class SolvabilityRow:
    r: int
    form: str
    solvable: bool
    prime_condition: bool
    solutions: tuple[int, ...] = field(default_factory=tuple)

    @property
    def agrees(self) -> bool:
        return self.solvable == self.prime_condition
