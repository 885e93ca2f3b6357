"""The nine vertex families of Fano polygons whose cones all have determinant r.

Each template is listed from v_1 = (r,-s), v_2 = (0,1) and continues
anticlockwise. Cone sigma_i is spanned by v_i and v_{i+1}. The closed-form
cone types below are the tabulated ones; entries that have no closed form are
reported as unknown and computed from the polygon instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from ..domain.models import (
    AffineForm,
    ConeTypeStatus,
    CyclicQuotientSingularity,
    ExpectedConeType,
    FamilyModel,
    FanoPolygon,
    LatticeVector,
    VertexTemplate,
)
from .exceptions import (
    GcdConditionViolated,
    InvalidParameters,
    NotConvexAtParameters,
    PolygonValidationError,
    UnknownFamily,
)
from .lattice import det2, validate_polygon

_TERM = re.compile(r"([+-]?)(\d*)([rs]?)")


def _form(text: str) -> AffineForm:
    """Parse a small affine expression such as ``-r``, ``s+1`` or ``0``."""
    coefs = {"r": 0, "s": 0, "": 0}
    for sign, digits, name in _TERM.findall(text.replace(" ", "")):
        if not (digits or name):
            continue
        value = int(digits) if digits else 1
        coefs[name] += -value if sign == "-" else value
    return AffineForm(coefs["r"], coefs["s"], coefs[""])


def _vertices(*pairs: tuple[str, str]) -> tuple[VertexTemplate, ...]:
    return tuple(VertexTemplate(_form(x), _form(y)) for x, y in pairs)


_S, _S_MINUS_1, _S_PLUS_1 = _form("s"), _form("s-1"), _form("s+1")

FAMILIES: dict[str, FamilyModel] = {
    model.family_id: model
    for model in (
        FamilyModel(
            "k3f1", 3, _vertices(("r", "-s"), ("0", "1"), ("-r", "s-1")), (_S, _S_MINUS_1)
        ),
        FamilyModel(
            "k4f1", 4, _vertices(("r", "-s"), ("0", "1"), ("-r", "s"), ("0", "-1")), (_S,)
        ),
        FamilyModel(
            "k4f2",
            4,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s+1"), ("0", "-1")),
            (_S, _S_PLUS_1),
        ),
        FamilyModel(
            "k4f3",
            4,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s"), ("r", "-s-1")),
            (_S, _S_PLUS_1),
        ),
        FamilyModel(
            "k4f4",
            4,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s"), ("-r", "s-1")),
            (_S, _S_MINUS_1),
        ),
        FamilyModel(
            "k5f1",
            5,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s+1"), ("-r", "s"), ("0", "-1")),
            (_S, _S_PLUS_1),
        ),
        FamilyModel(
            "k5f2",
            5,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s"), ("-r", "s-1"), ("0", "-1")),
            (_S, _S_MINUS_1),
        ),
        FamilyModel(
            "k5f3",
            5,
            _vertices(("r", "-s"), ("0", "1"), ("-r", "s+1"), ("-r", "s"), ("r", "-s-1")),
            (_S, _S_PLUS_1),
        ),
        FamilyModel(
            "k6f1",
            6,
            _vertices(
                ("r", "-s"), ("0", "1"), ("-r", "s+1"), ("-r", "s"), ("0", "-1"), ("r", "-s-1")
            ),
            (_S, _S_PLUS_1),
        ),
    )
}


def get_family(family: FamilyModel | str) -> FamilyModel:
    if isinstance(family, FamilyModel):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise UnknownFamily(family) from None


def check_parameters(family: FamilyModel | str, r: int, s: int) -> FamilyModel:
    model = get_family(family)
    if r < 2 or not 1 <= s < r:
        raise InvalidParameters(f"{model.family_id} needs r >= 2 and 1 <= s < r, got ({r}, {s})")
    for condition in model.gcd_conditions:
        if gcd(r, condition.evaluate(r, s)) != 1:
            raise GcdConditionViolated(model.family_id, f"gcd(r, {condition}) = 1", r, s)
    return model


def valid_parameters(family: FamilyModel | str, r: int) -> list[int]:
    """Every s in [1, r) meeting the family's coprimality conditions."""
    model = get_family(family)
    return [
        s
        for s in range(1, r)
        if all(gcd(r, c.evaluate(r, s)) == 1 for c in model.gcd_conditions)
    ]


def family_vertices(family: FamilyModel | str, r: int, s: int) -> list[LatticeVector]:
    """Template vertices v_1, ..., v_k at (r, s), in template order."""
    model = check_parameters(family, r, s)
    return [v.evaluate(r, s) for v in model.vertex_template]


def family_polygon(family: FamilyModel | str, r: int, s: int) -> FanoPolygon:
    model = check_parameters(family, r, s)
    vertices = [v.evaluate(r, s) for v in model.vertex_template]
    try:
        polygon = validate_polygon(vertices)
    except PolygonValidationError as exc:
        raise NotConvexAtParameters(model.family_id, r, s, str(exc)) from exc
    for u, w in polygon.edges():
        if det2(u, w) != r:
            raise NotConvexAtParameters(
                model.family_id, r, s, f"cone {u}, {w} has determinant {det2(u, w)}"
            )
    return polygon


# Tabulated cone types -----------------------------------------------------------


@dataclass(frozen=True)
class _Weight:
    """1/r(1, w) with w an affine form in (r, s)."""

    weight: AffineForm

    @property
    def formula(self) -> str:
        return f"1/r(1,{self.weight})"


@dataclass(frozen=True)
class _FloorPair:
    """1/r(r - A*q, r - B*q) with q = floor(r / D)."""

    a: AffineForm
    b: AffineForm
    divisor: AffineForm

    @property
    def formula(self) -> str:
        return f"1/r(r-({self.a})q, r-({self.b})q), q = floor(r/({self.divisor}))"


@dataclass(frozen=True)
class _Unknown:
    formula: str = "unknown R-singularity"


_Entry = _Weight | _FloorPair | _Unknown

_FLOOR_S = _FloorPair(_S_MINUS_1, _S, _S)
_FLOOR_S_PLUS_1 = _FloorPair(_S, _S_PLUS_1, _S_PLUS_1)
_UNKNOWN = _Unknown()


def _w(text: str) -> _Weight:
    return _Weight(_form(text))


CONE_TYPES: dict[str, tuple[_Entry, ...]] = {
    "k3f1": (_w("s"), _w("r+1-s"), _FLOOR_S),
    "k4f1": (_w("s"), _w("r-s"), _w("s"), _w("r-s")),
    "k4f2": (_w("s"), _w("r-1-s"), _w("s+1"), _w("r-s")),
    "k4f3": (_w("s"), _w("r-s"), _FLOOR_S_PLUS_1, _UNKNOWN),
    "k4f4": (_w("s"), _w("r-s"), _UNKNOWN, _FLOOR_S),
    "k5f1": (_w("s"), _w("r-1-s"), _UNKNOWN, _w("s"), _w("r-s")),
    "k5f2": (_w("s"), _w("r-s"), _UNKNOWN, _w("s-1"), _w("r-s")),
    "k5f3": (_w("s"), _w("r-1-s"), _UNKNOWN, _FLOOR_S_PLUS_1, _UNKNOWN),
    "k6f1": (_w("s"), _w("r-1-s"), _UNKNOWN, _w("s"), _w("r-1-s"), _UNKNOWN),
}


def _pair_weight(a: int, b: int, r: int) -> int | None:
    """Normalize 1/r(a, b) to 1/r(1, a^-1 b); None if either weight shares a factor with r."""
    if gcd(a, r) != 1 or gcd(b, r) != 1:
        return None
    return (pow(a, -1, r) * b) % r


def _evaluate(entry: _Entry, position: int, r: int, s: int) -> ExpectedConeType:
    if isinstance(entry, _Unknown):
        return ExpectedConeType(position, ConeTypeStatus.UNKNOWN, entry.formula)
    if isinstance(entry, _Weight):
        weight: int | None = entry.weight.evaluate(r, s) % r
        if gcd(weight, r) != 1:
            weight = None
    else:
        q = r // entry.divisor.evaluate(r, s)
        weight = _pair_weight(
            r - entry.a.evaluate(r, s) * q, r - entry.b.evaluate(r, s) * q, r
        )
    if weight is None:
        return ExpectedConeType(position, ConeTypeStatus.DEGENERATE, entry.formula)
    return ExpectedConeType(
        position,
        ConeTypeStatus.CLOSED_FORM,
        entry.formula,
        CyclicQuotientSingularity(r, weight),
    )


def family_cone_types(family: FamilyModel | str, r: int, s: int) -> list[ExpectedConeType]:
    """Tabulated cone types sigma_1, ..., sigma_k of a family at (r, s).

    Two-argument forms 1/r(a, b) are normalized to 1/r(1, a^-1 b mod r). When
    the floor quotient makes a or b share a factor with r the entry is marked
    degenerate rather than normalized.
    """
    model = check_parameters(family, r, s)
    return [
        _evaluate(entry, i + 1, r, s) for i, entry in enumerate(CONE_TYPES[model.family_id])
    ]
