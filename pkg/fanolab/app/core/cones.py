"""Two-dimensional cones and the singularity content of Fano polygons.

A cone spanned by primitive rays u, w (anticlockwise) has lattice length
l = gcd of the edge w - u and lattice height h = det(u, w) / l. It is a
T-cone when h | l and an R-cone when l < h; otherwise it splits into
floor(l / h) primitive T-cones plus one residual R-cone.
"""

from __future__ import annotations

from math import gcd
from typing import Literal

from ..domain.models import (
    Cone,
    ConeClass,
    ConeClassTag,
    CyclicQuotientSingularity,
    EdgeCone,
    FanoPolygon,
    LatticeVector,
    SingularityContent,
)
from .exceptions import InvalidParameters
from .lattice import det2, normalizing_map, primitive, segment_lattice_length


ResidualPlacement = Literal["anticlockwise", "clockwise"]


def _primitive_rays(c: Cone) -> tuple[LatticeVector, LatticeVector]:
    return primitive(c.ray1), primitive(c.ray2)


def cone_normal_form(c: Cone) -> CyclicQuotientSingularity:
    """(r, s) such that a det +1 map sends (ray2, ray1) to ((0,1), (r,-s))."""
    u, w = _primitive_rays(c)
    r = det2(u, w)
    if r == 1:
        return CyclicQuotientSingularity(1, 0)
    image = normalizing_map(u, w).apply(u)
    return CyclicQuotientSingularity(r, -image.y)


def cone_metrics(c: Cone) -> tuple[int, int]:
    """Lattice length and height of the edge joining the primitive rays."""
    u, w = _primitive_rays(c)
    length = segment_lattice_length(u, w)
    return length, det2(u, w) // length


def classify_cone(c: Cone) -> ConeClass:
    length, height = cone_metrics(c)
    n, remainder = divmod(length, height)
    if length == height:
        return ConeClass(ConeClassTag.PRIMITIVE_T, length, height, n)
    if remainder == 0:
        return ConeClass(ConeClassTag.T, length, height, n)
    residual = _residual(c, length, remainder, "anticlockwise")
    tag = ConeClassTag.R if length < height else ConeClassTag.COMPOSITE
    return ConeClass(tag, length, height, n, remainder, residual)


def _residual(
    c: Cone, length: int, remainder: int, placement: ResidualPlacement
) -> CyclicQuotientSingularity:
    u, w = _primitive_rays(c)
    step = LatticeVector((w.x - u.x) // length, (w.y - u.y) // length)
    if placement == "anticlockwise":
        sub = Cone(w - step * remainder, w)
    else:
        sub = Cone(u, u + step * remainder)
    return cone_normal_form(sub)


def cone_singularity_content(
    c: Cone, placement: ResidualPlacement = "anticlockwise"
) -> tuple[int, CyclicQuotientSingularity | None]:
    """Number of primitive T-cones in the subdivision and the residual R-cone.

    The residual sub-cone sits at the ``placement`` end of the edge; either
    choice gives isomorphic singularities.
    """
    length, height = cone_metrics(c)
    n, remainder = divmod(length, height)
    if remainder == 0:
        return n, None
    return n, _residual(c, length, remainder, placement)


def cqs_isomorphic(a: CyclicQuotientSingularity, b: CyclicQuotientSingularity) -> bool:
    if a.r != b.r:
        return False
    return a.s == b.s or (a.s * b.s) % a.r == 1


def canonical_singularity(r: int, s: int) -> CyclicQuotientSingularity:
    """Representative min(s, s^-1 mod r) of the isomorphism class of 1/r(1,s)."""
    if r == 1:
        return CyclicQuotientSingularity(1, 0)
    if gcd(r, s) != 1:
        raise InvalidParameters(f"gcd({r}, {s}) != 1")
    s = s % r
    return CyclicQuotientSingularity(r, min(s, pow(s, -1, r)))


def polygon_cones(polygon: FanoPolygon) -> list[Cone]:
    return [Cone(u, w) for u, w in polygon.edges()]


def edge_cones(polygon: FanoPolygon) -> list[EdgeCone]:
    return [
        EdgeCone(i + 1, c, cone_normal_form(c), classify_cone(c))
        for i, c in enumerate(polygon_cones(polygon))
    ]


def polygon_singularity_content(polygon: FanoPolygon) -> SingularityContent:
    total = 0
    basket: list[CyclicQuotientSingularity] = []
    for c in polygon_cones(polygon):
        n, residual = cone_singularity_content(c)
        total += n
        if residual is not None:
            basket.append(residual)
    return SingularityContent(total, tuple(basket))


def edge_heights(polygon: FanoPolygon) -> list[int]:
    return [cone_metrics(c)[1] for c in polygon_cones(polygon)]


def l_reflexive_index(polygon: FanoPolygon) -> int | None:
    """Common lattice height of all edges, or None when the heights differ."""
    heights = set(edge_heights(polygon))
    return heights.pop() if len(heights) == 1 else None


def is_homogeneous(content: SingularityContent, r: int | None = None) -> bool:
    """True for content (0, {k x 1/r(1,s)}) with a nonempty basket."""
    if content.n != 0 or not content.basket:
        return False
    first = content.basket[0]
    if r is not None and first.r != r:
        return False
    return all(cqs_isomorphic(first, other) for other in content.basket[1:])
