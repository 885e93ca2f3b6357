"""Exact integer linear algebra on Z^2.

Polygon validation, the crossing-number winding oracle and unimodular
canonicalization all live here. Nothing in this module touches floating point.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from math import gcd

from ..domain.models import FanoPolygon, LatticeVector, Model, UnimodularMap
from .exceptions import (
    DegenerateSegment,
    NotConvex,
    NotPrimitiveVertex,
    OriginNotInterior,
    OriginOnBoundary,
    TooFewVertices,
    WrongOrientation,
)

VectorInput = LatticeVector | Sequence[int]

# Swaps the coordinates; composing with a reversal of the vertex order keeps
# polygons anticlockwise.
REFLECTION = UnimodularMap(0, 1, 1, 0)


def as_vector(v: VectorInput) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    x, y = v
    return LatticeVector(int(x), int(y))


def det2(u: LatticeVector, v: LatticeVector) -> int:
    return u.x * v.y - u.y * v.x


def is_primitive(v: LatticeVector) -> bool:
    return not v.is_zero() and gcd(v.x, v.y) == 1


def primitive(v: LatticeVector) -> LatticeVector:
    """Shortest lattice vector on the ray through ``v`` (``v`` nonzero)."""
    g = gcd(v.x, v.y)
    return LatticeVector(v.x // g, v.y // g)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, rem = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while rem:
        q = old_r // rem
        old_r, rem = rem, old_r - q * rem
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def segment_lattice_length(p: LatticeVector, q: LatticeVector) -> int:
    if p == q:
        raise DegenerateSegment(p)
    return gcd(q.x - p.x, q.y - p.y)


def _normalizing_rows(
    ux: int, uy: int, wx: int, wy: int
) -> tuple[int, int, int, int, int]:
    """Rows of the det +1 map sending w to (0,1) and u to (r,-s), 0 <= s < r.

    ``w`` must be primitive and det2(u, w) = r > 0. Returns (a, b, c, d, r).
    """
    _, alpha, beta = extended_gcd(wx, wy)
    r = ux * wy - uy * wx
    t = alpha * ux + beta * uy
    shift = (-((-t) % r) - t) // r
    return wy, -wx, alpha + shift * wy, beta - shift * wx, r


def normalizing_map(u: LatticeVector, w: LatticeVector) -> UnimodularMap:
    """The unique det +1 map with w -> (0,1) and u -> (r,-s), 0 <= s < r."""
    a, b, c, d, _ = _normalizing_rows(u.x, u.y, w.x, w.y)
    return UnimodularMap(a, b, c, d)


def geometric_winding(loop: Sequence[VectorInput]) -> int:
    """Winding number of the closed polyline v_1 -> ... -> v_k -> v_1 about 0.

    Counts signed crossings of the positive half of the x-axis; an upward
    crossing with the origin on the left adds one, a downward crossing with the
    origin on the right subtracts one.
    """
    points = [as_vector(v) for v in loop]
    k = len(points)
    winding = 0
    for i, p in enumerate(points):
        q = points[(i + 1) % k]
        side = det2(p, q)
        if side == 0 and p.x * q.x + p.y * q.y <= 0:
            raise OriginOnBoundary(i, p, q)
        if p.y <= 0:
            if q.y > 0 and side > 0:
                winding += 1
        elif q.y <= 0 and side < 0:
            winding -= 1
    return winding


def validate_polygon(vertices: Iterable[VectorInput]) -> FanoPolygon:
    """Check the Fano conditions and re-index from the smallest vertex."""
    points = [as_vector(v) for v in vertices]
    k = len(points)
    if k < 3:
        raise TooFewVertices(k)

    for i, v in enumerate(points):
        if not is_primitive(v):
            raise NotPrimitiveVertex(i, v)

    dets = [det2(points[i], points[(i + 1) % k]) for i in range(k)]
    if all(d < 0 for d in dets):
        raise WrongOrientation()
    for i, d in enumerate(dets):
        if d <= 0:
            raise OriginNotInterior(i)

    if geometric_winding(points) != 1:
        raise NotConvex(reason=": vertices wind around the origin more than once")

    for i in range(k):
        a, b, c = points[i - 1], points[i], points[(i + 1) % k]
        if det2(b - a, c - b) <= 0:
            raise NotConvex(i)

    start = points.index(min(points))
    return FanoPolygon(tuple(points[start:] + points[:start]))


def apply_map(h: UnimodularMap, polygon: FanoPolygon) -> FanoPolygon:
    """Image of ``polygon`` under ``h``; reflections reverse the vertex order."""
    image = [h.apply(v) for v in polygon.vertices]
    if h.determinant < 0:
        image.reverse()
    return validate_polygon(image)


def _orientations(polygon: FanoPolygon) -> list[list[tuple[int, int]]]:
    forward = [(v.x, v.y) for v in polygon.vertices]
    reflected = [(y, x) for x, y in reversed(forward)]
    return [forward, reflected]


def canonical_form(polygon: FanoPolygon) -> Model:
    """Lexicographically least normalized vertex sequence over all GL2(Z) images.

    For each start i and both orientations the polygon is moved so that
    v_{i+1} = (0,1) and v_i = (r,-s) with 0 <= s < r, then read cyclically
    from v_i.
    """
    best: tuple[tuple[int, int], ...] | None = None
    k = polygon.k
    for points in _orientations(polygon):
        for i in range(k):
            ux, uy = points[i]
            wx, wy = points[(i + 1) % k]
            a, b, c, d, _ = _normalizing_rows(ux, uy, wx, wy)
            candidate = tuple(
                (a * x + b * y, c * x + d * y)
                for x, y in (points[(i + j) % k] for j in range(k))
            )
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return tuple(LatticeVector(x, y) for x, y in best)


def are_isomorphic(p: FanoPolygon, q: FanoPolygon) -> bool:
    if p.k != q.k:
        return False
    return canonical_form(p) == canonical_form(q)
