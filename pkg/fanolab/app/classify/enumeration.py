"""Exhaustive search for Fano polygons whose cones are all determinant-r R-cones.

With every sign equal to +1 the vertices satisfy v_{i+1} = -v_{i-1} - a_i v_i
and the winding formula forces sum(a_i) = 12 - 3k. Convex vertices have
a_i >= -1, so each k leaves finitely many coefficient tuples and none at all
once k >= 7. Each search cell fixes (r, k, s), seeds v_1 = (r,-s), v_2 = (0,1),
and unrolls every tuple; closed loops with primitive vertices and R-cones are
kept and deduplicated by canonical form.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from functools import cache
from math import gcd
from multiprocessing import Pool

from ..core.exceptions import InvalidParameters
from ..core.lattice import canonical_form, validate_polygon
from ..domain.models import FanoPolygon, Model

logger = logging.getLogger(__name__)

MIN_VERTICES = 3
MAX_VERTICES = 6
R_MAX_CAP = 200

Cell = tuple[int, int, int]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head, *tail)


@cache
def coefficient_tuples(k: int) -> tuple[tuple[int, ...], ...]:
    """All (a_1, ..., a_k) with every a_i >= -1 and sum 12 - 3k."""
    slack = 12 - 3 * k + k  # sum of (a_i + 1)
    if k < 1 or slack < 0:
        return ()
    return tuple(tuple(b - 1 for b in comp) for comp in _compositions(slack, k))


def unroll(r: int, s: int, coeffs: tuple[int, ...]) -> list[tuple[int, int]] | None:
    """Vertices v_1 .. v_k of the loop seeded at (r,-s), (0,1), or None if it does not close."""
    k = len(coeffs)
    points = [(r, -s), (0, 1)]
    # a_{k+1} = a_1 closes the cycle: v_{k+2} must return to v_2.
    for i in range(1, k + 1):
        a = coeffs[i % k]
        (px, py), (qx, qy) = points[i - 1], points[i]
        points.append((-px - a * qx, -py - a * qy))
    if points[k] != points[0] or points[k + 1] != points[1]:
        return None
    return points[:k]


def _all_r_cones(points: list[tuple[int, int]], r: int) -> bool:
    k = len(points)
    for i in range(k):
        (ux, uy), (wx, wy) = points[i], points[(i + 1) % k]
        if gcd(ux, uy) != 1:
            return False
        length = gcd(wx - ux, wy - uy)
        # R-cone: length < height = r / length
        if length * length >= r:
            return False
    return True


def search_cell(cell: Cell) -> list[Model]:
    """Canonical models found from one seed cone; safe to run in a worker process."""
    r, k, s = cell
    found: dict[Model, None] = {}
    for coeffs in coefficient_tuples(k):
        points = unroll(r, s, coeffs)
        if points is None or not _all_r_cones(points, r):
            continue
        found.setdefault(canonical_form(validate_polygon(points)))
    return list(found)


def cells_for(r: int, ks: Iterable[int] = range(MIN_VERTICES, MAX_VERTICES + 1)) -> list[Cell]:
    return [(r, k, s) for k in ks for s in range(1, r) if gcd(r, s) == 1]


def run_cells(cells: list[Cell], jobs: int = 1) -> list[list[Model]]:
    """Search every cell, in order; ``jobs > 1`` spreads cells over worker processes."""
    if jobs <= 1 or len(cells) < 2:
        return [search_cell(cell) for cell in cells]
    with Pool(processes=jobs) as pool:
        return pool.map(search_cell, cells, chunksize=max(1, len(cells) // (4 * jobs)))


def _model_key(model: Model) -> tuple[int, Model]:
    return len(model), model


def merge_models(results: Iterable[list[Model]]) -> list[Model]:
    """Deduplicate and sort canonically, independent of the order cells finished in."""
    unique = {model for models in results for model in models}
    return sorted(unique, key=_model_key)


def _check_order(r: int) -> None:
    if r < 3:
        raise InvalidParameters(f"Enumeration needs r >= 3, got {r}")


def enumerate_det_r_models(r: int, jobs: int = 1) -> list[Model]:
    _check_order(r)
    models = merge_models(run_cells(cells_for(r), jobs))
    logger.debug("r=%d: %d polygons with all determinant-r R-cones", r, len(models))
    return models


def enumerate_det_r_fanos(r: int, jobs: int = 1) -> list[FanoPolygon]:
    """All such polygons up to GL2(Z), vertices listed in canonical order."""
    return [FanoPolygon(model) for model in enumerate_det_r_models(r, jobs)]


def enumerate_range(r_values: Iterable[int], jobs: int = 1) -> dict[int, list[Model]]:
    """Models for several r at once, sharing one worker pool."""
    orders = list(r_values)
    for r in orders:
        _check_order(r)
    cells = [cell for r in orders for cell in cells_for(r)]
    results = run_cells(cells, jobs)
    grouped: dict[int, list[list[Model]]] = {r: [] for r in orders}
    for (r, _, _), models in zip(cells, results, strict=True):
        grouped[r].append(models)
    merged = {r: merge_models(parts) for r, parts in grouped.items()}
    for r, models in merged.items():
        logger.info("r=%d: %d polygons", r, len(models))
    return merged
