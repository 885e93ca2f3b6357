"""Checks of the two classification results against the exhaustive search."""

from __future__ import annotations

import logging
from collections import defaultdict
from math import gcd

from ..core.cones import (
    canonical_singularity,
    cone_normal_form,
    cqs_isomorphic,
    is_homogeneous,
    polygon_singularity_content,
)
from ..core.exceptions import (
    InvalidParameters,
    NotConvexAtParameters,
    OrphanPolygonFound,
    PredicateMismatch,
    RuleViolation,
    UniquenessViolation,
)
from ..core.families import FAMILIES, family_polygon, family_vertices, valid_parameters
from ..core.lattice import canonical_form, det2
from ..core.numthy import congruence_criterion, existence_predicate
from ..domain.models import (
    CensusEntry,
    CensusReport,
    Cone,
    Discrepancy,
    FamilyCoverageReport,
    FamilyMatch,
    FanoPolygon,
    K2rReport,
    Model,
    UnimodularMap,
)
from .enumeration import MAX_VERTICES, MIN_VERTICES, R_MAX_CAP, enumerate_range

logger = logging.getLogger(__name__)

# Orders the family classification does not cover.
EXCLUDED_ORDERS = frozenset({1, 2, 4})
# The only cell with two non-isomorphic models.
DOUBLE_MODEL_CELL = (4, 5, 2)


# Family coverage ----------------------------------------------------------------


def family_index(r: int, ks: set[int] | None = None) -> dict[Model, tuple[str, int]]:
    """Canonical form -> (family id, s) for every family model at order r."""
    index: dict[Model, tuple[str, int]] = {}
    for family_id, model in FAMILIES.items():
        if ks is not None and model.k not in ks:
            continue
        for s in valid_parameters(model, r):
            try:
                polygon = family_polygon(model, r, s)
            except NotConvexAtParameters:
                continue
            index.setdefault(canonical_form(polygon), (family_id, s))
    return index


def match_families(r: int, models: list[Model]) -> FamilyCoverageReport:
    index = family_index(r, {len(m) for m in models})
    matches = []
    for model in models:
        hit = index.get(model)
        if hit is None:
            raise OrphanPolygonFound(r, [v.as_list() for v in model])
        matches.append(FamilyMatch(hit[0], hit[1], model))
    return FamilyCoverageReport(r, tuple(matches), excluded_order=r in EXCLUDED_ORDERS)


def verify_family_coverage(r: int, jobs: int = 1) -> FamilyCoverageReport:
    """Match every enumerated polygon at order r to a family model.

    Only enumerated-in-families is asserted; family members whose cones are not
    all R-cones never appear in the enumeration.
    """
    models = enumerate_range([r], jobs)[r]
    report = match_families(r, models)
    logger.info("r=%d: %d polygons matched to families", r, report.polygon_count)
    return report


# Homogeneous census -------------------------------------------------------------


def homogeneous_class(model: Model, r: int) -> int | None:
    """s_min of the common cone type when all cones of ``model`` agree, else None."""
    polygon = FanoPolygon(model)
    content = polygon_singularity_content(polygon)
    if not is_homogeneous(content, r):
        return None
    first = content.basket[0]
    return canonical_singularity(first.r, first.s).s


def census_entries(r: int, models: list[Model]) -> list[CensusEntry]:
    groups: dict[tuple[int, int], list[Model]] = defaultdict(list)
    for model in models:
        s_min = homogeneous_class(model, r)
        if s_min is not None:
            groups[(len(model), s_min)].append(model)
    return [
        CensusEntry(r, k, s, len(found), tuple(found))
        for (k, s), found in sorted(groups.items())
    ]


def _compare_cells(
    r: int, found: set[tuple[int, int]]
) -> tuple[list[Discrepancy], list[tuple[int, int, int]]]:
    discrepancies: list[Discrepancy] = []
    unexplained: list[tuple[int, int, int]] = []
    for k in range(MIN_VERTICES, MAX_VERTICES + 1):
        for s in range(1, r):
            if gcd(r, s) != 1:
                continue
            enumerated = (k, canonical_singularity(r, s).s) in found
            predicate = existence_predicate(k, r, s)
            congruence = congruence_criterion(k, r, s)
            if enumerated != predicate:
                discrepancies.append(Discrepancy(k, r, s, enumerated, predicate, congruence))
            if enumerated != congruence:
                unexplained.append((k, r, s))
    return discrepancies, unexplained


def verify_homogeneous_census(
    r_max: int, *, strict: bool = False, jobs: int = 1, r_max_cap: int = R_MAX_CAP
) -> CensusReport:
    """Census of polygons with content (0, {k x 1/r(1,s)}) for 3 <= r <= r_max.

    Every (k, r, s) is compared with the published existence criterion and with
    the congruence criterion. Disagreements with the published one are
    returned as discrepancies; disagreements with the congruence criterion (or
    any discrepancy when ``strict``) raise PredicateMismatch.
    """
    if r_max < 3:
        raise InvalidParameters(f"r_max must be at least 3, got {r_max}")
    if r_max > r_max_cap:
        raise InvalidParameters(f"r_max = {r_max} exceeds the cap {r_max_cap}")

    by_order = enumerate_range(range(3, r_max + 1), jobs)
    entries: list[CensusEntry] = []
    discrepancies: list[Discrepancy] = []
    unexplained: list[tuple[int, int, int]] = []
    for r, models in by_order.items():
        rows = census_entries(r, models)
        for row in rows:
            expected = 2 if (row.k, row.r, row.s) == DOUBLE_MODEL_CELL else 1
            if row.polygon_count != expected:
                raise UniquenessViolation(row.k, row.r, row.s, row.polygon_count, expected)
        entries.extend(rows)
        found = {(row.k, row.s) for row in rows}
        cell_discrepancies, cell_unexplained = _compare_cells(r, found)
        discrepancies.extend(cell_discrepancies)
        unexplained.extend(cell_unexplained)

    for d in discrepancies:
        logger.warning(
            "published criterion disagrees at (k, r, s) = (%d, %d, %d): enumerated=%s",
            d.k, d.r, d.s, d.enumerated,
        )
    if unexplained:
        raise PredicateMismatch(unexplained, "the congruence criterion")
    if strict and discrepancies:
        raise PredicateMismatch(
            [(d.k, d.r, d.s) for d in discrepancies], "the published existence criterion"
        )

    totals = tuple((r, len(models)) for r, models in by_order.items())
    return CensusReport(r_max, tuple(entries), tuple(discrepancies), totals)


# Structural rules -----------------------------------------------------------------


def check_k2r_counts(k: int, r: int) -> K2rReport:
    """k cones of type 1/r(1,1) need 2r | k and 4*r*(k / 2r) <= 12."""
    if k % (2 * r):
        raise RuleViolation(f"{k} cones of type 1/{r}(1,1): 2r = {2 * r} does not divide k")
    l = k // (2 * r)  # noqa: E741
    bound = 4 * r * l
    if bound > 12:
        raise RuleViolation(f"4*r*l = {bound} exceeds 12 for k = {k}, r = {r}")
    return K2rReport(k, r, l, bound)


def check_k2r_rule(polygon: FanoPolygon) -> K2rReport:
    content = polygon_singularity_content(polygon)
    if content.n or not content.basket or any(
        b.s != 1 or b.r != content.basket[0].r for b in content.basket
    ):
        raise RuleViolation(
            "The rule applies only to content (0, {k x 1/r(1,1)}); got "
            f"n = {content.n} and {len(content.basket)} basket entries"
        )
    return check_k2r_counts(len(content.basket), content.basket[0].r)


def hexagon_rotation_map(r: int, s: int) -> UnimodularMap:
    """[[1+s, r], [-n, -s]] with s^2 + s + 1 = n*r."""
    n, rem = divmod(s * s + s + 1, r)
    if rem:
        raise InvalidParameters(f"s^2+s+1 is not divisible by r at (r, s) = ({r}, {s})")
    return UnimodularMap(1 + s, r, -n, -s)


def check_hexagon_rotation(r: int, s: int) -> UnimodularMap:
    """Verify the map sends each cone of the hexagon model onto its predecessor.

    In particular sigma_4 and sigma_1 land on sigma_3 and sigma_6, so the inverse
    carries sigma_3, sigma_6 onto sigma_4, sigma_1 and all six cones share one type.
    """
    h = hexagon_rotation_map(r, s)
    v = family_vertices("k6f1", r, s)
    k = len(v)
    for i in range(k):
        image = {h.apply(v[i]), h.apply(v[(i + 1) % k])}
        if image != {v[i - 1], v[i]}:
            raise RuleViolation(f"cone sigma_{i + 1} is not mapped onto sigma_{i or k}")
    first = cone_normal_form(Cone(v[0], v[1]))
    for i in range(k):
        cone = Cone(v[i], v[(i + 1) % k])
        if det2(v[i], v[(i + 1) % k]) != r or not cqs_isomorphic(cone_normal_form(cone), first):
            raise RuleViolation(f"cone sigma_{i + 1} differs from sigma_1 at ({r}, {s})")
    return h
