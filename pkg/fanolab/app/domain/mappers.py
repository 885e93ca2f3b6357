"""Mapping utilities between domain models and report models."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import groupby

from .. import models as api
from ..core.cones import edge_cones, l_reflexive_index, polygon_singularity_content
from ..core.lattice import geometric_winding
from ..core.modseq import twelve_point_residual, winding_from_formula
from . import models as domain


def pair(v: domain.LatticeVector) -> tuple[int, int]:
    return (v.x, v.y)


def pairs(vertices: Iterable[domain.LatticeVector]) -> list[tuple[int, int]]:
    return [pair(v) for v in vertices]


def singularity_to_api(cqs: domain.CyclicQuotientSingularity) -> api.SingularityOut:
    return api.SingularityOut(r=cqs.r, s=cqs.s, label=cqs.label)


def basket_summary(content: domain.SingularityContent) -> str:
    """``SC = (0, {6 x 1/3(1,1)})``; runs of equal entries are grouped."""
    parts: list[str] = []
    for entry, run in groupby(content.basket):
        count = len(list(run))
        parts.append(str(entry) if count == 1 else f"{count} x {entry}")
    return f"SC = ({content.n}, {{{', '.join(parts)}}})"


def edge_cone_to_api(edge: domain.EdgeCone) -> api.ConeOut:
    cls = edge.cone_class
    return api.ConeOut(
        position=edge.position,
        ray1=pair(edge.cone.ray1),
        ray2=pair(edge.cone.ray2),
        singularity=singularity_to_api(edge.singularity),
        cone_class=cls.tag.value,
        length=cls.length,
        height=cls.height,
        n=cls.n,
        residual=singularity_to_api(cls.residual) if cls.residual else None,
    )


def content_to_api(polygon: domain.FanoPolygon, name: str | None = None) -> api.ContentOut:
    content = polygon_singularity_content(polygon)
    return api.ContentOut(
        name=name,
        vertices=pairs(polygon.vertices),
        n=content.n,
        basket=[singularity_to_api(b) for b in content.basket],
        summary=basket_summary(content),
        cones=[edge_cone_to_api(e) for e in edge_cones(polygon)],
        l_reflexive_index=l_reflexive_index(polygon),
    )


def winding_to_api(seq: domain.RModularSequence, name: str | None = None) -> api.WindingOut:
    return api.WindingOut(
        name=name,
        vectors=pairs(seq.vectors),
        r=seq.r,
        eps=list(seq.eps),
        coeffs=list(seq.coeffs),
        formula_winding=winding_from_formula(seq),
        geometric_winding=geometric_winding(seq.vectors),
        twelve_point_residual=str(twelve_point_residual(seq)),
    )


def expected_cone_to_api(entry: domain.ExpectedConeType) -> api.ExpectedConeOut:
    return api.ExpectedConeOut(
        position=entry.position,
        status=entry.status.value,
        formula=entry.formula,
        singularity=singularity_to_api(entry.singularity) if entry.singularity else None,
    )


def census_entry_to_api(entry: domain.CensusEntry) -> api.CensusRowOut:
    return api.CensusRowOut(
        r=entry.r,
        k=entry.k,
        s=entry.s,
        count=entry.polygon_count,
        models=[pairs(model) for model in entry.canonical_models],
    )


def discrepancy_to_api(d: domain.Discrepancy) -> api.DiscrepancyOut:
    return api.DiscrepancyOut(
        k=d.k,
        r=d.r,
        s=d.s,
        enumerated=d.enumerated,
        predicate=d.predicate,
        congruence=d.congruence,
        explained=d.explained,
    )


def census_to_api(report: domain.CensusReport) -> api.CensusOut:
    return api.CensusOut(
        r_max=report.r_max,
        rows=[census_entry_to_api(e) for e in report.entries],
        discrepancies=[discrepancy_to_api(d) for d in report.discrepancies],
        polygon_totals=dict(report.polygon_totals),
    )


def coverage_to_api(report: domain.FamilyCoverageReport) -> api.CoverageOut:
    return api.CoverageOut(
        r=report.r,
        polygon_count=report.polygon_count,
        excluded_order=report.excluded_order,
        matches=[
            api.FamilyMatchOut(family_id=m.family_id, s=m.s, vertices=pairs(m.canonical))
            for m in report.matches
        ],
    )
