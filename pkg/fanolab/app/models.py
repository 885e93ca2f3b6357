"""Pydantic data models for fanolab documents and reports.

Copyright (C) 2025  Wilson Rocha Lacerda Junior

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Affero General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, StrictInt

IntPair = tuple[StrictInt, StrictInt]


class PolygonDocument(BaseModel):
    """Input document: ``{"vertices": [[x, y], ...], "name": "..."}``."""

    vertices: list[IntPair]
    name: str | None = None


class SequenceDocument(BaseModel):
    """Input document for r-modular sequences, keyed by ``vectors``."""

    vectors: list[IntPair]
    name: str | None = None


# Reports ------------------------------------------------------------------------


class SingularityOut(BaseModel):
    r: int
    s: int
    label: str


class ConeOut(BaseModel):
    position: int
    ray1: IntPair
    ray2: IntPair
    singularity: SingularityOut
    cone_class: str
    length: int
    height: int
    n: int
    residual: SingularityOut | None = None


class ContentOut(BaseModel):
    name: str | None = None
    vertices: list[IntPair]
    n: int
    basket: list[SingularityOut]
    summary: str
    cones: list[ConeOut]
    l_reflexive_index: int | None = None


class WindingOut(BaseModel):
    name: str | None = None
    vectors: list[IntPair]
    r: int
    eps: list[int]
    coeffs: list[int]
    formula_winding: int
    geometric_winding: int
    twelve_point_residual: str


class ExpectedConeOut(BaseModel):
    position: int
    status: str
    formula: str
    singularity: SingularityOut | None = None


class FamilyOut(BaseModel):
    name: str
    family_id: str
    r: int
    s: int
    vertices: list[IntPair]
    cone_types: list[ExpectedConeOut] = Field(default_factory=list)


class PredicateOut(BaseModel):
    k: int
    r: int
    s: int
    exists: bool
    branch: str | None = None
    congruence_criterion: bool


class CensusRowOut(BaseModel):
    r: int
    k: int
    s: int
    count: int
    models: list[list[IntPair]]


class DiscrepancyOut(BaseModel):
    k: int
    r: int
    s: int
    enumerated: bool
    predicate: bool
    congruence: bool
    explained: bool


class CensusOut(BaseModel):
    r_max: int
    rows: list[CensusRowOut]
    discrepancies: list[DiscrepancyOut] = Field(default_factory=list)
    polygon_totals: dict[int, int] = Field(default_factory=dict)


class FamilyMatchOut(BaseModel):
    family_id: str
    s: int
    vertices: list[IntPair]


class CoverageOut(BaseModel):
    r: int
    polygon_count: int
    excluded_order: bool
    matches: list[FamilyMatchOut]
