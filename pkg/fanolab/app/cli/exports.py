"""Table, CSV and JSON rendering of reports.

Tables and CSV go through pandas frames; JSON is the pydantic report model.
The census CSV header is exactly ``r,k,s,count``.
"""

from __future__ import annotations

from collections.abc import Sequence

import pandas as pd  # type: ignore[import-untyped]
from pydantic import BaseModel

from .. import models as api

BOLD = "\033[1m"
RESET = "\033[0m"

CENSUS_COLUMNS = ["r", "k", "s", "count"]


def _vec(pair: Sequence[int]) -> str:
    return f"({pair[0]},{pair[1]})"


def _label(cqs: api.SingularityOut | None) -> str:
    return cqs.label if cqs is not None else "-"


def render_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def render_csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, lineterminator="\n")


def render_table(df: pd.DataFrame, *, color: bool = False) -> str:
    if df.empty:
        return "(no rows)"
    text = df.to_string(index=False)
    if not color:
        return text
    header, _, body = text.partition("\n")
    return f"{BOLD}{header}{RESET}\n{body}"


def heading(text: str, *, color: bool = False) -> str:
    return f"{BOLD}{text}{RESET}" if color else text


def cones_frame(content: api.ContentOut) -> pd.DataFrame:
    rows = [
        {
            "cone": c.position,
            "ray1": _vec(c.ray1),
            "ray2": _vec(c.ray2),
            "type": c.singularity.label,
            "class": c.cone_class,
            "length": c.length,
            "height": c.height,
            "n": c.n,
            "residual": _label(c.residual),
        }
        for c in content.cones
    ]
    return pd.DataFrame(rows)


def winding_frame(report: api.WindingOut) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "i": range(1, len(report.vectors) + 1),
            "vector": [_vec(v) for v in report.vectors],
            "eps": report.eps,
            "a": report.coeffs,
        }
    )


def family_frame(report: api.FamilyOut) -> pd.DataFrame:
    rows = [
        {
            "cone": t.position,
            "status": t.status,
            "type": _label(t.singularity),
            "formula": t.formula,
        }
        for t in report.cone_types
    ]
    return pd.DataFrame(rows)


def census_frame(report: api.CensusOut) -> pd.DataFrame:
    rows = [{"r": r.r, "k": r.k, "s": r.s, "count": r.count} for r in report.rows]
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS)


def discrepancy_frame(report: api.CensusOut) -> pd.DataFrame:
    return pd.DataFrame([d.model_dump() for d in report.discrepancies])


def coverage_frame(report: api.CoverageOut) -> pd.DataFrame:
    rows = [
        {
            "family": m.family_id,
            "s": m.s,
            "k": len(m.vertices),
            "vertices": " ".join(_vec(v) for v in m.vertices),
        }
        for m in report.matches
    ]
    return pd.DataFrame(rows)
