"""Subcommand handlers. Each returns the text to print; errors propagate."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import models as api
from ..classify.verification import verify_family_coverage, verify_homogeneous_census
from ..config import AppConfig
from ..core.exceptions import VerificationError
from ..core.families import family_cone_types, family_polygon, family_vertices
from ..core.lattice import validate_polygon
from ..core.modseq import build_sequence
from ..core.numthy import congruence_criterion, existence_branch
from ..domain import mappers
from . import exports
from .documents import parse_polygon, parse_sequence


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def content(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    doc = parse_polygon(_read(args.file))
    polygon = validate_polygon(doc.vertices)
    report = mappers.content_to_api(polygon, doc.name)
    if args.format == "json":
        return exports.render_json(report)
    frame = exports.cones_frame(report)
    if args.format == "csv":
        return exports.render_csv(frame)
    index = report.l_reflexive_index
    reflexive = f"{index}-reflexive" if index is not None else "not l-reflexive"
    lines = [exports.heading(f"{report.summary}; {reflexive}", color=color), ""]
    lines.append(exports.render_table(frame, color=color))
    return "\n".join(lines)


def winding(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    doc = parse_sequence(_read(args.file))
    report = mappers.winding_to_api(build_sequence(doc.vectors), doc.name)
    if report.formula_winding != report.geometric_winding:
        raise VerificationError(
            f"formula winding {report.formula_winding} differs from "
            f"geometric winding {report.geometric_winding}"
        )
    if report.twelve_point_residual != "0":
        raise VerificationError(f"twelve-point residual is {report.twelve_point_residual}")
    if args.format == "json":
        return exports.render_json(report)
    frame = exports.winding_frame(report)
    if args.format == "csv":
        return exports.render_csv(frame)
    lines = [
        exports.heading(f"r = {report.r}, k = {len(report.vectors)}", color=color),
        f"formula winding:       {report.formula_winding}",
        f"geometric winding:     {report.geometric_winding}",
        f"twelve-point residual: {report.twelve_point_residual}",
        "",
        exports.render_table(frame, color=color),
    ]
    return "\n".join(lines)


def family(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    family_polygon(args.family_id, args.r, args.s)
    vertices = family_vertices(args.family_id, args.r, args.s)
    report = api.FamilyOut(
        name=f"{args.family_id} (r={args.r}, s={args.s})",
        family_id=args.family_id,
        r=args.r,
        s=args.s,
        vertices=mappers.pairs(vertices),
        cone_types=[
            mappers.expected_cone_to_api(t)
            for t in family_cone_types(args.family_id, args.r, args.s)
        ],
    )
    if args.format == "json":
        return exports.render_json(report)
    lines = [
        exports.heading(report.name, color=color),
        "vertices: " + " ".join(f"({x},{y})" for x, y in report.vertices),
        "",
        exports.render_table(exports.family_frame(report), color=color),
    ]
    return "\n".join(lines)


def predicate(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    branch = existence_branch(args.k, args.r, args.s)
    report = api.PredicateOut(
        k=args.k,
        r=args.r,
        s=args.s,
        exists=branch is not None,
        branch=branch,
        congruence_criterion=congruence_criterion(args.k, args.r, args.s),
    )
    if args.format == "json":
        return exports.render_json(report)
    line = f"exists: {str(report.exists).lower()}"
    if branch is not None:
        line += f"; branch: {branch}"
    if report.congruence_criterion != report.exists:
        line += f"\nnote: congruence criterion gives {str(report.congruence_criterion).lower()}"
    return line


def census(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    r_max = args.r_max if args.r_max is not None else config.r_max_default
    jobs = args.jobs if args.jobs is not None else config.jobs
    report = mappers.census_to_api(
        verify_homogeneous_census(
            r_max, strict=args.strict, jobs=jobs, r_max_cap=config.r_max_cap
        )
    )
    if args.format == "json":
        return exports.render_json(report)
    if args.format == "csv":
        return exports.render_csv(exports.census_frame(report))
    lines = [
        exports.heading(f"Homogeneous baskets, 3 <= r <= {report.r_max}", color=color),
        exports.render_table(exports.census_frame(report), color=color),
    ]
    if report.discrepancies:
        lines += [
            "",
            exports.heading("Disagreements with the published criterion", color=color),
            exports.render_table(exports.discrepancy_frame(report), color=color),
        ]
    empty = [str(r) for r, total in report.polygon_totals.items() if total == 0]
    if empty:
        lines += ["", "no polygons with all determinant-r R-cones for r = " + ", ".join(empty)]
    return "\n".join(lines)


def verify(args: argparse.Namespace, config: AppConfig, color: bool) -> str:
    jobs = args.jobs if args.jobs is not None else config.jobs
    report = mappers.coverage_to_api(verify_family_coverage(args.r, jobs))
    if args.format == "json":
        return exports.render_json(report)
    frame = exports.coverage_frame(report)
    if args.format == "csv":
        return exports.render_csv(frame)
    title = f"r = {report.r}: {report.polygon_count} polygons, every one matched to a family"
    lines = [exports.heading(title, color=color)]
    if report.excluded_order:
        lines.append("note: this order lies outside the family classification")
    lines += ["", exports.render_table(frame, color=color)]
    return "\n".join(lines)
