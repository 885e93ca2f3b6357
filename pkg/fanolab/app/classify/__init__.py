"""Exhaustive enumeration and verification of the polygon classification."""

from .enumeration import enumerate_det_r_fanos, enumerate_range
from .verification import (
    check_hexagon_rotation,
    check_k2r_rule,
    verify_family_coverage,
    verify_homogeneous_census,
)

__all__ = [
    "check_hexagon_rotation",
    "check_k2r_rule",
    "enumerate_det_r_fanos",
    "enumerate_range",
    "verify_family_coverage",
    "verify_homogeneous_census",
]
