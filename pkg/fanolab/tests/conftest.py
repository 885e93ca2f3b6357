import os
import sys

import pytest


def _ensure_repo_on_sys_path() -> None:
    repo_root = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
    if repo_root not in sys.path:
        sys.path.insert(0, repo_root)


_ensure_repo_on_sys_path()

from fanolab.app.core.lattice import validate_polygon  # noqa: E402
from fanolab.app.domain.models import FanoPolygon  # noqa: E402
from fanolab.tests.samples import HEXAGON, SQUARE, TRIANGLE_7_3  # noqa: E402


@pytest.fixture
def hexagon() -> FanoPolygon:
    return validate_polygon(HEXAGON)


@pytest.fixture
def square() -> FanoPolygon:
    return validate_polygon(SQUARE)


@pytest.fixture
def triangle_7_3() -> FanoPolygon:
    return validate_polygon(TRIANGLE_7_3)
