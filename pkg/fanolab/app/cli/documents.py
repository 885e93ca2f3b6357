"""JSON input documents for polygons and r-modular sequences.

Coordinates are validated by the pydantic document models (``StrictInt``), so
JSON floats, strings and booleans are rejected and ``1.0`` never passes as
``1``. Validation errors are mapped to the document errors the CLI reports.
"""

from __future__ import annotations

import json
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from ..core.exceptions import DocumentError, DocumentSyntaxError, MissingField, NonIntegerCoordinate
from ..models import PolygonDocument, SequenceDocument

DocumentT = TypeVar("DocumentT", bound=BaseModel)


def _load(text: bytes | str) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"Document is not valid UTF-8: {exc.reason}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc


def _document_error(exc: ValidationError, data: Any, key: str) -> DocumentError:
    error = exc.errors()[0]
    loc = error["loc"]
    if len(loc) >= 2 and loc[0] == key and isinstance(loc[1], int):
        index = loc[1]
        return NonIntegerCoordinate(index, data[key][index])
    if loc == (key,) and error["type"] == "missing":
        return MissingField(key)
    where = ".".join(str(part) for part in loc) or "document"
    return DocumentError(f"Invalid {where}: {error['msg']}")


def _validate(model: type[DocumentT], text: bytes | str, key: str) -> DocumentT:
    data = _load(text)
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise _document_error(exc, data, key) from exc


def parse_polygon(text: bytes | str) -> PolygonDocument:
    return _validate(PolygonDocument, text, "vertices")


def parse_sequence(text: bytes | str) -> SequenceDocument:
    return _validate(SequenceDocument, text, "vectors")
