"""
On-disk tuple documents.

    {"q": 2, "p": 1, "matrices": [[0.0, 1.0, -1.0, 0.0]], "label": "heisenberg", "provenance": "..."}

matrices holds p arrays of q*q numbers, row-major. label and provenance are
optional. Floats are written with the shortest repr that parses back to the
same double, so parse(serialize(t)) is bit-exact.
"""
import json
import logging
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from nil_rym.algebra import SKEW_TOL, validate
from nil_rym.errors.document_errors import DocumentParseError, DocumentSchemaError, DocumentValidationError
from nil_rym.errors.structure_errors import DimensionLimitError
from nil_rym.models.structure_tuple import MAX_Q, StructureTuple
from nil_rym.models.validation import ValidationReport


@dataclass(frozen=True)
class TupleDocument:
    """
    A structure tuple with its file metadata.

    Attributes:
    - tuple: StructureTuple - The matrices.
    - label: str - Optional name, also set as the tuple label.
    - provenance: str - Optional free text on where the tuple came from.
    - validation: ValidationReport - Report computed on parse, None for documents built in memory.
    """

    tuple: StructureTuple
    label: str = None
    provenance: str = None
    validation: ValidationReport = None

    def as_dict(self) -> dict:
        out = {
            "q": self.tuple.q,
            "p": self.tuple.p,
            "matrices": [[float(v) for v in m.ravel()] for m in self.tuple.matrices],
        }
        if self.label is not None:
            out["label"] = self.label
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out


def _reject_constant(name):
    raise ValueError(f"non-finite number {name}")


def _integer_field(data: dict, key: str) -> int:
    if key not in data:
        raise DocumentSchemaError(key, "missing")
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentSchemaError(key, f"expected an integer, got {value!r}")
    if value < 1:
        raise DocumentSchemaError(key, f"must be at least 1, got {value}")
    return value


def _text_field(data: dict, key: str):
    value = data.get(key)
    if value is not None and not isinstance(value, str):
        raise DocumentSchemaError(key, f"expected a string, got {type(value).__name__}")
    return value


def _matrices(data: dict, q: int, p: int) -> np.ndarray:
    if "matrices" not in data:
        raise DocumentSchemaError("matrices", "missing")
    rows = data["matrices"]
    if not isinstance(rows, list):
        raise DocumentSchemaError("matrices", "expected an array of arrays")
    if len(rows) != p:
        raise DocumentSchemaError("matrices", f"expected {p} matrices, got {len(rows)}")
    out = np.zeros((p, q, q))
    for k, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != q * q:
            size = len(row) if isinstance(row, list) else type(row).__name__
            raise DocumentSchemaError("matrices", f"expected {q * q} numbers for a {q}x{q} matrix, got {size}", k)
        if not all(isinstance(v, Real) and not isinstance(v, bool) for v in row):
            raise DocumentSchemaError("matrices", "entries must be numbers", k)
        try:
            values = np.asarray(row, dtype=np.float64)
        except OverflowError:
            raise DocumentSchemaError("matrices", "entry too large for a double", k)
        if not np.all(np.isfinite(values)):
            raise DocumentSchemaError("matrices", "entries must be finite", k)
        out[k] = np.reshape(values, (q, q))
    return out


def parse(text: str, skew_tol: float = SKEW_TOL) -> TupleDocument:
    """
    Parse and validate a tuple document.

    Parameters:
        - text (str): JSON text.
        - skew_tol (float): Largest accepted |C_ij + C_ji|.

    Returns:
        TupleDocument: The tuple with its validation report.

    Raises:
        DocumentParseError: Malformed JSON, with line and column.
        DocumentSchemaError: Missing or mistyped field, wrong matrix count or size.
        DocumentValidationError: A matrix is not skew-symmetric.
    """
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise DocumentParseError(e.msg, e.lineno, e.colno)
    except ValueError as e:
        raise DocumentParseError(str(e))
    if not isinstance(data, dict):
        raise DocumentSchemaError("document", "expected a JSON object")

    q = _integer_field(data, "q")
    p = _integer_field(data, "p")
    if q > MAX_Q:
        raise DimensionLimitError(q, MAX_Q)
    label = _text_field(data, "label")
    provenance = _text_field(data, "provenance")
    tuple_ = StructureTuple(q, p, _matrices(data, q, p), label)

    report = validate(tuple_, skew_tol=skew_tol)
    if not report.all_skew:
        k = report.is_skew.index(False)
        defect = np.abs(tuple_.matrices[k] + tuple_.matrices[k].T)
        i, j = np.unravel_index(int(np.argmax(defect)), defect.shape)
        raise DocumentValidationError(k, (int(i), int(j)), float(defect[i, j]), skew_tol)
    for message in report.messages:
        logging.warning(f"{label or 'document'}: {message}")
    return TupleDocument(tuple_, label, provenance, report)


def serialize(document) -> str:
    """
    Write a TupleDocument, or a bare StructureTuple, as JSON text ending in a newline.
    """
    if isinstance(document, StructureTuple):
        document = TupleDocument(document, document.label)
    data = document.as_dict()
    if not all(math.isfinite(v) for row in data["matrices"] for v in row):
        raise DocumentSchemaError("matrices", "entries must be finite")
    return json.dumps(data, indent=2) + "\n"


def read_document(path, skew_tol: float = SKEW_TOL) -> TupleDocument:
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read(), skew_tol)


def write_document(path, document) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(document))
