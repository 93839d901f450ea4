import numpy as np

from nil_rym.errors.catalogue_errors import UnknownBasisMatrixError
from nil_rym.errors.structure_errors import StructureShapeError
from nil_rym.models.structure_tuple import StructureTuple


def _skew4(*entries) -> np.ndarray:
    """
    4x4 skew matrix from 1-based (i, j, value) entries above or below the diagonal.
    """
    out = np.zeros((4, 4))
    for i, j, value in entries:
        out[i - 1, j - 1] = value
        out[j - 1, i - 1] = -value
    return out


J = np.array([[0.0, 1.0], [-1.0, 0.0]])

BASIS_MATRICES = {
    "J": J,
    "B1": _skew4((1, 2, 1), (3, 4, 1)),
    "B2": _skew4((1, 4, 1), (2, 3, 1)),
    "B3": _skew4((1, 3, 1), (2, 4, 1)),
    "B4": _skew4((1, 2, 1), (3, 4, -1)),
    "B5": _skew4((1, 4, 1), (2, 3, -1)),
    "B6": _skew4((1, 3, 1), (2, 4, -1)),
}


def basis_matrix(name: str) -> np.ndarray:
    """
    One of the fixed matrices J (2x2) or B1..B6 (4x4). B1, B2, B3 are
    pairwise orthogonal with |B_i|^2 = 4 and B_i^2 = -Id.

    Parameters:
        - name (str): "J", "B1", ..., "B6".

    Returns:
        np.ndarray: A fresh copy of the matrix.
    """
    try:
        return BASIS_MATRICES[name].copy()
    except KeyError:
        raise UnknownBasisMatrixError(name)


def pad(c: StructureTuple, p: int) -> StructureTuple:
    """
    Append zero matrices until the tuple has p coordinates.
    """
    if p < c.p:
        raise StructureShapeError(f"Cannot pad a tuple with p={c.p} down to p={p}.")
    if p == c.p:
        return c
    zeros = np.zeros((p - c.p, c.q, c.q))
    return StructureTuple(c.q, p, np.concatenate([c.matrices, zeros]), c.label)


def concat(a: StructureTuple, b: StructureTuple) -> StructureTuple:
    """
    Concatenation A +c B: coordinate k is block-diag(A^k, B^k), with A padded
    by trailing zero matrices up to p(B). The order of the operands matters
    and p(A) <= p(B) is required.

    Parameters:
        - a (StructureTuple): Tuple over so(q1)^p1.
        - b (StructureTuple): Tuple over so(q2)^p2, p1 <= p2.

    Returns:
        StructureTuple: Tuple over so(q1 + q2)^p2.
    """
    if a.p > b.p:
        raise StructureShapeError(f"Concatenation needs p1 <= p2, got p1={a.p}, p2={b.p}.")
    a = pad(a, b.p)
    q = a.q + b.q
    out = np.zeros((b.p, q, q))
    out[:, : a.q, : a.q] = a.matrices
    out[:, a.q :, a.q :] = b.matrices
    label = f"{a.label}+c{b.label}" if a.label and b.label else None
    return StructureTuple(q, b.p, out, label)
