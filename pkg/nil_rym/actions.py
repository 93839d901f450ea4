import logging

import numpy as np

from nil_rym import algebra, moment
from nil_rym.errors.structure_errors import InvalidGroupElementError, StructureShapeError
from nil_rym.models.fingerprint import Fingerprint
from nil_rym.models.group import GroupElement, TangentElement
from nil_rym.models.structure_tuple import StructureTuple

SINGULARITY_TOL = 1e-12
FINGERPRINT_TOL = 1e-10


def _square(matrix, size: int, name: str) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.shape != (size, size):
        raise StructureShapeError(f"{name} has shape {matrix.shape}, expected ({size}, {size}).")
    return matrix


def _invertible(matrix, size: int, name: str, singularity_tol: float) -> np.ndarray:
    matrix = _square(matrix, size, name)
    det = float(np.linalg.det(matrix))
    if not abs(det) > singularity_tol:
        raise InvalidGroupElementError(name, det, singularity_tol)
    return matrix


def glq_array(g: np.ndarray, matrices: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ajk,lk->ail", g, matrices, g)


def glp_array(h: np.ndarray, matrices: np.ndarray) -> np.ndarray:
    return np.einsum("lk,lij->kij", h, matrices)


def lie_array(x: np.ndarray, y: np.ndarray, matrices: np.ndarray) -> np.ndarray:
    """
    (X, Y).C on raw arrays: X C^a + C^a X^t plus sum_l Y_la C^l. Either
    generator may be None.
    """
    out = np.zeros_like(matrices)
    if x is not None:
        xc = np.einsum("ij,ajk->aik", x, matrices)
        out += xc + np.einsum("aij,kj->aik", matrices, x)
    if y is not None:
        out += glp_array(y, matrices)
    return out


def act_glq(g, c: StructureTuple, singularity_tol: float = SINGULARITY_TOL) -> StructureTuple:
    """
    Action of g in GL_q: C^k -> g C^k g^t for every coordinate.

    Parameters:
        - g: Invertible q x q matrix.
        - c (StructureTuple): Tuple to transform.
        - singularity_tol (float): Smallest accepted |det g|.

    Returns:
        StructureTuple: g.C
    """
    g = _invertible(g, c.q, "g", singularity_tol)
    return StructureTuple(c.q, c.p, glq_array(g, c.matrices), c.label)


def act_glp(h, c: StructureTuple, singularity_tol: float = SINGULARITY_TOL) -> StructureTuple:
    """
    Action of h in GL_p: D^k = sum_l h_lk C^l.
    """
    h = _invertible(h, c.p, "h", singularity_tol)
    return StructureTuple(c.q, c.p, glp_array(h, c.matrices), c.label)


def act(element: GroupElement, c: StructureTuple, singularity_tol: float = SINGULARITY_TOL) -> StructureTuple:
    """
    Action of (g, h) in GL_q x GL_p. The two factors commute.
    """
    out = c
    if element.g is not None:
        out = act_glq(element.g, out, singularity_tol)
    if element.h is not None:
        out = act_glp(element.h, out, singularity_tol)
    return out


def act_lie(t: TangentElement, c: StructureTuple) -> StructureTuple:
    """
    Infinitesimal action of (X, Y) in gl_q x gl_p:
    X.C = (X C^1 + C^1 X^t, ...), (Y.C)^k = sum_l Y_lk C^l.

    Parameters:
        - t (TangentElement): Generators; a missing factor counts as zero.
        - c (StructureTuple): Base point.

    Returns:
        StructureTuple: The tangent vector (X, Y).C, shaped like C.
    """
    x = None if t.X is None else _square(t.X, c.q, "X")
    y = None if t.Y is None else _square(t.Y, c.p, "Y")
    return StructureTuple(c.q, c.p, lie_array(x, y, c.matrices))


def fingerprint(c: StructureTuple, fingerprint_tol: float = FINGERPRINT_TOL) -> Fingerprint:
    """
    O(q) x O(p) invariants of C: type, spectra of m1 and m2, and the norm.
    Unequal fingerprints certify that N_C and N_D are not isometric.
    """
    values = moment.m_full(c)
    m1_spectrum = np.linalg.eigvalsh(values.m1)
    m2_spectrum = np.linalg.eigvalsh(values.m2)
    scale = 1.0 + float(np.max(np.abs(m1_spectrum)))
    if m1_spectrum[0] < -fingerprint_tol * scale:
        logging.warning(f"m1 has a negative eigenvalue {m1_spectrum[0]:.3e}; input may not be skew")
    return Fingerprint(
        type=algebra.algebra_type(c),
        m1_spectrum=m1_spectrum,
        m2_spectrum=m2_spectrum,
        norm=c.norm,
    )
