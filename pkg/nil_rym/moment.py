"""
Moment maps of GL_q x GL_p acting on so(q)^p.

m1(C) = -2 sum_a (C^a)^2 is the GL_q moment map, m2(C)_ij = <C^i, C^j> the
GL_p one, m = m1 + m2 the one of the product. Inner products are
<A, B> = tr(A B^t) throughout, on matrices and, coordinatewise, on tuples.

On a 2-step nilpotent group the base N/Z is abelian, hence flat, and the
connection is Yang-Mills. Both facts are fixed here as constants instead of
being computed on a manifold.
"""
import numpy as np

from nil_rym.errors.structure_errors import NumericalDefectError, StructureShapeError
from nil_rym.models.models import Group
from nil_rym.models.moment_value import CURVATURE_SQUARED_FACTOR, MomentValue
from nil_rym.models.structure_tuple import StructureTuple

SYMMETRY_TOL = 1e-12

# Ricci tensor of the flat base N/Z.
BASE_RICCI = 0.0
# Hodge Laplacian of the curvature of the Yang-Mills connection.
CURVATURE_LAPLACIAN = 0.0


def inner(c: StructureTuple, d: StructureTuple) -> float:
    """
    Inner product sum_a <C^a, D^a> on so(q)^p.

    Parameters:
        - c (StructureTuple): First tuple.
        - d (StructureTuple): Second tuple, same (p, q).

    Returns:
        float: The inner product.
    """
    if (c.p, c.q) != (d.p, d.q):
        raise StructureShapeError(f"Cannot pair tuples of type ({c.p}, {c.q}) and ({d.p}, {d.q}).")
    return float(np.sum(c.matrices * d.matrices))


def m1_array(matrices: np.ndarray) -> np.ndarray:
    return -2.0 * np.einsum("aij,ajk->ik", matrices, matrices)


def m2_array(matrices: np.ndarray) -> np.ndarray:
    return np.einsum("aij,bij->ab", matrices, matrices)


def traceless(matrix: np.ndarray) -> np.ndarray:
    """
    Remove the scalar part: A - (tr A / n) Id.
    """
    size = matrix.shape[0]
    return matrix - (np.trace(matrix) / size) * np.eye(size)


def _symmetrized(matrix: np.ndarray, name: str) -> np.ndarray:
    defect = float(np.max(np.abs(matrix - matrix.T))) if matrix.size else 0.0
    scale = 1.0 + float(np.max(np.abs(matrix))) if matrix.size else 1.0
    if defect > SYMMETRY_TOL * scale:
        raise NumericalDefectError(f"{name} symmetry", defect, SYMMETRY_TOL * scale)
    return 0.5 * (matrix + matrix.T)


def m1(c: StructureTuple) -> np.ndarray:
    """
    GL_q moment map -2 sum_a (C^a)^2, a symmetric positive semidefinite q x q matrix.
    """
    return _symmetrized(m1_array(c.matrices), "m1")


def m2(c: StructureTuple) -> np.ndarray:
    """
    GL_p moment map, the Gram matrix of the coordinates of C.
    """
    return _symmetrized(m2_array(c.matrices), "m2")


def m_slq(c: StructureTuple) -> np.ndarray:
    """
    SL_q moment map, the traceless part of m1.
    """
    return traceless(m1(c))


def m_full(c: StructureTuple) -> MomentValue:
    """
    All moment map values at C.

    Returns:
        MomentValue: m1, m2 and the traceless part of m1.
    """
    first = m1(c)
    return MomentValue(m1=first, m2=m2(c), m1_traceless=traceless(first))


def curvature_squared(c: StructureTuple) -> np.ndarray:
    return CURVATURE_SQUARED_FACTOR * m1(c)


def moment_generators(matrices: np.ndarray, group: Group):
    """
    The element m_G(C) of gl_q x gl_p for the chosen group, as raw arrays.

    Parameters:
        - matrices (np.ndarray): Array of shape (p, q, q).
        - group (Group): glq, slq or full.

    Returns:
        tuple: (X, Y) with Y None unless group is full.
    """
    group = Group(group)
    first = m1_array(matrices)
    first = 0.5 * (first + first.T)
    if group is Group.GLQ:
        return first, None
    if group is Group.SLQ:
        return traceless(first), None
    second = m2_array(matrices)
    return first, 0.5 * (second + second.T)


def moment_norm(matrices: np.ndarray, group: Group) -> float:
    """
    |m_G(C)|, with the product norm on gl_q x gl_p for the full group.
    """
    x, y = moment_generators(matrices, group)
    total = float(np.sum(x * x))
    if y is not None:
        total += float(np.sum(y * y))
    return float(np.sqrt(total))
