import logging

import numpy as np

from nil_rym.errors.structure_errors import StructureShapeError
from nil_rym.models.models import AlgebraType
from nil_rym.models.structure_tuple import StructureTuple
from nil_rym.models.validation import ValidationReport

SKEW_TOL = 1e-12
RANK_TOL = 1e-10


def _require_tuple(tuple_: StructureTuple) -> None:
    if not isinstance(tuple_, StructureTuple):
        raise StructureShapeError(f"Expected a StructureTuple, got {type(tuple_).__name__}.")


def coefficient_matrix(tuple_: StructureTuple) -> np.ndarray:
    """
    Coordinates of the p matrices in the basis {E_ij - E_ji : i < j} of so(q).

    Returns:
        np.ndarray: Array of shape (p, q(q-1)/2).
    """
    rows, cols = np.triu_indices(tuple_.q, 1)
    return tuple_.matrices[:, rows, cols]


def effective_p(tuple_: StructureTuple, rank_tol: float = RANK_TOL) -> int:
    """
    Numerical rank of the span of the matrices: singular values of the
    coefficient matrix above rank_tol times the largest one.
    """
    coeffs = coefficient_matrix(tuple_)
    if coeffs.size == 0:
        return 0
    singular = np.linalg.svd(coeffs, compute_uv=False)
    if singular[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular > rank_tol * singular[0]))


def validate(tuple_: StructureTuple, skew_tol: float = SKEW_TOL, rank_tol: float = RANK_TOL) -> ValidationReport:
    """
    Check skewness of every matrix and linear independence of the tuple.
    Failures are reported, never raised.

    Parameters:
        - tuple_ (StructureTuple): Tuple to check.
        - skew_tol (float): Largest allowed |C^k_ij + C^k_ji|.
        - rank_tol (float): Relative singular value cutoff for the rank.

    Returns:
        ValidationReport: Skewness flags, effective_p, regularity and messages.
    """
    _require_tuple(tuple_)
    messages = []
    is_skew = []
    for k, mat in enumerate(tuple_.matrices):
        defect = np.abs(mat + mat.T)
        worst = float(defect.max())
        is_skew.append(worst <= skew_tol)
        if worst > skew_tol:
            i, j = np.unravel_index(int(np.argmax(defect)), defect.shape)
            messages.append(
                f"matrix {k} is not skew-symmetric: entry ({i}, {j}) has |C_ij + C_ji| = {worst:.3e}"
            )

    rank = effective_p(tuple_, rank_tol)
    limit = tuple_.q * (tuple_.q - 1) // 2
    if tuple_.p > limit:
        messages.append(f"p={tuple_.p} exceeds dim so({tuple_.q}) = {limit}")
    if rank < tuple_.p:
        messages.append(f"matrices are linearly dependent: effective p is {rank} of {tuple_.p}")
        logging.warning(f"Non-regular tuple {tuple_.label or ''}: effective p {rank} < p {tuple_.p}")

    return ValidationReport(
        is_skew=tuple(is_skew),
        effective_p=rank,
        is_regular=rank == tuple_.p,
        messages=tuple(messages),
    )


def bracket(tuple_: StructureTuple, u, v) -> np.ndarray:
    """
    Lie bracket of N_C in the basis {e_1..e_q, e_{q+1}..e_{q+p}}:
    [e_i, e_j] = sum_k C^k_ij e_{q+k} for i, j <= q, all other brackets zero.

    Parameters:
        - tuple_ (StructureTuple): Structure matrices.
        - u, v: Vectors of length q + p.

    Returns:
        np.ndarray: [u, v], a vector of length q + p supported on the last p coordinates.
    """
    _require_tuple(tuple_)
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    for name, vec in (("u", u), ("v", v)):
        if vec.shape != (tuple_.n,):
            raise StructureShapeError(f"{name} has shape {vec.shape}, expected ({tuple_.n},).")
    out = np.zeros(tuple_.n)
    out[tuple_.q :] = np.einsum("i,kij,j->k", u[: tuple_.q], tuple_.matrices, v[: tuple_.q])
    return out


def algebra_type(tuple_: StructureTuple, rank_tol: float = RANK_TOL) -> AlgebraType:
    """
    Type (p, q) of the nilalgebra generated by the tuple, with p the
    effective commutator dimension.
    """
    _require_tuple(tuple_)
    return AlgebraType(effective_p(tuple_, rank_tol), tuple_.q)


def structure_constants(tuple_: StructureTuple, tol: float = 0.0) -> dict:
    """
    Nonzero structure constants c_ij^k, 1-based, i < j.

    Returns:
        dict: {(i, j, k): c_ij^k}.
    """
    _require_tuple(tuple_)
    constants = {}
    for k, mat in enumerate(tuple_.matrices):
        rows, cols = np.nonzero(np.triu(np.abs(mat) > tol, 1))
        for i, j in zip(rows, cols):
            constants[(int(i) + 1, int(j) + 1, k + 1)] = float(mat[i, j])
    return constants


def regular_closed_orbit_bound(q: int) -> int:
    """
    Largest p for which almost every SL_q orbit in so(q)^p is closed.
    """
    return q * (q - 1) // 2 - 2
