"""
Example families of 2-step nilpotent metric Lie algebras.

  heisenberg  (J), type (1, 2)
  a1          a1 * A1(k), A1(k) = J +c ... +c J (k blocks), type (1, 2k)
  b_basis     (b_1 B1, ..., b_j B_j), type (j, 4)
  will        Will's three 6x6 matrices in the a-scaled basis, type (3, 6)
  example2    a1 A1(k) +c (b_i B1, c_i B2) for each pair +c (d_1 B1, ..., d_j B_j)
  example3    a1 (J) +c ell (J+0, 0+J) +c (b_1 B1, ..., b_j B_j), type (max(2, j), 9)

Example 3's scalar is called ell so it does not collide with the soliton
constant lambda. Example 2 and 3 pieces with fewer coordinates than the
largest piece are padded with zero matrices before concatenation.
"""
import logging
from functools import reduce

import numpy as np

from nil_rym.catalogue.basis import basis_matrix, concat, pad
from nil_rym.errors.catalogue_errors import ParameterError, UnknownFamilyError
from nil_rym.models.family import FamilySpec
from nil_rym.models.structure_tuple import StructureTuple

MAX_J = 6


def _positive(params: dict, key: str, default=None) -> float:
    value = params.get(key, default)
    if value is None:
        raise ParameterError(f"Missing parameter '{key}'.")
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ParameterError(f"Parameter '{key}' must be a number, got {value!r}.")
    if not np.isfinite(value) or value <= 0:
        raise ParameterError(f"Parameter '{key}' must be positive, got {value}.")
    return value


def _count(params: dict, key: str, default: int = 1) -> int:
    value = params.get(key, default)
    if isinstance(value, float) and not value.is_integer():
        raise ParameterError(f"Parameter '{key}' must be an integer, got {value}.")
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ParameterError(f"Parameter '{key}' must be an integer, got {value!r}.")
    if value < 1:
        raise ParameterError(f"Parameter '{key}' must be at least 1, got {value}.")
    return value


def _coefficients(params: dict, key: str) -> tuple:
    values = params.get(key)
    if values is None:
        raise ParameterError(f"Missing parameter '{key}'.")
    if np.isscalar(values):
        values = (values,)
    try:
        values = tuple(float(v) for v in values)
    except (TypeError, ValueError):
        raise ParameterError(f"Parameter '{key}' must be a list of numbers, got {values!r}.")
    if not 1 <= len(values) <= MAX_J:
        raise ParameterError(f"Parameter '{key}' needs 1 to {MAX_J} coefficients, got {len(values)}.")
    if not all(np.isfinite(v) and v != 0 for v in values):
        raise ParameterError(f"Coefficients '{key}' must be finite and nonzero, got {values}.")
    return values


def _pairs(params: dict) -> tuple:
    values = params.get("pairs", ())
    try:
        values = tuple((float(b), float(c)) for b, c in values)
    except (TypeError, ValueError):
        raise ParameterError(f"Parameter 'pairs' must be a list of (b, c) pairs, got {values!r}.")
    for b, c in values:
        if not (np.isfinite(b) and np.isfinite(c)) or b == 0 and c == 0:
            raise ParameterError(f"Pair ({b}, {c}) must be finite and not both zero.")
    return values


def _check_keys(spec: FamilySpec, allowed) -> None:
    unknown = set(spec.params) - set(allowed)
    if unknown:
        raise ParameterError(f"Family '{spec.name}' has no parameter(s) {', '.join(sorted(unknown))}.")


def a1_block(k: int, a1: float = 1.0) -> StructureTuple:
    """
    a1 * A1(k): k diagonal J blocks in one 2k x 2k matrix.
    """
    return StructureTuple(2 * k, 1, [a1 * np.kron(np.eye(k), basis_matrix("J"))])


def b_block(coefficients) -> StructureTuple:
    """
    (b_1 B1, ..., b_j B_j) over so(4).
    """
    return StructureTuple.from_matrices([b * basis_matrix(f"B{i + 1}") for i, b in enumerate(coefficients)])


def concat_all(pieces) -> StructureTuple:
    """
    Concatenate pieces left to right after padding all of them to the largest p.
    """
    p = max(piece.p for piece in pieces)
    return reduce(concat, [pad(piece, p) for piece in pieces])


def heisenberg(spec: FamilySpec) -> StructureTuple:
    _check_keys(spec, ())
    return StructureTuple(2, 1, [basis_matrix("J")])


def a1(spec: FamilySpec) -> StructureTuple:
    _check_keys(spec, ("k", "a1"))
    return a1_block(_count(spec.params, "k"), _positive(spec.params, "a1", 1.0))


def b_basis(spec: FamilySpec) -> StructureTuple:
    _check_keys(spec, ("b",))
    return b_block(_coefficients(spec.params, "b"))


def will_matrices(a: float) -> np.ndarray:
    out = np.zeros((3, 6, 6))
    for k, i, j, value in (
        (0, 1, 2, a * a),
        (0, 3, 6, 1.0),
        (0, 4, 5, -1.0),
        (1, 1, 6, a),
        (1, 2, 5, -a),
        (2, 1, 4, a),
        (2, 2, 3, -a),
    ):
        out[k, i - 1, j - 1] = value
        out[k, j - 1, i - 1] = -value
    return out


def will(spec: FamilySpec) -> StructureTuple:
    """
    Will's tuple in the basis scaled by diag(a, a, 1, 1, 1, 1). m1 is
    diag(2(a^4 + 2a^2) Id_2, 2(1 + a^2) Id_4), so C is GL_q-distinguished
    exactly when a^4 + a^2 = 1.
    """
    _check_keys(spec, ("a",))
    return StructureTuple(6, 3, will_matrices(_positive(spec.params, "a")))


def will_original() -> StructureTuple:
    """
    Will's tuple before the change of basis, the a = 1 presentation.
    """
    return StructureTuple(6, 3, will_matrices(1.0), "will_original")


def will_scaling(a: float) -> np.ndarray:
    """
    The change of basis g = diag(a, a, 1, 1, 1, 1) with act_glq(g, will_original()) = will(a).
    """
    if not a > 0:
        raise ParameterError(f"Scaling a must be positive, got {a}.")
    return np.diag([a, a, 1.0, 1.0, 1.0, 1.0])


def example2(spec: FamilySpec) -> StructureTuple:
    """
    a1 A1(k) +c (b_1 B1, c_1 B2) +c ... +c (d_1 B1, ..., d_j B_j). The metric
    is a Ricci Yang-Mills soliton iff a1^2 = b_i^2 + c_i^2 = sum d^2, with D = 0.
    """
    _check_keys(spec, ("a1", "k", "pairs", "d"))
    params = spec.params
    pieces = [a1_block(_count(params, "k"), _positive(params, "a1"))]
    pieces += [b_block((b, c)) for b, c in _pairs(params)]
    pieces.append(b_block(_coefficients(params, "d")))
    return concat_all(pieces)


def example3(spec: FamilySpec) -> StructureTuple:
    """
    a1 (J) +c ell (J+0_1, 0_1+J) +c (b_1 B1, ..., b_j B_j) with q = 2 + 3 + 4.
    Soliton iff 4 a1^2 = 6 ell^2 = 4 sum b^2; then D is a multiple of
    diag(0, 0, -1, 1, -1, 0, 0, 0, 0).
    """
    _check_keys(spec, ("a1", "ell", "b"))
    params = spec.params
    ell = _positive(params, "ell")
    middle = np.zeros((2, 3, 3))
    middle[0, :2, :2] = ell * basis_matrix("J")
    middle[1, 1:, 1:] = ell * basis_matrix("J")
    pieces = [
        StructureTuple(2, 1, [_positive(params, "a1") * basis_matrix("J")]),
        StructureTuple(3, 2, middle),
        b_block(_coefficients(params, "b")),
    ]
    return concat_all(pieces)


FAMILIES = {
    "heisenberg": heisenberg,
    "a1": a1,
    "b_basis": b_basis,
    "will": will,
    "example2": example2,
    "example3": example3,
}


def build(spec: FamilySpec) -> StructureTuple:
    """
    Build a catalogue tuple.

    Parameters:
        - spec (FamilySpec): Family name and parameters; "_sq" keys are resolved first.

    Returns:
        StructureTuple: The tuple, labelled with the family name.
    """
    try:
        builder = FAMILIES[spec.name]
    except KeyError:
        raise UnknownFamilyError(spec.name, tuple(FAMILIES))
    tuple_ = builder(spec.resolved()).with_label(spec.name)
    logging.debug(f"Built {spec.name} of type ({tuple_.p}, {tuple_.q}) from {spec.params}")
    return tuple_
