import logging

import numpy as np
from scipy.optimize import minimize_scalar

from nil_rym.catalogue.families import build
from nil_rym.errors.catalogue_errors import ParameterError, ParameterNotFoundError
from nil_rym.errors.structure_errors import DegenerateTupleError
from nil_rym.models.family import FamilySpec
from nil_rym.soliton import DEFAULT_TOL, certify_rym

SCAN_SAMPLES = 200
GOLDEN_XTOL = 1e-12


def rym_residual(spec: FamilySpec) -> float:
    """
    certify_rym residual of a family member, inf where the parameters are out of range.
    """
    try:
        return certify_rym(build(spec), np.inf).residual
    except (ParameterError, DegenerateTupleError):
        return np.inf


def tune_parameter(
    family: FamilySpec, free: str, bounds, tol: float = DEFAULT_TOL, samples: int = SCAN_SAMPLES
) -> float:
    """
    Find the value of one free parameter at which the family member is a Ricci
    Yang-Mills soliton: a coarse scan of the certify_rym residual over the
    bounds, then golden-section refinement around the best sample.

    Parameters:
        - family (FamilySpec): Family with every other parameter fixed.
        - free (str): Name of the free parameter, "_sq" suffix for its square.
        - bounds (tuple): (low, high).
        - tol (float): Residual the refined value must beat.
        - samples (int): Coarse scan size.

    Returns:
        float: The parameter value.

    Raises:
        ParameterNotFoundError: The best residual is not below tol, or the
        minimum sits on the edge of the bounds.
    """
    low, high = (float(b) for b in bounds)
    if not low < high:
        raise ParameterError(f"Bounds must satisfy low < high, got ({low}, {high}).")

    def objective(x):
        return rym_residual(family.with_value(free, x))

    grid = np.linspace(low, high, samples)
    values = np.array([objective(x) for x in grid])
    i = int(np.argmin(values))
    best_value, best_residual = float(grid[i]), float(values[i])
    interior = 0 < i < samples - 1

    if interior:
        try:
            result = minimize_scalar(
                objective,
                bracket=(grid[i - 1], grid[i], grid[i + 1]),
                method="golden",
                options={"xtol": GOLDEN_XTOL},
            )
            if result.fun < best_residual and low <= result.x <= high:
                best_value, best_residual = float(result.x), float(result.fun)
        except ValueError as e:
            logging.debug(f"Golden-section refinement skipped: {e}")

    if not interior or not best_residual < tol:
        raise ParameterNotFoundError(free, (low, high), best_value, best_residual, tol)
    logging.info(f"Tuned {family.name}.{free} = {best_value:.12g} (residual {best_residual:.3e})")
    return best_value
