from dataclasses import dataclass

import numpy as np

# Raising an index on the curvature square of the connection gives half of m1.
CURVATURE_SQUARED_FACTOR = 0.5


@dataclass(frozen=True, eq=False)
class MomentValue:
    """
    Moment map values at a structure tuple.

    Attributes:
    - m1: np.ndarray - Symmetric q x q value of the GL_q moment map.
    - m2: np.ndarray - Symmetric p x p value of the GL_p moment map.
    - m1_traceless: np.ndarray - SL_q part of m1, trace zero.
    """

    m1: np.ndarray
    m2: np.ndarray
    m1_traceless: np.ndarray

    @property
    def curvature_squared(self) -> np.ndarray:
        """
        Get the (1,1) form of the squared bundle curvature on the base.
        """
        return CURVATURE_SQUARED_FACTOR * self.m1

    @property
    def norm(self) -> float:
        """
        Norm of m = m1 + m2 in symm_q + symm_p.
        """
        return float(np.sqrt(np.sum(self.m1 * self.m1) + np.sum(self.m2 * self.m2)))
