from dataclasses import dataclass

import numpy as np

from nil_rym.models.models import AlgebraType


@dataclass(frozen=True, eq=False)
class Fingerprint:
    """
    Data left unchanged by O(q) x O(p). Different fingerprints prove two
    tuples define non-isometric metric Lie algebras; equal fingerprints prove
    nothing.

    Attributes:
    - type: AlgebraType - (effective_p, q).
    - m1_spectrum: np.ndarray - Ascending eigenvalues of m1(C).
    - m2_spectrum: np.ndarray - Ascending eigenvalues of m2(C).
    - norm: float - Norm of the tuple.
    """

    type: AlgebraType
    m1_spectrum: np.ndarray
    m2_spectrum: np.ndarray
    norm: float

    def distance(self, other: "Fingerprint") -> float:
        """
        Largest relative difference between the two fingerprints, inf when the
        types or spectrum lengths differ.
        """
        if self.type != other.type or len(self.m2_spectrum) != len(other.m2_spectrum):
            return float("inf")
        mine = np.concatenate([self.m1_spectrum, self.m2_spectrum, [self.norm]])
        theirs = np.concatenate([other.m1_spectrum, other.m2_spectrum, [other.norm]])
        scale = 1.0 + max(np.max(np.abs(mine)), np.max(np.abs(theirs)))
        return float(np.max(np.abs(mine - theirs)) / scale)

    def matches(self, other: "Fingerprint", tol: float = 1e-10) -> bool:
        return self.distance(other) <= tol

    def as_dict(self) -> dict:
        return {
            "type": list(self.type),
            "m1_spectrum": self.m1_spectrum.tolist(),
            "m2_spectrum": self.m2_spectrum.tolist(),
            "norm": self.norm,
        }
