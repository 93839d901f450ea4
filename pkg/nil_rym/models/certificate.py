from dataclasses import dataclass, field

import numpy as np

from nil_rym.models.models import CertificateMode


@dataclass(frozen=True, eq=False)
class Certificate:
    """
    Verdict of a soliton or minimality test with its numeric witnesses.

    Attributes:
    - mode: CertificateMode - Which criterion was tested.
    - r: float - Distinguished eigen-coefficient (scalar of m1 for ricci_and_gfi).
    - lam: float - Soliton constant lambda, rym mode with a true verdict only.
    - D: np.ndarray - Symmetric derivation witness, rym mode with a true verdict only.
    - residual: float - Relative residual compared against tol.
    - verdict: bool - residual <= tol.
    - tol: float - Tolerance used.
    - s: float - Scalar of m2, ricci_and_gfi mode only.
    - residuals: dict - Named component residuals; residual is their maximum.
    """

    mode: CertificateMode
    r: float
    residual: float
    verdict: bool
    tol: float
    lam: float = None
    D: np.ndarray = None
    s: float = None
    residuals: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "verdict": self.verdict,
            "residual": self.residual,
            "tol": self.tol,
            "r": self.r,
            "lambda": self.lam,
            "s": self.s,
            "D": None if self.D is None else self.D.tolist(),
            "residuals": dict(sorted(self.residuals.items())),
        }
