"""
Certificates for distinguished and minimal points.

  rym            GL_q-distinguished: Ricci Yang-Mills soliton of symmetric Lie type
  ricci          GL_q x GL_p-distinguished: nilsoliton
  gfi            SL_q-minimal: geodesic flow invariant metric
  ricci_and_gfi  m1 = r Id and m2 = s Id

For a GL_q-distinguished C with m1(C).C = rC, write m1 = (r/2) Id + B with
B.C = 0. Substituting into m1 = 2 lambda Id + 2 (D + D^t) with D symmetric
gives lambda = r/4 and D = B/4. Both the derivation condition D.C = 0 and
the metric equation are checked numerically on the emitted pair.
"""
import logging

import numpy as np

from nil_rym import moment
from nil_rym.actions import lie_array
from nil_rym.errors.structure_errors import DegenerateTupleError, NumericalDefectError
from nil_rym.models.certificate import Certificate
from nil_rym.models.models import CertificateMode, Classification, Group
from nil_rym.models.structure_tuple import StructureTuple

DEFAULT_TOL = 1e-9


def _require_nonzero(c: StructureTuple, operation: str) -> None:
    if c.is_zero:
        raise DegenerateTupleError(operation)


def _least_squares_r(gradient: np.ndarray, matrices: np.ndarray) -> float:
    return float(np.sum(gradient * matrices) / np.sum(matrices * matrices))


def _distinguished_residual(gradient: np.ndarray, matrices: np.ndarray, r: float) -> float:
    norm = float(np.linalg.norm(matrices))
    return float(np.linalg.norm(gradient - r * matrices)) / (norm * (1.0 + abs(r)))


def gradient_array(matrices: np.ndarray, group: Group) -> np.ndarray:
    """
    m_G(C).C on raw arrays.
    """
    x, y = moment.moment_generators(matrices, group)
    return lie_array(x, y, matrices)


def best_r(c: StructureTuple, group: Group = Group.GLQ) -> float:
    """
    Least-squares coefficient r* = <m_G(C).C, C> / <C, C>.

    Parameters:
        - c (StructureTuple): Nonzero tuple.
        - group (Group): glq or full (slq is accepted and gives the minimal-point r).

    Returns:
        float: r*
    """
    _require_nonzero(c, "best_r")
    return _least_squares_r(gradient_array(c.matrices, group), c.matrices)


def expander_bound(c: StructureTuple, first: np.ndarray = None) -> float:
    """
    Lower bound |m1(C)|^2 / (|C|^2 2q) for the r of a GL_q-distinguished C.
    Since <m1(C).C, C> = |m1(C)|^2, r* equals |m1|^2 / |C|^2 and the bound
    holds with room to spare; it is positive for every C != 0.
    """
    _require_nonzero(c, "expander_bound")
    if first is None:
        first = moment.m1(c)
    return float(np.sum(first * first)) / (float(np.sum(c.matrices * c.matrices)) * 2.0 * c.q)


def certify_rym(c: StructureTuple, tol: float = DEFAULT_TOL) -> Certificate:
    """
    Test whether C is a distinguished point of GL_q, i.e. whether N_C carries a
    Ricci Yang-Mills soliton of symmetric Lie type.

    Parameters:
        - c (StructureTuple): Nonzero tuple.
        - tol (float): Largest accepted residual.

    Returns:
        Certificate: r, and when the verdict is true also lambda = r/4 and the
        derivation D = (m1 - 2 lambda Id)/4.
    """
    _require_nonzero(c, "certify_rym")
    arr = c.matrices
    first = moment.m1(c)
    gradient = lie_array(first, None, arr)
    r = _least_squares_r(gradient, arr)
    residuals = {"distinguished": _distinguished_residual(gradient, arr, r)}
    lam = derivation = None

    if residuals["distinguished"] <= tol:
        bound = expander_bound(c, first)
        if not r >= bound > 0.0:
            raise NumericalDefectError("expander bound on r", bound - r, 0.0)
        lam = r / 4.0
        identity = np.eye(c.q)
        derivation = (first - 2.0 * lam * identity) / 4.0
        derivation = 0.5 * (derivation + derivation.T)
        # D symmetric, so D^t.C = D.C. The base is flat (BASE_RICCI) and the
        # curvature harmonic (CURVATURE_LAPLACIAN), so neither enters below.
        action = lie_array(derivation, None, arr)
        residuals["derivation"] = float(np.linalg.norm(action)) / (
            c.norm * (1.0 + float(np.linalg.norm(derivation)))
        )
        curvature_side = 2.0 * moment.CURVATURE_SQUARED_FACTOR * first
        soliton_side = 2.0 * lam * identity + 2.0 * (derivation + derivation.T)
        residuals["metric_equation"] = float(np.linalg.norm(curvature_side - soliton_side)) / (
            1.0 + float(np.linalg.norm(first))
        )

    residual = max(residuals.values())
    verdict = residual <= tol
    if not verdict:
        lam = derivation = None
    logging.debug(f"certify_rym: r={r:.6g} residual={residual:.3e} verdict={verdict}")
    return Certificate(
        mode=CertificateMode.RYM,
        r=r,
        residual=residual,
        verdict=verdict,
        tol=tol,
        lam=lam,
        D=derivation,
        residuals=residuals,
    )


def certify_ricci(c: StructureTuple, tol: float = DEFAULT_TOL) -> Certificate:
    """
    Test whether C is a distinguished point of GL_q x GL_p, i.e. whether N_C is a nilsoliton.
    """
    _require_nonzero(c, "certify_ricci")
    gradient = gradient_array(c.matrices, Group.FULL)
    r = _least_squares_r(gradient, c.matrices)
    residual = _distinguished_residual(gradient, c.matrices, r)
    return Certificate(
        mode=CertificateMode.RICCI,
        r=r,
        residual=residual,
        verdict=residual <= tol,
        tol=tol,
        residuals={"distinguished": residual},
    )


def certify_gfi(c: StructureTuple, tol: float = DEFAULT_TOL) -> Certificate:
    """
    Test whether C is a minimal point of SL_q: m_slq(C).C = 0.
    """
    _require_nonzero(c, "certify_gfi")
    generator = moment.m_slq(c)
    gradient = lie_array(generator, None, c.matrices)
    residual = float(np.linalg.norm(gradient)) / (c.norm * (1.0 + float(np.linalg.norm(generator))))
    return Certificate(
        mode=CertificateMode.GFI,
        r=_least_squares_r(gradient, c.matrices),
        residual=residual,
        verdict=residual <= tol,
        tol=tol,
        residuals={"minimal": residual},
    )


def certify_ricci_gfi(c: StructureTuple, tol: float = DEFAULT_TOL) -> Certificate:
    """
    Test whether m1(C) = r Id_q and m2(C) = s Id_p, the tuples that are at
    once Ricci solitons and geodesic flow invariant.
    """
    values = moment.m_full(c)
    norm1 = float(np.linalg.norm(values.m1))
    norm2 = float(np.linalg.norm(values.m2))
    if norm1 == 0.0 or norm2 == 0.0:
        raise DegenerateTupleError("certify_ricci_gfi")
    r = float(np.trace(values.m1)) / c.q
    s = float(np.trace(values.m2)) / c.p
    residuals = {
        "m1_scalar": float(np.linalg.norm(values.m1_traceless)) / norm1,
        "m2_scalar": float(np.linalg.norm(moment.traceless(values.m2))) / norm2,
    }
    residual = max(residuals.values())
    return Certificate(
        mode=CertificateMode.RICCI_AND_GFI,
        r=r,
        s=s,
        residual=residual,
        verdict=residual <= tol,
        tol=tol,
        residuals=residuals,
    )


CERTIFIERS = {
    CertificateMode.RYM: certify_rym,
    CertificateMode.RICCI: certify_ricci,
    CertificateMode.GFI: certify_gfi,
    CertificateMode.RICCI_AND_GFI: certify_ricci_gfi,
}


def certify(c: StructureTuple, mode, tol: float = DEFAULT_TOL) -> Certificate:
    return CERTIFIERS[CertificateMode(mode)](c, tol)


def stabilizer_part(c: StructureTuple, r: float = None):
    """
    B = m1(C) - (r/2) Id and how far it is from stabilising C. C is
    GL_q-distinguished exactly when B.C = 0 for r = r*.

    Parameters:
        - c (StructureTuple): Nonzero tuple.
        - r (float): Coefficient; defaults to best_r(c, glq).

    Returns:
        tuple: (B, |B.C| / (|C| (1 + |B|)))
    """
    if r is None:
        r = best_r(c, Group.GLQ)
    stabilizer = moment.m1(c) - 0.5 * r * np.eye(c.q)
    action = lie_array(stabilizer, None, c.matrices)
    residual = float(np.linalg.norm(action)) / (c.norm * (1.0 + float(np.linalg.norm(stabilizer))))
    return stabilizer, residual


def soliton_kind(lam: float) -> str:
    if lam is None:
        return "none"
    if lam > 0:
        return "expander"
    if lam < 0:
        return "shrinker"
    return "steady"


def classify(c: StructureTuple, tol: float = DEFAULT_TOL) -> Classification:
    """
    Run all four certificates. consistent is False when a verdict contradicts
    the known implications: ricci_and_gfi implies every other verdict, and
    an SL_q-minimal point is GL_q-distinguished.
    """
    rym = certify_rym(c, tol)
    ricci = certify_ricci(c, tol)
    gfi = certify_gfi(c, tol)
    both = certify_ricci_gfi(c, tol)
    consistent = (not both.verdict or (rym.verdict and ricci.verdict and gfi.verdict)) and (
        not gfi.verdict or rym.verdict
    )
    if not consistent:
        logging.warning(f"Certificates of {c.label or 'tuple'} disagree at tol {tol:.1e}")
    return Classification(rym=rym, ricci=ricci, gfi=gfi, ricci_and_gfi=both, consistent=consistent)
