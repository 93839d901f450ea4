import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from nil_rym import moment
from nil_rym.algebra import effective_p
from nil_rym.errors.flow_errors import FlowIntegrationError
from nil_rym.errors.structure_errors import DegenerateTupleError
from nil_rym.models.flow_trace import FlowConfig, FlowTrace
from nil_rym.models.models import FlowOutcome, Group
from nil_rym.models.structure_tuple import StructureTuple
from nil_rym.soliton import gradient_array

# A converged endpoint counts as minimal when the unprojected residual is
# within this factor of conv_tol.
MINIMAL_FACTOR = 10.0


def gradient(c: StructureTuple, group: Group = Group.SLQ) -> StructureTuple:
    """
    Gradient of |m_G|^2 at C, up to a positive constant: m_G(C).C.

    Parameters:
        - c (StructureTuple): Base point.
        - group (Group): glq (X = m1), slq (X = traceless m1) or full (X = m1, Y = m2).

    Returns:
        StructureTuple: The tangent vector, shaped like C.
    """
    return StructureTuple(c.q, c.p, gradient_array(c.matrices, Group(group)))


def direction_array(matrices: np.ndarray, group: Group, projected: bool) -> np.ndarray:
    """
    m_G(C).C, minus its radial part <grad, C> C / |C|^2 when projected.
    """
    grad = gradient_array(matrices, group)
    if projected:
        norm_sq = float(np.sum(matrices * matrices))
        if norm_sq > 0.0:
            grad = grad - (float(np.sum(grad * matrices)) / norm_sq) * matrices
    return grad


def residual_array(matrices: np.ndarray, group: Group, projected: bool) -> float:
    """
    |grad| / (|C| (1 + |m_G(C)|)) at C and at C / |C|; the larger of the two.
    The second value is scale free, so a flow shrinking to 0 never looks converged.
    """
    norm = float(np.linalg.norm(matrices))
    if norm == 0.0:
        return 0.0
    grad_norm = float(np.linalg.norm(direction_array(matrices, group, projected)))
    moment_norm = moment.moment_norm(matrices, group)
    at_c = grad_norm / (norm * (1.0 + moment_norm))
    # grad is cubic and m_G quadratic in C.
    at_unit = (grad_norm / norm**3) / (1.0 + moment_norm / norm**2)
    return max(at_c, at_unit)


def _step_scale(matrices: np.ndarray, group: Group) -> float:
    scale_group = Group.FULL if group is Group.FULL else Group.GLQ
    return moment.moment_norm(matrices, scale_group)


def _rk4(matrices: np.ndarray, h: float, group: Group, projected: bool) -> np.ndarray:
    def rhs(y):
        return -direction_array(y, group, projected)

    k1 = rhs(matrices)
    k2 = rhs(matrices + 0.5 * h * k1)
    k3 = rhs(matrices + 0.5 * h * k2)
    k4 = rhs(matrices + h * k3)
    return matrices + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate(c0: StructureTuple, cfg: FlowConfig = None) -> FlowTrace:
    """
    Integrate the negative gradient flow dC/dt = -m_G(C).C (projected onto the
    sphere |C| = |C_0| by default) with classical RK4. Step k uses
    h = cfg.step / |m(C_k)| and is halved while |m_G|^2 would increase.

    Parameters:
        - c0 (StructureTuple): Nonzero starting tuple.
        - cfg (FlowConfig): Settings; defaults to FlowConfig().

    Returns:
        FlowTrace: Scalars of every step, decimated tuples and the outcome.
    """
    cfg = cfg or FlowConfig()
    if c0.is_zero:
        raise DegenerateTupleError("integrate")
    group = cfg.group
    arr = np.array(c0.matrices)
    norm0 = c0.norm
    trace = FlowTrace(config=cfg, initial=c0, initial_effective_p=effective_p(c0))

    norm = norm0
    moment_sq = moment.moment_norm(arr, group) ** 2
    residual = residual_array(arr, group, cfg.projected)
    trace.record(0, c0, norm, float(np.sqrt(moment_sq)), residual)
    logging.info(
        f"Flow start: group={group.value} projected={cfg.projected} |C0|={norm0:.6g} residual={residual:.3e}"
    )

    step = 0
    while True:
        if residual < cfg.conv_tol:
            unprojected = residual_array(arr, group, False)
            if unprojected <= MINIMAL_FACTOR * cfg.conv_tol:
                trace.outcome = FlowOutcome.CONVERGED_MINIMAL
            else:
                trace.outcome = FlowOutcome.CONVERGED_DISTINGUISHED
            break
        if not cfg.projected and norm / norm0 < cfg.blowdown_tol:
            trace.outcome = FlowOutcome.DEGENERATED
            break
        if step >= cfg.max_steps:
            trace.outcome = FlowOutcome.STEP_LIMIT
            break

        h = cfg.step / _step_scale(arr, group)
        for _ in range(cfg.max_halvings + 1):
            candidate = _rk4(arr, h, group, cfg.projected)
            if not np.all(np.isfinite(candidate)):
                raise FlowIntegrationError("non-finite state", trace.final, step + 1)
            if cfg.projected:
                candidate *= norm0 / float(np.linalg.norm(candidate))
            candidate_sq = moment.moment_norm(candidate, group) ** 2
            if candidate_sq <= moment_sq + cfg.monotone_slack * (1.0 + moment_sq):
                break
            h *= 0.5
            trace.halvings += 1
            logging.debug(f"Step {step + 1}: |m_G|^2 rose to {candidate_sq:.6g}, halving h to {h:.3e}")
        else:
            raise FlowIntegrationError(
                f"|m_G|^2 still increasing after {cfg.max_halvings} halvings", trace.final, step + 1
            )

        arr = candidate
        step += 1
        moment_sq = candidate_sq
        norm = float(np.linalg.norm(arr))
        residual = residual_array(arr, group, cfg.projected)
        trace.record(step, StructureTuple(c0.q, c0.p, arr, c0.label), norm, float(np.sqrt(moment_sq)), residual)

    logging.info(
        f"Flow end: outcome={trace.outcome.value} steps={step} halvings={trace.halvings} residual={residual:.3e}"
    )
    return trace


def integrate_many(tuples, cfg: FlowConfig = None, max_workers: int = None) -> list:
    """
    Run integrate on several starting tuples concurrently. Each run owns its
    trace; results come back in input order.

    Parameters:
        - tuples (Iterable[StructureTuple]): Starting tuples.
        - cfg (FlowConfig): Shared settings.
        - max_workers (int): Thread pool size, the executor default if None.

    Returns:
        list[FlowTrace]
    """
    tuples = list(tuples)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda c: integrate(c, cfg), tuples))
