"""
Classification of the end state of a flow run.

Numerical integration cannot prove that an orbit is closed. A converged
limit with preserved rank is evidence for closedness, a degeneration towards
0 is evidence against it, and every LimitReport says so via heuristic=True.
"""
import numpy as np

from nil_rym import moment
from nil_rym.algebra import effective_p
from nil_rym.flow.gradient_flow import MINIMAL_FACTOR, residual_array
from nil_rym.models.flow_trace import FlowTrace, LimitReport
from nil_rym.models.helpers import relative_norm
from nil_rym.models.models import FlowOutcome, LimitKind


def detect_limit(trace: FlowTrace, tol: float = None) -> LimitReport:
    """
    Classify the final state of a trace as minimal, distinguished,
    degenerated or inconclusive. The minimality residual and the scalar-m1
    residual are reported independently.

    Parameters:
        - trace (FlowTrace): A completed trace.
        - tol (float): Residual threshold; defaults to 10 x the run's conv_tol.

    Returns:
        LimitReport
    """
    cfg = trace.config
    if tol is None:
        tol = MINIMAL_FACTOR * cfg.conv_tol
    final = trace.final if trace.final is not None else trace.initial
    start_p = trace.initial_effective_p
    end_p = effective_p(final)

    # No residual is defined at C = 0.
    if final.is_zero:
        return LimitReport(LimitKind.DEGENERATED, None, None, None, start_p, end_p, start_p == end_p)

    arr = final.matrices
    minimal = residual_array(arr, cfg.group, False)
    distinguished = residual_array(arr, cfg.group, True)
    first = moment.m1_array(arr)
    scalar_m1 = relative_norm(float(np.linalg.norm(moment.traceless(first))), float(np.linalg.norm(first)))

    if trace.outcome is FlowOutcome.DEGENERATED:
        kind = LimitKind.DEGENERATED
    elif minimal <= tol:
        kind = LimitKind.MINIMAL
    elif distinguished <= tol:
        kind = LimitKind.DISTINGUISHED
    else:
        kind = LimitKind.INCONCLUSIVE

    return LimitReport(
        kind=kind,
        minimal_residual=minimal,
        distinguished_residual=distinguished,
        scalar_m1_residual=scalar_m1,
        effective_p_start=start_p,
        effective_p_end=end_p,
        rank_preserved=start_p == end_p,
    )
