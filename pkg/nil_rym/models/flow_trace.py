from dataclasses import dataclass, field
from typing import Optional

import pandas as pd

from nil_rym.errors.flow_errors import FlowConfigError
from nil_rym.models.models import FlowOutcome, Group, LimitKind
from nil_rym.models.structure_tuple import StructureTuple

TRACE_COLUMNS = ["step", "norm_C", "norm_mG", "residual"]


@dataclass(frozen=True)
class FlowConfig:
    """
    Settings for the moment-map gradient flow.

    Attributes:
    - group: Group - Which moment map drives the flow.
    - step: float - Dimensionless step; step k uses step / |m(C_k)|. The default
      is conservative and needs on the order of 10^4 steps to converge on small
      tuples; 0.05 converges in a few hundred.
    - max_steps: int - Hard cap on accepted steps.
    - conv_tol: float - Residual below which the flow has converged.
    - projected: bool - Keep |C| = |C_0| by removing the radial part of the gradient.
    - blowdown_tol: float - |C|/|C_0| below which the plain flow has degenerated.
    - sample_limit: int - Most tuples kept in a trace.
    - monotone_slack: float - Allowed relative increase of |m_G|^2 per step.
    - max_halvings: int - Step halvings tried before giving up on a step.
    """

    group: Group = Group.SLQ
    step: float = 1e-3
    max_steps: int = 200000
    conv_tol: float = 1e-9
    projected: bool = True
    blowdown_tol: float = 1e-6
    sample_limit: int = 1000
    monotone_slack: float = 1e-8
    max_halvings: int = 40

    def __post_init__(self):
        object.__setattr__(self, "group", Group(self.group))
        if self.step <= 0:
            raise FlowConfigError("step", self.step, "must be positive")
        if self.conv_tol <= 0:
            raise FlowConfigError("conv_tol", self.conv_tol, "must be positive")
        if self.max_steps < 1:
            raise FlowConfigError("max_steps", self.max_steps, "must be at least 1")
        if self.sample_limit < 2:
            raise FlowConfigError("sample_limit", self.sample_limit, "must be at least 2")


@dataclass
class FlowTrace:
    """
    Record of one gradient-flow run.

    Attributes:
    - config: FlowConfig - Settings of the run.
    - initial: StructureTuple - Starting tuple.
    - initial_effective_p: int - Rank of the starting tuple.
    - steps: list[int] - Step index of every recorded state.
    - norms: list[float] - |C_k|.
    - moment_norms: list[float] - |m_G(C_k)|.
    - residuals: list[float] - Convergence residual at C_k.
    - samples: list[tuple[int, StructureTuple]] - Decimated states, uniform stride.
    - outcome: FlowOutcome - Why the run stopped.
    - final: StructureTuple - Last state.
    - halvings: int - Total step halvings.
    """

    config: FlowConfig
    initial: StructureTuple
    initial_effective_p: int
    steps: list = field(default_factory=list)
    norms: list = field(default_factory=list)
    moment_norms: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    outcome: FlowOutcome = None
    final: StructureTuple = None
    halvings: int = 0
    _stride: int = field(default=1, repr=False)

    def record(self, step: int, state: StructureTuple, norm: float, moment_norm: float, residual: float):
        """
        Append the scalars of a state and keep the tuple when it falls on the stride.

        Parameters:
            - step (int): Step index.
            - state (StructureTuple): Current tuple.
            - norm (float): |C|.
            - moment_norm (float): |m_G(C)|.
            - residual (float): Convergence residual.
        """
        self.steps.append(step)
        self.norms.append(norm)
        self.moment_norms.append(moment_norm)
        self.residuals.append(residual)
        self.final = state
        if step % self._stride:
            return
        self.samples.append((step, state))
        if len(self.samples) > self.config.sample_limit:
            self._stride *= 2
            self.samples = [s for s in self.samples if s[0] % self._stride == 0]

    @property
    def step_count(self) -> int:
        """
        Get the number of accepted integrator steps.
        """
        return self.steps[-1] if self.steps else 0

    @property
    def final_residual(self) -> Optional[float]:
        return self.residuals[-1] if self.residuals else None

    def as_frame(self) -> pd.DataFrame:
        """
        Get the per-step scalars as a DataFrame with the trace CSV columns.
        """
        return pd.DataFrame(
            {
                "step": self.steps,
                "norm_C": self.norms,
                "norm_mG": self.moment_norms,
                "residual": self.residuals,
            },
            columns=TRACE_COLUMNS,
        )

    def to_csv(self, path) -> None:
        self.as_frame().to_csv(path, index=False, float_format="%.17g", lineterminator="\n")

    def as_dict(self) -> dict:
        """
        Get a summary of the trace in a dictionary format.
        """
        return {
            "group": self.config.group.value,
            "projected": self.config.projected,
            "outcome": self.outcome.value if self.outcome else None,
            "steps": self.step_count,
            "halvings": self.halvings,
            "initial_norm": self.norms[0] if self.norms else None,
            "final_norm": self.norms[-1] if self.norms else None,
            "final_moment_norm": self.moment_norms[-1] if self.moment_norms else None,
            "final_residual": self.final_residual,
            "samples": len(self.samples),
        }


@dataclass(frozen=True)
class LimitReport:
    """
    Classification of the end state of a flow. Orbit closedness cannot be
    proven numerically, so every report is marked heuristic.

    Attributes:
    - kind: LimitKind - minimal, distinguished, degenerated or inconclusive.
    - minimal_residual: float - Residual of m_G(C).C = 0; None when the flow reached C = 0.
    - distinguished_residual: float - Residual of m_G(C).C = rC.
    - scalar_m1_residual: float - |m1 - (tr m1 / q) Id| / |m1|.
    - effective_p_start: int - Rank of the initial tuple.
    - effective_p_end: int - Rank of the final tuple.
    - rank_preserved: bool - effective_p_start == effective_p_end.
    - heuristic: bool - Always True.
    """

    kind: LimitKind
    minimal_residual: Optional[float]
    distinguished_residual: Optional[float]
    scalar_m1_residual: Optional[float]
    effective_p_start: int
    effective_p_end: int
    rank_preserved: bool
    heuristic: bool = True

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "minimal_residual": self.minimal_residual,
            "distinguished_residual": self.distinguished_residual,
            "scalar_m1_residual": self.scalar_m1_residual,
            "effective_p_start": self.effective_p_start,
            "effective_p_end": self.effective_p_end,
            "rank_preserved": self.rank_preserved,
            "heuristic": self.heuristic,
        }
