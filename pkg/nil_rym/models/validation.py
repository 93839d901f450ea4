from dataclasses import dataclass, field


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of validating a structure tuple.

    Attributes:
    - is_skew: tuple[bool] - Skewness verdict per matrix.
    - effective_p: int - Numerical rank of the span of the matrices.
    - is_regular: bool - True when effective_p equals p.
    - messages: tuple[str] - Human readable findings, empty for a clean tuple.
    """

    is_skew: tuple
    effective_p: int
    is_regular: bool
    messages: tuple = field(default_factory=tuple)

    @property
    def all_skew(self) -> bool:
        return all(self.is_skew)

    @property
    def ok(self) -> bool:
        return self.all_skew and self.is_regular
