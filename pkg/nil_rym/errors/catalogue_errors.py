class UnknownFamilyError(Exception):
    def __init__(self, name, known=()):
        message = f"Unknown family '{name}'."
        if known:
            message += f" Known families: {', '.join(known)}."
        super().__init__(message)


class UnknownBasisMatrixError(Exception):
    def __init__(self, name):
        message = f"Unknown basis matrix '{name}'. Expected J or B1..B6."
        super().__init__(message)


class ParameterError(Exception):
    def __init__(self, message="Invalid family parameters."):
        super().__init__(message)


class ParameterNotFoundError(Exception):
    """
    Raised by tuning when no parameter in the bounds reaches the tolerance.

    Attributes:
        - best_value (float): Parameter value with the smallest residual seen.
        - best_residual (float): That residual.
    """

    def __init__(self, free, bounds, best_value, best_residual, tol):
        self.best_value = best_value
        self.best_residual = best_residual
        message = (
            f"No value of {free} in ({bounds[0]}, {bounds[1]}) reaches residual {tol:.1e}; "
            f"best {best_residual:.3e} at {best_value:.10g}."
        )
        super().__init__(message)
