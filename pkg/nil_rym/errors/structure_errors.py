class StructureShapeError(Exception):
    def __init__(self, message="Structure tuple has inconsistent dimensions."):
        super().__init__(message)


class DimensionLimitError(Exception):
    def __init__(self, q, limit):
        message = f"q={q} is above the supported limit of {limit}."
        super().__init__(message)


class DegenerateTupleError(Exception):
    def __init__(self, operation=None):
        message = f"{operation + ' requires' if operation else 'Requires'} a nonzero structure tuple."
        super().__init__(message)


class InvalidGroupElementError(Exception):
    def __init__(self, factor, det, tol):
        message = f"{factor} is singular: |det| = {abs(det):.3e} <= {tol:.1e}."
        super().__init__(message)


class NumericalDefectError(Exception):
    def __init__(self, quantity, defect, tol):
        message = f"{quantity} defect {defect:.3e} exceeds {tol:.1e}."
        super().__init__(message)
