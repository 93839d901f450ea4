import numpy as np


def format_scalar(value, digits=10):
    """
    Format a float for reports; None prints as "-".

    Parameters:
        - value (float): Number to format.
        - digits (int): Significant digits.

    Returns:
        str: Formatted number.
    """
    if value is None:
        return "-"
    return f"{float(value):.{digits}g}"


def format_spectrum(values, digits=6):
    """
    Format a list of eigenvalues as "[a, b, c]".
    """
    return "[" + ", ".join(format_scalar(v, digits) for v in values) + "]"


def format_matrix(matrix, digits=6, indent="    "):
    """
    Format a matrix one row per line with aligned columns.

    Parameters:
        - matrix (np.ndarray): Matrix to format.
        - digits (int): Significant digits.
        - indent (str): Prefix of every row.

    Returns:
        str: Formatted matrix.
    """
    matrix = np.atleast_2d(matrix)
    cells = [[format_scalar(0.0 if v == 0 else v, digits) for v in row] for row in matrix]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + " ".join(c.rjust(width) for c in row) for row in cells)


def relative_norm(numerator, denominator):
    """
    |numerator| / |denominator| with 0/0 read as 0.
    """
    top = float(np.linalg.norm(numerator))
    bottom = float(np.linalg.norm(denominator))
    if bottom == 0.0:
        return 0.0 if top == 0.0 else float("inf")
    return top / bottom
