class DocumentParseError(Exception):
    def __init__(self, reason, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"Malformed tuple document{where}: {reason}")


class DocumentSchemaError(Exception):
    def __init__(self, field, reason, matrix=None):
        self.field = field
        self.matrix = matrix
        where = f"matrix {matrix}" if matrix is not None else f"field '{field}'"
        super().__init__(f"Schema violation in {where}: {reason}")


class DocumentValidationError(Exception):
    def __init__(self, matrix, entry, defect, tol):
        self.matrix = matrix
        self.entry = entry
        message = (
            f"Matrix {matrix} is not skew-symmetric: entry {entry} defect {defect:.3e} > {tol:.1e}."
        )
        super().__init__(message)
