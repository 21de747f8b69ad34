"""Exception types shared by all modules."""


class ElecvarError(Exception):
    pass


class ShapeError(ElecvarError, ValueError):
    pass


class ArgumentError(ElecvarError, ValueError):
    pass


class ParameterError(ElecvarError, ValueError):
    pass


class SingularMatrixError(ElecvarError, ArithmeticError):
    def __init__(self, msg, rank=None):
        super().__init__(msg)
        self.rank = rank


class DegeneracyError(ElecvarError, ArithmeticError):
    pass


class ConsistencyError(ElecvarError, ValueError):
    pass


class InversionError(ElecvarError, ValueError):
    pass


class EmbeddingError(ElecvarError, ValueError):
    pass


class ParseError(ElecvarError, ValueError):
    def __init__(self, msg, line=None, col=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.col = col
