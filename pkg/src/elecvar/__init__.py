"""Electrical networks as vertex models, in exact rational arithmetic."""

from fractions import Fraction

from .errors import (
    ArgumentError, ConsistencyError, DegeneracyError, EmbeddingError,
    InversionError, ParameterError, ParseError, ShapeError, SingularMatrixError,
)
from .mpoly import MPoly, lowest_degree_part
from .matrix import (
    Matrix, embed_block, mat_inverse, mat_mul, row_space_equal, rref,
    schur_complement, structured,
)

__version__ = "0.1.0"
