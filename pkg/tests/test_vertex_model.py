from fractions import Fraction as F

import pytest

from elecvar import Matrix, embed_block
from elecvar.errors import ArgumentError, DegeneracyError, ParameterError
from elecvar.medial import wiring_from_word
from elecvar.vertex_model import (VertexModel, local_operator, local_yb_transform, lyb_sides,
                                  model_from_text, model_to_text, partition_pathsum,
                                  partition_product, phi_param, standard_model, yb_mutate)

MB3 = Matrix([[-1, 0, 2], [-2, -1, 0], [4, 2, -1]])


def test_local_operators():
    assert local_operator("phi", 1) == Matrix([[1, 2], [0, -1]])
    assert local_operator("psi", 1) == Matrix([[-1, 0], [2, 1]]) == local_operator("phi", -1)
    assert local_operator("lusztig", 5) == Matrix([[1, 5], [0, 1]])
    for R in (F(2), F(-3, 7), F(1, 9)):
        assert local_operator("phi", -1 / R) == local_operator("psi", R)
    with pytest.raises(ParameterError):
        local_operator("psi", 0)


def test_yb_transforms():
    assert local_yb_transform("phi", 1, 1, 1) == (1, 1, 1)
    assert local_yb_transform("phi", 1, 2, 3) == (-1, -2, -3)
    l, r = lyb_sides("phi", (1, 2, 3), (-1, -2, -3))
    assert l == r
    assert local_yb_transform("electrical", 1, 2, 3) == (1, F(1, 2), F(1, 3))
    assert local_yb_transform("lusztig", 1, 2, 3) == (F(3, 2), 4, F(1, 2))
    with pytest.raises(DegeneracyError):
        local_yb_transform("lusztig", 1, 2, -1)


def test_partition_121():
    m = VertexModel(wiring_from_word([1, 2, 1], 3), (1, 1, 1))
    M = partition_product(m)
    assert M == MB3
    assert partition_pathsum(m) == M
    assert M.col_sums() == [1, 1, 1]
    assert M.row_sums() == [1, -3, 5]
    assert M.det() == -1


def test_partition_small():
    assert partition_product(VertexModel(wiring_from_word([], 3), ())) == Matrix.identity(3)
    R = F(4, 3)
    m = VertexModel(wiring_from_word([1], 2), (R,))
    assert partition_product(m) == embed_block(local_operator("psi", R), 1, 2, 2)
    assert partition_pathsum(m) == local_operator("psi", R)


def test_yb_mutate():
    m = standard_model(3, {(1, 2): F(2), (1, 3): F(1, 3), (2, 3): F(5)})
    m2 = yb_mutate(m, 1)
    assert m2.diagram.word == (2, 1, 2)
    assert partition_product(m2) == partition_product(m)
    assert yb_mutate(m2, 1) == m
    ones = VertexModel(wiring_from_word([1, 2, 1], 3, "bbb"), (1, 1, 1))
    m3 = yb_mutate(ones, 1)
    # phi-parameters stay at the fixed point; the flipped colors read them as -1/x
    assert m3.diagram.colors == ("w", "w", "w")
    assert tuple(phi_param(c, r) for c, r in zip(m3.diagram.colors, m3.params)) == (1, 1, 1)
    with pytest.raises(ArgumentError):
        yb_mutate(m, 2)


def test_model_text():
    m = standard_model(4, {p: F(p[0], p[1]) for p in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]})
    assert model_from_text(model_to_text(m)) == m
