from fractions import Fraction as F

import pytest

from elecvar import (Matrix, MPoly, embed_block, lowest_degree_part, mat_inverse, mat_mul,
                     row_space_equal, rref, schur_complement, structured)
from elecvar.errors import ParseError, ShapeError, SingularMatrixError
from elecvar.rational import fmt, parse_rational
from elecvar.vertex_model import local_operator


def test_mat_mul():
    I2 = Matrix.identity(2)
    assert mat_mul(I2, I2) == I2
    assert mat_mul(Matrix([[-1, 0], [2, 1]]), Matrix([[1, 2], [0, -1]])) == Matrix([[-1, -2], [2, 3]])
    with pytest.raises(ShapeError):
        mat_mul(Matrix.identity(2), Matrix.identity(3))


def test_inverse():
    assert mat_inverse(Matrix.identity(3)) == Matrix.identity(3)
    assert mat_inverse(Matrix([[2, 0], [0, F(1, 2)]])) == Matrix([[F(1, 2), 0], [0, 2]])
    with pytest.raises(SingularMatrixError) as e:
        mat_inverse(Matrix([[1, 2], [2, 4]]))
    assert e.value.rank == 1


def test_schur():
    m = Matrix([[1, 2], [3, 4]])
    assert schur_complement(m, [0, 1]) == m
    assert schur_complement(m, [0]) == Matrix([[1 - F(2 * 3, 4)]])
    K = Matrix([[3, 0, 0, -3], [0, 3, 0, -3], [0, 0, 3, -3], [-3, -3, -3, 9]])
    assert schur_complement(K, [0, 1, 2]) == Matrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def test_rref():
    assert rref(Matrix.zeros(2, 3)) == (Matrix.zeros(2, 3), 0)
    assert rref(Matrix.identity(4)) == (Matrix.identity(4), 4)
    assert rref(Matrix([[1, 2], [2, 4]])) == (Matrix([[1, 2], [0, 0]]), 1)


def test_row_space_equal():
    a = Matrix([[1, 2, 3], [0, 1, 5]])
    P = Matrix([[2, 1], [1, 1]])
    assert row_space_equal(a, a)
    assert row_space_equal(a, P @ a)
    assert not row_space_equal(a, Matrix([[1, 0, 0], [0, 1, 0]]))
    with pytest.raises(ShapeError):
        row_space_equal(a, Matrix.identity(2))


def test_embed_block():
    assert embed_block(Matrix.identity(2), 1, 2, 3) == Matrix.identity(3)
    a, b, c, d = (MPoly.var(s) for s in "abcd")
    one, zero = MPoly.const(1), MPoly.const(0)
    assert embed_block(Matrix([[a, b], [c, d]]), 1, 3, 3) == Matrix([[a, zero, b], [zero, one, zero], [c, zero, d]])
    assert embed_block(local_operator("phi", 1), 2, 3, 3) == Matrix([[1, 0, 0], [0, 1, 2], [0, 0, -1]])
    with pytest.raises(IndexError):
        embed_block(Matrix.identity(2), 2, 2, 3)
    with pytest.raises(IndexError):
        embed_block(Matrix.identity(2), 1, 4, 3)


def test_structured():
    assert structured("S", 3) == Matrix([[1, 0, -1], [-1, 1, 0], [0, -1, 1]])
    I6 = Matrix.identity(6)
    assert structured("T", 6) == Matrix([I6.tolist()[r - 1] for r in (4, 1, 5, 2, 6, 3)])
    assert structured("Omega", 2) == Matrix([[0, 1], [-1, 0]])
    assert structured("w0", 3) == Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    with pytest.raises(ShapeError):
        structured("S", 1)


def test_mpoly_basics():
    x, y = MPoly.var("x"), MPoly.var("y")
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert p.degree() == 2 and p.min_degree() == 2
    assert p.evaluate({"x": F(1), "y": F(2)}) == 9
    assert str(x * y + 3) == "x*y + 3"
    assert str(x ** 2 - 2 * x * y + 3 * y) == "x^2 - 2*x*y + 3*y"
    assert str(MPoly.const(0)) == "0"
    assert p.coefficients_in("x") == {0: y * y, 1: 2 * y, 2: MPoly.const(1)}


def test_lowest_degree_part():
    x, y = MPoly.var("x"), MPoly.var("y")
    assert lowest_degree_part(MPoly.const(0)) == MPoly.const(0)
    assert lowest_degree_part(3 + x + x * y) == MPoly.const(3)
    assert lowest_degree_part(x ** 2 * y + x * y + x ** 3) == x * y


def test_parse_rational():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-4") == F(-4)
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError) as e:
        parse_rational("abc", 3, 7)
    assert "line 3, col 7" in str(e.value)
    assert fmt(F(-6, 4)) == "-3/2" and fmt(F(5)) == "5"
