import random
from fractions import Fraction as F

import pytest

from elecvar import Matrix, rref, row_space_equal
from elecvar.errors import InversionError, ParseError
from elecvar.network import response, triangle
from elecvar.standard import (StandardNetwork, build_w1, build_w2, check_lusztig_degeneration,
                              check_symplectic, cmb_standard, conductances_from_text,
                              conductances_to_text, invert_conductances, mb_from_mr, mb_standard,
                              mr_from_mb, mr_standard, random_standard, tl_generator)

MB3 = Matrix([[-1, 0, 2], [-2, -1, 0], [4, 2, -1]])
ONES3 = StandardNetwork(3, {(1, 2): F(1), (1, 3): F(1), (2, 3): F(1)})


def test_mb_small():
    c = F(3, 2)
    net = StandardNetwork(2, {(1, 2): c})
    assert mb_standard(net) == Matrix([[-1 / c, 1 - 1 / c], [1 + 1 / c, 1 / c]])
    assert mb_standard(ONES3) == MB3


def test_w1_w2():
    assert rref(build_w1(response(triangle())))[1] == 2
    assert rref(build_w2(MB3))[1] == 2
    assert row_space_equal(build_w1(mr_standard(ONES3)), build_w2(MB3))
    a = F(7)
    assert build_w1(mr_standard(StandardNetwork(2, {(1, 2): a}))) == Matrix([[1, -1, a, -a], [-1, 1, -a, a]])


def test_conversions():
    assert mb_from_mr(mr_standard(ONES3)) == MB3
    rng = random.Random(4)
    for N in range(2, 6):
        net = random_standard(N, rng)
        mr = mr_standard(net)
        assert mr_from_mb(mb_standard(net)) == mr
        assert mr_from_mb(mb_from_mr(mr)) == mr
        assert mr.is_symmetric() and not any(mr.row_sums())


def test_invert():
    c = F(5, 4)
    mb = Matrix([[-1 / c, 1 - 1 / c], [1 + 1 / c, 1 / c]])
    assert invert_conductances(mb, 2).gamma == {(1, 2): c}
    assert invert_conductances(MB3, 3) == ONES3
    rng = random.Random(1)
    for N in range(2, 6):
        net = random_standard(N, rng)
        assert invert_conductances(mb_standard(net), N) == net


def test_invert_rejects_non_image():
    with pytest.raises(InversionError):
        invert_conductances(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3)


def test_symplectic():
    rng = random.Random(2)
    for N in (2, 4):
        net = random_standard(N, rng)
        assert check_symplectic(net)
        assert cmb_standard(net).det() == 1


def test_tl():
    assert tl_generator(1, 3) == Matrix([[-1, -1, 0], [1, 1, 0], [0, 0, 0]])
    a1, a2 = tl_generator(1, 3), tl_generator(2, 3)
    assert a1 @ a1 == Matrix.zeros(3, 3)
    assert a1 @ a2 @ a1 == -a1
    with pytest.raises(IndexError):
        tl_generator(3, 3)


def test_lusztig_degeneration():
    for N in (2, 3, 4):
        assert check_lusztig_degeneration(N)


def test_conductance_text():
    net = random_standard(4, random.Random(0))
    text = conductances_to_text(net)
    assert conductances_from_text(text) == net
    with pytest.raises(ParseError) as e:
        conductances_from_text("1 2 1/0\n")
    assert "line 1, col 7" in str(e.value)   # points at the zero denominator
