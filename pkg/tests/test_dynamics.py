import random
from fractions import Fraction as F

import pytest

from elecvar import Matrix, MPoly, lowest_degree_part
from elecvar.dynamics import (Lattice, act_r, act_s, affine_matrix, apply_word, lattice_from_text,
                              lattice_to_text, mobius, p_poly, p_poly_first, q_poly, stable_point,
                              symbolic_lattice, transfer, two_by_two)
from elecvar.errors import ArgumentError, DegeneracyError, ParseError


def test_affine():
    assert affine_matrix(1, 1) == Matrix([[1, 0], [2, 1]])
    assert affine_matrix(F(3), 0) == Matrix([[3, 0], [1, 0]])
    T = transfer([F(2), F(3)], [F(5), F(7)])
    assert T[0, 1] == 0 and T[0, 0] == 6 and T[1, 1] == 35


def test_q_poly():
    assert q_poly([F(2)], [F(3)]) == 1 + 6
    assert q_poly([F(1)] * 2, [F(1)] * 2) == 4
    assert (affine_matrix(1, 1) @ affine_matrix(1, 1)) == Matrix([[1, 0], [4, 1]])
    rng = random.Random(3)
    for n in range(1, 7):
        xs = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
        ys = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)]
        assert q_poly(xs, ys) == transfer(xs, ys)[1, 0]


def test_stable_point():
    x, y = F(3), F(1, 2)
    t = stable_point([x], [y])
    assert t == (x - y) / (1 + x * y)
    assert mobius(x, y, t) == t
    x1, x2, y1, y2 = F(2), F(3), F(1, 2), F(5)
    assert stable_point([x1, x2], [y1, y2]) == (x1 * x2 - y1 * y2) / (x1 + y2 + x1 * x2 * y2 + x1 * y1 * y2)
    with pytest.raises(DegeneracyError):
        stable_point([F(2)], [F(2)])


def test_p_poly():
    ones = Lattice(((1, 1), (1, 1)))
    assert p_poly(ones, 1, 1) == 4
    lat = Lattice(((F(2),), (F(5),)))
    assert p_poly(lat, 1, 1) == 1 + 10


def test_undeformed_limit():
    sl = symbolic_lattice(2, 3)
    for i in (1, 2, 3):
        assert lowest_degree_part(p_poly(sl, 1, i)) == p_poly_first(sl, 1, i)


def test_act_r_fixed_points():
    row = (F(2), F(3), F(1, 4))
    lat = Lattice((row, row))
    assert act_r(lat, 1) == lat
    ones = Lattice(((1, 1), (1, 1)))
    assert act_r(ones, 1) == ones
    cols = Lattice(((F(2), F(2)), (F(3), F(3)), (F(5), F(5))))
    assert act_s(cols, 1) == cols


def test_involutions_and_commutation():
    rng = random.Random(5)
    lat = Lattice(tuple(tuple(F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)) for _ in range(3)))
    assert act_r(act_r(lat, 1), 1) == lat
    assert act_s(act_s(lat, 2), 2) == lat
    assert apply_word(lat, ["r1", "s2"]) == apply_word(lat, ["s2", "r1"])
    assert apply_word(lat, ["r1", "r2", "r1"]) == apply_word(lat, ["r2", "r1", "r2"])


def test_two_by_two():
    t, mu, _ = two_by_two(F(2), F(1), F(1), F(1))
    assert mu == F(7, 5)
    assert t == F(1, 7)
    t, mu, new = two_by_two(F(2), F(3), F(2), F(3))
    assert mu == 1
    assert two_by_two(F(1), F(1), F(1), F(1))[0] == 0


def test_errors_and_text():
    lat = Lattice(((F(1), F(2)), (F(3), F(4))))
    with pytest.raises(ArgumentError):
        act_r(lat, 2)
    with pytest.raises(ArgumentError):
        apply_word(lat, ["q1"])
    assert lattice_from_text(lattice_to_text(lat)) == lat
    with pytest.raises(ParseError):
        lattice_from_text("2 2\n1 2\n3\n")
