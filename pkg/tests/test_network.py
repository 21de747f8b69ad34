from fractions import Fraction as F

import pytest

from elecvar import Matrix
from elecvar.errors import ArgumentError, DegeneracyError
from elecvar.network import (kirchhoff, make_network, mutable_sites, network_from_json,
                             network_to_json, response, single_edge, star, star_triangle_mutate,
                             triangle, validate)

TARGET = Matrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def test_kirchhoff():
    c = F(5, 3)
    assert kirchhoff(single_edge(c), ["1", "2"]) == Matrix([[c, -c], [-c, c]])
    assert kirchhoff(triangle(), ["1", "2", "3"]) == TARGET
    assert kirchhoff(star(3, 3, 3), ["1", "2", "3", "d"]) == Matrix(
        [[3, 0, 0, -3], [0, 3, 0, -3], [0, 0, 3, -3], [-3, -3, -3, 9]])
    with pytest.raises(ArgumentError):
        kirchhoff(triangle(), ["1", "2"])


def test_response():
    assert response(triangle(1, 1, 1)) == TARGET
    assert response(star(3, 3, 3)) == TARGET
    assert response(single_edge(7)) == Matrix([[7, -7], [-7, 7]])


def test_star_triangle():
    t = triangle(1, 1, 1)
    s = star_triangle_mutate(t, (0, 1, 2), center="d")
    assert s.gammas() == [3, 3, 3]
    assert response(s) == TARGET
    assert star_triangle_mutate(star(3, 3, 3), "d").gammas() == [1, 1, 1]
    assert star_triangle_mutate(s, "d") == t


def test_star_triangle_general_values():
    net = star(F(2), F(3), F(5))
    tri = star_triangle_mutate(net, "d")
    assert response(tri) == response(net)
    # conductances on the opposite edges: product over sum
    assert sorted(tri.gammas()) == sorted([F(6, 10), F(10, 10), F(15, 10)])


def test_mutation_errors():
    with pytest.raises(ArgumentError):
        star_triangle_mutate(triangle(), "1")
    with pytest.raises(DegeneracyError):
        star_triangle_mutate(star(1, 1, -2), "d")


def test_mutable_sites():
    assert mutable_sites(star()) == ["d"]
    assert mutable_sites(triangle()) == [(0, 1, 2)]


def test_validate():
    assert validate(triangle()) == []
    loop = make_network(["1", "2"], [("1", "2", 1), ("2", "2", 1)], {"1": [0], "2": [0, 1, 1]})
    assert "self-loop at 2" in validate(loop)
    split = make_network(["1", "2", "3", "4"], [("1", "2", 1), ("3", "4", 1)],
                         {"1": [0], "2": [0], "3": [1], "4": [1]})
    assert validate(split) == ["not connected"]


def test_json_roundtrip():
    net = star(F(1, 2), F(-3), 4)
    text = network_to_json(net)
    assert network_from_json(text) == net
    assert network_to_json(network_from_json(text)) == text
