import pytest

from elecvar.errors import ArgumentError, ParseError
from elecvar.medial import (BLACK, WHITE, braid_sites, commute_sites, crossing_order,
                            medial_of_network, parity_color, standard_graph, standard_word,
                            wiring_from_text, wiring_from_word, wiring_of_medial, wiring_to_text)
from elecvar.network import single_edge, triangle, validate


def test_word_121():
    d = wiring_from_word([1, 2, 1], 3)
    assert len(d) == 3
    assert d.pairs() == [(1, 2), (1, 3), (2, 3)]
    assert d.colors == (WHITE, BLACK, WHITE)
    assert crossing_order(d) == [0, 1, 2]


def test_small_words():
    d = wiring_from_word([1], 2)
    assert d.crossings() == [(1, 2, WHITE)]
    d = wiring_from_word([1, 2, 3, 1, 2, 1], 4)
    assert sorted(d.pairs()) == [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]


def test_non_reduced():
    with pytest.raises(ArgumentError):
        wiring_from_word([1, 1], 2)


def test_parity():
    assert parity_color(1, 3) == BLACK and parity_color(2, 3) == WHITE


def test_sites():
    assert braid_sites((1, 2, 1)) == [0]
    assert commute_sites((1, 3)) == [0]
    assert commute_sites((1, 2)) == []


def test_standard_graph():
    g2 = standard_graph(2)
    assert len(g2.edges) == 1 and not g2.interior
    assert len(standard_graph(3).edges) == 3
    assert len(standard_graph(4).edges) == 6
    for N in range(2, 7):
        g = standard_graph(N)
        assert validate(g) == []
        d = wiring_of_medial(medial_of_network(g))
        assert list(d.word) == standard_word(N)
        assert d.colors == wiring_from_word(standard_word(N), N).colors


def test_medial_small():
    md = medial_of_network(single_edge(3))
    assert md.n_strands == 2 and md.pairs() == [(1, 2)]
    md = medial_of_network(triangle())
    assert md.n_strands == 3
    assert sorted(md.pairs()) == [(1, 2), (1, 3), (2, 3)]


def test_text_roundtrip():
    d = wiring_from_word([2, 1, 2], 3)
    assert wiring_from_text(wiring_to_text(d)) == d
    with pytest.raises(ParseError):
        wiring_from_text("strands 3\n1 x 2\nw b w\n")
