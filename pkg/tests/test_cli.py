import random

import pytest

from elecvar.cli import main
from elecvar.medial import standard_graph
from elecvar.network import network_to_json, triangle
from elecvar.standard import conductances_to_text, mb_standard, random_standard
from elecvar.matrix import format_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    tri = tmp_path / "tri.json"
    tri.write_text(network_to_json(triangle()))
    s4 = tmp_path / "s4.json"
    s4.write_text(network_to_json(standard_graph(4)))
    return tmp_path


def test_respond(files, capsys):
    code, out, _ = run(capsys, "respond", str(files / "tri.json"))
    assert code == 0
    assert out == "2 -1 -1\n-1 2 -1\n-1 -1 2\n"


def test_mutate_roundtrip(files, capsys):
    code, star_json, _ = run(capsys, "mutate", str(files / "tri.json"), "--site", "0,1,2", "--center", "d")
    assert code == 0
    (files / "star.json").write_text(star_json)
    assert run(capsys, "respond", str(files / "star.json"))[1] == "2 -1 -1\n-1 2 -1\n-1 -1 2\n"
    code, back, _ = run(capsys, "mutate", str(files / "star.json"), "--site", "d")
    assert back == (files / "tri.json").read_text()


def test_medial(files, capsys):
    code, out, _ = run(capsys, "medial", str(files / "s4.json"))
    assert out == "strands 4\n1 2 3 1 2 1\nw b w w b w\n"


def test_invert_byte_identical(files, capsys):
    net = random_standard(4, random.Random(11))
    g = files / "g4.txt"
    g.write_text(conductances_to_text(net))
    code, mb, _ = run(capsys, "partition", str(g))
    assert mb == format_matrix(mb_standard(net)) + "\n"
    (files / "mb.txt").write_text(mb)
    code, out, _ = run(capsys, "invert", str(files / "mb.txt"))
    assert code == 0 and out == g.read_text()


def test_convert_roundtrip(files, capsys):
    net = random_standard(3, random.Random(2))
    (files / "mb.txt").write_text(format_matrix(mb_standard(net)) + "\n")
    _, mr, _ = run(capsys, "convert", str(files / "mb.txt"), "--to", "mr")
    (files / "mr.txt").write_text(mr)
    _, mb, _ = run(capsys, "convert", str(files / "mr.txt"), "--to", "mb")
    assert mb == (files / "mb.txt").read_text()


def test_partition_model_and_pathsum(files, capsys):
    m = files / "m.txt"
    m.write_text("strands 3\n1 2 1\nw b w\nparams 1 1 1\n")
    expect = "-1 0 2\n-2 -1 0\n4 2 -1\n"
    assert run(capsys, "partition", str(m))[1] == expect
    assert run(capsys, "partition", str(m), "--pathsum")[1] == expect


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "lyb", "--samples", "200")
    assert code == 0 and out.startswith("PASS lyb")
    code, out, _ = run(capsys, "verify", "tl", "--size", "4", "--seed", "3")
    assert code == 0


def test_evolve(files, capsys):
    lat = files / "lat.txt"
    lat.write_text("2 2\n2 1\n1 1\n")
    code, once, _ = run(capsys, "evolve", str(lat), "--word", "r1")
    assert code == 0 and once.startswith("2 2\n")
    assert run(capsys, "evolve", str(lat), "--word", "r1 r1")[1] == lat.read_text()


def test_deterministic(files, capsys):
    a = run(capsys, "respond", str(files / "s4.json"))
    b = run(capsys, "respond", str(files / "s4.json"))
    assert a == b


def test_errors(files, capsys):
    bad = files / "bad.txt"
    bad.write_text("1 2 3\n4 x 6\n")
    code, out, err = run(capsys, "invert", str(bad))
    assert code == 2 and "line 2, col 3" in err and out == ""
    code, _, err = run(capsys, "respond", str(files / "missing.json"))
    assert code == 2
    code, _, err = run(capsys, "evolve", str(files / "tri.json"), "--word", "r1")
    assert code != 0
