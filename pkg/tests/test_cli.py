import io
import json
import subprocess
import sys

import pytest

from hopfcox import cli
from hopfcox import hopf_b as hb
from hopfcox import hopf_d as hd


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_eval_examples():
    assert run("eval", "g1_1 o g1_1")[:2] == (0, "0\n")
    assert run("eval", "d4*g1_2 o d2*g1_1 o d2")[1] == "d6*g1_3 o d2\n"
    assert run("eval", "G+1_1*G-1_1")[1] == "r(d2)\n"
    assert run("eval", "e- o e-")[1] == "e+\n"


def test_precedence():
    # ^ > * > o > +
    _, a = cli.parse("d1 o d1^2 * d1")
    _, b = cli.parse("d1 o (d1^2 * d1)")
    assert a == b
    _, a = cli.parse("d2*g1_1 o u1 + g1_1 o d1 o d1^2")
    _, b = cli.parse("(d2*g1_1) o u1 + (g1_1 o d1 o d1^2)")
    assert a == b
    _, a = cli.parse("(d1 o u1)^2")
    assert a == hb.cup(hb.odot(hb.delta(1), hb.unit(1)), hb.odot(hb.delta(1), hb.unit(1)))


def test_parse_errors():
    code, _, err = run("eval", "d2 o")
    assert code == 2 and "position 4" in err
    code, _, err = run("eval", "d1 o G+1_1")
    assert code == 2 and "mixed" in err or "cannot be mixed" in err
    code, _, err = run("eval", "d2 # d1")
    assert code == 2 and "position 3" in err
    assert run("eval", "(d2")[0] == 2
    assert run("eval", "s+(d2)")[0] == 2
    assert run("frobnicate")[0] == 2


def test_parse_print_roundtrip_b():
    for n in range(1, 6):
        for d in range(6):
            for m in hb.basis(n, d):
                assert cli.parse(str(m)) == ("B", hb.as_element(m))
    x = hb.delta(2) + hb.cup_power(hb.gamma(1, 1), 2)
    assert cli.parse(str(x))[1] == x


def test_parse_print_roundtrip_d():
    for n in range(2, 6):
        for d in range(5):
            for t in hd.basis_d(n, d):
                assert cli.parse(str(t)) == ("D", hd.as_element_d(t))
    assert cli.parse("e+ + e-")[1] == hd.unit_d(0)
    assert cli.parse("0") == ("B", hb.ZERO)


def test_basis_json():
    code, out, _ = run("basis", "--ring", "B", "--n", "2", "--deg", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["monomials"]) == 3
    assert set(data) == {"ring", "component", "degree", "monomials"}
    for m in data["monomials"]:
        assert set(m) == {"blocks", "charge"}
        assert all(set(b) == {"width", "profile"} for b in m["blocks"])
    data = json.loads(run("basis", "--ring", "D", "--n", "2", "--deg", "1", "--format", "json")[1])
    assert sorted(m["charge"] for m in data["monomials"]) == ["+", "-"]


def test_basis_svg_and_text():
    out = run("basis", "--n", "2", "--deg", "2", "--format", "svg")[1]
    assert out.startswith("<svg") and out.count("<g ") == 3
    assert run("basis", "--n", "2", "--deg", "1")[1] == "u1 o d1\ng1_1\n" or \
        sorted(run("basis", "--n", "2", "--deg", "1")[1].split("\n")) == ["", "g1_1", "u1 o d1"]


def test_coprod():
    code, out, _ = run("eval", "--op", "coprod", "d4*g1_2")
    assert out == "u0 (x) d4*g1_2 + d2*g1_1 (x) d2*g1_1 + d4*g1_2 (x) u0\n"


def test_restrict():
    assert run("restrict", "d2", "--site", "B:(2)")[1] == "x1^2 + x1*u1_1\n"
    assert run("restrict", "G+2_1", "--site", "D:(4):s0")[1] == "0\n"
    assert run("restrict", "d2", "--site", "D:(2)")[0] == 2
    data = json.loads(run("restrict", "d2", "--site", "all")[1])
    assert data == {"B:(2)": "x1^2 + x1*u1_1", "B:(1,1)": "x1*x2"}


def test_sq_and_render():
    assert run("sq", "--i", "1", "d2")[1] == "d2*g1_1 + d1 o d1^2\n"
    out = run("render", "d4*g1_2 o d2")[1]
    assert "g1_2" in out and "d4" in out
    assert run("render", "--format", "svg", "d2")[1].startswith("<svg")


def test_verify_deterministic(tmp_path):
    a = run("verify", "betti", "--max-n", "3", "--max-deg", "4", "--cache-dir", str(tmp_path))
    b = run("verify", "betti", "--max-n", "3", "--max-deg", "4")
    assert a == b and a[0] == 0
    assert (tmp_path / "B_3_2.txt").read_text().splitlines()[0].count(" ") == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfcox", "eval", "g1_1 o g1_1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0\n"
    proc = subprocess.run([sys.executable, "-m", "hopfcox", "verify", "betti", "--max-n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
