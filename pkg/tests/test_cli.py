import json

import pytest

from symhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_cup_example(capsys):
    assert run(capsys, "cup", "g[1,2]", "g[1,1] o g[1,1]^2")[:2] == (0, "g[1,1]^2 o g[1,1]^3")
    assert run(capsys, "cup", "--method", "direct", "g[1,2]", "g[1,1] o g[1,1]^2")[:2] == \
        (0, "g[1,1]^2 o g[1,1]^3")


def test_pair_example(capsys):
    assert run(capsys, "pair", "g[1,2]^3", "q[0,3]")[:2] == (0, "1")
    assert run(capsys, "pair", "g[1,2]^3", "q[2,2]")[:2] == (0, "1")
    assert run(capsys, "pair", "g[1,2]^3", "q[1,1]*q[2]")[:2] == (0, "0")


def test_normalize_example(capsys):
    assert run(capsys, "normalize", "q[1,0]")[:2] == (0, "0")
    assert run(capsys, "normalize", "q[2,0]")[:2] == (0, "q[0,1]")


def test_cup_component_mismatch(capsys):
    code, out, err = run(capsys, "cup", "g[1,1]", "g[1,2]")
    assert code == 0 and out == "0" and "component" in err
    code, out, _ = run(capsys, "--json", "cup", "g[1,1]", "g[1,2]")
    assert json.loads(out)["class"] == []


def test_json_schema(capsys):
    code, out, _ = run(capsys, "odot", "g[1,1]", "u[2]", "--json")
    assert json.loads(out) == [{"blocks": [{"profile": [[1, 1]], "width": 1}], "unit": 2}]
    code, out, _ = run(capsys, "--json", "basis", "--component", "4", "--degree", "3")
    data = json.loads(out)
    assert len(data) == 3 and all(set(x) == {"blocks", "unit"} for x in data)


def test_coprod(capsys):
    code, out, _ = run(capsys, "coprod", "g[1,2]")
    assert out == "u[0] (x) g[1,2] + g[1,1] (x) g[1,1] + g[1,2] (x) u[0]"
    code, out, _ = run(capsys, "coprod", "--transfer", "q[1]")
    assert out == "1 (x) q[1] + q[1] (x) 1"
    code, out, _ = run(capsys, "coprod", "i")
    assert out == "i (x) i"
    assert run(capsys, "coprod", "--cup", "g[1,1]")[0] == 2


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--component", "4", "--degree", "3")
    assert out.splitlines() == ["g[1,1] o g[1,1]^2", "g[1,1]^3 o u[2]", "g[2,1]"]
    code, out, _ = run(capsys, "basis", "--component", "3", "--degree", "2", "--homology")
    assert out == "q[2]*i"


def test_generator_verbs(capsys):
    code, out, _ = run(capsys, "feshbach", "--component", "12")
    assert code == 0 and len(out.splitlines()) == 13
    assert run(capsys, "sw", "--k", "0", "--l", "1")[1] == "g[1,1]"
    assert run(capsys, "sw", "--k", "2", "--l", "1")[1] == "g[1,1] o g[2,1] o u[2] + g[1,4]"
    assert run(capsys, "sw-coprod", "--k", "0", "--l", "1")[1] == "u[0] (x) g[1,1] + g[1,1] (x) u[0]"
    code, out, _ = run(capsys, "--json", "feshbach", "--component", "4")
    assert [r["partition"] for r in json.loads(out)] == ["1 = 1*1", "2 = 1*2", "3 = 1*3"]


def test_invt_map(capsys):
    assert run(capsys, "invt-map", "g[1,1]^2 o u[1]")[1] == "Sym(x{1,2}^2)"
    assert run(capsys, "invt-map", "g[1,2].g[2,1]", "--scale", "2")[1] == "s(1)_1.s(2)_1"
    assert run(capsys, "invt-map", "g[1,1] o u[1] + g[1,2]", "--scale", "1")[0] == 2


@pytest.mark.parametrize("argv", [
    ["cup", "g[1,x]", "u[2]"],
    ["cup", "g[0,1]", "u[2]"],
    ["pair", "g[1,1]", "q[1"],
    ["bogus"],
    ["basis", "--component", "4"],
    ["verify", "nope"],
    ["normalize", "q[-1]"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_message(capsys):
    code, out, err = run(capsys, "cup", "g[1,x]", "u[2]")
    assert "position 4" in err and "integer" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "examples")
    assert code == 0 and out.startswith("PASS examples")
    code, out, _ = run(capsys, "--json", "verify", "dimensions", "--max-component", "3", "--max-degree", "3")
    data = json.loads(out)
    assert code == 0 and data[0]["failed"] == 0 and data[0]["passed"] == 16


def test_verify_failure_exit_1(capsys, monkeypatch):
    from symhopf import verify

    def broken(**_):
        r = verify.SuiteResult("broken")
        r.check(False, "deliberately failing check")
        return r

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and "FAIL" in out
