import io
import json

import pytest

from sdgamma.cli import load_witness, main, parse_int_list, InputError
from sdgamma.complex import f_vector, verify_coloring
from sdgamma.ffk import is_ffk


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv), out)
    return code, out.getvalue()


def test_vectors_triangle():
    code, text = run("vectors", "--facets-inline", "[[1,2],[2,3],[1,3]]")
    assert code == 0
    assert text.splitlines() == [
        "f      = (1, 3, 3)",
        "h      = (1, 1, 1)",
        "g      = (1, 0)",
        "gamma  = (1, -1)",
        "h(sd)  = (1, 4, 1)",
        "gamma(sd) = (1, 2)",
    ]


def test_vectors_json_is_strings():
    code, text = run("vectors", "--h", "1,5,10,10,5,1", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["format"] == 1
    assert doc["gamma"] == ["1", "0", "0"]
    assert doc["g"] == ["1", "4", "5"]
    assert doc["gamma_sd"] == ["1", "232", "976"]


def test_vectors_empty_and_asymmetric():
    code, text = run("vectors", "--facets-inline", "[]")
    assert code == 0 and text.startswith("f      = (1)")
    code, text = run("vectors", "--h", "1,2,3")
    assert code == 0 and "not symmetric" in text


def test_input_file_and_stdin(tmp_path, monkeypatch):
    p = tmp_path / "oct.json"
    p.write_text(json.dumps({"h": ["1", "3", "3", "1"]}))
    code, text = run("vectors", "--input", str(p))
    assert code == 0 and "gamma(sd) = (1, 20)" in text
    code, text = run("vectors", "--input", "-", stdin='{"facets": [[0,1],[1,2]]}',
                     monkeypatch=monkeypatch)
    assert code == 0 and "f      = (1, 3, 2)" in text


def test_parse_errors_have_positions(monkeypatch, capsys):
    code, _ = run("vectors", "--input", "-", stdin='{"h": [1,\n 3,', monkeypatch=monkeypatch)
    assert code == 2
    assert "line 2" in capsys.readouterr().err
    with pytest.raises(InputError, match="column 4"):
        parse_int_list("1, x")
    assert run("vectors")[0] == 2
    assert run("vectors", "--h", "1", "--facets-inline", "[]")[0] == 2
    assert run("nonsense")[0] == 2


def test_subdivide():
    code, text = run("subdivide", "--facets-inline", "[[0,1,2,3]]")
    assert code == 0 and "match: yes" in text


def test_eulerian():
    code, text = run("eulerian", "4")
    assert code == 0
    assert "A_4(t) = 1 + 11t + 11t^2 + t^3" in text
    _, text = run("eulerian", "6")
    for row in ("gamma^(6,1) = (1, 22, 16)", "gamma^(6,2) = (0, 18, 48)",
                "gamma^(6,3) = (0, 12, 72)"):
        assert row in text
    assert run("eulerian", "1")[0] == 0
    assert run("eulerian", "12")[0] == 2
    assert run("eulerian", "12", "--cap", "12")[0] == 0


def test_ffk_check():
    assert run("ffk-check", "--f", "1,3,2", "--d", "2")[0] == 0
    code, text = run("ffk-check", "--f", "1,3,3", "--d", "2")
    assert code == 1 and "(1, 4)" in text


@pytest.mark.parametrize("h,gamma", [("1,1,1", [1, 2]), ("1,3,3,1", [1, 20]),
                                     ("1,5,10,10,5,1", [1, 232, 976])])
def test_witness_round_trip(h, gamma):
    code, text = run("witness", "--h", h, "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["closure"] and doc["coloring_ok"]
    cc, g = load_witness(text)
    assert g == gamma
    assert list(f_vector(cc.complex)) == gamma
    assert verify_coloring(cc)
    assert is_ffk(g, cc.d)


def test_witness_rejects_bad_h():
    assert run("witness", "--h", "1,2,3")[0] == 2


def test_output_deterministic():
    a = run("witness", "--h", "1,3,3,1", "--format", "json")[1]
    b = run("witness", "--h", "1,3,3,1", "--format", "json")[1]
    assert a == b


def test_verify():
    code, text = run("verify", "--n-max", "1")
    assert code == 0 and "all checks passed" in text
    code, single = run("verify", "--n-max", "6", "--format", "json")
    assert code == 0
    code, threaded = run("verify", "--n-max", "6", "--threads", "4", "--format", "json")
    assert code == 0 and single == threaded
    assert run("verify", "--n-max", "11")[0] == 2
