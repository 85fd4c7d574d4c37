import pytest

from pivotloop.cli import main
from pivotloop.graphs import all_graphs
from pivotloop.setsystem import ss_of_matrix

from conftest import PQRS_GRAPH

NOT_DM = "vertices: 1 2 3\n{}\n{2}\n{3}\n{2,3}\n{1,2,3}\n"


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return make


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply_graph(capsys, files):
    g = files("g.txt", PQRS_GRAPH)
    code, out, _ = run(capsys, "apply", "--graph", g, "--word", "*{p,q,r}")
    assert code == 0
    assert out == "vertices: p q r s\nloop q\nedge p r\nedge p s\nedge q r\nedge q s\nedge r s\n"


def test_apply_undefined_has_no_partial_output(capsys, files):
    g = files("g.txt", PQRS_GRAPH)
    code, out, err = run(capsys, "apply", "--graph", g, "--word", "*{q} *{q} *{r}")
    assert code == 1 and out == ""
    assert "step 2" in err


def test_apply_empty_word_echoes(capsys, files):
    g = files("g.txt", PQRS_GRAPH)
    assert run(capsys, "apply", "--graph", g, "--word", "") == (0, PQRS_GRAPH, "")
    s = files("m.txt", NOT_DM)
    assert run(capsys, "apply", "--ss", s, "--word", "")[1] == NOT_DM


def test_apply_ss_and_out_file(capsys, files, tmp_path):
    s = files("m.txt", NOT_DM)
    out_path = tmp_path / "r.txt"
    code, out, _ = run(capsys, "apply", "--ss", s, "--word", "+{1}", "--out", str(out_path))
    assert code == 0 and out == ""
    assert out_path.read_text() == "vertices: 1 2 3\n{}\n{1}\n{2}\n{3}\n{1,2}\n{1,3}\n{2,3}\n"


def test_apply_simple(capsys, files):
    g = files("s.txt", "vertices: a b c\nedge a b\nedge b c\n")
    code, out, _ = run(capsys, "apply", "--graph", g, "--simple", "--word", "*{b}")
    assert code == 0 and "edge a c" in out
    assert run(capsys, "apply", "--graph", g, "--simple", "--word", "+{a}")[0] == 1
    looped = files("l.txt", "vertices: a\nloop a\n")
    assert run(capsys, "apply", "--graph", looped, "--simple", "--word", "")[0] == 2


@pytest.mark.parametrize("word", ["*{p", "*{p}*{q}", "*{z}"])
def test_apply_parse_errors(capsys, files, word):
    g = files("g.txt", PQRS_GRAPH)
    code, out, _ = run(capsys, "apply", "--graph", g, "--word", word)
    assert code == 2 and out == ""


def test_bad_input_files(capsys, files, tmp_path):
    bad = files("bad.txt", "vertices: a\nedge a b\n")
    assert run(capsys, "convert", "--graph", bad)[0] == 2
    assert run(capsys, "convert", "--graph", str(tmp_path / "missing.txt"))[0] == 2


def test_mutually_exclusive_inputs(capsys, files):
    g = files("g.txt", PQRS_GRAPH)
    with pytest.raises(SystemExit) as info:
        main(["convert", "--graph", g, "--ss", g])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "word, expected",
    [("*{a} +{a} *{a}", "+{a} *{a} +{a}\n"), ("", "\n"), ("*{a,b} +{a} *{a,c}", "+{a} *{a,b,c} +{a}\n")],
)
def test_normalize(capsys, word, expected):
    assert run(capsys, "normalize", "--word", word, "--vertices", "a,b,c") == (0, expected, "")


def test_normalize_parse_error(capsys):
    assert run(capsys, "normalize", "--word", "*{d}", "--vertices", "a b")[0] == 2


def test_convert(capsys, files):
    g = files("g.txt", PQRS_GRAPH)
    code, out, _ = run(capsys, "convert", "--graph", g)
    assert code == 0
    assert out.splitlines()[1:] == ["{}", "{p}", "{q}", "{p,r}", "{p,s}", "{r,s}", "{p,q,r}", "{p,q,s}", "{p,r,s}", "{q,r,s}"]
    s = files("m.txt", out)
    assert run(capsys, "convert", "--ss", s) == (0, PQRS_GRAPH, "")


def test_convert_not_graphic(capsys, files):
    s = files("m.txt", NOT_DM)
    code, out, err = run(capsys, "convert", "--ss", s)
    assert code == 3 and out == "" and "not graphic" in err


def test_convert_round_trip_exhaustive(capsys, files):
    for G in all_graphs("abc"):
        s = files("m.txt", ss_of_matrix(G).to_text())
        assert run(capsys, "convert", "--ss", s) == (0, G.to_text(), "")


def test_check(capsys, files):
    s = files("m.txt", NOT_DM)
    assert run(capsys, "check", "--ss", s, "--delta-matroid") == (0, "not a delta-matroid; witness X={} Y={1,2,3} x=1\n", "")
    ok = files("ok.txt", "vertices: 1 2\n{}\n{1}\n")
    assert run(capsys, "check", "--ss", ok, "--delta-matroid")[1] == "delta-matroid\n"


def test_orbit(capsys, files, tmp_path):
    g = files("g.txt", PQRS_GRAPH)
    dot = tmp_path / "o.dot"
    code, out, _ = run(capsys, "orbit", "--graph", g, "--dot", str(dot))
    assert code == 0 and out == "nodes: 5\ntransitions: 17\nself-loops: 3\n"
    first = dot.read_text()
    run(capsys, "orbit", "--graph", g, "--dot", str(dot), "--workers", "3")
    assert dot.read_text() == first
    assert run(capsys, "orbit", "--graph", g, "--max-nodes", "2")[0] == 1
    code, out, _ = run(capsys, "orbit", "--graph", g, "--full")
    assert code == 0 and out.startswith("nodes: ")


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "setsystem", "--max-n", "3", "--seed", "1")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_reports_failure(capsys, monkeypatch):
    import pivotloop.verify as verify

    def broken(max_n, rng):
        res = verify.CheckResult("demo.broken", cases=1, counterexample="G={} X={a}")
        return res

    monkeypatch.setitem(verify.SUITES, "cli", [broken])
    code, out, _ = run(capsys, "verify", "--suite", "cli")
    assert code == 1
    assert "FAIL demo.broken" in out and "G={} X={a}" in out
