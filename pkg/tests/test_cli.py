"""Command-line interface: subcommand reports, exit codes, certificate
files, and error rendering."""

import json

import pytest

from edgeideals.cli import main


@pytest.fixture
def run(capsys):
    def go(argv, expect=0):
        code = main(argv)
        out = capsys.readouterr()
        assert code == expect, (argv, code, out.err)
        return json.loads(out.out) if out.out.strip() else None
    return go


@pytest.fixture
def graph_file(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def test_analyze(run, graph_file):
    f = graph_file("tri.txt", "a b\nb c\nc a\n")
    rep = run(["analyze", f])
    assert rep["is_cactus"] and rep["is_chordal"]
    assert rep["cycles"] == [["a", "b", "c"]]
    assert rep["graph"]["edges"] == [["a", "b"], ["a", "c"], ["b", "c"]]


def test_covers(run, graph_file):
    f = graph_file("c5.txt", "\n".join(
        "v%d v%d" % (i, (i + 1) % 5) for i in range(5)))
    rep = run(["covers", f])
    assert rep["height"] == rep["big_height"] == 3
    assert rep["unmixed"]
    assert len(rep["covers"]) == 5


def test_bound_with_trace(run, graph_file):
    f = graph_file("bowtie.txt", "a b\nb c\nc a\nc d\nd e\ne c\n")
    rep = run(["bound", "--trace", f])
    assert rep["bound"] == 6 and rep["n_cycles"] == 2
    assert rep["trace_bound"] == 6
    assert rep["trace"]["case"]


def test_bound_improve(run, graph_file):
    f = graph_file("tri2w.txt", "a b\nb c\nc a\na aw\nb bw\n")
    rep = run(["bound", "--improve", f])
    assert rep["improvement_k"] == 1 and rep["bound"] == 3
    assert rep["source"] == "Cor 4.1"


def test_gens_lemma52_writes_certificate(run, tmp_path):
    out = str(tmp_path / "cert.json")
    rep = run(["gens", "--family", "lemma52", "--r", "1", "--s", "1",
               "--out", out])
    assert rep["count"] == 5 and rep["verified"]
    rep = run(["verify", out])
    assert rep["verified"]


def test_gens_cycle(run):
    rep = run(["gens", "--family", "cycle", "--length", "4"])
    assert rep["count"] == 3 and rep["verified"]


def test_gens_whisker(run, graph_file):
    f = graph_file("wt.txt", "a b\nb c\na aw\nb bw\nc cw\n")
    rep = run(["gens", "--family", "whisker", f, "--anchor", "a", "b"])
    assert rep["count"] == 3 and rep["verified"]


def test_gens_svsearch(run, graph_file):
    f = graph_file("p4.txt", "a b\nb c\nc d\n")
    rep = run(["gens", "--family", "svsearch", f, "--max-layers", "2"])
    assert rep["verified"] and rep["count"] == 2


def test_gens_prop42(run, graph_file):
    f = graph_file("base.txt", "a b\n")
    rep = run(["gens", "--family", "prop42", "--base", f,
               "--attach", "a=whisker", "--attach", "b=5"])
    assert rep["count"] == 4 and rep["verified"]


def test_verify_tampered_exits_1(run, tmp_path):
    out = tmp_path / "cert.json"
    run(["gens", "--family", "cycle", "--length", "5", "--out", str(out)])
    data = json.loads(out.read_text())
    data["generators"][0][0][1] += 1  # bump a generator coefficient
    out.write_text(json.dumps(data))
    rep = run(["verify", str(out)], expect=1)
    assert not rep["verified"] and rep["reason"]


def test_classify(run, graph_file):
    f = graph_file("c5.txt", "\n".join(
        "v%d v%d" % (i, (i + 1) % 5) for i in range(5)))
    rep = run(["classify", f])
    assert rep["status"] == "CM" and rep["case"] == "Thm 5.1 case 1"
    rep = run(["classify", "--result", "cor44", graph_file("k3.txt",
                                                           "a b\nb c\nc a")])
    assert rep["status"] == "CM"


def test_classify_hypothesis_error_exits_2(run, graph_file):
    f = graph_file("c7.txt", "\n".join(
        "v%d v%d" % (i, (i + 1) % 7) for i in range(7)))
    run(["classify", "--result", "cor61", f], expect=2)


def test_pd(run, graph_file):
    f = graph_file("c4.txt", "a b\nb c\nc d\nd a\n")
    rep = run(["pd", f])
    assert rep["pd"] == 3
    assert [1, 2, 4] in rep["betti"]  # four edges contribute beta_{1,2}


def test_bad_graph_file_exits_2(run):
    run(["covers", "/nonexistent/file.txt"], expect=2)


def test_malformed_edge_list_exits_2(run, graph_file):
    run(["covers", graph_file("bad.txt", "a a\n")], expect=2)


def test_stdin_input(run, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("a b\nb c\n"))
    rep = run(["covers", "-"])
    assert rep["height"] == 1


def test_gens_missing_arguments_exit_2(run):
    run(["gens", "--family", "whisker"], expect=2)
    run(["gens", "--family", "prop42"], expect=2)
    run(["gens", "--family", "prop42", "--base", "/nonexistent"], expect=2)
