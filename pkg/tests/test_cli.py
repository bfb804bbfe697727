import csv
import json

import pytest

from xcover.cli import main

from conftest import DEMO_MATRIX, DEMO_XC

JSON_KEYS = {"instance", "engine", "threads", "count", "nodes", "subs",
             "time_ms", "cache_hits", "cache_misses"}


@pytest.fixture
def demo_file(tmp_path):
    f = tmp_path / "demo.xc"
    f.write_text(DEMO_XC)
    return f


def test_count_json(demo_file, capsys):
    assert main(["count", str(demo_file), "--engine", "dxd", "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert set(info) == JSON_KEYS
    assert info["instance"] == "demo.xc"
    assert info["engine"] == "dxd"
    assert info["threads"] == 1
    assert info["count"] == "4"
    assert info["nodes"] == 7
    assert info["subs"] == 2


def test_count_human_output(demo_file, capsys):
    assert main(["count", str(demo_file)]) == 0
    out = capsys.readouterr().out
    lines = dict(line.split(None, 1) for line in out.strip().splitlines())
    assert lines["count"] == "4"
    assert lines["engine"] == "dxz"


def test_count_matrix_sniffing(tmp_path, capsys):
    f = tmp_path / "inst"  # no suffix: detect by header
    f.write_text(DEMO_MATRIX)
    assert main(["count", str(f), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == "4"


def test_count_oracle_engine(demo_file, capsys):
    assert main(["count", str(demo_file), "--engine", "oracle", "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["count"] == "4"
    assert info["nodes"] == 0


def test_exit_2_on_missing_file(tmp_path, capsys):
    assert main(["count", str(tmp_path / "nope.xc")]) == 2
    assert "error:" in capsys.readouterr().err


def test_exit_2_on_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.xc"
    f.write_text("1 2\nA: 3\n")
    assert main(["count", str(f)]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "line 2" in err


def test_threads_env_default(demo_file, capsys, monkeypatch):
    monkeypatch.setenv("XCOVER_THREADS", "3")
    assert main(["count", str(demo_file), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["threads"] == 3
    monkeypatch.setenv("XCOVER_THREADS", "zero")
    assert main(["count", str(demo_file), "--json"]) == 2
    # explicit flag wins over the environment
    monkeypatch.setenv("XCOVER_THREADS", "5")
    assert main(["count", str(demo_file), "--threads", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["threads"] == 2


def test_compile_dot_and_enumerate(demo_file, tmp_path, capsys):
    dot = tmp_path / "demo.dot"
    rc = main(["compile", str(demo_file), "--engine", "dxd",
               "--dot", str(dot), "--enumerate", "2"])
    assert rc == 0
    text = dot.read_text()
    assert text.startswith("digraph")
    assert 'label="A"' in text  # row names label the decision nodes
    out = capsys.readouterr().out.splitlines()
    assert out == ["A D", "A E F"]


def test_compile_enumerate_all_and_none(demo_file, capsys):
    assert main(["compile", str(demo_file), "--enumerate", "99"]) == 0
    assert capsys.readouterr().out.splitlines() == \
        ["A D", "A E F", "B C D", "B C E F"]
    assert main(["compile", str(demo_file)]) == 0
    assert capsys.readouterr().out == ""


def test_gen_roundtrip(tmp_path, capsys):
    graph = tmp_path / "toy.graph"
    graph.write_text("3 3\n0 1\n1 2\n0 2\n")
    out = tmp_path / "toy.xc"
    rc = main(["gen", str(graph), "--seed", "7", "--fraction", "1.0",
               "--out", str(out)])
    assert rc == 0
    text = out.read_text()
    assert main(["gen", str(graph), "--seed", "7", "--fraction", "1.0"]) == 0
    assert capsys.readouterr().out == text
    assert main(["count", str(out), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == "1"


def test_gen_bad_graph_exits_2(tmp_path, capsys):
    graph = tmp_path / "bad.graph"
    graph.write_text("2 1\n0 9\n")
    assert main(["gen", str(graph)]) == 2
    assert "error:" in capsys.readouterr().err


def test_bench_csv(tmp_path, capsys):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "demo.xc").write_text(DEMO_XC)
    (d / "broken.xc").write_text("1 2\nA: 9\n")
    (d / "ignored.txt").write_text("not an instance")
    out = tmp_path / "bench.csv"
    rc = main(["bench", str(d), "--engines", "dxz,dxd", "--csv", str(out)])
    assert rc == 0
    assert "error:" in capsys.readouterr().err  # broken.xc reported
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["instance", "engine", "threads", "count", "nodes",
                       "subs", "time_ms", "status"]
    assert rows[1][0] == "broken.xc" and rows[1][-1] == "error"
    demo_rows = [r for r in rows if r[0] == "demo.xc"]
    assert [r[1] for r in demo_rows] == ["dxz", "dxd"]
    assert all(r[3] == "4" and r[-1] == "ok" for r in demo_rows)


def test_bench_timeout_rows(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "demo.xc").write_text(DEMO_XC)
    out = tmp_path / "bench.csv"
    rc = main(["bench", str(d), "--engines", "dxz", "--timeout-s", "1e-9",
               "--csv", str(out)])
    assert rc == 0
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[1] == ["demo.xc", "dxz", "1", "", "", "", "", "TO"]


def test_bench_stdout_and_bad_engine(tmp_path, capsys):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "demo.xc").write_text(DEMO_XC)
    assert main(["bench", str(d)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("instance,engine,threads")
    assert out.count("\n") == 4  # header + one row per default engine
    assert main(["bench", str(d), "--engines", "warp"]) == 2
