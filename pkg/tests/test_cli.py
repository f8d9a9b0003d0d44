from __future__ import annotations

import json
import subprocess
import sys

import pytest

from chibound import Graph, OrientedGraph, from_graph6, make_pattern, to_dimacs, to_graph6
from chibound.cli import main
from chibound.constructions import directed_path

import oracles as O


@pytest.fixture
def files(tmp_path):
    def write(name: str, G: Graph) -> str:
        path = tmp_path / name
        path.write_text(to_graph6(G) + "\n")
        return str(path)

    paths = {
        "k5": write("K5.g6", Graph.complete(5)),
        "c5": write("c5.g6", make_pattern("cycle:5")),
        "petersen": write("petersen.g6", make_pattern("petersen")),
        "p9bar": write("p9bar.g6", make_pattern("comp-path:9")),
        "p8bar": write("p8bar.g6", make_pattern("comp-path:8")),
        "paw": write("paw.g6", make_pattern("paw")),
        "twok2": write("twok2.g6", make_pattern("mKt:2,2")),
    }
    path4 = tmp_path / "path4.or"
    path4.write_text(directed_path(4).to_text())
    paths["path4"] = str(path4)
    paths["dir"] = tmp_path
    return paths


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    report = json.loads(out)
    assert report["exit_status"] == code
    return code, report, err


# ------------------------------------------------------------------ detect

def test_detect_examples(capsys, files):
    code, report, err = run(capsys, "detect", files["k5"], "--family", "bowtie")
    assert code == 0 and report["results"]["found"] is False
    assert "detect" in err and "exit 0" in err
    code, report, _ = run(capsys, "detect", files["p9bar"], "--family", "nonwillow_obstructions")
    assert code == 10 and sorted(report["results"]["witness"]["mapping"]) == list(range(9))
    code, report, _ = run(capsys, "detect", files["paw"], "--pattern", "pineapple:3,1")
    assert code == 10
    mapping = report["results"]["witness"]["mapping"]
    assert O.is_induced_embedding(make_pattern("paw"), make_pattern("paw"), mapping)


# ------------------------------------------------------------------ color

def test_color_examples(capsys, files):
    for argv, colours in (
        (("color", files["petersen"], "--alg", "bowtie"), 3),
        (("color", files["c5"], "--alg", "exact"), 3),
        (("color", files["k5"], "--alg", "mkt", "--m", "2", "--t", "2"), 5),
        (("color", files["c5"], "--alg", "pineapple", "--t", "3", "--k", "1"), 3),
        (("color", files["c5"], "--alg", "lollipop", "--t", "3"), 3),
    ):
        code, report, _ = run(capsys, *argv)
        res = report["results"]
        assert code == 0 and res["count"] == colours and res["proper"]
        G = from_graph6(open(argv[1]).read())
        assert O.is_proper(G, res["colors"])
        if res["bound"] is not None:
            assert res["bound"]["achieved"] <= res["bound"]["bound_value"]


def test_color_non_member_reports_witness(capsys, files):
    code, report, _ = run(capsys, "color", files["twok2"], "--alg", "mkt", "--m", "2", "--t", "2")
    assert code == 11 and report["results"]["member"] is False
    mapping = report["results"]["witness"]["mapping"]
    assert O.is_induced_embedding(make_pattern("mKt:2,2"), make_pattern("mKt:2,2"), mapping)


def test_color_missing_parameter_is_a_usage_error(capsys, files):
    code, report, err = run(capsys, "color", files["k5"], "--alg", "mkt")
    assert code == 2 and "--m" in report["results"]["error"] and "error" in err


# ------------------------------------------------------------------ willow

def test_builtin_piped_into_verify(capsys, files, monkeypatch):
    code, report, _ = run(capsys, "willow", "builtin", "p8bar", "--n", "5")
    assert code == 0
    code, verdict, _ = run(capsys, "willow", "verify", files["p8bar"],
                           stdin=json.dumps(report), monkeypatch=monkeypatch)
    assert code == 0 and verdict["results"]["valid"]


def test_verify_corrupted_weight(capsys, files, monkeypatch):
    _, report, _ = run(capsys, "willow", "builtin", "p8bar", "--n", "5")
    cert = report["results"]["certificate"]
    cert["arcs"][0][2] += 1
    path = files["dir"] / "bad.json"
    path.write_text(json.dumps(cert))
    code, verdict, _ = run(capsys, "willow", "verify", files["p8bar"], "--cert", str(path))
    assert code == 12 and len(verdict["results"]["violation"]) == 2


def test_search_absent(capsys, files):
    code, report, _ = run(capsys, "willow", "search", files["p9bar"], "--n", "5", "--steiner", "3")
    assert code == 13 and report["results"]["found"] is False


def test_search_found(capsys, files):
    code, report, _ = run(capsys, "willow", "search", files["c5"], "--n", "5", "--steiner", "1")
    assert code == 0 and report["results"]["certificate"]["modulus"] == 5


def test_malformed_certificate_is_an_error(capsys, files, monkeypatch):
    code, report, _ = run(capsys, "willow", "verify", files["c5"], stdin='{"modulus": 2}',
                          monkeypatch=monkeypatch)
    assert code == 2


# ------------------------------------------------------------------ construct

def test_construct_descartes(capsys, tmp_path):
    out = tmp_path / "og.or"
    code, report, _ = run(capsys, "construct", "descartes", "--k", "3", "--out", str(out))
    res = report["results"]
    assert code == 0 and res["vertices"] == 9
    assert all(res["contract"][a] for a in ("A1", "A2", "A3", "A4"))
    assert OrientedGraph.from_text(out.read_text()).n == 9


def test_construct_shiftpower(capsys, files):
    code, report, _ = run(capsys, "construct", "shiftpower", files["path4"], "--p", "2")
    G = from_graph6(report["results"]["graph6"])
    assert code == 0 and sorted(G.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_construct_check(capsys, tmp_path):
    og = tmp_path / "og.or"
    run(capsys, "construct", "descartes", "--k", "3", "--out", str(og))
    code, report, _ = run(capsys, "construct", "check", str(og), "--p", "2", "--samples", "200")
    res = report["results"]
    assert code == 0
    assert res["shift_claims"]["omega"] == 2 and not res["shift_claims"]["claim_falsified"]
    assert res["min_direction_changes"] == 6


def test_construct_check_on_a_forest(capsys, files):
    code, report, _ = run(capsys, "construct", "check", files["path4"], "--p", "2")
    assert report["results"]["min_direction_changes"] is None


def test_construct_cap_is_a_usage_error(capsys):
    code, report, _ = run(capsys, "construct", "descartes", "--k", "4")
    assert code == 2 and "CapExceededError" in report["results"]["error"]


# ------------------------------------------------------------------ reports

def test_report_field_order_and_digest(capsys, files):
    _, report, _ = run(capsys, "detect", files["k5"], "--family", "bowtie")
    assert list(report) == ["command", "input_digest", "results", "exit_status", "timing"]
    assert report["input_digest"].startswith("sha256:")
    _, quiet, _ = run(capsys, "detect", files["k5"], "--family", "bowtie", "--no-timing")
    assert "timing" not in quiet and quiet["input_digest"] == report["input_digest"]


def test_reports_are_deterministic_and_ignore_jobs(capsys, tmp_path, monkeypatch):
    og = tmp_path / "og.or"
    og.write_text(directed_path(6).to_text())
    outs = []
    for jobs in ("1", "4", "1"):
        main(["construct", "check", str(og), "--p", "3", "--samples", "30", "--no-timing", "--jobs", jobs])
        outs.append(capsys.readouterr().out.replace(f'"--jobs", "{jobs}"', ""))
    assert outs[0] == outs[1] == outs[2]
    monkeypatch.setenv("CHIBOUND_SEED", "11")
    main(["construct", "check", str(og), "--p", "3", "--samples", "30", "--no-timing"])
    env_out = capsys.readouterr().out
    main(["construct", "check", str(og), "--p", "3", "--samples", "30", "--no-timing", "--seed", "11"])
    flag_out = capsys.readouterr().out
    strip = lambda s: json.loads(s)["results"]
    assert strip(env_out) == strip(flag_out)


def test_dimacs_input(capsys, files):
    path = files["dir"] / "c5.col"
    path.write_text(to_dimacs(make_pattern("cycle:5")))
    code, report, _ = run(capsys, "color", str(path), "--alg", "exact", "--format", "dimacs")
    assert code == 0 and report["results"]["count"] == 3


def test_parse_error_exit_code(capsys, files):
    path = files["dir"] / "junk.g6"
    path.write_text("not a graph\n")
    code, report, _ = run(capsys, "color", str(path), "--alg", "exact")
    assert code == 2


def test_console_script_runs(files):
    proc = subprocess.run(
        [sys.executable, "-m", "chibound", "color", files["c5"], "--alg", "exact", "--no-timing"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["count"] == 3
    assert proc.stderr.strip() == "color: ok (exit 0)"
