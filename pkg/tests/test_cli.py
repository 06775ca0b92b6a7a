import json
import subprocess
import sys

import pytest

from tourney_sandwich.cli import UsageError, main, parse_hosts, parse_pattern
from tourney_sandwich.graph_core import build_path, is_isomorphic, tournament_to_text
from tourney_sandwich.hom_engine import random_tournament


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_parse_pattern_forms(tmp_path):
    assert is_isomorphic(parse_pattern("2,4,3"), build_path((2, 4, 3)))
    assert parse_pattern("spider:2,3,4").vertex_count == 10
    assert is_isomorphic(parse_pattern("named:P22"), build_path((2, 2)))
    with pytest.raises(UsageError):
        parse_pattern("x,y")
    with pytest.raises(UsageError):
        parse_pattern("named:nothing")


def test_parse_hosts_forms(tmp_path):
    assert parse_hosts("enum:3") == ("enum", 3)
    assert parse_hosts("rand:5:4:1") == ("rand", (5, 4, 1))
    kind, hosts = parse_hosts("bits:3:5")
    assert kind == "list" and [t.bits for t in hosts] == [5]
    f = tmp_path / "t.txt"
    f.write_text(tournament_to_text(random_tournament(4, 2)))
    assert parse_hosts(str(f)) == ("list", [random_tournament(4, 2)])
    with pytest.raises(UsageError):
        parse_hosts("rand:5:0:1")


def test_density(capsys):
    code, out = run(capsys, "density", "--pattern", "2", "--host", "bits:3:0")
    assert code == 0 and "t=1/27" in out and "verdict PASS" in out


def test_scan_pass_and_fail(capsys):
    code, out = run(capsys, "scan", "--pattern", "1,2", "--host", "enum:5")
    assert code == 0 and "verdict PASS" in out
    code, out = run(capsys, "scan", "--pattern", "1,1", "--host", "enum:6", "--n-min", "6")
    assert code == 1 and "55/216" in out and "verdict FAIL" in out


def test_spider_roundtrip(tmp_path, capsys):
    cert = tmp_path / "spider.json"
    dot = tmp_path / "spider.dot"
    code, _ = run(capsys, "spider", "--legs", "2,3,4", "--out", str(cert), "--dot", str(dot))
    assert code == 0 and json.loads(cert.read_text())["vertex_count"] > 10
    assert dot.read_text().startswith("digraph")
    code, out = run(capsys, "verify", str(cert))
    assert code == 0 and "verdict PASS" in out


def test_verify_detects_tampering(tmp_path, capsys):
    cert = tmp_path / "d4.json"
    run(capsys, "atlas", "--id", "D4*", "--out", str(cert))
    data = json.loads(cert.read_text())
    data["weights"] = {k: "1/4" for k in data["weights"]}
    cert.write_text(json.dumps(data))
    code, out = run(capsys, "verify", str(cert))
    assert code == 1 and "verdict FAIL" in out


def test_atlas_listing(capsys):
    code, out = run(capsys, "atlas", "--k-max", "3", "--t-max", "1", "--a-values", "6")
    assert code == 0 and "D3,4S" in out
    assert all(line.endswith("PASS") for line in out.strip().splitlines())


def test_composers(capsys):
    assert run(capsys, "compose", "--blocks", "2,4,3")[0] == 0
    code, out = run(capsys, "coverhalf", "--k", "14", "--a", "7")
    assert code == 0 and "1/2" in out
    code, out = run(capsys, "twoblocks", "--a", "1", "--b", "6")
    assert code == 0 and "reduction" in out
    code, out = run(capsys, "spider", "--legs", "1,2,3")
    assert code == 0 and "caterpillar" in out


def test_expand_and_search(capsys):
    code, out = run(capsys, "expand", "--pattern", "2,2")
    assert code == 0 and "1/16 - 1/4*t(P_{1,1},U) + t(P_{2,2},U)" in out
    assert run(capsys, "expand", "--pattern", "1,3,3,1", "--proofs")[0] == 0
    assert run(capsys, "search", "--pattern", "3")[0] == 0
    assert run(capsys, "search", "--pattern", "1,1", "--shapes", "paths")[0] == 1
    assert run(capsys, "search", "--pattern", "1,1", "--shapes", "paths", "--expect-infeasible")[0] == 0


def test_errors_exit_2(capsys):
    assert main(["coverhalf", "--k", "5", "--a", "2"]) == 2
    assert main(["verify", "/nonexistent/file.json"]) == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "tourney_sandwich", "expand", "--pattern", "1"],
        capture_output=True, text=True, check=True,
    )
    assert "1/2" in out.stdout
