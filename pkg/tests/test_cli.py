import json
import subprocess
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(*args, expect: int = 0):
    proc = subprocess.run(
        [sys.executable, "-m", "severi.cli", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, proc.stderr
    return proc


def test_dim():
    proc = run_cli("dim", "--d", "3", "--g", "2", "--b", "3")
    assert json.loads(proc.stdout)["dimension"] == 6


def test_gamma_product_model():
    proc = run_cli(
        "gamma", "--model", "elliptic_times_p1", "--D", "0,1", "--tau", "3,2",
        "--b", "0", "--g", "2",
    )
    data = json.loads(proc.stdout)
    assert data == {
        "applicable": True,
        "dim_bound": 4,
        "gamma": 3,
        "model": "elliptic_times_p1",
    }


def test_gamma_not_applicable():
    proc = run_cli(
        "gamma", "--model", "elliptic_times_p1", "--D", "0,3", "--tau", "1,1",
        "--b", "0", "--g", "2",
    )
    data = json.loads(proc.stdout)
    assert data["applicable"] is False and data["dim_bound"] is None


def test_terms_simple_and_general():
    state = str(FIXTURES / "state_simple.json")
    simple = json.loads(run_cli("terms", "--state", state, "--simple").stdout)
    general = json.loads(run_cli("terms", "--state", state).stdout)
    assert simple["dimension"] == 6
    assert len(simple["terms"]) == 1
    assert simple["terms"][0]["kind"] == "I"
    assert len(general["terms"]) == 1


def test_terms_invalid_state_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"d": 3, "N": 1, "g": 0, "alpha": [], "betas": []}))
    proc = run_cli("terms", "--state", str(bad), expect=1)
    assert "class equation" in proc.stderr


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "severi.cli", "dim", "--d", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_budget_exit_code():
    run_cli("hurwitz", "orbits", "--d", "6", "--g", "2", expect=3)


def test_forest_with_dot(tmp_path):
    out = tmp_path / "forest.dot"
    proc = run_cli(
        "forest", "--root", str(FIXTURES / "state_simple.json"),
        "--floor", "0", "--dot", str(out),
    )
    data = json.loads(proc.stdout)
    assert not data["truncated"]
    assert len(data["nodes"]) >= 2
    assert out.read_text().startswith("digraph")


def test_genusbound():
    proc = run_cli("genusbound", "--graph", str(FIXTURES / "graph_chain.json"), "--g", "3")
    data = json.loads(proc.stdout)
    assert data["holds"] and data["equality"]


def test_lattice_subcommands():
    data = json.loads(run_cli("lattice", "snf", "--rows", "2,0;0,4").stdout)
    assert data["snf"] == [2, 4]
    data = json.loads(run_cli("lattice", "sublattices", "--e", "2").stdout)
    assert data["count"] == 3
    data = json.loads(run_cli("lattice", "hat", "--rows", "1,0;0,2", "--D", "2").stdout)
    assert data["feasible"] and data["lhat"] == [[2, 0], [0, 1]]
    data = json.loads(run_cli("lattice", "hat", "--rows", "2,0;0,2", "--D", "2").stdout)
    assert data["feasible"] is False
    data = json.loads(run_cli("lattice", "counts", "--d", "6").stdout)
    assert data["hurwitz_components"] == 8


def test_mono_subcommands(tmp_path):
    tup = str(FIXTURES / "tuple_d3.json")
    data = json.loads(run_cli("mono", "check", "--tuple", tup).stdout)
    assert data["valid"]
    data = json.loads(run_cli("mono", "lattice", "--tuple", tup).stdout)
    assert data["primitive"]
    data = json.loads(run_cli("mono", "factor", "--tuple", tup).stdout)
    assert data["e"] == 1 and data["kernel"]["ok"]
    data = json.loads(run_cli("mono", "scan", "--d", "3", "--b", "2").stdout)
    assert data["ok"] and data["tuples"] == 96


def test_hurwitz_orbits_with_dot(tmp_path):
    out = tmp_path / "moves.dot"
    proc = run_cli("hurwitz", "orbits", "--d", "2", "--g", "2", "--dot", str(out))
    data = json.loads(proc.stdout)
    assert data["orbit_count"] == 1
    assert out.read_text().startswith("graph moves")


@pytest.mark.parametrize(
    "args",
    [
        ("dim", "--d", "3", "--g", "2", "--b", "3"),
        ("terms", "--state", str(FIXTURES / "state_simple.json")),
        ("terms", "--state", str(FIXTURES / "state_two_groups.json")),
        ("forest", "--root", str(FIXTURES / "state_simple.json"), "--floor", "0"),
        ("lattice", "counts", "--d", "6"),
        ("genusbound", "--graph", str(FIXTURES / "graph_chain.json"), "--g", "3"),
        ("mono", "factor", "--tuple", str(FIXTURES / "tuple_d3.json")),
        ("hurwitz", "orbits", "--d", "3", "--g", "2"),
    ],
)
def test_repeated_runs_are_byte_identical(args):
    first = run_cli(*args).stdout
    second = run_cli(*args).stdout
    assert first == second
    json.loads(first)  # and the output is valid JSON
