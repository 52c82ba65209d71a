import json
from pathlib import Path

import pytest

from altiset.cli import EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

GOLDEN_RUNS = [
    ("altiset_cycle3.json", ["altiset", "--relation", str(FIXTURES / "cycle3.json")]),
    ("layers_chain3.json", ["layers", "--relation", str(FIXTURES / "chain3.json")]),
    ("correlate_increasing.json", ["correlate", str(FIXTURES / "points_increasing.csv")]),
    ("collective_family.json", ["collective", str(FIXTURES / "family.json")]),
    (
        "skyline_summits.json",
        ["skyline", str(FIXTURES / "summits.csv"), "--ref", "0,0", "--method", "oracle"],
    ),
    ("evolve_triangle.json", ["evolve", str(FIXTURES / "evolve.csv"), "--grid", "16x16"]),
]


@pytest.mark.parametrize("golden,argv", GOLDEN_RUNS, ids=[g for g, _ in GOLDEN_RUNS])
def test_golden_byte_equality(golden, argv, capsys):
    assert main(["--no-timestamp"] + argv) == EXIT_OK
    out = capsys.readouterr().out
    assert out == (GOLDEN / golden).read_text()


@pytest.mark.parametrize("golden,argv", GOLDEN_RUNS, ids=[g for g, _ in GOLDEN_RUNS])
def test_output_is_deterministic(golden, argv, capsys):
    assert main(["--no-timestamp"] + argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["--no-timestamp"] + argv) == EXIT_OK
    assert capsys.readouterr().out == first


def test_cycle_relation_has_empty_altiset(capsys):
    main(["--no-timestamp", "altiset", "--relation", str(FIXTURES / "cycle3.json")])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["altiset"] == []


def test_increasing_points_have_epsilon_one(capsys):
    main(["--no-timestamp", "correlate", str(FIXTURES / "points_increasing.csv")])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["epsilon"] == 1.0


def test_chain_layers(capsys):
    main(["--no-timestamp", "layers", "--relation", str(FIXTURES / "chain3.json")])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["d"] == 3
    assert doc["result"]["upper_index"] == [3, 2, 1]


def test_subset_flag(capsys):
    main([
        "--no-timestamp",
        "altiset",
        "--relation", str(FIXTURES / "chain3.json"),
        "--subset", "0,1",
    ])
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["altiset"] == [1]


def test_skyline_methods_agree(capsys):
    results = []
    for method in ("oracle", "circular", "contour", "recursive"):
        main([
            "--no-timestamp", "skyline", str(FIXTURES / "summits.csv"),
            "--ref", "0,0", "--method", method,
        ])
        results.append(json.loads(capsys.readouterr().out)["result"]["altiset"])
    assert all(r == results[0] for r in results)


def test_skyline_records_on_real_line(capsys):
    assert main([
        "--no-timestamp", "skyline", str(FIXTURES / "summits.csv"),
        "--ref", "0", "--method", "records",
    ]) == EXIT_IO  # 3-column file parses as planar, records need real line


def test_evolve_trace_file(tmp_path, capsys):
    trace_path = tmp_path / "trace.json"
    assert main([
        "--no-timestamp", "evolve", str(FIXTURES / "evolve.csv"),
        "--grid", "16x16", "--trace", str(trace_path),
    ]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    trace = json.loads(trace_path.read_text())
    assert trace["stop_index"] == doc["result"]["stop_index"]
    k = trace["stop_index"]
    assert trace["valuations"][k] == trace["valuations"][k + 1]


def test_grid_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ALTISET_GRID", "16")
    assert main(["--no-timestamp", "evolve", str(FIXTURES / "evolve.csv")]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["meta"]["settings"]["grid"] == [16, 16]


def test_output_file(tmp_path, capsys):
    out = tmp_path / "out.json"
    assert main([
        "--no-timestamp", "-o", str(out),
        "altiset", "--relation", str(FIXTURES / "cycle3.json"),
    ]) == EXIT_OK
    assert out.read_text() == (GOLDEN / "altiset_cycle3.json").read_text()


def test_timestamp_present_by_default(capsys):
    main(["altiset", "--relation", str(FIXTURES / "cycle3.json")])
    doc = json.loads(capsys.readouterr().out)
    assert "timestamp" in doc["meta"]


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        assert main([
            "--no-timestamp", "layers", "--relation", str(FIXTURES / "cycle3.json")
        ]) == EXIT_DOMAIN
        assert "cycle" in capsys.readouterr().err

    def test_parse_error_is_two(self, capsys):
        assert main([
            "--no-timestamp", "altiset", "--relation", str(FIXTURES / "bad_pairs.json")
        ]) == EXIT_IO

    def test_csv_parse_error_names_line(self, capsys):
        assert main(["--no-timestamp", "correlate", str(FIXTURES / "bad_cell.csv")]) == EXIT_IO
        assert "line 3" in capsys.readouterr().err

    def test_missing_file_is_two(self, capsys):
        assert main(["--no-timestamp", "altiset", "--relation", "/no/such.json"]) == EXIT_IO

    def test_unknown_command_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["--no-timestamp", "frobnicate"])
        assert err.value.code == EXIT_USAGE

    def test_degenerate_correlate_is_domain_error(self, tmp_path, capsys):
        single = tmp_path / "one.csv"
        single.write_text("x,y\n1,1\n")
        assert main(["--no-timestamp", "correlate", str(single)]) == EXIT_DOMAIN
