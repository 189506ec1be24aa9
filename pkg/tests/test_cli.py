"""Command line behavior: exit codes, output shape, CSV equivalence."""

import json

import pytest

from depra.analysis import project_comparison
from depra.case_study import example_project_path
from depra.cli import DEFAULT_PORT, PORT_ENV_VAR, main
from depra.model import BasicEvent, FaultTreeModel, Gate
from depra.project_io import (
    Alternative,
    DependabilityProperty,
    Project,
    dumps_project,
    export_results_csv,
    load_project,
    save_project,
)

EXAMPLE = str(example_project_path())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- validate -----------------------------------------------------------------


def test_validate_ok_on_bundled_project(capsys):
    code, out, err = run(capsys, "validate", EXAMPLE)
    assert code == 0
    assert "tree 'without_measure': ok" in out
    assert "references ok" in out
    assert err == ""


def test_validate_reports_violations_and_exits_one(capsys, tmp_path):
    broken = Project(
        name="broken",
        properties=(DependabilityProperty("safety", 1.0),),
        alternatives=(Alternative(id="a", name="a", tree_id="t"),),
        fault_trees={
            "t": FaultTreeModel(
                top="g",
                basic_events=(BasicEvent(id="e", failure_rate_fit=-5.0, mdt_hours=24.0),),
                gates=(Gate(id="g", kind="or", inputs=("e", "ghost")),),
                mission_time_hours=100.0,
            )
        },
    )
    path = tmp_path / "broken.json"
    save_project(broken, path)
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "violation[non-positive-rate]" in out
    assert "violation[dangling-reference]" in out


# -- eval ---------------------------------------------------------------------


def test_eval_prints_reference_figures(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLE, "--alternative", "without_measure")
    assert code == 0
    assert "failure rate    10 FIT (1e-08 /h)" in out
    assert "MTBF            1e+08 h" in out
    assert "MDT             24 h" in out
    assert "unavailability  2.4e-07" in out


def test_eval_nodes_table(capsys):
    code, out, _ = run(capsys, "eval", EXAMPLE, "--alternative", "with_redundancy", "--nodes")
    assert code == 0
    assert "contact_a/dangerous_failure" in out
    assert "both_contacts_failed" in out


def test_eval_unknown_alternative_prints_coded_error(capsys):
    code, out, err = run(capsys, "eval", EXAMPLE, "--alternative", "ghost")
    assert code == 1
    assert err.startswith("error[not-found]:")
    assert "ghost" in err


# -- fmeda --------------------------------------------------------------------


def test_fmeda_table_output(capsys):
    code, out, _ = run(capsys, "fmeda", EXAMPLE)
    assert code == 0
    header = out.splitlines()[0]
    assert header.split() == [
        "id", "element", "lambda_d", "[FIT]", "DC", "dd", "[FIT]",
        "du", "[FIT]", "safe", "[FIT]", "SFF",
    ]
    assert "contact_monitored" in out
    assert "0.9" in out


# -- dpn and compare ----------------------------------------------------------


def test_dpn_table_shape(capsys):
    code, out, _ = run(capsys, "dpn", EXAMPLE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("property (weight)")
    assert any(line.startswith("safety (100)") for line in lines)
    assert any(line.startswith("DPN") and "88.91" in line and "110.31" in line for line in lines)
    assert any(line.startswith("expected DPN") and "111.11" in line for line in lines)


def test_compare_ranking_and_rams(capsys):
    code, out, _ = run(capsys, "compare", EXAMPLE)
    assert code == 0
    assert "ranking: with_redundancy > monitoring_1fit > without_measure" in out
    assert "meets expected acceptance: with_redundancy" in out
    assert "without_measure top event" in out


def test_compare_csv_matches_library_export(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run(capsys, "compare", EXAMPLE, "--csv", str(target))
    assert code == 0
    expected = export_results_csv(project_comparison(load_project(EXAMPLE)))
    assert target.read_bytes() == expected.encode("utf-8")


# -- simulate -----------------------------------------------------------------


@pytest.fixture()
def scaled_project(tmp_path):
    """A project whose rates are large enough to simulate quickly."""
    project = Project(
        name="scaled",
        properties=(DependabilityProperty("safety", 1.0),),
        alternatives=(Alternative(id="fast", name="fast", tree_id="t"),),
        fault_trees={
            "t": FaultTreeModel(
                top="e",
                basic_events=(BasicEvent(id="e", failure_rate_fit=1e6, mdt_hours=10.0),),
                mission_time_hours=1000.0,
            )
        },
    )
    path = tmp_path / "scaled.json"
    save_project(project, path)
    return str(path)


def test_simulate_passes_on_consistent_tree(capsys, scaled_project):
    code, out, _ = run(
        capsys, "simulate", scaled_project, "--alternative", "fast",
        "--horizon", "1e7", "--seed", "7",
    )
    assert code == 0
    assert "within 3 sigma" in out


def test_simulate_fails_on_degenerate_horizon(capsys, scaled_project):
    code, out, _ = run(
        capsys, "simulate", scaled_project, "--alternative", "fast",
        "--horizon", "0.001", "--seed", "7",
    )
    assert code == 1
    assert "OUTSIDE" in out


# -- error envelope and usage -------------------------------------------------


def test_missing_file_is_io_error(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/path.json")
    assert code == 1
    assert err.startswith("error[io]:")


def test_bad_json_is_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1
    assert err.startswith("error[parse]:")


def test_bad_version_is_version_error(capsys, tmp_path):
    doc = json.loads(dumps_project(Project(name="x")))
    doc["schema_version"] = "9"
    path = tmp_path / "v9.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1
    assert err.startswith("error[version]:")


def test_no_arguments_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


# -- serve port selection -----------------------------------------------------


def _capture_serve(monkeypatch, argv, env_port=None):
    captured = {}

    def fake_run(app, host, port, log_level):
        captured["host"] = host
        captured["port"] = port

    if env_port is None:
        monkeypatch.delenv(PORT_ENV_VAR, raising=False)
    else:
        monkeypatch.setenv(PORT_ENV_VAR, env_port)
    monkeypatch.setattr("uvicorn.run", fake_run)
    assert main(argv) == 0
    return captured


def test_serve_default_port(monkeypatch):
    captured = _capture_serve(monkeypatch, ["serve", EXAMPLE])
    assert captured["port"] == DEFAULT_PORT


def test_serve_env_overrides_default(monkeypatch):
    captured = _capture_serve(monkeypatch, ["serve", EXAMPLE], env_port="9001")
    assert captured["port"] == 9001


def test_serve_flag_beats_env(monkeypatch):
    captured = _capture_serve(
        monkeypatch, ["serve", EXAMPLE, "--port", "7777"], env_port="9001"
    )
    assert captured["port"] == 7777
