from __future__ import annotations

import json
from pathlib import Path

from click.testing import CliRunner

from judgment_aggregator.cli.main import app
from judgment_aggregator.corpus import list_fixtures

CORPUS = Path(__file__).resolve().parents[1] / "judgment_aggregator" / "samples" / "corpus"


def invoke(*args: str):
    return CliRunner().invoke(app, list(args))


def invoke_json(*args: str):
    result = invoke(*args, "--format", "json")
    return result, json.loads(result.stdout)


def test_fixtures_list():
    result = invoke("fixtures", "--list")
    assert result.exit_code == 0
    assert result.stdout.split() == list_fixtures()


def test_aggregate_fixture_as_json():
    result, data = invoke_json("aggregate", "running-17", "--rule", "med", "--rule", "ra")
    assert result.exit_code == 0
    assert data["command"] == "aggregate"
    assert [item["winners"] for item in data["results"]] == [["+++++"], ["--+-+"]]


def test_aggregate_profile_file_as_text():
    result = invoke("aggregate", str(CORPUS / "ex1-constrained.profile"), "--rule", "mcc")
    assert result.exit_code == 0
    assert result.stdout.startswith("[mcc]")


def test_aggregate_preference_file():
    result, data = invoke_json(
        "aggregate", str(CORPUS / "pref-incomparable.prefs"), "--rule", "frev"
    )
    assert result.exit_code == 0
    assert data["results"][0]["winners"] == ["++++++"]


def test_aggregate_json_is_stable():
    first = invoke("aggregate", "running-17", "--format", "json")
    second = invoke("aggregate", "running-17", "--format", "json")
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_input_errors_exit_with_two():
    assert invoke("aggregate", "running-17", "--rule", "borda").exit_code == 2
    assert invoke("aggregate", "no-such-fixture").exit_code == 2
    assert invoke("axioms", "--check", "anonymity").exit_code == 2
    assert invoke("compare", "--rules", "mc").exit_code == 2
    assert invoke("aggregate", str(CORPUS / "ex1-constrained.agenda")).exit_code == 2


def test_budget_errors_exit_with_three():
    result = invoke("aggregate", "running-17", "--rule", "mpc", "--mpc-budget", "1")
    assert result.exit_code == 3


def test_axioms_on_fixture_report_known_violation():
    result, data = invoke_json(
        "axioms",
        "--fixture",
        "dgsum-not-mp",
        "--rule",
        "dsum-geodesic",
        "--check",
        "majority-preservation",
    )
    assert result.exit_code == 0
    verdict = data["results"][0]
    assert verdict["status"] == "violated"
    assert verdict["details"]["fixture"] == "dgsum-not-mp"
    assert data["summary"]["by_status"] == {"violated": 1}


def test_sampled_axioms_hold_for_median():
    result, data = invoke_json(
        "axioms", "--rule", "med", "--check", "homogeneity", "--samples", "10", "--seed", "1"
    )
    assert result.exit_code == 0
    assert data["results"][0]["status"] == "holds-on-sample"
    assert data["results"][0]["seed"] == 1


def test_compare_flags_escaping_left_rule():
    inside = invoke(
        "compare", "--rules", "mcc,mc", "--no-corpus", "--samples", "20", "--expect-within"
    )
    assert inside.exit_code == 0
    escaping, data = invoke_json("compare", "--rules", "mc,mcc", "--samples", "1")
    assert escaping.exit_code == 0
    assert data["results"]["left_not_in_right_witness"] is not None
    failing = invoke("compare", "--rules", "mc,mcc", "--samples", "1", "--expect-within")
    assert failing.exit_code == 1


def test_fixtures_command_replays_selected_ids():
    result, data = invoke_json("fixtures", "ex1-constrained", "running-17")
    assert result.exit_code == 0
    assert data["summary"] == {"total": 2, "passed": 2, "failed": 0}
    assert all("seconds" not in item for item in data["results"])


def test_verbose_fixtures_in_text():
    result = invoke("--verbose", "fixtures", "ex1-constrained")
    assert result.exit_code == 0
    assert "PASS ex1-constrained" in result.stdout


def test_bridge_sweep_on_single_voters():
    result, data = invoke_json("bridge", "--alternatives", "3", "--voters", "1")
    assert result.exit_code == 0
    assert data["summary"]["failed"] == 0
    assert all(item["instances"] == 6 for item in data["results"])


def test_bridge_preference_file():
    result, data = invoke_json("bridge", str(CORPUS / "pref-incomparable.prefs"))
    assert result.exit_code == 0
    assert data["results"]["voters"] == 3
    assert len(data["results"]["checks"]) == len(data["results"]["correspondences"])


def test_enumerate_agenda_and_fixture():
    result = invoke("enumerate", str(CORPUS / "ex1-constrained.agenda"))
    assert result.exit_code == 0
    assert "rational sets (4):" in result.stdout
    result, data = invoke_json("enumerate", "running-17")
    assert result.exit_code == 0
    enumeration = data["results"]
    assert enumeration["rational_count"] == 18
    assert enumeration["majority"] == "+++-+"
    assert enumeration["majority_consistent"] is False
    assert enumeration["support"][0] == {"issue": "p & r", "accept": 10, "reject": 7}
    distances = enumeration["distances"]
    assert set(distances) == {"+++++", "++--+", "--+--"}
    assert all(len(row) == 18 for row in distances.values())
    assert distances["+++++"][enumeration["rational_sets"].index("+++++")] == 0


def test_axioms_search_on_preference_profiles():
    result, data = invoke_json(
        "axioms", "--rule", "frev", "--check", "majority-preservation", "--search"
    )
    assert result.exit_code == 0
    assert data["results"][0]["status"] == "violated"


def test_output_file_and_saved_report(tmp_path):
    config_path = tmp_path / "config.yaml"
    config_path.write_text(
        f"reporting:\n  output_directory: {tmp_path / 'saved'}\n", encoding="utf-8"
    )
    output = tmp_path / "out" / "report.json"
    result = invoke(
        "aggregate",
        "running-17",
        "--rule",
        "med",
        "--format",
        "json",
        "--output",
        str(output),
        "--config",
        str(config_path),
        "--save",
    )
    assert result.exit_code == 0
    assert f"Report written to {output}" in result.stdout
    assert json.loads(output.read_text(encoding="utf-8"))["results"][0]["rule"] == "med"
    assert (tmp_path / "saved" / "aggregate-report.json").read_text(
        encoding="utf-8"
    ) == output.read_text(encoding="utf-8")


def test_invalid_configuration_exits_with_two(tmp_path):
    config_path = tmp_path / "config.yaml"
    config_path.write_text("budgets:\n  max_widgets: 3\n", encoding="utf-8")
    result = invoke("aggregate", "running-17", "--config", str(config_path))
    assert result.exit_code == 2
