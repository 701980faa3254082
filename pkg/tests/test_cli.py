import json

import pytest

import commands.self_test
from algebra.errors import SpecValidationError
from commands.base_command import Report, options_for
from config import config
from database.models import RingSpec
from database.spec_store import SpecStore
from main import build_parser, main

ATIYAH1 = {
    "name": "atiyah1",
    "variables": [{"name": "x1", "weight": 1}, {"name": "y1", "weight": -1}],
}


@pytest.fixture(autouse=True)
def no_timing(monkeypatch):
    monkeypatch.setattr(config, "REPORT_TIMING", False)


def test_wall_cross_text(capsys):
    assert main(["wall-cross", "atiyah2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("qflop wall-cross atiyah2")
    assert "✓ calabi_yau" in out
    assert "budget: steps" in out


def test_property_p_fails_on_node(capsys):
    assert main(["property-p", "node", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    verdict = document["verdicts"]["property_P"]
    assert verdict["holds"] is False
    assert verdict["detail"].startswith("fails_P")
    assert document["schema"] == 1
    assert "timing" not in document


def test_json_report_round_trip(capsys):
    assert main(["loci", "node", "--format", "json"]) == 0
    text = capsys.readouterr().out
    report = Report.from_json(text)
    assert report.command == "loci"
    assert report.to_json() == text.strip()


def test_reports_are_deterministic(capsys):
    main(["present-q", "mukai2", "--format", "json"])
    first = capsys.readouterr().out
    main(["present-q", "mukai2", "--format", "json"])
    assert capsys.readouterr().out == first


def test_budget_exit_code(capsys):
    assert main(["present-q", "node", "--budget-steps", "1"]) == 2
    assert "✗" in capsys.readouterr().err


def test_fm_rejects_ring_with_relations(capsys):
    assert main(["fm", "node"]) == 1
    assert "relations" in capsys.readouterr().err


def test_unknown_command():
    assert main(["frobnicate", "node"]) == 1


def test_missing_spec():
    assert main(["loci"]) == 1
    assert main(["loci", "no_such_ring"]) == 1


def test_fm_with_flags(capsys):
    assert main(["fm", "atiyah2", "--twist", "-1", "--window", "-4:4", "--monomial-cap", "4",
                 "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert "Phi(R(-1))" in document["verdicts"]
    assert document["verdicts"]["window_prediction"]["holds"]
    assert document["tables"]["R(-1)"]["twist"] == -1


def test_window_flag_parsing():
    parser = build_parser()
    args = parser.parse_args(["fm", "atiyah2", "--window=-3:2"])
    assert args.window == (-3, 2)
    assert main(["fm", "atiyah2", "--window", "3:-3"]) == 1


def test_spec_file_and_save(tmp_path, monkeypatch, capsys):
    path = tmp_path / "atiyah1.json"
    path.write_text(json.dumps(ATIYAH1), encoding="utf-8")
    registry_path = tmp_path / "registry.json"
    registry_path.write_text(json.dumps({"specs": [], "reports": []}), encoding="utf-8")
    reports_path = tmp_path / "reports.json"
    monkeypatch.setattr(config, "REGISTRY_PATH", str(registry_path))
    monkeypatch.setattr(config, "REPORTS_PATH", str(reports_path))
    assert main(["wall-cross", str(path), "--save"]) == 0
    assert "✓ calabi_yau" in capsys.readouterr().out
    reports = SpecStore(str(reports_path)).reports("atiyah1")
    assert len(reports) == 1
    assert reports[0]["report"]["command"] == "wall-cross"
    assert json.loads(registry_path.read_text(encoding="utf-8")) == {"specs": [], "reports": []}


@pytest.mark.parametrize("window", ["3:-3", [3, -3]])
def test_spec_window_must_not_be_empty(window):
    spec = RingSpec.from_dict({**ATIYAH1, "options": {"degree_window": window}})
    with pytest.raises(SpecValidationError):
        options_for(spec)


def test_spec_window_option():
    spec = RingSpec.from_dict({**ATIYAH1, "options": {"degree_window": [-2, 3]}})
    assert options_for(spec).degree_window == (-2, 3)


def test_self_test_on_one_entry(monkeypatch, capsys):
    monkeypatch.setattr(commands.self_test, "registry", lambda: [RingSpec.from_dict(ATIYAH1)])
    assert main(["self-test", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["verdicts"]["atiyah1/wall-cross"]["holds"]
    assert document["verdicts"]["atiyah1/present-q"]["holds"]
    assert "atiyah1/sod-check" not in document["verdicts"]
    assert document["tables"]["verdicts"]["atiyah1/wall-cross"] == {"calabi_yau": True}


def test_text_marks_failures():
    report = Report("demo", "ring")
    report.verdicts["good"] = {"holds": True, "detail": "fine"}
    report.verdicts["bad"] = {"holds": False, "detail": "broken"}
    report.witnesses["bad"] = ["w1"]
    lines = report.to_text().splitlines()
    assert lines[0] == "qflop demo ring"
    assert "✗ bad: broken" in lines
    assert "    witness: w1" in lines
    assert "✓ good: fine" in lines
