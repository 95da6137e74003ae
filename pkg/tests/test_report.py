import json
import subprocess
import sys
from pathlib import Path

import pytest

from fintriple import cli, report
from fintriple.config import parse_config_file

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture(scope="module")
def thm2_report():
    return report.run_all(parse_config_file(CONFIG_DIR / "thm2.cfg"))


@pytest.fixture(scope="module")
def original_cc_report():
    return report.run_all(parse_config_file(CONFIG_DIR / "original_cc.cfg"))


@pytest.fixture(scope="module")
def pati_salam_report():
    return report.run_all(parse_config_file(CONFIG_DIR / "pati_salam.cfg"))


def _statuses(rep):
    return {rec.name: rec.status for rec in rep.checks}


def test_thm2_statuses(thm2_report):
    s = _statuses(thm2_report)
    assert s["property_m"] == "pass"
    assert s["irreducibility"] == "pass"
    assert s["gamma_in_clifford_odd"] == "pass"
    assert s["zero_chain_grading"] == "fail"
    assert s["grading_axioms"] == "skipped"


def test_original_cc_statuses(original_cc_report):
    s = _statuses(original_cc_report)
    assert s["property_m"] == "fail"
    assert s["property_m_with_grading"] == "fail"
    assert s["irreducibility"] == "fail"
    rec = original_cc_report.check("irreducibility")
    assert "reducing projection" in rec.details


def test_pati_salam_statuses(pati_salam_report):
    s = _statuses(pati_salam_report)
    assert s["first_order"] == "fail"
    assert s["zero_chain_grading"] == "pass"
    assert s["irreducibility"] == "pass"
    assert s["property_m"] == "skipped"
    assert s["dirac_decomposition"] == "skipped"
    assert pati_salam_report.check("first_order").residuals["violation"] >= 0.1


def test_every_plan_entry_present(thm2_report):
    names = [rec.name for rec in thm2_report.checks]
    assert names == list(report.RUN_PLAN)
    assert len(set(names)) == len(names)


def test_residuals_finite(thm2_report, original_cc_report, pati_salam_report):
    for rep in (thm2_report, original_cc_report, pati_salam_report):
        for rec in rep.checks:
            for value in rec.residuals.values():
                assert value == value and abs(value) < float("inf")


def test_golden_reports(thm2_report, original_cc_report, pati_salam_report):
    for rep, name in ((thm2_report, "thm2"),
                      (original_cc_report, "original_cc"),
                      (pati_salam_report, "pati_salam")):
        golden = (CONFIG_DIR / f"{name}.golden.json").read_text()
        assert report.render_json(rep, normalize_timing=True) == golden


def test_expectation_manifests(thm2_report, original_cc_report, pati_salam_report):
    for rep, name in ((thm2_report, "thm2"),
                      (original_cc_report, "original_cc"),
                      (pati_salam_report, "pati_salam")):
        manifest = json.loads((CONFIG_DIR / f"{name}.expect.json").read_text())
        assert report.compare_with_expectations(rep, manifest["checks"]) == []


def test_report_deterministic(thm2_report):
    again = report.run_all(parse_config_file(CONFIG_DIR / "thm2.cfg"))
    assert (report.render_json(again, normalize_timing=True)
            == report.render_json(thm2_report, normalize_timing=True))


def test_text_rendering(thm2_report):
    text = report.render_text(thm2_report)
    assert "property_m" in text
    assert "PASS" in text
    assert "tolerance" in text


def test_degenerate_config_matches_manifest():
    rep = report.run_all(parse_config_file(CONFIG_DIR / "degenerate.cfg"))
    manifest = json.loads((CONFIG_DIR / "degenerate.expect.json").read_text())
    assert report.compare_with_expectations(rep, manifest["checks"]) == []
    assert rep.check("unitalization").dims == {"span": 14, "unitalized": 15}
    assert rep.check("property_m").dims["commutant_odd"] == 19
    assert rep.check("property_m_with_grading").dims["commutant_even"] == 15


def test_cli_verify_expect_success(tmp_path):
    out = tmp_path / "report.json"
    code = cli.main([
        "verify", str(CONFIG_DIR / "pati_salam.cfg"),
        "--report", "json",
        "--expect", str(CONFIG_DIR / "pati_salam.expect.json"),
        "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["version"]
    assert {c["name"] for c in payload["checks"]} == set(report.RUN_PLAN)


def test_cli_verify_expect_mismatch(tmp_path):
    bad = tmp_path / "expect.json"
    manifest = json.loads((CONFIG_DIR / "pati_salam.expect.json").read_text())
    manifest["checks"]["first_order"] = "pass"
    bad.write_text(json.dumps(manifest))
    code = cli.main([
        "verify", str(CONFIG_DIR / "pati_salam.cfg"),
        "--report", "json", "--expect", str(bad), "--out", str(tmp_path / "r.json"),
    ])
    assert code == 1


def test_cli_config_error(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("[algebra]\nname = Q_F\n")
    assert cli.main(["axioms", str(bad)]) == 2


def test_cli_axioms_and_commutant(capsys):
    assert cli.main(["axioms", str(CONFIG_DIR / "original_cc.cfg")]) == 0
    text = capsys.readouterr().out
    assert "ko_dimension" in text and "6" in text
    assert cli.main(["commutant", str(CONFIG_DIR / "original_cc.cfg")]) == 0
    text = capsys.readouterr().out
    assert "112" in text and "4" in text


def test_cli_clifford(capsys):
    assert cli.main(["clifford", str(CONFIG_DIR / "thm2.cfg")]) == 0
    text = capsys.readouterr().out
    assert "112" in text and "15" in text


def test_cli_tol_override(capsys):
    assert cli.main(["commutant", str(CONFIG_DIR / "original_cc.cfg"),
                     "--tol", "1e-8"]) == 0
    assert "112" in capsys.readouterr().out


def test_cli_subprocess_smoke():
    result = subprocess.run(
        [sys.executable, "-m", "fintriple.cli", "axioms",
         str(CONFIG_DIR / "thm1.cfg")],
        capture_output=True, text=True, check=True)
    assert "first_order" in result.stdout
