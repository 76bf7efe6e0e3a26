"""Fixture harness and command line interface."""

import json
import subprocess
import sys

import pytest

from oraclegames import InputError, cli, harness


def test_every_bundled_fixture_passes():
    names = harness.available_fixtures()
    assert len(names) >= 10
    for name in names:
        report = harness.run_fixture(harness.load_fixture(name))
        assert harness.report_passed(report), harness.report_lines(report)
        assert report["fixture"] == name
        for claim in report["claims"]:
            assert claim["provenance"] in {"paper", "derived", "trivial"}
            assert claim["pass"] is True


def test_load_fixture_by_path(tmp_path):
    source = harness.load_fixture("one-dm")
    path = tmp_path / "copy.json"
    path.write_text(json.dumps(source))
    assert harness.load_fixture(str(path))["name"] == source["name"]
    with pytest.raises(InputError):
        harness.load_fixture("no-such-fixture")


def test_expect_error_claims():
    # A single-decision-maker structure cannot host the two-stage game.
    data = harness.load_fixture("one-dm")
    data["claims"] = [
        {
            "id": "two_stage_needs_two_players",
            "op": "two_stage_truthful_aggregate",
            "args": {"signaling": "tau2"},
            "expect_error": "domain",
            "provenance": "trivial",
        }
    ]
    report = harness.run_fixture(data)
    assert harness.report_passed(report), harness.report_lines(report)


def test_failing_claim_is_reported_not_raised():
    data = harness.load_fixture("one-dm")
    claim = next(c for c in data["claims"] if "expected" in c)
    claim["expected"] = {"deliberately": "wrong"}
    report = harness.run_fixture(data)
    assert not harness.report_passed(report)
    lines = harness.report_lines(report)
    assert any(line.startswith("FAIL") for line in lines)
    assert any(line.startswith("PASS") for line in lines)


def test_unknown_op_and_missing_fields_are_input_errors():
    data = harness.load_fixture("one-dm")
    bad = dict(data)
    bad["claims"] = [
        {"id": "x", "op": "no-such-op", "expected": 1, "provenance": "trivial"}
    ]
    with pytest.raises(InputError):
        harness.run_fixture(bad)
    bad["claims"] = [{"id": "x", "op": "ckc_count", "provenance": "trivial"}]
    with pytest.raises(InputError):
        harness.run_fixture(bad)


def test_cli_verify_all_and_exit_codes(capsys):
    assert cli.main(["verify", "--all"]) == 0
    out = capsys.readouterr().out
    assert "claims passed" in out

    assert cli.main(["verify", "rock-concert", "one-dm"]) == 0
    capsys.readouterr()

    assert cli.main(["verify", "does-not-exist"]) == 2
    capsys.readouterr()

    assert cli.main(["verify"]) == 2  # no fixtures named, no --all
    capsys.readouterr()

    assert cli.main(["fixtures"]) == 0
    out = capsys.readouterr().out
    assert "rock-concert" in out


def test_cli_verify_parallel_matches_serial(capsys):
    assert cli.main(["verify", "--all", "--parallel"]) == 0
    capsys.readouterr()


def test_cli_report_json_shape(capsys):
    assert cli.main(["report", "one-dm", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["fixture"] == "one-dm"
    assert {"id", "op", "pass", "provenance", "expected", "actual"} <= set(
        payload["claims"][0]
    )
    assert cli.main(["report", "one-dm", "rock-concert", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert isinstance(payload, list) and len(payload) == 2
    assert cli.main(["report", "one-dm", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS")


def test_cli_detects_claim_failures(tmp_path, capsys):
    data = harness.load_fixture("one-dm")
    claim = next(c for c in data["claims"] if "expected" in c)
    claim["expected"] = {"deliberately": "wrong"}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    assert cli.main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def _write_structure(tmp_path, fixture_name):
    fixture = harness.load_fixture(fixture_name)
    path = tmp_path / "structure.json"
    path.write_text(json.dumps(fixture["structure"]))
    return fixture, path


def test_cli_ckc_verb(tmp_path, capsys):
    _, spath = _write_structure(tmp_path, "rock-concert")
    assert cli.main(["ckc", str(spath)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert "components" in out


def test_cli_relation_verbs(tmp_path, capsys):
    _, spath = _write_structure(tmp_path, "rock-concert")
    assert cli.main(["imi", str(spath), "F1", "F2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["holds"] is True and out["witness"] is None

    assert cli.main(["imi", str(spath), "F2", "F1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["holds"] is False and out["witness"] is not None

    assert cli.main(["dominates", "--mode", "unique-ckc", str(spath), "Fall", "F1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["holds"] is True

    assert cli.main(["dominates", "--mode", "deterministic", str(spath), "F1", "F2"]) == 0
    capsys.readouterr()

    assert cli.main(["common-objective", str(spath), "F1", "F2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["relation"] == "common-objective"

    assert cli.main(["imi", str(spath), "F1", "nope"]) == 2
    capsys.readouterr()


def test_cli_post_and_matrix_verbs(tmp_path, capsys):
    fixture, spath = _write_structure(tmp_path, "witness-two-stage")
    tpath = tmp_path / "tau.json"
    tpath.write_text(json.dumps(fixture["signalings"]["tau2"]))
    assert cli.main(["post", str(spath), str(tpath)]) == 0
    out = capsys.readouterr().out
    assert "2/5" in out
    assert cli.main(["matrix", str(spath), str(tpath), "--player", "P1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert "entries" in out and "columns" in out
    assert cli.main(["matrix", str(spath), str(tpath), "--player", "nobody"]) == 2
    capsys.readouterr()


def test_cli_garble_check_verb(tmp_path, capsys):
    base = {
        "states": ["w1", "w2"],
        "columns": ["a", "b"],
        "entries": {"w1": ["1/2", "1/2"], "w2": ["0", "1"]},
    }
    target = {
        "states": ["w1", "w2"],
        "columns": ["c"],
        "entries": {"w1": ["1"], "w2": ["1"]},
    }
    bpath = tmp_path / "base.json"
    bpath.write_text(json.dumps(base))
    tpath = tmp_path / "target.json"
    tpath.write_text(json.dumps(target))
    assert cli.main(["garble-check", str(bpath), str(tpath)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exists"] is True and "garbling" in out
    # The reverse direction would have to manufacture information.
    assert cli.main(["garble-check", str(tpath), str(bpath)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exists"] is False


def test_cli_usage_errors(capsys, tmp_path):
    assert cli.main([]) == 2
    capsys.readouterr()
    assert cli.main(["no-such-verb"]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["ckc", str(bad)]) == 2
    capsys.readouterr()


def test_cli_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "oraclegames.cli", "verify", "--all"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "claims passed" in proc.stdout
