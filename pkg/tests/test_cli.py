"""Command line interface: exit codes, JSON output, deterministic reruns."""

import json

import pytest

from loopforge.cli import _parse_params, main
from loopforge.reports import UsageError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_lists_all_entries(capsys):
    code, out, _ = _run(capsys, "catalog")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 13
    assert doc["entries"][0]["id"] == "C1"


def test_unknown_entry_is_a_usage_error(capsys):
    code, out, err = _run(capsys, "verify", "--entry", "UNKNOWN")
    assert code == 2
    assert not out
    assert "UNKNOWN" in json.loads(err)["error"]


def test_verify_not_global_entry_uses_suite_hook(capsys):
    code, out, _ = _run(capsys, "verify", "--entry", "DIAG", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert doc["matched"]
    assert doc["suite_hook"]["id"] == "prop8"


def test_suite_only_filter(capsys):
    code, out, _ = _run(capsys, "suite", "--only", "prop8")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_confirmed"]
    assert [e["id"] for e in doc["evidence"]] == ["prop8"]
    assert _run(capsys, "suite", "--only", "prop99")[0] == 2


def test_malformed_params(capsys):
    assert _run(capsys, "verify", "--entry", "C1", "--param", "a")[0] == 2
    assert _run(capsys, "verify", "--entry", "C1", "--param", "a=x")[0] == 2
    with pytest.raises(UsageError):
        _parse_params("broken")
    assert _parse_params("a=1,b=-0.5") == {"a": 1.0, "b": -0.5}


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def test_deterministic_output_files(tmp_path, capsys):
    paths = [tmp_path / "one.json", tmp_path / "two.json"]
    for path in paths:
        code = main(["expcheck", "--samples", "20", "--no-timestamp",
                     "--out", str(path)])
        capsys.readouterr()
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_expcheck_report_shape(capsys):
    code, out, _ = _run(capsys, "expcheck", "--samples", "10", "--no-timestamp")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["algebras"]) == {"sl2R", "sl2C", "su2",
                                    "sl2:R2", "sl2:R3", "su2:R3"}
    assert doc["passed"]
