import json
import subprocess
import sys

import pytest

from trigonal5.cli import execute


def run(*argv):
    return execute(list(argv))


def test_lemma_pretty():
    code, out, _ = run("lemma", "--id", "2.4", "--format", "pretty")
    assert code == 0 and out == "L^-4 t^8 + L^-3 t^6\n"


def test_pipeline_json_t5():
    code, out, _ = run("pipeline", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"command", "inputs", "results", "verdicts", "citations"}
    terms = [(t["weight"], t["degree"], t["mult"]) for t in doc["results"]["T5"]["terms"]]
    assert terms == [(0, 0, 1), (-1, 2, 1), (-3, 5, 1), (-11, 12, 1)]
    assert doc["results"]["T5"]["pretty"] == "L^11 t^12 + L^3 t^5 + L t^2 + 1"


def test_appendix_58():
    code, out, _ = run("appendix", "--config", "58", "--format", "pretty")
    assert code == 0 and out.strip() == "0"


def test_appendix_55_reports_nonzero():
    code, _, _ = run("appendix", "--config", "55")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ("lemma", "--id", "9.9"),
    ("column", "--id", "Z"),
    ("table", "--id", "7"),
    ("appendix", "--config", "99"),
    ("explain", "--id", "column:Q"),
    ("verify", "--id", "Ztilde", "--q", "2"),
    ("verify", "--q", "4"),
])
def test_unknown_ids_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and "valid" in err or "not defined" in err


def test_registry_listed():
    _, _, err = run("lemma", "--id", "nope")
    assert "2.4" in err and "ztilde" in err


def test_argparse_usage_error():
    code, _, _ = run("frobnicate")
    assert code == 2


@pytest.mark.parametrize("fmt", ["json", "markdown", "pretty"])
@pytest.mark.parametrize("argv", [("column", "--id", "M"), ("table", "--id", "3"), ("explain", "--id", "lemma:2.5")])
def test_output_is_deterministic(fmt, argv):
    a = run(*argv, "--format", fmt)
    b = run(*argv, "--format", fmt)
    assert a == b and a[0] == 0


def test_verify_single():
    code, out, _ = run("verify", "--id", "M05", "--qs", "5,7", "--format", "json")
    rows = json.loads(out)["results"]
    assert code == 0 and [r["count"] for r in rows] == [6, 20]


def test_explain_pipeline_markdown():
    code, out, _ = run("explain", "--id", "pipeline", "--format", "markdown")
    assert code == 0 and "Alexander duality" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trigonal5", "lemma", "--id", "2.3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "L^-3 t^6"
