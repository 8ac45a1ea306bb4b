import json
import os
import subprocess

import pytest

import dumont


def test_expand_matches_hand_derivation():
    levels = dumont.expand("schett", "D", "x", 2)
    assert levels[0] == "x"
    assert levels[1] == "y*z"
    assert levels[2] == "x*y^2 + x*z^2"


def test_triangle_t4_matches_published_table():
    t = dumont.triangle("t", method="both", nmax=4)
    entries = {(n, i, j): v for (n, i, j, v) in t["entries"]}
    assert entries[(4, 1, 1)] == "10"
    assert entries[(4, 2, 0)] == "1"
    assert entries[(3, 0, 1)] == "3"
    assert (4, 3, 0) not in entries  # zeros are absent
    assert t["provenance"] == "both"


def test_stats_eulerian_row():
    d = dumont.stats("descents", 4)
    assert d["counts"] == {0: "1", 1: "11", 2: "11", 3: "1"}


def test_stats_bivariate_keys():
    d = dumont.stats("cycle-peaks-xy", 3)
    assert sum(int(v) for v in d["counts"].values()) == 6


def test_series_sn_third_coefficient():
    s = dumont.series("sn", order=5, ring="classical")
    assert s["coeffs"][1] == "1"
    assert s["coeffs"][3] == "-k2 - 1"


def test_verify_single_case():
    reports = dumont.verify("mainthm02.i", nmax=5)
    assert len(reports) == 1
    assert reports[0]["status"] == "pass"


def test_verify_ids_cover_the_catalog():
    ids = dumont.verify_ids()
    assert "conjecture" in ids
    assert "th_TT" in ids
    assert len(ids) == 46


CLI = os.environ.get("DUMONT_CLI")


@pytest.mark.skipif(CLI is None, reason="DUMONT_CLI not set")
def test_cli_triangle_json_schema():
    out = subprocess.run(
        [CLI, "triangle", "--name", "r", "--method", "both", "--nmax", "3", "--format", "json"],
        capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    assert doc["name"] == "r"
    schema_path = os.path.join(os.path.dirname(__file__), "..", "..", "schemas",
                               "triangle.schema.json")
    jsonschema = pytest.importorskip("jsonschema")
    with open(schema_path) as fh:
        jsonschema.validate(doc, json.load(fh))
    entries = {(n, i, j): v for (n, i, j, v) in map(tuple, doc["entries"])}
    assert entries[(3, 0, 1)] == "12"


@pytest.mark.skipif(CLI is None, reason="DUMONT_CLI not set")
def test_cli_verify_exit_code_and_schema():
    out = subprocess.run(
        [CLI, "verify", "--id", "conjecture", "--nmax", "6", "--format", "json"],
        capture_output=True, text=True)
    assert out.returncode == 0
    docs = json.loads(out.stdout)
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = os.path.join(os.path.dirname(__file__), "..", "..", "schemas",
                               "verify.schema.json")
    with open(schema_path) as fh:
        jsonschema.validate(docs, json.load(fh))
    assert docs[0]["status"] == "pass"


@pytest.mark.skipif(CLI is None, reason="DUMONT_CLI not set")
def test_cli_stats_schema():
    out = subprocess.run(
        [CLI, "stats", "--statistic", "updown-runs", "--n", "5", "--format", "json"],
        capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = os.path.join(os.path.dirname(__file__), "..", "..", "schemas",
                               "stats.schema.json")
    with open(schema_path) as fh:
        jsonschema.validate(doc, json.load(fh))
    assert sum(int(v) for v in doc["counts"].values()) == 120


@pytest.mark.skipif(CLI is None, reason="DUMONT_CLI not set")
def test_cli_series_schema():
    out = subprocess.run(
        [CLI, "series", "--function", "cn", "--order", "6", "--ring", "two-param",
         "--format", "json"],
        capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = os.path.join(os.path.dirname(__file__), "..", "..", "schemas",
                               "series.schema.json")
    with open(schema_path) as fh:
        jsonschema.validate(doc, json.load(fh))
    assert doc["coeffs"][2] == "a2"


@pytest.mark.skipif(CLI is None, reason="DUMONT_CLI not set")
def test_cli_usage_error_is_exit_2():
    out = subprocess.run([CLI, "frobnicate"], capture_output=True, text=True)
    assert out.returncode == 2
