import json
import os
import pathlib

import pytest

import burniat

DATA = pathlib.Path(os.environ.get("BURNIAT_TEST_DATA", pathlib.Path(__file__).parent.parent / "data"))


def test_builtin_names():
    names = burniat.builtin_names()
    assert len(names) == 17
    assert names[0] == "S1" and names[-1] == "sicilian"


def test_verify_s6():
    r = burniat.verify("S6")
    assert r["schema"] == "1"
    assert r["mult_chiA"]["value"] == "2"
    assert r["evidence"]["trace_H2var"] == "(43|3 -5 3|3 -5 3|-5)"
    assert r["condition3"]["status"] == "verified"


def test_verify_all_routes():
    routes = {r["family"]: r["route"] for r in burniat.verify_all()}
    assert routes["S1"] == "part1"
    assert routes["S2"] == "part1"
    assert routes["S11"] == "part2"
    assert routes["sicilian"] == "sicilian"


def test_custom_scenario_matches_builtin():
    custom = burniat.check((DATA / "custom_s5.json").read_text())
    builtin = burniat.verify("S5")
    assert custom["evidence"]["trace_H2var"] == builtin["evidence"]["trace_H2var"]
    assert custom["evidence"]["var_Y"] == builtin["evidence"]["var_Y"]


def test_bad_scenarios_raise():
    with pytest.raises(ValueError, match="fixed points on A"):
        burniat.check((DATA / "corrupted_fixed_curve.json").read_text())
    with pytest.raises(ValueError):
        burniat.check("{")


def test_tables():
    x = burniat.table("hodge-x")
    assert (x["b1"], x["b2"], x["var"], x["fix"], x["euler"]) == (6, 58, [7, 29, 7], [3, 9, 3], 48)
    md = burniat.table("1", "md")
    assert "ι₁ι₃ι₁₃" in md
    assert burniat.diff("1")["summary"]["mismatch"] == 0
    assert burniat.diff("3")["summary"]["unwitnessed"] == 0


def test_numeric():
    r = burniat.numeric(tau1="0.3+1.2i", tau3="2i", seed=4)
    assert r["passed"]
    assert r["checks"]["sign-table"][0]


def test_cli_exit_codes():
    code, out, _ = burniat.run_cli(["tables", "--which", "3", "--diff-paper", "--format", "json"])
    assert code == 1
    assert json.loads(out)["diff"]["summary"]["mismatch"] > 0
    assert burniat.run_cli(["tables", "--which", "1", "--diff-paper"])[0] == 0
    assert burniat.run_cli(["check", str(DATA / "corrupted_fixed_curve.json")])[0] == 2
