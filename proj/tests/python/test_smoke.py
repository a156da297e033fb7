import math

import pytest

import qmb


def test_zoo_catalog():
    ids = qmb.zoo_ids()
    assert len(ids) >= 12
    assert "d_n" in ids and "ex1_6" in ids
    listing = qmb.list_zoo()
    assert listing["schema"] == "qmb-zoo/1"
    assert len(listing["spaces"]) == len(ids)
    for entry in listing["spaces"]:
        assert entry["notes"]
        assert entry["expected"]["axioms"] == "pass"


def test_space_operations():
    line = qmb.compose("d_n")
    assert line.dist(0, 3.5) == 3.5
    assert line.truncate(1.0).dist(0, 5) == 1.0
    assert line.separating

    sorg = qmb.compose("sorgenfrey_rho_s")
    assert sorg.dist(1, 3) == 2.0
    assert sorg.dist(3, 1) == 1.0
    assert sorg.conjugate().dist(1, 3) == 1.0
    assert sorg.symmetrize().dist(1, 3) == 2.0

    nat = qmb.compose("ex1_6")
    assert nat.dist({"nat": 0}, {"nat": 5}) == 1.0
    assert nat.dist({"nat": 5}, {"nat": 3}) == 32.0

    expr = qmb.compose({"truncate": {"of": "d_n", "cap": 1.0}})
    assert expr.dist(-4, 4) == 1.0
    assert expr.expr["truncate"]["cap"] == 1.0


def test_axiom_check():
    result = qmb.compose("d_n").check_axioms(samples=300, require_separation=True)
    assert result["pass"]
    assert result["triples"] == 300


def test_run_suite_and_determinism():
    config = {"suite": "conjugation", "target": "rho_u", "samples": 300, "seed": 11}
    first = qmb.run_suite(config)
    second = qmb.run_suite(config)
    assert first == second
    assert first["schema"] == "qmb-report/1"
    assert first["verdict"] == "pass"
    assert first["config"]["samples"] == 300
    ids = [check["checkId"] for check in first["perCheck"]]
    assert ids == sorted(ids)


def test_verify_wrapper_and_failure():
    report = qmb.verify("uniform-equivalence", "d_n", second="dplus_n", samples=500)
    assert report["verdict"] == "fail"
    witness = report["perCheck"][0]["witness"]
    assert witness["dTarget"] >= witness["eps"]


def test_config_error():
    with pytest.raises(qmb.ConfigError):
        qmb.run_suite({"suite": "nope"})
    with pytest.raises(qmb.ConfigError):
        qmb.compose("missing_space")
    assert issubclass(qmb.ConfigError, qmb.QmbError)


def test_construct_chi():
    result = qmb.construct_chi("d_n", delta=1.0)
    assert result["schema"] == "qmb-chi/1"
    values = {v["point"]["real"]: v["chi"] for v in result["values"]}
    assert values[0.0] == 0.0
    assert math.isclose(values[1.5], 0.5, abs_tol=1e-12)


def test_oracle_roundtrip():
    text = qmb.random_digraph_text(6, 0.5, 3)
    info = qmb.closure_info(text)
    assert info["size"] == 6
    matrix = info["matrix"]
    for i in range(6):
        assert matrix[i][i] == 0.0
    report = qmb.oracle_cross_check(text, seed=4)
    assert report["verdict"] == "pass"
