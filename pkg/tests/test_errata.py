import json

import pytest

from gsawtrap import errata


@pytest.fixture(scope="module")
def report():
    # light simulation: the variance gap is ~40 units, visible at any size
    return errata.resolve_all(n_max=12, walks=50_000)


def test_findings_metadata():
    ids = [f.id for f in errata.FINDINGS]
    assert ids == ["a", "b", "c", "d", "e", "f"]
    assert len({f.slug for f in errata.FINDINGS}) == len(ids)
    for f in errata.FINDINGS:
        assert f.claim != f.validated


def test_report_shape(report):
    assert report["schemaVersion"] == 1
    assert report["oracleHorizon"] == 12
    assert [f["id"] for f in report["findings"]] == ["a", "b", "c", "d", "e", "f"]
    for f in report["findings"]:
        assert f["verdict"] == "validated form confirmed"
    json.dumps(report)  # must be serialisable as-is


def test_every_claim_refuted_and_every_validated_confirmed(report):
    by_id = {f["id"]: f["evidence"] for f in report["findings"]}

    a = by_id["a"]
    assert a["validatedMatchesOracle"]
    assert a["claimFirstMismatch"] == {
        "length": 8, "width": 3, "claim": "-1/96", "oracle": "0"}

    b = by_id["b"]
    assert b["claimValueAtOne"] == "-1"
    assert b["claimEqualsNegatedValidated"]
    assert b["validatedMatchesOracle"]
    assert b["claimFirstMismatch"]["n"] == 4

    c = by_id["c"]
    assert c["validatedMatchesOracle"]
    assert c["claimFirstMismatch"] == {"n": 5, "claim": "23/486", "oracle": "13/243"}

    d = by_id["d"]
    assert d["statementReducesAtUnity"]
    for key in ("C=1", "C=2"):
        assert d[key]["validatedMatchesOracle"]
        assert d[key]["claimFirstMismatch"]["n"] == 5

    e = by_id["e"]
    assert e["jointMatchesOracle"]
    assert e["exactMean"] == "28/3"
    assert e["exactVariance"] == "380/9"
    assert abs(e["simulation"]["zValidated"]) < 5
    assert abs(e["simulation"]["zClaim"]) > 20

    f = by_id["f"]
    assert f["validatedMatchesOracle"]
    assert f["claimFirstMismatch"]["n"] == 8
    assert f["claimPartialSumTo200"] > 1
    assert f["validatedPartialSumTo200"] < 1


def test_resolve_validation():
    with pytest.raises(ValueError):
        errata.resolve("z")
    with pytest.raises(ValueError):
        errata.resolve("a", n_max=5)
