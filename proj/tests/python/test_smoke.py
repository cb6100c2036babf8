import json

import pytest

import avgbi


def test_fixture_corpus():
    names = avgbi.fixtures()
    assert "FIX-A3" in names
    assert len(names) == 8
    doc = avgbi.fixture("FIX-A3")
    assert doc["basis"] == ["e1", "e2", "e3"]


def test_check_pass_and_fail():
    rep = avgbi.check("FIX-A3", "averaging-algebra")
    assert rep["verdict"] == "pass"
    assert {a["id"] for a in rep["axioms"]} == {"ASSOC-1", "AVG-1a", "AVG-1b"}

    rep = avgbi.check("FIX-BAD311i", "averaging-coalgebra")
    assert rep["verdict"] == "fail"
    bad = next(a for a in rep["axioms"] if a["id"] == "AVGCO-1a")
    assert bad["pass"] is False
    assert bad["witness"]["where"] == ["e1"]


def test_construct_chain():
    cob = avgbi.construct("coboundary", "FIX-A3")
    assert ["e1", "e2", "e3", -1] in cob["comul"]
    assert avgbi.check(cob, "averaging-asi")["verdict"] == "pass"

    dbl = avgbi.construct("double", cob)
    assert len(dbl["basis"]) == 6
    assert avgbi.check(dbl, "classify")["verdict"] == "pass"

    diff = avgbi.paper_diff(json.dumps(dbl), "FIX-DOUBLE6")
    assert diff["paper_diff"]["mul"]["mismatches"] == []
    assert diff["paper_diff"]["comul"]["missing"] == []


def test_validation_error_carries_report():
    with pytest.raises(avgbi.ValidationError) as err:
        avgbi.construct("induce-perm-bialgebra", "FIX-BIA2")
    assert "COMPA-1" in str(err.value)


def test_search_partition_invariance():
    hits1 = avgbi.search("FIX-2DIM")
    hits3 = avgbi.search("FIX-2DIM", partitions=3)
    assert hits1 == hits3
    alphas = [hit["alpha"] for hit in hits1]
    assert [["e2", "e2", 1]] in alphas  # case (b)


def test_parse_error():
    with pytest.raises(avgbi.ParseError):
        avgbi.canonicalize("{bad json")


def test_cli_entry_point(capfd):
    assert avgbi.cli(["check", "FIX-A3", "--as", "ybe"]) == 0
    assert avgbi.cli(["check", "FIX-PERM3", "--as", "averaging-algebra"]) == 1
    capfd.readouterr()
