import pytest

import sptforge


def test_b2_table():
    assert sptforge.spt_table("B2", 4) == [0, 0, 1, 2, 5]


def test_families():
    assert sptforge.families() == ["B2", "F3", "G4", "AG4", "J1", "J2", "J3"]


def test_classic_spt_and_oracle():
    assert sptforge.classic_spt(4) == 10
    for n in range(1, 13):
        assert sptforge.spt_oracle("F3", n) == sptforge.spt_table("F3", 12)[n]


def test_big_values_are_python_ints():
    v = sptforge.spt_table("J1", 1000)[1000]
    assert isinstance(v, int)
    assert v > 2**64


def test_verify_case():
    r = sptforge.verify("dissect_F3_3")
    assert r["status"] == "verified"
    assert r["order"] == 240
    assert r["first_mismatch"] is None


def test_verify_unknown_id():
    with pytest.raises(IndexError):
        sptforge.verify("nonexistent")


def test_unknown_family():
    with pytest.raises(ValueError):
        sptforge.spt_table("Q7", 4)


def test_verify_all_filter():
    reports = sptforge.verify_all("dissect_*", parallelism=2)
    assert [r["id"] for r in reports] == sorted(r["id"] for r in reports)
    assert len(reports) == 7
    assert sptforge.verify_all("no_such_*") == []


def test_congruence():
    r = sptforge.check_congruence("F3", 7, 4, 300)
    assert r["holds"]
    assert r["failure"] is None
    assert len(sptforge.known_congruences()) == 15


def test_crank_classes_sum_to_spt():
    for row in sptforge.crank_table("B2", 5, 20):
        assert sum(row["classes"]) == row["spt"]


def test_cli_json_round_trip():
    import json

    code, out, err = sptforge.run_cli(["verify", "--id", "crank_*", "--format", "json", "--no-timing"])
    assert code == 0, err
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_cli_usage_error():
    code, _, err = sptforge.run_cli(["spt", "--family", "B2"])
    assert code == 2
    assert "max" in err
