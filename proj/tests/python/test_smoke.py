import pytest

import srefl


def test_group_report():
    g = srefl.group("C3")
    assert g["order"] == 3
    assert g["conductor"] == 3
    assert len(g["classes"]) == 3
    assert len(g["character_table"]) == 3

    d = srefl.group("D3")
    assert d["order"] == 12
    assert len(d["irreps"]) == 6


def test_mckay_diagrams():
    assert srefl.mckay("C4")["diagram"] == "A~3"
    assert srefl.mckay("D2")["diagram"] == "D~4"
    assert srefl.mckay("O")["diagram"] == "E~7"


def test_classify_c2():
    rep = srefl.classify("C2", 2)
    assert rep["count"] == 4
    for fam in rep["families"]:
        sol = fam["solution"]
        assert not sol["empty"]
        assert sol["dimension"] == 1
        assert sol["variables"] == ["k", "c2"]


def test_verify_agrees():
    rep = srefl.verify("C2", 2)
    assert rep["all_agree"]
    assert all(r["agrees_with_classifier"] for r in rep["reports"])

    rep_f = srefl.verify("C3", 1, mode="float")
    assert rep_f["all_agree"]
    assert rep_f["mode"] == "float"


def test_partition_helpers():
    assert srefl.partition_dimension([2, 1]) == 2
    assert srefl.partition_dimension([3, 2]) == 5
    assert srefl.mn_character([2, 1], [3]) == -1


def test_bad_input():
    with pytest.raises(ValueError):
        srefl.verify("C2", 1, mode="fast")
    with pytest.raises(Exception):
        srefl.group("Q9")
