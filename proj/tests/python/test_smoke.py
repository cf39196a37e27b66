import pytest

import qloop


def test_d4_fundamental_dimension():
    chi = qloop.fundamental_qchar("D4", 3, 0)
    assert chi["terms"] == 28 and chi["dimension"] == 29
    coeffs = [t["c"] for t in chi["qchar"]["terms"]]
    assert sum(coeffs) == 29
    assert coeffs.count(2) == 1


def test_sl2_kr_closed_form():
    chi = qloop.sl2_kr(2, 0)
    assert chi["dimension"] == 3
    assert len(chi["qchar"]["terms"]) == 3


def test_yang_baxter_and_pole():
    assert qloop.yang_baxter("3/5", "-2/7", "3/2")
    with pytest.raises(qloop.SingularityError):
        qloop.yang_baxter("9/4", "1/3", "3/2")


def test_roots_and_euler():
    assert len(qloop.positive_roots("E6")) == 36
    res = qloop.grassmannian_euler("D4", [1, 1, 2, 1], [0, 0, 1, 0])
    assert res["euler"] == 2


def test_cluster_counts_and_type():
    g = qloop.cluster_enumerate("A3", 1)
    assert g["cluster_count"] == 14 and g["variable_count"] == 9
    assert qloop.cluster_classify("A2", 2)["cluster_type"] == "D4"


def test_truncated_and_verify():
    assert len(qloop.truncated_qchar("D4", beta=[1, 1, 1, 1])["qchar"]["terms"]) == 9
    assert qloop.verify_l1("A3")["pass"]


def test_errors():
    with pytest.raises(qloop.InvalidInput):
        qloop.fundamental_qchar("Q7", 1, 0)
    with pytest.raises(ValueError):
        qloop.truncated_qchar("A2")
