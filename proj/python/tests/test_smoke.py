from fractions import Fraction

import pytest

import nonrep


def test_morphism_tables():
    assert nonrep.morphism_images("g2")[0] == "011220012201"
    assert nonrep.morphism_images("g5")[2] == "001101110001001101010"
    assert nonrep.apply_morphism("g2", "01") == "011220012201122001120012"


def test_words():
    assert nonrep.generate_powerfree_ternary(4) == "0102"
    assert nonrep.find_squares("0101", 1, 4) == [(0, 4, 2)]
    assert nonrep.max_exponent("0110110") == Fraction(7, 3)
    assert nonrep.power_free_violation("01010", "19/10", True, 2, alphabet=2) == (0, 5, 2)
    assert nonrep.power_free_violation("0102", "7/4", True, 1) is None
    assert nonrep.directed_violation("010", 3) == (0, "010")
    assert nonrep.directedness_threshold("19/10", 3) == 20


def test_errors_are_value_errors():
    with pytest.raises(nonrep.DomainError):
        nonrep.find_squares("013", 1, 2, alphabet=3)
    with pytest.raises(ValueError):
        nonrep.directedness_threshold("2", 3)
    with pytest.raises(nonrep.ConfigError):
        nonrep.certify("g2", factor_len=2)


def test_certify_g2():
    cert = nonrep.certify("g2", factor_len=8)
    assert cert["overall"] is True
    assert cert["threshold"] == 20
    assert {c["name"] for c in cert["checks"]} == {"power_free", "directed", "threshold", "palindrome_scan"}


def test_graphs_and_colorings():
    p4 = nonrep.graph("path", 4)
    assert p4["vertices"] == 4
    assert nonrep.verify_coloring(p4, [0, 1, 0, 2], 1)["ok"]
    bad = nonrep.verify_coloring(p4, [0, 1, 0, 1], 1)
    assert not bad["ok"] and bad["path"] == [0, 1, 2, 3]
    g2 = nonrep.graph("stacked", 2)
    assert (g2["vertices"], len(g2["edges"])) == (20, 54)
    assert len(nonrep.graph("plus4", {"vertices": 0, "edges": []}, 2)["edges"]) == 11


def test_pi_k():
    r = nonrep.pi_k(nonrep.graph("path", 4), 1)
    assert (r["lower"], r["upper"]) == (3, 3)
    capped = nonrep.pi_k(nonrep.graph("stacked", 2), 1, node_limit=50)
    assert capped["exhausted"] and capped["lower"] < capped["upper"]


def test_suite_subset():
    report = nonrep.run_suite("AC1")
    assert report["passed"] is True
    assert [c["id"] for c in report["criteria"]] == ["AC1"]
