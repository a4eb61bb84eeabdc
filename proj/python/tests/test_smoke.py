from fractions import Fraction

import pytest

import sublat


def test_partitions_and_conjugate():
    assert sublat.conjugate([3, 1]) == [2, 1, 1]
    assert sublat.conjugate([2, 2]) == [2, 2]
    assert sublat.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert sublat.partitions(2, bound=[1, 1, 1]) == [[1, 1]]


def test_gauss_binomial():
    assert sublat.gauss_binomial(2, 1) == [1, 1]
    coeffs = sublat.gauss_binomial(4, 2)
    assert coeffs == [1, 1, 2, 1, 1]
    assert sum(c * 2**i for i, c in enumerate(coeffs)) == 35


def test_counting():
    assert sublat.lattice_size(2, [3, 1]) == 11
    assert sublat.lattice_size(2, [4, 4, 1]) == 322
    assert sublat.subgroup_counts(2, [3, 1]) == [1, 3, 3, 3, 1]
    assert sublat.cyclic_subgroup_count(2, [2, 1]) == 6


def test_beta_and_alpha():
    assert sublat.beta("2:[1,3]") == Fraction(11, 16)
    assert sublat.beta("2:[1];3:[1]") == Fraction(2, 3)
    assert sublat.beta("") == 1
    assert sublat.alpha("2:[2,1]") == Fraction(3, 4)
    assert sublat.alpha("5:[3]") == Fraction(4, 125)


def test_beta_table():
    rows = sublat.beta_table(2, 3)
    assert [row["lattice_size"] for row in rows] == [4, 8, 16]
    assert rows[1]["beta"] == 1


def test_oracle_counts():
    assert sublat.oracle_counts([2, 4]) == {1: 1, 2: 3, 4: 3, 8: 1}
    assert sublat.oracle_counts([3, 3]) == {1: 1, 3: 4, 9: 1}


def test_approximate():
    result = sublat.approximate("0", eps="1/100")
    assert result["group"] == "211:[1]"
    assert result["error"] <= Fraction(1, 100)

    result = sublat.approximate("3.75", eps="0.001")
    assert result["error"] <= Fraction(1, 1000)
    assert result["achieved"] == sublat.beta(result["group"])


def test_verify_type():
    report = sublat.verify_type(3, [2, 1])
    assert report["pass"]
    names = {check["name"] for check in report["checks"]}
    assert "duality" in names


def test_errors():
    with pytest.raises(Exception):
        sublat.beta("4:[1]")
    with pytest.raises(Exception):
        sublat.approximate("-1")
