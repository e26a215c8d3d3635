import pytest

import otn_py


@pytest.fixture(scope="module")
def sys1():
    return otn_py.System(1)


def test_parse_print_round_trip(sys1):
    for text in ["0", "w", "phi(1,0)", "Om(S+1)", "psi[0:1](Om(1);0)", "w+1"]:
        t = sys1.parse(text)
        assert sys1.parse(str(t)) == t


def test_interned_equality(sys1):
    assert sys1.parse("w+1") == sys1.parse("w+1")
    assert hash(sys1.parse("w")) == hash(sys1.parse("w"))
    assert sys1.parse("w") != "w"


def test_compare_and_sort(sys1):
    assert sys1.compare("1", "w") == -1
    assert sys1.compare("w", "w") == 0
    assert sys1.compare("S", "Om(1)") == 1
    ordered = [str(t) for t in sys1.sort(["S", "0", "w", "1"])]
    assert ordered == ["0", "1", "w", "S"]


def test_parse_error(sys1):
    with pytest.raises(ValueError):
        sys1.parse("phi(1")


def test_validate(sys1):
    assert sys1.validate("w")["accepted"]
    assert not sys1.validate("1+w")["accepted"]


def test_counts():
    assert otn_py.System(1).count(3) == 29
    assert otn_py.System(1).count(5) == 318
    assert otn_py.System(2).count(3) == 46
    assert len(otn_py.System(1).enumerate(1)) == 4


def test_theta(sys1):
    lam = sys1.lam
    assert str(lam) == "Om(S+1)"
    assert sys1.theta("1", "1") == lam
    assert sys1.theta("w", "0") == sys1.parse("phi(1,0)")
    assert sys1.theta_inverse("1", lam) == sys1.parse("1")


def test_functions(sys1):
    assert str(sys1.o([("0", "1")])) == "w"
    assert sys1.is_irreducible([("0", "1")])
    assert sys1.lx_less([("0", "1")], [("0", "w")], "0")


def test_suites():
    names = otn_py.suite_names()
    assert names[0] == "roundtrip" and names[-1] == "golden"
    r = otn_py.run_suite("golden")
    assert r["passed"] and r["violations"] == 0
