import pytest

from hwweights.character import (character_support, kostant_table, verma_character,
                                 wcf_character, weyl_dimension)
from hwweights.errors import HypothesisFailure, InvalidInput
from hwweights.hwmodule import Simple, weight_set
from hwweights.rootsys import root_system


def test_verma_character(A1, A2):
    ch = verma_character(A1.weight([7]), 3)
    assert [ch[(k,)] for k in range(4)] == [1, 1, 1, 1]
    ch = verma_character(A2.weight(["1/2", 0]), 4)
    assert ch[(1, 1)] == 2 and ch[(0, 0)] == 1 and ch[(2, 1)] == 2


def test_kostant_b2():
    # 2a1 + a2 in B2 (a2 short): {a1,a1,a2}, {a1, a1+a2}, ... checked by hand
    t = kostant_table(root_system("B2"), 3)
    assert t[(1, 1)] == 2 and t[(1, 2)] == 3


def test_wcf_sl2(A1):
    ch = wcf_character(A1.weight([2]), 5)
    assert ch.coefficients == {(0,): 1, (1,): 1, (2,): 1}
    assert wcf_character(A1.weight(["-3/2"]), 4) == verma_character(A1.weight(["-3/2"]), 4)


def test_wcf_adjoint(A2):
    ch = wcf_character(A2.weight([1, 1]), 10)
    assert sorted(ch.coefficients.values()) == [1, 1, 1, 1, 1, 1, 2]
    assert ch[(1, 1)] == 2
    assert len(character_support(ch)) == 7


def test_wcf_refuses_outside_hypothesis(A2):
    with pytest.raises(HypothesisFailure, match="S_lambda"):
        wcf_character(-A2.rho(), 3)


@pytest.mark.parametrize("name,lam", [("A2", [2, 1]), ("B2", [1, 2]), ("G2", [1, 1]),
                                      ("A3", [1, 0, 1]), ("B3", [0, 1, 0])])
def test_total_is_weyl_dimension(name, lam):
    R = root_system(name)
    w = R.weight(lam)
    ch = wcf_character(w, 40)
    assert ch.total() == weyl_dimension(w)


def test_weyl_dimension_known(A2):
    assert weyl_dimension(A2.weight([1, 1])) == 8
    assert weyl_dimension(root_system("G2").weight([1, 0])) == 7
    assert weyl_dimension(root_system("E6").weight([1, 0, 0, 0, 0, 0])) == 27
    with pytest.raises(InvalidInput):
        weyl_dimension(A2.weight(["1/2", 0]))


def test_support_matches_formula_b(B2):
    lam = B2.weight([2, "-1/2"])
    ch = wcf_character(lam, 5)
    assert character_support(ch).offsets == weight_set(Simple(lam), 5).offsets


def test_zero_depth(A2):
    ch = wcf_character(A2.weight([3, 0]), 0)
    assert character_support(ch).offsets == {(0, 0)}


def test_json_has_mult(A2):
    js = wcf_character(A2.weight([1, 0]), 3).to_json()
    assert all(isinstance(w["mult"], int) for w in js["weights"])
