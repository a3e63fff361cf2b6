from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hwweights.character import kostant_table, wcf_character
from hwweights.errors import CapExceeded
from hwweights.hwmodule import Simple, weight_set
from hwweights.oracle import (FormEvaluator, gram_matrix, oracle_weight_support, pairing_value,
                              simple_multiplicity, verma_multiplicity, words_for_offset)
from hwweights.rootsys import root_system


def test_pairing_values(A1, A2):
    lam = A1.weight(["5/3"])
    assert pairing_value((1,), (1,), lam) == Fraction(5, 3)
    assert pairing_value((), (), lam) == 1
    assert pairing_value((1,), (2,), A2.weight([1, 1])) == 0


def test_sl2_string_product(A1):
    # <f^k v, f^k v> = k! m (m-1) ... (m-k+1)
    m = Fraction(7, 2)
    lam = A1.weight([m])
    val = Fraction(1)
    for k in range(1, 6):
        val *= k * (m - k + 1)
        assert pairing_value((1,) * k, (1,) * k, lam) == val


def test_simple_multiplicity(A1, A2):
    assert simple_multiplicity(A1.weight([2]), [3]) == 0
    assert all(simple_multiplicity(A1.weight(["-1/2"]), [k]) == 1 for k in range(9))
    assert simple_multiplicity(A2.weight([1, 1]), [1, 1]) == 2


def test_verma_multiplicity(A2):
    assert verma_multiplicity(A2, [2, 1]) == 2
    assert verma_multiplicity(A2, [0, 0]) == 1
    assert verma_multiplicity(root_system("A1"), [5]) == 1


def test_verma_recount_matches_kostant_table():
    for name in ("A2", "B2", "G2", "A3"):
        R = root_system(name)
        for k, v in kostant_table(R, 5).items():
            assert verma_multiplicity(R, k) == v


def test_oracle_support(A1, A2):
    assert oracle_weight_support(A1.weight([2]), 5).entries == {(0,): 1, (1,): 1, (2,): 1}
    assert oracle_weight_support(A1.weight([-3]), 5).entries == {(k,): 1 for k in range(6)}
    lam = A2.weight([2, "-3/2"])
    assert oracle_weight_support(lam, 4).offsets == weight_set(Simple(lam), 4).offsets


def test_depth_cap(A2, monkeypatch):
    with pytest.raises(CapExceeded):
        oracle_weight_support(A2.weight([1, 1]), 9)
    monkeypatch.setenv("HWWEIGHTS_ORACLE_DEPTH", "2")
    with pytest.raises(CapExceeded):
        simple_multiplicity(A2.weight([1, 1]), [2, 1])


def test_words():
    assert words_for_offset([1, 1]) == [(1, 2), (2, 1)]
    assert len(words_for_offset([2, 2])) == 6


coords = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=2)


@settings(max_examples=25, deadline=None)
@given(coords)
def test_gram_symmetric_and_bounded(c):
    R = root_system("B2")
    lam = R.weight(c)
    form = FormEvaluator(lam)
    kt = kostant_table(R, 4)
    for k in [(1, 1), (1, 2), (2, 1), (0, 3)]:
        g = gram_matrix(lam, k, form)
        n = len(g.words)
        assert all(form(g.words[a], g.words[b]) == form(g.words[b], g.words[a])
                   for a in range(n) for b in range(n))
        assert g.rank <= kt[k]


@pytest.mark.parametrize("lam", [[1, 0], [2, 1], [0, 2], [1, 1]])
def test_dominant_oracle_matches_wcf(A2, lam):
    w = A2.weight(lam)
    assert oracle_weight_support(w, 6).entries == wcf_character(w, 6).coefficients


def test_gram_json(A2):
    js = gram_matrix(A2.weight([1, 1]), [1, 1]).to_json()
    assert js["words"] == [[1, 2], [2, 1]] and js["entries"][0][0] == "2"
