from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hwweights.errors import InvalidInput
from hwweights.rootsys import parse_spec, root_system

COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6,
          "F4": 24, "E6": 36, "E7": 63, "E8": 120, "A1xA1": 2, "A2xB2": 7}


@pytest.mark.parametrize("name,count", sorted(COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(root_system(name).positive_roots) == count


def test_a2_data(A2):
    assert A2.cartan == ((2, -1), (-1, 2))
    assert A2.positive_roots == ((0, 1), (1, 0), (1, 1))


def test_a1_normalization(A1):
    a = A1.simple_root(1)
    assert A1.bilinear(a, a) == 2


def test_g2_highest_root(G2):
    assert G2.highest_root() == (3, 2)
    a1 = G2.simple_root(1)
    assert G2.bilinear(a1, a1) < G2.bilinear(G2.simple_root(2), G2.simple_root(2))


def test_eval_coroot(A2):
    w1 = A2.fundamental_weight(1)
    assert A2.eval_coroot(w1, 1) == 1
    assert A2.eval_coroot(w1, 2) == 0
    assert A2.eval_coroot(A2.simple_root(1), 2) == -1


def test_bilinear(A1, A2):
    assert A2.bilinear(A2.simple_root(1), A2.simple_root(2)) == -1
    assert A2.bilinear(A2.fundamental_weight(1), A2.simple_root(2)) == 0
    with pytest.raises(InvalidInput):
        A2.bilinear(A2.zero(), A1.zero())


def test_root_coords(A1, A2):
    assert A2.root_coords(A2.simple_root(1) + A2.simple_root(2)) == (1, 1)
    assert A2.root_coords(A2.fundamental_weight(1)) == (Fraction(2, 3), Fraction(1, 3))
    assert A1.root_coords(A1.fundamental_weight(1)) == (Fraction(1, 2),)


def test_rho(A2, B2):
    assert A2.rho([]) == A2.zero()
    assert A2.rho([1, 2]) == A2.weight([1, 1])
    assert B2.rho([1]) == B2.fundamental_weight(1)


def test_spec_parsing():
    assert parse_spec("a1XA1").rank == 2
    for bad in ("A0", "B1", "E5", "F3", "G3", "Z2", ""):
        with pytest.raises(InvalidInput):
            root_system(bad)


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_structural_invariants(name):
    R = root_system(name)
    two_rho = [sum(b[i] for b in R.positive_roots) for i in range(R.rank)]
    assert tuple(Fraction(x, 2) for x in two_rho) == R.rho().root_coords()
    for b in R.positive_roots:
        w = R.root_weight(b)
        for i in range(1, R.rank + 1):
            a = R.simple_root(i)
            q = 2 * R.bilinear(w, a) / R.bilinear(a, a)
            assert q.denominator == 1


coords = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=2, max_size=2)


@settings(max_examples=50, deadline=None)
@given(coords)
def test_coroot_agrees_with_form(c):
    R = root_system("G2")
    lam = R.weight(c)
    for i in (1, 2):
        a = R.simple_root(i)
        assert R.eval_coroot(lam, i) == 2 * R.bilinear(lam, a) / R.bilinear(a, a)
    assert R.from_root_coords(lam.root_coords()) == lam


def test_json(A2):
    js = A2.to_json()
    assert js["type"] == "A2" and js["rank"] == 2 and len(js["positive_roots"]) == 3
