from fractions import Fraction

from hypothesis import given, settings, strategies as st

from hwweights.geometry import (HPolyhedron, VPolyhedron, canonical, contains, face_certificate,
                                face_lattice, h_to_v, reduce_by_lp, v_to_h)


def hexagon():
    return VPolyhedron(((1, 1), (-1, 0), (0, -1), (-1, -1), (1, 0), (0, 1)))


def test_half_line():
    h = v_to_h(VPolyhedron(((Fraction(1, 2),),), ((-1,),)))
    assert len(h.inequalities) == 1
    q = h.inequalities[0]
    assert q.normal[0] > 0 and q.offset / q.normal[0] == Fraction(1, 2)


def test_hexagon():
    h = v_to_h(hexagon())
    assert len(h.inequalities) == 6
    assert contains(h, (0, 0)) and not contains(h, (2, 2))
    assert h_to_v(h) == hexagon()
    assert len(face_lattice(hexagon())) == 13


def test_cone_with_redundant_ray():
    p = VPolyhedron(((1, 1),), ((-1, 0), (0, -1), (-1, -1)))
    c = canonical(p)
    assert c.rays == ((-1, 0), (0, -1))
    assert len(v_to_h(p).inequalities) == 2
    assert contains(v_to_h(p), (1 - 7, 1 - 3))
    assert len(face_lattice(c)) == 4


def test_lp_reduction_matches_double_description():
    p = VPolyhedron(((0, 0), (1, 1), (2, 0), (1, 0), (0, 2)), ((1, 1),))
    assert reduce_by_lp(p) == canonical(p)


def test_face_certificate():
    p = hexagon()
    c = face_certificate(p, [(1, 1), (1, 0)], [])
    assert c is not None
    assert face_certificate(p, [(1, 1), (-1, -1)], []) is None


pts = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
               min_size=1, max_size=7)
# rays in the nonnegative orthant keep the polyhedron pointed, as module hulls are
dirs = st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1)), max_size=3)


@settings(max_examples=40, deadline=None)
@given(pts, dirs)
def test_round_trip_and_containment(vs, rs):
    p = canonical(VPolyhedron(tuple(vs), tuple(rs)))
    h = v_to_h(p)
    assert h_to_v(h) == p
    assert reduce_by_lp(VPolyhedron(tuple(vs), tuple(rs))) == p
    for v in vs:
        assert contains(h, v)


def test_non_pointed_is_rejected():
    import pytest
    from hwweights.errors import InvalidInput
    with pytest.raises(InvalidInput):
        h_to_v(v_to_h(VPolyhedron(((0, 0),), ((1, 0), (-1, 0)))))


def test_equalities_for_lower_dimensional_sets():
    h = v_to_h(VPolyhedron(((0, 0, 0), (1, 1, 0))))
    assert isinstance(h, HPolyhedron) and len(h.equalities) == 2
