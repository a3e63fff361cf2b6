import pytest

from hwweights.errors import InvalidInput
from hwweights.hwmodule import ParabolicVerma, Simple, Verma, weight_set
from hwweights.polyhedron import (canonical_hull, extremal_rays_at_vertex, face_pairs_equal,
                                  faces, geometric_face_count, hull_h_rep, hull_of,
                                  minmax_equivalences, off_dump, weyl_stabilizer_is)
from hwweights.errors import HypothesisFailure
from hwweights.rootsys import root_system
from hwweights.weyl import parse_word


def test_hull_examples(A2):
    lam = A2.weight([1, 1])
    hexagon = canonical_hull(Simple(lam))
    assert len(hexagon.vertices) == 6 and not hexagon.rays
    verma = hull_of(Verma(lam))
    assert verma.vertices == (lam.root_coords(),)
    assert set(verma.rays) == {(-1, 0), (0, -1), (-1, -1)}
    pv = canonical_hull(ParabolicVerma(lam, [1]))
    assert set(pv.vertices) == {lam.root_coords(), (lam - A2.simple_root(1)).root_coords()}
    assert set(hull_of(ParabolicVerma(lam, [1])).rays) == {(0, -1), (-1, -1)}


def test_face_counts(A2):
    assert len(faces(Simple(A2.weight([1, 1])))) == 13
    assert len(faces(Verma(A2.weight(["1/2", -2])))) == 4
    fl = faces(Simple(A2.weight([2, 1])))
    vertex = [f for f in fl if f.dimension == 0 and any(w.is_identity and not J for w, J in f.labels)]
    assert vertex[0].realization.vertices == (A2.weight([2, 1]).root_coords(),)


def test_face_certificates_are_supporting(A2):
    m = ParabolicVerma(A2.weight([2, 1]), [1])
    p = canonical_hull(m)
    for f in faces(m):
        c = f.certificate
        top = max(sum(a * b for a, b in zip(c, v)) for v in p.vertices)
        on = {v for v in p.vertices if sum(a * b for a, b in zip(c, v)) == top}
        assert on == set(f.realization.vertices)


@pytest.mark.parametrize("name,lam,J", [("B3", [1, 0, 1], None), ("A3", [1, "-1/2", 2], [3]),
                                        ("G2", [1, 1], None), ("B2", [2, "1/3"], [1])])
def test_face_count_matches_geometry(name, lam, J):
    R = root_system(name)
    m = Simple(R.weight(lam)) if J is None else ParabolicVerma(R.weight(lam), J)
    assert len(faces(m)) == geometric_face_count(m)


def test_face_pairs(A2):
    e, s1 = parse_word(A2, "e"), parse_word(A2, "s1")
    m = Simple(A2.weight([1, 1]))
    assert face_pairs_equal(m, (e, frozenset({1})), (e, frozenset({1})))
    assert not face_pairs_equal(m, (e, frozenset()), (s1, frozenset()))
    assert face_pairs_equal(Simple(A2.fundamental_weight(2)), (e, frozenset()), (s1, frozenset()))


def test_extremal_rays(A2):
    assert extremal_rays_at_vertex(Verma(A2.weight([1, "1/2"])), A2.weight([1, "1/2"])) == [(-1, 0), (0, -1)]
    assert extremal_rays_at_vertex(Simple(A2.weight([1, 1])), A2.weight([1, 1])) == []
    lam = A2.weight([1, 1])
    assert extremal_rays_at_vertex(ParabolicVerma(lam, [1]), lam) == [(0, -1)]
    with pytest.raises(InvalidInput):
        extremal_rays_at_vertex(Simple(lam), A2.zero())


def test_stabilizer(A2, B2):
    assert weyl_stabilizer_is(Simple(A2.weight([2, 1]))).J == {1, 2}
    st = weyl_stabilizer_is(Verma(A2.weight([1, "1/2"])))
    assert st.J == frozenset() and st.is_parabolic and len(st.elements) == 1
    st = weyl_stabilizer_is(ParabolicVerma(B2.weight(["1/2", 2]), [2]))
    assert st.J == {2} and st.is_parabolic


def test_weights_lie_in_hull(B2):
    m = ParabolicVerma(B2.weight([1, 2]), [2])
    h = hull_h_rep(m)
    from hwweights.geometry import contains
    assert all(contains(h, w.root_coords()) for w in weight_set(m, 5).weights())


def test_minmax(A2):
    rows = minmax_equivalences(A2.weight([2, 1]), [[1]])
    assert all(r.equivalent for r in rows)
    hits = [r.descriptor.label() for r in rows if r.hull_equal]
    assert hits == ["pverma:1"]
    rows = minmax_equivalences(A2.weight(["-1/2", "-5/2"]))
    assert {r.descriptor.label() for r in rows if r.hull_equal} == {"pverma:", "verma", "simple"}
    with pytest.raises(HypothesisFailure):
        minmax_equivalences(A2.weight([1, 0]), [[1]])


def test_off_dump(A2):
    text = off_dump(Simple(A2.weight([1, 1])))
    lines = text.splitlines()
    assert lines[0] == "OFF" and lines[1] == "6 1 0"
    assert off_dump(Verma(root_system("A3").weight([1, 1, 1])), box=2).startswith("OFF")
