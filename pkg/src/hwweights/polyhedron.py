"""Convex hulls of weight sets of highest weight modules.

Coordinates are simple-root coordinates of the absolute weight, so a
weight ``mu`` is the point ``mu.root_coords()``.  The hull of ``wt V`` is

    conv(W_J(lam)) + cone(-(Phi+ minus Phi+_J)),      J = J(V),

which is what the Levi-shift description of the weight set gives.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import _exact
from .errors import HypothesisFailure, InternalInconsistency, InvalidInput
from .geometry import (HPolyhedron, VPolyhedron, canonical, contains, face_certificate,
                       face_lattice, h_to_v, v_to_h)
from .hwmodule import (HWModuleDescriptor, ParabolicVerma, Simple, Verma, integrability_set,
                       simply_regular)
from .rootsys import RootSystem, Weight
from .weyl import (ParabolicSubgroup, WeylElement, enumerate_group, group_order, j_lambda,
                   setwise_stabilizer)

__all__ = [
    "hull_of",
    "hull_h_rep",
    "canonical_hull",
    "contains",
    "v_to_h",
    "h_to_v",
    "FaceDescriptor",
    "faces",
    "geometric_face_count",
    "face_pairs_equal",
    "extremal_rays_at_vertex",
    "StabilizerResult",
    "weyl_stabilizer_is",
    "off_dump",
    "MinmaxRow",
    "minmax_equivalences",
]


def _restricted_hull(lam: Weight, J: frozenset[int], JV: frozenset[int]) -> VPolyhedron:
    """``conv(W_{J and JV}(lam)) + cone(-(Phi+_J minus Phi+_{J and JV}))``."""
    R = lam.system
    K = J & JV
    group = enumerate_group(ParabolicSubgroup(R, K))
    lam_root = lam.root_coords()
    verts = {tuple(Fraction(x) for x in w.act_root(lam_root)) for w in group}
    inside = set(R.positive_roots_in(K))
    rays = [tuple(-x for x in b) for b in R.positive_roots_in(J) if b not in inside]
    return VPolyhedron(tuple(verts), tuple(rays))


def hull_of(m: HWModuleDescriptor) -> VPolyhedron:
    """Vertices ``W_J(lam)`` and recession directions ``-(Phi+ minus Phi+_J)``.

    The ray list is the full generating set, not only the extreme rays;
    use :func:`canonical_hull` for the reduced form.
    """
    return _restricted_hull(m.lam, m.system.index_set, integrability_set(m))


@lru_cache(maxsize=4096)
def canonical_hull(m: HWModuleDescriptor) -> VPolyhedron:
    return canonical(hull_of(m))


@lru_cache(maxsize=4096)
def hull_h_rep(m: HWModuleDescriptor) -> HPolyhedron:
    return v_to_h(hull_of(m))


def _to_point(R: RootSystem, v) -> tuple[Fraction, ...]:
    if isinstance(v, Weight):
        return v.root_coords()
    return tuple(Fraction(x) for x in v)


def _affine_dim(p: VPolyhedron) -> int:
    v0 = p.vertices[0]
    vecs = [tuple(a - b for a, b in zip(v, v0)) for v in p.vertices[1:]] + list(p.rays)
    return _exact.rank(vecs) if vecs else 0


# -- faces ----------------------------------------------------------------------

@dataclass
class FaceDescriptor:
    """A face of the hull, with every ``(w, J)`` label that realizes it."""

    labels: list[tuple[WeylElement, frozenset[int]]]
    realization: VPolyhedron
    dimension: int
    certificate: tuple[Fraction, ...] | None = None

    @property
    def w(self) -> WeylElement:
        return self.labels[0][0]

    @property
    def J(self) -> frozenset[int]:
        return self.labels[0][1]

    def to_json(self) -> dict:
        return {
            "labels": [{"w": w.word_string(), "J": sorted(J)} for w, J in self.labels],
            "dimension": self.dimension,
            "polyhedron": self.realization.to_json(),
            "certificate": None if self.certificate is None
            else [_exact.fmt(x) for x in self.certificate],
        }


def _all_subsets(n: int):
    idx = range(1, n + 1)
    for size in range(n + 1):
        for c in combinations(idx, size):
            yield frozenset(c)


def faces(m: HWModuleDescriptor, depth: int | None = None,
          certify: bool = True) -> list[FaceDescriptor]:
    """Faces ``conv w(wt_J V)`` for ``J`` in ``I`` and ``w`` in ``W_{J(V)}``.

    Realizations are compared geometrically; labels naming the same face
    are merged.  With ``certify`` each face gets a linear functional,
    found by exact LP, that is maximized on the hull exactly there.
    ``depth`` is accepted for symmetry with the weight-set calls; faces
    are computed on the untruncated hull.
    """
    R = m.system
    JV = integrability_set(m)
    parent = canonical_hull(m)
    group = enumerate_group(ParabolicSubgroup(R, JV))
    found: dict[VPolyhedron, FaceDescriptor] = {}
    for J in _all_subsets(R.rank):
        base = canonical(_restricted_hull(m.lam, J, JV))
        dim = _affine_dim(base)
        for w in group:
            real = base.map(w.root_matrix)
            fd = found.get(real)
            if fd is None:
                found[real] = FaceDescriptor([(w, J)], real, dim)
            else:
                fd.labels.append((w, J))
    out = sorted(found.values(), key=lambda f: (f.dimension, f.realization.vertices,
                                                 f.realization.rays))
    if certify:
        pv, pr = set(parent.vertices), set(parent.rays)
        for fd in out:
            if not (set(fd.realization.vertices) <= pv and set(fd.realization.rays) <= pr):
                raise InternalInconsistency(
                    f"face realization for {m} is not spanned by hull generators")
            cert = face_certificate(parent, fd.realization.vertices, fd.realization.rays)
            if cert is None:
                raise InternalInconsistency(f"no supporting hyperplane for a face of {m}")
            fd.certificate = cert
    return out


def geometric_face_count(m: HWModuleDescriptor) -> int:
    """Number of nonempty faces found from the H-representation alone."""
    p = canonical_hull(m)
    return len(face_lattice(p, v_to_h(p)))


def face_pairs_equal(m: HWModuleDescriptor, first: tuple[WeylElement, frozenset[int]],
                     second: tuple[WeylElement, frozenset[int]]) -> bool:
    """Whether ``w(wt_J V)`` and ``w'(wt_J' V)`` span the same face."""
    JV = integrability_set(m)
    group = set(enumerate_group(ParabolicSubgroup(m.system, JV)))
    reals = []
    for w, J in (first, second):
        if w not in group:
            raise InvalidInput(f"{w.word_string()} is not in W_J(V) with J(V) = {sorted(JV)}")
        J = m.system.check_subset(J)
        reals.append(canonical(_restricted_hull(m.lam, J, JV)).map(w.root_matrix))
    return reals[0] == reals[1]


def extremal_rays_at_vertex(m: HWModuleDescriptor, v) -> list[tuple[int, ...]]:
    """Directions of the unbounded edges of the hull through vertex ``v``."""
    R = m.system
    p = canonical_hull(m)
    x = _to_point(R, v)
    if x not in p.vertices:
        raise InvalidInput(f"{v} is not a vertex of the hull of {m}")
    vi = p.vertices.index(x)
    n_vert = len(p.vertices)
    out = []
    for f in face_lattice(p):
        if len(f) == 2 and vi in f:
            other = max(f)
            if other >= n_vert:
                out.append(p.rays[other - n_vert])
    return sorted(out)


# -- stabilizers ----------------------------------------------------------------

@dataclass
class StabilizerResult:
    elements: tuple[WeylElement, ...]
    J: frozenset[int]
    is_parabolic: bool

    def to_json(self) -> dict:
        return {
            "J": sorted(self.J),
            "is_parabolic": self.is_parabolic,
            "order": len(self.elements),
            "elements": [w.word_string() for w in self.elements],
        }


def weyl_stabilizer_is(m: HWModuleDescriptor) -> StabilizerResult:
    """Setwise stabilizer of the hull, and whether it is a parabolic ``W_J``.

    ``J`` is the set of simple reflections in the stabilizer, which spans
    the largest parabolic subgroup inside it.
    """
    R = m.system
    stab = setwise_stabilizer(canonical_hull(m), R)
    J = frozenset(w.word[0] for w in stab if w.length == 1)
    return StabilizerResult(stab, J, len(stab) == group_order(R, J))


# -- hull equality versus stabilizers -------------------------------------------

@dataclass
class MinmaxRow:
    """Three statements about one descriptor relative to a target ``J'``.

    ``hull_equal``: the hull equals that of ``M(lam, J')``;
    ``stabilizer_equal``: the hull stabilizer is exactly ``W_J'``;
    ``largest_parabolic_equal``: the largest parabolic subgroup inside
    the stabilizer is ``W_J'``.
    """

    target: frozenset[int]
    descriptor: HWModuleDescriptor
    hull_equal: bool
    stabilizer_equal: bool
    largest_parabolic_equal: bool

    @property
    def equivalent(self) -> bool:
        return self.hull_equal == self.stabilizer_equal == self.largest_parabolic_equal

    def to_json(self) -> dict:
        return {
            "J_prime": sorted(self.target),
            "module": self.descriptor.label(),
            "hull_equal": self.hull_equal,
            "stabilizer_equal": self.stabilizer_equal,
            "largest_parabolic_equal": self.largest_parabolic_equal,
            "equivalent": self.equivalent,
        }


def _subsets_of(J: frozenset[int]):
    items = sorted(J)
    for size in range(len(items) + 1):
        for c in combinations(items, size):
            yield frozenset(c)


def minmax_targets(lam: Weight, targets=None) -> list[frozenset[int]]:
    """Admissible ``J'``: every subset of ``J_lam`` if ``lam`` is simply-regular,
    otherwise only the empty set and ``J_lam``.  Explicit ``targets`` are
    checked against the same rule and rejected with :class:`HypothesisFailure`.
    """
    JL = j_lambda(lam)
    reg = simply_regular(lam)
    if targets is None:
        return list(_subsets_of(JL)) if reg else sorted({frozenset(), JL}, key=sorted)
    out = []
    for t in targets:
        t = lam.system.check_subset(t)
        if not t <= JL:
            raise InvalidInput(f"J' = {sorted(t)} is not contained in J_lambda = {sorted(JL)}")
        if not reg and t not in (frozenset(), JL):
            raise HypothesisFailure(
                f"lambda = {lam} is not simply-regular and J' = {sorted(t)} is neither "
                f"empty nor J_lambda = {sorted(JL)}")
        out.append(t)
    return out


def minmax_equivalences(lam: Weight, targets=None) -> list[MinmaxRow]:
    """Check hull equality, exact stabilizer and largest parabolic together.

    Each admissible ``J'`` is compared against every constructible
    descriptor: parabolic Verma modules for all admissible ``J''``, the
    Verma module and the simple module.
    """
    R = lam.system
    tgts = minmax_targets(lam, targets)
    pool = [ParabolicVerma(lam, t) for t in minmax_targets(lam)] + [Verma(lam), Simple(lam)]
    stab = {d: weyl_stabilizer_is(d) for d in pool}
    rows = []
    for t in tgts:
        ref = canonical_hull(ParabolicVerma(lam, t))
        for d in pool:
            st = stab[d]
            rows.append(MinmaxRow(
                t, d,
                canonical_hull(d) == ref,
                st.is_parabolic and st.J == t,
                st.J == t,
            ))
    return rows


# -- OFF export -----------------------------------------------------------------

def _sorted_cycle(points: list[tuple[Fraction, ...]], normal: Sequence | None):
    """Order coplanar points (all extreme) cyclically, with exact comparisons only."""
    if len(points) <= 2:
        return list(range(len(points)))
    n = len(points[0])
    if n == 2:
        u_axis, v_axis = 0, 1
    else:
        # project away the coordinate where the facet normal is largest in absolute value
        drop = max(range(n), key=lambda i: abs(normal[i]))
        keep = [i for i in range(n) if i != drop]
        u_axis, v_axis = keep
    pts = [(p[u_axis], p[v_axis]) for p in points]
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    rel = [(p[0] - cx, p[1] - cy) for p in pts]

    def half(d):
        return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1

    from functools import cmp_to_key

    def cmp(i, j):
        a, b = rel[i], rel[j]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(range(len(points)), key=cmp_to_key(cmp))


def off_dump(m: HWModuleDescriptor, box: int = 3) -> str:
    """OFF text of the hull clipped to ``|x_i - lam_i| <= box`` (rank 2 or 3).

    Coordinates are simple-root coordinates written as decimals; the
    geometry itself is computed exactly.
    """
    from .geometry import Inequality

    R = m.system
    if R.rank not in (2, 3):
        raise InvalidInput("OFF export is only available in rank 2 and 3")
    h = hull_h_rep(m)
    lam = m.lam.root_coords()
    extra = []
    for i in range(R.rank):
        e = tuple(int(i == j) for j in range(R.rank))
        extra.append(Inequality(e, lam[i] + box))
        extra.append(Inequality(tuple(-x for x in e), -(lam[i] - box)))
    clipped = HPolyhedron(h.inequalities + tuple(extra), h.equalities, R.rank)
    poly = h_to_v(clipped)
    verts = list(poly.vertices)
    hc = v_to_h(poly)
    lines = ["OFF"]
    if R.rank == 2:
        order = _sorted_cycle(verts, None)
        lines.append(f"{len(verts)} 1 0")
        for v in verts:
            lines.append(f"{float(v[0]):.6f} {float(v[1]):.6f} 0.000000")
        lines.append(f"{len(order)} " + " ".join(str(i) for i in order))
        return "\n".join(lines) + "\n"
    facets = []
    for q in hc.inequalities:
        idx = [i for i, v in enumerate(verts) if q.value(v) == q.offset]
        sub = [verts[i] for i in idx]
        facets.append([idx[j] for j in _sorted_cycle(sub, q.normal)])
    lines.append(f"{len(verts)} {len(facets)} 0")
    for v in verts:
        lines.append(" ".join(f"{float(x):.6f}" for x in v))
    for f in facets:
        lines.append(f"{len(f)} " + " ".join(str(i) for i in f))
    return "\n".join(lines) + "\n"
