"""Exact convex polyhedra in Q^n.

``VPolyhedron`` is ``conv(vertices) + cone(rays)``; ``HPolyhedron`` is a
list of inequalities ``normal . x <= offset`` together with equalities
``normal . x == offset`` describing the affine hull.

Conversion in both directions runs the double description method on the
homogenized cone, in integer arithmetic.  A second, independent
reduction based on exact linear programming (``reduce_by_lp``) is used to
cross-check the conversion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _exact, _lp, config
from .errors import CapExceeded, InternalInconsistency, InvalidInput

__all__ = [
    "VPolyhedron",
    "HPolyhedron",
    "Inequality",
    "extreme_rays",
    "v_to_h",
    "h_to_v",
    "canonical",
    "contains",
    "reduce_by_lp",
    "face_certificate",
    "face_lattice",
]

Point = tuple[Fraction, ...]
Ray = tuple[int, ...]


def _point(v: Iterable) -> Point:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class VPolyhedron:
    """``conv(vertices) + cone(rays)``.

    Construction sorts and deduplicates; rays are stored as primitive
    integer vectors.  Call :func:`canonical` to drop redundant generators.
    """

    vertices: tuple[Point, ...]
    rays: tuple[Ray, ...] = ()

    def __post_init__(self):
        verts = sorted({_point(v) for v in self.vertices})
        rays = sorted({_exact.integer_scale(r) for r in self.rays} - {()})
        rays = [r for r in rays if any(r)]
        if not verts:
            raise InvalidInput("a polyhedron needs at least one vertex")
        dims = {len(v) for v in verts} | {len(r) for r in rays}
        if len(dims) != 1:
            raise InvalidInput(f"mixed dimensions in polyhedron generators: {sorted(dims)}")
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "rays", tuple(rays))

    @property
    def dim_ambient(self) -> int:
        return len(self.vertices[0])

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    def map(self, matrix: Sequence[Sequence[int]]) -> "VPolyhedron":
        """Image under a linear map (used for Weyl group actions)."""
        return VPolyhedron(tuple(_exact.mat_vec(matrix, v) for v in self.vertices),
                           tuple(_exact.mat_vec(matrix, r) for r in self.rays))

    def to_json(self) -> dict:
        return {
            "vertices": [[_exact.fmt(x) for x in v] for v in self.vertices],
            "rays": [[_exact.fmt(x) for x in r] for r in self.rays],
        }


@dataclass(frozen=True)
class Inequality:
    normal: tuple[int, ...]
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return _exact.dot(self.normal, x)

    def holds(self, x: Sequence) -> bool:
        return self.value(x) <= self.offset

    def to_json(self) -> dict:
        return {"normal": [_exact.fmt(a) for a in self.normal], "offset": _exact.fmt(self.offset)}


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : a.x <= b for inequalities, a.x == b for equalities}``."""

    inequalities: tuple[Inequality, ...]
    equalities: tuple[Inequality, ...] = ()
    dim_ambient: int = 0

    def to_json(self) -> dict:
        return {
            "inequalities": [q.to_json() for q in self.inequalities],
            "equalities": [q.to_json() for q in self.equalities],
        }


def _normalize_pair(normal: Sequence, offset) -> Inequality:
    """Scale ``(normal, offset)`` by a positive factor to a primitive integer row."""
    row = _exact.integer_scale(list(normal) + [offset])
    return Inequality(tuple(row[:-1]), Fraction(row[-1]))


# -- double description -------------------------------------------------

def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> list[tuple[tuple[int, ...], int]]:
    """Extreme rays of the pointed cone ``{t : rows . t >= 0}``.

    ``rows`` must have full column rank ``dim``.  Returns pairs
    ``(ray, tight_mask)`` where bit ``k`` of ``tight_mask`` is set iff
    ``rows[k] . ray == 0``.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    if dim == 0:
        return []
    # pick dim independent rows for the initial simplicial cone
    basis_idx: list[int] = []
    for k, r in enumerate(rows):
        if _exact.rank([rows[j] for j in basis_idx] + [r]) > len(basis_idx):
            basis_idx.append(k)
            if len(basis_idx) == dim:
                break
    if len(basis_idx) < dim:
        raise InvalidInput("cone has a nontrivial lineality space")
    binv = _exact.inverse([rows[k] for k in basis_idx])
    rays: list[tuple[tuple[int, ...], int]] = []
    for j in range(dim):
        col = [binv[i][j] for i in range(dim)]
        ray = _exact.integer_scale(col)
        mask = 0
        for jj, k in enumerate(basis_idx):
            if jj != j:
                mask |= 1 << k
        rays.append((ray, mask))

    done_mask = 0
    for k in basis_idx:
        done_mask |= 1 << k
    basis_set = set(basis_idx)
    for k, a in enumerate(rows):
        if k in basis_set:
            continue
        pos, zero, neg = [], [], []
        for ray, mask in rays:
            s = sum(x * y for x, y in zip(a, ray))
            if s > 0:
                pos.append((ray, mask, s))
            elif s < 0:
                neg.append((ray, mask, s))
            else:
                zero.append((ray, mask | (1 << k)))
        new = []
        if pos and neg:
            all_masks = [m for _, m in rays]
            for rp, mp, sp in pos:
                for rn, mn, sn in neg:
                    common = mp & mn
                    if bin(common).count("1") < dim - 2:
                        continue
                    # combinatorial adjacency: no third ray is tight on all of `common`
                    hits = sum(1 for m in all_masks if m & common == common)
                    if hits > 2:
                        continue
                    comb = [sp * y - sn * x for x, y in zip(rp, rn)]
                    new.append((_exact.primitive(comb), common | (1 << k)))
        rays = [(r, m) for r, m, _ in pos] + zero + new
        done_mask |= 1 << k
    # duplicate rows can yield repeated rays; keep one of each
    uniq: dict[tuple[int, ...], int] = {}
    for r, m in rays:
        uniq[r] = uniq.get(r, 0) | m
    return list(uniq.items())


def _check_dim(n: int) -> None:
    cap = config.max_dim()
    if n > cap:
        raise CapExceeded("ambient dimension", cap, n)


def v_to_h(p: VPolyhedron) -> HPolyhedron:
    """Irredundant H-representation of ``p``."""
    n = p.dim_ambient
    _check_dim(n)
    gens = [_exact.integer_scale((1,) + tuple(v)) for v in p.vertices]
    gens += [(0,) + tuple(r) for r in p.rays]
    span = _exact.row_space_basis(gens)
    null = _exact.nullspace(gens, n + 1)
    equalities = []
    if null:
        # y0 + a.x == 0 on the affine hull, i.e. a.x == -y0
        eq_rows = [list(y[1:]) + [-y[0]] for y in null]
        rows, _ = _exact.rref(eq_rows)
        equalities = [_normalize_pair(r[:-1], r[-1]) for r in rows]
    r = len(span)
    m = [tuple(sum(g[c] * b[c] for c in range(n + 1)) for b in span) for g in gens]
    inequalities = []
    n_vert = len(p.vertices)
    for t, _mask in extreme_rays(m, r):
        y = [sum(t[j] * span[j][c] for j in range(r)) for c in range(n + 1)]
        vals = [sum(a * b for a, b in zip(y, g)) for g in gens]
        if all(v == 0 for v in vals[n_vert:]) and len(set(vals[:n_vert])) == 1:
            continue  # the face at infinity; implied by the equalities
        # y0 + a.x >= 0  <=>  (-a).x <= y0
        inequalities.append(_normalize_pair([-c for c in y[1:]], y[0]))
    inequalities.sort(key=lambda q: (q.normal, q.offset))
    return HPolyhedron(tuple(inequalities), tuple(equalities), n)


def h_to_v(h: HPolyhedron) -> VPolyhedron:
    """Vertices and extreme rays of a pointed, nonempty H-polyhedron."""
    n = h.dim_ambient
    _check_dim(n)
    rows = [_exact.integer_scale([1] + [0] * n)]
    for q in h.inequalities:
        rows.append(_exact.integer_scale([q.offset] + [-a for a in q.normal]))
    for q in h.equalities:
        r = _exact.integer_scale([q.offset] + [-a for a in q.normal])
        rows.append(r)
        rows.append(tuple(-x for x in r))
    if _exact.rank(rows) < n + 1:
        raise InvalidInput("polyhedron is not pointed")
    verts, rays = [], []
    for t, _mask in extreme_rays(rows, n + 1):
        if t[0] > 0:
            verts.append(tuple(Fraction(x, t[0]) for x in t[1:]))
        else:
            rays.append(t[1:])
    if not verts:
        raise InvalidInput("polyhedron is empty")
    return VPolyhedron(tuple(verts), tuple(rays))


def canonical(p: VPolyhedron) -> VPolyhedron:
    """Minimal V-representation: vertices and extreme rays only."""
    return h_to_v(v_to_h(p))


def contains(h: HPolyhedron, x: Sequence) -> bool:
    x = _point(x)
    return all(q.value(x) <= q.offset for q in h.inequalities) and \
        all(q.value(x) == q.offset for q in h.equalities)


# -- LP based routines (independent of the double description code) -----

def _lp_feasible(A_ub, b_ub, A_eq, b_eq, n_vars, free=False):
    return _lp.feasible_point(A_ub, b_ub, A_eq, b_eq, n_vars, free=free)


def _in_cone_hull(target: Sequence, points: list, rays: list, homogeneous: bool) -> bool:
    """Is ``target`` in conv(points) + cone(rays) (or cone(rays) if homogeneous)?"""
    n = len(target)
    cols = [list(p) for p in points] + [list(r) for r in rays]
    if not cols:
        return False if not homogeneous else all(x == 0 for x in target)
    n_vars = len(cols)
    A_eq = [[cols[j][i] for j in range(n_vars)] for i in range(n)]
    b_eq = list(target)
    if not homogeneous:
        A_eq.append([1] * len(points) + [0] * len(rays))
        b_eq.append(1)
    return _lp_feasible([], [], A_eq, b_eq, n_vars) is not None


def reduce_by_lp(p: VPolyhedron) -> VPolyhedron:
    """Drop redundant generators one at a time using exact LP feasibility."""
    rays = list(p.rays)
    k = 0
    while k < len(rays):
        others = rays[:k] + rays[k + 1:]
        if others and _in_cone_hull(rays[k], [], others, homogeneous=True):
            rays.pop(k)
        else:
            k += 1
    verts = list(p.vertices)
    k = 0
    while k < len(verts):
        others = verts[:k] + verts[k + 1:]
        if others and _in_cone_hull(verts[k], others, rays, homogeneous=False):
            verts.pop(k)
        else:
            k += 1
    return VPolyhedron(tuple(verts), tuple(rays))


def face_certificate(p: VPolyhedron, face_vertices, face_rays) -> tuple[Fraction, ...] | None:
    """A linear functional maximized on ``p`` exactly at the given face.

    ``p`` must be canonical and the face generators a subset of its own.
    Returns ``None`` when no such functional exists.
    """
    fv = {_point(v) for v in face_vertices}
    fr = {_exact.integer_scale(r) for r in face_rays}
    if not fv:
        return None
    fv_list = sorted(fv)
    v0 = fv_list[0]
    n = p.dim_ambient
    # c must be constant on the face: c is orthogonal to its edge directions
    along = [tuple(a - b for a, b in zip(v, v0)) for v in fv_list[1:]] + sorted(fr)
    along = [d for d in along if any(d)]
    basis = _exact.nullspace(along, n) if along else [
        tuple(int(i == j) for j in range(n)) for i in range(n)]
    rows = []
    for v in p.vertices:
        if v not in fv:
            d = tuple(a - b for a, b in zip(v, v0))
            rows.append([_exact.dot(d, b) for b in basis])
    for r in p.rays:
        if r not in fr:
            rows.append([_exact.dot(r, b) for b in basis])
    if not rows:
        return tuple(Fraction(0) for _ in range(n))
    pi = _lp.strict_solution(rows)
    if pi is None:
        return None
    c = tuple(sum((pi[k] * basis[k][i] for k in range(len(basis))), Fraction(0))
              for i in range(n))
    top = _exact.dot(c, v0)
    for v in p.vertices:
        val = _exact.dot(c, v)
        if (v in fv and val != top) or (v not in fv and val >= top):
            raise AssertionError("face certificate failed exact re-check")
    for r in p.rays:
        val = _exact.dot(c, r)
        if (r in fr and val != 0) or (r not in fr and val >= 0):
            raise AssertionError("face certificate failed exact re-check")
    return c


def incidence(p: VPolyhedron, h: HPolyhedron) -> list[frozenset[int]]:
    """For each inequality, the generator indices (vertices first, then rays) on it."""
    gens = [(v, True) for v in p.vertices] + [(r, False) for r in p.rays]
    out = []
    for q in h.inequalities:
        tight = set()
        for idx, (g, is_vertex) in enumerate(gens):
            val = q.value(g)
            if (is_vertex and val == q.offset) or (not is_vertex and val == 0):
                tight.add(idx)
        out.append(frozenset(tight))
    return out


def face_lattice(p: VPolyhedron, h: HPolyhedron | None = None) -> list[frozenset[int]]:
    """All nonempty faces of a canonical ``p`` as sets of generator indices.

    Indices ``0..len(vertices)-1`` are vertices and the rest are rays.
    The whole polyhedron is included.
    """
    if h is None:
        h = v_to_h(p)
    n_vert = len(p.vertices)
    full = frozenset(range(n_vert + len(p.rays)))
    facets = incidence(p, h)
    faces = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for f in frontier:
            for fac in facets:
                g = f & fac
                if g not in faces:
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    live = [f for f in faces if any(i < n_vert for i in f)]
    if len(live) == 0:
        raise InternalInconsistency("polyhedron without a nonempty face")
    return sorted(live, key=lambda f: (len(f), sorted(f)))
