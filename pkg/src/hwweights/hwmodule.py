"""Highest weight module descriptors and their sets of weights.

Every weight of a highest weight module with highest weight ``lam`` has the
form ``lam - sum k_i alpha_i`` with ``k`` a nonnegative integer vector; we
call ``k`` the *offset* and ``sum(k)`` its height.  All weight sets here
are truncated at an explicit height ``depth``.

Three independent routes to the weight set are provided:

``weights_hull_intersection``  (formula A)
    lattice points of ``lam - Z_+ Delta`` inside the convex hull, using the
    H-representation built from the vertex orbit and recession cone;
``weights_levi_shift``  (formula B)
    weights of the finite-dimensional Levi module ``L_J(lam)`` shifted by
    ``Z_+``-combinations of the positive roots outside the Levi;
``weights_integrable_decomposition``  (formula C)
    disjoint union of Levi weight sets ``wt L_J(lam - mu)`` over ``mu`` in
    ``Z_+ Delta_{I - J}``.

Here ``J = J(V)`` is the integrability set of the module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Sequence

from . import _exact
from .errors import InternalInconsistency, InvalidInput
from .rootsys import RootSystem, Weight
from .weyl import ParabolicSubgroup, enumerate_group, j_lambda

__all__ = [
    "HWModuleDescriptor",
    "Verma",
    "Simple",
    "ParabolicVerma",
    "TruncatedWeightSet",
    "LeviWeightSet",
    "AgreementReport",
    "j_lambda",
    "integrability_set",
    "antidominant",
    "simply_regular",
    "levi_weights",
    "weights_levi_shift",
    "weights_integrable_decomposition",
    "weights_hull_intersection",
    "wt_restricted",
    "formulas_agree",
    "weight_set",
    "in_main_hypothesis",
    "orbit_safe_stability",
    "offsets_up_to",
]

Offset = tuple[int, ...]
Kind = Literal["verma", "simple", "pverma"]


@dataclass(frozen=True)
class HWModuleDescriptor:
    """A highest weight module ``V`` with highest weight ``lam``.

    ``kind`` is ``"verma"``, ``"simple"`` or ``"pverma"``; for the parabolic
    Verma module ``M(lam, J')`` the set ``J'`` must lie in ``J_lam``.
    """

    lam: Weight
    kind: Kind
    J_prime: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.kind not in ("verma", "simple", "pverma"):
            raise InvalidInput(f"unknown module class {self.kind!r}")
        R = self.lam.system
        Jp = R.check_subset(self.J_prime)
        if self.kind != "pverma" and Jp:
            raise InvalidInput(f"J' is only meaningful for parabolic Verma modules")
        bad = Jp - j_lambda(self.lam)
        if bad:
            raise InvalidInput(
                f"parabolic Verma M(lam, J') needs J' inside J_lam = {sorted(j_lambda(self.lam))};"
                f" lam(h_i) is not a nonnegative integer for i in {sorted(bad)}")
        object.__setattr__(self, "J_prime", Jp)

    @property
    def system(self) -> RootSystem:
        return self.lam.system

    @property
    def integrability(self) -> frozenset[int]:
        return integrability_set(self)

    def label(self) -> str:
        if self.kind == "pverma":
            return "pverma:" + ",".join(str(j) for j in sorted(self.J_prime))
        return self.kind

    def __str__(self):
        return f"{self.label()}({self.system.name}; {self.lam})"

    def to_json(self) -> dict:
        return {"type": self.system.name, "lambda": self.lam.to_json(), "class": self.label()}


def Verma(lam: Weight) -> HWModuleDescriptor:
    return HWModuleDescriptor(lam, "verma")


def Simple(lam: Weight) -> HWModuleDescriptor:
    return HWModuleDescriptor(lam, "simple")


def ParabolicVerma(lam: Weight, J: Iterable[int]) -> HWModuleDescriptor:
    return HWModuleDescriptor(lam, "pverma", frozenset(J))


# -- predicates -----------------------------------------------------------

def integrability_set(m: HWModuleDescriptor) -> frozenset[int]:
    """``J(V)``: empty for Verma, ``J_lam`` for simple, ``J'`` for ``M(lam, J')``."""
    if m.kind == "verma":
        return frozenset()
    if m.kind == "simple":
        return j_lambda(m.lam)
    return m.J_prime


def antidominant(lam: Weight) -> bool:
    """No positive root ``alpha`` has ``(alpha, 2 lam + 2 rho)/(alpha, alpha) - 1`` in Z_+."""
    R = lam.system
    two_rho = R.rho() * 2
    v = lam * 2 + two_rho
    for beta in R.positive_roots:
        b = R.root_weight(beta)
        q = R.bilinear(b, v) / R.bilinear(b, b) - 1
        if q.denominator == 1 and q >= 0:
            return False
    return True


def simply_regular(lam: Weight) -> bool:
    """``(lam, alpha_i) != 0`` for every simple root."""
    return all(c != 0 for c in lam.coords)


# -- truncated sets ---------------------------------------------------------

def _height_key(k: Offset):
    return (sum(k), k)


@dataclass
class TruncatedWeightSet:
    """Weights ``lam - k`` with ``height(k) <= depth``.

    ``entries`` maps offsets to a multiplicity, or ``None`` when only the
    support is known.
    """

    lam: Weight
    depth: int
    entries: dict[Offset, int | None] = field(default_factory=dict)

    @property
    def offsets(self) -> frozenset[Offset]:
        return frozenset(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, item) -> bool:
        if isinstance(item, Weight):
            c = (self.lam - item).root_coords()
            if any(x.denominator != 1 for x in c):
                return False
            item = tuple(int(x) for x in c)
        return tuple(item) in self.entries

    def __eq__(self, other):
        if not isinstance(other, TruncatedWeightSet):
            return NotImplemented
        return (self.lam == other.lam and self.depth == other.depth
                and self.entries == other.entries)

    def sorted_offsets(self) -> list[Offset]:
        return sorted(self.entries, key=_height_key)

    def weights(self) -> list[Weight]:
        return [self.lam.minus_root_offset(k) for k in self.sorted_offsets()]

    def restrict(self, depth: int) -> "TruncatedWeightSet":
        return TruncatedWeightSet(self.lam, depth,
                                  {k: v for k, v in self.entries.items() if sum(k) <= depth})

    def support(self) -> "TruncatedWeightSet":
        return TruncatedWeightSet(self.lam, self.depth, {k: None for k in self.entries})

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "depth": self.depth,
            "weights": [{"offset": list(k), "mult": self.entries[k]} for k in self.sorted_offsets()],
        }


def offsets_up_to(n: int, depth: int, support: Iterable[int] | None = None) -> Iterator[Offset]:
    """All ``k`` in ``Z_+^n`` with ``sum(k) <= depth``, supported on ``support`` (1-based)."""
    allowed = [True] * n if support is None else [i + 1 in set(support) for i in range(n)]

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == n:
            yield prefix
            return
        top = left if allowed[i] else 0
        for v in range(top + 1):
            yield from rec(i + 1, left - v, prefix + (v,))

    yield from rec(0, depth, ())


# -- Levi modules -----------------------------------------------------------

@dataclass(frozen=True)
class LeviWeightSet:
    """Support of the finite-dimensional ``g_J``-module ``L_J(nu)``.

    ``offsets`` are relative to ``nu`` and supported on ``J``.
    """

    J: frozenset[int]
    nu: Weight
    offsets: frozenset[Offset]

    def weights(self) -> list[Weight]:
        return [self.nu.minus_root_offset(k) for k in sorted(self.offsets, key=_height_key)]


def levi_weights(nu: Weight, J: Iterable[int]) -> LeviWeightSet:
    """Weights of ``L_J(nu)``, by closing ``{nu}`` under ``alpha_i``-strings, ``i`` in ``J``.

    The weight set of a finite-dimensional module is the smallest
    saturated set containing the highest weight, so string closure
    reaches every weight and nothing else.
    """
    R = nu.system
    J = R.check_subset(J)
    for i in sorted(J):
        c = nu.coords[i - 1]
        if c.denominator != 1 or c < 0:
            raise InvalidInput(
                f"L_J(nu) is infinite-dimensional: nu(h_{i}) = {_exact.fmt(c)} is not in Z_+")
    n = R.rank
    A = R.cartan
    base = [int(c) if c.denominator == 1 else None for c in nu.coords]
    zero = (0,) * n
    seen = {zero}
    stack = [zero]
    while stack:
        k = stack.pop()
        for i in J:
            r = i - 1
            m = base[r] - sum(A[r][j] * k[j] for j in range(n))
            # the alpha_i-string through this weight spans m(h_i) steps
            steps = range(1, m + 1) if m > 0 else range(m, 0)
            for t in steps:
                kk = k[:r] + (k[r] + t,) + k[r + 1:]
                if kk[r] < 0:
                    raise InternalInconsistency(f"string closure left nu - Z_+ Delta at {kk}")
                if kk not in seen:
                    seen.add(kk)
                    stack.append(kk)
    return LeviWeightSet(J, nu, frozenset(seen))


# -- the three formulas -------------------------------------------------------

def _complement_roots(R: RootSystem, J: frozenset[int]) -> list[tuple[int, ...]]:
    inside = set(R.positive_roots_in(J))
    return [b for b in R.positive_roots if b not in inside]


def weights_levi_shift(m: HWModuleDescriptor, depth: int) -> TruncatedWeightSet:
    """Formula B: ``wt L_J(lam) - Z_+(Phi+ minus Phi+_J)`` truncated at ``depth``."""
    _check_depth(depth)
    R, J = m.system, integrability_set(m)
    found = {k for k in levi_weights(m.lam, J).offsets if sum(k) <= depth}
    shifts = _complement_roots(R, J)
    frontier = list(found)
    while frontier:
        nxt = []
        for k in frontier:
            h = sum(k)
            for b in shifts:
                if h + sum(b) > depth:
                    continue
                kk = tuple(x + y for x, y in zip(k, b))
                if kk not in found:
                    found.add(kk)
                    nxt.append(kk)
        frontier = nxt
    return TruncatedWeightSet(m.lam, depth, {k: None for k in found})


def weights_integrable_decomposition(m: HWModuleDescriptor, depth: int) -> TruncatedWeightSet:
    """Formula C: the disjoint union of ``wt L_J(lam - mu)``, ``mu`` in ``Z_+ Delta_{I-J}``."""
    _check_depth(depth)
    R, J = m.system, integrability_set(m)
    out: dict[Offset, None] = {}
    for mu in offsets_up_to(R.rank, depth, R.index_set - J):
        piece = levi_weights(m.lam.minus_root_offset(mu), J)
        for k in piece.offsets:
            kk = tuple(x + y for x, y in zip(mu, k))
            if sum(kk) > depth:
                continue
            if kk in out:
                raise InternalInconsistency(
                    f"Levi pieces overlap at offset {kk} for {m}; the union must be disjoint")
            out[kk] = None
    return TruncatedWeightSet(m.lam, depth, out)


def weights_hull_intersection(m: HWModuleDescriptor, depth: int) -> TruncatedWeightSet:
    """Formula A: lattice points ``lam - k`` (``k >= 0``) inside the weight hull.

    Points with a negative offset coordinate are never in the hull, which
    sits inside ``lam - cone(Phi+)``.
    """
    from .polyhedron import hull_h_rep

    _check_depth(depth)
    R = m.system
    h = hull_h_rep(m)
    lam_root = m.lam.root_coords()
    out = {}
    for k in offsets_up_to(R.rank, depth):
        x = tuple(a - b for a, b in zip(lam_root, k))
        if all(q.value(x) <= q.offset for q in h.inequalities) and \
                all(q.value(x) == q.offset for q in h.equalities):
            out[k] = None
    return TruncatedWeightSet(m.lam, depth, out)


FORMULAS = {
    "A": weights_hull_intersection,
    "B": weights_levi_shift,
    "C": weights_integrable_decomposition,
}


def weight_set(m: HWModuleDescriptor, depth: int, formula: str = "B") -> TruncatedWeightSet:
    try:
        fn = FORMULAS[formula.upper()]
    except KeyError:
        raise InvalidInput(f"unknown formula {formula!r}; choose A, B or C") from None
    return fn(m, depth)


def wt_restricted(m: HWModuleDescriptor, J: Iterable[int], depth: int,
                  formula: str = "B") -> TruncatedWeightSet:
    """``wt_J V``: weights whose offset is supported on ``Delta_J``."""
    J = m.system.check_subset(J)
    full = weight_set(m, depth, formula)
    keep = {k: v for k, v in full.entries.items()
            if all(k[i] == 0 for i in range(len(k)) if i + 1 not in J)}
    return TruncatedWeightSet(m.lam, depth, keep)


@dataclass
class AgreementReport:
    descriptor: HWModuleDescriptor
    depth: int
    sets: dict[str, TruncatedWeightSet]
    in_hypothesis: bool

    @property
    def agree(self) -> bool:
        vals = [s.offsets for s in self.sets.values()]
        return all(v == vals[0] for v in vals)

    def differences(self) -> dict[str, list[Offset]]:
        names = sorted(self.sets)
        out = {}
        for a in names:
            for b in names:
                if a < b:
                    d = self.sets[a].offsets ^ self.sets[b].offsets
                    if d:
                        out[f"{a}^{b}"] = sorted(d, key=_height_key)
        return out

    def to_json(self) -> dict:
        return {
            "module": self.descriptor.to_json(),
            "depth": self.depth,
            "in_hypothesis": self.in_hypothesis,
            "agree": self.agree,
            "formulas": {k: self.sets[k].to_json() for k in sorted(self.sets)},
            "differences": {k: [list(o) for o in v] for k, v in self.differences().items()},
        }


def in_main_hypothesis(m: HWModuleDescriptor) -> bool:
    """``|J_lam - J(V)| <= 1`` or ``V`` is a parabolic Verma module."""
    if m.kind in ("verma", "pverma"):
        return True
    return len(j_lambda(m.lam) - integrability_set(m)) <= 1


def formulas_agree(m: HWModuleDescriptor, depth: int,
                   which: Sequence[str] = ("A", "B", "C")) -> AgreementReport:
    sets = {f.upper(): weight_set(m, depth, f) for f in which}
    return AgreementReport(m, depth, sets, in_main_hypothesis(m))


def orbit_safe_stability(ws: TruncatedWeightSet, J: Iterable[int]) -> list[Offset]:
    """Offsets whose ``W_J``-orbit stays within the truncation but leaves the set.

    ``J`` must be contained in ``J_lam`` so that ``W_J`` acts on offsets.
    An empty result means the set is ``W_J``-stable on its safe region.
    """
    R = ws.lam.system
    J = R.check_subset(J)
    if not J <= j_lambda(ws.lam):
        raise InvalidInput("W_J acts on offsets only when J lies in J_lam")
    lam_root = ws.lam.root_coords()
    group = enumerate_group(ParabolicSubgroup(R, J))
    bad = []
    for k in ws.offsets:
        x = tuple(a - b for a, b in zip(lam_root, k))
        images = []
        safe = True
        for w in group:
            y = w.act_root(x)
            kk = tuple(a - b for a, b in zip(lam_root, y))
            if any(Fraction(v).denominator != 1 or v < 0 for v in kk) or sum(kk) > ws.depth:
                safe = False
                break
            images.append(tuple(int(v) for v in kk))
        if safe and any(kk not in ws.entries for kk in images):
            bad.append(k)
    return sorted(bad, key=_height_key)


def _check_depth(depth: int) -> None:
    if not isinstance(depth, int) or depth < 0:
        raise InvalidInput(f"depth must be a nonnegative integer, got {depth!r}")
