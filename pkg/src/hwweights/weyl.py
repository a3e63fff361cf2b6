"""Weyl groups, parabolic subgroups and their actions on weights.

Elements are found by breadth-first search over simple reflections and
deduplicated by their action matrix.  Enumeration order is by length,
then by the lexicographically smallest reduced word, which is also the
word kept on each element.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _exact, config
from .errors import CapExceeded, InvalidInput
from .rootsys import RootSystem, Weight

__all__ = [
    "WeylElement",
    "ParabolicSubgroup",
    "reflect",
    "enumerate_group",
    "full_group",
    "element_from_word",
    "j_lambda",
    "is_below",
    "group_order",
    "orbit",
    "dot_action",
    "s_lambda_set",
    "s_lambda_weights",
    "wcf_condition_holds",
    "setwise_stabilizer",
    "parse_word",
]

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _fund_reflection(R: RootSystem, i: int) -> Matrix:
    # s_i m = m - m_i * alpha_i, with alpha_i = column i of the Cartan matrix
    n, k = R.rank, i - 1
    return tuple(tuple(int(r == c) - (R.cartan[r][k] if c == k else 0) for c in range(n))
                 for r in range(n))


def _root_reflection(R: RootSystem, i: int) -> Matrix:
    # s_i c = c - <c, h_i> e_i
    n, k = R.rank, i - 1
    return tuple(tuple(int(r == c) - (R.cartan[k][c] if r == k else 0) for c in range(n))
                 for r in range(n))


def _mul(a: Matrix, b: Matrix) -> Matrix:
    return _exact.mat_mul(a, b)


def _times_fund_reflection(R: RootSystem, m: Matrix, i: int) -> Matrix:
    # m * s_i only changes column i
    k, n = i - 1, R.rank
    col = [sum(m[r][j] * ((j == k) - R.cartan[j][k]) for j in range(n)) for r in range(n)]
    return tuple(row[:k] + (col[r],) + row[k + 1:] for r, row in enumerate(m))


def _times_root_reflection(R: RootSystem, m: Matrix, i: int) -> Matrix:
    # (m * s_i)[:, c] = m[:, c] - m[:, i] * a_ic
    k, n = i - 1, R.rank
    a = R.cartan[k]
    return tuple(tuple(row[c] - row[k] * a[c] for c in range(n)) for row in m)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W, carrying a reduced word and its action matrices.

    ``matrix`` acts on fundamental-basis coordinates, ``root_matrix`` on
    simple-root coordinates; both are integral.
    """

    system: RootSystem
    word: tuple[int, ...]
    matrix: Matrix
    root_matrix: Matrix
    length: int

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and other.system == self.system
                and other.matrix == self.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.system.name}, {self.word_string()!r})"

    @property
    def is_identity(self) -> bool:
        return self.matrix == _identity(self.system.rank)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def word_string(self) -> str:
        return ".".join(f"s{i}" for i in self.word) if self.word else "e"

    def act(self, mu: Weight) -> Weight:
        if mu.system != self.system:
            raise InvalidInput("Weyl element and weight belong to different root systems")
        return Weight(tuple(Fraction(x) for x in _exact.mat_vec(self.matrix, mu.coords)),
                      self.system)

    def act_root(self, c: Sequence) -> tuple:
        """Action on a vector given in simple-root coordinates."""
        return _exact.mat_vec(self.root_matrix, c)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """``self * other`` (``other`` acts first). The word is not reduced."""
        return WeylElement(self.system, self.word + other.word,
                           _mul(self.matrix, other.matrix),
                           _mul(self.root_matrix, other.root_matrix),
                           inversion_count(self.system, _mul(self.root_matrix, other.root_matrix)))

    def to_json(self) -> str:
        return self.word_string()


def inversion_count(R: RootSystem, root_matrix: Matrix) -> int:
    """Number of positive roots sent to negative roots."""
    count = 0
    for beta in R.positive_roots:
        img = _exact.mat_vec(root_matrix, beta)
        if any(x < 0 for x in img):
            count += 1
    return count


def element_from_word(R: RootSystem, word: Iterable[int]) -> WeylElement:
    word = tuple(word)
    m = _identity(R.rank)
    rm = _identity(R.rank)
    for i in word:
        if not 1 <= i <= R.rank:
            raise InvalidInput(f"simple reflection s{i} outside 1..{R.rank}")
        m = _mul(m, _fund_reflection(R, i))
        rm = _mul(rm, _root_reflection(R, i))
    return WeylElement(R, word, m, rm, inversion_count(R, rm))


def parse_word(R: RootSystem, text: str) -> WeylElement:
    """Parse ``"s1.s3.s2"`` (``"e"`` or ``""`` for the identity)."""
    text = text.strip()
    if text in ("", "e", "1"):
        return element_from_word(R, ())
    word = []
    for tok in text.split("."):
        tok = tok.strip()
        if not tok.startswith("s") or not tok[1:].isdigit():
            raise InvalidInput(f"cannot parse Weyl word token {tok!r}")
        word.append(int(tok[1:]))
    return element_from_word(R, word)


def group_order(R: RootSystem, J: Iterable[int] | None = None) -> int:
    """``|W_J|`` from the product over positive roots of (ht + 1) / ht."""
    J = R.index_set if J is None else R.check_subset(J)
    q = Fraction(1)
    for beta in R.positive_roots_in(J):
        h = sum(beta)
        q *= Fraction(h + 1, h)
    assert q.denominator == 1
    return int(q)


@dataclass(frozen=True)
class ParabolicSubgroup:
    """The subgroup ``W_J`` generated by ``{s_i : i in J}``."""

    system: RootSystem
    J: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "J", self.system.check_subset(self.J))

    @property
    def order(self) -> int:
        return group_order(self.system, self.J)

    def elements(self, cap: int | None = None) -> tuple[WeylElement, ...]:
        return enumerate_group(self, cap)

    def contains(self, w: WeylElement) -> bool:
        return w in set(self.elements())


_CACHE: dict[tuple[str, frozenset[int]], tuple[WeylElement, ...]] = {}


def enumerate_group(subgroup: ParabolicSubgroup, cap: int | None = None) -> tuple[WeylElement, ...]:
    """All elements of ``W_J``, each exactly once, in length-then-word order."""
    R, J = subgroup.system, subgroup.J
    cap = config.enum_cap() if cap is None else cap
    order = subgroup.order
    if order > cap:
        raise CapExceeded(f"|W_J| for {R.name}, J={sorted(J)}", cap, order)
    key = (R.name, J)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    gens = sorted(J)
    ident = _identity(R.rank)
    e = WeylElement(R, (), ident, ident, 0)
    seen = {ident}
    out = [e]
    layer = [e]
    length = 0
    while layer:
        length += 1
        nxt = []
        for w in layer:
            for i in gens:
                m = _times_fund_reflection(R, w.matrix, i)
                if m in seen:
                    continue
                seen.add(m)
                rm = _times_root_reflection(R, w.root_matrix, i)
                nxt.append(WeylElement(R, w.word + (i,), m, rm, length))
        # first discovery in this scan order is the lex-smallest reduced word
        nxt.sort(key=lambda x: x.word)
        out.extend(nxt)
        layer = nxt
    if len(out) != order:
        raise AssertionError(f"enumerated {len(out)} elements, expected {order}")
    result = tuple(out)
    _CACHE[key] = result
    return result


def full_group(R: RootSystem, cap: int | None = None) -> tuple[WeylElement, ...]:
    return enumerate_group(ParabolicSubgroup(R, R.index_set), cap)


def reflect(i: int, mu: Weight) -> Weight:
    """``s_i mu = mu - mu(h_i) alpha_i``."""
    R = mu.system
    return mu - R.simple_root(i) * R.eval_coroot(mu, i)


def orbit(subgroup: ParabolicSubgroup, lam: Weight, cap: int | None = None) -> tuple[Weight, ...]:
    """``W_J(lam)`` without repeats, in the element enumeration order."""
    seen: dict[Weight, None] = {}
    for w in enumerate_group(subgroup, cap):
        seen.setdefault(w.act(lam), None)
    return tuple(seen)


def dot_action(w: WeylElement, lam: Weight) -> Weight:
    """``w . lam = w(lam + rho) - rho``."""
    rho = lam.system.rho()
    return w.act(lam + rho) - rho


def is_below(mu: Weight, lam: Weight) -> bool:
    """``mu <= lam`` in the root-lattice order: ``lam - mu`` in Z_+ Delta."""
    c = (lam - mu).root_coords()
    return all(x.denominator == 1 and x >= 0 for x in c)


def s_lambda_set(lam: Weight, cap: int | None = None) -> tuple[WeylElement, ...]:
    """Elements ``w`` of W with ``w . lam <= lam`` (always contains 1)."""
    return tuple(w for w in full_group(lam.system, cap) if is_below(dot_action(w, lam), lam))


def s_lambda_weights(lam: Weight, cap: int | None = None) -> tuple[Weight, ...]:
    """The same set read at weight level: distinct ``w . lam <= lam``."""
    seen: dict[Weight, None] = {}
    for w in s_lambda_set(lam, cap):
        seen.setdefault(dot_action(w, lam), None)
    return tuple(seen)


def j_lambda(lam: Weight) -> frozenset[int]:
    """Indices ``i`` with ``lam(h_i)`` a nonnegative integer."""
    return frozenset(i + 1 for i, c in enumerate(lam.coords) if c.denominator == 1 and c >= 0)


def wcf_condition_holds(lam: Weight, cap: int | None = None) -> bool:
    """Whether ``{w : w . lam <= lam}`` is exactly ``W_{J_lam}``."""
    S = set(s_lambda_set(lam, cap))
    WJ = set(enumerate_group(ParabolicSubgroup(lam.system, j_lambda(lam)), cap))
    return S == WJ


def _ray_key(v: Sequence) -> tuple[int, ...]:
    return _exact.integer_scale(v)


def setwise_stabilizer(points, system: RootSystem | None = None,
                       cap: int | None = None) -> tuple[WeylElement, ...]:
    """Elements of W mapping a finite weight set, or a polyhedron, to itself.

    ``points`` is either an iterable of :class:`Weight` or an object with
    ``vertices`` and ``rays`` in simple-root coordinates (as produced by
    :mod:`hwweights.polyhedron`).  For a polyhedron the vertex set and the
    set of normalized extreme rays must both be preserved, so pass a
    reduced representation.
    """
    if hasattr(points, "vertices") and hasattr(points, "rays"):
        if system is None:
            raise InvalidInput("a root system is required to act on a polyhedron")
        verts = {tuple(Fraction(x) for x in v) for v in points.vertices}
        rays = {_ray_key(r) for r in points.rays}
        out = []
        for w in full_group(system, cap):
            if all(tuple(Fraction(x) for x in w.act_root(v)) in verts for v in verts) and \
                    all(_ray_key(w.act_root(r)) in rays for r in rays):
                out.append(w)
        return tuple(out)
    pts = set(points)
    if not pts:
        raise InvalidInput("empty point set has no meaningful stabilizer")
    R = next(iter(pts)).system if system is None else system
    return tuple(w for w in full_group(R, cap) if all(w.act(p) in pts for p in pts))
