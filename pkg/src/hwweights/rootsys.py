"""Root systems of semisimple Lie algebras and exact weight arithmetic.

Weights are stored in the fundamental-weight basis, so coordinate ``i``
of a weight ``lam`` is ``lam(h_i)``.  Simple roots are indexed ``1..n``
in every public function; tuples are 0-indexed internally.

Normalization: within each simple component long roots have
``(alpha, alpha) = 2``.

>>> R = root_system("A2")
>>> R.positive_roots
((1, 0), (0, 1), (1, 1))
>>> R.root_coords(R.fundamental_weight(1))
(Fraction(2, 3), Fraction(1, 3))
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _exact
from .errors import InvalidInput

__all__ = [
    "RootSystemSpec",
    "RootSystem",
    "Weight",
    "parse_spec",
    "build_root_system",
    "root_system",
]

_F = Fraction
_HALF = Fraction(1, 2)

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (2, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class RootSystemSpec:
    """Cartan type of a semisimple algebra, e.g. ``(("A", 1), ("A", 1))``."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.components:
            raise InvalidInput("root system needs at least one simple component")
        for fam, n in self.components:
            if fam not in _RANK_BOUNDS:
                raise InvalidInput(f"unknown Cartan family {fam!r}; expected one of A-G")
            lo, hi = _RANK_BOUNDS[fam]
            if not isinstance(n, int) or n < lo or (hi is not None and n > hi):
                legal = f"rank >= {lo}" if hi is None else (
                    f"rank {lo}" if lo == hi else f"rank in {lo}..{hi}")
                raise InvalidInput(f"type {fam}{n} is not valid: family {fam} needs {legal}")

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    @property
    def name(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.components)


def parse_spec(text: str) -> RootSystemSpec:
    """Parse strings like ``"A2"``, ``"b3"`` or ``"A1xA1"``."""
    parts = [p.strip() for p in re.split(r"[xX]", str(text or "")) if p.strip()]
    if not parts:
        raise InvalidInput(f"cannot parse root system {text!r}")
    comps = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", p)
        if not m:
            raise InvalidInput(f"cannot parse root system component {p!r} in {text!r}")
        comps.append((m.group(1).upper(), int(m.group(2))))
    return RootSystemSpec(tuple(comps))


def _component_form(fam: str, n: int) -> list[list[Fraction]]:
    """Symmetrized form (alpha_i, alpha_j) of one simple component."""
    b = [[_F(0)] * n for _ in range(n)]
    norms = [_F(2)] * n
    edges: list[tuple[int, int, Fraction]] = []
    if fam == "A":
        edges = [(i, i + 1, _F(-1)) for i in range(n - 1)]
    elif fam == "B":
        norms[n - 1] = _F(1)
        edges = [(i, i + 1, _F(-1)) for i in range(n - 1)]
    elif fam == "C":
        norms = [_F(1)] * (n - 1) + [_F(2)]
        edges = [(i, i + 1, -_HALF) for i in range(n - 2)] + [(n - 2, n - 1, _F(-1))]
    elif fam == "D":
        if n >= 3:
            edges = [(i, i + 1, _F(-1)) for i in range(n - 2)] + [(n - 3, n - 1, _F(-1))]
    elif fam == "E":
        # Bourbaki labels: chain 1-3-4-5-..., node 2 attached to node 4
        chain = [0, 2] + list(range(3, n))
        edges = [(chain[k], chain[k + 1], _F(-1)) for k in range(len(chain) - 1)]
        edges.append((1, 3, _F(-1)))
    elif fam == "F":
        norms = [_F(2), _F(2), _F(1), _F(1)]
        edges = [(0, 1, _F(-1)), (1, 2, _F(-1)), (2, 3, -_HALF)]
    elif fam == "G":
        # alpha_1 short; highest root 3 alpha_1 + 2 alpha_2
        norms = [_F(2, 3), _F(2)]
        edges = [(0, 1, _F(-1))]
    for i in range(n):
        b[i][i] = norms[i]
    for i, j, v in edges:
        b[i][j] = b[j][i] = v
    return b


class RootSystem:
    """Immutable Cartan data for a semisimple root system.

    Attributes
    ----------
    cartan : tuple of tuple of int
        ``cartan[i][j] = alpha_j(h_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.
        Column ``j`` is the simple root ``alpha_j`` in the fundamental basis.
    form : tuple of tuple of Fraction
        Symmetrized bilinear form on simple roots.
    positive_roots : tuple of tuple of int
        Positive roots in simple-root coordinates, sorted by height then
        lexicographically.
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        self.name = spec.name
        n = spec.rank
        self.rank = n
        form = [[_F(0)] * n for _ in range(n)]
        off = 0
        for fam, k in spec.components:
            block = _component_form(fam, k)
            for i in range(k):
                for j in range(k):
                    form[off + i][off + j] = block[i][j]
            off += k
        self.form = tuple(tuple(r) for r in form)
        cart = []
        for i in range(n):
            row = []
            for j in range(n):
                v = 2 * form[i][j] / form[i][i]
                assert v.denominator == 1
                row.append(int(v))
            cart.append(tuple(row))
        self.cartan = tuple(cart)
        self.cartan_inv = _exact.inverse(self.cartan)
        self.positive_roots = self._close_positive_roots()
        self._root_set = frozenset(self.positive_roots)

    # -- construction ---------------------------------------------------
    def _close_positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    img = self.reflect_root_coords(i + 1, beta)
                    if all(c >= 0 for c in img) and img not in found:
                        found.add(img)
                        nxt.append(img)
            frontier = nxt
        return tuple(sorted(found, key=lambda b: (sum(b), b)))

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.name == self.name

    def __hash__(self):
        return hash(("RootSystem", self.name))

    def __repr__(self):
        return f"RootSystem({self.name!r})"

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    # -- basis changes ----------------------------------------------------
    def fund_from_root(self, c: Sequence) -> tuple:
        """Fundamental coordinates of ``sum c_j alpha_j``."""
        return tuple(sum((self.cartan[i][j] * c[j] for j in range(self.rank)), 0)
                     for i in range(self.rank))

    def root_from_fund(self, m: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((self.cartan_inv[i][j] * m[j] for j in range(self.rank)), _F(0))
                     for i in range(self.rank))

    def reflect_root_coords(self, i: int, c: Sequence) -> tuple:
        """``s_i`` applied to a root-coordinate vector."""
        k = i - 1
        pairing = sum((self.cartan[k][j] * c[j] for j in range(self.rank)), 0)
        out = list(c)
        out[k] = out[k] - pairing
        return tuple(out)

    # -- weights --------------------------------------------------------
    def weight(self, coords: Iterable) -> "Weight":
        coords = tuple(_exact.parse_rational(x) for x in coords)
        if len(coords) != self.rank:
            raise InvalidInput(
                f"weight for {self.name} needs {self.rank} coordinates, got {len(coords)}")
        return Weight(coords, self)

    def zero(self) -> "Weight":
        return Weight((_F(0),) * self.rank, self)

    def from_root_coords(self, c: Sequence) -> "Weight":
        return Weight(tuple(_F(x) for x in self.fund_from_root(c)), self)

    def simple_root(self, i: int) -> "Weight":
        self._check_index(i)
        return Weight(tuple(_F(self.cartan[r][i - 1]) for r in range(self.rank)), self)

    def fundamental_weight(self, i: int) -> "Weight":
        self._check_index(i)
        return Weight(tuple(_F(int(r == i - 1)) for r in range(self.rank)), self)

    def rho(self, J: Iterable[int] | None = None) -> "Weight":
        """``rho_J``, the sum of fundamental weights over ``J`` (all of I by default)."""
        J = self.index_set if J is None else self.check_subset(J)
        return Weight(tuple(_F(int(r + 1 in J)) for r in range(self.rank)), self)

    def root_coords(self, mu: "Weight") -> tuple[Fraction, ...]:
        """Coefficients ``c`` with ``mu = sum c_i alpha_i``.

        The Cartan matrix of a semisimple system is invertible, so every
        rational weight lies in the rational span of the simple roots.
        """
        self._check_same(mu)
        return self.root_from_fund(mu.coords)

    def eval_coroot(self, mu: "Weight", i: int) -> Fraction:
        """``mu(h_i)``."""
        self._check_same(mu)
        self._check_index(i)
        return mu.coords[i - 1]

    def bilinear(self, mu: "Weight", nu: "Weight") -> Fraction:
        """The invariant form ``(mu, nu)`` normalized with long roots of length 2."""
        self._check_same(mu)
        self._check_same(nu)
        # (omega_i, alpha_j) = delta_ij (alpha_j, alpha_j) / 2
        c = self.root_coords(nu)
        return sum((mu.coords[j] * c[j] * self.form[j][j] / 2 for j in range(self.rank)), _F(0))

    def root_weight(self, beta: Sequence[int]) -> "Weight":
        return self.from_root_coords(beta)

    def height(self, c: Sequence) -> int | Fraction:
        return sum(c)

    def is_root(self, c: Sequence[int]) -> bool:
        c = tuple(c)
        return c in self._root_set or tuple(-x for x in c) in self._root_set

    def positive_roots_in(self, J: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        """Positive roots supported on ``Delta_J``."""
        J = self.check_subset(J)
        return tuple(b for b in self.positive_roots
                     if all(b[k] == 0 for k in range(self.rank) if k + 1 not in J))

    def highest_root(self) -> tuple[int, ...]:
        if len(self.spec.components) != 1:
            raise InvalidInput("highest root is only defined for a simple type")
        return self.positive_roots[-1]

    # -- validation -----------------------------------------------------
    def _check_index(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.rank):
            raise InvalidInput(f"index {i!r} outside I = 1..{self.rank}")

    def check_subset(self, J: Iterable[int]) -> frozenset[int]:
        J = frozenset(J)
        bad = [j for j in J if not (isinstance(j, int) and 1 <= j <= self.rank)]
        if bad:
            raise InvalidInput(f"indices {sorted(bad)} outside I = 1..{self.rank}")
        return J

    def _check_same(self, mu: "Weight") -> None:
        if mu.system != self:
            raise InvalidInput(
                f"weight belongs to {mu.system.name}, not {self.name}")

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "type": self.name,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(b) for b in self.positive_roots],
            "form": [[_exact.fmt(x) for x in r] for r in self.form],
        }


@dataclass(frozen=True)
class Weight:
    """A weight in the fundamental basis, with exact rational coordinates."""

    coords: tuple[Fraction, ...]
    system: RootSystem = field(repr=False)

    def _same(self, other: "Weight") -> None:
        if not isinstance(other, Weight):
            raise TypeError(f"expected Weight, got {type(other).__name__}")
        if other.system != self.system:
            raise InvalidInput(
                f"weights from different root systems: {self.system.name} vs {other.system.name}")

    def __add__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: "Weight") -> "Weight":
        self._same(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.system)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.system)

    def __mul__(self, q) -> "Weight":
        q = _exact.parse_rational(q)
        return Weight(tuple(a * q for a in self.coords), self.system)

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Fraction:
        """``lam[i] == lam(h_i)`` with 1-based ``i``."""
        return self.system.eval_coroot(self, i)

    def root_coords(self) -> tuple[Fraction, ...]:
        return self.system.root_coords(self)

    def minus_root_offset(self, k: Sequence[int]) -> "Weight":
        """``self - sum k_i alpha_i``."""
        d = self.system.fund_from_root(k)
        return Weight(tuple(a - b for a, b in zip(self.coords, d)), self.system)

    def is_dominant_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coords)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            coef = "" if c == 1 else "-" if c == -1 else _exact.fmt(c)
            terms.append(f"{coef}w{i}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> list[str]:
        return [_exact.fmt(c) for c in self.coords]


@lru_cache(maxsize=None)
def _build_cached(spec: RootSystemSpec) -> RootSystem:
    return RootSystem(spec)


def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Build (and cache) the root system of ``spec``."""
    return _build_cached(spec)


def root_system(text: str | RootSystemSpec | RootSystem) -> RootSystem:
    """Convenience: ``root_system("B2")``."""
    if isinstance(text, RootSystem):
        return text
    if isinstance(text, RootSystemSpec):
        return build_root_system(text)
    return build_root_system(parse_spec(text))
