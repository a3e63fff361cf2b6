"""Weight multiplicities of simple modules from the contravariant form.

Vectors ``f_w v = f_{w_1} f_{w_2} ... f_{w_k} v_lam`` for lowering words
``w`` span each weight space of the Verma module.  The form with
``<v_lam, v_lam> = 1`` and ``e_i`` adjoint to ``f_i`` is evaluated using
only ``[e_i, f_j] = delta_ij h_i`` and ``e_i v_lam = 0``:

    e_i f_w v_lam = sum over positions p with w_p = i of
                    (lam - sum_{q > p} alpha_{w_q})(h_i) * f_{w minus p} v_lam.

The multiplicity of ``lam - k`` in ``L(lam)`` is the rank of the Gram
matrix on all words of offset ``k``: a form restricted to a spanning set
has the same rank as on the space, and the radical of the form is the
maximal proper submodule.  Nothing here uses the character or weight-set
code being checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from . import _exact, config
from .errors import CapExceeded, InvalidInput
from .hwmodule import TruncatedWeightSet, offsets_up_to
from .rootsys import RootSystem, Weight

__all__ = [
    "words_for_offset",
    "pairing_value",
    "GramMatrix",
    "gram_matrix",
    "simple_multiplicity",
    "verma_multiplicity",
    "oracle_weight_support",
    "FormEvaluator",
]

Word = tuple[int, ...]


def words_for_offset(k: Sequence[int]) -> list[Word]:
    """All distinct lowering words whose letters sum to ``k`` (1-based letters)."""
    letters = [i + 1 for i, c in enumerate(k) for _ in range(c)]
    return sorted(set(permutations(letters)))


def _offset(R: RootSystem, w: Word) -> tuple[int, ...]:
    k = [0] * R.rank
    for i in w:
        k[i - 1] += 1
    return tuple(k)


class FormEvaluator:
    """Memoized contravariant form for one highest weight."""

    def __init__(self, lam: Weight):
        self.lam = lam
        self.R = lam.system
        self._memo: dict[tuple[Word, Word], Fraction] = {}

    def __call__(self, u: Word, v: Word) -> Fraction:
        u, v = tuple(u), tuple(v)
        for x in u + v:
            if not 1 <= x <= self.R.rank:
                raise InvalidInput(f"letter {x} outside 1..{self.R.rank}")
        if sorted(u) != sorted(v):
            return Fraction(0)
        return self._pair(u, v)

    def _pair(self, u: Word, v: Word) -> Fraction:
        if not u:
            return Fraction(1)
        key = (u, v)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        i = u[0]
        row = self.R.cartan[i - 1]
        total = Fraction(0)
        # weight of f_{v_{p+1}} ... f_{v_k} v_lam, evaluated on h_i
        level = self.lam.coords[i - 1]
        for p in range(len(v) - 1, -1, -1):
            if v[p] == i:
                total += level * self._pair(u[1:], v[:p] + v[p + 1:])
            level -= row[v[p] - 1]
        self._memo[key] = total
        return total


def pairing_value(u: Sequence[int], v: Sequence[int], lam: Weight) -> Fraction:
    """``<f_u v_lam, f_v v_lam>``; zero when the offsets differ."""
    return FormEvaluator(lam)(tuple(u), tuple(v))


@dataclass
class GramMatrix:
    lam: Weight
    offset: tuple[int, ...]
    words: list[Word]
    entries: list[list[Fraction]]

    @property
    def rank(self) -> int:
        return _exact.rank(self.entries) if self.words else 0

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "offset": list(self.offset),
            "words": [list(w) for w in self.words],
            "entries": [[_exact.fmt(x) for x in row] for row in self.entries],
        }


def _check_cap(R: RootSystem, height: int) -> None:
    cap = config.oracle_depth(R.rank)
    if height > cap:
        raise CapExceeded(f"oracle offset height {height} in rank {R.rank}", cap, height)


def gram_matrix(lam: Weight, k: Sequence[int], form: FormEvaluator | None = None) -> GramMatrix:
    R = lam.system
    k = tuple(int(x) for x in k)
    if len(k) != R.rank or min(k, default=0) < 0:
        raise InvalidInput(f"offset {k} is not in Z_+^{R.rank}")
    _check_cap(R, sum(k))
    form = FormEvaluator(lam) if form is None else form
    words = words_for_offset(k)
    n = len(words)
    M = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            M[a][b] = M[b][a] = form._pair(words[a], words[b])
    return GramMatrix(lam, k, words, M)


def simple_multiplicity(lam: Weight, k: Sequence[int], form: FormEvaluator | None = None) -> int:
    """``dim L(lam)_{lam - k}`` as the rank of the Gram matrix."""
    return gram_matrix(lam, k, form).rank


def verma_multiplicity(R: RootSystem, k: Sequence[int]) -> int:
    """Number of multisets of positive roots summing to ``k``, by direct search."""
    k = tuple(int(x) for x in k)
    if len(k) != R.rank or min(k, default=0) < 0:
        raise InvalidInput(f"offset {k} is not in Z_+^{R.rank}")
    roots = R.positive_roots

    def count(rest: tuple[int, ...], start: int) -> int:
        if not any(rest):
            return 1
        n = 0
        for j in range(start, len(roots)):
            nxt = tuple(a - b for a, b in zip(rest, roots[j]))
            if min(nxt) >= 0:
                n += count(nxt, j)
        return n

    return count(k, 0)


def oracle_weight_support(lam: Weight, depth: int) -> TruncatedWeightSet:
    """Offsets of height at most ``depth`` with nonzero Gram rank."""
    R = lam.system
    if depth < 0:
        raise InvalidInput("depth must be nonnegative")
    _check_cap(R, depth)
    form = FormEvaluator(lam)
    out = {}
    for k in offsets_up_to(R.rank, depth):
        r = simple_multiplicity(lam, k, form)
        if r:
            out[k] = r
    return TruncatedWeightSet(lam, depth, out)
