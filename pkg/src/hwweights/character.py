"""Truncated formal characters.

A character is stored as a map from offsets ``k`` (the weight being
``lam - sum k_i alpha_i``) to integer coefficients, truncated at an
explicit offset height.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import _exact
from .errors import HypothesisFailure, InternalInconsistency, InvalidInput
from .hwmodule import TruncatedWeightSet, _height_key, offsets_up_to
from .rootsys import RootSystem, Weight
from .weyl import (ParabolicSubgroup, dot_action, enumerate_group, j_lambda, s_lambda_set,
                   wcf_condition_holds)

__all__ = [
    "FormalCharacter",
    "kostant_table",
    "verma_character",
    "wcf_character",
    "character_support",
    "weyl_dimension",
]

Offset = tuple[int, ...]


@dataclass
class FormalCharacter:
    lam: Weight
    depth: int
    coefficients: dict[Offset, int] = field(default_factory=dict)

    def __getitem__(self, k) -> int:
        return self.coefficients.get(tuple(k), 0)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (self.lam == other.lam and self.depth == other.depth
                and self._nonzero() == other._nonzero())

    def _nonzero(self) -> dict[Offset, int]:
        return {k: v for k, v in self.coefficients.items() if v}

    def total(self) -> int:
        return sum(self.coefficients.values())

    def to_json(self) -> dict:
        nz = self._nonzero()
        return {
            "lambda": self.lam.to_json(),
            "depth": self.depth,
            "weights": [{"offset": list(k), "mult": nz[k]} for k in sorted(nz, key=_height_key)],
        }


@lru_cache(maxsize=64)
def kostant_table(R: RootSystem, depth: int) -> dict[Offset, int]:
    """Kostant partition counts for every offset of height at most ``depth``.

    Coin-change recursion over the positive roots: each root is allowed
    any number of times, roots are processed one after another.
    """
    if depth < 0:
        raise InvalidInput("depth must be nonnegative")
    table = {k: 0 for k in offsets_up_to(R.rank, depth)}
    table[(0,) * R.rank] = 1
    order = sorted(table, key=_height_key)
    for beta in R.positive_roots:
        hb = sum(beta)
        for k in order:
            if sum(k) < hb:
                continue
            prev = tuple(a - b for a, b in zip(k, beta))
            if min(prev) >= 0:
                table[k] += table[prev]
    return table


def verma_character(lam: Weight, depth: int) -> FormalCharacter:
    return FormalCharacter(lam, depth, dict(kostant_table(lam.system, depth)))


def wcf_character(lam: Weight, depth: int) -> FormalCharacter:
    """``ch L(lam)`` as the alternating sum of ``ch M(w . lam)`` over ``W_{J_lam}``.

    Refuses unless ``{w : w . lam <= lam}`` equals ``W_{J_lam}``.
    """
    R = lam.system
    if not wcf_condition_holds(lam):
        extra = sorted(w.word_string() for w in
                       set(s_lambda_set(lam)) - set(enumerate_group(
                           ParabolicSubgroup(R, j_lambda(lam)))))
        raise HypothesisFailure(
            f"S_lambda != W_J_lambda for lambda = {lam}: extra elements {extra}")
    table = kostant_table(R, depth)
    acc: dict[Offset, int] = {k: 0 for k in table}
    lam_root = lam.root_coords()
    for w in enumerate_group(ParabolicSubgroup(R, j_lambda(lam))):
        mu = dot_action(w, lam)
        shift = tuple(a - b for a, b in zip(lam_root, mu.root_coords()))
        if any(x.denominator != 1 or x < 0 for x in shift):
            raise InternalInconsistency(f"{w.word_string()} . lam is not below lam")
        shift = tuple(int(x) for x in shift)
        hs = sum(shift)
        if hs > depth:
            continue
        sign = w.sign
        for k in acc:
            if sum(k) < hs:
                continue
            prev = tuple(a - b for a, b in zip(k, shift))
            if min(prev) >= 0:
                acc[k] += sign * table[prev]
    neg = [k for k, v in acc.items() if v < 0]
    if neg:
        raise InternalInconsistency(
            f"alternating sum has negative coefficients at {sorted(neg)[:5]} for lambda = {lam}")
    return FormalCharacter(lam, depth, {k: v for k, v in acc.items() if v})


def character_support(c: FormalCharacter) -> TruncatedWeightSet:
    """Offsets with positive coefficient, multiplicities attached."""
    return TruncatedWeightSet(c.lam, c.depth,
                              {k: v for k, v in c.coefficients.items() if v > 0})


def weyl_dimension(lam: Weight) -> int:
    """``prod (lam + rho, beta) / (rho, beta)`` over positive roots ``beta``."""
    R = lam.system
    if not lam.is_dominant_integral():
        raise InvalidInput(f"{lam} is not dominant integral")
    rho = R.rho()
    q = Fraction(1)
    for beta in R.positive_roots:
        b = R.root_weight(beta)
        q *= R.bilinear(lam + rho, b) / R.bilinear(rho, b)
    if q.denominator != 1:
        raise InternalInconsistency("Weyl dimension is not an integer")
    return int(q)
