"""Seeded random highest weights, spread over several strata.

Coordinates are drawn from ``{-3..3} U {+-1/2, +-1/3, +-3/2}`` and then
conditioned so that a sample of size ``n`` cycles through dominant
integral, antidominant, simply-regular and wall weights.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .hwmodule import antidominant, simply_regular
from .rootsys import RootSystem, Weight

__all__ = ["POOL", "STRATA", "sample_weight", "sample_weights"]

POOL = tuple(Fraction(x) for x in range(-3, 4)) + tuple(
    Fraction(s * p, q) for p, q in ((1, 2), (1, 3), (3, 2)) for s in (1, -1))
STRATA = ("dominant", "antidominant", "simply_regular", "wall")

_MAX_TRIES = 200


def _draw(rng: random.Random, R: RootSystem, stratum: str) -> Weight:
    n = R.rank
    if stratum == "dominant":
        # small entries keep Weyl polytopes at desk scale in rank 3
        top = 2 if n <= 2 else 1
        return R.weight(rng.randint(0, top) for _ in range(n))
    if stratum == "antidominant":
        neg = [x for x in POOL if x < 0]
        for _ in range(_MAX_TRIES):
            lam = R.weight(rng.choice(neg) for _ in range(n))
            if antidominant(lam):
                return lam
        return R.weight([-1] * n)
    if stratum == "simply_regular":
        nz = [x for x in POOL if x != 0]
        coords = [rng.choice(nz) for _ in range(n)]
        # force at least one nonnegative integer so J_lam is not empty
        coords[rng.randrange(n)] = Fraction(rng.randint(1, 2))
        lam = R.weight(coords)
        assert simply_regular(lam)
        return lam
    coords = [rng.choice(POOL) for _ in range(n)]
    coords[rng.randrange(n)] = Fraction(0)
    return R.weight(coords)


def sample_weight(rng: random.Random, R: RootSystem, stratum: str) -> Weight:
    if stratum not in STRATA:
        raise ValueError(f"unknown stratum {stratum!r}")
    return _draw(rng, R, stratum)


def sample_weights(R: RootSystem, n: int, seed: int,
                   strata: tuple[str, ...] = STRATA) -> list[tuple[str, Weight]]:
    """``n`` weights from a ``random.Random(seed)`` stream, cycling over ``strata``."""
    rng = random.Random(seed)
    return [(strata[i % len(strata)], sample_weight(rng, R, strata[i % len(strata)]))
            for i in range(n)]
