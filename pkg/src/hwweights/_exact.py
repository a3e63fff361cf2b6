"""Exact rational helpers: parsing, formatting, integer scaling and
fraction-free elimination.

Nothing in here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"3"``, ``"-3/2"`` or an int/Fraction into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"rational {s!r} must be written as p or p/q, not decimal")
    return Fraction(s)


def fmt(q: Fraction | int) -> str:
    """Serialize a rational as ``"p"`` or ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_fractions(v: Iterable) -> Vector:
    return tuple(Fraction(x) for x in v)


def is_integer(q: Fraction) -> bool:
    return Fraction(q).denominator == 1


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), 0) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), 0) for col in cols) for row in a)


def integer_scale(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _integer_rows(m: Sequence[Sequence]) -> list[list[int]]:
    return [list(integer_scale(row)) for row in m]


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Rows are first scaled to integer vectors; scaling rows does not change
    the rank, and after that every intermediate stays in Z.
    """
    a = _integer_rows(m)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return [], []
    n_rows, n_cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a[:r], pivots


def nullspace(m: Sequence[Sequence], n_cols: int | None = None) -> list[tuple[int, ...]]:
    """Integer basis of the right nullspace {x : m x = 0}."""
    if n_cols is None:
        n_cols = len(m[0])
    rows, pivots = rref(m) if m else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(integer_scale(x))
    return basis


def row_space_basis(m: Sequence[Sequence]) -> list[tuple[int, ...]]:
    rows, _ = rref(m)
    return [integer_scale(r) for r in rows]


def inverse(m: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def solve_unique(m: Sequence[Sequence], b: Sequence) -> Vector | None:
    """Solve m x = b when the solution is unique; None if inconsistent."""
    n_cols = len(m[0])
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    rows, pivots = rref(aug)
    if n_cols in pivots:
        return None
    if len(pivots) != n_cols:
        raise ValueError("system is underdetermined")
    return tuple(row[n_cols] for row in rows)
