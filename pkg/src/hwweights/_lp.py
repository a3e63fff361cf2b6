"""Exact LP feasibility by a phase-one simplex with Bland's rule."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A_ub: Sequence[Sequence], b_ub: Sequence,
                   A_eq: Sequence[Sequence], b_eq: Sequence,
                   n_vars: int, free: bool = False) -> list[Fraction] | None:
    """A point with ``A_ub x <= b_ub``, ``A_eq x == b_eq`` or ``None``.

    Variables are nonnegative unless ``free`` is set, in which case each
    is split into a difference of two nonnegative parts.
    """
    F = Fraction
    n_struct = 2 * n_vars if free else n_vars

    def expand(row):
        row = [F(x) for x in row]
        return row + [-x for x in row] if free else row

    n_ub = len(A_ub)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        slack = [F(0)] * n_ub
        slack[k] = F(1)
        rows.append(expand(a) + slack)
        rhs.append(F(b))
    for a, b in zip(A_eq, b_eq):
        rows.append(expand(a) + [F(0)] * n_ub)
        rhs.append(F(b))
    m = len(rows)
    n_cols = n_struct + n_ub
    if m == 0:
        return [F(0)] * n_vars
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # tableau with artificial columns n_cols .. n_cols+m-1
    T = [rows[i] + [F(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    width = n_cols + m
    obj = [-sum((T[i][j] for i in range(m)), F(0)) for j in range(n_cols)] + [F(0)] * m
    obj.append(-sum(rhs, F(0)))
    basis = [n_cols + i for i in range(m)]

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            break  # cannot happen in phase one: objective is bounded below by 0
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                Ti, Tr = T[i], T[r]
                T[i] = [x - f * y for x, y in zip(Ti, Tr)]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter

    if obj[-1] != 0:
        return None
    x = [F(0)] * width
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    if free:
        return [x[j] - x[n_vars + j] for j in range(n_vars)]
    return x[:n_vars]


def strict_solution(G: Sequence[Sequence]) -> list[Fraction] | None:
    """A vector ``p`` with ``G_g . p <= -1`` for every row, or ``None``.

    Runs the simplex method on the dual ``min -sum(y)``, ``G^T y = 0``,
    ``y >= 0``.  Its tableau has one row per column of ``G``, which is
    small even when ``G`` has many rows.  At optimality the simplex
    multipliers are the wanted ``p``; unboundedness means no ``p`` exists.
    """
    F = Fraction
    if not G:
        return None
    q = len(G[0])
    n_y = len(G)
    if q == 0:
        return None
    # columns: y_0..y_{n_y-1}, then one artificial per row (never allowed to enter)
    T = [[F(G[g][i]) for g in range(n_y)] + [F(int(i == j)) for j in range(q)] + [F(0)]
         for i in range(q)]
    obj = [F(-1)] * n_y + [F(0)] * q + [F(0)]
    basis = [n_y + i for i in range(q)]
    while True:
        enter = next((j for j in range(n_y) if obj[j] < 0), None)
        if enter is None:
            break
        # artificials must stay at zero, so they block in either direction
        rows = [i for i in range(q)
                if T[i][enter] > 0 or (basis[i] >= n_y and T[i][enter] != 0)]
        if not rows:
            return None
        # every right-hand side is zero, so Bland's rule picks the smallest basic index
        r = min(rows, key=lambda i: basis[i])
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(q):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, T[r])]
        basis[r] = enter
    return [-obj[n_y + i] for i in range(q)]
