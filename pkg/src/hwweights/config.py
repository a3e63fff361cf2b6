"""Runtime caps. Environment variables override the defaults.

``HWWEIGHTS_ENUM_CAP``
    maximum number of Weyl group elements enumerated (default 10**6)
``HWWEIGHTS_ORACLE_DEPTH``
    maximum offset height for Gram-rank multiplicities; when unset the
    default is 8 in rank <= 2 and 5 in higher rank
``HWWEIGHTS_MAX_DIM``
    maximum ambient dimension for polyhedron conversion (default 8)
"""
from __future__ import annotations

import os

DEFAULT_ENUM_CAP = 10**6
DEFAULT_MAX_DIM = 8


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def enum_cap() -> int:
    v = _env_int("HWWEIGHTS_ENUM_CAP")
    return DEFAULT_ENUM_CAP if v is None else v


def oracle_depth(rank: int) -> int:
    v = _env_int("HWWEIGHTS_ORACLE_DEPTH")
    if v is not None:
        return v
    return 8 if rank <= 2 else 5


def max_dim() -> int:
    v = _env_int("HWWEIGHTS_MAX_DIM")
    return DEFAULT_MAX_DIM if v is None else v
