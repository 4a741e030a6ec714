"""Extended integers stored in int64 level vectors.

``NEG_INF`` and ``POS_INF`` are sentinels; finite entries must stay strictly
inside ``(-FINITE_BOUND, FINITE_BOUND)``.  Subtracting a finite amount from a
sentinel leaves the sentinel unchanged.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

NEG_INF = -(1 << 62)
POS_INF = 1 << 62
FINITE_BOUND = 1 << 60


def is_finite(value: int) -> bool:
    return NEG_INF < value < POS_INF


def sat_sub(value: int, amount: int) -> int:
    """``value - amount`` with sentinels absorbing the subtraction."""
    if value == NEG_INF or value == POS_INF:
        return value
    return value - amount


def sat_sub_vector(vector: np.ndarray, amount: int) -> np.ndarray:
    out = vector - amount
    out[vector == NEG_INF] = NEG_INF
    out[vector == POS_INF] = POS_INF
    return out


def as_level_vector(values: Iterable) -> np.ndarray:
    """Coerce ``values`` into a validated int64 level vector.

    Accepts ints, the two sentinels, and ``float('inf')`` / ``-inf`` as
    aliases for them.
    """
    if isinstance(values, np.ndarray) and values.dtype == np.int64:
        vec = values
    else:
        items = []
        for v in values:
            if isinstance(v, float):
                if v == float("inf"):
                    v = POS_INF
                elif v == float("-inf"):
                    v = NEG_INF
                elif v.is_integer():
                    v = int(v)
                else:
                    raise ValueError(f"non-integral level entry {v!r}")
            items.append(int(v))
        vec = np.asarray(items, dtype=np.int64)
    if vec.ndim != 1 or vec.size == 0:
        raise ValueError("a level vector is a nonempty 1-D sequence")
    finite = (vec != NEG_INF) & (vec != POS_INF)
    if np.any(np.abs(vec[finite]) >= FINITE_BOUND):
        raise ValueError("finite level entries must lie strictly inside +-FINITE_BOUND")
    return vec


def format_entry(value: int) -> str:
    if value == NEG_INF:
        return "-inf"
    if value == POS_INF:
        return "+inf"
    return str(int(value))
