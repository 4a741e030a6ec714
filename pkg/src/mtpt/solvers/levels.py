"""Level vectors: latest feasible start time per load over a due-date run."""

from __future__ import annotations

import numba
import numpy as np

from ..convolution.extint import NEG_INF, POS_INF
from ..convolution.mms import DEFAULT_BACKEND, MmsBackend, get_backend
from ..instance import Instance


@numba.njit(cache=True, nogil=True)
def _pack_leaves(p_values, offsets, dues, loads, k, m):
    count = m - k + 1
    starts = np.zeros(count + 1, dtype=np.int64)
    for g in range(count):
        starts[g + 1] = starts[g] + loads[k + g] + 1
    buffer = np.full(starts[count], NEG_INF, dtype=np.int64)
    for g in range(count):
        group = k + g
        load = loads[group]
        due = dues[group]
        reachable = np.zeros(load + 1, dtype=np.bool_)
        reachable[0] = True
        top = 0
        for j in range(offsets[group], offsets[group + 1]):
            p = p_values[j]
            for x in range(top, -1, -1):
                if reachable[x]:
                    reachable[x + p] = True
            top += p
        base = starts[g]
        buffer[base] = POS_INF
        for x in range(1, min(load, due) + 1):
            if reachable[x]:
                buffer[base + x] = due - x
    return buffer, starts


def group_levels(instance: Instance, k: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Single-group level vectors of groups ``k..m``, packed back to back.

    For one group with due date ``d`` the entry at load ``x`` is ``d - x``
    when some subset of the group has load exactly ``x <= d``, since such a
    subset must finish by ``d``; entry 0 is ``POS_INF``.
    """
    p_values, offsets = instance.packed_jobs
    return _pack_leaves(p_values, offsets, instance.dues_array, instance.loads_array, k, m)


def level_vector(
    instance: Instance,
    interval: tuple[int, int],
    backend: str | MmsBackend = DEFAULT_BACKEND,
) -> np.ndarray:
    """Level vector of groups ``k..m`` (0-based, inclusive); length ``P_I + 1``.

    Runs are combined left to right by the MMS convolution: a start time
    ``t`` can serve load ``i`` from the earlier groups and then load ``x - i``
    from the later ones at ``t + i``, so ``t <= min(L[i], R[x - i] - i)``.
    """
    k, m = interval
    if not 0 <= k <= m < instance.n_dues:
        raise IndexError(f"interval {interval} out of range for {instance.n_dues} due dates")
    buffer, starts = group_levels(instance, k, m)
    levels = get_backend(backend).convolve_packed(buffer, starts)
    # a negative start time is not a start time; further combines only
    # lower such entries, so clamping once at the end is exact
    levels[levels < 0] = NEG_INF
    return levels
