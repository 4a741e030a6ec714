"""Exhaustive reference answers used to check the solvers.

Nothing here is fast.  Every function enumerates job subsets and decides
feasibility by simulating the earliest-due-date (EDD) order.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .convolution.extint import NEG_INF, POS_INF
from .instance import Instance, Job

MAX_BRUTE_JOBS = 24
MAX_LEVEL_JOBS = 20
# Above this many jobs the optimum is found by depth-first search instead of
# a flat loop over bitmasks; both visit every feasible subset.
_FLAT_ENUMERATION_LIMIT = 16


class InstanceTooLargeError(ValueError):
    pass


def edd_feasible(jobs: Sequence[Job], t: int) -> bool:
    """True iff ``jobs`` run back to back from ``t`` in EDD order all meet their due dates."""
    if t < 0:
        raise ValueError("start time must be >= 0")
    clock = t
    for job in sorted(jobs, key=lambda j: j.d):
        clock += job.p
        if clock > job.d:
            return False
    return True


def _latest_start(jobs: Sequence[Job]) -> int:
    """Latest start from which ``jobs`` are EDD-feasible, or NEG_INF."""
    if not jobs:
        return POS_INF
    clock, slack = 0, POS_INF
    for job in sorted(jobs, key=lambda j: j.d):
        clock += job.p
        slack = min(slack, job.d - clock)
    return slack if slack >= 0 else NEG_INF


def _subsets(jobs: Sequence[Job]):
    n = len(jobs)
    for mask in range(1 << n):
        yield [jobs[i] for i in range(n) if mask >> i & 1]


def brute_force_opt(instance: Instance) -> int:
    """Minimum total processing time of tardy jobs, by exhaustive search.

    The on-time jobs of any schedule form a set that is EDD-feasible from
    time 0, and every such set can be completed by appending the rest, so
    the optimum is ``P`` minus the heaviest EDD-feasible subset.
    """
    jobs = list(instance.jobs)
    if len(jobs) > MAX_BRUTE_JOBS:
        raise InstanceTooLargeError(
            f"{len(jobs)} jobs exceeds the exhaustive-search limit of {MAX_BRUTE_JOBS}"
        )
    if len(jobs) <= _FLAT_ENUMERATION_LIMIT:
        best = max(sum(j.p for j in s) for s in _subsets(jobs) if edd_feasible(s, 0))
        return instance.total_load - best

    # DFS in EDD order: a job may join only if it still meets its due date,
    # which is exactly the EDD feasibility test applied incrementally.
    ordered = sorted(jobs, key=lambda j: j.d)
    best = 0

    def visit(index: int, load: int) -> None:
        nonlocal best
        if index == len(ordered):
            best = max(best, load)
            return
        job = ordered[index]
        if load + job.p <= job.d:
            visit(index + 1, load + job.p)
        visit(index + 1, load)

    visit(0, 0)
    return instance.total_load - best


def brute_force_feasible_loads(instance: Instance, last_group: int) -> set[int]:
    """Loads of all subsets of groups ``0..last_group`` that are EDD-feasible from 0."""
    jobs = [instance.jobs[i] for g in instance.groups[: last_group + 1] for i in g.job_indices]
    if len(jobs) > MAX_BRUTE_JOBS:
        raise InstanceTooLargeError(f"{len(jobs)} jobs is too many to enumerate")
    return {sum(j.p for j in s) for s in _subsets(jobs) if edd_feasible(s, 0)}


def brute_force_level_vector(instance: Instance, interval: tuple[int, int]) -> np.ndarray:
    """Level vector of groups ``k..m`` (0-based, inclusive) by enumeration.

    Entry ``x`` is the latest start time from which some subset of the
    interval's jobs with total load ``x`` is EDD-feasible, ``NEG_INF`` if no
    such subset exists, and ``POS_INF`` for ``x = 0``.
    """
    k, m = interval
    if not 0 <= k <= m < instance.n_dues:
        raise IndexError(f"interval {interval} out of range for {instance.n_dues} due dates")
    jobs = [instance.jobs[i] for g in instance.groups[k : m + 1] for i in g.job_indices]
    if len(jobs) > MAX_LEVEL_JOBS:
        raise InstanceTooLargeError(f"{len(jobs)} jobs is too many to enumerate")
    out = np.full(sum(j.p for j in jobs) + 1, NEG_INF, dtype=np.int64)
    for subset in _subsets(jobs):
        x = sum(j.p for j in subset)
        out[x] = max(out[x], _latest_start(subset))
    return out
