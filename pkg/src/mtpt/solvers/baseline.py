"""Reference solvers that process due dates one at a time."""

from __future__ import annotations

from ..convolution.sumsets import SumSet, low_mask, subset_sums, sumset
from ..instance import Instance


def lawler_moore(instance: Instance) -> int:
    """Lawler–Moore dynamic program over jobs in EDD order, O(P * n).

    ``loads`` is the bitmap of on-time loads reachable by the jobs seen so
    far; adding a job shifts it by ``p`` and drops loads past the job's due
    date.
    """
    loads = 1
    for job in sorted(instance.jobs, key=lambda j: j.d):
        loads |= loads << job.p
        if loads.bit_length() > job.d + 1:
            loads &= low_mask(job.d)
    return instance.total_load - (loads.bit_length() - 1)


def sumset_scheduler(instance: Instance) -> int:
    """One sumset per distinct due date, O~(P * D#).

    For each due date ``d_i`` in increasing order the reachable loads are
    combined with all subset sums of the jobs due at ``d_i`` and then cut at
    ``d_i``.
    """
    cap = instance.total_load
    loads = SumSet.zero(cap)
    for k, due in enumerate(instance.due_dates):
        group_sums = subset_sums(instance.group_values(k), cap)
        loads = sumset(loads, group_sums, cap).trim(due)
    return cap - loads.max()
