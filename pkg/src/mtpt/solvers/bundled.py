"""Bundled solver: heavy due dates one at a time, light runs as one unit."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter_ns
from typing import Callable

import numpy as np

from ..convolution.extint import NEG_INF
from ..convolution.mms import DEFAULT_BACKEND, MmsBackend, get_backend, mms_windowed
from ..convolution.sumsets import (
    MemberSet,
    SumSet,
    array_to_bits,
    bits_to_array,
    prefix,
    subset_sums,
    suffix,
    sumset,
)
from ..instance import Instance
from .bundling import check_delta, choose_delta, color_and_bundle
from .levels import level_vector


class InvariantViolation(AssertionError):
    """An internal consistency check of the solver failed."""


@dataclass
class SolveReport:
    tardy_total: int
    ontime_total: int
    red_count: int
    bundle_count: int
    delta: Fraction
    backend: str
    timings: dict[str, int] = field(default_factory=dict)
    """Nanoseconds per phase: ``coloring``, ``red``, ``levels``, ``combine``."""


def _absorb_bundle(
    loads: SumSet, levels: np.ndarray, first_due: int, backend: MmsBackend
) -> SumSet:
    """Extend ``loads`` by the jobs of one bundle with level vector ``levels``.

    A prefix load ``x <= first_due - P_I`` leaves room for any feasible part
    of the bundle, so those combine by a plain sumset.  A larger prefix load
    ``x`` (below ``first_due``, or 0 when that is 0) combines with bundle load ``z`` iff the
    bundle part can start at ``x``, i.e. ``levels[z] >= x``; that test is an
    MMS convolution of a 0/-inf indicator of those prefix loads with
    ``levels``, and loads hitting 0 are feasible.  Prefix loads are always
    taken from ``loads`` as it was on entry, never from loads that already
    include bundle jobs.
    """
    bundle_load = levels.size - 1
    split = first_due - bundle_load
    before = loads
    # T always holds 0, so a bundle starting at due date 0 still needs x = 0
    hi = max(first_due, 1)
    # loads come from earlier due dates, so stay below this one (or are {0})
    if before.bits.bit_length() > hi:
        raise InvariantViolation(f"load {before.max()} reaches due date {first_due} early")

    if split >= 0:
        bundle_sums = SumSet(array_to_bits(levels != NEG_INF), bundle_load)
        loads = loads.union(sumset(prefix(before, split), bundle_sums, loads.cap))

    lo = max(split + 1, 0)
    if lo < hi:
        late = suffix(before, split).bits >> lo
        if late:
            indicator = np.where(bits_to_array(late, hi - lo), 0, NEG_INF)
            combined = mms_windowed(indicator, lo, levels, backend=backend, checked=False)
            loads = loads.union(MemberSet(array_to_bits(combined == 0) << lo))
    return loads


def solve_bundled(
    instance: Instance,
    delta=None,
    backend: str | MmsBackend = DEFAULT_BACKEND,
    trace: Callable[[int, SumSet], None] | None = None,
) -> SolveReport:
    """Exact minimum tardy processing time with due-date bundling.

    ``delta`` defaults to ``1 - 1/alpha`` for the backend's exponent.  If
    ``trace`` is given it is called as ``trace(i, loads)`` after each red due
    date or bundle end ``i``, with ``loads`` the on-time loads reachable
    using groups ``0..i``.
    """
    impl = get_backend(backend)
    delta = choose_delta(impl.alpha) if delta is None else check_delta(delta)
    cap = instance.total_load
    dues = instance.due_dates
    timings = dict.fromkeys(("coloring", "red", "levels", "combine"), 0)

    start = perf_counter_ns()
    coloring = color_and_bundle(instance, delta)
    timings["coloring"] = perf_counter_ns() - start

    loads = SumSet.zero(cap)
    for k, i, is_red in coloring.steps():
        if is_red:
            start = perf_counter_ns()
            group_sums = subset_sums(instance.group_values(i), cap)
            loads = sumset(loads, group_sums, cap).trim(dues[i])
            timings["red"] += perf_counter_ns() - start
        else:
            start = perf_counter_ns()
            levels = level_vector(instance, (k, i), impl)
            mid = perf_counter_ns()
            loads = _absorb_bundle(loads, levels, dues[k], impl).trim(dues[i])
            timings["levels"] += mid - start
            timings["combine"] += perf_counter_ns() - mid
        if not loads.bits & 1 or loads.bits.bit_length() > dues[i] + 1:
            raise InvariantViolation(f"reachable loads out of range after due date {dues[i]}")
        if trace is not None:
            trace(i, loads)

    ontime = loads.max()
    return SolveReport(
        tardy_total=cap - ontime,
        ontime_total=ontime,
        red_count=coloring.red_count,
        bundle_count=coloring.bundle_count,
        delta=delta,
        backend=impl.name,
        timings=timings,
    )
