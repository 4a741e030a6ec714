"""Jobs, instances and the JSON instance format.

An instance is a multiset of jobs ``(p, d)`` on a single machine.  Grouping by
due date is always derived from the job list and never stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

FAMILIES = ("single-due", "many-dues", "few-heavy")


class InstanceFormatError(ValueError):
    """Raised when an instance document cannot be parsed or validated."""


@dataclass(frozen=True, slots=True)
class Job:
    p: int
    d: int

    def __post_init__(self):
        if not _is_int(self.p) or not _is_int(self.d):
            raise ValueError(f"job fields must be integers, got p={self.p!r}, d={self.d!r}")
        if self.p < 1:
            raise ValueError(f"processing time must be >= 1, got {self.p}")
        if self.d < 0:
            raise ValueError(f"due date must be >= 0, got {self.d}")


@dataclass(frozen=True, slots=True)
class DueDateGroup:
    due: int
    job_indices: tuple[int, ...]
    group_load: int


def _is_int(value) -> bool:
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def group_by_due(jobs: Sequence[Job]) -> tuple[tuple[int, ...], tuple[DueDateGroup, ...]]:
    """Group job indices by due date.

    Returns the strictly increasing distinct due dates and one group per due
    date, aligned with them.  Job indices inside a group keep input order.
    """
    members: dict[int, list[int]] = {}
    for index, job in enumerate(jobs):
        members.setdefault(job.d, []).append(index)
    due_dates = tuple(sorted(members))
    groups = tuple(
        DueDateGroup(due, tuple(members[due]), sum(jobs[i].p for i in members[due]))
        for due in due_dates
    )
    return due_dates, groups


@dataclass(frozen=True)
class Instance:
    """A validated MTPT instance.

    ``due_dates`` and ``groups`` are derived from ``jobs`` at construction and
    indexed from 0, so group ``k`` holds the jobs due at ``due_dates[k]``.
    """

    jobs: tuple[Job, ...]
    total_load: int = field(init=False)
    due_dates: tuple[int, ...] = field(init=False)
    groups: tuple[DueDateGroup, ...] = field(init=False)

    def __post_init__(self):
        jobs = tuple(self.jobs)
        for job in jobs:
            if not isinstance(job, Job):
                raise TypeError(f"expected Job, got {type(job).__name__}")
        due_dates, groups = group_by_due(jobs)
        total = sum(job.p for job in jobs)
        assert sum(g.group_load for g in groups) == total
        assert all(a < b for a, b in zip(due_dates, due_dates[1:]))
        object.__setattr__(self, "jobs", jobs)
        object.__setattr__(self, "total_load", total)
        object.__setattr__(self, "due_dates", due_dates)
        object.__setattr__(self, "groups", groups)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Instance":
        """Build an instance from ``(p, d)`` pairs."""
        return cls(tuple(Job(int(p), int(d)) for p, d in pairs))

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def n_dues(self) -> int:
        return len(self.due_dates)

    def group_values(self, k: int) -> list[int]:
        """Processing times of the jobs due at ``due_dates[k]``."""
        return [self.jobs[i].p for i in self.groups[k].job_indices]

    def interval_load(self, k: int, m: int) -> int:
        """Total processing time of groups ``k..m`` (inclusive)."""
        return int(self.prefix_loads[m + 1] - self.prefix_loads[k])

    # Packed arrays for the compiled kernels; computed once per instance.

    @cached_property
    def dues_array(self) -> np.ndarray:
        return np.asarray(self.due_dates, dtype=np.int64)

    @cached_property
    def loads_array(self) -> np.ndarray:
        return np.asarray([g.group_load for g in self.groups], dtype=np.int64)

    @cached_property
    def prefix_loads(self) -> np.ndarray:
        out = np.zeros(len(self.groups) + 1, dtype=np.int64)
        np.cumsum(self.loads_array, out=out[1:])
        return out

    @cached_property
    def packed_jobs(self) -> tuple[np.ndarray, np.ndarray]:
        """``(p_values, offsets)``: p of group ``k`` is ``p_values[offsets[k]:offsets[k+1]]``."""
        p_values = np.asarray(
            [self.jobs[i].p for g in self.groups for i in g.job_indices], dtype=np.int64
        )
        offsets = np.zeros(len(self.groups) + 1, dtype=np.int64)
        np.cumsum([len(g.job_indices) for g in self.groups], out=offsets[1:])
        return p_values, offsets


def load_instance(data: bytes | str) -> Instance:
    """Parse an instance document ``{"jobs": [{"p": .., "d": ..}, ...]}``."""
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InstanceFormatError(f"malformed instance document: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("instance document must be a JSON object")
    unknown = set(doc) - {"jobs"}
    if unknown:
        raise InstanceFormatError(f"unknown top-level keys: {sorted(unknown)}")
    if "jobs" not in doc or not isinstance(doc["jobs"], list):
        raise InstanceFormatError('instance document needs a "jobs" list')

    jobs = []
    for index, record in enumerate(doc["jobs"]):
        where = f"jobs[{index}]"
        if not isinstance(record, dict):
            raise InstanceFormatError(f"{where}: expected an object, got {record!r}")
        if set(record) != {"p", "d"}:
            raise InstanceFormatError(f"{where}: expected exactly keys p and d, got {sorted(record)}")
        p, d = record["p"], record["d"]
        if not _is_int(p) or not _is_int(d):
            raise InstanceFormatError(f"{where}: p and d must be integers, got {record!r}")
        try:
            jobs.append(Job(p, d))
        except ValueError as exc:
            raise InstanceFormatError(f"{where}: {exc}") from exc
    return Instance(tuple(jobs))


def dump_instance(instance: Instance) -> str:
    return json.dumps({"jobs": [{"p": job.p, "d": job.d} for job in instance.jobs]})


def read_instance(path) -> Instance:
    with open(path, "rb") as fh:
        return load_instance(fh.read())


def write_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_instance(instance))
        fh.write("\n")


def generate_instance(
    n: int, p_max: int, d_mode: str, seed: int, *, max_dues: int | None = None
) -> Instance:
    """Draw a random instance from one of the benchmark families.

    ``single-due``
        every job shares one due date ``d < P`` (the subset-sum family).
    ``many-dues``
        jobs get distinct due dates spread over ``[1, P]`` so ``D# == n``.
    ``few-heavy``
        about ``n ** (1/3)`` due dates, each carrying many jobs.

    ``max_dues`` caps the number of distinct due dates for the last two
    families.  Processing times are uniform on ``[1, p_max]``.
    """
    if d_mode not in FAMILIES:
        raise ValueError(f"unknown due-date family {d_mode!r}; expected one of {FAMILIES}")
    if n < 0 or p_max < 1:
        raise ValueError("need n >= 0 and p_max >= 1")
    if max_dues is not None and max_dues < 1:
        raise ValueError("max_dues must be >= 1")
    rng = np.random.default_rng(seed)
    p = rng.integers(1, p_max + 1, size=n)
    total = int(p.sum())
    if n == 0:
        return Instance(())

    if d_mode == "single-due":
        due = np.full(n, int(rng.integers(total // 2, total)))
    else:
        if d_mode == "many-dues":
            k = n
        else:
            k = max(1, round(n ** (1 / 3)))
        if max_dues is not None:
            k = min(k, max_dues)
        if total >= k:
            pool = rng.choice(np.arange(1, total + 1), size=k, replace=False)
        else:
            pool = rng.integers(0, total + 1, size=k)
        if k == n:
            due = rng.permutation(pool)
        else:
            # every pool value is used at least once
            due = np.concatenate([pool, rng.choice(pool, size=n - k)])
            due = rng.permutation(due)
    return Instance(tuple(Job(int(a), int(b)) for a, b in zip(p, due)))
