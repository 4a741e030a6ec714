"""Exact solvers for minimum tardy processing time on one machine (1||sum p_j U_j)."""

from .convolution import DEFAULT_BACKEND, backend_names, get_backend
from .instance import (
    FAMILIES,
    DueDateGroup,
    Instance,
    InstanceFormatError,
    Job,
    dump_instance,
    generate_instance,
    group_by_due,
    load_instance,
    read_instance,
    write_instance,
)
from .oracle import brute_force_opt
from .solvers import lawler_moore, solve_bundled, sumset_scheduler

ALGORITHMS = ("brute", "lm", "sumset", "bundled")


def solve(instance: Instance, alg: str = "bundled", *, delta=None, backend=DEFAULT_BACKEND) -> int:
    """Minimum total processing time of tardy jobs using algorithm ``alg``."""
    if alg == "bundled":
        return solve_bundled(instance, delta, backend).tardy_total
    if alg == "sumset":
        return sumset_scheduler(instance)
    if alg == "lm":
        return lawler_moore(instance)
    if alg == "brute":
        return brute_force_opt(instance)
    raise ValueError(f"unknown algorithm {alg!r}; expected one of {ALGORITHMS}")


__all__ = [
    "ALGORITHMS",
    "DEFAULT_BACKEND",
    "FAMILIES",
    "DueDateGroup",
    "Instance",
    "InstanceFormatError",
    "Job",
    "backend_names",
    "brute_force_opt",
    "dump_instance",
    "generate_instance",
    "get_backend",
    "group_by_due",
    "lawler_moore",
    "load_instance",
    "read_instance",
    "solve",
    "solve_bundled",
    "sumset_scheduler",
    "write_instance",
]
