"""Benchmark harness: seeded instances at target loads, timed solves, slopes."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import astuple, dataclass
from time import perf_counter_ns
from typing import Iterable, Sequence

import numpy as np

from .convolution.mms import DEFAULT_BACKEND, get_backend
from .instance import Instance, generate_instance
from .solvers.bundling import check_delta, choose_delta
from . import solve

CSV_HEADER = ("family", "n", "P", "Ddistinct", "algorithm", "delta", "backend", "wall_ns", "tardy_total")

# n ~ P ** DEFAULT_DUES_EXPONENT jobs; with many-dues that is also D#
DEFAULT_DUES_EXPONENT = 0.9


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    P: int
    Ddistinct: int
    algorithm: str
    delta: str
    backend: str
    wall_ns: int
    tardy_total: int


def sizing(target_load: int, dues_exponent: float = DEFAULT_DUES_EXPONENT) -> tuple[int, int]:
    """``(n, p_max)`` whose expected total load is about ``target_load``.

    Processing times are uniform on ``[1, p_max]`` with mean about
    ``target_load ** (1 - dues_exponent)``, so ``n`` is about
    ``target_load ** dues_exponent``.
    """
    if target_load < 1:
        raise ValueError("target load must be >= 1")
    if not 0 < dues_exponent <= 1:
        raise ValueError("dues exponent must lie in (0, 1]")
    mean = max(1.0, target_load ** (1 - dues_exponent))
    p_max = max(1, round(2 * mean - 1))
    n = max(1, round(target_load / ((p_max + 1) / 2)))
    return n, p_max


def bench_instance(family: str, target_load: int, seed: int, dues_exponent: float = DEFAULT_DUES_EXPONENT) -> Instance:
    n, p_max = sizing(target_load, dues_exponent)
    return generate_instance(n, p_max, family, seed)


def time_solve(instance: Instance, algorithm: str, delta=None, backend=DEFAULT_BACKEND) -> tuple[int, int]:
    """One untimed warm-up solve, then one timed solve: ``(wall_ns, tardy_total)``."""
    solve(instance, algorithm, delta=delta, backend=backend)
    start = perf_counter_ns()
    tardy = solve(instance, algorithm, delta=delta, backend=backend)
    return perf_counter_ns() - start, tardy


def run_bench(
    family: str,
    sizes: Sequence[int],
    algorithms: Sequence[str],
    seed: int = 0,
    *,
    delta=None,
    backend=DEFAULT_BACKEND,
    dues_exponent: float = DEFAULT_DUES_EXPONENT,
) -> list[BenchRow]:
    """Rows in (size, algorithm) order, exactly as the arguments list them.

    Solves run one after another so timings do not contend for cores.
    """
    if not sizes:
        raise ValueError("need at least one size")
    impl = get_backend(backend)
    bundled_delta = choose_delta(impl.alpha) if delta is None else check_delta(delta)
    rows = []
    for target in sizes:
        instance = bench_instance(family, target, seed, dues_exponent)
        for alg in algorithms:
            wall, tardy = time_solve(instance, alg, bundled_delta, impl)
            rows.append(
                BenchRow(
                    family=family,
                    n=instance.n,
                    P=instance.total_load,
                    Ddistinct=instance.n_dues,
                    algorithm=alg,
                    delta=str(bundled_delta) if alg == "bundled" else "",
                    backend=impl.name if alg == "bundled" else "",
                    wall_ns=wall,
                    tardy_total=tardy,
                )
            )
    return rows


def loglog_slope(loads: Iterable[float], times: Iterable[float]) -> float:
    """Least-squares slope of ``log(time)`` against ``log(load)``."""
    x = np.log(np.asarray(list(loads), dtype=float))
    y = np.log(np.asarray(list(times), dtype=float))
    if x.size < 2 or np.ptp(x) == 0:
        return math.nan
    return float(np.polyfit(x, y, 1)[0])


def slopes(rows: Sequence[BenchRow]) -> dict[tuple[str, str], float]:
    """Fitted slope per ``(family, algorithm)`` in first-appearance order."""
    groups: dict[tuple[str, str], list[BenchRow]] = {}
    for row in rows:
        groups.setdefault((row.family, row.algorithm), []).append(row)
    return {
        key: loglog_slope([r.P for r in group], [max(r.wall_ns, 1) for r in group])
        for key, group in groups.items()
    }


def format_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(astuple(row))
    for (family, alg), slope in slopes(rows).items():
        buf.write(f"# slope family={family} algorithm={alg} {slope:.2f}\n")
    return buf.getvalue()
