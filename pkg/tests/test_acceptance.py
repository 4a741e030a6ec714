"""Acceptance criteria, each checked at its stated tolerance and time budget.

Every test records one PASS/FAIL line (shown in the pytest summary) before
asserting.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from mtpt import Instance, Job, brute_force_opt, lawler_moore, solve_bundled, sumset_scheduler
from mtpt.bench import bench_instance, loglog_slope, time_solve
from mtpt.convolution import NEG_INF, POS_INF, backend_names, mms_convolve, mms_definitional, mms_windowed
from mtpt.oracle import brute_force_level_vector
from mtpt.solvers import color_and_bundle, level_vector

from conftest import report, small_instances

HALF = Fraction(1, 2)


def random_level_vector(rng, length):
    values = rng.integers(-16, 17, size=length)
    roll = rng.random(length)
    values[roll < 0.15] = NEG_INF
    values[(roll >= 0.15) & (roll < 0.25)] = POS_INF
    return values.astype(np.int64)


def test_oracle_equivalence():
    start = time.perf_counter()
    instances = small_instances(1200, seed=1001, max_n=10, max_p=12, max_dues=4)
    mismatches = []
    for inst in instances:
        expected = brute_force_opt(inst)
        got = (solve_bundled(inst).tardy_total, sumset_scheduler(inst), lawler_moore(inst))
        if got != (expected,) * 3:
            mismatches.append((inst, expected, got))
    elapsed = time.perf_counter() - start
    assert all(i.n <= 10 and all(j.p <= 12 for j in i.jobs) and i.n_dues <= 4 for i in instances)
    ok = not mismatches and elapsed < 120
    report(
        "1 oracle equivalence",
        ok,
        f"{len(instances)} instances, 3 families, {len(mismatches)} mismatches, {elapsed:.1f}s (limit 120s)",
    )
    assert not mismatches, mismatches[:3]
    assert elapsed < 120


def test_level_vector_equivalence():
    start = time.perf_counter()
    instances = small_instances(240, seed=2002, max_n=8, max_p=12, max_dues=3)
    intervals = 0
    bad = []
    for inst in instances:
        for k in range(inst.n_dues):
            for m in range(k, inst.n_dues):
                expected = brute_force_level_vector(inst, (k, m)).tolist()
                intervals += 1
                for backend in backend_names():
                    if level_vector(inst, (k, m), backend).tolist() != expected:
                        bad.append((inst, (k, m), backend))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(
        "2 level-vector equivalence",
        ok,
        f"{len(instances)} instances, {intervals} intervals x {len(backend_names())} backends, "
        f"{len(bad)} mismatches, {elapsed:.1f}s (limit 60s)",
    )
    assert not bad, bad[:3]
    assert elapsed < 60


def test_backend_conformance():
    start = time.perf_counter()
    rng = np.random.default_rng(3003)
    bad = []
    for _ in range(1000):
        a = random_level_vector(rng, int(rng.integers(1, 129)))
        b = random_level_vector(rng, int(rng.integers(1, 129)))
        expected = mms_definitional(a, b).tolist()
        for backend in backend_names():
            if mms_convolve(backend, a, b).tolist() != expected:
                bad.append(("full", backend))
    for _ in range(500):
        length = int(rng.integers(1, 129))
        a = random_level_vector(rng, length)
        b = random_level_vector(rng, int(rng.integers(1, 129)))
        lo = int(rng.integers(0, length + 1))
        hi = int(rng.integers(lo, length + 1))
        full = np.full(length, NEG_INF, dtype=np.int64)
        full[lo:hi] = a[lo:hi]
        expected = mms_definitional(full, b).tolist()
        for backend in backend_names():
            if mms_windowed(a[lo:hi], lo, b, length=length, backend=backend).tolist() != expected:
                bad.append(("windowed", backend))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(
        "3 backend conformance",
        ok,
        f"1000 pairs + 500 windows on {backend_names()}, {len(bad)} mismatches, {elapsed:.1f}s (limit 60s)",
    )
    assert not bad, bad[:5]
    assert elapsed < 60


def test_subset_sum_reduction():
    rng = np.random.default_rng(4004)
    wrong = []
    for _ in range(100):
        n = int(rng.integers(1, 15))
        values = rng.integers(1, 51, size=n).tolist()
        planted = rng.random(n) < 0.5
        planted[int(rng.integers(n))] = True
        d = int(sum(v for v, pick in zip(values, planted) if pick))
        inst = Instance(tuple(Job(v, d) for v in values))
        expected = inst.total_load - d
        got = (
            brute_force_opt(inst),
            lawler_moore(inst),
            sumset_scheduler(inst),
            solve_bundled(inst).tardy_total,
        )
        if got != (expected,) * 4:
            wrong.append((values, d, got))
    report("4 subset-sum reduction", not wrong, f"100 planted instances, {len(wrong)} wrong answers")
    assert not wrong, wrong[:3]


def test_coloring_bounds():
    rng = np.random.default_rng(5005)
    instances = small_instances(1200, seed=1001, max_n=10, max_p=12, max_dues=4)
    for i in range(50):
        family = ("single-due", "many-dues", "few-heavy")[i % 3]
        target = int(rng.integers(1000, 100_001))
        inst = bench_instance(family, target, seed=i, dues_exponent=float(rng.uniform(0.3, 1.0)))
        assert inst.total_load <= 100_000 * 1.2
        instances.append(inst)
    violations = []
    for inst in instances:
        P = inst.total_load
        coloring = color_and_bundle(inst, HALF)
        floor_root = math.isqrt(P)
        ceil_root = floor_root + (floor_root * floor_root < P)
        if coloring.red_count > floor_root or coloring.bundle_count > 3 * ceil_root:
            violations.append((P, coloring.red_count, coloring.bundle_count))
    largest = max(i.total_load for i in instances)
    report(
        "5 red/bundle count bounds",
        not violations,
        f"{len(instances)} instances (P up to {largest}), {len(violations)} violations",
    )
    assert not violations, violations[:3]


@pytest.mark.slow
def test_scaling():
    start = time.perf_counter()
    sizes = [2**12, 2**14, 2**16, 2**18]
    loads, times, lines = [], [], []
    speedup = None
    for target in sizes:
        inst = bench_instance("many-dues", target, seed=6006, dues_exponent=0.9)
        wall, tardy = time_solve(inst, "bundled", HALF, "naive")
        loads.append(inst.total_load)
        times.append(wall)
        lines.append(f"P={inst.total_load} D#={inst.n_dues} {wall / 1e6:.1f}ms")
        if target == sizes[-1]:
            wall_ref, tardy_ref = time_solve(inst, "sumset")
            assert tardy_ref == tardy
            speedup = wall_ref / wall
    slope = loglog_slope(loads, times)
    elapsed = time.perf_counter() - start
    slope_ok = 1.2 <= slope <= 1.9
    speed_ok = speedup >= 1.5
    report(
        "6 scaling",
        slope_ok and speed_ok and elapsed < 600,
        f"slope {slope:.2f} (need 1.2..1.9), speedup over algorithm1 at largest {speedup:.1f}x (need >=1.5), "
        f"{elapsed:.0f}s; " + ", ".join(lines),
    )
    assert speed_ok, f"speedup {speedup:.2f}"
    assert elapsed < 600
    assert slope_ok, f"fitted slope {slope:.2f} outside [1.2, 1.9]"


def test_metamorphic():
    rng = np.random.default_rng(7007)
    instances = [i for i in small_instances(340, seed=7007, max_n=12, max_p=20, max_dues=6) if i.n > 0][:300]
    assert len(instances) == 300
    broken = []
    for inst in instances:
        base = solve_bundled(inst).tardy_total
        jobs = list(inst.jobs)
        drop = int(rng.integers(len(jobs)))
        fewer = Instance(tuple(jobs[:drop] + jobs[drop + 1 :]))
        if solve_bundled(fewer).tardy_total > base:
            broken.append(("remove", inst, drop))
        bump = int(rng.integers(len(jobs)))
        later = list(jobs)
        later[bump] = Job(jobs[bump].p, jobs[bump].d + int(rng.integers(1, 15)))
        if solve_bundled(Instance(tuple(later))).tardy_total > base:
            broken.append(("raise", inst, bump))
    report("7 metamorphic", not broken, f"300 instances x 2 relations, {len(broken)} violations")
    assert not broken, broken[:3]
