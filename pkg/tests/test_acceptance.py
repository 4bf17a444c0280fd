"""Exit criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see per-criterion detail;
the terminal summary lists PASS/FAIL for each.
"""

import gc
import math
import time
import tracemalloc

import numpy as np

from conftest import connected_upto, oracle_spectrum
from property_cases import (
    PERTURBATION_ITEMS,
    SIGMA_POS_MIN,
    f,
    g,
    singular_shift_instances,
    monotonicity_samples,
    perturbation_instances,
)
from threshspec.diagonalize import diagonalize, eigencount
from threshspec.exceptions import AmbiguousProbe
from threshspec.oracle import count_relative, eigenvalues, inertia_of
from threshspec.sequences import adjacency, anti_regular, enumerate_critical
from threshspec.spectra import inertia_by_counting, inertia_by_diagonalization
from threshspec.verify import report_json, verify_conjecture, verify_critical_cases, verify_sign_pattern

TOL = 1e-9


def test_c1_oracle_cross_validation():
    rng = np.random.default_rng(2024)
    start = time.perf_counter()
    graphs = probes = 0
    for seq in connected_upto(9):
        spec = eigenvalues(adjacency(seq))
        graphs += 1
        done = 0
        while done < 100:
            x = float(rng.uniform(-seq.n, seq.n))
            try:
                expected = count_relative(spec, x)
            except AmbiguousProbe:
                continue
            assert eigencount(seq, x) == expected, (seq.bits, x)
            done += 1
        probes += done
    elapsed = time.perf_counter() - start
    print(f"\n[c1] {graphs} graphs, {probes} probes, {elapsed:.2f}s")
    assert graphs == 255
    assert elapsed < 30


def test_c2_inertia_reproduction():
    start = time.perf_counter()
    for seq in connected_upto(10):
        got = inertia_by_diagonalization(seq)
        spec = eigenvalues(adjacency(seq))
        assert (got.n_plus, got.n_zero, got.n_minus, got.n_minus_one) == inertia_of(spec), seq.bits
    for n in range(2, 1001):
        k = n // 2
        expected = (k, 0, k) if n % 2 == 0 else (k, 1, k)
        assert inertia_by_counting(anti_regular(n)).triple == expected, n
    elapsed = time.perf_counter() - start
    print(f"\n[c2] {elapsed:.2f}s")
    assert elapsed < 10


def test_c3_conjecture_small_orders():
    start = time.perf_counter()
    serial = {n: verify_conjecture(n, TOL) for n in range(3, 15)}
    t_serial = time.perf_counter() - start
    for n, r in serial.items():
        print(f"\n[c3] n={n:2d} graphs={r.total_graphs:5d} margins={r.margins} verdict={r.verdict}", end="")
        assert r.total_graphs == 2 ** (n - 2)
        assert r.verdict, (n, r.warnings)
    start = time.perf_counter()
    parallel = {n: verify_conjecture(n, TOL, jobs=8) for n in range(3, 15)}
    t_parallel = time.perf_counter() - start
    print(f"\n[c3] serial {t_serial:.1f}s, --jobs 8 {t_parallel:.1f}s")
    assert all(parallel[n].verdict for n in parallel)
    assert t_serial < 300
    assert t_parallel < 60


def test_c4_critical_families():
    worst = math.inf
    for n in range(5, 21):
        assert len(enumerate_critical(n)) == n - 2
        rows = verify_critical_cases(n, TOL)
        for r in rows:
            assert r.dominated_by_anti_regular and r.margin > 1e-7, (n, r)
            worst = min(worst, r.margin)
    print(f"\n[c4] smallest margin {worst:.3e}")


def test_c5_forbidden_interval():
    lo, hi = -1.20710678, 0.20710678
    graphs = 0
    for seq in connected_upto(14):
        ev = oracle_spectrum(seq)
        nontrivial = ev[(np.abs(ev) > 1e-6) & (np.abs(ev + 1) > 1e-6)]
        inside = nontrivial[(nontrivial >= lo) & (nontrivial <= hi)]
        assert inside.size == 0, (seq.bits, inside)
        graphs += 1
    print(f"\n[c5] {graphs} graphs clear")


def test_c6_sign_patterns():
    mismatches = []
    for n in range(3, 41):
        for check in verify_sign_pattern(n, 20, seed=n):
            if not check.match:
                mismatches.append((n, check.y, check.expected, check.observed))
    for m in mismatches:
        print(f"\n[c6] mismatch n={m[0]} y={m[1]!r} expected={m[2]} observed={m[3]}", end="")
    print(f"\n[c6] {len(mismatches)} mismatches over {38 * 20} probes")
    assert not mismatches


def test_c7_property_suites():
    rng = np.random.default_rng(7)

    instances = singular_shift_instances()
    assert len(instances) > 100
    for seq, m, sigma, tr in instances:
        assert tr.final_diagonal[m - 1] < 0 and tr.final_diagonal[m - 2] == 1.0

    zero_cases = 0
    for seq in connected_upto(9, n_min=3):
        for lam in oracle_spectrum(seq):
            if abs(lam) < 1e-6 or abs(lam + 1) < 1e-6:
                continue
            d = np.abs(diagonalize(seq, -lam).final_diagonal)
            assert d[0] <= 1e-6 and (d[1:] > 1e-6).all(), (seq.bits, lam)
            zero_cases += 1

    for sigma, a1, a2 in monotonicity_samples(rng, 1000):
        assert f(sigma, a1) < f(sigma, a2) and g(sigma, a1) < g(sigma, a2)

    checked = 0
    while checked < 1000:
        sigma = float(rng.uniform(0.5, 10))
        alpha = float(rng.uniform(1 / sigma, 2))
        if alpha + sigma - 2 > 0:
            assert f(sigma, alpha) < g(sigma, alpha)
            checked += 1
    for _ in range(1000):
        sigma = float(rng.uniform(SIGMA_POS_MIN, 20))
        alpha = 2 + float(rng.exponential(3.0)) + 1e-9
        assert g(sigma, alpha) < f(sigma, alpha)

    for item, (_, _, _, direction) in PERTURBATION_ITEMS.items():
        for seq, l, sigma, a1, b1 in perturbation_instances(item, 200, rng):
            assert b1 != a1 and math.copysign(1, b1 - a1) == direction, (item, seq.bits, l, sigma)
    print(f"\n[c7] 1c instances {len(instances)}, zero-at-top cases {zero_cases}, "
          f"perturbation instances {200 * len(PERTURBATION_ITEMS)}")


def test_c8_linear_kernel():
    seq = anti_regular(10**6)
    diagonalize(anti_regular(100), -0.5, trace=False)
    gc.collect()
    start = time.perf_counter()
    tr = diagonalize(seq, -0.5, trace=False)
    elapsed = time.perf_counter() - start
    assert len(tr.final_diagonal) == 10**6 and tr.subcase_log == []
    tracemalloc.start()
    diagonalize(seq, -0.5, trace=False)
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    # output doubles plus the working bit copy; nothing that grows per step beyond that
    budget = 8 * seq.n + seq.n + 64 * 1024
    print(f"\n[c8] {elapsed:.3f}s, peak {peak / 1e6:.2f} MB (budget {budget / 1e6:.2f} MB)")
    assert elapsed < 1.0
    assert peak <= budget


def test_c9_determinism():
    serial = report_json(verify_conjecture(12, TOL, jobs=1))
    parallel = report_json(verify_conjecture(12, TOL, jobs=4))
    assert serial == parallel
    assert verify_conjecture(12, TOL).to_csv() == verify_conjecture(12, TOL, jobs=3).to_csv()
