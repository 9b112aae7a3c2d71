"""Acceptance criteria; a summary line per criterion is printed after the run."""

import math
import random
import time

import pytest

from cartdet.cli import bench_one
from cartdet.closed_forms import closed_det, cycle_det, cylinder_det, grid_det, mobius_det, path_det, torus_det
from cartdet.exact import bareiss_det, exact_rank
from cartdet.graphs import Cycle, Cylinder, Grid, MobiusLadder, Path, Torus, adjacency_matrix, realize
from cartdet.matrix import IntMatrix
from cartdet.spectra import family_spectrum, min_abs_eigenvalue, spectral_det
from cartdet import trig

from conftest import ACCEPTANCE
from oracles import cofactor_det

GRIDS = [Grid(p, q) for p in range(1, 12) for q in range(1, 12)]
TORI = [Torus(m, n) for m in range(3, 9) for n in range(3, 9)]
CYLINDERS = [Cylinder(p, n) for p in range(1, 10) for n in range(3, 10)]
MOBIUS = [MobiusLadder(n) for n in range(2, 25)]
PATHS = [Path(p) for p in range(1, 16)]
CYCLES = [Cycle(n) for n in range(3, 17)]


def record(num, text, ok):
    ACCEPTANCE.append((num, text, bool(ok)))
    assert ok, f"criterion {num} failed: {text}"


def oracle(f):
    return bareiss_det(adjacency_matrix(realize(f)), check=True)


def mismatches(families):
    return [(f, closed_det(f).value, oracle(f)) for f in families if closed_det(f).value != oracle(f)]


def test_criterion_1_grids():
    t0 = time.perf_counter()
    bad = mismatches(GRIDS)
    values_ok = all(
        grid_det(f.p, f.q).value in (-1, 0, 1)
        and (grid_det(f.p, f.q).value == 0) == (math.gcd(f.p + 1, f.q + 1) > 1)
        for f in GRIDS
    )
    elapsed = time.perf_counter() - t0
    record(1, f"grid_det == oracle on 121 grids, {len(bad)} mismatches, {elapsed:.2f}s (<60s)",
           not bad and values_ok and elapsed < 60)


def test_criterion_2_tori():
    t0 = time.perf_counter()
    bad = mismatches(TORI)
    elapsed = time.perf_counter() - t0
    spot = torus_det(3, 3).value == 64 and torus_det(5, 5).value == 1024
    even_zero = all(torus_det(f.m, f.n).value == 0 for f in TORI if f.m % 2 == 0 or f.n % 2 == 0)
    record(2, f"torus_det == oracle on 36 tori, {len(bad)} mismatches, {elapsed:.2f}s (<60s)",
           not bad and spot and even_zero and elapsed < 60)


def test_criterion_3_cylinders():
    t0 = time.perf_counter()
    bad = mismatches(CYLINDERS)
    elapsed = time.perf_counter() - t0
    zeros = [f for f in CYLINDERS if cylinder_det(f.p, f.n).value == 0]
    zeros_ok = all(oracle(f) == 0 for f in zeros)
    record(3, f"cylinder_det == oracle on 63 cylinders ({len(zeros)} zero cases), "
              f"{len(bad)} mismatches, {elapsed:.2f}s (<60s)",
           not bad and cylinder_det(2, 4).value == 9 and zeros_ok and elapsed < 60)


def test_criterion_4_mobius():
    t0 = time.perf_counter()
    bad = mismatches(MOBIUS)
    elapsed = time.perf_counter() - t0
    pattern = {0: 0, 1: -9, 2: -3, 3: 0, 4: -3, 5: -9}
    periodic = all(mobius_det(f.n).value == pattern[f.n % 6] for f in MOBIUS)
    record(4, f"mobius_det == oracle for 2<=n<=24, {len(bad)} mismatches, {elapsed:.2f}s (<10s)",
           not bad and periodic and elapsed < 10)


def test_criterion_5_specializations():
    bad = mismatches(PATHS + CYCLES)
    same = all(grid_det(p, 1).value == path_det(p).value for p in range(1, 16)) and all(
        cylinder_det(1, n).value == cycle_det(n).value for n in range(3, 17)
    )
    record(5, f"path_det/cycle_det == oracle (p<=15, n<=16), {len(bad)} mismatches; reductions hold",
           not bad and same)


def test_criterion_6_trig():
    t0 = time.perf_counter()
    xs = (-2.9, -1.3, -0.41, 0.0, 0.3, 0.7, 1.9, 3.7)
    worst = 0.0
    cases = 0
    signs_ok = True
    for n in range(1, 31):
        for a in range(1, 2 * n):
            if math.gcd(a, n) != 1:
                continue
            cases += 1
            for x in xs:
                worst = max(worst, trig.sine_product_identity(n, a, x).abs_error)
            s = trig.sine_product(n, a)
            num = trig.numeric_sine_product(n, a)
            worst = max(worst, abs(num - float(s)))
            signs_ok &= math.copysign(1, num) == s.sign
            c = trig.cosine_product(n, a)
            err = abs(trig.numeric_cosine_product(n, a) - float(c))
            if n % 2 == 0:
                signs_ok &= err < 1e-12
            worst = max(worst, err)
    elapsed = time.perf_counter() - t0
    record(6, f"trig identities on {cases} (n,a) pairs, max error {worst:.2e} (<1e-9), {elapsed:.2f}s (<10s)",
           worst < 1e-9 and signs_ok and elapsed < 10)


def test_criterion_7_spectral():
    checked = 0
    failures = []
    for f in GRIDS + TORI + CYLINDERS + MOBIUS + PATHS + CYCLES:
        if f.order > 60:
            continue
        checked += 1
        spec = family_spectrum(f)
        exact = oracle(f)
        if exact:
            ok = abs(spectral_det(spec) - exact) <= 1e-6 * max(1, abs(exact))
        else:
            ok = closed_det(f).value == 0 and min_abs_eigenvalue(spec) < 1e-9
        if not ok:
            failures.append(f)
    record(7, f"spectral product consistent on {checked} instances <=60 vertices, {len(failures)} failures",
           not failures)


def test_criterion_8_singularity():
    bad = [f for f in GRIDS + TORI + CYLINDERS + MOBIUS
           if (closed_det(f).value == 0) != (exact_rank(adjacency_matrix(realize(f)), check=True).nullity > 0)]
    record(8, f"closed_det == 0 iff nullity > 0 over criteria 1-4 instances, {len(bad)} violations", not bad)


def test_criterion_9_oracle_selftest():
    rng = random.Random(20240917)
    samples = 0
    bad = 0
    for _ in range(250):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        samples += 1
        # check=True raises on any inexact division
        bad += bareiss_det(IntMatrix.from_rows(rows), check=True) != cofactor_det(rows)
    record(9, f"bareiss_det == cofactor expansion on {samples} random matrices, all divisions exact",
           samples >= 200 and bad == 0)


def test_criterion_10_bench():
    res = bench_one(Grid(10, 10))
    t = res["seconds"]
    ok = (
        res["vertices"] == 100
        and res["det_closed"] == res["det_exact"]
        and t["closed"] < t["exact"]
    )
    record(10, f"bench grid 10x10: closed {t['closed']:.2e}s, oracle {t['exact']:.2e}s, "
               f"spectral {t['spectral']:.2e}s (speedup {t['exact'] / t['closed']:.0f}x)", ok)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
