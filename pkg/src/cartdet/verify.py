"""Verification suites comparing the closed forms against independent routes.

Family suites check, per instance:

* closed form == Bareiss determinant (with every division checked exact)
* closed form == 0  iff  exact nullity > 0
* spectral product consistent with the exact value

The ``trig`` suite checks the three sine/cosine product identities for every
``a`` in ``[1, 2n)`` coprime to ``n``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .exact import nullity_of
from .graphs import Cylinder, GraphFamily, Grid, MobiusLadder, Torus, describe, realize
from .report import det_report
from . import trig

SUITES = ("grids", "tori", "cylinders", "mobius", "trig")

#: default --max per suite (the acceptance ranges)
DEFAULT_MAX = {"grids": 11, "tori": 8, "cylinders": 9, "mobius": 24, "trig": 30}
#: smallest meaningful --max per suite
MIN_MAX = {"grids": 1, "tori": 3, "cylinders": 3, "mobius": 2, "trig": 1}
#: hard ceiling on --max; beyond this the oracle gets slow
LIMIT_MAX = {"grids": 16, "tori": 12, "cylinders": 14, "mobius": 60, "trig": 60}

TRIG_TOL = 1e-9
TRIG_ZERO_TOL = 1e-12
SAMPLE_XS = (-2.9, -1.3, -0.41, 0.0, 0.3, 0.7, 1.9, 3.7)


@dataclass(frozen=True)
class CaseResult:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def first_failure(self) -> CaseResult | None:
        return next((c for c in self.cases if not c.ok), None)


def family_instances(suite: str, max_n: int | None = None) -> list[GraphFamily]:
    n = DEFAULT_MAX[suite] if max_n is None else max_n
    if suite == "grids":
        return [Grid(p, q) for p in range(1, n + 1) for q in range(1, n + 1)]
    if suite == "tori":
        return [Torus(a, b) for a in range(3, n + 1) for b in range(3, n + 1)]
    if suite == "cylinders":
        return [Cylinder(p, c) for p in range(1, n + 1) for c in range(3, n + 1)]
    if suite == "mobius":
        return [MobiusLadder(k) for k in range(2, n + 1)]
    raise ValueError(f"{suite!r} is not a family suite")


def check_family(f: GraphFamily) -> CaseResult:
    rep = det_report(f, check=True)
    nullity = nullity_of(realize(f)).nullity
    problems = []
    if rep.closed.value != rep.exact:
        problems.append(f"closed {rep.closed.value} != exact {rep.exact}")
    if (rep.closed.value == 0) != (nullity > 0):
        problems.append(f"closed {rep.closed.value} but nullity {nullity}")
    if not rep.agree:
        problems.append(f"spectral {rep.spectral!r} (min |lambda| {rep.min_abs:.3g}) disagrees")
    return CaseResult(describe(f), not problems, "; ".join(problems))


def check_trig(n: int, a: int) -> CaseResult:
    problems = []
    for x in SAMPLE_XS:
        chk = trig.sine_product_identity(n, a, x)
        if not chk.abs_error < TRIG_TOL:
            problems.append(f"sin({n}x) identity off by {chk.abs_error:.3g} at x={x}")
    closed_sin = trig.sine_product(n, a)
    num_sin = trig.numeric_sine_product(n, a)
    if not abs(num_sin - float(closed_sin)) < TRIG_TOL:
        problems.append(f"sine product {num_sin!r} != {closed_sin.value}")
    if math.copysign(1.0, num_sin) != closed_sin.sign:
        problems.append("sine product sign mismatch")
    closed_cos = trig.cosine_product(n, a)
    num_cos = trig.numeric_cosine_product(n, a)
    tol = TRIG_ZERO_TOL if closed_cos.sign == 0 else TRIG_TOL
    if not abs(num_cos - float(closed_cos)) < tol:
        problems.append(f"cosine product {num_cos!r} != {closed_cos.value}")
    return CaseResult(f"trig(n={n}, a={a})", not problems, "; ".join(problems))


def _trig_pairs(max_n: int) -> list[tuple[int, int]]:
    return [(n, a) for n in range(1, max_n + 1) for a in range(1, 2 * n) if math.gcd(a, n) == 1]


def _run_trig(pair: tuple[int, int]) -> CaseResult:
    return check_trig(*pair)


def run_suite(suite: str, max_n: int | None = None, jobs: int = 1) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "trig":
        work, fn = _trig_pairs(DEFAULT_MAX["trig"] if max_n is None else max_n), _run_trig
    else:
        work, fn = family_instances(suite, max_n), check_family
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            cases = list(pool.map(fn, work, chunksize=4))
    else:
        cases = [fn(w) for w in work]
    return SuiteResult(suite, cases)
