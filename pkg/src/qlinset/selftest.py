"""Randomized agreement suites: characterizations against the oracle.

Each suite returns a :class:`SuiteResult`; a failing suite carries the first
counterexample as a system-file snippet plus the offending point.  Data are
drawn from small dyadic sets, so float arithmetic on them is exact.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from . import interval as iv
from .fileio import system_to_dict
from .interval import Interval
from .linalg import mat_vec, dual_mat, mid_mat, rad_mat, abs_vec, real_mat_vec
from .membership import SolutionKind, basic_system, member_basic, member_ir, member_kr, member_real
from .oracle import oracle_member, oracle_nested, oracle_prefix_shuffle_test, w_operator
from .system import (
    Quantifier,
    QuantIntervalSystem,
    RelationSign,
    negate_system,
    with_sigma,
)

ENDPOINTS = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
COORDS = tuple(k / 2 for k in range(-4, 5))
QUANTS = (Quantifier.FORALL, Quantifier.EXISTS)
RELATIONS = (RelationSign.EQ, RelationSign.GE, RelationSign.LE)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    seconds: float = 0.0
    counterexample: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.name}: {self.checks - self.failures}/{self.checks} "
                f"agree ({self.seconds:.2f} s)")

    def fail(self, sys: Optional[QuantIntervalSystem], x, detail: str) -> None:
        self.failures += 1
        if self.counterexample is None:
            doc = {"detail": detail}
            if sys is not None:
                doc["system"] = system_to_dict(sys)
            if x is not None:
                doc["x"] = [iv.format_number(v) for v in x]
            self.counterexample = json.dumps(doc, indent=2)


# -- generators -------------------------------------------------------------

def random_interval(rng: random.Random, endpoints: Sequence = ENDPOINTS) -> Interval:
    a, b = rng.choice(endpoints), rng.choice(endpoints)
    return Interval(min(a, b), max(a, b))


def random_prefix(rng: random.Random, sys_like: QuantIntervalSystem, rowwise_ae_rows) -> list:
    """Random order of all parameters; rows in ``rowwise_ae_rows`` get
    their universal parameters moved ahead of the existential ones (in place,
    so rows still interleave arbitrarily)."""
    params = list(sys_like.prefix)
    rng.shuffle(params)
    for i in rowwise_ae_rows:
        slots = [k for k, p in enumerate(params) if p.i == i]
        row = [params[k] for k in slots]
        row.sort(key=lambda p: sys_like.quantifier(p) is Quantifier.EXISTS)
        for k, p in zip(slots, row):
            params[k] = p
    return params


def random_system(rng: random.Random, m: int, n: int, sigma=None, quant_a=None,
                  quant_b=None, shuffle_prefix: bool = True) -> QuantIntervalSystem:
    """Random class-Q^sigma system; the prefix is shuffled subject to that class."""
    A = [[random_interval(rng) for _ in range(n)] for _ in range(m)]
    b = [random_interval(rng) for _ in range(m)]
    qa = quant_a or [[rng.choice(QUANTS) for _ in range(n)] for _ in range(m)]
    qb = quant_b or [rng.choice(QUANTS) for _ in range(m)]
    if sigma is None:
        sigma = [rng.choice(RELATIONS) for _ in range(m)]
    elif isinstance(sigma, (str, RelationSign)):
        sigma = [sigma] * m
    sys = QuantIntervalSystem(A, b, qa, qb, sigma)
    if not shuffle_prefix:
        return sys
    eq_rows = [i for i, s in enumerate(sys.sigma) if s is RelationSign.EQ]
    return sys.replace(prefix=tuple(random_prefix(rng, sys, eq_rows)))


def random_point(rng: random.Random, n: int) -> list:
    return [rng.choice(COORDS) for _ in range(n)]


# -- suites -----------------------------------------------------------------

def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def suite_three_way(rng: random.Random, systems: int = 500, points: int = 20) -> SuiteResult:
    """member_real = member_kr = member_ir = oracle on random Q^sigma systems."""
    res = SuiteResult("three-way characterization agreement")
    for _ in range(systems):
        sys = random_system(rng, rng.randint(1, 3), rng.randint(1, 3))
        for _ in range(points):
            x = random_point(rng, sys.n)
            r, k, i_ = member_real(sys, x), member_kr(sys, x), member_ir(sys, x)
            o = oracle_member(sys, x)
            res.checks += 1
            if not (r.member == k.member == i_.member == o):
                res.fail(sys, x, f"real={r.member} kr={k.member} ir={i_.member} oracle={o}")
            elif not (r.per_row_residuals == k.per_row_residuals == i_.per_row_residuals):
                res.fail(sys, x, "residual mismatch between characterizations")
    return res


@_timed
def suite_eq_split(rng: random.Random, systems: int = 200, points: int = 20) -> SuiteResult:
    """Equation system membership = both inequality systems hold."""
    res = SuiteResult("equations = pair of opposite inequalities")
    for _ in range(systems):
        sys = random_system(rng, rng.randint(1, 3), rng.randint(1, 3), sigma=RelationSign.EQ)
        ge, le = with_sigma(sys, RelationSign.GE), with_sigma(sys, RelationSign.LE)
        for _ in range(points):
            x = random_point(rng, sys.n)
            res.checks += 1
            lhs = member_real(sys, x).member
            rhs = member_real(ge, x).member and member_real(le, x).member
            orc = oracle_member(sys, x)
            orc_split = oracle_member(ge, x) and oracle_member(le, x)
            if not (lhs == rhs == orc == orc_split):
                res.fail(sys, x, f"eq={lhs} ge&le={rhs} oracle eq={orc} oracle ge&le={orc_split}")
    return res


@_timed
def suite_sign_flip(rng: random.Random, systems: int = 200, points: int = 20) -> SuiteResult:
    """Flipping relation and the signs of all intervals keeps the solution set."""
    res = SuiteResult("sign flip of inequality systems")
    for _ in range(systems):
        base = random_system(rng, rng.randint(1, 3), rng.randint(1, 3), sigma=RelationSign.GE)
        neg = negate_system(base)
        pairs = [(base, with_sigma(neg, RelationSign.LE)),
                 (neg, with_sigma(base, RelationSign.LE))]
        for _ in range(points):
            x = random_point(rng, base.n)
            for ge_sys, le_sys in pairs:
                res.checks += 1
                a, b = member_real(ge_sys, x).member, member_real(le_sys, x).member
                oa, ob = oracle_member(ge_sys, x), oracle_member(le_sys, x)
                if not (a == b == oa == ob):
                    res.fail(ge_sys, x, f"ge={a} flipped le={b} oracle {oa}/{ob}")
    return res


_SMALL_SHAPES = [(m, n) for m in range(1, 4) for n in range(1, 6) if m * (n + 1) <= 6]


@_timed
def suite_order_independence(rng: random.Random, systems: int = 100, points: int = 2,
                             max_exhaustive: int = 720, samples: int = 50) -> SuiteResult:
    """Inequality systems: every prefix order gives the same nested verdict."""
    res = SuiteResult("prefix order independence of inequality systems")
    for _ in range(systems):
        m, n = rng.choice(_SMALL_SHAPES)
        sysm = random_system(rng, m, n, sigma=[rng.choice(RELATIONS[1:]) for _ in range(m)])
        k = m * (n + 1)
        trials = max_exhaustive if math.factorial(k) <= max_exhaustive else samples
        for _ in range(points):
            x = random_point(rng, n)
            res.checks += 1
            same = oracle_prefix_shuffle_test(sysm, x, trials, rng)
            agrees = oracle_nested(sysm, x) == oracle_member(sysm, x) == member_real(sysm, x).member
            if not (same and agrees):
                res.fail(sysm, x, f"order-stable={same} nested/row/real agree={agrees}")
    return res


def _oettli_prager(A, b, x) -> bool:
    # literal endpoint arithmetic, kept apart from the library's mid/rad helpers
    for row, bi in zip(A, b):
        c = sum(((a.lo + a.hi) / 2 * xj for a, xj in zip(row, x)), 0.0) - (bi.lo + bi.hi) / 2
        r = sum(((a.hi - a.lo) / 2 * abs(xj) for a, xj in zip(row, x)), 0.0) + (bi.hi - bi.lo) / 2
        if not abs(c) <= r:
            return False
    return True


def _gerlach(A, b, x) -> bool:
    for row, bi in zip(A, b):
        c = sum(((a.lo + a.hi) / 2 * xj for a, xj in zip(row, x)), 0.0) - (bi.lo + bi.hi) / 2
        r = sum(((a.hi - a.lo) / 2 * abs(xj) for a, xj in zip(row, x)), 0.0) + (bi.hi - bi.lo) / 2
        if not c <= r:
            return False
    return True


def _strong_eq(A, b, x) -> bool:
    for row, bi in zip(A, b):
        c = sum(((a.lo + a.hi) / 2 * xj for a, xj in zip(row, x)), 0.0) - (bi.lo + bi.hi) / 2
        r = sum(((a.hi - a.lo) / 2 * abs(xj) for a, xj in zip(row, x)), 0.0) + (bi.hi - bi.lo) / 2
        if not abs(c) <= -r:
            return False
    return True


NAMED_CASES = {
    "weak equations (Oettli-Prager)": (SolutionKind.WEAK, RelationSign.EQ, _oettli_prager),
    "weak <= inequalities (Gerlach)": (SolutionKind.WEAK, RelationSign.LE, _gerlach),
    "strong equations": (SolutionKind.STRONG, RelationSign.EQ, _strong_eq),
}


@_timed
def suite_named_cases(rng: random.Random, instances: int = 1000) -> SuiteResult:
    """Literature formulas for basic types against the oracle and member_real."""
    res = SuiteResult("named special cases")
    for label, (kind, rel, formula) in NAMED_CASES.items():
        for _ in range(instances):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            A = [[random_interval(rng) for _ in range(n)] for _ in range(m)]
            b = [random_interval(rng) for _ in range(m)]
            sys = basic_system(kind, A, b, rel)
            x = random_point(rng, n)
            res.checks += 1
            f, o, r = formula(sys.A, sys.b, x), oracle_member(sys, x), member_real(sys, x).member
            if not (f == o == r):
                res.fail(sys, x, f"{label}: formula={f} oracle={o} real={r}")
    return res


@_timed
def suite_basic_forms(rng: random.Random, instances: int = 1000) -> SuiteResult:
    """All 12 basic-type closed forms (every description space) vs member_real."""
    res = SuiteResult("basic-type closed forms")
    for kind, rel in itertools.product(SolutionKind, RELATIONS):
        for _ in range(instances):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            A = [[random_interval(rng) for _ in range(n)] for _ in range(m)]
            b = [random_interval(rng) for _ in range(m)]
            x = random_point(rng, n)
            expected = member_real(basic_system(kind, A, b, rel), x).member
            res.checks += 1
            got = {sp: member_basic(kind, A, b, rel, x, space=sp)
                   for sp in ("ir", "kr", "real", "ir_slack")}
            if any(v != expected for v in got.values()):
                res.fail(basic_system(kind, A, b, rel), x,
                         f"{kind.value}/{rel.value}: real={expected} closed forms={got}")
    return res


DYADIC = tuple(Fraction(k, 4) for k in range(-16, 17))


def _rand_kr(rng: random.Random, pool=DYADIC) -> Interval:
    return Interval(rng.choice(pool), rng.choice(pool))


@_timed
def suite_kernel(rng: random.Random, instances: int = 10_000, grid: int = 3) -> SuiteResult:
    """Kaucher identities on random dyadic data; mul/div vs the nested-extremum definition."""
    res = SuiteResult("Kaucher arithmetic kernel")

    def check(ok: bool, what: str) -> None:
        res.checks += 1
        if not ok:
            res.fail(None, None, what)

    check(iv.subseteq(Interval(6, 3), Interval(4, 5)), "[6,3] <= [4,5]")
    for _ in range(instances):
        u, v = _rand_kr(rng), _rand_kr(rng)
        lam = rng.choice(DYADIC)
        check(iv.dual(iv.dual(u)) == u, f"dual involution {u}")
        check(iv.dual(iv.add(u, v)) == iv.add(iv.dual(u), iv.dual(v)), f"dual additivity {u} {v}")
        check(iv.dual(iv.scalar_mul(lam, u)) == iv.scalar_mul(lam, iv.dual(u)),
              f"dual scalar {lam} {u}")
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        A = tuple(tuple(_rand_kr(rng) for _ in range(n)) for _ in range(m))
        x = [rng.choice(DYADIC) for _ in range(n)]
        ax = mat_vec(A, x)
        check(mat_vec(dual_mat(A), x) == tuple(iv.dual(e) for e in ax), "dual(A) x = dual(A x)")
        check(tuple(iv.mid(e) for e in ax) == real_mat_vec(mid_mat(A), x), "mid(A x) = mid(A) x")
        check(tuple(iv.rad(e) for e in ax) == real_mat_vec(rad_mat(A), abs_vec(x)),
              "rad(A x) = rad(A)|x|")
    pts = [Fraction(k) for k in range(-grid, grid + 1)]
    for a, b, c, d in itertools.product(pts, repeat=4):
        u, v = Interval(a, b), Interval(c, d)
        check(tuple(iv.mul(u, v)) == w_operator("mul", (a, b), (c, d)), f"mul {u} {v}")
        if not min(c, d) <= 0 <= max(c, d):
            check(tuple(iv.div(u, v)) == w_operator("div", (a, b), (c, d)), f"div {u} {v}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "three_way": suite_three_way,
    "eq_split": suite_eq_split,
    "sign_flip": suite_sign_flip,
    "order": suite_order_independence,
    "named": suite_named_cases,
    "basic_forms": suite_basic_forms,
    "kernel": suite_kernel,
}


def run_all(seed: int = 0, cases: int = 500) -> list[SuiteResult]:
    """Run every suite, scaling system counts by ``cases`` (500 = full size)."""
    rng = random.Random(seed)
    scale = cases / 500
    sized = lambda full: max(1, round(full * scale))
    return [
        suite_three_way(rng, systems=cases),
        suite_eq_split(rng, systems=sized(200)),
        suite_sign_flip(rng, systems=sized(200)),
        suite_order_independence(rng, systems=sized(100)),
        suite_named_cases(rng, instances=sized(1000)),
        suite_basic_forms(rng, instances=sized(1000)),
        suite_kernel(rng, instances=sized(10_000)),
    ]
