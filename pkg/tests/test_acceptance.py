"""Acceptance criteria at their stated sizes, one PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -v -s`` to see the lines
as they are produced; they are also printed with pytest's capture disabled.
"""

import random
import time
from pathlib import Path

import pytest

from qlinset import selftest
from qlinset.fileio import load_system
from qlinset.interval import Interval, subseteq
from qlinset.raster import RasterJob, render, to_pgm

pytestmark = pytest.mark.acceptance

SEED = 20261014
CORPUS = sorted((Path(__file__).parent / "data").glob("*.json"))


def report(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")


def run_suite(capsys, number, title, suite, min_checks, max_seconds=None, **kw):
    res = suite(random.Random(SEED + number), **kw)
    ok = res.passed and res.checks >= min_checks
    if max_seconds is not None:
        ok = ok and res.seconds < max_seconds
    report(capsys, number, title, ok,
           f"{res.checks - res.failures}/{res.checks} agree in {res.seconds:.2f} s")
    assert res.checks >= min_checks
    assert res.passed, res.counterexample
    if max_seconds is not None:
        assert res.seconds < max_seconds
    return res


def test_1_three_way_agreement(capsys):
    run_suite(capsys, 1, "real = KR = IR = oracle", selftest.suite_three_way,
              min_checks=10_000, max_seconds=60, systems=500, points=20)


def test_2_equation_splits_into_inequalities(capsys):
    run_suite(capsys, 2, "EQ <=> GE and LE", selftest.suite_eq_split,
              min_checks=4_000, systems=200, points=20)


def test_3_sign_flip(capsys):
    run_suite(capsys, 3, "(A,b,GE) <=> (-A,-b,LE)", selftest.suite_sign_flip,
              min_checks=4_000, systems=200, points=20)


def test_4_order_independence(capsys):
    run_suite(capsys, 4, "prefix order independence", selftest.suite_order_independence,
              min_checks=100, systems=100)


def test_5_named_special_cases(capsys):
    # three formulas, each on the stated number of instances
    run_suite(capsys, 5, "Oettli-Prager, Gerlach, strong EQ", selftest.suite_named_cases,
              min_checks=3_000, instances=1000)


def test_6_kaucher_kernel(capsys):
    assert subseteq(Interval(6, 3), Interval(4, 5))
    run_suite(capsys, 6, "Kaucher kernel identities and mul/div grid", selftest.suite_kernel,
              min_checks=6 * 10_000 + 7**4, instances=10_000)


def test_7_basic_type_closed_forms(capsys):
    run_suite(capsys, 7, "12 basic-type closed forms", selftest.suite_basic_forms,
              min_checks=12_000, instances=1000)


def test_8_raster_reproducibility(capsys):
    assert len(CORPUS) == 3
    job = RasterJob((-2.0, 2.0, -2.0, 2.0), 200, 200)
    t0 = time.perf_counter()
    identical = True
    for path in CORPUS:
        sys_ = load_system(path)
        outs = {to_pgm(render(sys_, job, threads=t)) for t in (1, 2, 8)}
        identical = identical and len(outs) == 1
    seconds = time.perf_counter() - t0
    ok = identical and seconds < 10
    report(capsys, 8, "raster bytes identical across 1/2/8 threads", ok,
           f"{len(CORPUS)} systems at 200x200 in {seconds:.2f} s")
    assert identical
    assert seconds < 10
