from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from qlinset import _kernels
from qlinset.fileio import load_system
from qlinset.membership import member_real
from qlinset.oracle import oracle_member
from qlinset.raster import RasterJob, classify_points, pixel_centers, render, thread_count, to_csv, to_pgm
from qlinset.system import QuantIntervalSystem

DATA = Path(__file__).parent / "data"
CORPUS = sorted(DATA.glob("*.json"))

needs_numba = pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")


def point_system():
    return QuantIntervalSystem(
        [[(2, 2), (-3, -3)], [(5, 5), (6, 6)], [(-1, -1), (4, 4)]],
        [(4, 4), (7, 7), (5, 5)],
        [["E"] * 2] * 3, ["E"] * 3, ["le", "eq", "ge"])


def exact_mask(sys, job):
    xs, ys = pixel_centers(job)
    return np.array([[member_real(sys, [Fraction(float(x)), Fraction(float(y))]).member
                      for x in xs] for y in ys])


def test_pixel_centers():
    xs, ys = pixel_centers(RasterJob((0, 4, 0, 2), 4, 2))
    assert xs.tolist() == [0.5, 1.5, 2.5, 3.5]
    assert ys.tolist() == [1.5, 0.5]


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_exact_agreement_corpus(path):
    sys = load_system(path)
    job = RasterJob((-2, 2, -2, 2), 40, 40)
    assert np.array_equal(render(sys, job), exact_mask(sys, job))


def test_exact_agreement_point_system():
    sys = point_system()
    job = RasterJob((-2, 2, -2, 2), 100, 100)
    assert np.array_equal(render(sys, job), exact_mask(sys, job))


def test_diagonal_boundary_pixels():
    # x1 + x2 = 0 with zero radii; with row 0 at the top the centers satisfy
    # x1 + x2 = (c - r) / 8, so members are exactly the pixels with c = r
    sys = QuantIntervalSystem([[(1, 1), (1, 1)]], [(0, 0)], [["E", "E"]], ["E"], ["eq"])
    mask = render(sys, RasterJob((-1, 1, -1, 1), 16, 16))
    r, c = np.nonzero(mask)
    assert mask.sum() == 16
    assert np.array_equal(r, c)


def test_empty_tolerable_set():
    sys = QuantIntervalSystem([[(1, 2), (1, 2)]], [(1, 1.5)], [["A", "A"]], ["E"], ["eq"])
    job = RasterJob((-2, 2, -2, 2), 20, 20)
    mask = render(sys, job)
    assert not mask.any()
    assert set(to_pgm(mask).split()[4:]) == {b"255"}
    xs, ys = pixel_centers(job)
    for x in xs[::4]:
        for y in ys[::4]:
            assert not oracle_member(sys, [Fraction(float(x)), Fraction(float(y))])


def test_zero_column_gives_constant_columns():
    sys = QuantIntervalSystem([[(1, 2), (0, 0)]], [(1, 2)], [["E", "E"]], ["E"], ["eq"])
    mask = render(sys, RasterJob((-3, 3, -3, 3), 30, 12))
    assert (mask == mask[0]).all()
    assert mask.any() and not mask.all()


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_thread_counts_byte_identical(path):
    sys = load_system(path)
    job = RasterJob((-2, 2, -2, 2), 64, 48)
    outs = {to_pgm(render(sys, job, threads=t)) for t in (1, 2, 8)}
    assert len(outs) == 1


@needs_numba
@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_backends_identical(path):
    sys = load_system(path)
    job = RasterJob((-2, 2, -2, 2), 50, 50)
    a = render(sys, job, backend="numba")
    b = render(sys, job, backend="numpy")
    assert np.array_equal(a, b)


@needs_numba
def test_kernel_states_identical():
    sys = load_system(DATA / "mixed.json")
    from qlinset.raster import _float_data
    rng = np.random.default_rng(3)
    pts = rng.uniform(-3, 3, size=(5000, 2))
    data = _float_data(sys)
    assert np.array_equal(_kernels.classify(*data, pts, backend="numba"),
                          _kernels.classify(*data, pts, backend="numpy"))


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("QLINSET_DISABLE_NUMBA", "1")
    assert not _kernels.numba_enabled()


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("QLINSET_THREADS", "2")
    assert thread_count(8) == 2
    monkeypatch.delenv("QLINSET_THREADS")
    assert thread_count(3) == 3


def test_pgm_format():
    mask = np.array([[True, False, True]])
    text = to_pgm(mask).decode()
    assert text.splitlines()[:3] == ["P2", "3 1", "255"]
    assert text.splitlines()[3] == "0 255 0"
    wide = to_pgm(np.zeros((1, 100), dtype=bool)).decode().splitlines()
    assert all(len(line) <= 70 for line in wide)


def test_csv_format():
    job = RasterJob((0, 2, 0, 2), 2, 1, "csv")
    lines = to_csv(np.array([[True, False]]), job).decode().splitlines()
    assert lines == ["x1,x2,member", "0.5,1.0,1", "1.5,1.0,0"]


def test_errors():
    sys = QuantIntervalSystem([[(1, 2)]], [(1, 2)], [["E"]], ["E"], ["eq"])
    with pytest.raises(ValueError, match="2 unknowns"):
        render(sys, RasterJob((0, 1, 0, 1), 2, 2))
    with pytest.raises(ValueError):
        RasterJob((1, 0, 0, 1), 2, 2)
    with pytest.raises(ValueError):
        RasterJob((0, 1, 0, 1), 0, 2)
    with pytest.raises(ValueError):
        RasterJob((0, 1, 0, 1), 2, 2, "png")


def test_classify_points_uncertain_resolved_exactly():
    # the point system's solution lies on row boundaries, so every query is borderline
    sys = point_system()
    x = (-1 / 13, 16 / 13)
    got = classify_points(sys, np.array([x]))[0]
    assert got == member_real(sys, [Fraction(x[0]), Fraction(x[1])]).member
