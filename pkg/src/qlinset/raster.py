"""Rasterize the solution set of a 2-unknown system onto a pixel grid.

Pixel ``(row, col)`` is classified at its center
``x1 = x1_lo + (col + 1/2) * (x1_hi - x1_lo) / W`` and
``x2 = x2_hi - (row + 1/2) * (x2_hi - x2_lo) / H`` (row 0 is the top of the
image), computed in float64.  Boundary points count as members.  Pixels that
float64 cannot decide are re-checked exactly with :func:`member_real` on the
exact value of the float center, so the image does not depend on the
backend or on the number of worker threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .linalg import mid_mat, mid_vec, rad_mat, rad_vec
from .membership import member_real
from .system import Quantifier, QuantIntervalSystem, RelationSign, require_qsigma

__all__ = ["RasterJob", "pixel_centers", "classify_points", "render", "to_pgm", "to_csv",
           "thread_count"]

_SIGMA_CODE = {RelationSign.EQ: 0, RelationSign.GE: 1, RelationSign.LE: 2}


@dataclass(frozen=True)
class RasterJob:
    window: tuple[float, float, float, float]
    width: int
    height: int
    fmt: str = "pgm"

    def __post_init__(self):
        x1lo, x1hi, x2lo, x2hi = (float(v) for v in self.window)
        if not all(np.isfinite([x1lo, x1hi, x2lo, x2hi])):
            raise ValueError("raster window must be finite")
        if x1lo > x1hi or x2lo > x2hi:
            raise ValueError("raster window bounds must be ordered")
        if self.width < 1 or self.height < 1:
            raise ValueError("resolution must be at least 1x1")
        if self.fmt not in ("pgm", "csv"):
            raise ValueError(f"unknown raster format {self.fmt!r}")
        object.__setattr__(self, "window", (x1lo, x1hi, x2lo, x2hi))


def thread_count(requested: Optional[int] = None) -> int:
    """Worker count, capped by ``QLINSET_THREADS`` when set."""
    n = requested or os.cpu_count() or 1
    cap = os.environ.get("QLINSET_THREADS")
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


def pixel_centers(job: RasterJob) -> tuple[np.ndarray, np.ndarray]:
    x1lo, x1hi, x2lo, x2hi = job.window
    dx = (x1hi - x1lo) / job.width
    dy = (x2hi - x2lo) / job.height
    xs = x1lo + (np.arange(job.width) + 0.5) * dx
    ys = x2hi - (np.arange(job.height) + 0.5) * dy
    return xs, ys


def _float_data(sys: QuantIntervalSystem):
    FA = Quantifier.FORALL
    ma = np.array(mid_mat(sys.A), dtype=np.float64)
    ra = np.array([[(-1 if q is FA else 1) * r for r, q in zip(rr, qr)]
                   for rr, qr in zip(rad_mat(sys.A), sys.quant_a)], dtype=np.float64)
    mb = np.array(mid_vec(sys.b), dtype=np.float64)
    rb = np.array([(-1 if q is FA else 1) * r for r, q in zip(rad_vec(sys.b), sys.quant_b)],
                  dtype=np.float64)
    sig = np.array([_SIGMA_CODE[s] for s in sys.sigma], dtype=np.int64)
    return ma, ra, mb, rb, sig


def classify_points(sys: QuantIntervalSystem, pts: np.ndarray, backend: Optional[str] = None,
                    _data=None) -> np.ndarray:
    """Boolean membership of each row of ``pts`` (shape ``(N, n)``)."""
    require_qsigma(sys)
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    data = _data if _data is not None else _float_data(sys)
    state = _kernels.classify(*data, pts, backend=backend)
    member = state == _kernels.INSIDE
    for k in np.flatnonzero(state == _kernels.UNCERTAIN):
        x = [Fraction(float(v)) for v in pts[k]]
        member[k] = member_real(sys, x).member
    return member


def render(sys: QuantIntervalSystem, job: RasterJob, threads: Optional[int] = None,
           backend: Optional[str] = None) -> np.ndarray:
    """Membership mask of shape ``(height, width)``; row 0 is the top."""
    if sys.n != 2:
        raise ValueError(f"raster needs a system with 2 unknowns, got {sys.n}")
    require_qsigma(sys)
    xs, ys = pixel_centers(job)
    data = _float_data(sys)
    workers = min(thread_count(threads), job.height)
    bounds = np.linspace(0, job.height, workers + 1).astype(int)

    def band(k: int) -> np.ndarray:
        rows = ys[bounds[k]:bounds[k + 1]]
        gx, gy = np.meshgrid(xs, rows)
        pts = np.column_stack([gx.ravel(), gy.ravel()])
        return classify_points(sys, pts, backend=backend, _data=data).reshape(len(rows), job.width)

    if workers == 1:
        parts = [band(0)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(band, range(workers)))
    return np.vstack(parts)


def to_pgm(mask: np.ndarray) -> bytes:
    """Plain (P2) PGM, maxval 255: members black (0), others white (255)."""
    h, w = mask.shape
    lines = ["P2", f"{w} {h}", "255"]
    for row in mask:
        vals = ["0" if v else "255" for v in row]
        line = []
        width = 0
        for v in vals:
            if width + len(v) + 1 > 70 and line:
                lines.append(" ".join(line))
                line, width = [], 0
            line.append(v)
            width += len(v) + 1
        lines.append(" ".join(line))
    return ("\n".join(lines) + "\n").encode("ascii")


def to_csv(mask: np.ndarray, job: RasterJob) -> bytes:
    xs, ys = pixel_centers(job)
    out = ["x1,x2,member"]
    for r, y in enumerate(ys):
        for c, x in enumerate(xs):
            out.append(f"{float(x)!r},{float(y)!r},{int(bool(mask[r, c]))}")
    return ("\n".join(out) + "\n").encode("ascii")
