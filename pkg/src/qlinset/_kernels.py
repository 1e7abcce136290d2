"""Batch point classification in float64, with a numba and a numpy path.

Both paths perform the same IEEE operations in the same order, so they
return identical arrays.  Set ``QLINSET_DISABLE_NUMBA=1`` to force the numpy
path (numba is also skipped automatically when it cannot be imported).

Each point gets a state: ``0`` certainly outside, ``1`` certainly inside,
``2`` too close to a row boundary for float64 to decide.  Callers settle
state-2 points with exact arithmetic.
"""

from __future__ import annotations

import os

import numpy as np

OUTSIDE, INSIDE, UNCERTAIN = 0, 1, 2

# relative error bound per unit of absolute magnitude, times (n + 4)
_EPS = 2.0 ** -53

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def numba_enabled() -> bool:
    flag = os.environ.get("QLINSET_DISABLE_NUMBA", "").strip().lower()
    return numba is not None and flag not in ("1", "true", "yes")


def tolerance_factor(n: int) -> float:
    return 4.0 * (n + 4) * _EPS


def classify_numpy(mid_a, rad_a, mid_b, rad_b, sigma, pts, tol_factor):
    m, n = mid_a.shape
    npts = pts.shape[0]
    state = np.full(npts, INSIDE, dtype=np.uint8)
    absx = np.abs(pts)
    for i in range(m):
        y = np.zeros(npts)
        r = np.zeros(npts)
        scale = np.zeros(npts)
        for j in range(n):
            t = mid_a[i, j] * pts[:, j]
            y = y + t
            u = rad_a[i, j] * absx[:, j]
            r = r + u
            scale = scale + np.abs(t) + np.abs(u)
        y = y - mid_b[i]
        r = r + rad_b[i]
        scale = scale + abs(mid_b[i]) + abs(rad_b[i])
        if sigma[i] == 0:
            lhs = np.abs(y)
        elif sigma[i] == 1:
            lhs = -y
        else:
            lhs = y
        slack = r - lhs
        tol = tol_factor * scale
        state[(slack <= tol) & (state == INSIDE)] = UNCERTAIN
        state[slack < -tol] = OUTSIDE
    return state


def _classify_loop(mid_a, rad_a, mid_b, rad_b, sigma, pts, tol_factor):
    m, n = mid_a.shape
    npts = pts.shape[0]
    state = np.empty(npts, dtype=np.uint8)
    for p in range(npts):
        st = INSIDE
        for i in range(m):
            y = 0.0
            r = 0.0
            scale = 0.0
            for j in range(n):
                xj = pts[p, j]
                t = mid_a[i, j] * xj
                y = y + t
                u = rad_a[i, j] * abs(xj)
                r = r + u
                scale = scale + abs(t) + abs(u)
            y = y - mid_b[i]
            r = r + rad_b[i]
            scale = scale + abs(mid_b[i]) + abs(rad_b[i])
            if sigma[i] == 0:
                lhs = abs(y)
            elif sigma[i] == 1:
                lhs = -y
            else:
                lhs = y
            slack = r - lhs
            tol = tol_factor * scale
            if slack < -tol:
                st = OUTSIDE
                break
            if slack <= tol:
                st = UNCERTAIN
        state[p] = st
    return state


if numba is not None:
    classify_numba = numba.njit(cache=True, nogil=True)(_classify_loop)
else:  # pragma: no cover
    classify_numba = None


def classify(mid_a, rad_a, mid_b, rad_b, sigma, pts, tol_factor=None, backend=None):
    """Dispatch to ``"numba"`` or ``"numpy"`` (default: numba when enabled)."""
    mid_a = np.ascontiguousarray(mid_a, dtype=np.float64)
    rad_a = np.ascontiguousarray(rad_a, dtype=np.float64)
    mid_b = np.ascontiguousarray(mid_b, dtype=np.float64)
    rad_b = np.ascontiguousarray(rad_b, dtype=np.float64)
    sigma = np.ascontiguousarray(sigma, dtype=np.int64)
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    if tol_factor is None:
        tol_factor = tolerance_factor(mid_a.shape[1])
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"
    if backend == "numba":
        if classify_numba is None:
            raise RuntimeError("numba is not available")
        return classify_numba(mid_a, rad_a, mid_b, rad_b, sigma, pts, tol_factor)
    if backend == "numpy":
        return classify_numpy(mid_a, rad_a, mid_b, rad_b, sigma, pts, tol_factor)
    raise ValueError(f"unknown backend {backend!r}")
