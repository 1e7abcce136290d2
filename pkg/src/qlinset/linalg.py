"""Interval vectors and matrices over KR, stored as nested tuples.

Only the interval-matrix times real-vector product is provided; it is exact
because every term is a scalar multiple of a single interval entry.
Real matrices and vectors are nested tuples of numbers so that ``Fraction``
data stays exact (numpy would round to float).
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .interval import Interval, Number, add, dual, mid, neg, rad, scalar_mul, sub

IVector = Tuple[Interval, ...]
IMatrix = Tuple[IVector, ...]
RVector = Tuple[Number, ...]
RMatrix = Tuple[RVector, ...]

__all__ = [
    "IVector",
    "IMatrix",
    "RVector",
    "RMatrix",
    "as_imatrix",
    "as_ivector",
    "shape",
    "mat_vec",
    "dual_mat",
    "dual_vec",
    "mid_mat",
    "rad_mat",
    "mid_vec",
    "rad_vec",
    "neg_mat",
    "neg_vec",
    "add_vec",
    "sub_vec",
    "hadamard",
    "hadamard_vec",
    "abs_vec",
    "real_mat_vec",
]


def _as_interval(e) -> Interval:
    if isinstance(e, Interval):
        return e
    if isinstance(e, (tuple, list)) and len(e) == 2:
        return Interval(e[0], e[1])
    return Interval(e, e)


def as_ivector(v: Sequence) -> IVector:
    """Coerce a sequence of intervals, ``(lo, hi)`` pairs or numbers."""
    return tuple(_as_interval(e) for e in v)


def as_imatrix(rows: Sequence[Sequence]) -> IMatrix:
    out = tuple(as_ivector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("interval matrix rows have unequal lengths")
    return out


def shape(A: Sequence[Sequence]) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def mat_vec(A: IMatrix, x: Sequence[Number]) -> IVector:
    """``(A x)_i = sum_j x_j A_ij``, summed left to right."""
    m, n = shape(A)
    if n != len(x):
        raise ValueError(f"dimension mismatch: A has {n} columns, x has {len(x)} entries")
    out = []
    for row in A:
        acc = Interval(0, 0)
        for aij, xj in zip(row, x):
            acc = add(acc, scalar_mul(xj, aij))
        out.append(acc)
    return tuple(out)


def dual_mat(A: IMatrix) -> IMatrix:
    return tuple(tuple(dual(e) for e in row) for row in A)


def dual_vec(v: IVector) -> IVector:
    return tuple(dual(e) for e in v)


def mid_mat(A: IMatrix) -> RMatrix:
    return tuple(tuple(mid(e) for e in row) for row in A)


def rad_mat(A: IMatrix) -> RMatrix:
    return tuple(tuple(rad(e) for e in row) for row in A)


def mid_vec(v: IVector) -> RVector:
    return tuple(mid(e) for e in v)


def rad_vec(v: IVector) -> RVector:
    return tuple(rad(e) for e in v)


def neg_mat(A: IMatrix) -> IMatrix:
    return tuple(tuple(neg(e) for e in row) for row in A)


def neg_vec(v: IVector) -> IVector:
    return tuple(neg(e) for e in v)


def _check_len(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")


def add_vec(u: IVector, v: IVector) -> IVector:
    _check_len(u, v)
    return tuple(add(p, q) for p, q in zip(u, v))


def sub_vec(u: IVector, v: IVector) -> IVector:
    _check_len(u, v)
    return tuple(sub(p, q) for p, q in zip(u, v))


def hadamard(S: Sequence[Sequence[Number]], R: Sequence[Sequence[Number]]) -> RMatrix:
    """Entrywise product of two real matrices of equal shape."""
    if shape(S) != shape(R) or any(len(s) != len(r) for s, r in zip(S, R)):
        raise ValueError(f"dimension mismatch: {shape(S)} vs {shape(R)}")
    return tuple(tuple(s * r for s, r in zip(srow, rrow)) for srow, rrow in zip(S, R))


def hadamard_vec(s: Sequence[Number], r: Sequence[Number]) -> RVector:
    _check_len(s, r)
    return tuple(p * q for p, q in zip(s, r))


def abs_vec(x: Sequence[Number]) -> RVector:
    return tuple(abs(v) for v in x)


def real_mat_vec(M: Sequence[Sequence[Number]], x: Sequence[Number]) -> RVector:
    """Plain real product, summed left to right."""
    out = []
    for row in M:
        if len(row) != len(x):
            raise ValueError("dimension mismatch")
        acc = 0
        for mij, xj in zip(row, x):
            acc = acc + mij * xj
        out.append(acc)
    return tuple(out)
