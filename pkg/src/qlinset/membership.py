"""Point membership in solution sets of class-Q^sigma systems.

Three quantifier-free tests are provided and must always agree:

* :func:`member_real` works in plain real arithmetic on midpoints and radii
  (the fast path);
* :func:`member_kr` compares endpoints of ``Ac x`` with those of ``bc``,
  shifted by the slack vectors ``u``/``v``;
* :func:`member_ir` checks the inclusion ``Afa x - bfa <= bex - Aex x + w``
  using only proper intervals, some with infinite endpoints.

All three report the same per-row residuals ``(lower slack, upper slack)``;
a row holds iff both slacks are ``>= 0`` (boundary points are members).
A slack is ``+inf`` when the corresponding scalar inequality is vacuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from .interval import Interval, Number, add, dual, ext_add, mid, neg, rad, sub, subseteq
from .linalg import abs_vec, mat_vec, mid_mat, mid_vec, rad_mat, rad_vec
from .system import (
    Quantifier,
    QuantIntervalSystem,
    RelationSign,
    build_derived,
    require_qsigma,
)

__all__ = [
    "MembershipVerdict",
    "SolutionKind",
    "member_real",
    "member_kr",
    "member_ir",
    "member_basic",
    "basic_system",
]

INF = math.inf
EQ, GE, LE = RelationSign.EQ, RelationSign.GE, RelationSign.LE


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    per_row_residuals: Tuple[Tuple[Number, Number], ...]

    def __bool__(self) -> bool:
        return self.member

    @classmethod
    def from_residuals(cls, residuals) -> MembershipVerdict:
        residuals = tuple((lo, hi) for lo, hi in residuals)
        return cls(all(lo >= 0 and hi >= 0 for lo, hi in residuals), residuals)


class SolutionKind(str, Enum):
    WEAK = "weak"
    TOLERABLE = "tolerable"
    CONTROLLABLE = "controllable"
    STRONG = "strong"

    @property
    def quantifiers(self) -> tuple[Quantifier, Quantifier]:
        """``(quantifier of every A entry, quantifier of every b entry)``."""
        FA, EX = Quantifier.FORALL, Quantifier.EXISTS
        return {
            SolutionKind.WEAK: (EX, EX),
            SolutionKind.TOLERABLE: (FA, EX),
            SolutionKind.CONTROLLABLE: (EX, FA),
            SolutionKind.STRONG: (FA, FA),
        }[self]


def _check_x(sys: QuantIntervalSystem, x: Sequence[Number]) -> None:
    if len(x) != sys.n:
        raise ValueError(f"point has {len(x)} coordinates, system has {sys.n} unknowns")


def member_real(sys: QuantIntervalSystem, x: Sequence[Number]) -> MembershipVerdict:
    """``abs^sigma(mid A x - mid b) <= (As o rad A)|x| + bs o rad b`` per row."""
    require_qsigma(sys)
    _check_x(sys, x)
    FA = Quantifier.FORALL
    ax = [abs(v) for v in x]
    residuals = []
    for row, qrow, bi, qb, s in zip(sys.A, sys.quant_a, sys.b, sys.quant_b, sys.sigma):
        y = 0
        r = 0
        for aij, q, xj, axj in zip(row, qrow, x, ax):
            y = y + mid(aij) * xj
            ra = rad(aij) * axj
            r = r - ra if q is FA else r + ra
        y = y - mid(bi)
        r = r - rad(bi) if qb is FA else r + rad(bi)
        lower = INF if s is LE else r + y
        upper = INF if s is GE else r - y
        residuals.append((lower, upper))
    return MembershipVerdict.from_residuals(residuals)


def _slack(a: Number, b: Number) -> Number:
    """``a - b`` in extended reals; only one side may be infinite."""
    return ext_add(a, -b)


def member_kr(sys: QuantIntervalSystem, x: Sequence[Number]) -> MembershipVerdict:
    """``lower(Ac x) >= lower(bc) + u`` and ``upper(Ac x) <= upper(bc) + v``."""
    require_qsigma(sys)
    _check_x(sys, x)
    d = build_derived(sys)
    acx = mat_vec(d.Ac, x)
    residuals = []
    for yi, bci, ui, vi in zip(acx, d.bc, d.u, d.v):
        assert not (math.isinf(bci.lo) or math.isinf(bci.hi))
        lower = _slack(yi.lo, ext_add(bci.lo, ui))
        upper = _slack(ext_add(bci.hi, vi), yi.hi)
        residuals.append((lower, upper))
    return MembershipVerdict.from_residuals(residuals)


def member_ir(sys: QuantIntervalSystem, x: Sequence[Number]) -> MembershipVerdict:
    """Inclusion ``Afa x - bfa  <=  bex - Aex x + w`` in proper interval arithmetic."""
    require_qsigma(sys)
    _check_x(sys, x)
    d = build_derived(sys)
    left = [sub(p, q) for p, q in zip(mat_vec(d.Afa, x), d.bfa)]
    right = [add(sub(p, q), w) for p, q, w in zip(d.bex, mat_vec(d.Aex, x), d.w)]
    residuals = [(_slack(L.lo, R.lo), _slack(R.hi, L.hi)) for L, R in zip(left, right)]
    assert all(L.is_proper and R.is_proper for L, R in zip(left, right))
    return MembershipVerdict.from_residuals(residuals)


def basic_system(kind: SolutionKind, A, b, sigma) -> QuantIntervalSystem:
    """The homogeneous-quantifier system of the given basic type."""
    kind = SolutionKind(kind)
    qa, qb = kind.quantifiers
    m, n = len(A), len(A[0])
    if isinstance(sigma, (str, RelationSign)):
        sigma = [sigma] * m
    return QuantIntervalSystem(A, b, [[qa] * n] * m, [qb] * m, sigma)


def _row_ir(kind: SolutionKind, s: RelationSign, axi: Interval, bi: Interval) -> bool:
    K = SolutionKind
    if s is EQ:
        if kind is K.WEAK:
            r = sub(bi, axi)
            return r.lo <= 0 <= r.hi
        if kind is K.TOLERABLE:
            return subseteq(axi, bi)
        if kind is K.CONTROLLABLE:
            return subseteq(bi, axi)
        return subseteq(sub(axi, bi), Interval(0, 0))
    if s is GE:
        return {
            K.WEAK: axi.hi >= bi.lo,
            K.TOLERABLE: axi.lo >= bi.lo,
            K.CONTROLLABLE: axi.hi >= bi.hi,
            K.STRONG: axi.lo >= bi.hi,
        }[kind]
    return {
        K.WEAK: axi.lo <= bi.hi,
        K.TOLERABLE: axi.hi <= bi.hi,
        K.CONTROLLABLE: axi.lo <= bi.lo,
        K.STRONG: axi.hi <= bi.lo,
    }[kind]


def _row_kr(kind: SolutionKind, s: RelationSign, acxi: Interval, bci: Interval) -> bool:
    if s is EQ:
        return subseteq(acxi, bci)
    if s is GE:
        return acxi.lo >= bci.lo
    return acxi.hi <= bci.hi


_W = {EQ: Interval(0, 0), GE: Interval(0, INF), LE: Interval(-INF, 0)}


def _row_ir_slack(kind: SolutionKind, s: RelationSign, axi: Interval, bi: Interval) -> bool:
    K = SolutionKind
    w = _W[s]
    if kind is K.WEAK:
        r = add(sub(bi, axi), w)
        return r.lo <= 0 <= r.hi
    if kind is K.TOLERABLE:
        return subseteq(axi, add(bi, w))
    if kind is K.CONTROLLABLE:
        # b is universally quantified: the slack enters with a minus sign
        return subseteq(bi, add(axi, neg(w)))
    return subseteq(sub(axi, bi), w)


def member_basic(kind: SolutionKind, A, b, sigma, x: Sequence[Number],
                 space: str = "ir") -> bool:
    """Closed-form membership for the four basic solution types.

    ``space`` selects the description: ``"ir"`` (classical intervals, one
    form per row relation), ``"ir_slack"`` (the single inclusion with the
    slack interval ``w``), ``"kr"`` (Kaucher intervals) or ``"real"``.
    """
    sys = basic_system(kind, A, b, sigma)
    kind = SolutionKind(kind)
    _check_x(sys, x)
    if space in ("ir", "ir_slack"):
        row = _row_ir if space == "ir" else _row_ir_slack
        ax = mat_vec(sys.A, x)
        return all(row(kind, s, axi, bi) for s, axi, bi in zip(sys.sigma, ax, sys.b))
    a_exists = kind in (SolutionKind.WEAK, SolutionKind.CONTROLLABLE)
    b_exists = kind in (SolutionKind.WEAK, SolutionKind.TOLERABLE)
    if space == "kr":
        Ad = tuple(tuple(dual(e) for e in r) for r in sys.A) if a_exists else sys.A
        bd = sys.b if b_exists else tuple(dual(e) for e in sys.b)
        acx = mat_vec(Ad, x)
        return all(_row_kr(kind, s, p, q) for s, p, q in zip(sys.sigma, acx, bd))
    if space == "real":
        ma, ra, mb, rb = mid_mat(sys.A), rad_mat(sys.A), mid_vec(sys.b), rad_vec(sys.b)
        ax = abs_vec(x)
        for maj, raj, mbi, rbi, s in zip(ma, ra, mb, rb, sys.sigma):
            y = sum((p * q for p, q in zip(maj, x)), 0) - mbi
            t = sum((p * q for p, q in zip(raj, ax)), 0)
            rhs = (t if a_exists else -t) + (rbi if b_exists else -rbi)
            lhs = abs(y) if s is EQ else (-y if s is GE else y)
            if not lhs <= rhs:
                return False
        return True
    raise ValueError(f"unknown description space {space!r}")
