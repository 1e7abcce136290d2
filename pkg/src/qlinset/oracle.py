"""Brute-force evaluation of the quantified predicate, for cross-checking.

Nothing here uses interval arithmetic or the derived characteristic forms;
only raw endpoints of the parameter intervals are read.

Inequality rows: the row residual ``sum_j A_ij x_j - b_i`` is affine in each
parameter, so a universal (existential) parameter can be replaced by the
minimum (maximum) of its term, attained at an endpoint chosen by sign.

Equation rows with universal parameters first: for fixed universal values
the existential part ranges over a closed interval, and the requirement that
this interval brackets the universal part is a pair of affine inequalities
in the universal parameters.  An affine inequality holds on a box iff it
holds at every corner, so enumerating the corners is exact.
"""

from __future__ import annotations

import itertools
import random
from typing import Optional, Sequence

from .system import ParamRef, PrefixError, Quantifier, QuantIntervalSystem, RelationSign

__all__ = [
    "MAX_ORACLE_DIM",
    "OracleSizeError",
    "oracle_row_ineq",
    "oracle_row_eq",
    "oracle_member",
    "oracle_nested",
    "oracle_prefix_shuffle_test",
    "w_operator",
]

MAX_ORACLE_DIM = 6

FA, EX = Quantifier.FORALL, Quantifier.EXISTS


class OracleSizeError(ValueError):
    pass


def _guard(sys: QuantIntervalSystem) -> None:
    if sys.m > MAX_ORACLE_DIM or sys.n > MAX_ORACLE_DIM:
        raise OracleSizeError(f"oracle limited to m, n <= {MAX_ORACLE_DIM}")


def _term_extremum(c, lo, hi, q: Quantifier):
    """min (forall) or max (exists) of ``c * t`` over ``t in [lo, hi]``."""
    if q is FA:
        return c * lo if c >= 0 else c * hi
    return c * hi if c >= 0 else c * lo


def _row_terms(sys: QuantIntervalSystem, i: int, x: Sequence):
    """``(coefficient, interval, quantifier)`` of each parameter in ``A_i x - b_i``."""
    terms = [(x[j], sys.A[i][j], sys.quant_a[i][j]) for j in range(sys.n)]
    terms.append((-1, sys.b[i], sys.quant_b[i]))
    return terms


def oracle_row_ineq(sys: QuantIntervalSystem, i: int, x: Sequence) -> bool:
    """Single inequality row by extremum of every term."""
    s = sys.sigma[i]
    if s is RelationSign.EQ:
        raise ValueError("oracle_row_ineq needs an inequality row")
    sign = 1 if s is RelationSign.GE else -1
    total = 0
    for c, iv, q in _row_terms(sys, i, x):
        total += _term_extremum(sign * c, iv.lo, iv.hi, q)
    return total >= 0


def _row_is_ae(sys: QuantIntervalSystem, i: int) -> bool:
    seen_ex = False
    for p in sys.row_prefix(i):
        if sys.quantifier(p) is EX:
            seen_ex = True
        elif seen_ex:
            return False
    return True


def oracle_row_eq(sys: QuantIntervalSystem, i: int, x: Sequence) -> bool:
    """Equation row by corner enumeration of the universal parameters."""
    if sys.sigma[i] is not RelationSign.EQ:
        raise ValueError("oracle_row_eq needs an equation row")
    if not _row_is_ae(sys, i):
        raise PrefixError("equation row requires AE prefix")
    terms = _row_terms(sys, i, x)
    fa_terms = [(c, iv) for c, iv, q in terms if q is FA]
    ex_terms = [(c, iv) for c, iv, q in terms if q is EX]
    g_min = sum(_term_extremum(c, iv.lo, iv.hi, FA) for c, iv in ex_terms)
    g_max = sum(_term_extremum(c, iv.lo, iv.hi, EX) for c, iv in ex_terms)
    for corner in itertools.product(*[(iv.lo, iv.hi) for _, iv in fa_terms]):
        f = sum(c * t for (c, _), t in zip(fa_terms, corner))
        # need f + g = 0 for some g in [g_min, g_max]
        if not g_min <= -f <= g_max:
            return False
    return True


def oracle_member(sys: QuantIntervalSystem, x: Sequence) -> bool:
    """Conjunction of the row oracles."""
    _guard(sys)
    if len(x) != sys.n:
        raise ValueError("point dimension mismatch")
    for i, s in enumerate(sys.sigma):
        ok = oracle_row_eq(sys, i, x) if s is RelationSign.EQ else oracle_row_ineq(sys, i, x)
        if not ok:
            return False
    return True


def oracle_nested(sys: QuantIntervalSystem, x: Sequence,
                  prefix: Optional[Sequence[ParamRef]] = None) -> bool:
    """Evaluate the whole inequality system quantifier by quantifier.

    Walks the prefix in order over the full system (no splitting into rows):
    a universal parameter becomes a conjunction over its two endpoints, an
    existential one a disjunction.  Exact for inequality rows because, with
    the outer parameters fixed, every row is a threshold condition on the
    current parameter.
    """
    _guard(sys)
    if any(s is RelationSign.EQ for s in sys.sigma):
        raise ValueError("nested endpoint evaluation needs an inequality-only system")
    prefix = tuple(sys.prefix if prefix is None else prefix)
    signs = [1 if s is RelationSign.GE else -1 for s in sys.sigma]
    steps = []
    for p in prefix:
        iv = sys.interval(p)
        coef = signs[p.i] * (x[p.j] if p.kind == "a" else -1)
        values = (iv.lo,) if iv.lo == iv.hi else (iv.lo, iv.hi)
        steps.append((p.i, coef, values, sys.quantifier(p) is FA))
    sums = [0] * sys.m

    def walk(k: int) -> bool:
        if k == len(steps):
            return all(s >= 0 for s in sums)
        i, coef, values, universal = steps[k]
        base = sums[i]
        try:
            for v in values:
                sums[i] = base + coef * v
                ok = walk(k + 1)
                if ok != universal:
                    return ok
            return universal
        finally:
            sums[i] = base

    return walk(0)


def oracle_prefix_shuffle_test(sys: QuantIntervalSystem, x: Sequence, trials: int,
                               rng: Optional[random.Random] = None) -> bool:
    """True iff ``trials`` random prefix orders all give the same nested verdict.

    When ``trials`` is at least the number of distinct orders, every
    permutation is checked instead.
    """
    if any(s is RelationSign.EQ for s in sys.sigma):
        raise ValueError("prefix shuffling is only meaningful for inequality systems")
    rng = rng or random.Random(0)
    params = list(sys.prefix)
    reference = oracle_nested(sys, x)
    n_orders = 1
    for k in range(2, len(params) + 1):
        n_orders *= k
    if trials >= n_orders:
        orders = itertools.permutations(params)
    else:
        orders = (rng.sample(params, len(params)) for _ in range(trials))
    return all(oracle_nested(sys, x, order) == reference for order in orders)


def w_operator(op: str, u, v):
    """Kaucher ``u op v`` straight from the nested inclusion extremum.

    ``op`` is ``"mul"`` or ``"div"``; ``u`` and ``v`` are ``(lo, hi)`` pairs
    (or intervals).  For each fixed ``s`` in ``pro u`` the inner extremum over
    ``t`` in ``pro v`` is taken at the endpoints of ``pro v`` (the product or
    quotient is monotone in ``t``); join if ``v`` is proper, meet otherwise.
    The outer extremum over ``s`` is of min/max of linear functions through
    the origin, so it is attained at the endpoints of ``pro u`` or at ``0``.
    Returns ``(lo, hi)``.
    """
    ulo, uhi = u
    vlo, vhi = v
    u_proper = ulo <= uhi
    v_proper = vlo <= vhi
    pu = (min(ulo, uhi), max(ulo, uhi))
    pv = (min(vlo, vhi), max(vlo, vhi))
    if op == "div":
        if pv[0] <= 0 <= pv[1]:
            raise ZeroDivisionError("division by zero-containing interval")
        f = lambda s, t: s / t
    elif op == "mul":
        f = lambda s, t: s * t
    else:
        raise ValueError(op)
    candidates = {pu[0], pu[1]}
    if pu[0] <= 0 <= pu[1]:
        candidates.add(0)
    inner = []
    for s in candidates:
        vals = [f(s, t) for t in pv]
        inner.append((min(vals), max(vals)) if v_proper else (max(vals), min(vals)))
    if u_proper:
        return min(lo for lo, _ in inner), max(hi for _, hi in inner)
    return max(lo for lo, _ in inner), min(hi for _, hi in inner)
