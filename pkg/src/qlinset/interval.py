"""Kaucher (directed) interval arithmetic with exact endpoints.

An :class:`Interval` is a pair of endpoints ``[lo, hi]`` with no ordering
constraint, so improper intervals such as ``[5, 2]`` are first-class values.
Endpoints are plain Python numbers: ``int``, ``float`` or
:class:`fractions.Fraction`, with ``math.inf``/``-math.inf`` standing in for
the extended real endpoints.  Integer and fractional endpoints are kept exact
(division and halving promote them to ``Fraction``); floats are used as given.

Infinite endpoints are only meaningful for addition, multiplication by a
finite scalar, inclusion tests and endpoint comparisons.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

Number = Union[int, float, Fraction]

__all__ = [
    "Interval",
    "IndeterminateError",
    "Number",
    "ext_add",
    "mid",
    "rad",
    "dual",
    "pro",
    "subseteq",
    "join",
    "meet",
    "add",
    "sub",
    "neg",
    "scalar_mul",
    "mul",
    "recip",
    "div",
    "parse_interval",
    "format_number",
    "parse_number",
]


class IndeterminateError(ArithmeticError):
    """Raised for ``(+inf) + (-inf)`` and other undefined endpoint operations."""


def ext_add(a: Number, b: Number) -> Number:
    """Add two extended reals, refusing the indeterminate form."""
    if math.isinf(a) and math.isinf(b) and (a > 0) != (b > 0):
        raise IndeterminateError("indeterminate sum (+inf) + (-inf)")
    return a + b


def _ext_scale(lam: Number, a: Number) -> Number:
    # 0 * (+-inf) := 0, the only case where it arises is a zero scalar
    if lam == 0:
        return 0
    return lam * a


def _half(a: Number) -> Number:
    if isinstance(a, float):
        return a / 2
    return Fraction(a) / 2


def _inv(a: Number) -> Number:
    if isinstance(a, float):
        return 1.0 / a
    return Fraction(1) / a


def _finite(*vals: Number) -> bool:
    return all(not math.isinf(v) for v in vals)


@dataclass(frozen=True, slots=True)
class Interval:
    """Directed interval ``[lo, hi]``; ``lo > hi`` is an improper interval."""

    lo: Number
    hi: Number

    def __post_init__(self):
        if self.lo != self.lo or self.hi != self.hi:
            raise ValueError("NaN endpoint")

    @classmethod
    def point(cls, value: Number) -> Interval:
        return cls(value, value)

    @property
    def is_proper(self) -> bool:
        return self.lo <= self.hi

    @property
    def is_finite(self) -> bool:
        return _finite(self.lo, self.hi)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __str__(self) -> str:
        return f"[{format_number(self.lo)},{format_number(self.hi)}]"

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Interval):
            return mul(self, other)
        if isinstance(other, (int, float, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)


def _coerce(u) -> Interval:
    if isinstance(u, Interval):
        return u
    if isinstance(u, (int, float, Fraction)):
        return Interval(u, u)
    return NotImplemented


def _require_finite(u: Interval, what: str) -> None:
    if not u.is_finite:
        raise ValueError(f"{what} undefined on extended intervals")


def mid(u: Interval) -> Number:
    _require_finite(u, "mid/rad")
    return _half(u.lo + u.hi)


def rad(u: Interval) -> Number:
    """Radius ``(hi - lo)/2``; negative for improper intervals."""
    _require_finite(u, "mid/rad")
    return _half(u.hi - u.lo)


def dual(u: Interval) -> Interval:
    return Interval(u.hi, u.lo)


def pro(u: Interval) -> Interval:
    return u if u.is_proper else Interval(u.hi, u.lo)


def subseteq(u: Interval, v: Interval) -> bool:
    """Kaucher inclusion: ``lo_u >= lo_v`` and ``hi_u <= hi_v``."""
    return u.lo >= v.lo and u.hi <= v.hi


def join(*us: Interval) -> Interval:
    """Least upper bound with respect to inclusion."""
    return reduce(lambda p, q: Interval(min(p.lo, q.lo), max(p.hi, q.hi)), us)


def meet(*us: Interval) -> Interval:
    """Greatest lower bound with respect to inclusion (may be improper)."""
    return reduce(lambda p, q: Interval(max(p.lo, q.lo), min(p.hi, q.hi)), us)


def add(u: Interval, v: Interval) -> Interval:
    return Interval(ext_add(u.lo, v.lo), ext_add(u.hi, v.hi))


def scalar_mul(lam: Number, u: Interval) -> Interval:
    if math.isinf(lam):
        raise ValueError("scalar must be finite")
    if lam >= 0:
        return Interval(_ext_scale(lam, u.lo), _ext_scale(lam, u.hi))
    return Interval(lam * u.hi, lam * u.lo)


def neg(u: Interval) -> Interval:
    """``(-1) * u``; note ``u + neg(u)`` is not ``[0, 0]`` unless ``u`` is a point."""
    return scalar_mul(-1, u)


def sub(u: Interval, v: Interval) -> Interval:
    return add(u, neg(v))


# Sign classes of the Kaucher multiplication table.
_P, _Z, _N, _DZ = "P", "Z", "-P", "dZ"


def _sign_class(u: Interval) -> str:
    if u.lo >= 0 and u.hi >= 0:
        return _P
    if u.lo <= 0 and u.hi <= 0:
        return _N
    if u.lo < 0 < u.hi:
        return _Z
    return _DZ


def mul(u: Interval, v: Interval) -> Interval:
    """Kaucher product by sign-class case analysis."""
    if not (u.is_finite and v.is_finite):
        raise ValueError("mul requires finite endpoints")
    a, b = u.lo, u.hi
    c, d = v.lo, v.hi
    cu, cv = _sign_class(u), _sign_class(v)
    if cu == _P:
        if cv == _P:
            return Interval(a * c, b * d)
        if cv == _Z:
            return Interval(b * c, b * d)
        if cv == _N:
            return Interval(b * c, a * d)
        return Interval(a * c, a * d)
    if cu == _Z:
        if cv == _P:
            return Interval(a * d, b * d)
        if cv == _Z:
            return Interval(min(a * d, b * c), max(a * c, b * d))
        if cv == _N:
            return Interval(b * c, a * c)
        return Interval(0, 0)
    if cu == _N:
        if cv == _P:
            return Interval(a * d, b * c)
        if cv == _Z:
            return Interval(a * d, a * c)
        if cv == _N:
            return Interval(b * d, a * c)
        return Interval(b * d, b * c)
    # u in dual Z
    if cv == _P:
        return Interval(a * c, b * c)
    if cv == _Z:
        return Interval(0, 0)
    if cv == _N:
        return Interval(b * d, a * d)
    return Interval(max(a * c, b * d), min(a * d, b * c))


def recip(v: Interval) -> Interval:
    """``1/v`` for ``0`` outside ``pro v``; commutes with :func:`dual`."""
    lo, hi = pro(v)
    if lo <= 0 <= hi:
        raise ZeroDivisionError("division by zero-containing interval")
    return Interval(_inv(v.hi), _inv(v.lo))


def div(u: Interval, v: Interval) -> Interval:
    if not (u.is_finite and v.is_finite):
        raise ValueError("div requires finite endpoints")
    return mul(u, recip(v))


# -- text syntax ------------------------------------------------------------

_INF_TOKENS = {"inf": math.inf, "+inf": math.inf, "-inf": -math.inf}


def parse_number(tok) -> Number:
    """Parse ``int``/decimal/``p/q``/``inf`` tokens into an exact number.

    Decimal strings are parsed exactly (``"0.1"`` is ``Fraction(1, 10)``).
    """
    if isinstance(tok, bool):
        raise ValueError(f"not a number: {tok!r}")
    if isinstance(tok, (int, Fraction)):
        return tok
    if isinstance(tok, float):
        if tok != tok:
            raise ValueError("NaN is not a valid endpoint")
        return tok if math.isinf(tok) else Fraction(tok)
    s = str(tok).strip().lower()
    if s in _INF_TOKENS:
        return _INF_TOKENS[s]
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {tok!r}") from exc
    return int(q) if q.denominator == 1 else q


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


def format_number(x: Number) -> str:
    """Lossless text form: integers, exact decimals for dyadics, else ``p/q``."""
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        x = Fraction(x)
    q = Fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    if not _is_dyadic(q):
        return f"{q.numerator}/{q.denominator}"
    k = q.denominator.bit_length() - 1
    digits = abs(q.numerator) * 5**k
    s = str(digits).rjust(k + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{s[:-k]}.{s[-k:]}"


_INTERVAL_RE = re.compile(r"^\s*\[\s*([^,\]]+?)\s*,\s*([^,\]]+?)\s*\]\s*$")


def parse_interval(text: str) -> Interval:
    """Parse ``"[lo,hi]"``; endpoints may be decimals, ``p/q`` or ``+-inf``."""
    m = _INTERVAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed interval: {text!r}")
    return Interval(parse_number(m.group(1)), parse_number(m.group(2)))
