"""Interval-quantifier linear systems ``Q(A, b, quantA, quantB)(A x sigma b)``.

A system carries its interval data, the quantifier attached to every
parameter, the relation of every row and an explicit quantifier prefix
(the order in which the elementary quantifiers are written).  Indices are
0-based in code; parameter *names* (``a_1_2``, ``b_3``) are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence, Tuple

from .interval import Interval, Number, dual
from .linalg import IMatrix, IVector, as_imatrix, as_ivector, neg_mat, neg_vec

__all__ = [
    "Quantifier",
    "RelationSign",
    "ParamRef",
    "PrefixClass",
    "QuantIntervalSystem",
    "DerivedForms",
    "PrefixError",
    "build_derived",
    "classify_prefix",
    "default_prefix",
    "negate_system",
    "with_sigma",
    "flip_quantifiers",
]

ZERO = Interval(0, 0)


class Quantifier(str, Enum):
    FORALL = "forall"
    EXISTS = "exists"

    @classmethod
    def coerce(cls, q) -> Quantifier:
        if isinstance(q, cls):
            return q
        key = str(q).strip().lower()
        if key in ("a", "all", "forall", "∀"):
            return cls.FORALL
        if key in ("e", "ex", "exists", "∃"):
            return cls.EXISTS
        raise ValueError(f"unknown quantifier {q!r}")

    def flipped(self) -> Quantifier:
        return Quantifier.EXISTS if self is Quantifier.FORALL else Quantifier.FORALL


class RelationSign(str, Enum):
    EQ = "eq"
    GE = "ge"
    LE = "le"

    @classmethod
    def coerce(cls, s) -> RelationSign:
        if isinstance(s, cls):
            return s
        key = str(s).strip().lower()
        table = {"eq": cls.EQ, "=": cls.EQ, "==": cls.EQ,
                 "ge": cls.GE, ">=": cls.GE, "≥": cls.GE,
                 "le": cls.LE, "<=": cls.LE, "≤": cls.LE}
        if key not in table:
            raise ValueError(f"unknown relation {s!r}")
        return table[key]


class PrefixError(ValueError):
    """The quantifier prefix does not belong to the class a routine needs."""


class ParamRef(NamedTuple):
    """A matrix entry (``kind == "a"``) or right-hand side entry (``"b"``)."""

    kind: str
    i: int
    j: int = -1

    @property
    def name(self) -> str:
        if self.kind == "a":
            return f"a_{self.i + 1}_{self.j + 1}"
        return f"b_{self.i + 1}"

    @classmethod
    def parse(cls, name: str) -> ParamRef:
        parts = name.strip().split("_")
        try:
            if parts[0] == "a" and len(parts) == 3:
                return cls("a", int(parts[1]) - 1, int(parts[2]) - 1)
            if parts[0] == "b" and len(parts) == 2:
                return cls("b", int(parts[1]) - 1)
        except ValueError:
            pass
        raise ValueError(f"bad parameter name {name!r}")

    def __str__(self) -> str:
        return self.name


class PrefixClass(NamedTuple):
    is_ae: bool
    is_rowwise_ae: bool
    is_qsigma: bool


@dataclass(frozen=True)
class QuantIntervalSystem:
    """Interval data plus quantifier pattern, relations and prefix order.

    Sequences are coerced on construction: ``A`` accepts nested
    ``(lo, hi)`` pairs, quantifiers accept ``"forall"``/``"exists"``/``"A"``/
    ``"E"``, relations accept ``"eq"``/``"ge"``/``"le"`` or ``=``, ``>=``, ``<=``.
    A missing prefix is replaced by :func:`default_prefix`.
    """

    A: IMatrix
    b: IVector
    quant_a: Tuple[Tuple[Quantifier, ...], ...]
    quant_b: Tuple[Quantifier, ...]
    sigma: Tuple[RelationSign, ...]
    prefix: Optional[Tuple[ParamRef, ...]] = None

    def __post_init__(self):
        A = as_imatrix(self.A)
        b = as_ivector(self.b)
        qa = tuple(tuple(Quantifier.coerce(q) for q in row) for row in self.quant_a)
        qb = tuple(Quantifier.coerce(q) for q in self.quant_b)
        sigma = tuple(RelationSign.coerce(s) for s in self.sigma)
        m = len(A)
        if m == 0:
            raise ValueError("system needs at least one row")
        n = len(A[0])
        if n == 0:
            raise ValueError("system needs at least one column")
        if len(b) != m or len(qb) != m or len(sigma) != m:
            raise ValueError("b, quant_b and sigma must have one entry per row")
        if len(qa) != m or any(len(r) != n for r in qa):
            raise ValueError("quant_a must have the shape of A")
        for e in (*(e for row in A for e in row), *b):
            if not e.is_finite or not e.is_proper:
                raise ValueError(f"system data must be proper finite intervals, got {e}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "quant_a", qa)
        object.__setattr__(self, "quant_b", qb)
        object.__setattr__(self, "sigma", sigma)
        if self.prefix is None:
            prefix = _default_prefix(qa, qb)
        else:
            prefix = tuple(p if isinstance(p, ParamRef) else ParamRef.parse(p)
                           for p in self.prefix)
            expected = set(_all_params(m, n))
            if len(prefix) != len(expected) or set(prefix) != expected:
                raise ValueError("prefix must list every parameter exactly once")
        object.__setattr__(self, "prefix", prefix)

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    def quantifier(self, p: ParamRef) -> Quantifier:
        return self.quant_a[p.i][p.j] if p.kind == "a" else self.quant_b[p.i]

    def interval(self, p: ParamRef) -> Interval:
        return self.A[p.i][p.j] if p.kind == "a" else self.b[p.i]

    def row_prefix(self, i: int) -> Tuple[ParamRef, ...]:
        """Order-preserving restriction of the prefix to row ``i``."""
        return tuple(p for p in self.prefix if p.i == i)

    def replace(self, **changes) -> QuantIntervalSystem:
        fields = dict(A=self.A, b=self.b, quant_a=self.quant_a, quant_b=self.quant_b,
                      sigma=self.sigma, prefix=self.prefix)
        fields.update(changes)
        return QuantIntervalSystem(**fields)


def _all_params(m: int, n: int):
    for i in range(m):
        for j in range(n):
            yield ParamRef("a", i, j)
        yield ParamRef("b", i)


def _default_prefix(qa, qb) -> Tuple[ParamRef, ...]:
    m, n = len(qa), len(qa[0])
    out = []
    for i in range(m):
        row = [ParamRef("a", i, j) for j in range(n)] + [ParamRef("b", i)]
        q = lambda p: qa[p.i][p.j] if p.kind == "a" else qb[p.i]
        out += [p for p in row if q(p) is Quantifier.FORALL]
        out += [p for p in row if q(p) is Quantifier.EXISTS]
    return tuple(out)


def default_prefix(sys: QuantIntervalSystem) -> Tuple[ParamRef, ...]:
    """Row-major prefix with each row's universal parameters first."""
    return _default_prefix(sys.quant_a, sys.quant_b)


def _forall_before_exists(quants: Sequence[Quantifier]) -> bool:
    seen_exists = False
    for q in quants:
        if q is Quantifier.EXISTS:
            seen_exists = True
        elif seen_exists:
            return False
    return True


def classify_prefix(sys: QuantIntervalSystem) -> PrefixClass:
    is_ae = _forall_before_exists([sys.quantifier(p) for p in sys.prefix])
    rows_ok = [_forall_before_exists([sys.quantifier(p) for p in sys.row_prefix(i)])
               for i in range(sys.m)]
    is_qsigma = all(ok for ok, s in zip(rows_ok, sys.sigma) if s is RelationSign.EQ)
    return PrefixClass(is_ae, all(rows_ok), is_qsigma)


def require_qsigma(sys: QuantIntervalSystem) -> None:
    if not classify_prefix(sys).is_qsigma:
        raise PrefixError("prefix outside class Q^sigma")


@dataclass(frozen=True)
class DerivedForms:
    """Split, characteristic and sign-pattern forms of a system plus slacks."""

    Afa: IMatrix
    Aex: IMatrix
    bfa: IVector
    bex: IVector
    Ac: IMatrix
    bc: IVector
    As: Tuple[Tuple[int, ...], ...]
    bs: Tuple[int, ...]
    u: Tuple[Number, ...]
    v: Tuple[Number, ...]
    w: IVector


_U = {RelationSign.EQ: 0, RelationSign.GE: 0, RelationSign.LE: -math.inf}
_V = {RelationSign.EQ: 0, RelationSign.GE: math.inf, RelationSign.LE: 0}
_W = {RelationSign.EQ: Interval(0, 0),
      RelationSign.GE: Interval(0, math.inf),
      RelationSign.LE: Interval(-math.inf, 0)}


def build_derived(sys: QuantIntervalSystem) -> DerivedForms:
    FA, EX = Quantifier.FORALL, Quantifier.EXISTS
    A, b, qa, qb = sys.A, sys.b, sys.quant_a, sys.quant_b
    Afa = tuple(tuple(e if q is FA else ZERO for e, q in zip(r, qr)) for r, qr in zip(A, qa))
    Aex = tuple(tuple(e if q is EX else ZERO for e, q in zip(r, qr)) for r, qr in zip(A, qa))
    bfa = tuple(e if q is FA else ZERO for e, q in zip(b, qb))
    bex = tuple(e if q is EX else ZERO for e, q in zip(b, qb))
    Ac = tuple(tuple(e if q is FA else dual(e) for e, q in zip(r, qr)) for r, qr in zip(A, qa))
    bc = tuple(dual(e) if q is FA else e for e, q in zip(b, qb))
    As = tuple(tuple(1 if q is EX else -1 for q in qr) for qr in qa)
    bs = tuple(1 if q is EX else -1 for q in qb)
    return DerivedForms(
        Afa=Afa, Aex=Aex, bfa=bfa, bex=bex, Ac=Ac, bc=bc, As=As, bs=bs,
        u=tuple(_U[s] for s in sys.sigma),
        v=tuple(_V[s] for s in sys.sigma),
        w=tuple(_W[s] for s in sys.sigma),
    )


def negate_system(sys: QuantIntervalSystem) -> QuantIntervalSystem:
    """``Q(-A, -b, quantA, quantB)`` with the same relations and prefix."""
    return sys.replace(A=neg_mat(sys.A), b=neg_vec(sys.b))


def with_sigma(sys: QuantIntervalSystem, sigma) -> QuantIntervalSystem:
    """Same system with relations replaced (a single relation is broadcast)."""
    if isinstance(sigma, (str, RelationSign)):
        sigma = [sigma] * sys.m
    return sys.replace(sigma=tuple(sigma))


def flip_quantifiers(sys: QuantIntervalSystem) -> QuantIntervalSystem:
    """Swap every quantifier; the prefix order is kept."""
    return sys.replace(
        quant_a=tuple(tuple(q.flipped() for q in r) for r in sys.quant_a),
        quant_b=tuple(q.flipped() for q in sys.quant_b),
    )
