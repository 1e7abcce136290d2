"""Kaucher interval arithmetic and membership tests for quantifier solution
sets of interval linear systems ``A x sigma b``."""

from .interval import Interval, dual, mid, pro, rad, subseteq
from .membership import (
    MembershipVerdict,
    SolutionKind,
    member_basic,
    member_ir,
    member_kr,
    member_real,
)
from .oracle import oracle_member
from .system import (
    ParamRef,
    Quantifier,
    QuantIntervalSystem,
    RelationSign,
    build_derived,
    classify_prefix,
    default_prefix,
    negate_system,
)

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "dual",
    "mid",
    "pro",
    "rad",
    "subseteq",
    "MembershipVerdict",
    "SolutionKind",
    "member_basic",
    "member_ir",
    "member_kr",
    "member_real",
    "oracle_member",
    "ParamRef",
    "Quantifier",
    "QuantIntervalSystem",
    "RelationSign",
    "build_derived",
    "classify_prefix",
    "default_prefix",
    "negate_system",
]
