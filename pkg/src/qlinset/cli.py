"""``qlinset`` command line.

Exit codes: ``check`` returns 0 for a member, 1 for a non-member and 2 for
errors or disagreeing methods; ``selftest`` returns 0 iff every suite passes.
"""

from __future__ import annotations

import argparse
import sys as _sys
from pathlib import Path

from . import membership, oracle, raster, selftest
from .fileio import SystemFileError, load_system, parse_point
from .interval import format_number
from .system import PrefixError, build_derived, classify_prefix

METHODS = ("real", "kr", "ir", "oracle")


def _fmt_vec(v) -> str:
    return "(" + ", ".join(format_number(x) if not hasattr(x, "lo") else str(x) for x in v) + ")"


def _fmt_mat(M) -> str:
    return "[" + ", ".join(_fmt_vec(r).replace("(", "[").replace(")", "]") for r in M) + "]"


def cmd_check(args) -> int:
    sysm = load_system(args.file)
    x = parse_point(args.x)
    if len(x) != sysm.n:
        raise SystemFileError(f"point has {len(x)} coordinates, system has {sysm.n} unknowns")
    methods = METHODS if args.method == "all" else (args.method,)
    verdicts = {}
    for meth in methods:
        if meth == "oracle":
            verdicts[meth] = oracle.oracle_member(sysm, x)
            print(f"oracle: {'member' if verdicts[meth] else 'non-member'}")
            continue
        v = getattr(membership, f"member_{meth}")(sysm, x)
        verdicts[meth] = v.member
        print(f"{meth}: {'member' if v.member else 'non-member'}")
        for i, (lo, hi) in enumerate(v.per_row_residuals, start=1):
            print(f"  row {i}: lower slack {format_number(lo)}, upper slack {format_number(hi)}")
    if len(set(verdicts.values())) > 1:
        print("DISAGREEMENT between methods: " +
              ", ".join(f"{k}={v}" for k, v in verdicts.items()))
        return 2
    if len(methods) > 1:
        print("all methods agree")
    return 0 if next(iter(verdicts.values())) else 1


def cmd_info(args) -> int:
    sysm = load_system(args.file)
    d = build_derived(sysm)
    cls = classify_prefix(sysm)
    sections = [
        ("prefix", " ".join(f"{sysm.quantifier(p).value}:{p.name}" for p in sysm.prefix)),
        ("class", f"AE={cls.is_ae} rowwise_AE={cls.is_rowwise_ae} Qsigma={cls.is_qsigma}"),
        ("sigma", " ".join(s.value for s in sysm.sigma)),
        ("Afa", _fmt_mat(d.Afa)),
        ("Aex", _fmt_mat(d.Aex)),
        ("bfa", _fmt_vec(d.bfa)),
        ("bex", _fmt_vec(d.bex)),
        ("Ac", _fmt_mat(d.Ac)),
        ("bc", _fmt_vec(d.bc)),
        ("As", _fmt_mat(d.As)),
        ("bs", _fmt_vec(d.bs)),
        ("u", _fmt_vec(d.u)),
        ("v", _fmt_vec(d.v)),
        ("w", _fmt_vec(d.w)),
    ]
    for name, text in sections:
        print(f"{name}: {text}")
    return 0


def _parse_window(text: str):
    parts = [float(t) for t in text.split(",")]
    if len(parts) != 4:
        raise ValueError("window needs x1lo,x1hi,x2lo,x2hi")
    return tuple(parts)


def _parse_res(text: str):
    w, _, h = text.lower().partition("x")
    return int(w), int(h)


def cmd_raster(args) -> int:
    sysm = load_system(args.file)
    if sysm.n != 2:
        raise SystemFileError(f"raster needs n = 2, file has n = {sysm.n}")
    w, h = _parse_res(args.res)
    job = raster.RasterJob(_parse_window(args.window), w, h, args.format)
    mask = raster.render(sysm, job, threads=args.threads)
    data = raster.to_pgm(mask) if job.fmt == "pgm" else raster.to_csv(mask, job)
    Path(args.out).write_bytes(data)
    print(f"wrote {args.out}: {int(mask.sum())} of {mask.size} pixels in the solution set")
    return 0


def cmd_selftest(args) -> int:
    if args.cases <= 0:
        print("warning: --cases 0, nothing to check")
        return 0
    results = selftest.run_all(seed=args.seed, cases=args.cases)
    ok = True
    for res in results:
        print(res.line())
        if not res.passed:
            ok = False
            print("counterexample:")
            print(res.counterexample)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlinset",
                                description="Quantifier solution sets of interval linear systems")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test whether a point solves the system")
    c.add_argument("file")
    c.add_argument("--x", required=True, help='point, e.g. "1,-0.5,1/3"')
    c.add_argument("--method", choices=METHODS + ("all",), default="real")
    c.set_defaults(func=cmd_check)

    i = sub.add_parser("info", help="print derived forms of the system")
    i.add_argument("file")
    i.set_defaults(func=cmd_info)

    r = sub.add_parser("raster", help="render a 2-D solution set")
    r.add_argument("file")
    r.add_argument("--window", required=True, help="x1lo,x1hi,x2lo,x2hi")
    r.add_argument("--res", required=True, help="WxH, e.g. 200x200")
    r.add_argument("--out", required=True)
    r.add_argument("--format", choices=("pgm", "csv"), default="pgm")
    r.add_argument("--threads", type=int, default=None)
    r.set_defaults(func=cmd_raster)

    s = sub.add_parser("selftest", help="run the randomized agreement suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=500)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SystemFileError, PrefixError, ValueError, OSError, oracle.OracleSizeError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    _sys.exit(main())
