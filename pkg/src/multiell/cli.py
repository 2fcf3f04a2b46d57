"""Command-line interface: list, verify, sweep, selftest.

Exit codes: 0 on success/pass, 2 when a verification or selftest check
fails, 3 on domain or convergence errors.  An optional key=value config
file (keys: digits, tol, level_cap) is read from the path in the
MULTIELL_CONFIG environment variable; command-line flags win over it.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import DomainError, IntegrandFailureError, NonConvergenceError
from .identities import export, get_identity, list_identities, sweep, verify
from .precision import PrecisionContext
from .quadrature import MAX_LEVEL
from .selftest import run_selftest

CONFIG_ENV = "MULTIELL_CONFIG"


def _load_config():
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    config = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in ("digits", "tol", "level_cap"):
                raise DomainError(f"{path}:{lineno}: unknown config key {key!r}")
            config[key] = value
    return config


def _context(args, config):
    digits = args.digits if args.digits is not None else int(config.get("digits", 50))
    tol = getattr(args, "tol", None)
    if tol is None:
        tol = config.get("tol")
    return PrecisionContext(digits, pass_tol=tol)


def _level_cap(args, config):
    cap = getattr(args, "level_cap", None)
    if cap is None:
        cap = int(config.get("level_cap", MAX_LEVEL))
    return cap


def _parse_pairs(pairs, what):
    out = {}
    for item in pairs or ():
        if "=" not in item:
            raise DomainError(f"expected name=value for {what}, got {item!r}")
        name, value = item.split("=", 1)
        out[name.strip()] = value.strip()
    return out


def _emit(reports, args, ctx):
    fmt = getattr(args, "format", "text") or "text"
    out_path = getattr(args, "out", None)
    if fmt == "text":
        lines = []
        for r in reports:
            params = ", ".join(f"{k}={ctx.mp.nstr(v, 8) if not isinstance(v, int) else v}"
                               for k, v in r.params.items())
            lines.append(f"{r.id}  {params}".rstrip())
            lines.append(f"  lhs     = {ctx.mp.nstr(r.lhs_value, ctx.digits)}")
            lines.append(f"  rhs     = {ctx.mp.nstr(r.rhs_value, ctx.digits)}")
            lines.append(f"  abs err = {ctx.mp.nstr(r.abs_err, 3)}   rel err = {ctx.mp.nstr(r.rel_err, 3)}")
            lines.append(f"  digits  = {r.digits_used}   time = {r.wall_time:.2f}s")
            lines.append(f"  {'PASSED' if r.passed else 'FAILED'}")
        payload = ("\n".join(lines) + "\n").encode()
    else:
        payload = export(reports, fmt)
    if out_path:
        with open(out_path, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _cmd_list(args, config):
    for rec in list_identities():
        print(rec.summary())
    return 0


def _cmd_verify(args, config):
    ctx = _context(args, config)
    params = _parse_pairs(args.param, "--param")
    report = verify(args.identity, params, ctx, max_level=_level_cap(args, config))
    _emit([report], args, ctx)
    return 0 if report.passed else 2


def _cmd_sweep(args, config):
    ctx = _context(args, config)
    try:
        lo, hi, steps = args.range.split(":")
        steps = int(steps)
    except ValueError:
        raise DomainError(f"--range must be lo:hi:steps, got {args.range!r}")
    fixed = _parse_pairs(args.fixed, "--fixed")
    reports = sweep(args.identity, args.param, lo, hi, steps, ctx,
                    fixed=fixed, max_level=_level_cap(args, config))
    _emit(reports, args, ctx)
    return 0 if all(r.passed for r in reports) else 2


def _cmd_selftest(args, config):
    digits = args.digits if args.digits is not None else int(config.get("digits", 50))
    results = run_selftest(digits=digits, quick=args.quick)
    return 0 if all(r.passed for r in results) else 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="multiell",
        description="Verify multiple elliptic integral identities at high precision.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the identity catalog")

    p_verify = sub.add_parser("verify", help="verify one identity")
    p_verify.add_argument("identity", help="catalog id, e.g. I8 or I1")
    p_verify.add_argument("--param", action="append", metavar="NAME=VALUE",
                          help="identity parameter (repeatable)")
    p_verify.add_argument("--digits", type=int, default=None)
    p_verify.add_argument("--tol", default=None, help="override the pass tolerance")
    p_verify.add_argument("--level-cap", dest="level_cap", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--out", default=None, help="write output to a file")

    p_sweep = sub.add_parser("sweep", help="verify along a parameter grid")
    p_sweep.add_argument("identity")
    p_sweep.add_argument("--param", required=True, help="parameter to sweep")
    p_sweep.add_argument("--range", required=True, metavar="LO:HI:STEPS")
    p_sweep.add_argument("--fixed", action="append", metavar="NAME=VALUE",
                         help="fix another parameter (repeatable)")
    p_sweep.add_argument("--digits", type=int, default=None)
    p_sweep.add_argument("--tol", default=None)
    p_sweep.add_argument("--level-cap", dest="level_cap", type=int, default=None)
    p_sweep.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_sweep.add_argument("--out", default=None)

    p_self = sub.add_parser("selftest", help="run the property suites")
    p_self.add_argument("--quick", action="store_true",
                        help="reduced precision (30 digits)")
    p_self.add_argument("--digits", type=int, default=None)

    return parser


_COMMANDS = {
    "list": _cmd_list,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _load_config()
        return _COMMANDS[args.command](args, config)
    except (DomainError, NonConvergenceError, IntegrandFailureError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
