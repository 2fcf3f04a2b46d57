"""Identity catalog, verification driver, parameter sweeps, and report export.

Each catalog row pairs a left-hand side (a quadrature or a series partial
sum) with a closed-form right-hand side.  The I-numbering is this
artifact's own labeling scheme.  A report passes when the absolute
discrepancy sits below ctx.pass_tol * max(1, |rhs|); rows with complex
kernels additionally require the imaginary part of the quadrature value to
sit below ten times the quadrature error estimate (the kernels are
conjugate-symmetric, so the imaginary part must vanish -- tested, not
assumed).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass

import mpmath

from . import kernels
from .elliptic import generating_integral_closed_form
from .errors import DomainError, OutOfDomainError
from .precision import PrecisionContext
from .quadrature import INF, MAX_LEVEL, IntegralSpec, integrate, integrate_complex_kernel
from .series import (SeriesId, _ramanujan_data, clausen_sum, legendre_sum,
                     ramanujan_sum, ramanujan_target)
from .singular import rhs_constant

_HALF = 0.5  # the singular abscissa of the K(2 sqrt(x(1-x))) family (exact binary)


@dataclass(frozen=True)
class ParamSpec:
    """Domain of one identity parameter: an interval or discrete choices."""

    name: str
    lo: object = None
    hi: object = None
    lo_open: bool = False
    hi_open: bool = False
    choices: tuple = None

    def describe(self) -> str:
        if self.choices is not None:
            return f"{self.name} in {{{', '.join(str(c) for c in self.choices)}}}"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open or self.hi is None else "]"
        hi = "inf" if self.hi is None else self.hi
        return f"{self.name} in {left}{self.lo}, {hi}{right}"

    def validate(self, value, mp):
        if self.choices is not None:
            try:
                as_int = int(value)
                if as_int != (float(value) if not isinstance(value, str) else as_int):
                    raise ValueError
            except (TypeError, ValueError):
                raise OutOfDomainError(f"{self.name} must be an integer choice, got {value!r}")
            if as_int not in self.choices:
                raise OutOfDomainError(f"{self.name} must be one of {self.choices}, got {as_int}")
            return as_int
        try:
            v = mp.mpf(value)
        except (TypeError, ValueError):
            raise OutOfDomainError(f"{self.name} must be numeric, got {value!r}")
        lo = None if self.lo is None else mp.mpf(self.lo)
        hi = None if self.hi is None else mp.mpf(self.hi)
        if lo is not None and (v < lo or (self.lo_open and v == lo)):
            raise OutOfDomainError(f"{self.name} = {v} below domain {self.describe()}")
        if hi is not None and (v > hi or (self.hi_open and v == hi)):
            raise OutOfDomainError(f"{self.name} = {v} above domain {self.describe()}")
        return v


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    description: str
    params: tuple
    kind: str  # "quad" | "quad_complex" | "series"
    singular_notes: str
    lhs: object
    rhs: object

    def param_names(self):
        return tuple(p.name for p in self.params)

    def summary(self) -> str:
        doms = ", ".join(p.describe() for p in self.params) or "no parameters"
        return f"{self.id:7s} {doms:28s} {self.description}"


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: dict
    lhs_value: object
    rhs_value: object
    abs_err: object
    rel_err: object
    passed: bool
    digits_used: int
    wall_time: float
    err_estimate: object = None


def _series_terms(ratio, digits: int) -> int:
    """Terms needed for a geometric-ish series with per-term factor `ratio`."""
    r = abs(ratio)
    if r == 0:
        return 1
    return max(60, int((digits + 12) * math.log(10) / -math.log(r)) + 10)


def _weighted_spec(a):
    return IntegralSpec(
        "weighted_kernel", (a, 0), (0, 1),
        lambda mp, av, ov: kernels.weighted_kernel(mp, av, int(ov)),
        singular_points=(_HALF,),
    )


def _quad_lhs(spec_builder, complex_kind=False):
    run = integrate_complex_kernel if complex_kind else integrate
    def lhs(ctx, params, max_level):
        result = run(spec_builder(ctx, params), ctx, max_level=max_level)
        return result.value, result
    return lhs


def _axial_spec(ctx, params):
    b, c = params["b"], params["c"]
    singular = ()
    if b == 0 and c > 0:
        singular = ((lambda mp: mp.atan(mp.convert(c))),)
    return IntegralSpec(
        "axial_kernel", (b, c), (0, lambda mp: mp.pi / 2),
        kernels.axial_kernel, singular_points=singular,
    )


def _build_catalog():
    records = []

    def add(*args, **kw):
        records.append(IdentityRecord(*args, **kw))

    unit_a = ParamSpec("a", lo=0, hi=1)
    series_a = ParamSpec("a", lo=0, hi="0.95")

    add("I1", "weighted K-kernel integral vs squared-K closed form",
        (unit_a,), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: _weighted_spec(p["a"])),
        lambda ctx, p: generating_integral_closed_form(p["a"], ctx))

    add("I1-ext", "weighted K-kernel integral past the critical parameter",
        (ParamSpec("a", lo=1, lo_open=True),), "quad",
        "kernel log-singular at x=1/2; no smooth continuation across a=1",
        _quad_lhs(lambda ctx, p: _weighted_spec(p["a"])),
        lambda ctx, p: generating_integral_closed_form(p["a"], ctx))

    add("I2", "rational-weight K integral; value pi/(4 sqrt 2)",
        (), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "ratio_kernel_2sqrt2", (), (0, 1),
            lambda mp: kernels.ratio_kernel_2sqrt2(mp), singular_points=(_HALF,))),
        lambda ctx, p: ctx.reduce(ctx.boosted(10).mp.pi / (4 * ctx.boosted(10).mp.sqrt(2))))

    add("I3", "r=4 singular-value K integral; value Gamma(1/4)^4/(16 sqrt2 pi)",
        (), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "singular_value_kernel_r4", (), (0, 1),
            lambda mp: kernels.singular_value_kernel_r4(mp), singular_points=(_HALF,))),
        lambda ctx, p: rhs_constant("I3", ctx))

    add("I4", "complex-kernel K integral for the r=3 singular value",
        (), "quad_complex", "kernel log-singular at x=1/2; principal-branch root",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "complex_kernel_r3", (), (0, 1),
            lambda mp: kernels.complex_kernel_r3(mp), singular_points=(_HALF,)),
            complex_kind=True),
        lambda ctx, p: rhs_constant("I4", ctx))

    add("I5", "complex-kernel K integral for the r=7 singular value",
        (), "quad_complex", "kernel log-singular at x=1/2; principal-branch root",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "complex_kernel_r7", (), (0, 1),
            lambda mp: kernels.complex_kernel_r7(mp), singular_points=(_HALF,)),
            complex_kind=True),
        lambda ctx, p: rhs_constant("I5", ctx))

    add("I6", "axially symmetric K integral with two tunable parameters",
        (ParamSpec("b", lo=0), ParamSpec("c", lo=0)), "quad",
        "integrand singular at theta = atan(c) when b = 0",
        _quad_lhs(_axial_spec),
        lambda ctx, p: _axial_rhs(ctx, p))

    add("I7", "axial special case on (0,1); value pi/(2 sqrt 2)",
        (), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "special_case_kernel", (), (0, 1),
            lambda mp: kernels.special_case_kernel(mp), singular_points=(_HALF,))),
        lambda ctx, p: ctx.reduce(ctx.boosted(10).mp.pi / (2 * ctx.boosted(10).mp.sqrt(2))))

    add("I8", "plain K-kernel integral; value pi^2/4",
        (), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "plain_kernel", (), (0, 1),
            lambda mp: kernels.plain_kernel(mp), singular_points=(_HALF,))),
        lambda ctx, p: ctx.reduce(ctx.boosted(10).mp.pi ** 2 / 4))

    add("I9", "semi-infinite Re K integral; value pi/(2 sqrt(1+c^2))",
        (ParamSpec("c", lo=0, lo_open=True),), "quad",
        "Re K switches branch formula at x=1 (log-singular there)",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "re_k_semi_infinite", (p["c"],), (0, INF),
            kernels.re_k_semi_infinite_kernel, singular_points=(1,))),
        lambda ctx, p: _semi_infinite_rhs(ctx, p))

    add("I10", "signed rational-weight K integral; value -pi/(8 sqrt 2)",
        (), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: IntegralSpec(
            "signed_kernel_4sqrt2", (), (0, 1),
            lambda mp: kernels.signed_kernel_4sqrt2(mp), singular_points=(_HALF,))),
        lambda ctx, p: ctx.reduce(-ctx.boosted(10).mp.pi / (8 * ctx.boosted(10).mp.sqrt(2))))

    add("I11", "Clausen-type series vs squared-K closed form",
        (series_a,), "series", "series converges like a^(2n)",
        _clausen_lhs, _clausen_rhs)

    add("I12", "level-4 Ramanujan-type series vs algebraic multiple of 1/pi",
        (ParamSpec("variant", choices=(0, 1)),), "series",
        "variant 0 sums to 2 sqrt2/pi, variant 1 to 4 sqrt2/pi",
        _ramanujan_lhs, _ramanujan_rhs)

    add("I13", "quadrature route vs Legendre-projection series route",
        (series_a,), "quad", "kernel log-singular at x=1/2",
        _quad_lhs(lambda ctx, p: _weighted_spec(p["a"])),
        lambda ctx, p: legendre_sum(p["a"], _series_terms(p["a"] ** 2, ctx.digits), ctx))

    return {rec.id: rec for rec in records}


def _axial_rhs(ctx, p):
    hi = ctx.boosted(10)
    mp = hi.mp
    b, c = mp.convert(p["b"]), mp.convert(p["c"])
    return ctx.reduce(mp.pi / (2 * mp.sqrt((b + 1) ** 2 + c * c)))


def _semi_infinite_rhs(ctx, p):
    hi = ctx.boosted(10)
    mp = hi.mp
    c = mp.convert(p["c"])
    return ctx.reduce(mp.pi / (2 * mp.sqrt(1 + c * c)))


def _variant_series(variant: int):
    return SeriesId.RAMANUJAN_2SQRT2 if variant == 0 else SeriesId.RAMANUJAN_4SQRT2


def _clausen_lhs(ctx, p, max_level):
    a = p["a"]
    return clausen_sum(a, _series_terms(a * a, ctx.digits), ctx), None


def _clausen_rhs(ctx, p):
    hi = ctx.boosted(10)
    value = generating_integral_closed_form(p["a"], hi)
    return ctx.reduce(4 / hi.mp.pi ** 2 * value)


def _ramanujan_lhs(ctx, p, max_level):
    sid = _variant_series(p["variant"])
    z = _ramanujan_data(sid, ctx.boosted(10).mp)[0]
    return ramanujan_sum(sid, _series_terms(z, ctx.digits), ctx), None


def _ramanujan_rhs(ctx, p):
    return ramanujan_target(_variant_series(p["variant"]), ctx)


_CATALOG = _build_catalog()
CATALOG_ORDER = tuple(_CATALOG)


def list_identities():
    """Catalog rows in deterministic order (I1, I1-ext, I2, ..., I13)."""
    return [_CATALOG[i] for i in CATALOG_ORDER]


def get_identity(identity_id: str) -> IdentityRecord:
    rec = _CATALOG.get(identity_id)
    if rec is None:
        raise DomainError(f"unknown identity {identity_id!r}; known: {', '.join(CATALOG_ORDER)}")
    return rec


def verify(identity_id: str, params, ctx: PrecisionContext, *,
           max_level: int = MAX_LEVEL) -> VerificationReport:
    """Evaluate both sides of one identity and compare.

    params maps parameter names to values (numbers or decimal strings);
    every declared parameter is required.  Deterministic for a fixed ctx
    (modulo wall_time).
    """
    rec = get_identity(identity_id)
    params = dict(params or {})
    unknown = set(params) - set(rec.param_names())
    if unknown:
        raise OutOfDomainError(f"{identity_id} does not take parameters {sorted(unknown)}")
    missing = set(rec.param_names()) - set(params)
    if missing:
        raise OutOfDomainError(f"{identity_id} requires parameters {sorted(missing)}")
    validated = {p.name: p.validate(params[p.name], ctx.mp) for p in rec.params}

    t0 = time.perf_counter()
    lhs_value, quad = rec.lhs(ctx, validated, max_level)
    rhs_value = rec.rhs(ctx, validated)
    wall = time.perf_counter() - t0

    mp = ctx.mp
    abs_err = +abs(mp.convert(lhs_value) - mp.convert(rhs_value))
    rel_err = +(abs_err / abs(mp.convert(rhs_value)))
    passed = abs_err <= ctx.pass_tol * max(mp.one, abs(mp.convert(rhs_value)))
    err_estimate = quad.err_estimate if quad is not None else None
    if rec.kind == "quad_complex":
        imag = abs(mp.convert(lhs_value).imag)
        passed = bool(passed and imag <= 10 * err_estimate)
    return VerificationReport(
        id=identity_id, params=validated, lhs_value=lhs_value, rhs_value=rhs_value,
        abs_err=abs_err, rel_err=rel_err, passed=bool(passed),
        digits_used=ctx.digits, wall_time=wall, err_estimate=err_estimate)


def sweep(identity_id: str, param_name: str, lo, hi, steps: int,
          ctx: PrecisionContext, *, fixed=None, max_level: int = MAX_LEVEL):
    """Verify along a uniform inclusive grid of one parameter."""
    rec = get_identity(identity_id)
    if param_name not in rec.param_names():
        raise OutOfDomainError(f"{identity_id} has no parameter {param_name!r}")
    if not isinstance(steps, int) or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps!r}")
    mp = ctx.mp
    pspec = next(p for p in rec.params if p.name == param_name)
    lo_v = pspec.validate(lo, mp)
    hi_v = pspec.validate(hi, mp)
    if not lo_v < hi_v:
        raise DomainError(f"degenerate sweep range [{lo_v}, {hi_v}]")
    reports = []
    for k in range(steps):
        value = lo_v + (hi_v - lo_v) * k / (steps - 1)
        params = dict(fixed or {})
        params[param_name] = value
        reports.append(verify(identity_id, params, ctx, max_level=max_level))
    return reports


def _decimal(value, digits: int) -> str:
    return mpmath.nstr(value, digits)


def _rows(reports):
    for r in reports:
        yield {
            "id": r.id,
            "params": {k: _decimal(v, r.digits_used) for k, v in r.params.items()},
            "lhs": _decimal(r.lhs_value, r.digits_used),
            "rhs": _decimal(r.rhs_value, r.digits_used),
            "abs_err": _decimal(r.abs_err, r.digits_used),
            "rel_err": _decimal(r.rel_err, r.digits_used),
            "passed": r.passed,
            "digits": r.digits_used,
            "wall_ms": _decimal(r.wall_time * 1000, 10),
        }


def export(reports, format: str = "json") -> bytes:
    """Serialize reports; JSON is an array of objects, CSV one row per report.

    Numeric fields are decimal strings at full working precision; CSV uses
    comma separators and LF line endings.
    """
    reports = list(reports)
    if not reports:
        raise DomainError("cannot export an empty report list")
    if format == "json":
        return json.dumps(list(_rows(reports)), indent=2).encode()
    if format == "csv":
        header = "id,params,lhs,rhs,abs_err,rel_err,passed,digits,wall_ms"
        lines = [header]
        for row in _rows(reports):
            params = ";".join(f"{k}={v}" for k, v in row["params"].items())
            lines.append(",".join([
                row["id"], params, row["lhs"], row["rhs"], row["abs_err"],
                row["rel_err"], "true" if row["passed"] else "false",
                str(row["digits"]), row["wall_ms"],
            ]))
        return ("\n".join(lines) + "\n").encode()
    raise DomainError(f"unknown export format {format!r}")
