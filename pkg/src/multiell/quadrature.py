"""Adaptive double-exponential quadrature for the identity catalog.

Finite panels use the tanh-sinh transformation x = c + r tanh((pi/2) sinh t),
semi-infinite panels the exp-sinh transformation x = a + exp((pi/2) sinh t).
The trapezoid step starts at h = 1 and halves per level, reusing previous
evaluations, until the level-to-level change drops below the target or the
level cap is hit.  Intervals are split at declared interior singular points
so that singularities sit at panel ends, where the double-exponential decay
of the weights absorbs them.

Precision bookkeeping: abscissas and integrands are evaluated in an engine
context carrying 2*digits + 40 decimal digits, and node generation stops
once weights fall below 10^-(digits+10).  The factor two is not luxury --
the catalog's kernels contain (x - 1/2)^2-style terms that square a node's
distance to the singular abscissa, so the engine needs twice the cutoff
exponent plus guard digits for those terms to stay representable.  This
covers logarithmic (K-kernel) singularities fully at quad_target; algebraic
x^(-1/2) endpoint behavior still converges but with a reduced tail margin.

Semi-infinite integrands must decay at least like x^(-2); every catalog
form decays like x^(-3).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, IntegrandFailureError, NonConvergenceError
from .precision import PrecisionContext

MAX_LEVEL = 12
INF = math.inf  # spell the upper endpoint of semi-infinite intervals

_node_cache: dict = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class IntegralSpec:
    """One integrand family instance: id, parameters, interval, singularities.

    interval entries and singular_points may be numbers or callables taking
    the engine's mpmath context (so that values like pi/2 or atan(c) are
    produced at engine precision).  ``factory(mp, *params)`` must return the
    integrand as a function of the abscissa, evaluated inside context mp.
    """

    integrand_id: str
    params: tuple
    interval: tuple
    factory: Callable
    singular_points: tuple = ()


@dataclass(frozen=True)
class QuadResult:
    """Quadrature value with diagnostics.

    err_estimate is the last level-to-level change (a deliberate
    overestimate once converged); panels counts subintervals after
    splitting; levels is the deepest refinement level used.
    """

    value: object
    err_estimate: object
    panels: int
    levels: int


def _resolve(v, mp):
    return v(mp) if callable(v) else mp.mpf(v)


def _ts_level_nodes(mp, level: int, cutoff):
    """(y, w) pairs for t = k h >= 0 at one tanh-sinh level (cached)."""
    key = ("ts", mp.dps, level)
    with _cache_lock:
        nodes = _node_cache.get(key)
    if nodes is not None:
        return nodes
    h = mp.mpf(2) ** (-level)
    half_pi = mp.pi / 2
    nodes = []
    k = 1 if level > 0 else 0
    step = 2 if level > 0 else 1
    while True:
        t = k * h
        if t > 12:
            raise NonConvergenceError("tanh-sinh node generation ran away")
        u = half_pi * mp.sinh(t)
        w = half_pi * mp.cosh(t) / mp.cosh(u) ** 2
        if w < cutoff and t > 3:
            break
        nodes.append((mp.tanh(u), w))
        k += step
    with _cache_lock:
        _node_cache[key] = nodes
    return nodes


def _es_level_nodes(mp, level: int, cutoff):
    """(eu, coshfac) pairs for t = k h >= 0 at one exp-sinh level (cached).

    The node at parameter t contributes x = a + eu with weight eu*coshfac
    and, for t > 0, the mirror x = a + 1/eu with weight coshfac/eu.
    """
    key = ("es", mp.dps, level)
    with _cache_lock:
        nodes = _node_cache.get(key)
    if nodes is not None:
        return nodes
    h = mp.mpf(2) ** (-level)
    half_pi = mp.pi / 2
    nodes = []
    k = 1 if level > 0 else 0
    step = 2 if level > 0 else 1
    while True:
        t = k * h
        if t > 12:
            raise NonConvergenceError("exp-sinh node generation ran away")
        eu = mp.exp(half_pi * mp.sinh(t))
        coshfac = half_pi * mp.cosh(t)
        if coshfac / eu < cutoff and t > 3:
            break
        nodes.append((eu, coshfac))
        k += step
    with _cache_lock:
        _node_cache[key] = nodes
    return nodes


def _call(f, x):
    try:
        return f(x)
    except (ArithmeticError, ValueError, ZeroDivisionError) as exc:
        raise IntegrandFailureError(f"integrand raised at x = {x}: {exc}") from exc


def _tanh_sinh_panel(f, mp, lo, hi, cutoff, target, max_level, min_level):
    ctr = (lo + hi) / 2
    rad = (hi - lo) / 2
    prev = None
    total = None
    err = None
    for level in range(max_level + 1):
        h = mp.mpf(2) ** (-level)
        s = mp.mpf(0)
        for y, w in _ts_level_nodes(mp, level, cutoff):
            if y == 0:
                s += w * _call(f, ctr)
            else:
                s += w * (_call(f, ctr + rad * y) + _call(f, ctr - rad * y))
        new = s * h * rad
        total = new if level == 0 else total / 2 + new
        if level >= 1:
            err = abs(total - prev)
            if level >= min_level and err <= target:
                return total, err, level
        prev = total
    return total, err, max_level


def _exp_sinh_panel(f, mp, lo, cutoff, target, max_level, min_level):
    prev = None
    total = None
    err = None
    for level in range(max_level + 1):
        h = mp.mpf(2) ** (-level)
        s = mp.mpf(0)
        for eu, coshfac in _es_level_nodes(mp, level, cutoff):
            if eu == 1:
                s += coshfac * _call(f, lo + 1)
            else:
                s += coshfac * (eu * _call(f, lo + eu) + _call(f, lo + 1 / eu) / eu)
        new = s * h
        total = new if level == 0 else total / 2 + new
        if level >= 1:
            err = abs(total - prev)
            if level >= min_level and err <= target:
                return total, err, level
        prev = total
    return total, err, max_level


def integrate(spec: IntegralSpec, ctx: PrecisionContext, *, max_level: int = MAX_LEVEL,
              min_level: int = 2) -> QuadResult:
    """Integrate spec to ctx.quad_target absolute error.

    Raises NonConvergenceError if any panel hits the level cap with its
    error estimate above target, and IntegrandFailureError if the integrand
    raises at a point not declared singular.
    """
    engine = ctx.boosted(ctx.digits + 40)
    mp = engine.mp
    cutoff = mp.mpf(10) ** (-(ctx.digits + 10))

    lo = _resolve(spec.interval[0], mp)
    hi = _resolve(spec.interval[1], mp)
    if mp.isinf(lo):
        raise DomainError("lower endpoint must be finite")
    splits = sorted(_resolve(s, mp) for s in spec.singular_points)
    if not all(lo < s < hi for s in splits):
        raise DomainError("singular points must lie strictly inside the interval")
    edges = [lo, *splits, hi]
    if not all(a < b for a, b in zip(edges, edges[1:])):
        raise DomainError(f"degenerate interval for {spec.integrand_id}")

    f = spec.factory(mp, *(p if isinstance(p, int) else mp.convert(p) for p in spec.params))
    npanels = len(edges) - 1
    target = mp.convert(ctx.quad_target) / npanels

    value = mp.mpf(0)
    err_total = mp.mpf(0)
    deepest = 0
    for a, b in zip(edges, edges[1:]):
        if mp.isinf(b):
            v, e, lev = _exp_sinh_panel(f, mp, a, cutoff, target, max_level, min_level)
        else:
            v, e, lev = _tanh_sinh_panel(f, mp, a, b, cutoff, target, max_level, min_level)
        if e is None or e > target:
            raise NonConvergenceError(
                f"{spec.integrand_id}: panel ({a}, {b}) stopped at level {lev} "
                f"with estimate {mp.nstr(e, 5) if e is not None else 'n/a'} above target")
        value = value + v
        err_total = err_total + e
        deepest = max(deepest, lev)

    # the returned value is rounded to ctx.digits, so the estimate can
    # never honestly sit below that representation error
    floor = (1 + abs(value)) * mp.mpf(10) ** (-ctx.digits)
    return QuadResult(
        value=ctx.reduce(value),
        err_estimate=ctx.reduce(max(err_total, floor)),
        panels=npanels,
        levels=deepest,
    )


def integrate_complex_kernel(spec: IntegralSpec, ctx: PrecisionContext, **kw) -> QuadResult:
    """Integrate a complex-valued kernel (principal-branch square roots).

    Same engine as ``integrate``; the result's value is an mpc.  For the
    catalog's conjugate-symmetric kernels the imaginary part comes out at
    the level of the error estimate rather than exactly zero -- tested, not
    assumed.
    """
    return integrate(spec, ctx, **kw)
