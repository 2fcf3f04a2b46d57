"""Property suites runnable from the CLI: orthogonality, transform
residuals, annihilator grids, negative controls, and the substitution
chain for the semi-infinite form.  Quick mode runs the same grids at 30
digits instead of the requested precision.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import kernels
from .diffop import laplace_residual, laplace_residual_of, ode_annihilator_residual
from .elliptic import ellipk
from .legendre import orthogonality_gram
from .precision import PrecisionContext
from .quadrature import INF, IntegralSpec, integrate
from .singular import SUPPORTED_R, singular_value_residual

GRAM_ORDER = 12
ODE_GRID = tuple(f"0.{k}" for k in range(1, 10))
LAPLACE_THETAS = ("pi/6", "pi/4", "pi/3")
LAPLACE_BC = ("0.5", "1", "2")
CHAIN_C = ("0.5", "1", "2")
CONTROL_RATIO = 10 ** 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _theta_value(mp, label):
    num = {"pi/6": 6, "pi/4": 4, "pi/3": 3}[label]
    return mp.pi / num


def _check(name, fn, ctx):
    t0 = time.perf_counter()
    passed, detail = fn(ctx)
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


def _gram_check(ctx):
    mp = ctx.mp
    gram = orthogonality_gram(GRAM_ORDER, ctx)
    worst = mp.zero
    for n in range(GRAM_ORDER + 1):
        for m in range(GRAM_ORDER + 1):
            exact = mp.one / (2 * n + 1) if n == m else mp.zero
            worst = max(worst, abs(gram[n][m] - exact))
    tol = 10 * ctx.quad_target
    return worst <= tol, f"max entry error {mp.nstr(worst, 3)} (tol {mp.nstr(tol, 3)})"


def _transform_check(ctx):
    mp = ctx.mp
    worst = mp.zero
    for tenths in range(1, 10):
        k = mp.mpf(tenths) / 10
        kp = mp.sqrt(1 - k * k)
        gap = abs(kp * ellipk(k * k, ctx) - ellipk(-k * k / (1 - k * k), ctx))
        worst = max(worst, gap)
    return worst <= ctx.pass_tol, f"max residual {mp.nstr(worst, 3)} (tol {mp.nstr(ctx.pass_tol, 3)})"


def _singular_check(ctx):
    mp = ctx.mp
    worst = max(singular_value_residual(r, ctx) for r in SUPPORTED_R)
    return worst <= ctx.pass_tol, f"max residual {mp.nstr(worst, 3)} (tol {mp.nstr(ctx.pass_tol, 3)})"


def _ode_grid_check(ctx):
    mp = ctx.mp
    worst_ratio = mp.zero
    for a in ODE_GRID:
        res = ode_annihilator_residual(mp.mpf(a), ctx)
        if not res.passed:
            return False, f"residual {mp.nstr(res.residual, 3)} at a={a} exceeds {mp.nstr(res.tolerance, 3)}"
        worst_ratio = max(worst_ratio, res.residual / res.scale)
    return True, f"max residual/scale {mp.nstr(worst_ratio, 3)} over a in {{0.1..0.9}}"


def _ode_control_check(ctx):
    mp = ctx.mp
    clean = ode_annihilator_residual(mp.mpf("0.5"), ctx)
    bad = ode_annihilator_residual(mp.mpf("0.5"), ctx, corrupted=True)
    floor = max(clean.residual, mp.mpf(10) ** (-(2 * ctx.digits)))
    ratio = bad.residual / floor
    return ratio >= CONTROL_RATIO, f"corrupted/clean residual ratio {mp.nstr(ratio, 3)}"


def _laplace_grid_check(ctx):
    mp = ctx.mp
    worst = mp.zero
    for label in LAPLACE_THETAS:
        theta = _theta_value(mp, label)
        for b in LAPLACE_BC:
            for c in LAPLACE_BC:
                res = laplace_residual(theta, mp.mpf(b), mp.mpf(c), ctx)
                if not res.passed:
                    return False, (f"residual {mp.nstr(res.residual, 3)} at "
                                   f"(theta={label}, b={b}, c={c})")
                worst = max(worst, res.residual / res.scale)
    return True, f"max residual/scale {mp.nstr(worst, 3)} over the 3x3x3 grid"


def _laplace_control_check(ctx):
    mp = ctx.mp
    theta = mp.pi / 4
    clean = laplace_residual(theta, mp.one, mp.one, ctx)
    bad = laplace_residual(theta, mp.one, mp.one, ctx, corrupted=True)
    floor = max(clean.residual, mp.mpf(10) ** (-(2 * ctx.digits)))
    ratio = bad.residual / floor
    return ratio >= CONTROL_RATIO, f"corrupted/clean residual ratio {mp.nstr(ratio, 3)}"


def _harmonic_reference_check(ctx):
    mp = ctx.boosted(20).mp

    def harmonic(b, c):
        # axially symmetric harmonic function, c radial and b axial
        return 1 / mp.sqrt(c * c + (b - 3) ** 2)

    residual, scale, tol, ok = laplace_residual_of(harmonic, mp.one, mp.one, ctx)
    return ok, f"residual/scale {mp.nstr(residual / scale, 3)} (tol/scale {mp.nstr(tol / scale, 3)})"


def _chain_check(ctx):
    """theta-form, x-form, and Re-K-form of the b=0 axial integral agree."""
    mp = ctx.mp
    worst = mp.zero
    for c_label in CHAIN_C:
        c = mp.mpf(c_label)
        theta_spec = IntegralSpec(
            "axial_kernel_b0", (0, c), (0, lambda emp: emp.pi / 2),
            kernels.axial_kernel,
            singular_points=((lambda emp: emp.atan(emp.convert(c))),))
        x_spec = IntegralSpec(
            "axial_x_form", (c,), (0, INF), kernels.axial_x_form_kernel,
            singular_points=(1,))
        rek_spec = IntegralSpec(
            "re_k_semi_infinite", (c,), (0, INF), kernels.re_k_semi_infinite_kernel,
            singular_points=(1,))
        values = [integrate(s, ctx).value for s in (theta_spec, x_spec, rek_spec)]
        for i in range(3):
            for j in range(i + 1, 3):
                worst = max(worst, abs(values[i] - values[j]))
    return worst <= ctx.pass_tol, f"max pairwise gap {mp.nstr(worst, 3)} (tol {mp.nstr(ctx.pass_tol, 3)})"


_CHECKS = (
    ("legendre-orthogonality", _gram_check),
    ("imaginary-modulus-transform", _transform_check),
    ("singular-value-residuals", _singular_check),
    ("ode-annihilator-grid", _ode_grid_check),
    ("ode-negative-control", _ode_control_check),
    ("laplace-annihilator-grid", _laplace_grid_check),
    ("laplace-negative-control", _laplace_control_check),
    ("laplace-harmonic-reference", _harmonic_reference_check),
    ("semi-infinite-substitution-chain", _chain_check),
)


def run_selftest(digits: int = 50, quick: bool = False, write=print):
    """Run all property suites; returns the list of CheckResult."""
    ctx = PrecisionContext(30 if quick else digits)
    results = []
    for name, fn in _CHECKS:
        res = _check(name, fn, ctx)
        results.append(res)
        status = "PASS" if res.passed else "FAIL"
        write(f"[{status}] {res.name:34s} ({res.seconds:6.2f}s)  {res.detail}")
    total = sum(r.seconds for r in results)
    good = sum(1 for r in results if r.passed)
    write(f"{good}/{len(results)} checks passed in {total:.1f}s at digits={ctx.digits}")
    return results
