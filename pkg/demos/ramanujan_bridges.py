"""The two level-4 Ramanujan-type series, and the linear combination that
bridges each of them to the Clausen-type series.  Specializing the bridge
reproduces the catalog's rational-weight integral constants by a second,
independent route.

Run:  python demos/ramanujan_bridges.py
"""

from multiell import (PrecisionContext, SeriesId, clausen_sum, clausen_sum_da,
                      linear_bridge, ramanujan_sum, ramanujan_target, verify)

ctx = PrecisionContext(40)
mp = ctx.mp
show = lambda x: mp.nstr(x, 30)

for sid, terms in ((SeriesId.RAMANUJAN_2SQRT2, 200), (SeriesId.RAMANUJAN_4SQRT2, 60)):
    partial = ramanujan_sum(sid, terms, ctx)
    target = ramanujan_target(sid, ctx)
    print(f"{sid}: {terms} terms")
    print("  partial sum =", show(partial))
    print("  target      =", show(target))
    print("  gap         =", mp.nstr(abs(partial - target), 3))
    print()

print("Bridging each series to the Clausen form: the termwise match")
print("alpha + 2 beta n / a* = A n + B fixes (alpha, beta, a*).")
for sid in (SeriesId.RAMANUJAN_2SQRT2, SeriesId.RAMANUJAN_4SQRT2):
    bridge = linear_bridge(sid, ctx)
    bridged = (bridge.alpha * clausen_sum(bridge.a_star, 400, ctx)
               + bridge.beta * clausen_sum_da(bridge.a_star, 400, ctx))
    print(f"{sid}:")
    print("  alpha =", show(bridge.alpha))
    print("  beta  =", show(bridge.beta))
    print("  a*    =", show(bridge.a_star))
    print("  |bridged - series| =", mp.nstr(abs(bridged - ramanujan_sum(sid, 400, ctx)), 3))
    print()

print("Second route to the integral constants (first route: quadrature):")
b2 = linear_bridge(SeriesId.RAMANUJAN_2SQRT2, ctx)
bridged2 = (b2.alpha * clausen_sum(b2.a_star, 400, ctx)
            + b2.beta * clausen_sum_da(b2.a_star, 400, ctx))
print("  (pi^2/16) * bridged =", show(mp.pi ** 2 / 16 * bridged2))
print("  pi/(4 sqrt 2)       =", show(mp.pi / (4 * mp.sqrt(2))))
print("  quadrature route    =", show(verify("I2", {}, ctx).lhs_value))
