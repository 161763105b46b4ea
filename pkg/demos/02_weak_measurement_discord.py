"""
Super quantum discord of an X state
===================================

Weak measurements on B with strength x reduce the conditional entropy
minimisation to a single variable z in [0, 1].  For the Example 3 state the
minimiser sits at z = 0 for weak measurements and moves inside the interval
once x is large enough; Newton's method then locates it.
"""
import numpy as np

from superdiscord import FContext, F_value, bloch_from_density, example3, newton_refine, super_quantum_discord

p = bloch_from_density(example3())
z = np.linspace(0, 1, 11)
for x in (1.0, 2.0, 3.0, 4.0):
    ctx = FContext(p, x)
    rep = super_quantum_discord(ctx)
    print(f"x={x:g}  F on a coarse grid: {np.round(F_value(ctx, z), 4)}")
    print(f"      z_hat={rep.z_hat:.6f}  case={rep.opt.case.case.value}  "
          f"method={rep.opt.method.value}  SQD={rep.sqd:.6f}")

# Newton from the right endpoint
ctx = FContext(p, 3.0)
for n, (zn, f, df) in enumerate(newton_refine(ctx, 1.0).iterations):
    print(f"  z{n} = {zn:.7f}   F = {f:.8f}   F' = {df:+.2e}")

# the discord can only fall as the measurement gets sharper
xs = np.linspace(0.0, 6.0, 13)
sqd = [super_quantum_discord(FContext(p, x)).sqd for x in xs]
print("SQD vs x:", np.round(sqd, 4))
