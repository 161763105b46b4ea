"""
Cross-checking with the operator-level oracle
=============================================

The oracle never touches the reduced objective.  It builds P(+-x) from
rotated projectors, applies them to the 4x4 density matrix, traces out B
and scans measurement directions on the sphere.  Its minimum closes in on
1 + min F as the direction grid is refined.
"""
import time

from superdiscord import FContext, bloch_from_density, brute_force_min_conditional_entropy, example3, minimize_F

dm = example3()
x = 3.0
analytic = 1.0 + minimize_F(FContext(bloch_from_density(dm), x)).f_min
print(f"analytic minimum of S(A|P): {analytic:.10f}")

for res in (16, 32, 64, 128, 200):
    t0 = time.perf_counter()
    val, v = brute_force_min_conditional_entropy(dm, x, res)
    dt = time.perf_counter() - t0
    n = v.direction
    print(f"{res * res:6d} directions  min={val:.10f}  gap={val - analytic:.2e}  "
          f"|z|={abs(n[2]):.4f}  ({dt:.2f}s)")
