"""
Discord under local phase damping
=================================

Phase damping on both qubits multiplies c1 and c2 by (1 - gamma) and leaves
populations alone.  For a Werner state the discord loss has a closed form
that does not depend on x.  For the Example 2 and 3 states we split the
discord into its measurement part (min F) and the joint-entropy part to see
which one moves.
"""
import numpy as np

from superdiscord import (
    FContext,
    bloch_from_density,
    damping_sweep,
    example2,
    example3,
    super_quantum_discord,
    werner_discord_loss,
)

gammas = np.linspace(0, 1, 6)
print("Werner loss T(a, gamma):")
for a in (0.3, 0.6, 0.9):
    print(f"  a={a}: {np.round([werner_discord_loss(a, g) for g in gammas], 4)}")

for name, dm, x in (("Example 2", example2(), 2.0), ("Example 3", example3(), 4.0)):
    p = bloch_from_density(dm)
    base = super_quantum_discord(FContext(p, x))
    print(f"{name}, x={x:g}: undamped z_hat={base.z_hat:.4f}  min F={base.f_min:.6f}  SQD={base.sqd:.6f}")
    for g, rep in damping_sweep(p, x, gammas[1:]):
        print(f"  gamma={g:.1f}  z_hat={rep.z_hat:.4f}  min F={rep.f_min:.6f}  "
              f"S(AB)={rep.mutual.S_AB:.4f}  SQD={rep.sqd:.6f}")
