"""
Two-qubit X states and their correlations
=========================================

An X state is fixed by three real numbers (r, s, c3) and two complex
coherences (c1, c2).  This walk-through builds a few, checks the closed-form
spectrum against a dense eigensolver and splits the mutual information.
"""
import numpy as np

from superdiscord import bloch_from_density, example2, mutual_information, spectrum, werner
from superdiscord.entropy import joint_entropy_closed_form

dm = example2()
print(dm.matrix().real.round(3))

p = bloch_from_density(dm)
print(f"r={p.r:.3f}  s={p.s:.3f}  c3={p.c3:.3f}  c1={p.c1:.3f}  c2={p.c2:.3f}  b={p.b:.3f}")

# the four eigenvalues come in two 2x2 blocks; no eigensolver needed
closed = np.sort(spectrum(p).as_array())
dense = np.linalg.eigvalsh(dm.matrix())
print("spectrum", closed.round(6), "max deviation from eigvalsh", np.abs(closed - dense).max())

m = mutual_information(p)
print(f"S(A)={m.S_A:.4f}  S(B)={m.S_B:.4f}  S(AB)={m.S_AB:.4f}  I={m.I:.4f}")
print(f"S(AB) without eigenvalues: {joint_entropy_closed_form(p):.4f}")

# Werner family: mutual information grows from 0 (mixed) to 2 bits (singlet)
for a in np.linspace(0, 1, 5):
    print(f"Werner a={a:.2f}  I={mutual_information(bloch_from_density(werner(a))).I:.4f}")
