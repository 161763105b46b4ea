"""Brute-force reference for the weak-measurement conditional entropy.

Nothing here uses the reduced formulas of :mod:`weakmeas`.  Measurement
operators are built from SU(2)-rotated projectors, applied to the full 4x4
density matrix, B is traced out explicitly and the 2x2 conditional states
are diagonalised directly.  The minimum over measurements is found by
exhaustive search over a golden-ratio sequence of directions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import entropic_E
from .errors import DegenerateBranch, DomainError
from .weakmeas import TOL_DEG, ConditionalOutcome
from .xstate import XDensityMatrix

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_EYE2 = np.eye(2, dtype=complex)
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
# real root of p**3 = p + 1
_PLASTIC = 1.32471795724474602596


@dataclass(frozen=True)
class SU2Element:
    """``V = t I + i (y1 s1 + y2 s2 + y3 s3)`` with unit norm."""

    t: float
    y1: float
    y2: float
    y3: float

    def __post_init__(self):
        norm = self.t ** 2 + self.y1 ** 2 + self.y2 ** 2 + self.y3 ** 2
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"SU(2) parameters must have unit norm, got {norm!r}")

    def matrix(self) -> np.ndarray:
        return self.t * _EYE2 + 1j * (self.y1 * SIGMA[0] + self.y2 * SIGMA[1] + self.y3 * SIGMA[2])

    @property
    def direction(self) -> tuple[float, float, float]:
        """Bloch vector ``n`` of ``Pi_0 - Pi_1 = V^dag s3 V = n . sigma``."""
        t, y1, y2, y3 = self.t, self.y1, self.y2, self.y3
        return (
            2.0 * (t * y2 + y1 * y3),
            2.0 * (-t * y1 + y2 * y3),
            t * t + y3 * y3 - y1 * y1 - y2 * y2,
        )

    @classmethod
    def from_direction(cls, n) -> "SU2Element":
        """Canonical lift of a unit vector with ``y2 = 0``.

        With polar angle ``a`` and azimuth ``phi`` of ``n``:
        ``t = -cos(a/2) sin(phi)``, ``y1 = sin(a/2)``, ``y3 = cos(a/2) cos(phi)``.
        The map is defined everywhere, poles included.
        """
        n1, n2, n3 = (float(v) for v in n)
        half = 0.5 * math.acos(max(-1.0, min(1.0, n3)))
        phi = math.atan2(n2, n1)
        return cls(-math.cos(half) * math.sin(phi), math.sin(half), 0.0, math.cos(half) * math.cos(phi))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "SU2Element":
        q = rng.normal(size=4)
        q /= np.linalg.norm(q)
        return cls(*(float(v) for v in q))


@dataclass(frozen=True)
class WeakOperatorPair:
    P_plus: np.ndarray
    P_minus: np.ndarray


def su2_conjugate_paulis(v: SU2Element) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``V^dag s_i V`` for i = 1, 2, 3 by explicit matrix products."""
    m = v.matrix()
    return tuple(m.conj().T @ s @ m for s in SIGMA)


def su2_conjugate_paulis_closed_form(v: SU2Element):
    """Expansion of ``V^dag s_i V`` in the Pauli basis.

    ``V^dag s1 V`` is written out directly; the other two follow from the
    cyclic shift ``(s1, s2, s3) -> (s2, s3, s1)``, ``(y1, y2, y3) -> (y2, y3, y1)``.
    """
    t = v.t
    y = [v.y1, v.y2, v.y3]
    out = []
    for shift in range(3):
        y1, y2, y3 = y[shift % 3], y[(shift + 1) % 3], y[(shift + 2) % 3]
        c = (t * t + y1 * y1 - y2 * y2 - y3 * y3, 2.0 * (t * y3 + y1 * y2), 2.0 * (-t * y2 + y1 * y3))
        s1, s2, s3 = SIGMA[shift % 3], SIGMA[(shift + 1) % 3], SIGMA[(shift + 2) % 3]
        out.append(c[0] * s1 + c[1] * s2 + c[2] * s3)
    return tuple(out)


def _weak_pair_batch(vmats: np.ndarray, x: float):
    """P(+x), P(-x) for a stack of SU(2) matrices of shape (N, 2, 2)."""
    t = math.tanh(x)
    ket0 = np.array([[1, 0], [0, 0]], dtype=complex)
    ket1 = np.array([[0, 0], [0, 1]], dtype=complex)
    vdag = np.conj(np.swapaxes(vmats, -1, -2))
    pi0 = vdag @ ket0 @ vmats
    pi1 = vdag @ ket1 @ vmats
    lo, hi = math.sqrt(0.5 * (1.0 - t)), math.sqrt(0.5 * (1.0 + t))
    return lo * pi0 + hi * pi1, hi * pi0 + lo * pi1


def weak_operators(v: SU2Element, x: float) -> WeakOperatorPair:
    """``P(+-x) = sqrt((1 -+ tanh x)/2) Pi_0 + sqrt((1 +- tanh x)/2) Pi_1``.

    ``Pi_i = V^dag |i><i| V``.
    """
    if x < 0:
        raise DomainError(f"measurement strength must be >= 0, got {x!r}")
    plus, minus = _weak_pair_batch(v.matrix()[None], x)
    return WeakOperatorPair(plus[0], minus[0])


def partial_trace_b(m: np.ndarray) -> np.ndarray:
    """Trace out the second qubit of (..., 4, 4) operators."""
    m = np.asarray(m)
    r = m.reshape(m.shape[:-2] + (2, 2, 2, 2))
    return r[..., :, 0, :, 0] + r[..., :, 1, :, 1]


def _eig2(rho: np.ndarray):
    """Eigenvalues (larger, smaller) of stacked 2x2 Hermitian matrices."""
    a = rho[..., 0, 0].real
    d = rho[..., 1, 1].real
    off = np.abs(rho[..., 0, 1])
    mean = 0.5 * (a + d)
    rad = np.sqrt((0.5 * (a - d)) ** 2 + off * off)
    return mean + rad, mean - rad


def _branches(rho: np.ndarray, vmats: np.ndarray, x: float):
    """Unnormalised conditional states of A for both outcomes, stacked."""
    plus, minus = _weak_pair_batch(vmats, x)
    out = []
    for p in (plus, minus):
        big = np.einsum("ij,nkl->nikjl", _EYE2, p).reshape(-1, 4, 4)
        out.append(partial_trace_b(big @ rho @ big))
    return out


def conditional_state_direct(dm: XDensityMatrix, v: SU2Element, x: float):
    """Measure B with ``P(+-x)``, trace B out and normalise.

    Returns ``(outcome, rho_plus, rho_minus)`` where ``rho_plus`` is the
    state of A after outcome ``P(+x)``.
    """
    raw_plus, raw_minus = (b[0] for b in _branches(dm.matrix(), v.matrix()[None], x))
    p_plus = float(np.trace(raw_plus).real)
    p_minus = float(np.trace(raw_minus).real)
    if min(p_plus, p_minus) <= TOL_DEG:
        raise DegenerateBranch(f"outcome probabilities {p_plus!r}, {p_minus!r}")
    rho_plus = raw_plus / p_plus
    rho_minus = raw_minus / p_minus
    (lpp, lpn), (lmp, lmn) = _eig2(rho_plus), _eig2(rho_minus)
    outcome = ConditionalOutcome(p_plus, p_minus, float(lpp), float(lpn), float(lmp), float(lmn))
    return outcome, rho_plus, rho_minus


def conditional_entropy_direct(dm: XDensityMatrix, vmats: np.ndarray, x: float) -> np.ndarray:
    """S(A | P(+-x)) for each SU(2) matrix in the stack ``vmats``."""
    total = np.zeros(len(vmats))
    for raw in _branches(dm.matrix(), vmats, x):
        p = np.trace(raw, axis1=-2, axis2=-1).real
        live = p > TOL_DEG
        safe = np.where(live, p, 1.0)
        big, small = _eig2(raw / safe[:, None, None])
        total += np.where(live, p * entropic_E(np.clip(big - small, -1.0, 1.0)), 0.0)
    return total


def fibonacci_sphere(n: int) -> np.ndarray:
    """Classic Fibonacci lattice of ``n`` unit vectors, shape (n, 3).

    Kept for reference; the search uses :func:`golden_sequence_sphere`
    because lattices of different sizes do not contain one another.
    """
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = i * _GOLDEN_ANGLE
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def golden_sequence_sphere(n: int) -> np.ndarray:
    """First ``n`` points of an infinite low-discrepancy sequence on the sphere.

    The unit square is filled with the additive recurrence built on the
    plastic number (the two-dimensional generalised golden ratio) and mapped
    to the sphere with an area-preserving map.  Because every grid is a
    prefix of the next, the grid minimum can only improve as ``n`` grows.
    """
    i = np.arange(n)
    u = (0.5 + i / _PLASTIC) % 1.0
    v = (0.5 + i / _PLASTIC ** 2) % 1.0
    z = 1.0 - 2.0 * u
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = 2.0 * math.pi * v
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def _lift_batch(dirs: np.ndarray) -> np.ndarray:
    half = 0.5 * np.arccos(np.clip(dirs[:, 2], -1.0, 1.0))
    phi = np.arctan2(dirs[:, 1], dirs[:, 0])
    t = -np.cos(half) * np.sin(phi)
    y1 = np.sin(half)
    y3 = np.cos(half) * np.cos(phi)
    return (
        t[:, None, None] * _EYE2
        + 1j * (y1[:, None, None] * SIGMA[0] + y3[:, None, None] * SIGMA[2])
    )


def brute_force_min_conditional_entropy(dm: XDensityMatrix, x: float, resolution: int,
                                        chunk: int = 8192):
    """Minimum of S(A | measurement) over ``resolution**2`` directions.

    Returns ``(value, SU2Element)``; ties go to the lowest grid index.
    """
    if resolution < 16:
        raise DomainError(f"resolution must be >= 16, got {resolution!r}")
    dirs = golden_sequence_sphere(resolution * resolution)
    best_val, best_idx = math.inf, -1
    for start in range(0, len(dirs), chunk):
        vals = conditional_entropy_direct(dm, _lift_batch(dirs[start:start + chunk]), x)
        i = int(np.argmin(vals))
        if vals[i] < best_val:
            best_val, best_idx = float(vals[i]), start + i
    return best_val, SU2Element.from_direction(dirs[best_idx])
