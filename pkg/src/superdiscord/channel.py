"""Local phase damping on both qubits.

Each qubit goes through the Kraus pair ``K1 = |0><0| + sqrt(1-g)|1><1|``,
``K2 = sqrt(g)|1><1|``.  On an X state this only rescales the coherences:
``c1 -> (1-g) c1`` and ``c2 -> (1-g) c2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import xlog2x
from .errors import DomainError
from .sqd import SqdReport, super_quantum_discord
from .weakmeas import FContext
from .xstate import BlochX, XDensityMatrix, validate_density


@dataclass(frozen=True)
class DampingParams:
    gamma: float

    def __post_init__(self):
        g = float(self.gamma)
        if not 0.0 <= g <= 1.0:
            raise DomainError(f"decoherence rate must lie in [0, 1], got {g!r}")
        object.__setattr__(self, "gamma", g)


def _as_params(d) -> DampingParams:
    return d if isinstance(d, DampingParams) else DampingParams(d)


def kraus_operators(d) -> tuple[np.ndarray, np.ndarray]:
    g = _as_params(d).gamma
    return (
        np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - g)]]),
        np.array([[0.0, 0.0], [0.0, math.sqrt(g)]]),
    )


def phase_damp_bloch(p: BlochX, d) -> BlochX:
    keep = 1.0 - _as_params(d).gamma
    return BlochX(p.r, p.s, p.c3, p.c1 * keep, p.c2 * keep)


def kraus_apply(dm: XDensityMatrix, d) -> XDensityMatrix:
    """Apply the two-qubit channel by summing the four Kraus products."""
    rho = dm.matrix()
    ks = kraus_operators(d)
    out = np.zeros((4, 4), dtype=complex)
    for ka in ks:
        for kb in ks:
            k = np.kron(ka, kb)
            out += k @ rho @ k.conj().T
    return validate_density(out)


def _werner_check(a: float):
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"Werner parameter must lie in [0, 1], got {a!r}")


def werner_sqd_damped(a: float, d, x: float) -> float:
    """Closed-form discord of a phase-damped Werner state.

    After damping the state is Bell-diagonal with ``c3 = -a`` and
    ``c1 = c2 = -a(1-g)``, so ``|c3|`` dominates and the measurement term
    uses ``a tanh x``.
    """
    _werner_check(a)
    g = _as_params(d).gamma
    damped = 2.0 * a * (1.0 - g)
    at = a * math.tanh(x)
    return float(
        0.25 * xlog2x(1.0 + a - damped)
        + 0.25 * xlog2x(1.0 + a + damped)
        + 0.5 * xlog2x(1.0 - a)
        - 0.5 * xlog2x(1.0 - at)
        - 0.5 * xlog2x(1.0 + at)
    )


def werner_discord_loss(a: float, d) -> float:
    """Discord lost by a Werner state under damping; independent of x."""
    _werner_check(a)
    g = _as_params(d).gamma
    damped = 2.0 * a * (1.0 - g)
    return float(
        0.25 * xlog2x(1.0 - a) + 0.25 * xlog2x(1.0 + 3.0 * a)
        - 0.25 * xlog2x(1.0 + a - damped) - 0.25 * xlog2x(1.0 + a + damped)
    )


def damping_sweep(p: BlochX, x: float, gammas) -> list[tuple[float, SqdReport]]:
    """Discord of the damped state at each rate, in input order.

    Every point goes through the full optimizer; the optimum can move
    between the interior and an endpoint as the coherences decay.
    """
    return [
        (float(g), super_quantum_discord(FContext(phase_damp_bloch(p, g), x)))
        for g in gammas
    ]
