"""Entropic primitives (all results in bits)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateState, DomainError
from .xstate import BlochX, SpectrumX, spectrum

TOL_NUM = 1e-9
# w*log(w) is set to 0 below this magnitude
XLOGX_GUARD = 1e-15
INV_LN2 = 1.0 / math.log(2.0)


def xlog2x(w):
    """``w * log2(w)`` with the removable singularity at 0 filled in."""
    w = np.asarray(w, dtype=float)
    safe = np.where(np.abs(w) > XLOGX_GUARD, w, 1.0)
    out = np.where(np.abs(w) > XLOGX_GUARD, w * np.log(safe) * INV_LN2, 0.0)
    return out if out.ndim else float(out)


def entropic_E(y):
    """Binary entropy of the outcome probabilities ``(1 +- y)/2``.

    ``E(y) = 1 - (1+y)/2 log2(1+y) - (1-y)/2 log2(1-y)``, so ``E(0) = 1``
    and ``E(+-1) = 0``.  Accepts scalars or arrays; ``|y|`` may exceed 1 by
    at most ``TOL_NUM`` (it is clamped).
    """
    y = np.asarray(y, dtype=float)
    if np.any(np.abs(y) > 1.0 + TOL_NUM) or np.any(np.isnan(y)):
        raise DomainError(f"entropic_E needs |y| <= 1, got {y!r}")
    y = np.clip(y, -1.0, 1.0)
    out = 1.0 - 0.5 * xlog2x(1.0 + y) - 0.5 * xlog2x(1.0 - y)
    return out if np.ndim(out) else float(out)


def entropy4(lams: SpectrumX) -> float:
    """von Neumann entropy from the four eigenvalues."""
    return float(-np.sum(xlog2x(np.clip(lams.as_array(), 0.0, None))))


@dataclass(frozen=True)
class MutualInfoBreakdown:
    S_A: float
    S_B: float
    S_AB: float
    I: float


def _weighted_E(weight: float, radius: float) -> float:
    """``weight/2 * E(radius/weight)`` with the weight -> 0 limit."""
    if weight <= XLOGX_GUARD:
        if radius > TOL_NUM:
            raise DegenerateState(
                f"block weight {weight!r} vanishes but its radius {radius!r} does not"
            )
        return 0.0
    return 0.5 * weight * entropic_E(min(radius / weight, 1.0 + TOL_NUM))


def joint_entropy_closed_form(p: BlochX) -> float:
    """S(rho_AB) without eigenvalues: ``E(c3) + (1+c3)/2 E(q12/(1+c3)) + (1-c3)/2 E(q34/(1-c3))``.

    ``q12`` and ``q34`` are the splittings of the two 2x2 blocks.
    """
    q12 = math.sqrt((p.r + p.s) ** 2 + abs(p.c1 - p.c2) ** 2)
    q34 = math.sqrt((p.r - p.s) ** 2 + abs(p.c1 + p.c2) ** 2)
    return entropic_E(p.c3) + _weighted_E(1.0 + p.c3, q12) + _weighted_E(1.0 - p.c3, q34)


def mutual_information_closed_form(p: BlochX) -> float:
    """Mutual information written through ``E`` only (no eigenvalues)."""
    return entropic_E(p.r) + entropic_E(p.s) - joint_entropy_closed_form(p)


def mutual_information(p: BlochX) -> MutualInfoBreakdown:
    """S(A) + S(B) - S(AB), with the joint entropy taken from the spectrum.

    The closed form of :func:`mutual_information_closed_form` is evaluated
    as well and must agree to ``TOL_NUM``.
    """
    s_a = entropic_E(p.r)
    s_b = entropic_E(p.s)
    s_ab = entropy4(spectrum(p))
    info = s_a + s_b - s_ab
    closed = mutual_information_closed_form(p)
    if abs(closed - info) > TOL_NUM:
        raise DegenerateState(f"mutual information routes disagree: {info!r} vs {closed!r}")
    return MutualInfoBreakdown(s_a, s_b, s_ab, info)
