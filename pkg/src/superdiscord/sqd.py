"""Super quantum discord of X states.

``SD = I - J`` where ``J = S(A) - min S(A | weak measurement on B)`` and the
minimum equals ``1 + min F``.  Everything is in bits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import (
    TOL_NUM,
    MutualInfoBreakdown,
    entropic_E,
    entropy4,
    joint_entropy_closed_form,
    mutual_information,
    xlog2x,
)
from .errors import NotPositive, StateError
from .optimizer import OptimizationResult, minimize_F
from .weakmeas import FContext
from .xstate import BlochX, SpectrumX, bell_diagonal, spectrum

TOL_ROUTE = 1e-10


@dataclass(frozen=True)
class SqdReport:
    x: float
    bloch: BlochX
    spectrum: SpectrumX
    mutual: MutualInfoBreakdown
    cond_entropy_min: float
    classical_corr: float
    sqd: float
    opt: OptimizationResult
    # the same discord assembled as S(B) - S(AB) + min S(A|B)
    sqd_definitional: float

    @property
    def z_hat(self) -> float:
        return self.opt.z_hat

    @property
    def f_min(self) -> float:
        return self.opt.f_min


def _cond_min_from(opt: OptimizationResult) -> float:
    return min(max(1.0 + opt.f_min, 0.0), 1.0)


def conditional_entropy_min(ctx: FContext) -> float:
    """Smallest conditional entropy of A over weak measurements on B."""
    return _cond_min_from(minimize_F(ctx))


def classical_correlation(ctx: FContext) -> float:
    return entropic_E(ctx.bloch.r) - conditional_entropy_min(ctx)


def sqd_constant(p: BlochX) -> float:
    """The measurement-independent part of the discord, ``1 + S(B) - S(AB)``.

    Evaluated without eigenvalues through :func:`joint_entropy_closed_form`;
    the discord is this constant plus ``min F``.
    """
    return 1.0 + entropic_E(p.s) - joint_entropy_closed_form(p)


def super_quantum_discord(ctx: FContext) -> SqdReport:
    p = ctx.bloch
    spec = spectrum(p)
    mutual = mutual_information(p)
    opt = minimize_F(ctx)
    cond_min = _cond_min_from(opt)
    classical = mutual.S_A - cond_min
    value = sqd_constant(p) + opt.f_min
    definitional = mutual.S_B - entropy4(spec) + cond_min
    if abs(value - definitional) > TOL_ROUTE:
        raise ArithmeticError(f"discord routes disagree: {value!r} vs {definitional!r}")
    return SqdReport(
        x=ctx.x, bloch=p, spectrum=spec, mutual=mutual, cond_entropy_min=cond_min,
        classical_corr=classical, sqd=value, opt=opt, sqd_definitional=definitional,
    )


def bell_diagonal_sqd(c1: float, c2: float, c3: float, x: float) -> float:
    """Closed-form discord of the Bell-diagonal state (I + sum c_i s_i s_i)/4.

    Four eigenvalue terms plus the conditional term with
    ``C = max(|c3|, max(|c1|, |c2|))``.
    """
    try:
        bell_diagonal(c1, c2, c3)
    except StateError as exc:
        raise NotPositive(f"(c1, c2, c3) = {(c1, c2, c3)!r} is not a state: {exc}") from exc
    big_c = max(abs(c3), abs(c1), abs(c2))
    ct = big_c * math.tanh(x)
    weights = (
        1.0 - c3 + c1 + c2,
        1.0 - c3 - c1 - c2,
        1.0 + c3 + c1 - c2,
        1.0 + c3 - c1 + c2,
    )
    value = sum(0.25 * xlog2x(max(w, 0.0)) for w in weights)
    value -= 0.5 * xlog2x(1.0 + ct) + 0.5 * xlog2x(1.0 - ct)
    return float(value)


__all__ = [
    "SqdReport",
    "TOL_NUM",
    "bell_diagonal_sqd",
    "classical_correlation",
    "conditional_entropy_min",
    "sqd_constant",
    "super_quantum_discord",
]
