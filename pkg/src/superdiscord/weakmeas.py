"""Conditional states of subsystem A after a weak measurement on B.

A weak measurement of strength ``x`` along the Bloch direction
``(z1, z2, z)`` leaves A in one of two states.  The post-measurement
conditional entropy of an X state depends on the direction only through
``z`` and the combination::

    theta = z1^2 |c1|^2 + z2^2 |c2|^2 + 2 z1 z2 (a1 b2 - a2 b1) + c3^2 z^2

so the minimisation over measurements is a problem in ``(theta, z)``.  The
objective decreases in ``theta``; substituting the largest reachable
``theta = b^2 + (c3^2 - b^2) z^2`` leaves the one-variable function
``F(z)`` on ``[0, 1]`` with ``min S(A|B) = 1 + min F``.

Conventions.  ``u_plus = 1 + s z tanh(x)`` and
``H_plus = sqrt(b^2 (1 - z^2) tanh^2 x + (r + c3 z tanh x)^2)``.  The pair
``(u_plus, H_plus)`` belongs to the outcome ``P(-x)``, whose probability is
``u_plus / 2``; ``(u_minus, H_minus)`` belongs to ``P(+x)``.  Every branch
contributes ``p * E(H / u)`` where ``E`` is the binary entropy, so::

    F(z) = u_plus/2 * E(A_plus) + u_minus/2 * E(A_minus) - 1,  A = H / u.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import INV_LN2, TOL_NUM, entropic_E, xlog2x
from .errors import DegenerateBranch, DomainError, InvalidRegion, SingularDerivative
from .xstate import BlochX, density_from_bloch

TOL_DEG = 1e-12
TOL_RADICAND = 1e-12
X_MAX = 700.0
# tanh saturates in double precision beyond this strength
X_PROJECTIVE = 19.0
# below this A the series forms of g and h are used
_SERIES_CUTOFF = 0.05


@dataclass(frozen=True)
class FContext:
    """Everything F depends on: the state and the measurement strength.

    Negative ``x`` is accepted; ``P(x)`` and ``P(-x)`` form the same
    measurement, so F is even in ``x``.
    """

    bloch: BlochX
    x: float
    tx: float = field(init=False)
    b_sq: float = field(init=False)
    projective_limit: bool = field(init=False)

    def __post_init__(self):
        x = float(self.x)
        if not math.isfinite(x) or abs(x) > X_MAX:
            raise DomainError(f"measurement strength must satisfy |x| <= {X_MAX}, got {x!r}")
        density_from_bloch(self.bloch)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "tx", math.tanh(x))
        object.__setattr__(self, "b_sq", self.bloch.b_sq)
        object.__setattr__(self, "projective_limit", abs(x) >= X_PROJECTIVE)


@dataclass(frozen=True)
class ConditionalOutcome:
    """Outcome probabilities and conditional eigenvalues.

    ``p_plus`` is the probability of ``P(+x)``; ``lam_plus_pos`` and
    ``lam_plus_neg`` are the two eigenvalues of the state A is left in by
    that outcome.
    """

    p_plus: float
    p_minus: float
    lam_plus_pos: float
    lam_plus_neg: float
    lam_minus_pos: float
    lam_minus_neg: float

    def conditional_entropy(self) -> float:
        """S(A | measurement) in bits; zero-probability branches contribute 0."""
        total = 0.0
        for p, lam in ((self.p_plus, self.lam_plus_pos), (self.p_minus, self.lam_minus_pos)):
            if p > TOL_DEG:
                total += p * entropic_E(min(max(2.0 * lam - 1.0, -1.0), 1.0))
        return total


@dataclass(frozen=True)
class FTerms:
    H_plus: np.ndarray
    H_minus: np.ndarray
    Hp_prime: np.ndarray
    Hm_prime: np.ndarray
    Hp_second: np.ndarray
    Hm_second: np.ndarray
    A_plus: np.ndarray
    A_minus: np.ndarray


def theta_bounds(ctx: FContext, z):
    """Smallest and largest reachable theta at ``z``."""
    z = np.asarray(z, dtype=float)
    c3sq = ctx.bloch.c3 ** 2
    return c3sq * z * z, ctx.b_sq + (c3sq - ctx.b_sq) * z * z


def theta_value(p: BlochX, z1: float, z2: float, z: float) -> float:
    """theta for the measurement direction ``(z1, z2, z)``."""
    return (
        z1 * z1 * abs(p.c1) ** 2 + z2 * z2 * abs(p.c2) ** 2
        + 2.0 * z1 * z2 * p.cross + p.c3 ** 2 * z * z
    )


def _radius(radicand):
    radicand = np.asarray(radicand, dtype=float)
    if np.any(radicand < -TOL_RADICAND):
        raise InvalidRegion(f"negative radicand {np.min(radicand)!r}")
    return np.sqrt(np.clip(radicand, 0.0, None))


def _ratio(h, u):
    """``A = H/u`` clipped to [0, 1]; zero where the branch is degenerate."""
    live = u > 2.0 * TOL_DEG
    a = np.where(live, h / np.where(live, u, 1.0), 0.0)
    if np.any(a > 1.0 + TOL_NUM):
        raise InvalidRegion(f"conditional radius exceeds branch weight (A = {np.max(a)!r})")
    return np.clip(a, 0.0, 1.0), live


def _branch_sum(u_plus, h_plus, u_minus, h_minus):
    a_p, live_p = _ratio(h_plus, u_plus)
    a_m, live_m = _ratio(h_minus, u_minus)
    out = (
        np.where(live_p, 0.5 * u_plus * entropic_E(a_p), 0.0)
        + np.where(live_m, 0.5 * u_minus * entropic_E(a_m), 0.0)
        - 1.0
    )
    return out if np.ndim(out) else float(out)


def _radicands(ctx: FContext, z, theta):
    p = ctx.bloch
    t = ctx.tx
    base = p.r ** 2 + theta * t * t
    cross = 2.0 * p.r * p.c3 * z * t
    return base + cross, base - cross


def conditional_outcome(ctx: FContext, z: float, theta: float) -> ConditionalOutcome:
    """Outcome probabilities and conditional eigenvalues at ``(z, theta)``.

    Raises ``DegenerateBranch`` when an outcome probability is at most
    ``TOL_DEG``; the caller should then treat that branch as contributing
    nothing to the conditional entropy.
    """
    if abs(z) > 1.0 + TOL_NUM:
        raise DomainError(f"|z| must be <= 1, got {z!r}")
    szt = ctx.bloch.s * z * ctx.tx
    u_plus, u_minus = 1.0 + szt, 1.0 - szt
    if min(u_plus, u_minus) <= 2.0 * TOL_DEG:
        raise DegenerateBranch(f"an outcome has probability {min(u_plus, u_minus) / 2!r}")
    rad_plus, rad_minus = _radicands(ctx, z, theta)
    h_plus, h_minus = float(_radius(rad_plus)), float(_radius(rad_minus))
    _ratio(h_plus, u_plus)
    _ratio(h_minus, u_minus)
    return ConditionalOutcome(
        p_plus=0.5 * u_minus,
        p_minus=0.5 * u_plus,
        lam_plus_pos=min(0.5 * (1.0 + h_minus / u_minus), 1.0),
        lam_plus_neg=max(0.5 * (1.0 - h_minus / u_minus), 0.0),
        lam_minus_pos=min(0.5 * (1.0 + h_plus / u_plus), 1.0),
        lam_minus_neg=max(0.5 * (1.0 - h_plus / u_plus), 0.0),
    )


def conditional_state_formula(p: BlochX, direction, x: float, outcome: int) -> np.ndarray:
    """Closed-form 2x2 state of A after outcome ``P(outcome * x)``.

    ``direction`` is the unit vector ``(z1, z2, z)`` with
    ``Pi_0 - Pi_1 = z1 sigma_1 + z2 sigma_2 + z sigma_3``.
    """
    z1, z2, z = direction
    t = math.tanh(outcome * x)
    a1, b1 = p.c1.real, p.c1.imag
    a2, b2 = p.c2.real, p.c2.imag
    u = 1.0 - p.s * z * t
    if u <= 2.0 * TOL_DEG:
        raise DegenerateBranch("outcome has zero probability")
    m3 = p.r - p.c3 * z * t
    m1 = -(z1 * a1 + z2 * b2) * t
    m2 = -(z2 * a2 - z1 * b1) * t
    return np.array([[u + m3, m1 - 1j * m2], [m1 + 1j * m2, u - m3]]) / (2.0 * u)


def G_value(ctx: FContext, z, theta):
    """Conditional entropy minus one, as a function of ``(theta, z)``."""
    z = np.asarray(z, dtype=float)
    theta = np.asarray(theta, dtype=float)
    szt = ctx.bloch.s * z * ctx.tx
    rad_plus, rad_minus = _radicands(ctx, z, theta)
    return _branch_sum(1.0 + szt, _radius(rad_plus), 1.0 - szt, _radius(rad_minus))


def _core(ctx: FContext, z):
    p = ctx.bloch
    t = ctx.tx
    szt = p.s * z * t
    u_plus, u_minus = 1.0 + szt, 1.0 - szt
    transverse = ctx.b_sq * (1.0 - z * z) * t * t
    h_plus = np.sqrt(np.clip(transverse + (p.r + p.c3 * z * t) ** 2, 0.0, None))
    h_minus = np.sqrt(np.clip(transverse + (p.r - p.c3 * z * t) ** 2, 0.0, None))
    return u_plus, u_minus, h_plus, h_minus


def F_value(ctx: FContext, z):
    """The reduced objective; ``1 + min F`` is the minimal conditional entropy.

    Vectorised over ``z``.  Always ``<= 0``.
    """
    z = np.asarray(z, dtype=float)
    if np.any(np.abs(z) > 1.0 + TOL_NUM):
        raise DomainError("F is defined for |z| <= 1")
    return _branch_sum(*_interleave(_core(ctx, z)))


def _interleave(core):
    u_plus, u_minus, h_plus, h_minus = core
    return u_plus, h_plus, u_minus, h_minus


def F_endpoint_0(ctx: FContext) -> float:
    """``F(0) = E(sqrt(r^2 + b^2 tanh^2 x)) - 1``."""
    p = ctx.bloch
    radius = math.sqrt(p.r ** 2 + ctx.b_sq * ctx.tx ** 2)
    return entropic_E(min(radius, 1.0 + TOL_NUM)) - 1.0


def F_endpoint_1(ctx: FContext) -> float:
    """``F(1)`` written out as four entropy terms.

    At ``z = 1`` the transverse coherence drops out, so only ``r``, ``s``
    and ``c3`` enter.
    """
    p = ctx.bloch
    t = ctx.tx
    total = 0.0
    for u, w in (
        (1.0 + p.s * t, 1.0 + p.r + (p.s + p.c3) * t),
        (1.0 + p.s * t, 1.0 - p.r + (p.s - p.c3) * t),
        (1.0 - p.s * t, 1.0 + p.r - (p.s + p.c3) * t),
        (1.0 - p.s * t, 1.0 - p.r - (p.s - p.c3) * t),
    ):
        if u <= 2.0 * TOL_DEG:
            continue
        w = max(w, 0.0)
        # w log2(w/u) = w log2 w - w log2 u
        total -= 0.25 * (xlog2x(w) - (w * math.log2(u) if w > 0.0 else 0.0))
    return total


# -- derivatives ----------------------------------------------------------

def _g(a):
    """``artanh(a) / a`` with g(0) = 1."""
    a = np.asarray(a, dtype=float)
    small = a < _SERIES_CUTOFF
    a2 = a * a
    series = 1.0 + a2 * (1 / 3 + a2 * (1 / 5 + a2 * (1 / 7 + a2 * (1 / 9 + a2 / 11))))
    direct = np.arctanh(np.where(small, 0.5, a)) / np.where(small, 0.5, a)
    return np.where(small, series, direct)


def _h(a):
    """``(1/(1 - a^2) - artanh(a)/a) / a^2`` with h(0) = 2/3."""
    a = np.asarray(a, dtype=float)
    small = a < _SERIES_CUTOFF
    a2 = a * a
    coeffs = [2 * n / (2 * n + 1) for n in range(1, 9)]
    series = np.zeros_like(a2)
    for c in reversed(coeffs):
        series = series * a2 + c
    safe = np.where(small, 0.5, a)
    direct = (1.0 / (1.0 - safe * safe) - np.arctanh(safe) / safe) / (safe * safe)
    return np.where(small, series, direct)


def _derivative_setup(ctx: FContext, z):
    z = np.asarray(z, dtype=float)
    p = ctx.bloch
    t = ctx.tx
    u_plus, u_minus, h_plus, h_minus = _core(ctx, z)
    if np.any(np.minimum(u_plus, u_minus) <= 2.0 * TOL_DEG):
        raise SingularDerivative("a measurement outcome has zero probability")
    a_plus = h_plus / u_plus
    a_minus = h_minus / u_minus
    if np.any(np.maximum(a_plus, a_minus) >= 1.0 - TOL_DEG):
        raise SingularDerivative("a conditional state is pure; F has a log singularity here")
    d = p.c3 ** 2 - ctx.b_sq
    # K = H H', i.e. half the z-derivative of H^2
    k_plus = p.r * p.c3 * t + d * z * t * t
    k_minus = -p.r * p.c3 * t + d * z * t * t
    return z, t, d, u_plus, u_minus, h_plus, h_minus, a_plus, a_minus, k_plus, k_minus


def F_terms(ctx: FContext, z) -> FTerms:
    """H, its first two z-derivatives, and A = H/u for both branches.

    Derivatives of H are ``nan`` where H vanishes.
    """
    z, t, d, u_p, u_m, h_p, h_m, a_p, a_m, k_p, k_m = _derivative_setup(ctx, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        hp1 = np.where(h_p > 0, k_p / h_p, np.nan)
        hm1 = np.where(h_m > 0, k_m / h_m, np.nan)
        hp2 = (d * t * t - hp1 ** 2) / h_p
        hm2 = (d * t * t - hm1 ** 2) / h_m
    return FTerms(h_p, h_m, hp1, hm1, hp2, hm2, a_p, a_m)


def F_prime(ctx: FContext, z, form: str = "theorem"):
    """dF/dz.

    ``form="theorem"`` evaluates the natural-log expression built from
    ``(u^2 - H^2)`` products; ``form="appendix"`` evaluates the same
    derivative through ``A = H/u``.  Both use the finite limit
    ``H' * log((u+H)/(u-H)) -> 2K/u`` where ``H`` vanishes.

    Raises ``SingularDerivative`` if a conditional state is pure or an
    outcome has zero probability.
    """
    z, t, d, u_p, u_m, h_p, h_m, a_p, a_m, k_p, k_m = _derivative_setup(ctx, z)
    st = ctx.bloch.s * t
    if form == "theorem":
        first = st * np.log(((u_p ** 2 - h_p ** 2) * u_m ** 2) / ((u_m ** 2 - h_m ** 2) * u_p ** 2))
        out = -0.25 * INV_LN2 * (first + _h_log(h_p, u_p, k_p) + _h_log(h_m, u_m, k_m))
    elif form == "appendix":
        first = st * np.log2((1.0 - a_p ** 2) / (1.0 - a_m ** 2))
        # (1/A) log2((1+A)/(1-A)) = 2 g(A) / ln 2
        second = k_p / u_p * 2.0 * _g(a_p) * INV_LN2
        third = k_m / u_m * 2.0 * _g(a_m) * INV_LN2
        out = -0.25 * (first + second + third)
    else:
        raise ValueError(f"unknown derivative form {form!r}")
    return out if np.ndim(out) else float(out)


def _h_log(h, u, k):
    """``H' * ln((u+H)/(u-H))`` with ``H' = K/H``."""
    tiny = h < TOL_NUM
    safe_h = np.where(tiny, 1.0, h)
    direct = k / safe_h * np.log((u + h) / (u - h))
    return np.where(tiny, 2.0 * k / u * _g(h / u), direct)


def F_second(ctx: FContext, z):
    """d^2F/dz^2.

    The textbook expression contains ``H'^2/(u^2 - H^2)`` and ``H'' ln(...)``
    terms that each blow up where ``H -> 0`` while their sum stays finite.
    They are evaluated here in the regrouped form::

        H'^2 u/(u^2-H^2) + H''/2 ln((u+H)/(u-H))
            = K^2 h(A)/u^3 + (c3^2 - b^2) tanh^2(x) g(A)/u

    with ``g(A) = artanh(A)/A`` and ``h(A) = (1/(1-A^2) - g(A))/A^2``.
    """
    z, t, d, u_p, u_m, h_p, h_m, a_p, a_m, k_p, k_m = _derivative_setup(ctx, z)
    st = ctx.bloch.s * t

    def branch(u, a, k, sign):
        one_minus = 1.0 - a * a
        return (
            st * st / (u * one_minus)
            - sign * 2.0 * st * k / (u * u * one_minus)
            + k * k * _h(a) / u ** 3
            + d * t * t * _g(a) / u
        )

    total = branch(u_p, a_p, k_p, 1.0) + branch(u_m, a_m, k_m, -1.0)
    total = total - 2.0 * st * st / (1.0 - (st * z) ** 2)
    out = -0.5 * INV_LN2 * total
    return out if np.ndim(out) else float(out)
