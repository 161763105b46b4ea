"""Global minimisation of F over [0, 1].

Three pieces:

* :func:`classify_case` recognises the parameter regions where the minimum
  is known to sit at an endpoint (``z = 1`` for cases A/B, ``z = 0`` for
  C/D).  The label is informational and a cross-check, never a shortcut.
* :func:`newton_refine` runs ``z <- z - F'(z)/F''(z)`` from a start point.
* :func:`minimize_F` scans a uniform grid, polishes every interior local
  minimum with Newton (golden section if Newton fails) and compares the
  candidates with both endpoints.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CorollaryViolation, NewtonDiverged, SingularDerivative
from .weakmeas import FContext, F_prime, F_second, F_value

TOL_CASE = 1e-12
TOL_OPT = 1e-10
TOL_NEWTON = 1e-10
TOL_GOLDEN = 1e-12
TOL_TIE = 1e-12
MAX_NEWTON = 100
SEARCH_POINTS = 201
AUDIT_POINTS = 4001

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class Case(str, enum.Enum):
    A = "CaseA"
    # Mirror image of A under x -> -x.  classify_case folds it into A (see there).
    B = "CaseB"
    C = "CaseC"
    D = "CaseD"
    GENERAL = "General"


class Method(str, enum.Enum):
    ENDPOINT = "EndpointFast"
    NEWTON = "NewtonInterior"
    GRID = "GridRefined"


@dataclass(frozen=True)
class CaseLabel:
    case: Case
    predicates: dict = field(default_factory=dict)

    @property
    def endpoint(self):
        """The z the case predicts for the minimum, or None."""
        if self.case in (Case.A, Case.B):
            return 1.0
        if self.case in (Case.C, Case.D):
            return 0.0
        return None


@dataclass(frozen=True)
class OptimizationResult:
    z_hat: float
    f_min: float
    case: CaseLabel
    iterations: tuple = ()
    method: Method = Method.GRID


def classify_case(ctx: FContext) -> CaseLabel:
    """Evaluate the endpoint-case predicates.

    (a) ``s t >= 0``, ``r c3 t <= 0``, ``c3^2 - b^2 >= s r c3``
    (b) ``s t <= 0``, ``r c3 t >= 0``, ``c3^2 - b^2 >= s r c3``
    (c) ``r = s = 0``, ``c3^2 <= b^2``
    (d) ``s = r c3``, ``b^2 = c3^2``, ``r^2 + c3^2 t^2 +- r c3 t >= 1``

    where ``t = tanh x``.  Flipping the sign of ``x`` swaps (a) and (b)
    while leaving the measurement unchanged, so the two are one region and
    both are reported as ``Case.A``; the raw predicate values are kept in
    ``predicates``.
    """
    p = ctx.bloch
    t = ctx.tx
    tol = TOL_CASE
    st = p.s * t
    rct = p.r * p.c3 * t
    gap_ok = p.c3 ** 2 - ctx.b_sq >= p.s * p.r * p.c3 - tol
    pred = {
        "a": bool(st >= -tol and rct <= tol and gap_ok),
        "b": bool(st <= tol and rct >= -tol and gap_ok),
        "c": bool(abs(p.r) <= tol and abs(p.s) <= tol and p.c3 ** 2 <= ctx.b_sq + tol),
        "d": bool(
            abs(p.s - p.r * p.c3) <= tol
            and abs(ctx.b_sq - p.c3 ** 2) <= tol
            and p.r ** 2 + (p.c3 * t) ** 2 + rct >= 1.0 - tol
            and p.r ** 2 + (p.c3 * t) ** 2 - rct >= 1.0 - tol
        ),
    }
    if pred["a"] or pred["b"]:
        case = Case.A
    elif pred["c"]:
        case = Case.C
    elif pred["d"]:
        case = Case.D
    else:
        case = Case.GENERAL
    return CaseLabel(case, pred)


def newton_refine(ctx: FContext, z0: float, bracket=None, *, max_iter: int = MAX_NEWTON,
                  tol: float = TOL_NEWTON) -> OptimizationResult:
    """Newton iteration on F' started at ``z0``, clamped to ``bracket``.

    ``iterations`` holds ``(z_n, F(z_n), F'(z_n))`` for ``n = 0, 1, ...``
    including the start and the accepted final iterate.  Where ``F'' <= 0``
    the Newton step is replaced by a bisection step toward whichever bracket
    end has the lower F.

    Raises ``NewtonDiverged`` after ``max_iter`` steps without convergence.
    """
    lo, hi = bracket if bracket is not None else (0.0, 1.0)
    z = min(max(float(z0), lo), hi)
    trace = []
    for _ in range(max_iter):
        fp = F_prime(ctx, z)
        trace.append((z, F_value(ctx, z), fp))
        if fp == 0.0:
            return _newton_result(ctx, z, trace)
        fpp = F_second(ctx, z)
        if fpp > 0.0:
            z_new = z - fp / fpp
        else:
            target = lo if F_value(ctx, lo) <= F_value(ctx, hi) else hi
            z_new = 0.5 * (z + target)
        z_new = min(max(z_new, lo), hi)
        if abs(z_new - z) <= tol:
            trace.append((z_new, F_value(ctx, z_new), F_prime(ctx, z_new)))
            return _newton_result(ctx, z_new, trace)
        z = z_new
    raise NewtonDiverged(f"no convergence after {max_iter} Newton steps (last z = {z!r})")


def _newton_result(ctx, z, trace):
    return OptimizationResult(
        z_hat=z, f_min=F_value(ctx, z), case=classify_case(ctx),
        iterations=tuple(trace), method=Method.NEWTON,
    )


def golden_section(f, lo: float, hi: float, tol: float = TOL_GOLDEN, max_iter: int = 200):
    """Minimise a unimodal ``f`` on ``[lo, hi]``; returns ``(z, f(z))``."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    z = 0.5 * (a + b)
    return z, f(z)


def minimize_F(ctx: FContext) -> OptimizationResult:
    """Authoritative global minimum of F on [0, 1].

    Ties within ``TOL_TIE`` go to the smaller z.  When the case label
    predicts an endpoint, the prediction is checked against the result and
    ``CorollaryViolation`` is raised on disagreement.
    """
    label = classify_case(ctx)
    grid = np.linspace(0.0, 1.0, SEARCH_POINTS)
    fg = F_value(ctx, grid)

    # (f, z, method, trace)
    candidates = [(float(fg[0]), 0.0, Method.ENDPOINT, ()), (float(fg[-1]), 1.0, Method.ENDPOINT, ())]
    for i in range(1, SEARCH_POINTS - 1):
        if not (fg[i] < fg[i - 1] and fg[i] <= fg[i + 1]):
            continue
        lo, hi = float(grid[i - 1]), float(grid[i + 1])
        try:
            res = newton_refine(ctx, float(grid[i]), (lo, hi))
            candidates.append((res.f_min, res.z_hat, Method.NEWTON, res.iterations))
        except (NewtonDiverged, SingularDerivative):
            z, fz = golden_section(lambda v: float(F_value(ctx, v)), lo, hi)
            candidates.append((fz, z, Method.GRID, ()))
        candidates.append((float(fg[i]), float(grid[i]), Method.GRID, ()))

    best = min(c[0] for c in candidates)
    f_min, z_hat, method, trace = min(
        (c for c in candidates if c[0] <= best + TOL_TIE), key=lambda c: (c[1], c[0])
    )
    if z_hat in (0.0, 1.0):
        method = Method.ENDPOINT

    expected = label.endpoint
    if expected is not None:
        f_expected = float(F_value(ctx, expected))
        if f_expected > f_min + TOL_OPT:
            raise CorollaryViolation(
                f"{label.case.value} predicts the minimum at z={expected:g} "
                f"(F={f_expected!r}) but F({z_hat!r}) = {f_min!r}"
            )
    return OptimizationResult(z_hat, f_min, label, tuple(trace), method)
