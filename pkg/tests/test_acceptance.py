"""Acceptance criteria, one test each.

Every test records a single ``CRITERION n: PASS/FAIL`` line (shown in the
pytest terminal summary) before asserting, so a red criterion still reports
the numbers it was judged on.
"""
import json
import math
import time

import numpy as np
import pytest

from superdiscord import (
    Case,
    CorollaryViolation,
    FContext,
    F_prime,
    F_second,
    F_value,
    NotPositive,
    SU2Element,
    bell_diagonal,
    bell_diagonal_sqd,
    bloch_from_density,
    brute_force_min_conditional_entropy,
    classify_case,
    conditional_state_direct,
    damping_sweep,
    example2,
    example3,
    minimize_F,
    newton_refine,
    random_xstate,
    spectrum,
    super_quantum_discord,
    werner,
    werner_discord_loss,
)
from superdiscord.cli import main, sweep_gamma_rows
from superdiscord.optimizer import AUDIT_POINTS
from superdiscord.sqd import sqd_constant
from superdiscord.weakmeas import (
    F_endpoint_1,
    conditional_outcome,
    conditional_state_formula,
    theta_value,
)

SEED = 20240601


def _cli_json(capsys, *argv):
    start = time.perf_counter()
    code = main(list(argv))
    elapsed = time.perf_counter() - start
    return code, json.loads(capsys.readouterr().out), elapsed


def _audit_argmin(ctx):
    grid = np.linspace(0.0, 1.0, AUDIT_POINTS)
    return float(grid[np.argmin(F_value(ctx, grid))])


@pytest.mark.parametrize("n,x,sqd_ref,z_ref", [
    (1, "3", 0.1332, 0.47747),
    (2, "4", 0.1328, 0.84639),
])
def test_example3_pins(capsys, criterion, n, x, sqd_ref, z_ref):
    code, rep, elapsed = _cli_json(capsys, "compute", "--example", "ex3", "--x", x)
    ok = (
        code == 0
        and abs(rep["sqd"] - sqd_ref) <= 5e-4
        and abs(rep["z_hat"] - z_ref) <= 1e-4
        and elapsed < 1.0
    )
    criterion(f"CRITERION {n}", ok,
              f"x={x}: sqd={rep['sqd']:.6f} (ref {sqd_ref}), z_hat={rep['z_hat']:.6f} "
              f"(ref {z_ref}), {elapsed:.3f}s")
    assert ok


def test_newton_trace(criterion):
    p = bloch_from_density(example3())
    printed = {3.0: (0.8305, 0.6718, 0.5582, 0.4964, 0.4788), 4.0: (0.9042, 0.8561, 0.8467)}
    details, ok = [], True
    for x, ref in printed.items():
        trace = newton_refine(FContext(p, x), 1.0).iterations
        got = [z for z, *_ in trace[1:1 + len(ref)]]
        worst = max(abs(a - b) for a, b in zip(got, ref))
        ok &= len(got) == len(ref) and worst < 5e-5
        details.append(f"x={x:g}: " + ", ".join(f"{z:.4f}" for z in got) + f" (max dev {worst:.1e})")
    criterion("CRITERION 3", ok, "; ".join(details))
    assert ok


def test_example2_pins(criterion):
    p = bloch_from_density(example2())
    lam = np.sort(spectrum(p).as_array())[::-1]
    lam_ok = np.allclose(lam, [0.509649, 0.299351, 0.154, 0.037], atol=1e-6, rtol=0)
    const = sqd_constant(p)
    results = [minimize_F(FContext(p, x)) for x in (1.0, 2.0, 3.0)]
    opt_ok = all(r.z_hat == 1.0 and r.case.case is Case.A for r in results)
    ok = lam_ok and abs(const - 0.3899) <= 5e-4 and opt_ok
    criterion("CRITERION 4", ok,
              f"spectrum={np.round(lam, 6).tolist()}, constant={const:.5f}, "
              f"(z_hat, case) at x=1,2,3: {[(r.z_hat, r.case.case.value) for r in results]}")
    assert ok


def test_oracle_equivalence(criterion):
    rng = np.random.default_rng(SEED)
    states = [example2(), example3(), werner(0.5)] + [random_xstate(rng) for _ in range(20)]
    resolutions = (32, 64, 128, 200)
    start = time.perf_counter()
    worst_final, non_monotone = 0.0, 0
    for dm in states:
        p = bloch_from_density(dm)
        for x in (0.5, 1.0, 3.0):
            analytic = 1.0 + minimize_F(FContext(p, x)).f_min
            gaps = [brute_force_min_conditional_entropy(dm, x, r)[0] - analytic for r in resolutions]
            worst_final = max(worst_final, abs(gaps[-1]))
            # gaps are signed; a negative one would mean the analytic minimum is not minimal
            if min(gaps) < -1e-10 or any(b > a + 1e-12 for a, b in zip(gaps, gaps[1:])):
                non_monotone += 1
    elapsed = time.perf_counter() - start
    ok = worst_final <= 1e-3 and non_monotone == 0 and elapsed < 60
    criterion("CRITERION 5", ok,
              f"{len(states)} states x 3 strengths: worst gap at 200 = {worst_final:.2e}, "
              f"non-monotone sequences = {non_monotone}, {elapsed:.1f}s")
    assert ok


def test_operator_level_formulas(criterion):
    rng = np.random.default_rng(SEED + 1)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        dm = random_xstate(rng)
        p = bloch_from_density(dm)
        v = SU2Element.random(rng)
        x = float(rng.uniform(0.0, 6.0))
        out, rho_p, rho_m = conditional_state_direct(dm, v, x)
        n = v.direction
        worst = max(
            worst,
            np.max(np.abs(conditional_state_formula(p, n, x, +1) - rho_p)),
            np.max(np.abs(conditional_state_formula(p, n, x, -1) - rho_m)),
        )
        ref = conditional_outcome(FContext(p, x), n[2], theta_value(p, *n))
        worst = max(worst, max(abs(a - b) for a, b in zip(vars(out).values(), vars(ref).values())))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and elapsed < 10
    criterion("CRITERION 6", ok, f"200 triples: max entry/eigenvalue deviation {worst:.1e}, {elapsed:.2f}s")
    assert ok


def test_derivatives(criterion):
    rng = np.random.default_rng(SEED + 2)
    worst1 = worst2 = worst_forms = 0.0
    for _ in range(500):
        ctx = FContext(bloch_from_density(random_xstate(rng)), float(rng.uniform(0.1, 5.0)))
        z = float(rng.uniform(0.02, 0.98))
        h1, h2 = 1e-6, 1e-5
        fd1 = (F_value(ctx, z + h1) - F_value(ctx, z - h1)) / (2 * h1)
        fd2 = (F_prime(ctx, z + h2) - F_prime(ctx, z - h2)) / (2 * h2)
        d1 = F_prime(ctx, z, "theorem")
        worst1 = max(worst1, abs(d1 - fd1))
        worst2 = max(worst2, abs(F_second(ctx, z) - fd2))
        worst_forms = max(worst_forms, abs(d1 - F_prime(ctx, z, "appendix")))
    ok = worst1 <= 1e-6 and worst2 <= 1e-5 and worst_forms <= 1e-10
    criterion("CRITERION 7", ok,
              f"500 samples: |F'-FD|={worst1:.1e}, |F''-FD|={worst2:.1e}, |F' forms|={worst_forms:.1e}")
    assert ok


def test_corollary_soundness(criterion):
    rng = np.random.default_rng(SEED + 3)
    step = 1.0 / (AUDIT_POINTS - 1)
    counts = {c: 0 for c in Case}
    misplaced = violations = 0
    for _ in range(2000):
        p = bloch_from_density(random_xstate(rng))
        for x in (0.5, 2.0, 5.0):
            ctx = FContext(p, x)
            label = classify_case(ctx)
            counts[label.case] += 1
            try:
                minimize_F(ctx)
            except CorollaryViolation:
                violations += 1
            if label.endpoint is not None and abs(_audit_argmin(ctx) - label.endpoint) > step:
                # a flat objective may have its grid argmin anywhere; accept equal F
                if F_value(ctx, label.endpoint) > F_value(ctx, _audit_argmin(ctx)) + 1e-12:
                    misplaced += 1
    ok = misplaced == 0 and violations == 0
    summary = ", ".join(f"{c.value}={n}" for c, n in counts.items())
    criterion("CRITERION 8", ok, f"6000 cases ({summary}): misplaced={misplaced}, violations={violations}")
    assert ok


def test_damping(criterion):
    parts = {}
    # Werner: loss on an (a, gamma) grid, T increasing in gamma
    grid_a = np.linspace(0.0, 1.0, 11)
    grid_g = np.linspace(0.0, 1.0, 11)
    deltas = [row[4] for a in grid_a for row in sweep_gamma_rows(werner(a), 2.0, grid_g)]
    parts["werner delta<=0"] = max(deltas) <= 1e-9
    increasing = all(
        all(b > a_ for a_, b in zip(t, t[1:]))
        for t in ([werner_discord_loss(a, g) for g in grid_g] for a in grid_a[1:])
    )
    parts["T increasing"] = increasing

    gammas = [0.1, 0.3, 0.5, 0.7, 1.0]
    ex2_rows = sweep_gamma_rows(example2(), 2.0, np.linspace(0, 1, 11))
    ex2_worst = max(abs(r[4]) for r in ex2_rows)
    parts["ex2 delta=0"] = ex2_worst <= 1e-9

    ex3_rows = sweep_gamma_rows(example3(), 4.0, gammas)
    ex3_min = min(r[4] for r in ex3_rows)
    parts["ex3 delta>=0"] = ex3_min >= -1e-9
    parts["ex3 argmin z=1"] = all(r[1] == 1.0 for r in ex3_rows)

    # what does hold: the measurement-dependent part behaves as claimed
    p2, p3 = bloch_from_density(example2()), bloch_from_density(example3())
    f2 = minimize_F(FContext(p2, 2.0)).f_min
    f3 = minimize_F(FContext(p3, 4.0)).f_min
    f2_same = max(abs(r.f_min - f2) for _, r in damping_sweep(p2, 2.0, gammas))
    f3_gain = min(r.f_min - f3 for _, r in damping_sweep(p3, 4.0, gammas))

    ok = all(parts.values())
    flags = ", ".join(f"{k}:{'ok' if v else 'no'}" for k, v in parts.items())
    criterion("CRITERION 9", ok,
              f"{flags}; ex2 max|delta|={ex2_worst:.4f}, ex3 min delta={ex3_min:.4f}; "
              f"min F: ex2 change {f2_same:.1e}, ex3 rise {f3_gain:.2e}")
    assert ok


def test_bell_diagonal(criterion):
    rng = np.random.default_rng(SEED + 4)
    coeffs = []
    while len(coeffs) < 50:
        c = rng.uniform(-1.0, 1.0, 3)
        try:
            bell_diagonal(*c)
        except NotPositive:
            continue
        coeffs.append(c)
    worst = 0.0
    for c in coeffs:
        dm = bell_diagonal(*c)
        for x in (1.0, 3.0):
            pipeline = super_quantum_discord(FContext(bloch_from_density(dm), x)).sqd
            worst = max(worst, abs(bell_diagonal_sqd(*c, x) - pipeline))
    w0 = super_quantum_discord(FContext(bloch_from_density(werner(0.0)), 2.0)).sqd
    ok = worst <= 1e-10 and abs(w0) <= 1e-15
    criterion("CRITERION 10", ok, f"50 states x 2 strengths: max deviation {worst:.1e}; Werner a=0 sqd={w0}")
    assert ok


def test_figure_curves(criterion):
    p2 = bloch_from_density(example2())
    f1 = [F_endpoint_1(FContext(p2, x)) for x in np.linspace(0.0, 6.0, 61)]
    ex2_ok = all(b <= a + 1e-15 for a, b in zip(f1, f1[1:]))
    p3 = bloch_from_density(example3())
    where = {}
    for x in (1.0, 2.0, 3.0, 4.0):
        ctx = FContext(p3, x)
        where[x] = (minimize_F(ctx).z_hat, _audit_argmin(ctx))
    interior = all(0.0 < where[x][0] < 1.0 and 0.0 < where[x][1] < 1.0 for x in (3.0, 4.0))
    endpoint = all(where[x][0] in (0.0, 1.0) and where[x][1] in (0.0, 1.0) for x in (1.0, 2.0))
    ok = ex2_ok and interior and endpoint
    criterion("CRITERION 11", ok,
              f"ex2 F(1) non-increasing: {ex2_ok}; ex3 (z_hat, audit argmin): "
              + ", ".join(f"x={x:g}: ({a:.5f}, {b:.5f})" for x, (a, b) in where.items()))
    assert ok
