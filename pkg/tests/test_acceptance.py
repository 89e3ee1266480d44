"""Acceptance gate: one test per criterion, each at its stated tolerance.

Every test prints a single PASS/FAIL line (run with -s to stream them);
tolerances are pinned here and nowhere looser than in the library suites.
"""

import math
import time

import numpy as np

import qhermite as qh
from qhermite import oscillator as osc
from qhermite import polyfam


def _report(idx, name, measured, bound, extra=""):
    ok = measured < bound
    tag = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {idx:02d} {tag} {name}: measured={measured:.3e} bound={bound:.1e}{extra}")
    return ok


def _report_exceeds(idx, name, measured, floor):
    ok = measured > floor
    tag = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {idx:02d} {tag} {name}: control={measured:.3e} must exceed {floor:.1e}")
    return ok


def test_criterion_01_jackson_moment_identity():
    start = time.perf_counter()
    worst = 0.0
    for q in (0.3, 0.5, 0.7, 0.9):
        for computed, expected in qh.resolution_moment_profile(15, q):
            worst = max(worst, abs(computed - expected) / expected)
    elapsed = time.perf_counter() - start
    ok = _report(1, "Jackson moment identity, q in {0.3,0.5,0.7,0.9}, n<=15", worst, 1e-8,
                 extra=f" ({elapsed:.2f} s)")
    assert ok
    assert elapsed < 1.0


def test_criterion_02_moment_recurrence():
    defect = qh.moment_recurrence_check(10, 0.5)
    assert _report(2, "moment recursion defect, q=0.5, n<=10", defect, 1e-9)


def test_criterion_03_arik_coon():
    worst = max(
        osc.commutator_residual(osc.Relation.ARIK_COON, osc.rogers_bn(), q, 20) for q in (0.5, 0.9)
    )
    assert _report(3, "Arik-Coon relation on 19x19 block, dim=20, q in {0.5,0.9}", worst, 1e-12)


def test_criterion_04_discrete2_relations():
    worst = max(
        osc.commutator_residual(rel, osc.discrete2_bn(), 0.5, 20)
        for rel in (osc.Relation.Q_INVERSE, osc.Relation.Q_INVERSE_SQUARED)
    )
    assert _report(4, "lattice-family relations (both forms), dim=20, q=0.5", worst, 1e-10)


def test_criterion_05_spectrum():
    worst = 0.0
    exact_ground = True
    for src in (osc.rogers_bn(), osc.discrete2_bn()):
        for q in (0.5, 0.9):
            lam = np.array(osc.spectrum(src, q, 25))
            exact_ground = exact_ground and lam[0] == 1.0
            ham = osc.build_operator(osc.OperatorKind.HAMILTONIAN, src, q, 26)
            worst = max(worst, float(np.max(np.abs(np.diag(ham.entries).real - lam) / lam)))
    ok = _report(5, "spectrum: ladder Hamiltonian diagonal vs closed form, n<=25", worst, 1e-12,
                 extra=f" lambda_0==1 exactly: {exact_ground}")
    assert ok and exact_ground


def test_criterion_06_orthonormality():
    start = time.perf_counter()
    worst_off = worst_diag = 0.0
    for q in (0.5, 0.9):
        rep = qh.gram_matrix(qh.rogers(q), 10)
        worst_off = max(worst_off, rep.max_offdiag)
        worst_diag = max(worst_diag, float(np.max(np.abs(np.diag(rep.matrix) - 1.0))))
    rep2 = qh.gram_matrix(qh.discrete2(0.5, 1.0), 8)
    elapsed = time.perf_counter() - start
    ok1 = _report(6, "continuous Gram identity defect (nmax=10, q in {0.5,0.9})",
                  max(worst_off, worst_diag), 1e-8, extra=f" ({elapsed:.2f} s)")
    ok2 = _report(6, "lattice Gram off-diagonal (nmax=8, c=1)", rep2.max_offdiag, 1e-8)
    ok3 = _report(6, "lattice Gram diagonal spread (nmax=8, c=1)", rep2.diag_spread, 1e-7)
    assert ok1 and ok2 and ok3
    assert elapsed < 30.0


def test_criterion_07_eigen_property():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for fam, rmax in ((qh.rogers(0.5), 0.85 * qh.rogers_radius(0.5)), (qh.discrete2(0.5), 3.0)):
        for _ in range(20):
            z = rng.uniform(0.05, rmax) * np.exp(2j * math.pi * rng.uniform())
            worst = max(worst, qh.eigen_residual(qh.bg_expansion(fam, complex(z))))
    assert _report(7, "coherent eigen-residual, 20 random z per family", worst, 1e-9)


def test_criterion_08_overlap():
    rng = np.random.default_rng(2025)
    q = 0.5
    fam = qh.rogers(q)
    worst = 0.0
    for _ in range(50):
        z1, z2 = (
            complex(rng.uniform(0.05, 0.9) * qh.rogers_radius(q) * np.exp(2j * math.pi * rng.uniform()))
            for _ in range(2)
        )
        s1, s2 = qh.bg_expansion(fam, z1), qh.bg_expansion(fam, z2)
        n = min(s1.dim, s2.dim)
        coeff = complex(np.sum(np.conj(s1.coefficients[:n]) * s2.coefficients[:n]))
        coeff *= math.sqrt(s1.norm_sq_closed * s2.norm_sq_closed)
        closed = qh.overlap(fam, z1, z2)
        worst = max(worst, abs(coeff - closed) / abs(closed))
    assert _report(8, "overlap closed form vs coefficient sum, 50 pairs", worst, 1e-10)


def test_criterion_09_radius_diagnostics():
    q = 0.5
    err = abs(qh.radius_estimate([1.0 / qh.q_factorial(n, q) for n in range(30)]).estimate
              - qh.rogers_radius(q))
    ok1 = _report(9, "continuous radius estimate vs 1/sqrt(1-q)", err, 1e-6)
    poch, u = 1.0, []
    for n in range(30):
        u.append(((1 - q) / q) ** n * q ** (n * n) / poch)
        poch *= 1 - q ** (n + 1)
    entire = math.isinf(qh.radius_estimate(u).estimate)
    zero = qh.radius_estimate([q ** (-n * n) for n in range(30)]).estimate == 0.0
    print(f"ACCEPTANCE 09 {'PASS' if entire else 'FAIL'} lattice family classified entire: {entire}")
    print(f"ACCEPTANCE 09 {'PASS' if zero else 'FAIL'} q^(-n^2) sequence classified radius zero: {zero}")
    assert ok1 and entire and zero


def test_criterion_10_q_difference_equations():
    thetas = np.linspace(0.1, math.pi - 0.1, 20)
    xs = (-2.0, -1.0, 0.5, 1.0, 3.0)
    worst_r = max(osc.qdiff_residual_rogers(n, 0.5, thetas) for n in range(9))
    worst_d = max(osc.qdiff_residual_discrete2(n, 0.5, xs) for n in range(9))
    ok1 = _report(10, "continuous q-difference residual, n<=8", worst_r, 1e-8)
    ok2 = _report(10, "lattice difference residual, n<=8", worst_d, 1e-8)
    ctrl_r = osc.qdiff_residual_rogers(3, 0.5, thetas, perturb_order=4)
    ctrl_d = osc.qdiff_residual_discrete2(4, 0.5, xs, perturb_lhs_q=0.25)
    ok3 = _report_exceeds(10, "continuous negative control", ctrl_r, 1e-2)
    ok4 = _report_exceeds(10, "lattice negative control", ctrl_d, 1e-2)
    assert ok1 and ok2 and ok3 and ok4


def test_criterion_11_gft():
    q, nmax = 0.5, 12
    fam = qh.rogers(q)
    theta, w = polyfam.rogers_theta_rule(q, 1024)
    ys = np.cos(theta)
    vals = polyfam.eval_orthonormal_sequence(fam, nmax, ys)
    worst = 0.0
    for n in range(nmax + 1):
        out = qh.gft_apply(lambda xv, k=n: polyfam.eval_orthonormal_sequence(fam, k, xv)[-1],
                           ys, q, nmax + 1)
        diff = out - (-1j) ** n * vals[n]
        worst = max(worst, math.sqrt(float(np.sum(w * np.abs(diff) ** 2))))
    ok1 = _report(11, "transform diagonal action F phi_n = (-i)^n phi_n, n<=12", worst, 1e-7)
    f = qh.gft_matrix(nmax, q)
    ham = osc.build_operator(osc.OperatorKind.HAMILTONIAN, osc.rogers_bn(), q, nmax + 1).entries
    ok2 = _report(11, "Hamiltonian invariance |FH-HF|", float(np.max(np.abs(f @ ham - ham @ f))), 1e-7)
    ok3 = _report(11, "fourth power vs identity",
                  float(np.max(np.abs(np.linalg.matrix_power(f, 4) - np.eye(nmax + 1)))), 1e-7)
    assert ok1 and ok2 and ok3


def test_criterion_12_series_recurrence_cross_evaluation():
    rng = np.random.default_rng(2026)
    q = 0.5
    worst = 0.0
    fam_r, fam_d2 = qh.rogers(q), qh.discrete2(q)
    for n in range(13):
        poch_n = float(np.prod([1 - q**k for k in range(1, n + 1)])) if n else 1.0
        poly1 = qh.discrete1_polynomial(n, q)
        for x in rng.uniform(-0.99, 0.99, 50):
            trig = qh.rogers_trig_eval(n, math.acos(x), q)
            rec = qh.eval_orthonormal(fam_r, n, float(x)) * math.sqrt(poch_n)
            worst = max(worst, abs(trig - rec) / max(1.0, abs(trig)))
        for x in rng.uniform(0.4, 2.5, 50) * rng.choice([-1.0, 1.0], 50):
            ser = qh.discrete2_eval_series(n, float(x), q)
            rec = qh.eval_orthonormal(fam_d2, n, float(x)) * math.sqrt(poch_n) * q ** (-n * n / 2.0)
            worst = max(worst, abs(ser - rec) / max(1.0, abs(ser), abs(rec)))
        for x in rng.uniform(0.3, 1.2, 50) * rng.choice([-1.0, 1.0], 50):
            ser1 = qh.discrete1_eval(n, float(x), q)
            worst = max(worst, abs(ser1 - float(poly1(float(x)))) / max(1.0, abs(ser1)))
    assert _report(12, "series vs recurrence/fit, all families, n<=12", worst, 1e-10)
