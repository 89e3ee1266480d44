"""Named verification suites aggregating the library's identity checks.

Each suite runs a battery of numeric checks with pinned tolerances and
returns a VerificationReport; the CLI renders reports as pretty text, CSV,
or JSON.  Randomized checks draw from a seeded generator so runs are
reproducible; the seed is recorded by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import coherent, oscillator, polyfam, transform
from .qcore import (
    DEFAULT_POLICY,
    as_qparam,
    e_q,
    e_q_reciprocal,
    e_q_tilde,
    jackson_integral,
    q_derivative,
    q_factorial,
    q_number,
)


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    bound: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)


def _below(name: str, measured: float, bound: float) -> Check:
    return Check(name, float(measured), float(bound), bool(measured < bound))


def _partial_eq_tilde(x: float, q: float, n_terms: int) -> float:
    total, term = 0.0, 1.0
    for n in range(n_terms):
        total += term
        term *= x / (1.0 - q ** (n + 1))
    return total


def _above(name: str, measured: float, bound: float) -> Check:
    """Negative-control check: the defect must EXCEED the bound."""
    return Check(name + " [control>]", float(measured), float(bound), bool(measured > bound))


def suite_qcore(q: float = 0.5, seed: int = 1234, **_) -> VerificationReport:
    rng = np.random.default_rng(seed)
    checks = []
    worst = 0.0
    for qq in (0.3, 0.5, 0.7, 0.9):
        prod = 1.0
        for n in range(1, 31):
            prod *= q_number(n, qq)
            worst = max(worst, abs(prod - q_factorial(n, qq)) / q_factorial(n, qq))
    checks.append(_below("q-factorial equals running q-number product (n<=30)", worst, 1e-12))

    worst = 0.0
    for _ in range(100):
        x = complex(*rng.uniform(-0.7, 0.7, 2)) / (1.0 - q)
        lhs = e_q(x, q)
        rhs = e_q_tilde((1.0 - q) * x, q)
        worst = max(worst, abs(lhs - rhs) / abs(lhs))
    checks.append(_below("e_q(x) equals e~_q((1-q)x) on 100 random points", worst, DEFAULT_POLICY.rel_tol))

    worst = 0.0
    for _ in range(50):
        cu = rng.uniform(-1, 1, 4)
        cv = rng.uniform(-1, 1, 4)
        x = float(rng.uniform(0.2, 1.5))
        u = lambda t, c=cu: sum(ci * t**i for i, ci in enumerate(c))
        v = lambda t, c=cv: sum(ci * t**i for i, ci in enumerate(c))
        lhs = q_derivative(lambda t: u(t) * v(t), x, q)
        rhs = u(x) * q_derivative(v, x, q) + v(q * x) * q_derivative(u, x, q)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    checks.append(_below("q-Leibnitz rule on random polynomials", worst, 1e-12))

    worst = 0.0
    a = 1.0
    for mdeg in range(7):
        for kdeg in range(7):
            u = lambda t, m=mdeg: t**m
            v = lambda t, k=kdeg: t**k
            lhs = jackson_integral(lambda t: u(t) * q_derivative(v, t, q) if kdeg else 0.0, a, q)
            boundary = u(a) * v(a) - (1.0 if mdeg == 0 and kdeg == 0 else 0.0)
            rhs = boundary - jackson_integral(
                lambda t: v(q * t) * q_derivative(u, t, q) if mdeg else 0.0, a, q
            )
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    checks.append(_below("Jackson integration by parts, monomials deg<=6", worst, 1e-10))

    worst = 0.0
    radius = 1.0 / (1.0 - q)
    for x in np.linspace(0.05, 0.95, 10) * radius:
        lhs = q_derivative(lambda t: e_q_reciprocal(t, q), float(x), q)
        rhs = -e_q_reciprocal(q * float(x), q)
        worst = max(worst, abs(lhs - rhs) / max(1e-3, abs(rhs)))
    checks.append(_below("reciprocal q-exponential derivative identity", worst, 1e-10))
    return VerificationReport("qcore", tuple(checks))


def suite_jackson(q: float | None = None, nmax: int = 15, **_) -> VerificationReport:
    qs = (0.3, 0.5, 0.7, 0.9) if q is None else (q,)
    checks = []
    for qq in qs:
        profile = coherent.resolution_moment_profile(nmax, qq)
        worst = max(abs(c - e) / e for c, e in profile)
        checks.append(_below(f"Jackson moment identity q={qq}, n<={nmax}", worst, 1e-8))
    return VerificationReport("jackson", tuple(checks))


def suite_moments(q: float = 0.5, nmax: int = 10, **_) -> VerificationReport:
    defect = coherent.moment_recurrence_check(nmax, q)
    control = coherent.moment_recurrence_check(nmax, q, perturb_base=q * q)
    return VerificationReport(
        "moments",
        (
            _below(f"moment recursion defect q={q}, n<={nmax}", defect, 1e-9),
            _above("moment recursion with forged q-number", control, 1e-2),
        ),
    )


def suite_gram(q: float = 0.5, nmax: int = 10, lattice_scale: float = 1.0, **_) -> VerificationReport:
    checks = []
    for qq in ((q, 0.9) if q == 0.5 else (q,)):
        report = polyfam.gram_matrix(polyfam.rogers(qq), nmax)
        checks.append(_below(f"continuous Gram off-diagonal q={qq}", report.max_offdiag, 1e-8))
        diag_err = float(np.max(np.abs(np.diag(report.matrix) - 1.0)))
        checks.append(_below(f"continuous Gram diagonal-vs-1 q={qq}", diag_err, 1e-8))
    report = polyfam.gram_matrix(polyfam.discrete2(q, lattice_scale), min(nmax, 8))
    checks.append(_below(f"lattice Gram off-diagonal q={q}", report.max_offdiag, 1e-8))
    checks.append(_below(f"lattice Gram diagonal spread q={q}", report.diag_spread, 1e-7))
    return VerificationReport("gram", tuple(checks))


def suite_crosseval(q: float = 0.5, nmax: int = 12, seed: int = 1234, **_) -> VerificationReport:
    rng = np.random.default_rng(seed)
    fam_r = polyfam.rogers(q)
    fam_d2 = polyfam.discrete2(q)
    worst_r = worst_d2 = worst_d1 = 0.0
    for n in range(nmax + 1):
        poch_n = float(np.prod([1 - q**k for k in range(1, n + 1)])) if n else 1.0
        poly1 = polyfam.discrete1_polynomial(n, q)
        for x in rng.uniform(-0.99, 0.99, 50):
            trig = polyfam.rogers_trig_eval(n, math.acos(x), q)
            rec = polyfam.eval_orthonormal(fam_r, n, float(x)) * math.sqrt(poch_n)
            worst_r = max(worst_r, abs(trig - rec) / max(1.0, abs(trig)))
        for x in rng.uniform(0.4, 2.5, 50) * rng.choice([-1.0, 1.0], 50):
            ser = polyfam.discrete2_eval_series(n, float(x), q)
            rec = polyfam.eval_orthonormal(fam_d2, n, float(x)) * math.sqrt(poch_n) * q ** (-n * n / 2.0)
            worst_d2 = max(worst_d2, abs(ser - rec) / max(1.0, abs(ser), abs(rec)))
        # compare on the fit window (the family's natural domain); the series
        # loses digits to cancellation right at the origin, hence the gap
        for x in rng.uniform(0.3, 1.2, 50) * rng.choice([-1.0, 1.0], 50):
            ser1 = polyfam.discrete1_eval(n, float(x), q)
            worst_d1 = max(worst_d1, abs(ser1 - float(poly1(float(x)))) / max(1.0, abs(ser1)))
    return VerificationReport(
        "crosseval",
        (
            _below(f"continuous family trig-sum vs recurrence, n<={nmax}", worst_r, 1e-10),
            _below(f"type-II series vs recurrence, n<={nmax}", worst_d2, 1e-10),
            _below(f"type-I series vs polynomial fit, n<={nmax}", worst_d1, 1e-10),
        ),
    )


def suite_commutator(family: str = "rogers", q: float = 0.5, dim: int = 20, **_) -> VerificationReport:
    checks = []
    if family in ("rogers", "all"):
        for qq in (q, 0.9) if q == 0.5 else (q,):
            res = oscillator.commutator_residual(
                oscillator.Relation.ARIK_COON, oscillator.rogers_bn(), qq, dim
            )
            checks.append(_below(f"Arik-Coon relation q={qq}, dim={dim}", res, 1e-12))
    if family in ("discrete2", "all"):
        for rel, tag in (
            (oscillator.Relation.Q_INVERSE, "q^-1 relation"),
            (oscillator.Relation.Q_INVERSE_SQUARED, "q^-2 relation"),
        ):
            res = oscillator.commutator_residual(rel, oscillator.discrete2_bn(), q, dim)
            checks.append(_below(f"lattice {tag} q={q}, dim={dim}", res, 1e-10))
    if family == "all":
        mismatch = oscillator.commutator_residual(
            oscillator.Relation.ARIK_COON, oscillator.discrete2_bn(), q, dim
        )
        checks.append(_above("Arik-Coon relation on lattice source", mismatch, 1e-1))
    return VerificationReport("commutator", tuple(checks))


def suite_spectrum(q: float = 0.5, nmax: int = 25, **_) -> VerificationReport:
    checks = []
    for src, tag in ((oscillator.rogers_bn(), "continuous"), (oscillator.discrete2_bn(), "lattice")):
        lam = oscillator.spectrum(src, q, nmax)
        checks.append(_below(f"{tag} lambda_0 = 1", abs(lam[0] - 1.0), 1e-15))
        ham = oscillator.build_operator(oscillator.OperatorKind.HAMILTONIAN, src, q, nmax + 1)
        diag = np.diag(ham.entries).real
        worst = float(np.max(np.abs(diag - np.array(lam)) / np.abs(np.array(lam))))
        checks.append(_below(f"{tag} Hamiltonian diagonal vs closed form, n<={nmax}", worst, 1e-12))
        increasing = all(lam[i + 1] > lam[i] for i in range(len(lam) - 1))
        checks.append(Check(f"{tag} spectrum strictly increasing", 0.0 if increasing else 1.0, 0.5, increasing))
        want = (1.0 - q) / 2.0 if src.provenance is oscillator.Provenance.ROGERS else 2.0 * (1.0 - q) / q
        ratio, spread = oscillator.hamiltonian_form_ratio(src, q, 12)
        checks.append(_below(f"{tag} X^2+P^2 vs ladder-form constant {want:g}", abs(ratio - want) + spread, 1e-10))
    return VerificationReport("spectrum", tuple(checks))


def suite_qdiff(q: float = 0.5, nmax: int = 8, **_) -> VerificationReport:
    thetas = np.linspace(0.1, math.pi - 0.1, 20)
    xs = (-2.0, -1.0, 0.5, 1.0, 3.0)
    worst_r = max(oscillator.qdiff_residual_rogers(n, q, thetas) for n in range(nmax + 1))
    worst_d = max(oscillator.qdiff_residual_discrete2(n, q, xs) for n in range(nmax + 1))
    ctrl_r = oscillator.qdiff_residual_rogers(3, q, thetas, perturb_order=4)
    ctrl_d = oscillator.qdiff_residual_discrete2(4, q, xs, perturb_lhs_q=q * q)
    return VerificationReport(
        "qdiff",
        (
            _below(f"continuous q-difference residual, n<={nmax}", worst_r, 1e-8),
            _below(f"lattice difference residual, n<={nmax}", worst_d, 1e-8),
            _above("continuous residual with forged eigenvalue", ctrl_r, 1e-2),
            _above("lattice residual with forged factor", ctrl_d, 1e-2),
        ),
    )


def suite_coherent(q: float = 0.5, seed: int = 1234, **_) -> VerificationReport:
    rng = np.random.default_rng(seed)
    checks = []
    worst = 0.0
    radius = coherent.rogers_radius(q)
    for _ in range(20):
        z = rng.uniform(0.05, 0.85) * radius * np.exp(2j * math.pi * rng.uniform())
        state = coherent.bg_expansion(polyfam.rogers(q), complex(z))
        worst = max(worst, coherent.eigen_residual(state))
    checks.append(_below("continuous eigen-residual, 20 random z", worst, 1e-9))
    worst = 0.0
    for _ in range(20):
        z = rng.uniform(0.05, 3.0) * np.exp(2j * math.pi * rng.uniform())
        state = coherent.bg_expansion(polyfam.discrete2(q), complex(z))
        worst = max(worst, coherent.eigen_residual(state))
    checks.append(_below("lattice eigen-residual, 20 random z", worst, 1e-9))

    state = coherent.bg_expansion(polyfam.rogers(q), 1.0, dim=30)
    partial_exp = _partial_eq_tilde((1.0 - q) * 1.0, q, 30)
    err = abs(state.norm_sq_partial - partial_exp) / partial_exp
    checks.append(_below("continuous norm matches q-exponential terms (z=1, dim=30)", err, 1e-10))
    state = coherent.bg_expansion(polyfam.discrete2(q), 2.0, dim=40)
    tail = abs(state.norm_sq_partial - state.norm_sq_closed) / state.norm_sq_closed
    checks.append(_below("lattice norm: partial sum vs closed form (z=2)", tail, 1e-10))
    state = coherent.bg_expansion(polyfam.rogers(q), 1.0)  # auto dim: tail below 1e-26
    tail = abs(state.norm_sq_partial - state.norm_sq_closed) / state.norm_sq_closed
    checks.append(_below("continuous norm: auto-dim partial vs closed form", tail, 1e-12))

    worst = 0.0
    for z in (0.4, 0.9 + 0.2j):
        state = coherent.bg_expansion(polyfam.rogers(q), z)
        for theta in (0.7, 1.9):
            series = sum(
                c * polyfam.eval_orthonormal(polyfam.rogers(q), n, math.cos(theta))
                for n, c in enumerate(state.coefficients)
            )
            closed = coherent.closed_form_rogers_cs(z, theta, q)
            worst = max(worst, abs(series - closed) / abs(closed))
    checks.append(_below("continuous closed form vs coefficient series", worst, 1e-9))

    worst = 0.0
    for z in (0.5, 1.0):
        ratios = []
        for x in np.linspace(-2.0, 2.0, 10):
            state = coherent.bg_expansion(polyfam.discrete2(q), z)
            series = sum(
                c * polyfam.eval_orthonormal(polyfam.discrete2(q), n, float(x))
                for n, c in enumerate(state.coefficients)
            )
            ratios.append(coherent.closed_form_discrete2_cs(z, float(x), q) / series)
        spread = max(abs(r / ratios[0] - 1.0) for r in ratios)
        worst = max(worst, spread)
    checks.append(_below("lattice closed form x-independence of ratio", worst, 1e-8))
    return VerificationReport("coherent", tuple(checks))


def suite_overlap(q: float = 0.5, seed: int = 1234, **_) -> VerificationReport:
    rng = np.random.default_rng(seed)
    radius = coherent.rogers_radius(q)
    fam = polyfam.rogers(q)
    worst = 0.0
    for _ in range(50):
        z1, z2 = (
            complex(rng.uniform(0.05, 0.9) * radius * np.exp(2j * math.pi * rng.uniform()))
            for _ in range(2)
        )
        s1 = coherent.bg_expansion(fam, z1)
        s2 = coherent.bg_expansion(fam, z2)
        n = min(s1.dim, s2.dim)
        coeff_sum = complex(np.sum(np.conj(s1.coefficients[:n]) * s2.coefficients[:n]))
        coeff_sum *= math.sqrt(s1.norm_sq_closed * s2.norm_sq_closed)
        closed = coherent.overlap(fam, z1, z2)
        worst = max(worst, abs(coeff_sum - closed) / abs(closed))
    return VerificationReport(
        "overlap", (_below("closed-form overlap vs coefficient sum, 50 pairs", worst, 1e-10),)
    )


def suite_radius(q: float = 0.5, **_) -> VerificationReport:
    u_cont = [1.0 / q_factorial(n, q) for n in range(30)]
    rep = coherent.radius_estimate(u_cont)
    err = abs(rep.estimate - coherent.rogers_radius(q))
    poch = 1.0
    u_latt = []
    for n in range(30):
        u_latt.append(((1 - q) / q) ** n * q ** (n * n) / poch)
        poch *= 1 - q ** (n + 1)
    rep_latt = coherent.radius_estimate(u_latt)
    u_zero = [q ** (-n * n) for n in range(30)]
    rep_zero = coherent.radius_estimate(u_zero)
    return VerificationReport(
        "radius",
        (
            _below(f"continuous radius estimate vs 1/sqrt(1-q), q={q}", err, 1e-6),
            Check("lattice family classified entire", rep_latt.estimate, math.inf, math.isinf(rep_latt.estimate)),
            Check("q^(-n^2) growth classified radius-zero", rep_zero.estimate, 0.0, rep_zero.estimate == 0.0),
        ),
    )


def suite_gft(q: float = 0.5, nmax: int = 12, **_) -> VerificationReport:
    checks = []
    for qq in ((q, 0.9) if q == 0.5 else (q,)):
        fam = polyfam.rogers(qq)
        theta, w = polyfam.rogers_theta_rule(qq, 2048)
        ys = np.cos(theta)
        vals = polyfam.eval_orthonormal_sequence(fam, nmax, ys)
        worst = 0.0
        for n in range(nmax + 1):
            out = transform.gft_apply(lambda xs, k=n: polyfam.eval_orthonormal_sequence(fam, k, xs)[-1],
                                      ys, qq, nmax + 1)
            diff = out - (-1j) ** n * vals[n]
            worst = max(worst, math.sqrt(float(np.sum(w * np.abs(diff) ** 2))))
        checks.append(_below(f"transform diagonal action on basis, q={qq}", worst, 1e-7))
    f_mat = transform.gft_matrix(nmax, q)
    ham = oscillator.build_operator(
        oscillator.OperatorKind.HAMILTONIAN, oscillator.rogers_bn(), q, nmax + 1
    ).entries
    comm = float(np.max(np.abs(f_mat @ ham - ham @ f_mat)))
    checks.append(_below("transform commutes with Hamiltonian", comm, 1e-7))
    fourth = np.linalg.matrix_power(f_mat, 4)
    checks.append(_below("fourth power is the identity", float(np.max(np.abs(fourth - np.eye(nmax + 1)))), 1e-7))
    unit = float(np.max(np.abs(f_mat.conj().T @ f_mat - np.eye(nmax + 1))))
    checks.append(_below("unitarity on the truncated span", unit, 1e-7))
    return VerificationReport("gft", tuple(checks))


SUITES = {
    "qcore": suite_qcore,
    "jackson": suite_jackson,
    "moments": suite_moments,
    "gram": suite_gram,
    "crosseval": suite_crosseval,
    "commutator": suite_commutator,
    "spectrum": suite_spectrum,
    "qdiff": suite_qdiff,
    "coherent": suite_coherent,
    "overlap": suite_overlap,
    "radius": suite_radius,
    "gft": suite_gft,
}


def run_suites(name: str, **params) -> list[VerificationReport]:
    """Run one named suite, or every suite for name='all'."""
    if params.get("q") is not None:
        as_qparam(params["q"])  # early validation of the q flag
    if name == "all":
        out = []
        for suite_name, fn in SUITES.items():
            kwargs = dict(params)
            if suite_name == "commutator":
                kwargs.setdefault("family", "all")
            out.append(fn(**{k: v for k, v in kwargs.items() if v is not None}))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return [SUITES[name](**{k: v for k, v in params.items() if v is not None})]
