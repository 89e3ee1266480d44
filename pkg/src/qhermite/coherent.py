"""Lowering-operator eigenstates (Barut-Girardello coherent states).

For each supported family the expansion coefficients in the orthonormal
basis, the closed-form normalization, overlaps, closed-form state values,
radius-of-convergence diagnostics, and the Jackson-measure moment content
of the resolution of unity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import oscillator, polyfam
from .errors import (
    ConvergenceError,
    DimensionError,
    DomainError,
    InsufficientData,
    UnsupportedFamily,
)
from .polyfam import Family, FamilyDescriptor
from .qcore import (
    DEFAULT_POLICY,
    QParam,
    TruncationPolicy,
    as_qparam,
    e_q_gaussian,
    e_q_reciprocal,
    e_q_tilde,
    jackson_integral,
    q_factorial,
    q_number,
    q_pochhammer,
)

#: expansions grow until the next normalized coefficient would satisfy
#: |c_dim|^2 < 1e-26 (tail below 1e-13 in amplitude)
_TAIL_SQ = 1e-26


@dataclass(frozen=True)
class CoherentStateExpansion:
    """Coefficient vector of a coherent state in the orthonormal basis.

    Coefficients are normalized by the closed-form norm, so sum |c_n|^2
    equals 1 minus the truncation tail; both norm routes are retained.
    """

    family: FamilyDescriptor
    z: complex
    dim: int
    coefficients: np.ndarray
    norm_sq_closed: float
    norm_sq_partial: float

    def __post_init__(self) -> None:
        self.coefficients.setflags(write=False)


@dataclass(frozen=True)
class RadiusReport:
    estimate: float  # math.inf and 0.0 are the divergent/entire sentinels
    samples_used: int
    method: str


def rogers_radius(q: QParam | float) -> float:
    """Domain radius of the continuous-family states, 1/sqrt(1-q)."""
    return 1.0 / math.sqrt(1.0 - as_qparam(q).q)


def _unnormalized_coeffs(family: FamilyDescriptor, z: complex, dim: int | None,
                         pol: TruncationPolicy) -> np.ndarray:
    q = family.q.q
    coeffs = [1.0 + 0.0j]
    total = 1.0

    def next_coeff(n: int, prev: complex) -> complex:
        # ratio c_{n+1}/c_n for each family
        if family.kind is Family.ROGERS:
            return prev * z / math.sqrt(q_number(n + 1, family.q))
        return prev * z * q**n * math.sqrt((1.0 - q) / (1.0 - q ** (n + 1)))

    if dim is not None:
        for n in range(dim - 1):
            coeffs.append(next_coeff(n, coeffs[-1]))
        return np.array(coeffs)
    n = 0
    while True:
        nxt = next_coeff(n, coeffs[-1])
        if n >= 3 and abs(nxt) ** 2 < _TAIL_SQ * total:
            break
        coeffs.append(nxt)
        total += abs(nxt) ** 2
        n += 1
        if n >= pol.max_terms:
            raise ConvergenceError("coherent expansion did not reach its tail bound within max_terms")
    return np.array(coeffs)


def bg_expansion(
    family: FamilyDescriptor,
    z: complex,
    dim: int | None = None,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> CoherentStateExpansion:
    """Expansion of the lowering-operator eigenstate |z>.

    Continuous family: c_n proportional to z^n / sqrt([n]_q!), defined for
    |z| < 1/sqrt(1-q).  Lattice family: c_n proportional to
    z^n q^{n(n-1)/2} (1-q)^{n/2} / sqrt((q;q)_n), defined for every z.
    With dim=None the truncation grows until |c_dim|^2 < 1e-26.
    """
    z = complex(z)
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily(
            "no coherent states for the type-I family: the normalization series has radius zero"
        )
    q = family.q.q
    if family.kind is Family.ROGERS and abs(z) >= rogers_radius(q):
        raise DomainError(f"continuous-family states need |z| < {rogers_radius(q)}")
    raw = _unnormalized_coeffs(family, z, dim, pol)
    if family.kind is Family.ROGERS:
        norm_sq = float(e_q_tilde((1.0 - q) * abs(z) ** 2, family.q, pol).real)
    else:
        norm_sq = float(e_q_gaussian(abs(z) ** 2, family.q, pol).real)
    partial = float(np.sum(np.abs(raw) ** 2))
    return CoherentStateExpansion(
        family=family,
        z=z,
        dim=len(raw),
        coefficients=raw / math.sqrt(norm_sq),
        norm_sq_closed=norm_sq,
        norm_sq_partial=partial,
    )


def eigen_residual(state: CoherentStateExpansion) -> float:
    """Relative defect of the defining eigen-equation a-|z> = z|z>.

    Computed from the family's lowering matrix on the first dim-1 slots;
    the last slot is excluded because the truncation cuts its source term.
    """
    if state.dim < 3:
        raise DimensionError("eigen residual needs dim >= 3")
    source = oscillator.source_for_family(state.family)
    q = state.family.q
    gamma = oscillator.ladder_prefactor(source, q)
    c = state.coefficients
    m = np.arange(state.dim - 1)
    lowered = gamma * np.array([source.coeff(int(k), q) for k in m]) * c[1:]
    target = state.z * c[:-1]
    denom = float(np.linalg.norm(target))
    defect = float(np.linalg.norm(lowered - target))
    return defect if denom == 0.0 else defect / denom


def overlap(
    family: FamilyDescriptor,
    z1: complex,
    z2: complex,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Un-normalized overlap <z1|z2> of two continuous-family states.

    Closed form e~_q((1-q) conj(z1) z2); the lattice family has no closed
    overlap here (sum its coefficients directly instead).
    """
    if family.kind is not Family.ROGERS:
        raise UnsupportedFamily("closed-form overlap is available for the continuous family only")
    q = family.q.q
    r = rogers_radius(q)
    if abs(z1) >= r or abs(z2) >= r:
        raise DomainError(f"overlap needs |z1|, |z2| < {r}")
    return complex(e_q_tilde((1.0 - q) * complex(z1).conjugate() * complex(z2), family.q, pol))


def closed_form_rogers_cs(
    z: complex,
    theta: float,
    q: QParam | float,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Normalized continuous-family state at x = cos(theta), via the
    generating-function product of two q-exponentials."""
    qp = as_qparam(q)
    q_ = qp.q
    w = math.sqrt(1.0 - q_) * complex(z)
    if abs(w) >= 1.0:
        raise DomainError("closed form needs sqrt(1-q)|z| < 1")
    u = complex(math.cos(theta), math.sin(theta))
    num = e_q_tilde(u * w, qp, pol) * e_q_tilde(w / u, qp, pol)
    norm = math.sqrt(float(e_q_tilde((1.0 - q_) * abs(z) ** 2, qp, pol).real))
    return num / norm


def closed_form_discrete2_cs(
    z: complex,
    x: float,
    q: QParam | float,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Lattice-family state value from its product-times-series closed form.

    The series factor must carry the standard 1-phi-1 normalization (the
    extra (-1)^k q^binom(k,2)); the plain Pochhammer-ratio reading does not
    reproduce the state.  The overall scale divides by the entire
    q-exponential of z^2 and is NOT the unit-norm convention, so compare
    against expansions only up to an x-independent factor.
    """
    qp = as_qparam(q)
    q_ = qp.q
    w = math.sqrt(q_ * (1.0 - q_)) * complex(z)
    pref = q_pochhammer(1j * w, qp, math.inf)
    series = polyfam.phi_1_1(1j * x, 1j * w, qp, -1j * w, pol)
    return pref * series / e_q_gaussian(complex(z) ** 2, qp, pol)


def radius_estimate(coeff_norms: Sequence[float]) -> RadiusReport:
    """Radius of convergence of sum u_n r^{2n} from the u_n alone.

    Consecutive-ratio test with Aitken acceleration; ratios that trend to
    zero classify as entire (inf), ratios that blow up classify as radius
    zero.  Scale-free: multiplying every u_n by a constant changes nothing.
    """
    u = [float(v) for v in coeff_norms]
    if len(u) < 10:
        raise InsufficientData("need at least 10 coefficient magnitudes")
    if any(not (v > 0.0 and math.isfinite(v)) for v in u):
        raise InsufficientData("coefficient magnitudes must be positive and finite")
    ratios = [u[i + 1] / u[i] for i in range(len(u) - 1)]
    tail = ratios[-6:]
    growth = [tail[i + 1] / tail[i] for i in range(len(tail) - 1)]
    geo = math.exp(sum(math.log(g) for g in growth) / len(growth))
    if geo < 0.95 and ratios[-1] < 1e-3 * max(ratios):
        return RadiusReport(math.inf, len(u), "ratio-vanishing")
    if geo > 1.05 and ratios[-1] > 1e3 * min(ratios):
        return RadiusReport(0.0, len(u), "ratio-divergent")
    estimates = [1.0 / math.sqrt(r) for r in ratios[-10:]]
    for _ in range(2):  # two Aitken delta-squared sweeps
        if len(estimates) < 3:
            break
        accel = []
        for i in range(len(estimates) - 2):
            d2 = estimates[i + 2] - 2.0 * estimates[i + 1] + estimates[i]
            if abs(d2) < 1e-300:
                accel.append(estimates[i + 2])
            else:
                accel.append(estimates[i + 2] - (estimates[i + 2] - estimates[i + 1]) ** 2 / d2)
        estimates = accel
    return RadiusReport(float(estimates[-1]), len(u), "ratio-aitken")


def resolution_moment_check(
    n: int, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY
) -> tuple[float, float]:
    """n-th moment of the resolution-of-unity measure vs its target [n]_q!.

    The measure is a delta comb on the Jackson lattice, so the moment is the
    Jackson integral of x^n / e_q(qx) over [0, 1/(1-q)]; moment equality for
    all n is the full content of the completeness identity on polynomials.
    """
    qp = as_qparam(q)
    if n < 0:
        raise DomainError("moment order must be non-negative")
    a = 1.0 / (1.0 - qp.q)
    computed = jackson_integral(lambda x: e_q_reciprocal(qp.q * x, qp, pol) * x**n, a, qp, pol)
    return computed, q_factorial(n, qp)


def resolution_moment_profile(
    nmax: int, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY
) -> list[tuple[float, float]]:
    """Moments 0..nmax sharing one evaluation of the lattice weights."""
    qp = as_qparam(q)
    q_ = qp.q
    a = 1.0 / (1.0 - q_)
    k_max = int(math.log(pol.term_tol * 1e-2) / math.log(q_)) + 5
    weights = [q_**k * e_q_reciprocal(q_ ** (k + 1) * a, qp, pol) for k in range(k_max)]
    out = []
    for n in range(nmax + 1):
        total = sum(wk * (q_**k * a) ** n for k, wk in enumerate(weights))
        out.append((a * (1.0 - q_) * total, q_factorial(n, qp)))
    return out


def moment_recurrence_check(
    nmax: int,
    q: QParam | float,
    pol: TruncationPolicy = DEFAULT_POLICY,
    perturb_base: float | None = None,
) -> float:
    """Max relative defect of the moment recursion I_n = [n]_q I_{n-1}.

    Each I_n comes from its own Jackson integral, so this check is
    independent of the closed form [n]_q!.  perturb_base swaps the factor
    [n]_q for [n]_{q'} as a negative control.
    """
    qp = as_qparam(q)
    if nmax < 1:
        raise DomainError("recurrence check needs nmax >= 1")
    a = 1.0 / (1.0 - qp.q)
    factor_base = qp if perturb_base is None else as_qparam(perturb_base)
    moments = [
        jackson_integral(lambda x, k=n: e_q_reciprocal(qp.q * x, qp, pol) * x**k, a, qp, pol)
        for n in range(nmax + 1)
    ]
    worst = 0.0
    for n in range(1, nmax + 1):
        defect = abs(moments[n] - q_number(n, factor_base) * moments[n - 1]) / abs(moments[n])
        worst = max(worst, defect)
    return worst
