"""q-Hermite polynomial families.

Three families are covered: the continuous (Rogers) family, orthogonal on
[-1, 1] against the weight |(e^{2i theta};q)_inf|^2 / sqrt(1-x^2), and the
two discrete families living on geometric lattices.  The continuous family
and the type-II lattice family support three-term recurrence evaluation and
Gram-matrix orthonormality checks; the type-I family supports evaluation
only (no recurrence coefficients are available for it here).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    PoleError,
    QuadratureError,
    UnsupportedFamily,
)
from .qcore import DEFAULT_POLICY, QParam, Scalar, TruncationPolicy, as_qparam, q_pochhammer


class Family(enum.Enum):
    ROGERS = "rogers"
    DISCRETE_I = "discrete1"
    DISCRETE_II = "discrete2"


@dataclass(frozen=True)
class FamilyDescriptor:
    """A polynomial family together with its deformation and lattice scale.

    lattice_scale is the c > 0 of the type-II lattice {+-c q^k}; it is
    ignored by the other families.
    """

    kind: Family
    q: QParam
    lattice_scale: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_qparam(self.q))
        object.__setattr__(self, "lattice_scale", float(self.lattice_scale))
        if not self.lattice_scale > 0:
            raise DomainError("lattice_scale must be positive")


def rogers(q: QParam | float) -> FamilyDescriptor:
    return FamilyDescriptor(Family.ROGERS, as_qparam(q))


def discrete1(q: QParam | float) -> FamilyDescriptor:
    return FamilyDescriptor(Family.DISCRETE_I, as_qparam(q))


def discrete2(q: QParam | float, lattice_scale: float = 1.0) -> FamilyDescriptor:
    return FamilyDescriptor(Family.DISCRETE_II, as_qparam(q), lattice_scale)


@dataclass(frozen=True)
class GramReport:
    """Orthonormality check result: the Gram matrix and its defect sizes."""

    dimension: int
    matrix: np.ndarray
    max_offdiag: float
    diag_spread: float

    def __post_init__(self) -> None:
        self.matrix.setflags(write=False)


# factors this close to zero terminate (numerator) or pole (denominator)
# a Pochhammer-ratio series
_ZERO_FACTOR_TOL = 1e-12


def recurrence_coeff(family: FamilyDescriptor, n: int) -> float:
    """Off-diagonal recurrence coefficient b_n; b_{-1} = 0 for both families."""
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily("no recurrence coefficients for the type-I family")
    if n < 0:
        return 0.0
    q = family.q.q
    if family.kind is Family.ROGERS:
        return 0.5 * math.sqrt(1.0 - q ** (n + 1))
    return q ** (-n - 0.5) * math.sqrt(1.0 - q ** (n + 1))


def eval_orthonormal(family: FamilyDescriptor, n: int, x: Scalar) -> Scalar:
    """Orthonormal polynomial of degree n by the three-term recurrence.

    Real Rogers arguments must lie in [-1, 1]; complex arguments are
    accepted for either family as the entire analytic continuation.
    """
    if n < 0:
        raise DomainError("degree must be non-negative")
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily("type-I family has no orthonormal recurrence here")
    if family.kind is Family.ROGERS and not isinstance(x, complex) and abs(x) > 1.0:
        raise DomainError("Rogers polynomials are defined on [-1, 1]")
    p_prev: Scalar = 0.0
    p: Scalar = 1.0
    for m in range(n):
        p_next = (x * p - recurrence_coeff(family, m - 1) * p_prev) / recurrence_coeff(family, m)
        p_prev, p = p, p_next
    return p


def eval_orthonormal_sequence(family: FamilyDescriptor, nmax: int, x) -> np.ndarray:
    """All orthonormal polynomials of degree 0..nmax at x (scalar or array).

    Returns an array of shape (nmax+1,) + shape(x).
    """
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily("type-I family has no orthonormal recurrence here")
    xs = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + xs.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = xs / recurrence_coeff(family, 0)
    for m in range(1, nmax):
        out[m + 1] = (xs * out[m] - recurrence_coeff(family, m - 1) * out[m - 1]) / recurrence_coeff(family, m)
    return out


def rogers_trig_eval(n: int, theta: float, q: QParam | float) -> float:
    """Continuous q-Hermite value at cos(theta) from its trigonometric sum.

    H_n(cos theta) = sum_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) e^{i(n-2k)theta};
    the imaginary part cancels pairwise and is checked to vanish.
    """
    qq = as_qparam(q).q
    poch = np.ones(n + 1)
    for k in range(1, n + 1):
        poch[k] = poch[k - 1] * (1.0 - qq**k)
    total = 0.0 + 0.0j
    for k in range(n + 1):
        total += poch[n] / (poch[k] * poch[n - k]) * np.exp(1j * (n - 2 * k) * theta)
    scale = max(1.0, abs(total.real))
    if abs(total.imag) > 1e-12 * scale:
        raise ConvergenceError("trigonometric sum produced a non-vanishing imaginary part")
    return float(total.real)


def _pochhammer_ratio_series(
    numerators: tuple[Scalar, ...],
    denominators: tuple[Scalar, ...],
    q: QParam,
    z: Scalar,
    pol: TruncationPolicy,
    extra_sign_gauss: bool = False,
) -> Scalar:
    """sum_k prod(a;q)_k / prod(b;q)_k * z^k / (q;q)_k, with optional
    (-1)^k q^binom(k,2) factor (the standard 1-phi-1 normalization).

    Terminates exactly when a numerator factor vanishes; raises PoleError
    if a denominator factor vanishes first.
    """
    qq = q.q
    term: Scalar = 1.0
    total: Scalar = 0.0
    small_run = 0
    for k in range(pol.max_terms):
        total = total + term
        if abs(term) < pol.term_tol:
            small_run += 1
            if small_run >= 3:
                return total
        else:
            small_run = 0
        ratio: Scalar = z / (1.0 - qq ** (k + 1))
        if extra_sign_gauss:
            ratio = ratio * (-(qq**k))
        terminated = False
        for a in numerators:
            fa = 1.0 - a * qq**k
            if abs(fa) < _ZERO_FACTOR_TOL:
                terminated = True
                break
            ratio = ratio * fa
        if terminated:
            return total
        for b in denominators:
            fb = 1.0 - b * qq**k
            if abs(fb) < _ZERO_FACTOR_TOL:
                raise PoleError(f"denominator Pochhammer factor vanished at k = {k + 1}")
            ratio = ratio / fb
        term = term * ratio
    raise ConvergenceError(f"Pochhammer-ratio series: no convergence within {pol.max_terms} terms")


def phi_2_1(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    q: QParam | float,
    z: Scalar,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> Scalar:
    """sum_k (a;q)_k (b;q)_k / (c;q)_k * z^k / (q;q)_k.

    With a = q^{-m} the sum terminates after exactly m+1 terms.
    """
    return _pochhammer_ratio_series((a, b), (c,), as_qparam(q), z, pol)


def phi_ratio_series(
    a: Scalar,
    b: Scalar,
    q: QParam | float,
    z: Scalar,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> Scalar:
    """sum_k (a;q)_k / (b;q)_k * z^k / (q;q)_k (no extra sign/Gauss factor)."""
    return _pochhammer_ratio_series((a,), (b,), as_qparam(q), z, pol)


def phi_1_1(
    a: Scalar,
    b: Scalar,
    q: QParam | float,
    z: Scalar,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> Scalar:
    """Standard basic hypergeometric 1-phi-1: the Pochhammer-ratio series
    carrying the (-1)^k q^binom(k,2) normalization factor."""
    return _pochhammer_ratio_series((a,), (b,), as_qparam(q), z, pol, extra_sign_gauss=True)


def discrete1_eval(n: int, x: float, q: QParam | float) -> float:
    """Type-I discrete q-Hermite polynomial of degree n.

    Evaluated as q^binom(n,2) * phi(q^{-n}, 1/x; 0 | q; -q x); the series
    carries 1/x yet sums to a degree-n polynomial, so the x = 0 value is
    taken from the fitted polynomial instead.
    """
    qp = as_qparam(q)
    if n < 0:
        raise DomainError("degree must be non-negative")
    if x == 0.0:
        return float(discrete1_polynomial(n, qp)(0.0))
    qq = qp.q
    pref = qq ** (n * (n - 1) // 2)
    val = phi_2_1(qq ** (-n), 1.0 / x, 0.0, qp, -qq * x)
    return pref * float(val)


def discrete1_polynomial(n: int, q: QParam | float) -> np.polynomial.Polynomial:
    """Degree-n polynomial fitted through n+3 off-origin samples of the
    type-I series; the overdetermined fit doubles as a polynomiality check."""
    qp = as_qparam(q)
    m = max(n + 3, 2 * n + 2)
    m += m % 2  # even count keeps every Chebyshev node away from 0
    # window slightly beyond the orthogonality lattice (-1, 1); values stay
    # O(1) there, which keeps the sampled continuation well conditioned
    xs = 1.2 * np.cos(np.pi * (2 * np.arange(m) + 1) / (2 * m))
    ys = np.array([discrete1_eval(n, float(xv), qp) for xv in xs])
    poly = np.polynomial.Polynomial.fit(xs, ys, deg=n)
    resid = np.max(np.abs(poly(xs) - ys))
    if resid > 1e-9 * max(1.0, float(np.max(np.abs(ys)))):
        raise ConvergenceError("type-I series did not fit a degree-n polynomial")
    return poly


def discrete2_eval_series(n: int, x: float, q: QParam | float) -> float:
    """Type-II discrete q-Hermite polynomial of degree n from its
    terminating series x^n * phi(q^{-n}, q^{-n+1}; 0 | q^2; -q^2/x^2).

    Singular presentation only: the result is the same degree-n polynomial
    the recurrence produces.  x = 0 is rejected; use the recurrence there.
    """
    qp = as_qparam(q)
    if n < 0:
        raise DomainError("degree must be non-negative")
    if x == 0.0:
        raise DomainError("series form of the type-II polynomial is singular at x = 0")
    qq = qp.q
    base = QParam(qq * qq)
    val = phi_2_1(qq ** (-n), qq ** (-n + 1), 0.0, base, -(qq * qq) / (x * x))
    return x**n * float(val)


def discrete2_eval_monic(n: int, x: Scalar, q: QParam | float) -> Scalar:
    """Monic type-II polynomial via x h_m = h_{m+1} + q^{1-2m}(1-q^m) h_{m-1};
    accepts complex arguments (the recurrence is entire in x)."""
    qq = as_qparam(q).q
    h_prev: Scalar = 0.0
    h: Scalar = 1.0
    for m in range(n):
        h_next = x * h - qq ** (1 - 2 * m) * (1.0 - qq**m) * h_prev
        h_prev, h = h, h_next
    return h


def _qpoch_inf_array(z: np.ndarray, q: float) -> np.ndarray:
    """(z; q)_inf for an array of complex arguments."""
    out = np.ones_like(z)
    zmax = float(np.max(np.abs(z))) if z.size else 0.0
    s = 0
    while zmax * q**s >= 1e-18:
        out = out * (1.0 - z * q**s)
        s += 1
    return out


def weight_density(family: FamilyDescriptor, point: float) -> float:
    """Orthogonality weight density at a point.

    Rogers: (q;q)_inf/(2 pi) |(e^{2i theta};q)_inf|^2 / sqrt(1-x^2) on (-1,1).
    Type II: 1 / ((ix;q)_inf (-ix;q)_inf); the conjugate factors multiply to
    a real positive value, which is checked.
    """
    q = family.q.q
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily("no orthogonality weight for the type-I family here")
    if family.kind is Family.ROGERS:
        if abs(point) >= 1.0:
            raise DomainError("Rogers weight is supported on (-1, 1)")
        theta = math.acos(point)
        u2 = complex(math.cos(2 * theta), math.sin(2 * theta))
        prod = q_pochhammer(u2, q, math.inf) * q_pochhammer(u2.conjugate(), q, math.inf)
        if abs(prod.imag) > 1e-12 * max(1.0, abs(prod.real)):
            raise ConvergenceError("Rogers weight product has a non-vanishing imaginary part")
        mass = q_pochhammer(q, q, math.inf)
        return float(mass) / (2.0 * math.pi) * prod.real / math.sqrt(1.0 - point * point)
    prod = q_pochhammer(1j * point, q, math.inf) * q_pochhammer(-1j * point, q, math.inf)
    if abs(prod.imag) > 1e-12 * max(1.0, abs(prod.real)):
        raise ConvergenceError("type-II weight product has a non-vanishing imaginary part")
    return 1.0 / prod.real


def rogers_theta_rule(q: QParam | float, n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Trapezoid rule for integrals against the Rogers measure.

    Substituting x = cos(theta) cancels the 1/sqrt(1-x^2) singularity and
    leaves a smooth integrand on [0, pi]; returns (theta nodes, weights)
    where the weights already include the measure density in theta.
    """
    qq = as_qparam(q).q
    theta = np.linspace(0.0, math.pi, n_nodes + 1)
    step = math.pi / n_nodes
    w = np.full(n_nodes + 1, step)
    w[0] = w[-1] = 0.5 * step
    u2 = np.exp(2j * theta)
    dens = _qpoch_inf_array(u2, qq) * _qpoch_inf_array(np.conj(u2), qq)
    mass = float(q_pochhammer(qq, qq, math.inf))
    return theta, w * mass / (2.0 * math.pi) * dens.real


def _rogers_gram(family: FamilyDescriptor, nmax: int, pol: TruncationPolicy) -> np.ndarray:
    n_nodes = 128
    prev = None
    while n_nodes <= 1 << 15:
        theta, w = rogers_theta_rule(family.q, n_nodes)
        vals = eval_orthonormal_sequence(family, nmax, np.cos(theta))
        gram = (vals * w) @ vals.T
        if prev is not None and float(np.max(np.abs(gram - prev))) < 1e-10 * (1.0 + float(np.max(np.abs(gram)))):
            return gram
        prev = gram
        n_nodes *= 2
    raise QuadratureError("Rogers Gram quadrature did not stabilize under refinement")


def _psi_sequence_scaled(family: FamilyDescriptor, nmax: int, x: float) -> tuple[np.ndarray, float]:
    """Type-II orthonormal values at x with a shared log-scale factored out,
    so that huge lattice points stay inside double range."""
    vec = np.empty(nmax + 1)
    log_scale = 0.0
    p_prev, p = 0.0, 1.0
    vec[0] = p
    for m in range(nmax):
        p_next = (x * p - recurrence_coeff(family, m - 1) * p_prev) / recurrence_coeff(family, m)
        p_prev, p = p, p_next
        big = max(abs(p), abs(p_prev))
        if big > 1e120:
            p /= big
            p_prev /= big
            vec[: m + 1] /= big
            log_scale += math.log(big)
        vec[m + 1] = p
    return vec, log_scale


def _discrete2_gram(family: FamilyDescriptor, nmax: int, pol: TruncationPolicy) -> np.ndarray:
    q = family.q.q
    c = family.lattice_scale
    gram = np.zeros((nmax + 1, nmax + 1))

    def lattice_term(k: int) -> tuple[np.ndarray, float]:
        xk = c * q**k
        # log of w(x) = 1 / prod_s (1 + x^2 q^{2s}) to avoid overflow
        log_w = 0.0
        s = 0
        while xk * xk * q ** (2 * s) >= 1e-18:
            log_w -= math.log1p(xk * xk * q ** (2 * s))
            s += 1
        contrib = np.zeros((nmax + 1, nmax + 1))
        mag = 0.0
        for x in (xk, -xk):
            vec, log_scale = _psi_sequence_scaled(family, nmax, x)
            expo = log_w + 2.0 * log_scale + k * math.log(q)
            if expo > 700.0:  # true lattice terms are bounded; never reached
                raise ConvergenceError("type-II lattice term overflow")
            factor = math.exp(expo)  # underflows cleanly to 0 far out
            contrib += factor * np.outer(vec, vec)
            mag = max(mag, factor * float(np.max(np.abs(vec))) ** 2)
        return contrib, mag

    for direction in (1, -1):
        k = 0 if direction == 1 else -1
        small_run = 0
        steps = 0
        while small_run < 3:
            contrib, mag = lattice_term(k)
            gram += contrib
            small_run = small_run + 1 if mag < pol.term_tol else 0
            k += direction
            steps += 1
            if steps > pol.max_terms:
                raise ConvergenceError("type-II lattice sum did not decay within max_terms")
    return c * (1.0 - q) * gram


def gram_matrix(
    family: FamilyDescriptor, nmax: int, pol: TruncationPolicy = DEFAULT_POLICY
) -> GramReport:
    """Gram matrix of the orthonormal basis under the family's measure.

    Rogers uses refined theta-quadrature and should return the identity;
    the type-II lattice sum is normalized by its (0,0) entry, after which
    the diagonal must be 1 and degree-independent.
    """
    if family.kind is Family.DISCRETE_I:
        raise UnsupportedFamily("no orthogonality data for the type-I family")
    if family.kind is Family.ROGERS:
        gram = _rogers_gram(family, nmax, pol)
    else:
        gram = _discrete2_gram(family, nmax, pol)
        gram = gram / gram[0, 0]
    dim = nmax + 1
    off = gram - np.diag(np.diag(gram))
    max_offdiag = float(np.max(np.abs(off))) if dim > 1 else 0.0
    diag = np.diag(gram)
    diag_spread = float(np.max(np.abs(diag / diag.mean() - 1.0)))
    if max_offdiag > 1e-6:
        raise QuadratureError(f"off-diagonal Gram mass {max_offdiag:.3e} exceeds 1e-6")
    return GramReport(dimension=dim, matrix=gram, max_offdiag=max_offdiag, diag_spread=diag_spread)
