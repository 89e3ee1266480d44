"""Poisson kernel and the generalized Fourier transform on the continuous basis.

The transform is defined through the kernel sum_n t^n phi_n(x) phi_n(y) at
t = -i; it is never evaluated as a pointwise boundary limit but applied
term-by-term through the basis, which is exact on polynomial densities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import polyfam
from .errors import ConvergenceError, DomainError, QuadratureError
from .qcore import DEFAULT_POLICY, QParam, TruncationPolicy, as_qparam, q_pochhammer


@dataclass(frozen=True)
class KernelSpec:
    """Kernel parameters: deformation q, generating variable t, truncation.

    |t| <= 1; on the boundary (t = -i in particular) the truncated kernel is
    meaningful only inside quadrature against smooth densities.
    """

    q: QParam
    t: complex
    n_terms: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_qparam(self.q))
        object.__setattr__(self, "t", complex(self.t))
        if abs(self.t) > 1.0 + 1e-12:
            raise DomainError("kernel requires |t| <= 1")
        if self.n_terms < 1:
            raise DomainError("n_terms must be at least 1")


def poisson_kernel(x: float, y: float, spec: KernelSpec) -> complex:
    """Truncated kernel sum_{n < n_terms} t^n phi_n(x) phi_n(y)."""
    if abs(x) > 1.0 or abs(y) > 1.0:
        raise DomainError("kernel arguments must lie in [-1, 1]")
    fam = polyfam.rogers(spec.q)
    nmax = spec.n_terms - 1
    px = polyfam.eval_orthonormal_sequence(fam, nmax, x)
    py = px if y == x else polyfam.eval_orthonormal_sequence(fam, nmax, y)
    powers = spec.t ** np.arange(spec.n_terms)
    return complex(np.sum(powers * px * py))


def _stable_coefficients(f: Callable[[np.ndarray], np.ndarray], q: QParam, nmax: int) -> np.ndarray:
    """Quadrature coefficients <phi_n, f> refined until stable to 1e-12."""
    fam = polyfam.rogers(q)
    n_nodes = 128
    prev = None
    while n_nodes <= 1 << 15:
        theta, w = polyfam.rogers_theta_rule(q, n_nodes)
        xs = np.cos(theta)
        vals = polyfam.eval_orthonormal_sequence(fam, nmax, xs)
        coeffs = (vals * w) @ np.asarray(f(xs), dtype=complex)
        if prev is not None and float(np.max(np.abs(coeffs - prev))) < 1e-12 * (
            1.0 + float(np.max(np.abs(coeffs)))
        ):
            return coeffs
        prev = coeffs
        n_nodes *= 2
    raise QuadratureError("transform quadrature did not stabilize under refinement")


def gft_apply(
    f: Callable[[np.ndarray], np.ndarray],
    y_grid: Sequence[float],
    q: QParam | float,
    n_terms: int,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> np.ndarray:
    """Transform of f on a grid: sum_n (-i)^n <phi_n, f> phi_n(y).

    Exact up to quadrature error whenever f lies in the span of the first
    n_terms basis polynomials.
    """
    qp = as_qparam(q)
    nmax = n_terms - 1
    coeffs = _stable_coefficients(f, qp, nmax)
    ys = np.asarray(y_grid, dtype=float)
    vals = polyfam.eval_orthonormal_sequence(polyfam.rogers(qp), nmax, ys)
    phases = (-1j) ** np.arange(n_terms)
    return (phases * coeffs) @ vals


def gft_matrix(nmax: int, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY) -> np.ndarray:
    """Matrix elements <phi_m, F phi_n> on the truncated span.

    Built as G D G with G the quadrature Gram matrix and D = diag((-i)^n),
    so the result is diagonal exactly to the extent orthonormality holds.
    """
    qp = as_qparam(q)
    gram = polyfam.gram_matrix(polyfam.rogers(qp), nmax, pol).matrix
    phases = (-1j) ** np.arange(nmax + 1)
    return (gram * phases) @ gram


def mehler_closed_form_check(
    x: float,
    y: float,
    t: float,
    q: QParam | float,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> tuple[float, float]:
    """Kernel series value at (x, y) next to its single-argument closed form.

    The closed-form candidate depends on x only (through its theta), so it
    can match the series only at equal arguments; this diagnostic returns
    both values without asserting equality.
    """
    qp = as_qparam(q)
    if not (0.0 <= t < 1.0):
        raise DomainError("closed-form check is restricted to real t in [0, 1)")
    n_terms = 64
    prev = None
    while n_terms <= pol.max_terms:
        val = poisson_kernel(x, y, KernelSpec(qp, t, n_terms)).real
        if prev is not None and abs(val - prev) < 1e-12 * (1.0 + abs(val)):
            break
        prev = val
        n_terms *= 2
    else:
        raise ConvergenceError("kernel series did not settle under truncation doubling")
    theta = math.acos(x)
    u2 = complex(math.cos(2 * theta), math.sin(2 * theta))
    denom = (
        q_pochhammer(t * u2, qp, math.inf)
        * q_pochhammer(t * u2.conjugate(), qp, math.inf)
        * q_pochhammer(t, qp, math.inf) ** 2
    )
    closed = q_pochhammer(t * t, qp, math.inf) / denom
    return float(val), float(closed.real)
