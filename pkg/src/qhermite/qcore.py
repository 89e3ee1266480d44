"""Foundational q-arithmetic.

q-numbers, q-factorials, q-Pochhammer symbols, the q-exponential series,
the q-derivative, and the Jackson q-integral, all for a deformation
parameter 0 < q < 1.  Everything here is a pure function; all heavy users
(polynomial families, oscillators, coherent states) sit on top of these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Union

from .errors import ConvergenceError, DomainError

Scalar = Union[float, complex]


@dataclass(frozen=True)
class QParam:
    """Deformation parameter on the open interval (0, 1)."""

    q: float

    def __post_init__(self) -> None:
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"deformation parameter must satisfy 0 < q < 1, got {self.q!r}")


def as_qparam(q: QParam | float) -> QParam:
    """Coerce a float into a validated QParam (idempotent)."""
    return q if isinstance(q, QParam) else QParam(float(q))


@dataclass(frozen=True)
class TruncationPolicy:
    """Uniform truncation control for series, products, and lattice sums.

    max_terms: hard cap on summed terms.
    term_tol:  absolute per-term cutoff; a sum stops once three consecutive
               terms fall below it (guards sign-alternating cancellation).
    rel_tol:   relative accuracy target used by agreement checks between
               redundant evaluation paths.
    """

    max_terms: int = 10000
    term_tol: float = 1e-16
    rel_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not (math.isfinite(self.term_tol) and self.term_tol > 0):
            raise DomainError("term_tol must be finite and positive")
        if not (math.isfinite(self.rel_tol) and self.rel_tol > 0):
            raise DomainError("rel_tol must be finite and positive")


DEFAULT_POLICY = TruncationPolicy()

#: consecutive sub-threshold terms required before a series is declared done
_CONSECUTIVE_SMALL = 3


def _sum_series(terms: Iterable[Scalar], pol: TruncationPolicy, what: str) -> Scalar:
    """Sum a term stream until three consecutive terms drop below term_tol.

    Raises ConvergenceError if max_terms is exhausted first.
    """
    total: Scalar = 0.0
    small_run = 0
    for k, term in enumerate(terms):
        if k >= pol.max_terms:
            raise ConvergenceError(f"{what}: no convergence within {pol.max_terms} terms")
        total = total + term
        if abs(term) < pol.term_tol:
            small_run += 1
            if small_run >= _CONSECUTIVE_SMALL:
                return total
        else:
            small_run = 0
    return total


def q_number(n: int, q: QParam | float) -> float:
    """[n]_q = (1 - q^n) / (1 - q), the deformed integer."""
    qq = as_qparam(q).q
    if n < 0:
        raise DomainError("q_number requires n >= 0")
    return (1.0 - qq**n) / (1.0 - qq)


def q_factorial(n: int, q: QParam | float) -> float:
    """[n]_q! = prod_{k=1..n} [k]_q, with the empty product equal to 1."""
    qq = as_qparam(q).q
    if n < 0:
        raise DomainError("q_factorial requires n >= 0")
    out = 1.0
    for k in range(1, n + 1):
        out *= (1.0 - qq**k) / (1.0 - qq)
    return out


def q_pochhammer(a: Scalar, q: QParam | float, k: int | float) -> Scalar:
    """(a; q)_k = prod_{s=1..k} (1 - a q^{s-1}).

    Pass k = math.inf for the convergent infinite product; it is truncated
    once |a| q^{s-1} falls below the default term tolerance.
    """
    qq = as_qparam(q).q
    if k is math.inf or (isinstance(k, float) and math.isinf(k) and k > 0):
        prod: Scalar = 1.0 if not isinstance(a, complex) else 1.0 + 0.0j
        mag = abs(a)
        s = 0
        while mag * qq**s >= DEFAULT_POLICY.term_tol:
            prod *= 1.0 - a * qq**s
            s += 1
            if s > 10 * DEFAULT_POLICY.max_terms:  # unreachable for 0<q<1
                raise ConvergenceError("infinite q-Pochhammer product did not settle")
        return prod
    if not isinstance(k, int) or k < 0:
        raise DomainError("q_pochhammer order k must be a non-negative integer or math.inf")
    prod = 1.0 if not isinstance(a, complex) else 1.0 + 0.0j
    for s in range(k):
        prod *= 1.0 - a * qq**s
    return prod


def e_q_tilde(x: Scalar, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY) -> Scalar:
    """q-exponential sum_n x^n / (q;q)_n, convergent for |x| < 1."""
    qq = as_qparam(q).q
    if abs(x) >= 1.0:
        raise DomainError(f"e_q_tilde requires |x| < 1, got |x| = {abs(x)}")

    def terms() -> Iterator[Scalar]:
        term: Scalar = 1.0
        n = 0
        while True:
            yield term
            n += 1
            term = term * x / (1.0 - qq**n)

    return _sum_series(terms(), pol, "e_q_tilde series")


def e_q(x: Scalar, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY) -> Scalar:
    """q-exponential sum_n x^n / [n]_q!, convergent for |x| < 1/(1-q).

    Algebraically equal to e_q_tilde((1-q) x); evaluated by its own series
    so the identity stays available as an independent cross-check.
    """
    qq = as_qparam(q).q
    if abs(x) >= 1.0 / (1.0 - qq):
        raise DomainError(f"e_q requires |x| < 1/(1-q) = {1.0 / (1.0 - qq)}, got |x| = {abs(x)}")

    def terms() -> Iterator[Scalar]:
        term: Scalar = 1.0
        n = 0
        while True:
            yield term
            n += 1
            term = term * x * (1.0 - qq) / (1.0 - qq**n)

    return _sum_series(terms(), pol, "e_q series")


def e_q_reciprocal(x: float, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY) -> float:
    """1 / e_q(x) on [0, 1/(1-q)], with the boundary value pinned to 0.

    e_q diverges at the right endpoint of its domain, so its reciprocal
    extends continuously by 0 there; the Jackson-measure moment identities
    need exactly that endpoint value.
    """
    qq = as_qparam(q).q
    radius = 1.0 / (1.0 - qq)
    if x > radius:
        raise DomainError(f"e_q_reciprocal requires x <= 1/(1-q) = {radius}")
    if math.isclose(x, radius, rel_tol=1e-14):
        return 0.0
    return 1.0 / e_q(x, qq, pol)


def e_q_gaussian(x: Scalar, q: QParam | float, pol: TruncationPolicy = DEFAULT_POLICY) -> Scalar:
    """Entire q-exponential variant sum_n ((1-q)/q)^n q^{n^2} x^n / (q;q)_n.

    The q^{n^2} damping makes this converge for every x; it is the
    normalization series of the lattice-family coherent states.
    """
    qq = as_qparam(q).q

    def terms() -> Iterator[Scalar]:
        term: Scalar = 1.0
        n = 0
        while True:
            yield term
            n += 1
            # ratio of consecutive coefficients: ((1-q)/q) q^{2n-1} / (1 - q^n)
            term = term * x * (1.0 - qq) / qq * qq ** (2 * n - 1) / (1.0 - qq**n)

    return _sum_series(terms(), pol, "e_q_gaussian series")


def q_derivative(f: Callable[[float], float], x: float, q: QParam | float) -> float:
    """(f(x) - f(qx)) / (x (1-q)); undefined at x = 0."""
    qq = as_qparam(q).q
    if x == 0:
        raise DomainError("q_derivative is undefined at x = 0")
    return (f(x) - f(qq * x)) / (x * (1.0 - qq))


def jackson_integral(
    f: Callable[[float], float],
    a: float,
    q: QParam | float,
    pol: TruncationPolicy = DEFAULT_POLICY,
) -> float:
    """Jackson q-integral a (1-q) sum_{k>=0} q^k f(q^k a) over [0, a].

    The lattice sum is truncated once |q^k f(q^k a)| stays below term_tol;
    ConvergenceError if the tail has not dropped below it at max_terms.
    """
    qq = as_qparam(q).q
    if not a > 0:
        raise DomainError("jackson_integral requires a > 0")

    def terms() -> Iterator[float]:
        k = 0
        while True:
            yield qq**k * f(qq**k * a)
            k += 1

    return a * (1.0 - qq) * _sum_series(terms(), pol, "Jackson integral lattice sum")
