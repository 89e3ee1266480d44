"""q-arithmetic: known values with independent oracles, plus identities."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhermite import (
    ConvergenceError,
    DomainError,
    QParam,
    TruncationPolicy,
    e_q,
    e_q_gaussian,
    e_q_reciprocal,
    e_q_tilde,
    jackson_integral,
    q_derivative,
    q_factorial,
    q_number,
    q_pochhammer,
)

Q_GRID = (0.3, 0.5, 0.7, 0.9)


def test_qparam_rejects_closed_interval():
    for bad in (0.0, 1.0, -0.2, 1.5, float("nan")):
        with pytest.raises(DomainError):
            QParam(bad)


def test_truncation_policy_validation():
    with pytest.raises(DomainError):
        TruncationPolicy(max_terms=0)
    with pytest.raises(DomainError):
        TruncationPolicy(term_tol=-1.0)
    with pytest.raises(DomainError):
        TruncationPolicy(rel_tol=float("inf"))


def test_q_number_trivial():
    assert q_number(0, 0.5) == 0.0
    for q in Q_GRID:
        assert q_number(1, q) == 1.0


def test_q_number_direct_sum_oracle():
    # [n]_q = 1 + q + ... + q^{n-1}
    assert q_number(3, 0.5) == pytest.approx(1 + 0.5 + 0.25, rel=1e-15)
    for q in Q_GRID:
        for n in range(0, 12):
            assert q_number(n, q) == pytest.approx(sum(q**i for i in range(n)), rel=1e-14)


def test_q_number_range():
    for q in Q_GRID:
        for n in range(0, 40):
            # strictly below 1/(1-q) in exact arithmetic; floats saturate there
            assert 0.0 <= q_number(n, q) <= 1.0 / (1.0 - q)
        for n in range(0, 20):
            assert q_number(n, q) < 1.0 / (1.0 - q)


def test_q_factorial_examples():
    assert q_factorial(0, 0.5) == 1.0
    assert q_factorial(2, 0.5) == pytest.approx(1.0 * 1.5, rel=1e-15)
    for n in range(1, 11):
        ratio = q_factorial(n, 0.5) / q_factorial(n - 1, 0.5)
        assert ratio == pytest.approx(q_number(n, 0.5), rel=1e-14)


def test_q_factorial_product_invariant():
    for q in Q_GRID:
        running = 1.0
        for n in range(1, 31):
            running *= q_number(n, q)
            assert q_factorial(n, q) == pytest.approx(running, rel=1e-12)


def test_q_pochhammer_examples():
    assert q_pochhammer(0.7, 0.5, 0) == 1.0
    assert q_pochhammer(0.5, 0.5, 2) == pytest.approx((1 - 0.5) * (1 - 0.25), rel=1e-15)
    assert q_pochhammer(0.0, 0.5, math.inf) == 1.0


@given(a=st.floats(-2, 2), k=st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_q_pochhammer_matches_naive_product(a, k):
    q = 0.5
    prod = 1.0
    for s in range(k):
        prod *= 1 - a * q**s
    assert q_pochhammer(a, q, k) == pytest.approx(prod, rel=1e-13, abs=1e-13)


def test_e_q_tilde_trivial_and_domain():
    assert e_q_tilde(0.0, 0.5) == 1.0
    with pytest.raises(DomainError):
        e_q_tilde(1.2, 0.5)
    with pytest.raises(DomainError):
        e_q_tilde(1.2j, 0.5)


def test_e_q_tilde_euler_product_oracle():
    # independent product loop for 1 / (x;q)_inf
    x, q = 0.25, 0.5
    prod = 1.0
    s = 0
    while x * q**s > 1e-19:
        prod *= 1 - x * q**s
        s += 1
    assert e_q_tilde(x, q) == pytest.approx(1.0 / prod, rel=1e-12)


def test_e_q_matches_scaled_variant():
    q = 0.5
    assert e_q(0.0, q) == 1.0
    assert e_q(1.0, q) == pytest.approx(e_q_tilde((1 - q) * 1.0, q), rel=1e-12)
    with pytest.raises(DomainError):
        e_q(2.1, 0.5)  # radius is 2


def test_e_q_identity_random_points():
    # random points avoid the far-left cancellation zone where |e_q| drops
    # below the roundoff floor of its own terms (q=0.9 is the worst; it is
    # covered on the cancellation-free positive ray)
    rng = np.random.default_rng(7)
    for q in (0.3, 0.5, 0.7):
        radius = 1.0 / (1.0 - q)
        for _ in range(100):
            x = rng.uniform(0.0, 0.6) * radius * np.exp(2j * np.pi * rng.uniform())
            lhs = e_q(complex(x), q)
            rhs = e_q_tilde((1 - q) * complex(x), q)
            assert abs(lhs - rhs) <= 1e-12 * abs(lhs)
    for x in np.linspace(0.0, 0.9, 25) / (1.0 - 0.9):
        lhs = e_q(float(x), 0.9)
        assert abs(lhs - e_q_tilde(0.1 * float(x), 0.9)) <= 1e-12 * abs(lhs)


def test_e_q_gaussian_examples():
    assert e_q_gaussian(0.0, 0.5) == 1.0
    loose = TruncationPolicy(max_terms=10000, term_tol=1e-16, rel_tol=1e-12)
    tight = TruncationPolicy(max_terms=20000, term_tol=1e-30, rel_tol=1e-14)
    v1 = e_q_gaussian(1.0, 0.5, loose)
    v2 = e_q_gaussian(1.0, 0.5, tight)
    assert v1 == pytest.approx(v2, rel=1e-12)
    assert math.isfinite(e_q_gaussian(100.0, 0.9))  # entire: no DomainError


def test_e_q_gaussian_pathological_policy():
    with pytest.raises(ConvergenceError):
        e_q_gaussian(50.0, 0.9, TruncationPolicy(max_terms=5, term_tol=1e-16, rel_tol=1e-12))


def test_q_derivative_examples():
    assert q_derivative(lambda t: t * t, 1.0, 0.5) == pytest.approx(q_number(2, 0.5), rel=1e-14)
    assert q_derivative(lambda t: 3.25, 0.7, 0.5) == 0.0
    val = q_derivative(lambda t: e_q(t, 0.5), 0.5, 0.5)
    assert val == pytest.approx(e_q(0.5, 0.5), rel=1e-12)
    with pytest.raises(DomainError):
        q_derivative(lambda t: t, 0.0, 0.5)


def test_q_derivative_monomials():
    for n in range(1, 8):
        for x in (0.3, 1.1):
            got = q_derivative(lambda t, k=n: t**k, x, 0.5)
            assert got == pytest.approx(q_number(n, 0.5) * x ** (n - 1), rel=1e-12)


def test_jackson_integral_examples():
    assert jackson_integral(lambda x: 1.0, 1.0, 0.5) == pytest.approx(1.0, rel=1e-14)
    assert jackson_integral(lambda x: x, 1.0, 0.5) == pytest.approx(1.0 / q_number(2, 0.5), rel=1e-13)
    # zeroth moment of the resolution measure
    a = 1.0 / (1.0 - 0.5)
    got = jackson_integral(lambda x: e_q_reciprocal(0.5 * x, 0.5), a, 0.5)
    assert got == pytest.approx(1.0, rel=1e-12)


def test_jackson_integral_convergence_error():
    with pytest.raises(ConvergenceError):
        jackson_integral(lambda x: 1.0, 1.0, 0.9, TruncationPolicy(max_terms=4))


@given(
    cu=st.lists(st.floats(-2, 2), min_size=1, max_size=5),
    cv=st.lists(st.floats(-2, 2), min_size=1, max_size=5),
    x=st.floats(0.05, 2.0),
)
@settings(max_examples=80, deadline=None)
def test_q_leibnitz_rule(cu, cv, x):
    q = 0.5
    u = lambda t: sum(c * t**i for i, c in enumerate(cu))
    v = lambda t: sum(c * t**i for i, c in enumerate(cv))
    lhs = q_derivative(lambda t: u(t) * v(t), x, q)
    rhs = u(x) * q_derivative(v, x, q) + v(q * x) * q_derivative(u, x, q)
    scale = max(1.0, abs(lhs), abs(rhs))
    assert abs(lhs - rhs) <= 1e-12 * scale


def test_integration_by_parts_monomials():
    q, a = 0.5, 1.0
    for m in range(7):
        for k in range(7):
            u = lambda t, mm=m: t**mm
            v = lambda t, kk=k: t**kk
            lhs = jackson_integral(
                lambda t: u(t) * (q_derivative(v, t, q) if k else 0.0), a, q
            )
            boundary = u(a) * v(a) - (1.0 if m == 0 and k == 0 else 0.0)
            rhs = boundary - jackson_integral(
                lambda t: v(q * t) * (q_derivative(u, t, q) if m else 0.0), a, q
            )
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_reciprocal_derivative_identity():
    q = 0.5
    radius = 1.0 / (1.0 - q)
    for x in np.linspace(0.04, 0.96, 12) * radius:
        lhs = q_derivative(lambda t: e_q_reciprocal(t, q), float(x), q)
        rhs = -e_q_reciprocal(q * float(x), q)
        assert abs(lhs - rhs) <= 1e-10 * max(1e-6, abs(rhs))


def test_e_q_reciprocal_boundary():
    q = 0.5
    assert e_q_reciprocal(1.0 / (1.0 - q), q) == 0.0
    with pytest.raises(DomainError):
        e_q_reciprocal(2.5, q)


def test_moment_identity_direct():
    for q in Q_GRID:
        a = 1.0 / (1.0 - q)
        for n in range(0, 16):
            got = jackson_integral(lambda x: e_q_reciprocal(q * x, q) * x**n, a, q)
            assert got == pytest.approx(q_factorial(n, q), rel=1e-9)
