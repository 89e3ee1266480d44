"""Truncated Fock-space operators for the generalized oscillators.

The recurrence coefficients b_n of an orthonormal polynomial family induce
position/momentum/ladder operators on the polynomial basis; this module
builds their dense truncations, checks the deformed commutation relations
and spectra, and verifies the equivalent q-difference equations.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import polyfam
from .errors import DimensionError, DomainError, UnsupportedFamily
from .polyfam import Family, FamilyDescriptor
from .qcore import QParam, as_qparam, q_number, q_pochhammer


class OperatorKind(enum.Enum):
    POSITION = "position"
    MOMENTUM = "momentum"
    RAISING = "raising"
    LOWERING = "lowering"
    NUMBER = "number"
    HAMILTONIAN = "hamiltonian"


class Relation(enum.Enum):
    """Deformed commutation relations; LHS is a-a+ minus a scaled a+a-."""

    ARIK_COON = "arik-coon"            # a-a+ - q   a+a- = 1
    Q_INVERSE = "q-inverse"            # a-a+ - 1/q a+a- = q^{-2N}
    Q_INVERSE_SQUARED = "q-inverse-sq"  # a-a+ - 1/q^2 a+a- = q^{-N}


class Provenance(enum.Enum):
    ROGERS = "rogers"
    DISCRETE_II = "discrete2"
    USER = "user"


@dataclass(frozen=True)
class BnSequence:
    """Recurrence coefficients feeding the operator construction.

    Family-derived sequences compute b_n on demand; user-supplied ones carry
    an explicit non-negative table (b_{-1} is implicitly zero).
    """

    provenance: Provenance
    table: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.provenance is Provenance.USER:
            if not self.table:
                raise DomainError("user-supplied sequence needs at least one coefficient")
            if any(v < 0 for v in self.table):
                raise DomainError("recurrence coefficients must be non-negative")

    def coeff(self, n: int, q: QParam | float) -> float:
        if n < 0:
            return 0.0
        if self.provenance is Provenance.ROGERS:
            return polyfam.recurrence_coeff(polyfam.rogers(q), n)
        if self.provenance is Provenance.DISCRETE_II:
            return polyfam.recurrence_coeff(polyfam.discrete2(q), n)
        if n >= len(self.table):
            raise DimensionError(f"user-supplied sequence has no b_{n}")
        return self.table[n]


def rogers_bn() -> BnSequence:
    return BnSequence(Provenance.ROGERS)


def discrete2_bn() -> BnSequence:
    return BnSequence(Provenance.DISCRETE_II)


def user_bn(values: Sequence[float]) -> BnSequence:
    return BnSequence(Provenance.USER, tuple(float(v) for v in values))


def source_for_family(family: FamilyDescriptor) -> BnSequence:
    if family.kind is Family.ROGERS:
        return rogers_bn()
    if family.kind is Family.DISCRETE_II:
        return discrete2_bn()
    raise UnsupportedFamily("type-I family provides no recurrence coefficients")


def ladder_prefactor(source: BnSequence, q: QParam | float) -> float:
    """gamma with a+|n> = gamma b_n |n+1>; family-specific convention.

    User-supplied sequences follow the Rogers convention gamma = 2/sqrt(1-q).
    """
    qq = as_qparam(q).q
    if source.provenance is Provenance.DISCRETE_II:
        return math.sqrt(qq / (1.0 - qq))
    return 2.0 / math.sqrt(1.0 - qq)


@dataclass(frozen=True)
class FockOperator:
    kind: OperatorKind
    dim: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)


def build_operator(
    kind: OperatorKind, source: BnSequence, q: QParam | float, dim: int
) -> FockOperator:
    """Dense truncation of X, P, ladder, number, or Hamiltonian.

    Column n carries the action on basis state |n>; the Hamiltonian is the
    ladder form a+a- + a-a+, whose diagonal is exact at every n (it is not
    the truncated matrix product, which would corrupt the last state).
    """
    qp = as_qparam(q)
    if dim < 2:
        raise DimensionError("operator truncation needs dim >= 2")
    b = [source.coeff(n, qp) for n in range(dim)]
    gamma = ladder_prefactor(source, qp)
    m = np.zeros((dim, dim), dtype=complex)
    if kind is OperatorKind.POSITION:
        for n in range(dim - 1):
            m[n + 1, n] = b[n]
            m[n, n + 1] = b[n]
    elif kind is OperatorKind.MOMENTUM:
        for n in range(dim - 1):
            m[n + 1, n] = 1j * b[n]
            m[n, n + 1] = -1j * b[n]
    elif kind is OperatorKind.RAISING:
        for n in range(dim - 1):
            m[n + 1, n] = gamma * b[n]
    elif kind is OperatorKind.LOWERING:
        for n in range(dim - 1):
            m[n, n + 1] = gamma * b[n]
    elif kind is OperatorKind.NUMBER:
        np.fill_diagonal(m, np.arange(dim))
    elif kind is OperatorKind.HAMILTONIAN:
        for n in range(dim):
            bm1 = source.coeff(n - 1, qp)
            m[n, n] = gamma**2 * (bm1 * bm1 + b[n] * b[n])
    else:
        raise DomainError(f"unknown operator kind {kind!r}")
    return FockOperator(kind=kind, dim=dim, entries=m)


def commutator_residual(
    relation: Relation, source: BnSequence, q: QParam | float, dim: int
) -> float:
    """Max-norm defect of a commutation relation on the leading block.

    The final basis state is truncation-corrupted, so the (dim-1)x(dim-1)
    block is compared; the defect is scaled by the right-hand side's
    magnitude, which grows like q^{-2n} for the lattice-family relations.
    """
    qp = as_qparam(q)
    if dim < 3:
        raise DimensionError("commutator check needs dim >= 3")
    q_ = qp.q
    raising = build_operator(OperatorKind.RAISING, source, qp, dim).entries
    lowering = build_operator(OperatorKind.LOWERING, source, qp, dim).entries
    n_idx = np.arange(dim)
    if relation is Relation.ARIK_COON:
        scale, rhs_diag = q_, np.ones(dim)
    elif relation is Relation.Q_INVERSE:
        scale, rhs_diag = 1.0 / q_, q_ ** (-2.0 * n_idx)
    else:
        scale, rhs_diag = 1.0 / q_**2, q_ ** (-1.0 * n_idx)
    lhs = lowering @ raising - scale * (raising @ lowering)
    diff = lhs - np.diag(rhs_diag)
    block = slice(0, dim - 1)
    defect = float(np.max(np.abs(diff[block, block])))
    return defect / max(1.0, float(np.max(np.abs(rhs_diag[: dim - 1]))))


def spectrum(source: BnSequence, q: QParam | float, nmax: int) -> list[float]:
    """Closed-form ladder-Hamiltonian eigenvalues lambda_0..lambda_nmax."""
    qp = as_qparam(q)
    if nmax < 0:
        raise DomainError("nmax must be non-negative")
    q_ = qp.q
    out = []
    for n in range(nmax + 1):
        if source.provenance is Provenance.ROGERS:
            out.append(q_number(n, qp) + q_number(n + 1, qp))
        elif source.provenance is Provenance.DISCRETE_II:
            out.append(q_ ** (-2 * n) * q_number(n + 1, qp) + q_ ** (2 - 2 * n) * q_number(n, qp))
        else:
            gamma = ladder_prefactor(source, qp)
            bm1 = source.coeff(n - 1, qp)
            bn = source.coeff(n, qp)
            out.append(gamma**2 * (bm1 * bm1 + bn * bn))
    return out


def hamiltonian_form_ratio(source: BnSequence, q: QParam | float, dim: int) -> tuple[float, float]:
    """Proportionality constant between X^2+P^2 and the ladder Hamiltonian.

    Returns (ratio, spread): the mean diagonal ratio over the first dim-2
    states and its maximum relative deviation.  The two forms agree only up
    to this constant; the ladder form is the canonical one here.
    """
    qp = as_qparam(q)
    if dim < 4:
        raise DimensionError("form comparison needs dim >= 4")
    x = build_operator(OperatorKind.POSITION, source, qp, dim).entries
    p = build_operator(OperatorKind.MOMENTUM, source, qp, dim).entries
    ladder = build_operator(OperatorKind.HAMILTONIAN, source, qp, dim).entries
    quad = (x @ x + p @ p).real
    ratios = np.diag(quad)[: dim - 2] / np.diag(ladder).real[: dim - 2]
    ratio = float(np.mean(ratios))
    spread = float(np.max(np.abs(ratios / ratio - 1.0)))
    return ratio, spread


# ---------------------------------------------------------------------------
# q-difference equations equivalent to the eigenvalue problems
# ---------------------------------------------------------------------------


def _rogers_weight_u(u: complex, q: float) -> complex:
    """Analytic continuation of the Rogers measure density in u = e^{i theta}:
    (u^2;q)_inf (u^-2;q)_inf / sin(theta), constants dropped."""
    w = q_pochhammer(u * u, q, math.inf) * q_pochhammer(1.0 / (u * u), q, math.inf)
    return w * 2j / (u - 1.0 / u)


def qdiff_residual_rogers(
    n: int,
    q: QParam | float,
    theta_grid: Sequence[float],
    perturb_order: int | None = None,
) -> float:
    """Normalized residual of the divided-difference equation
    (1-q) D_q[w D_q phi_n] + 4 q^{1-n} [n]_q w phi_n = 0.

    D_q is the divided difference built from half-shifts e^{i theta} ->
    q^{+-1/2} e^{i theta}, and w is the measure density (weight including
    the 1/sqrt(1-x^2) factor; the identity does not close without it).
    perturb_order swaps [n]_q for [perturb_order]_q as a negative control.
    """
    qp = as_qparam(q)
    q_ = qp.q
    if n < 0:
        raise DomainError("degree must be non-negative")
    for th in theta_grid:
        if th < 0.05 or th > math.pi - 0.05:
            raise DomainError("theta grid must stay 0.05 away from the endpoints")
    fam = polyfam.rogers(qp)
    s = math.sqrt(q_)
    lam = 4.0 * q_ ** (1 - n) * q_number(n if perturb_order is None else perturb_order, qp)

    def phi(u: complex) -> complex:
        return complex(polyfam.eval_orthonormal(fam, n, (u + 1.0 / u) / 2.0))

    def dq_x(u: complex) -> complex:
        return 0.5 * (s - 1.0 / s) * (u - 1.0 / u)

    def d_phi(u: complex) -> complex:
        return (phi(s * u) - phi(u / s)) / dq_x(u)

    def weighted(u: complex) -> complex:
        return _rogers_weight_u(u, q_) * d_phi(u)

    worst = 0.0
    scale = 0.0
    for th in theta_grid:
        u = cmath.exp(1j * th)
        outer = (weighted(s * u) - weighted(u / s)) / dq_x(u)
        w_here = _rogers_weight_u(u, q_)
        rhs = lam * w_here * phi(u)
        worst = max(worst, abs((1.0 - q_) * outer + rhs))
        scale = max(scale, abs(rhs), abs(w_here))
    return worst / scale


def qdiff_residual_discrete2(
    n: int,
    q: QParam | float,
    x_grid: Sequence[float],
    perturb_lhs_q: float | None = None,
) -> float:
    """Normalized residual of the lattice difference equation
    -(1-q^n) x^2 h_n(x) = q h_n(x/q) - (1+q+x^2) h_n(x) + (1+x^2) h_n(qx)

    for the monic type-II polynomials; the shifts step one rung along the
    geometric lattice.  perturb_lhs_q replaces q by another value in the
    left-hand factor (1-q^n) as a negative control.
    """
    qp = as_qparam(q)
    q_ = qp.q
    if n < 0:
        raise DomainError("degree must be non-negative")
    q_lhs = q_ if perturb_lhs_q is None else perturb_lhs_q
    worst = 0.0
    scale = 0.0
    for x in x_grid:
        h_here = polyfam.discrete2_eval_monic(n, x, qp)
        lhs = -(1.0 - q_lhs**n) * x * x * h_here
        rhs = (
            q_ * polyfam.discrete2_eval_monic(n, x / q_, qp)
            - (1.0 + q_ + x * x) * h_here
            + (1.0 + x * x) * polyfam.discrete2_eval_monic(n, q_ * x, qp)
        )
        worst = max(worst, abs(lhs - rhs))
        scale = max(scale, abs((1.0 - q_**n) * x * x * h_here), abs(h_here))
    return worst / max(scale, 1.0)
