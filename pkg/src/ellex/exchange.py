"""Exchange functions on the constraint surface p^m = q^(c+2).

F(m, x) is the scalar factor exchanged between the trace generator and the
algebra generators; Y(x) is the factor closing the quadratic algebra of the
trace generators themselves.  Both are finite products of theta quotients
in the base q^4, so they remain evaluable for any nonzero p (p enters only
through theta *arguments*); |p| < 1 is required only where p also serves
as a product base.  This matters at the commuting points p = q^(2k) with
k < 0, where |p| > 1.

Closed forms implemented (th = theta_{q^4}):

    m > 0:  F(m,x) = prod_{s=1..2m}  q^-1 th(x^2 q^2 p^-s) th(x^-2 q^2 p^s)
                                     / [ th(x^-2 p^s) th(x^2 p^-s) ]
    m < 0:  F(m,x) = prod_{s=0..2|m|-1}  q th(x^2 p^s) th(x^-2 p^-s)
                                     / [ th(x^2 q^2 p^s) th(x^-2 q^2 p^-s) ]

    Y(x) = [ prod_{s=1..S} x^2 th(x^-2 p^s) th(x^2 q^2 p^s)
                           / ( th(x^2 p^s) th(x^-2 q^2 p^s) ) ]^2,
    S = 2m - 1 for m > 0 and S = 2|m| for m < 0.

Cross paths kept for verification: F as the iterated product of the
nome-shift factor, F(m,x) = F(|m|, x^-1 p^(1/2))^-1 for m < 0, and
Y(x) = F(m, q^c x) / F(m, -p^(1/2) x) with q^c = p^m / q^2 held in exact
integer-power form.
"""

from __future__ import annotations

import cmath
import time
from dataclasses import dataclass

from .elliptic import NomeParams
from .errors import DomainError, NearSingularity
from .qseries import (
    DEFAULT_POLICY,
    TruncationPolicy,
    _as_complex,
    near_theta_zero,
    theta,
)
from .report import CheckResult
from .rmatrix import tau_fn

__all__ = [
    "LevelParams",
    "CommutingPoint",
    "shift_factor_F",
    "exchange_F",
    "exchange_F_iterated",
    "exchange_F_negative_by_reciprocity",
    "exchange_Y",
    "exchange_Y_ratio",
    "commuting_F",
    "check_p_periodicity",
]


@dataclass(frozen=True)
class LevelParams:
    """Nonzero integer level m with the charge c derived from q^(c+2) = p^m.

    c is computed once by principal logarithm and stored; q^c itself is kept
    in the exact form p^m / q^2 so downstream products never re-take logs.
    """

    m: int
    nome: NomeParams

    def __post_init__(self) -> None:
        if int(self.m) != self.m or self.m == 0:
            raise DomainError("level m must be a nonzero integer (m = 0 disregarded)")
        object.__setattr__(self, "m", int(self.m))

    @property
    def c(self) -> complex:
        return self.m * cmath.log(self.nome.p) / cmath.log(self.nome.q) - 2.0

    @property
    def q_pow_c(self) -> complex:
        return self.nome.p**self.m / self.nome.q**2


@dataclass(frozen=True)
class CommutingPoint:
    """The special nome p = q^(2k) for nonzero integer k.

    For k odd the exchange function degenerates to 1; for k even it takes a
    k-independent closed form. Negative k puts |p| above 1, which is still a
    valid evaluation point for the theta-argument-only exchange functions.
    """

    k: int

    def __post_init__(self) -> None:
        if int(self.k) != self.k or self.k == 0:
            raise DomainError("k must be a nonzero integer (k = 0 excluded)")
        object.__setattr__(self, "k", int(self.k))

    @property
    def parity(self) -> str:
        return "odd" if self.k % 2 else "even"

    def exact_nome(self, q: complex) -> NomeParams:
        qv = _as_complex(q, "q")
        return NomeParams(qv ** (2 * self.k), qv, allow_p_outside_disk=True)


def shift_factor_F(
    x: complex, nome: NomeParams, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """The literal four-tau nome-shift factor

        F(x) = tau(x q^(1/2)) tau(x^-1 q^(1/2))
               tau(x q^(1/2) p^(1/2)) tau(x^-1 q^(1/2) p^(-1/2)).

    Principal square roots; their branch choices cancel in the product.
    The rmatrix module carries the collapsed branch-free form of the same
    quantity as an independent code path.
    """
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("shift factor needs x != 0")
    sq = cmath.sqrt(nome.q)
    sp = cmath.sqrt(nome.p)
    return (
        tau_fn(xv * sq, nome.q, policy)
        * tau_fn(sq / xv, nome.q, policy)
        * tau_fn(xv * sq * sp, nome.q, policy)
        * tau_fn(sq / (xv * sp), nome.q, policy)
    )


def _theta_ratio_guarded(
    q4: complex,
    num_args: tuple[complex, ...],
    den_args: tuple[complex, ...],
    policy: TruncationPolicy,
) -> complex:
    for arg in den_args:
        if near_theta_zero(q4, arg):
            raise NearSingularity(f"theta denominator zero near argument {arg!r}")
    num = 1.0 + 0j
    den = 1.0 + 0j
    for arg in num_args:
        num *= theta(q4, arg, policy)
    for arg in den_args:
        den *= theta(q4, arg, policy)
    return num / den


def exchange_F(
    level: LevelParams, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Closed theta-product form of F(m, x)."""
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("exchange_F needs x != 0")
    p, q = level.nome.p, level.nome.q
    q4 = q**4
    q2 = q * q
    x2 = xv * xv
    ix2 = 1.0 / x2
    result = 1.0 + 0j
    if level.m > 0:
        ps = 1.0 + 0j
        for _ in range(1, 2 * level.m + 1):
            ps *= p  # p^s
            result *= _theta_ratio_guarded(
                q4,
                (x2 * q2 / ps, ix2 * q2 * ps),
                (ix2 * ps, x2 / ps),
                policy,
            ) / q
    else:
        ps = 1.0 + 0j
        for s in range(0, 2 * abs(level.m)):
            if s:
                ps *= p
            result *= q * _theta_ratio_guarded(
                q4,
                (x2 * ps, ix2 / ps),
                (x2 * q2 * ps, ix2 * q2 / ps),
                policy,
            )
    return result


def exchange_F_iterated(
    level: LevelParams, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """F(m, x) as the iterated product of the nome-shift factor:

        prod_{s=1..m} F(x p^-s)          for m > 0,
        prod_{s=0..|m|-1} F(x p^s)^-1    for m < 0.

    Independent of the closed form; used as a cross path in verification.
    """
    xv = _as_complex(x, "x")
    result = 1.0 + 0j
    if level.m > 0:
        for s in range(1, level.m + 1):
            result *= shift_factor_F(xv * level.nome.p ** (-s), level.nome, policy)
    else:
        for s in range(0, abs(level.m)):
            result /= shift_factor_F(xv * level.nome.p**s, level.nome, policy)
    return result


def exchange_F_negative_by_reciprocity(
    level: LevelParams, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """For m < 0: F(m, x) = F(|m|, x^-1 p^(1/2))^-1, a cross-check path."""
    if level.m >= 0:
        raise DomainError("reciprocity path applies to negative m only")
    mirror = LevelParams(-level.m, level.nome)
    arg = cmath.sqrt(level.nome.p) / _as_complex(x, "x")
    return 1.0 / exchange_F(mirror, arg, policy)


def exchange_Y(
    level: LevelParams, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Closed form of the quadratic exchange function Y(x)."""
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("exchange_Y needs x != 0")
    p, q = level.nome.p, level.nome.q
    q4 = q**4
    q2 = q * q
    x2 = xv * xv
    ix2 = 1.0 / x2
    upper = 2 * level.m - 1 if level.m > 0 else 2 * abs(level.m)
    inner = 1.0 + 0j
    ps = 1.0 + 0j
    for _ in range(1, upper + 1):
        ps *= p
        inner *= x2 * _theta_ratio_guarded(
            q4,
            (ix2 * ps, x2 * q2 * ps),
            (x2 * ps, ix2 * q2 * ps),
            policy,
        )
    return inner * inner


def exchange_Y_ratio(
    level: LevelParams, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Y(x) = F(m, q^c x) / F(m, -p^(1/2) x), the construction-path form.

    q^c is taken in the exact form p^m / q^2; F is even in its argument, so
    the branch of p^(1/2) is immaterial.
    """
    xv = _as_complex(x, "x")
    num = exchange_F(level, level.q_pow_c * xv, policy)
    den = exchange_F(level, -cmath.sqrt(level.nome.p) * xv, policy)
    return num / den


def commuting_F(
    m: int,
    cp: CommutingPoint,
    x: complex,
    q: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Reference value of F(m, x) at the exact point p = q^(2k):

        1                                                   for k odd,
        q^(-2m) x^(4m) [ th(x^2 q^2) / th(x^2) ]^(4m)       for k even,

    with th = theta_{q^4}. Serves as the oracle for exchange_F there.
    """
    if int(m) != m or m == 0:
        raise DomainError("level m must be a nonzero integer")
    m = int(m)
    qv = _as_complex(q, "q")
    if not (0.0 < abs(qv) < 1.0):
        raise DomainError(f"|q| must lie in (0, 1), got {abs(qv):.6g}")
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("commuting_F needs x != 0")
    if cp.k % 2:
        return 1.0 + 0j
    q4 = qv**4
    x2 = xv * xv
    if near_theta_zero(q4, x2):
        raise NearSingularity(f"theta_{{q^4}}(x^2) vanishes near x = {xv!r}")
    ratio = theta(q4, x2 * qv * qv, policy) / theta(q4, x2, policy)
    return qv ** (-2 * m) * xv ** (4 * m) * ratio ** (4 * m)


def check_p_periodicity(
    level: LevelParams,
    x: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float = 1e-10,
) -> CheckResult:
    """Invariance of F(m, x) under p -> p q^4, as a relative residual.

    Skipped (passed, with a domain note) when |p q^4| >= 1.
    """
    t0 = time.perf_counter()
    xv = _as_complex(x, "x")
    p, q = level.nome.p, level.nome.q
    params = {"m": level.m, "x": xv, "p": p, "q": q}
    shifted_p = p * q**4
    if abs(shifted_p) >= 1.0:
        return CheckResult(
            check_id="p-periodicity",
            params=params,
            max_abs_error=0.0,
            tolerance=tolerance,
            passed=True,
            wall_time_s=time.perf_counter() - t0,
            info={"skipped": "shifted nome |p q^4| >= 1, outside domain"},
        )
    base = exchange_F(level, xv, policy)
    shifted = exchange_F(
        LevelParams(level.m, NomeParams(shifted_p, q, allow_p_outside_disk=True)),
        xv,
        policy,
    )
    err = abs(base - shifted) / max(1.0, abs(base))
    return CheckResult(
        check_id="p-periodicity",
        params=params,
        max_abs_error=float(err),
        tolerance=tolerance,
        passed=bool(err <= tolerance),
        wall_time_s=time.perf_counter() - t0,
    )
