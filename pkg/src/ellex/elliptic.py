"""Jacobi-elliptic parametrization: complete elliptic integrals by AGM,
the hyperbolic Jacobi quotient snh(u) = -i sn(iu), and the map from
(modulus, lambda, u) to the multiplicative parameters (p, q, x).

snh is evaluated through theta quotients in the nome, which keeps a single
code path for all elliptic objects and extends entrywise evaluation of the
eight-vertex matrix to arbitrary complex multiplicative arguments:

    snh(u) = k^(-1/2) p^(1/4) * T(y),   y = exp(pi u / 2K),
    T(y)   = y * theta_{p^2}(y^-2) / theta_{p^2}(p y^-2)

with p = exp(-pi K'/K) the nome of the modulus k.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, NearSingularity, NonConvergentBase
from .qseries import (
    DEFAULT_POLICY,
    TruncationPolicy,
    _as_complex,
    near_theta_zero,
    qpochhammer,
    theta,
)

__all__ = [
    "EllipticParams",
    "NomeParams",
    "complete_K",
    "jacobi_snh",
    "snh_core",
    "param_map",
    "baxter_entries",
    "modulus_from_nome",
]

_POLE_TOL = 1e-10  # absolute tolerance for snh denominators


def complete_K(modulus: float) -> float:
    """Complete elliptic integral K(k) by arithmetic-geometric mean iteration.

    Requires 0 < modulus < 1. K' is complete_K(sqrt(1 - k^2)).
    """
    k = float(modulus)
    if not (0.0 < k < 1.0) or not math.isfinite(k):
        raise DomainError(f"modulus must lie in (0, 1), got {modulus!r}")
    a, b = 1.0, math.sqrt(1.0 - k * k)
    for _ in range(64):
        if abs(a - b) <= 1e-17 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


@dataclass(frozen=True)
class EllipticParams:
    """Elliptic modulus k in (0,1), spectral shift lambda > 0, argument u."""

    modulus: float
    lam: float
    u: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.modulus < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {self.modulus!r}")
        if not (self.lam > 0.0 and math.isfinite(self.lam)):
            raise DomainError(f"lambda must be positive, got {self.lam!r}")
        if not math.isfinite(self.u):
            raise DomainError(f"u must be finite, got {self.u!r}")

    @cached_property
    def K(self) -> float:
        return complete_K(self.modulus)

    @cached_property
    def K_prime(self) -> float:
        return complete_K(math.sqrt(1.0 - self.modulus**2))

    @cached_property
    def nome(self) -> float:
        return math.exp(-math.pi * self.K_prime / self.K)


@dataclass(frozen=True)
class NomeParams:
    """The base pair (p, q) of the multiplicative parametrization.

    |q| < 1 always; |p| < 1 as well unless ``allow_p_outside_disk`` is set,
    which is legitimate only for functions that use p purely as a theta
    *argument* (never as a product base).
    """

    p: complex
    q: complex
    allow_p_outside_disk: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        pv = _as_complex(self.p, "p")
        qv = _as_complex(self.q, "q")
        if not (0.0 < abs(qv) < 1.0):
            raise NonConvergentBase(f"|q| must lie in (0, 1), got {abs(qv):.6g}")
        if pv == 0:
            raise DomainError("p must be nonzero")
        if not self.allow_p_outside_disk and not (abs(pv) < 1.0):
            raise NonConvergentBase(f"|p| must lie in (0, 1), got {abs(pv):.6g}")
        object.__setattr__(self, "p", pv)
        object.__setattr__(self, "q", qv)


def snh_core(
    y: complex, p: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """T(y) = y * theta_{p^2}(y^-2) / theta_{p^2}(p y^-2).

    The modulus-dependent prefactor k^(-1/2) p^(1/4) is left out; it cancels
    in the entry ratios a, b and contributes only p^(1/2) to the entry d.
    """
    yv = _as_complex(y, "y")
    if yv == 0:
        raise DomainError("snh argument must be nonzero")
    p2 = p * p
    den_arg = p / (yv * yv)
    if near_theta_zero(p2, den_arg, _POLE_TOL):
        raise NearSingularity(f"snh pole near multiplicative argument {yv!r}")
    return yv * theta(p2, 1.0 / (yv * yv), policy) / theta(p2, den_arg, policy)


def jacobi_snh(
    u: float, modulus: float, policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """snh(u) = -i sn(iu) for real u, via the theta-quotient form; odd in u."""
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    if u == 0.0:
        return 0.0
    K = complete_K(modulus)
    Kp = complete_K(math.sqrt(1.0 - modulus**2))
    p = math.exp(-math.pi * Kp / K)
    y = math.exp(math.pi * u / (2.0 * K))
    val = (p**0.25 / math.sqrt(modulus)) * snh_core(y, p, policy)
    return float(val.real)


def param_map(ep: EllipticParams) -> tuple[NomeParams, complex]:
    """(modulus, lambda, u) -> ((p, q), x):

    p = exp(-pi K'/K), q = -exp(-pi lambda / 2K), x = exp(pi u / 2K).
    Note q comes out negative real in this parametrization.
    """
    p = ep.nome
    q = -math.exp(-math.pi * ep.lam / (2.0 * ep.K))
    x = math.exp(math.pi * ep.u / (2.0 * ep.K))
    return NomeParams(complex(p), complex(q)), complex(x)


def baxter_entries(
    ep: EllipticParams, policy: TruncationPolicy = DEFAULT_POLICY
) -> tuple[complex, complex, complex, complex]:
    """Bare eight-vertex entries at the point u:

        a = snh(lam - u)/snh(lam),  b = snh(u)/snh(lam),
        c = 1,                      d = k snh(lam - u) snh(u).
    """
    sn_lam = jacobi_snh(ep.lam, ep.modulus, policy)
    if abs(sn_lam) < _POLE_TOL:
        raise NearSingularity(f"snh(lambda) = {sn_lam:.3e} below tolerance")
    sn_lmu = jacobi_snh(ep.lam - ep.u, ep.modulus, policy)
    sn_u = jacobi_snh(ep.u, ep.modulus, policy)
    a = sn_lmu / sn_lam
    b = sn_u / sn_lam
    d = ep.modulus * sn_lmu * sn_u
    return complex(a), complex(b), complex(1.0), complex(d)


def modulus_from_nome(
    p: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """Elliptic modulus from the nome via theta constants:

        k(p) = 4 p^(1/2) [ (-p^2; p^2)_inf / (-p; p^2)_inf ]^4
    """
    pv = _as_complex(p, "p")
    if not (0.0 < abs(pv) < 1.0):
        raise DomainError(f"nome needs 0 < |p| < 1, got |p| = {abs(pv):.6g}")
    p2 = pv * pv
    ratio = qpochhammer(-p2, (p2,), policy) / qpochhammer(-pv, (p2,), policy)
    return 4.0 * cmath.sqrt(pv) * ratio**4
