"""q-series foundations: multi-base q-Pochhammer products, multiplicative
Jacobi theta functions, their quasi-periodicity factors, and logarithmic
derivatives, all truncated under an explicit certified policy.

Conventions (multiplicative notation throughout):

    (x; b1,...,bm)_inf = prod_{n1..nm >= 0} (1 - x * b1^n1 * ... * bm^nm)
    theta_a(x)         = (x; a)_inf * (a/x; a)_inf * (a; a)_inf

theta_a(x) has simple zeros exactly at x = a^n for integer n, and obeys

    theta_a(a*x)   = theta_a(1/x) = -theta_a(x)/x
    theta_a(a^s*x) = (-1)^s * a^(-s(s-1)/2) * x^(-s) * theta_a(x)

Everything here is a pure function of its arguments; safe for concurrent
use without synchronization.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import (
    DomainError,
    NearSingularity,
    NonConvergentBase,
    TruncationExceeded,
)

__all__ = [
    "TruncationPolicy",
    "BaseSet",
    "DEFAULT_POLICY",
    "qpochhammer",
    "theta",
    "theta_shift_factor",
    "log_deriv_theta",
    "near_theta_zero",
]


@dataclass(frozen=True)
class TruncationPolicy:
    """Caps for every infinite product/series.

    ``max_terms`` bounds the number of total-degree levels (products) or
    terms (series); evaluation stops earlier once the certified tail bound
    drops below ``tail_tol``.
    """

    max_terms: int = 512
    tail_tol: float = 1e-15

    def __post_init__(self) -> None:
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError("max_terms must be a positive integer")
        if not (0.0 < self.tail_tol < 1.0):
            raise DomainError("tail_tol must lie in (0, 1)")

    def tighter(self, factor: float) -> "TruncationPolicy":
        """Same cap, tail tolerance divided by ``factor`` (floored at 1e-300)."""
        return TruncationPolicy(self.max_terms, max(self.tail_tol / factor, 1e-300))


DEFAULT_POLICY = TruncationPolicy()


def _as_complex(z: complex, name: str = "argument") -> complex:
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError(f"{name} must be finite, got {w!r}")
    return w


@dataclass(frozen=True)
class BaseSet:
    """Ordered bases (b1, ..., bm) of a multi-base product, each 0 < |b| < 1."""

    bases: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.bases:
            raise DomainError("BaseSet needs at least one base")
        for b in self.bases:
            bb = _as_complex(b, "base")
            if not (0.0 < abs(bb) < 1.0):
                raise NonConvergentBase(
                    f"base {bb!r} has modulus {abs(bb):.6g}, need 0 < |b| < 1"
                )

    @classmethod
    def of(cls, *bases: complex) -> "BaseSet":
        return cls(tuple(complex(b) for b in bases))


def _coerce_bases(bases: BaseSet | complex | Iterable[complex]) -> tuple[complex, ...]:
    if isinstance(bases, BaseSet):
        return bases.bases
    if isinstance(bases, (complex, float, int)):
        return BaseSet.of(bases).bases
    return BaseSet(tuple(complex(b) for b in bases)).bases


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def qpochhammer(
    x: complex,
    bases: BaseSet | complex | Iterable[complex],
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Evaluate (x; b1,...,bm)_inf by total-degree enumeration.

    Truncates after total degree d once

        N_d * (1 + |x|) * B^d / (1 - B)^m  <  tail_tol

    with B = max|b_i| and N_d the number of multi-indices of degree d; the
    left side bounds everything the remaining factors can still contribute.
    """
    xv = _as_complex(x, "x")
    bs = _coerce_bases(bases)
    m = len(bs)
    big = max(abs(b) for b in bs)
    headroom = (1.0 + abs(xv)) / (1.0 - big) ** m

    pows: list[list[complex]] = [[1.0 + 0j] for _ in bs]
    result = 1.0 + 0j
    for degree in range(policy.max_terms + 1):
        if comb(degree + m - 1, m - 1) * headroom * big**degree < policy.tail_tol:
            return result
        for i, b in enumerate(bs):
            pows[i].append(pows[i][degree] * b)
        if m == 1:
            result *= 1.0 - xv * pows[0][degree]
            if result == 0:
                return result
            continue
        for idx in _compositions(degree, m):
            t = xv
            for i, n in enumerate(idx):
                t *= pows[i][n]
            result *= 1.0 - t
            if result == 0:
                return result
    raise TruncationExceeded(
        f"tail bound {policy.tail_tol:g} not reached within "
        f"max_terms={policy.max_terms} (max base modulus {big:.4g})"
    )


def theta(
    a: complex, x: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """theta_a(x) = (x; a)_inf (a/x; a)_inf (a; a)_inf, for 0 < |a| < 1, x != 0."""
    av = _as_complex(a, "a")
    xv = _as_complex(x, "x")
    if not (0.0 < abs(av) < 1.0):
        raise DomainError(f"theta base needs 0 < |a| < 1, got |a| = {abs(av):.6g}")
    if xv == 0:
        raise DomainError("theta argument x must be nonzero")
    base = (av,)
    return (
        qpochhammer(xv, base, policy)
        * qpochhammer(av / xv, base, policy)
        * qpochhammer(av, base, policy)
    )


def theta_shift_factor(a: complex, s: int, x: complex) -> complex:
    """Quasi-periodicity factor: theta_a(a^s x) / theta_a(x) for integer s.

    Evaluated as (-1)^s * a^(-s(s-1)/2) * x^(-s); s(s-1) is always even, so
    every exponent is an integer and no fractional-power branch is chosen.
    """
    av = _as_complex(a, "a")
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("shift factor needs x != 0")
    if int(s) != s:
        raise DomainError("shift order s must be an integer")
    s = int(s)
    half = (s * (s - 1)) // 2
    sign = -1.0 if s % 2 else 1.0
    return sign * av ** (-half) * xv ** (-s)


def near_theta_zero(a: complex, x: complex, rtol: float = 1e-8) -> bool:
    """True when x lies within relative rtol of a zero a^n of theta_a.

    Scans the integers n for which |a|^n can be within a factor 2 of |x|.
    """
    av = _as_complex(a, "a")
    xv = _as_complex(x, "x")
    if xv == 0 or not (0.0 < abs(av) < 1.0):
        return False
    la = math.log(abs(av))
    n_center = round(math.log(abs(xv)) / la)
    span = math.ceil(math.log(2.0) / abs(la)) + 1
    log_x = cmath.log(xv)
    log_a = cmath.log(av)
    for n in range(n_center - span, n_center + span + 1):
        ratio = cmath.exp(log_x - n * log_a)
        if abs(ratio - 1.0) < rtol:
            return True
    return False


def log_deriv_theta(
    a: complex,
    x: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
    zero_tol: float = 1e-8,
) -> complex:
    """x * d/dx log theta_a(x), via the term-by-term derivative of the product:

        sum_{n>=0} [ -x a^n / (1 - x a^n) + (a^(n+1)/x) / (1 - a^(n+1)/x) ]

    Raises NearSingularity when x sits within zero_tol of a zero of theta_a.
    """
    av = _as_complex(a, "a")
    xv = _as_complex(x, "x")
    if not (0.0 < abs(av) < 1.0):
        raise DomainError(f"theta base needs 0 < |a| < 1, got |a| = {abs(av):.6g}")
    if xv == 0:
        raise DomainError("log-derivative needs x != 0")
    if near_theta_zero(av, xv, zero_tol):
        raise NearSingularity(f"x = {xv!r} is within {zero_tol:g} of a theta_a zero")

    amag, xmag = abs(av), abs(xv)
    scale = 2.0 * (xmag + 1.0 / xmag + 1.0)
    total = 0j
    an = 1.0 + 0j
    for _ in range(policy.max_terms):
        t1 = -xv * an / (1.0 - xv * an)
        an = an * av
        w = an / xv
        total += t1 + w / (1.0 - w)
        if (
            abs(xv * an) < 0.5
            and abs(an / xv) < 0.5
            and scale * abs(an) / (1.0 - amag) < policy.tail_tol
        ):
            return total
    raise TruncationExceeded(
        f"log-derivative series did not meet tail {policy.tail_tol:g} "
        f"within {policy.max_terms} terms"
    )
