"""The fully normalized eight-vertex matrix R+(x) and its identity checks.

Assembly:  R+(x) = tau(q^(1/2)/x) * (1/mu(x)) * M(x)   with

    M = [[a, 0, 0, d],
         [0, b, c, 0],
         [0, c, b, 0],
         [d, 0, 0, a]]     (basis order ++, +-, -+, --)

and entries evaluated through theta quotients of the nome p, which makes
the whole matrix a function of the multiplicative triple (x, q, p) and lets
every identity be checked at shifted arguments (x q^-2, x p, products):

    a = T(-1/(q x)) / T(-1/q),   b = T(x) / T(-1/q),
    c = 1,                       d = p^(1/2) T(-1/(q x)) T(x),

with T(y) = y theta_{p^2}(y^-2)/theta_{p^2}(p y^-2) from the elliptic module.

The matrix is symmetric and invariant under conjugation by the slot swap,
so R_21 = R_12 and both partial transposes coincide on it; the checks below
still apply the transposes literally.
"""

from __future__ import annotations

import cmath
import time
from dataclasses import dataclass

import numpy as np

from .elliptic import NomeParams, snh_core
from .errors import DomainError, NearSingularity, NonConvergentBase, SingularMatrix
from .qseries import (
    DEFAULT_POLICY,
    TruncationPolicy,
    _as_complex,
    near_theta_zero,
    qpochhammer,
    theta,
)
from .report import CheckResult

__all__ = [
    "RMatrix4",
    "CentralCharge",
    "tau_fn",
    "tau_fn_pochhammer",
    "mu_inv",
    "kappa_inv",
    "pshift_scalar",
    "r_plus",
    "r_plus_star",
    "partial_transpose",
    "rmatrix_inverse",
    "check_crossing",
    "check_pshift",
    "check_ybe",
]

_COND_LIMIT = 1e12

# boolean mask of the eight admissible positions
EIGHT_VERTEX_PATTERN = np.array(
    [
        [True, False, False, True],
        [False, True, True, False],
        [False, True, True, False],
        [True, False, False, True],
    ]
)


@dataclass(frozen=True)
class RMatrix4:
    """4x4 complex matrix in the eight-vertex layout (rows/cols ++, +-, -+, --)."""

    m: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.m, dtype=complex)
        if arr.shape != (4, 4):
            raise DomainError(f"RMatrix4 needs shape (4, 4), got {arr.shape}")
        if not np.all(np.isfinite(arr.view(float))):
            raise DomainError("RMatrix4 entries must be finite")
        object.__setattr__(self, "m", arr)

    @classmethod
    def from_eight_vertex(
        cls, a: complex, b: complex, c: complex, d: complex, scale: complex = 1.0
    ) -> "RMatrix4":
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0] = m[3, 3] = a
        m[1, 1] = m[2, 2] = b
        m[1, 2] = m[2, 1] = c
        m[0, 3] = m[3, 0] = d
        return cls(m * scale)

    def sparsity_violation(self) -> float:
        """Largest modulus found on the eight forbidden positions."""
        return float(np.max(np.abs(self.m[~EIGHT_VERTEX_PATTERN])))

    def abcd(self) -> tuple[complex, complex, complex, complex]:
        return (
            complex(self.m[0, 0]),
            complex(self.m[1, 1]),
            complex(self.m[1, 2]),
            complex(self.m[0, 3]),
        )


@dataclass(frozen=True)
class CentralCharge:
    """Central charge c, tied to (p, q, m) through q^(c+2) = p^m.

    When built by ``from_level`` the starred nome p q^(-2c) is carried in
    the exact integer-power form p^(1-2m) q^4.
    """

    c: complex
    exact_m: int | None = None

    @classmethod
    def from_level(cls, m: int, nome: NomeParams) -> "CentralCharge":
        if int(m) != m or m == 0:
            raise DomainError("level m must be a nonzero integer")
        m = int(m)
        c = m * cmath.log(nome.p) / cmath.log(nome.q) - 2.0
        resid = abs(nome.q ** (c + 2.0) - nome.p**m)
        if resid > 1e-12 * max(1.0, abs(nome.p) ** abs(m)):
            raise DomainError(f"q^(c+2) = p^m violated by {resid:.2e}")
        return cls(c, m)

    def starred_nome(self, nome: NomeParams) -> complex:
        if self.exact_m is not None:
            return nome.p ** (1 - 2 * self.exact_m) * nome.q**4
        return nome.p * cmath.exp(-2.0 * self.c * cmath.log(nome.q))


def tau_fn(
    x: complex, q: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """tau(x) = x^-1 theta_{q^4}(x^2 q) / theta_{q^4}(x^-2 q)."""
    xv = _as_complex(x, "x")
    qv = _as_complex(q, "q")
    if xv == 0:
        raise DomainError("tau needs x != 0")
    q4 = qv**4
    den_arg = qv / (xv * xv)
    if near_theta_zero(q4, den_arg):
        raise NearSingularity(f"tau denominator zero near x = {xv!r}")
    return theta(q4, xv * xv * qv, policy) / (xv * theta(q4, den_arg, policy))


def tau_fn_pochhammer(
    x: complex, q: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """tau in its explicit four-product form,

        x^-1 (q x^2; q^4) (q^3 x^-2; q^4) / [ (q x^-2; q^4) (q^3 x^2; q^4) ],

    kept as an independent code path from the theta-quotient form.
    """
    xv = _as_complex(x, "x")
    qv = _as_complex(q, "q")
    if xv == 0:
        raise DomainError("tau needs x != 0")
    q4 = (qv**4,)
    x2 = xv * xv
    num = qpochhammer(qv * x2, q4, policy) * qpochhammer(qv**3 / x2, q4, policy)
    den = qpochhammer(qv / x2, q4, policy) * qpochhammer(qv**3 * x2, q4, policy)
    if den == 0:
        raise NearSingularity(f"tau denominator vanished at x = {xv!r}")
    return num / (xv * den)


def kappa_inv(
    x2: complex,
    p: complex,
    q: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """1/kappa as the eight-fold double-base product in the bases {p, q^4}.

    Takes the squared argument x^2 directly.
    """
    y = _as_complex(x2, "x2")
    pv = _as_complex(p, "p")
    qv = _as_complex(q, "q")
    if y == 0:
        raise DomainError("kappa_inv needs x2 != 0")
    bases = (pv, qv**4)
    q2, q4 = qv**2, qv**4
    num = (
        qpochhammer(q4 / y, bases, policy)
        * qpochhammer(q2 * y, bases, policy)
        * qpochhammer(pv / y, bases, policy)
        * qpochhammer(pv * q2 * y, bases, policy)
    )
    den = (
        qpochhammer(q4 * y, bases, policy)
        * qpochhammer(q2 / y, bases, policy)
        * qpochhammer(pv * y, bases, policy)
        * qpochhammer(pv * q2 / y, bases, policy)
    )
    if den == 0:
        raise NearSingularity(f"kappa_inv denominator vanished at x2 = {y!r}")
    return num / den


def mu_inv(
    x: complex,
    p: complex,
    q: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """1/mu(x) = 1/kappa(x^2) * (p^2;p^2)/(p;p)^2
    * theta_{p^2}(p x^2) theta_{p^2}(q^2) / theta_{p^2}(q^2 x^2)."""
    xv = _as_complex(x, "x")
    pv = _as_complex(p, "p")
    qv = _as_complex(q, "q")
    if xv == 0:
        raise DomainError("mu_inv needs x != 0")
    x2 = xv * xv
    p2 = pv * pv
    den_arg = qv * qv * x2
    if near_theta_zero(p2, den_arg):
        raise NearSingularity(f"mu denominator zero near x = {xv!r}")
    const = qpochhammer(p2, (p2,), policy) / qpochhammer(pv, (pv,), policy) ** 2
    quotient = (
        theta(p2, pv * x2, policy)
        * theta(p2, qv * qv, policy)
        / theta(p2, den_arg, policy)
    )
    return kappa_inv(x2, pv, qv, policy) * const * quotient


def _entries(
    x: complex, nome: NomeParams, policy: TruncationPolicy
) -> tuple[complex, complex, complex, complex]:
    """Eight-vertex entries at multiplicative argument x (see module docstring)."""
    y_lam = -1.0 / nome.q
    y_a = y_lam / x
    t_lam = snh_core(y_lam, nome.p, policy)
    if abs(t_lam) < 1e-10:
        raise NearSingularity("snh(lambda) below tolerance in entry assembly")
    t_a = snh_core(y_a, nome.p, policy)
    t_x = snh_core(x, nome.p, policy)
    a = t_a / t_lam
    b = t_x / t_lam
    d = cmath.sqrt(nome.p) * t_a * t_x
    return a, b, 1.0 + 0j, d


def r_plus(
    x: complex,
    nome: NomeParams,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> RMatrix4:
    """Normalized matrix R+(x) at nome pair (p, q)."""
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("r_plus needs x != 0")
    if not (abs(nome.p) < 1.0):
        raise NonConvergentBase(
            f"|p| = {abs(nome.p):.6g} >= 1: normalization products diverge"
        )
    scale = tau_fn(cmath.sqrt(nome.q) / xv, nome.q, policy) * mu_inv(
        xv, nome.p, nome.q, policy
    )
    a, b, c, d = _entries(xv, nome, policy)
    return RMatrix4.from_eight_vertex(a, b, c, d, scale)


def r_plus_star(
    x: complex,
    nome: NomeParams,
    charge: CentralCharge,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> RMatrix4:
    """R+ evaluated at the shifted nome p q^(-2c).

    Raises NonConvergentBase when the shifted nome leaves the unit disk;
    no analytic continuation is attempted.
    """
    p_star = charge.starred_nome(nome)
    if not (0.0 < abs(p_star) < 1.0):
        raise NonConvergentBase(
            f"starred nome p q^(-2c) has modulus {abs(p_star):.6g}, outside (0, 1)"
        )
    return r_plus(x, NomeParams(p_star, nome.q), policy)


def partial_transpose(mat: RMatrix4 | np.ndarray, slot: int) -> RMatrix4:
    """Transpose on one tensor slot of the 2x2 (x) 2x2 structure; involutive."""
    if slot not in (1, 2):
        raise DomainError(f"slot must be 1 or 2, got {slot!r}")
    arr = mat.m if isinstance(mat, RMatrix4) else np.asarray(mat, dtype=complex)
    t = arr.reshape(2, 2, 2, 2)
    t = t.transpose(2, 1, 0, 3) if slot == 1 else t.transpose(0, 3, 2, 1)
    return RMatrix4(t.reshape(4, 4))


def rmatrix_inverse(mat: RMatrix4 | np.ndarray) -> tuple[RMatrix4, float]:
    """Inverse with condition-number reporting; raises SingularMatrix when
    the condition number exceeds 1e12 or elimination fails."""
    arr = mat.m if isinstance(mat, RMatrix4) else np.asarray(mat, dtype=complex)
    cond = float(np.linalg.cond(arr))
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularMatrix(f"condition number {cond:.3e} exceeds {_COND_LIMIT:g}")
    try:
        inv = np.linalg.inv(arr)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix(str(exc)) from exc
    return RMatrix4(inv), cond


def pshift_scalar(
    x: complex, nome: NomeParams, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """The scalar F(x) relating R(x p) = F(x)^-1 R(x), in collapsed form:

        q^-2 * th(x^2 q^2) th(x^-2 q^2) th(x^2 q^2 p) th(x^-2 q^2 / p)
             / [ th(x^-2) th(x^2) th(x^-2 / p) th(x^2 p) ]

    with th = theta_{q^4}. All square roots of the four-tau definition cancel
    exactly, so this form is branch-free; the exchange module evaluates the
    literal four-tau product as an independent path.
    """
    xv = _as_complex(x, "x")
    if xv == 0:
        raise DomainError("pshift_scalar needs x != 0")
    p, q = nome.p, nome.q
    q4 = q**4
    x2 = xv * xv
    ix2 = 1.0 / x2
    num_args = (x2 * q * q, ix2 * q * q, x2 * q * q * p, ix2 * q * q / p)
    den_args = (ix2, x2, ix2 / p, x2 * p)
    for arg in den_args:
        if near_theta_zero(q4, arg):
            raise NearSingularity(f"p-shift factor singular at x = {xv!r}")
    num = 1.0 + 0j
    den = 1.0 + 0j
    for arg in num_args:
        num *= theta(q4, arg, policy)
    for arg in den_args:
        den *= theta(q4, arg, policy)
    return num / (q * q * den)


def _timed(check_id: str, params: dict, err: float, tol: float, t0: float, **info):
    return CheckResult(
        check_id=check_id,
        params=params,
        max_abs_error=float(err),
        tolerance=float(tol),
        passed=bool(err <= tol),
        wall_time_s=time.perf_counter() - t0,
        info=info,
    )


def check_crossing(
    x: complex,
    nome: NomeParams,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float = 1e-9,
) -> CheckResult:
    """Crossing symmetry: (R(x)^-1)^t1 = (R(x q^-2)^t1)^-1, max entry residual."""
    t0 = time.perf_counter()
    xv = _as_complex(x, "x")
    r_here = r_plus(xv, nome, policy)
    r_shift = r_plus(xv / nome.q**2, nome, policy)
    inv_here, cond1 = rmatrix_inverse(r_here)
    lhs = partial_transpose(inv_here, 1)
    rhs, cond2 = rmatrix_inverse(partial_transpose(r_shift, 1))
    err = float(np.max(np.abs(lhs.m - rhs.m)))
    params = {"x": xv, "p": nome.p, "q": nome.q}
    scale = float(max(np.max(np.abs(lhs.m)), np.max(np.abs(rhs.m))))
    return _timed(
        "crossing", params, err, tolerance, t0, cond=max(cond1, cond2), scale=scale
    )


def check_pshift(
    x: complex,
    nome: NomeParams,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float = 1e-9,
) -> CheckResult:
    """Nome-shift covariance: F(x) * R(x p) = R(x), max entry residual."""
    t0 = time.perf_counter()
    xv = _as_complex(x, "x")
    factor = pshift_scalar(xv, nome, policy)
    lhs = factor * r_plus(xv * nome.p, nome, policy).m
    rhs = r_plus(xv, nome, policy).m
    err = float(np.max(np.abs(lhs - rhs)))
    params = {"x": xv, "p": nome.p, "q": nome.q}
    scale = float(max(np.max(np.abs(lhs)), np.max(np.abs(rhs))))
    return _timed("p-shift", params, err, tolerance, t0, scale=scale)


def _swap23() -> np.ndarray:
    s = np.zeros((8, 8))
    for s1 in range(2):
        for s2 in range(2):
            for s3 in range(2):
                s[4 * s1 + 2 * s2 + s3, 4 * s1 + 2 * s3 + s2] = 1.0
    return s


_S23 = _swap23()
_I2 = np.eye(2)


def check_ybe(
    x: complex,
    y: complex,
    nome: NomeParams,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tolerance: float = 1e-9,
) -> CheckResult:
    """Yang-Baxter residual of R12(x) R13(xy) R23(y) = R23(y) R13(xy) R12(x).

    Embeddings are slot-major (slot 1 varies slowest): R12 = R (x) I,
    R23 = I (x) R, and R13 is R12 conjugated by the swap of slots 2 and 3.
    """
    t0 = time.perf_counter()
    xv = _as_complex(x, "x")
    yv = _as_complex(y, "y")
    rx = r_plus(xv, nome, policy).m
    ry = r_plus(yv, nome, policy).m
    rxy = r_plus(xv * yv, nome, policy).m
    r12 = np.kron(rx, _I2)
    r23 = np.kron(_I2, ry)
    r13 = _S23 @ np.kron(rxy, _I2) @ _S23
    err = float(np.max(np.abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)))
    params = {"x": xv, "y": yv, "p": nome.p, "q": nome.q}
    scale = float(max(np.max(np.abs(rx)), np.max(np.abs(ry)), np.max(np.abs(rxy))))
    return _timed("yang-baxter", params, err, tolerance, t0, scale=scale)
