"""Classical limits: the k-labeled Poisson structure function, the central
(c = -2) bracket via logarithmic derivatives of tau, the finite-step limit
check connecting them to the quadratic exchange function, and mode-bracket
structure constants from annulus-resolved Laurent coefficients.

Structure function conventions (x stands for the ratio w/z throughout):

    g(x) = x^2/(1-x^2) - x^-2/(1-x^-2)
           + sum_{n>=0} [ -2 x^2 q^4n/(1 - x^2 q^4n)
                          + 2 x^2 q^(4n+2)/(1 - x^2 q^(4n+2))
                          + 2 x^-2 q^4n/(1 - x^-2 q^4n)
                          - 2 x^-2 q^(4n+2)/(1 - x^-2 q^(4n+2)) ]

    k-labeled bracket / (t t)   =  2 k m ln(q) g(x)            (k odd)
                                = -2 k m (2m-1) ln(q) g(x)     (k even)

    central bracket / (t t)     = -(ln q) [ x d/dx ln tau(q^(1/2) x)
                                            - (1/x) d/d(1/x) ln tau(q^(1/2)/x) ]

g(x) is odd under x -> 1/x and has simple poles on every circle |x| = |q|^j.

Mode extraction: on the annulus |x| in (|q|^n, |q|^(n-1)) the raw Laurent
coefficients of the structure function are taken by trapezoidal quadrature
on the circle of geometric-mean radius (spectrally accurate there).  The
raw coefficients of a single annulus are *not* coefficient-antisymmetric:
functional antisymmetry g(1/x) = -g(x) relates annulus n to its mirror
1 - n, and the leftover l-symmetric part is the central piece that this
package deliberately leaves out (central extensions are out of scope).
The bracket structure constants stored in ``ModeBracketTable.coefficients``
are therefore the antisymmetric part (g_l - g_-l)/2 of the raw data, which
is exactly what an antisymmetric bracket on commuting mode symbols can see;
the raw coefficients are kept alongside for expansion and residue checks.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, replace

from .elliptic import NomeParams
from .errors import (
    AnnulusContainsPole,
    DomainError,
    NearSingularity,
    QuadratureUnresolved,
    TruncationExceeded,
)
from .exchange import LevelParams, exchange_Y
from .qseries import (
    DEFAULT_POLICY,
    TruncationPolicy,
    _as_complex,
    log_deriv_theta,
    near_theta_zero,
)
from .report import CheckResult

__all__ = [
    "AnnulusLabel",
    "BetaLimitRequest",
    "ModeBracketTable",
    "poisson_series_g",
    "poisson_structure",
    "poisson_structure_center",
    "beta_limit_check",
    "laurent_modes",
    "format_mode_bracket",
]

_POLE_RTOL = 1e-8


def _validate_q(q: complex) -> complex:
    qv = _as_complex(q, "q")
    if not (0.0 < abs(qv) < 1.0):
        raise DomainError(f"|q| must lie in (0, 1), got {abs(qv):.6g}")
    return qv


def poisson_series_g(
    x: complex, q: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """The bracketed series g(x); geometric tail, poles at x^2 = q^(2j)."""
    xv = _as_complex(x, "x")
    qv = _validate_q(q)
    if xv == 0:
        raise DomainError("g needs x != 0")
    a = xv * xv
    b = 1.0 / a
    if near_theta_zero(qv * qv, a, _POLE_RTOL):
        raise NearSingularity(f"x = {xv!r} is within {_POLE_RTOL:g} of a pole x^2 = q^(2j)")
    q2 = qv * qv
    q4 = q2 * q2
    total = a / (1.0 - a) - b / (1.0 - b)
    t = 1.0 + 0j
    mag = abs(a) + abs(b)
    for _ in range(policy.max_terms):
        total += (
            -2.0 * a * t / (1.0 - a * t)
            + 2.0 * a * t * q2 / (1.0 - a * t * q2)
            + 2.0 * b * t / (1.0 - b * t)
            - 2.0 * b * t * q2 / (1.0 - b * t * q2)
        )
        t *= q4
        if (
            abs(a * t) < 0.5
            and abs(b * t) < 0.5
            and 8.0 * mag * abs(t) / (1.0 - abs(q4)) < policy.tail_tol
        ):
            return total
    raise TruncationExceeded(
        f"structure-function series did not meet tail {policy.tail_tol:g} "
        f"within {policy.max_terms} terms"
    )


def _check_mode_ints(m: int, k: int) -> tuple[int, int]:
    if int(m) != m or m == 0:
        raise DomainError("m must be a nonzero integer")
    if int(k) != k or k == 0:
        raise DomainError("k must be a nonzero integer")
    return int(m), int(k)


def poisson_structure(
    m: int,
    k: int,
    x: complex,
    q: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> complex:
    """Full k-labeled structure function: parity-dependent prefactor times g."""
    m, k = _check_mode_ints(m, k)
    qv = _validate_q(q)
    lnq = cmath.log(qv)
    if k % 2:
        prefactor = 2.0 * k * m * lnq
    else:
        prefactor = -2.0 * k * m * (2 * m - 1) * lnq
    return prefactor * poisson_series_g(x, qv, policy)


def poisson_structure_center(
    x: complex, q: complex, policy: TruncationPolicy = DEFAULT_POLICY
) -> complex:
    """The bracket on the center, reduced to theta log-derivatives.

    With L(y) = y d/dy log theta_{q^4}(y),

        x d/dx ln tau(q^(1/2) x) = -1 + 2 L(q^2 x^2) + 2 L(x^-2),

    so the displayed antisymmetric combination becomes

        -2 ln(q) [ L(q^2 x^2) + L(x^-2) - L(q^2 x^-2) - L(x^2) ].
    """
    xv = _as_complex(x, "x")
    qv = _validate_q(q)
    if xv == 0:
        raise DomainError("needs x != 0")
    q4 = qv**4
    x2 = xv * xv
    q2 = qv * qv

    def L(y: complex) -> complex:
        return log_deriv_theta(q4, y, policy)

    return -2.0 * cmath.log(qv) * (L(q2 * x2) + L(1.0 / x2) - L(q2 / x2) - L(x2))


@dataclass(frozen=True)
class BetaLimitRequest:
    """Finite-step approach to the commuting point: q^(2k) = p^(1 - beta/2),
    so p = q^(4k / (2 - beta)), with beta in (0, 0.1] and |p| < 1."""

    m: int
    k: int
    beta: float
    q: complex

    def __post_init__(self) -> None:
        _check_mode_ints(self.m, self.k)
        _validate_q(self.q)
        if not (0.0 < self.beta <= 0.1):
            raise DomainError(f"beta must lie in (0, 0.1], got {self.beta!r}")
        if not (abs(self.p) < 1.0):
            raise DomainError(
                f"derived nome |p| = {abs(self.p):.6g} >= 1 (k must be positive here)"
            )

    @property
    def p(self) -> complex:
        exponent = 4.0 * self.k / (2.0 - self.beta)
        return cmath.exp(exponent * cmath.log(complex(self.q)))


def _log_y_over_beta(req: BetaLimitRequest, x: complex, policy: TruncationPolicy) -> complex:
    nome = NomeParams(req.p, req.q, allow_p_outside_disk=True)
    y = exchange_Y(LevelParams(req.m, nome), x, policy)
    return cmath.log(y) / req.beta


def beta_limit_check(
    req: BetaLimitRequest,
    x: complex,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> CheckResult:
    """Compare ln(Y)/beta against the k-labeled structure function.

    Runs at beta and beta/10; first-order convergence means the error ratio
    sits near 10.  Reported error is |log10(ratio) - 1| with tolerance
    log10(2), i.e. the ratio must land in [5, 20].
    """
    t0 = time.perf_counter()
    xv = _as_complex(x, "x")
    target = poisson_structure(req.m, req.k, xv, req.q, policy)
    d_coarse = _log_y_over_beta(req, xv, policy)
    d_fine = _log_y_over_beta(replace(req, beta=req.beta / 10.0), xv, policy)
    err_coarse = abs(d_coarse - target)
    err_fine = abs(d_fine - target)
    if err_fine == 0.0:
        order_defect = 0.0
        ratio = math.inf
    else:
        ratio = err_coarse / err_fine
        order_defect = abs(math.log10(ratio) - 1.0)
    tol = math.log10(2.0)
    return CheckResult(
        check_id="beta-limit",
        params={"m": req.m, "k": req.k, "beta": req.beta, "q": req.q, "x": xv},
        max_abs_error=float(order_defect),
        tolerance=tol,
        passed=bool(order_defect <= tol and err_fine < err_coarse),
        wall_time_s=time.perf_counter() - t0,
        info={
            "target": target,
            "lnY_over_beta": d_coarse,
            "lnY_over_beta_fine": d_fine,
            "err_beta": err_coarse,
            "err_beta_over_10": err_fine,
            "error_ratio": ratio,
        },
    )


@dataclass(frozen=True)
class AnnulusLabel:
    """Selects the annulus |x| in (|q|^n_ann, |q|^(n_ann - 1)) between two
    consecutive pole circles of the structure function."""

    n_ann: int

    def __post_init__(self) -> None:
        if int(self.n_ann) != self.n_ann:
            raise DomainError("annulus label must be an integer")
        object.__setattr__(self, "n_ann", int(self.n_ann))

    def radius(self, q: complex) -> float:
        """Geometric-mean radius |q|^(n_ann - 1/2), farthest from both poles."""
        return abs(q) ** (self.n_ann - 0.5)

    def mirror(self) -> "AnnulusLabel":
        """The annulus reached by x -> 1/x."""
        return AnnulusLabel(1 - self.n_ann)


@dataclass(frozen=True)
class ModeBracketTable:
    """Structure constants of {t_n, t_m} = sum_l g_l t_(n+l) t_(m-l).

    ``coefficients`` holds the antisymmetric part (satisfying g_l = -g_-l),
    ``raw_coefficients`` the plain contour values on the labeled annulus.
    """

    annulus: AnnulusLabel
    coefficients: dict[int, complex]
    raw_coefficients: dict[int, complex]
    which: str
    params: dict

    def antisymmetry_violation(self) -> float:
        worst = 0.0
        for l, g in self.coefficients.items():
            worst = max(worst, abs(g + self.coefficients.get(-l, 0.0)))
        return worst


_WHICH_ALIASES = {
    "klimit": "klimit",
    "theorem7": "klimit",
    "center": "center",
    "ps1": "center",
}


def _structure_integrand(which: str, q: complex, m: int | None, k: int | None, policy):
    kind = _WHICH_ALIASES.get(which)
    if kind is None:
        raise DomainError(f"unknown structure function {which!r}")
    if kind == "klimit":
        if m is None or k is None:
            raise DomainError("the k-labeled structure function needs m and k")

        def f(z: complex) -> complex:
            return poisson_structure(m, k, z, q, policy)

    else:

        def f(z: complex) -> complex:
            return poisson_structure_center(z, q, policy)

    return kind, f


def _contour_coefficients(f, radius: float, l_max: int, nodes: int) -> dict[int, complex]:
    vals = []
    for j in range(nodes):
        z = radius * cmath.exp(2j * math.pi * j / nodes)
        vals.append(f(z))
    out: dict[int, complex] = {}
    for l in range(-l_max, l_max + 1):
        acc = 0j
        for j, v in enumerate(vals):
            acc += v * cmath.exp(-2j * math.pi * j * l / nodes)
        out[l] = acc / (nodes * radius**l)
    return out


def laurent_modes(
    which: str,
    *,
    q: complex,
    annulus: AnnulusLabel,
    l_range: tuple[int, int] = (-8, 8),
    quadrature_points: int = 256,
    m: int | None = None,
    k: int | None = None,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> ModeBracketTable:
    """Laurent coefficients g_l of a structure function on one annulus.

    g_l = (1/2 pi i) oint_{|x| = r} x^(-l-1) f(x) dx by the trapezoidal rule
    on the circle of radius r = |q|^(n_ann - 1/2), computed twice (N and 2N
    nodes); raises QuadratureUnresolved when doubling moves any coefficient
    by more than 1e-9, AnnulusContainsPole when r is within 1e-6 of a pole
    circle |q|^j.
    """
    qv = _validate_q(q)
    kind, f = _structure_integrand(which, qv, m, k, policy)
    lo, hi = int(l_range[0]), int(l_range[1])
    l_max = max(abs(lo), abs(hi))
    if quadrature_points < 4 * (l_max + 1):
        raise DomainError(
            f"quadrature_points = {quadrature_points} < 4 (max|l| + 1) = {4 * (l_max + 1)}"
        )
    r = annulus.radius(qv)
    jc = round(math.log(r) / math.log(abs(qv)))
    for j in (jc - 1, jc, jc + 1):
        if abs(r - abs(qv) ** j) < 1e-6:
            raise AnnulusContainsPole(
                f"radius {r:.8g} within 1e-6 of pole circle |q|^{j}"
            )
    coarse = _contour_coefficients(f, r, l_max, quadrature_points)
    fine = _contour_coefficients(f, r, l_max, 2 * quadrature_points)
    drift = max(abs(coarse[l] - fine[l]) for l in fine)
    if drift > 1e-9:
        raise QuadratureUnresolved(
            f"doubling {quadrature_points} nodes moved a coefficient by {drift:.3e}"
        )
    odd = {l: 0.5 * (fine[l] - fine[-l]) for l in fine}
    return ModeBracketTable(
        annulus=annulus,
        coefficients=odd,
        raw_coefficients=fine,
        which=kind,
        params={
            "q": qv,
            "m": m,
            "k": k,
            "radius": r,
            "nodes": 2 * quadrature_points,
            "drift": drift,
        },
    )


def format_mode_bracket(
    table: ModeBracketTable,
    n: int,
    m_mode: int,
    cutoff: int,
    suppress_below: float = 1e-12,
) -> dict:
    """Deterministic rendering of {t_n, t_m} = sum_l g_l t_(n+l) t_(m-l),
    truncated at |l| <= cutoff; coefficients below 1e-12 are suppressed.

    For n == m_mode the antisymmetric pairs (l, -l) multiply the same
    commuting monomial and cancel; they are listed under "cancelled_pairs"
    instead of appearing as terms.
    """
    if int(n) != n or int(m_mode) != m_mode or int(cutoff) != cutoff or cutoff < 0:
        raise DomainError("mode indices must be integers and cutoff >= 0")
    terms = []
    cancelled: list[list[int]] = []
    for l in sorted(l for l in table.coefficients if abs(l) <= cutoff):
        g = table.coefficients[l]
        if abs(g) <= suppress_below:
            continue
        if n == m_mode:
            if l > 0:
                cancelled.append([-l, l])
            continue
        terms.append(
            {
                "l": l,
                "coeff": g,
                "monomial": f"t[{n + l}]*t[{m_mode - l}]",
            }
        )
    if terms:
        parts = [
            f"({t['coeff'].real:.12g}{t['coeff'].imag:+.12g}j) {t['monomial']}"
            for t in terms
        ]
        rhs = " + ".join(parts)
    else:
        rhs = "0"
    text = f"{{t[{n}], t[{m_mode}]}} = {rhs}"
    out = {
        "bracket": [n, m_mode],
        "annulus": table.annulus.n_ann,
        "terms": terms,
        "text": text,
    }
    if n == m_mode and cancelled:
        out["cancelled_pairs"] = cancelled
    return out
