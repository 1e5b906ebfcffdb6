"""Eight-vertex matrix tests: normalization factors, assembly, transposes,
and the crossing / nome-shift / Yang-Baxter identity checks."""

import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellex.elliptic import EllipticParams, NomeParams, baxter_entries, param_map
from ellex.errors import NearSingularity, NonConvergentBase, SingularMatrix
from ellex.exchange import shift_factor_F
from ellex.qseries import TruncationPolicy
from ellex.rmatrix import (
    EIGHT_VERTEX_PATTERN,
    CentralCharge,
    RMatrix4,
    check_crossing,
    check_pshift,
    check_ybe,
    kappa_inv,
    mu_inv,
    partial_transpose,
    pshift_scalar,
    r_plus,
    r_plus_star,
    rmatrix_inverse,
    tau_fn,
    tau_fn_pochhammer,
)

NOME = NomeParams(0.0278640785937287, -0.4077049890725035)  # modulus 0.6, lambda 1.0


def qp1_brute(x, b, terms=800):
    r = 1.0 + 0j
    t = 1.0 + 0j
    for _ in range(terms):
        r *= 1 - x * t
        t *= b
    return r


# --- tau ---------------------------------------------------------------------


def test_tau_at_unit_square_points():
    # x^2 = 1 makes numerator and denominator coincide, so tau = 1/x
    for q in (0.4, -0.45):
        assert tau_fn(1.0, q) == pytest.approx(1.0)
        assert tau_fn(-1.0, q) == pytest.approx(-1.0)


def test_tau_reflection_product():
    q, x = 0.4, 1.3
    assert tau_fn(x, q) * tau_fn(1.0 / x, q) == pytest.approx(1.0, abs=1e-11)


def test_tau_dual_representation():
    # frozen from the brute pochhammer-ratio oracle at q=0.35, x=0.8+0.1j
    val = tau_fn(0.8 + 0.1j, 0.35)
    assert val == pytest.approx(1.7039635984430153 - 0.8119008509839601j, abs=1e-12)
    for q, x in [(0.35, 0.8 + 0.1j), (0.4, 1.3), (-0.45, 0.9 - 0.2j)]:
        a, b = tau_fn(x, q), tau_fn_pochhammer(x, q)
        assert abs(a - b) <= 1e-11 * abs(a)


# --- mu, kappa ---------------------------------------------------------------


def test_kappa_reflection_inverse():
    y = 1.1**2
    prod = kappa_inv(y, 0.2, 0.4) * kappa_inv(1.0 / y, 0.2, 0.4)
    assert prod == pytest.approx(1.0, abs=1e-10)


def test_kappa_matches_brute_double_product():
    # frozen from a nested 120x120 brute product at p=0.2, q=0.4, x=1.1
    assert kappa_inv(1.1**2, 0.2, 0.4) == pytest.approx(1.02464040132512, abs=1e-12)


def test_mu_inv_finite_nonzero_on_grid():
    for x in (0.55, 0.8, 1.1 + 0.2j, 1.9):
        v = mu_inv(x, 0.2, 0.4)
        assert np.isfinite(v.real) and np.isfinite(v.imag)
        assert abs(v) > 0
    # x = 0.5 sits exactly on the q^2 x^2 = p^2 zero spiral for these (p, q)
    with pytest.raises(NearSingularity):
        mu_inv(0.5, 0.2, 0.4)


# --- assembly ----------------------------------------------------------------


def test_r_plus_degenerates_to_permutation_at_x_one():
    # the entries collapse to the permutation pattern a = c = 1, b = d = 0 as
    # x -> 1, while the scalar normalization has a simple pole there (the tau
    # denominator theta_{q^4}(x^2) vanishes at x = 1), so r_plus(1) reports it
    with pytest.raises(NearSingularity):
        r_plus(1.0, NOME)
    r = r_plus(1.0 + 1e-4, NOME)
    a, b, c, d = r.abcd()
    assert abs(b / a) < 1e-3 and abs(d / a) < 1e-3
    assert abs(c / a - 1.0) < 1e-3


def test_r_plus_sparsity_exact():
    r = r_plus(1.23 + 0.1j, NOME)
    assert r.sparsity_violation() == 0.0
    assert np.count_nonzero(r.m) == 8


def test_r_plus_two_path_assembly():
    # entries from the u-space elliptic path, normalization from the q-series path
    ep = EllipticParams(0.6, 1.0, 0.35)
    nome, x = param_map(ep)
    a, b, c, d = baxter_entries(ep)
    scale = tau_fn(cmath.sqrt(nome.q) / x, nome.q) * mu_inv(x, nome.p, nome.q)
    independent = RMatrix4.from_eight_vertex(a, b, c, d, scale)
    direct = r_plus(x, nome)
    assert np.max(np.abs(independent.m - direct.m)) < 1e-10


def test_r_plus_star_trivial_charge():
    r0 = r_plus(1.2, NOME)
    rs = r_plus_star(1.2, NOME, CentralCharge(0.0))
    assert np.max(np.abs(r0.m - rs.m)) < 1e-13


def test_r_plus_star_level_one_explicit_nome():
    nome = NomeParams(0.15, -0.5)
    charge = CentralCharge.from_level(1, nome)
    # p q^(-2c) = p^(1-2m) q^4 = q^4 / p for m = 1
    expected_nome = nome.q**4 / nome.p
    rs = r_plus_star(1.1, nome, charge)
    direct = r_plus(1.1, NomeParams(expected_nome, nome.q))
    assert np.max(np.abs(rs.m - direct.m)) < 1e-12


def test_r_plus_star_c_minus_two_stays_in_disk():
    # c = -2 shifts the nome to p q^4, strictly inside p < 1
    starred = CentralCharge(-2.0).starred_nome(NOME)
    assert starred == pytest.approx(NOME.p * NOME.q**4, rel=1e-12)
    assert 0 < abs(starred) < abs(NOME.p)
    r_plus_star(1.2, NOME, CentralCharge(-2.0))  # converges


def test_r_plus_star_outside_disk_reports():
    nome = NomeParams(0.05, -0.7)  # q^4/p = 4.8 > 1
    charge = CentralCharge.from_level(1, nome)
    with pytest.raises(NonConvergentBase):
        r_plus_star(1.1, nome, charge)


# --- transposes and inversion --------------------------------------------------


@given(
    st.lists(
        st.complex_numbers(max_magnitude=5.0, allow_nan=False, allow_infinity=False),
        min_size=16,
        max_size=16,
    )
)
@settings(max_examples=25, deadline=None)
def test_partial_transpose_involutive_and_composes(vals):
    m = RMatrix4(np.array(vals, dtype=complex).reshape(4, 4))
    for slot in (1, 2):
        twice = partial_transpose(partial_transpose(m, slot), slot)
        assert np.array_equal(twice.m, m.m)
    both = partial_transpose(partial_transpose(m, 1), 2)
    assert np.array_equal(both.m, m.m.T)


def test_partial_transpose_on_r_plus():
    r = r_plus(1.2 + 0.3j, NOME)
    both = partial_transpose(partial_transpose(r, 1), 2)
    assert np.max(np.abs(both.m - r.m.T)) == 0.0
    # symmetric layout: the two slot transposes coincide here
    assert np.max(np.abs(partial_transpose(r, 1).m - partial_transpose(r, 2).m)) == 0.0


def test_inverse_reports_condition_and_rejects_singular():
    r = r_plus(1.2, NOME)
    inv, cond = rmatrix_inverse(r)
    assert np.max(np.abs(inv.m @ r.m - np.eye(4))) < 1e-12
    assert cond > 1.0
    singular = RMatrix4.from_eight_vertex(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(SingularMatrix):
        rmatrix_inverse(singular)


# --- identity checks -----------------------------------------------------------


def test_crossing_residual_small():
    res = check_crossing(1.17 + 0.21j, NOME)
    assert res.passed and res.max_abs_error < 1e-12


def test_crossing_residual_stable_under_tighter_tail():
    x = 0.93 - 0.18j
    r1 = check_crossing(x, NOME, TruncationPolicy(512, 1e-12))
    r2 = check_crossing(x, NOME, TruncationPolicy(512, 1e-13))
    assert abs(r1.max_abs_error - r2.max_abs_error) < 1e-11


def test_crossing_error_path_near_singular():
    # x on the theta zero spiral of the prefactor denominator
    q = NOME.q
    x = cmath.sqrt(q**4)  # x^2 = q^4, a zero of theta_{q^4}(x^2)
    with pytest.raises((NearSingularity, SingularMatrix)):
        check_crossing(x, NOME)


def test_pshift_relation_and_scalar_consistency():
    x = 1.21 + 0.14j
    res = check_pshift(x, NOME)
    assert res.passed and res.max_abs_error < 1e-12
    # F(x) of the matrix relation equals the exchange module's four-tau product
    f_here = pshift_scalar(x, NOME)
    f_other = shift_factor_F(x, NOME)
    assert abs(f_here - f_other) <= 1e-12 * abs(f_here)
    assert f_here * (1.0 / f_here) == pytest.approx(1.0, abs=1e-12)


def test_ybe_residual_generic():
    res = check_ybe(1.15, 0.9, NOME)
    assert res.passed and res.max_abs_error < 1e-11


def test_ybe_degenerate_point_consistency():
    # at x = 1 the inner matrix is the slot permutation and the relation
    # P12 R13(y) R23(y) = R23(y) R13(y) P12 holds exactly; the normalized
    # matrix itself is on its x = 1 pole and reports NearSingularity
    with pytest.raises(NearSingularity):
        check_ybe(1.0, 0.85, NOME)
    perm = RMatrix4.from_eight_vertex(1.0, 0.0, 1.0, 0.0).m
    ry = r_plus(0.85, NOME).m
    eye2 = np.eye(2)
    s23 = np.zeros((8, 8))
    for s1 in range(2):
        for s2 in range(2):
            for s3 in range(2):
                s23[4 * s1 + 2 * s2 + s3, 4 * s1 + 2 * s3 + s2] = 1.0
    p12 = np.kron(perm, eye2)
    r23 = np.kron(eye2, ry)
    r13 = s23 @ np.kron(ry, eye2) @ s23  # x = 1 makes the 13 argument equal y
    resid = np.max(np.abs(p12 @ r13 @ r23 - r23 @ r13 @ p12))
    assert resid < 1e-11


def test_ybe_residual_scales_with_tail_tol():
    tight = check_ybe(1.1, 0.95, NOME, TruncationPolicy(512, 1e-15))
    loose = check_ybe(1.1, 0.95, NOME, TruncationPolicy(512, 1e-7))
    assert tight.max_abs_error < 1e-12
    assert loose.max_abs_error < 1e-4
    assert loose.max_abs_error >= tight.max_abs_error


def test_eight_vertex_pattern_mask():
    assert EIGHT_VERTEX_PATTERN.sum() == 8
    m = RMatrix4.from_eight_vertex(1, 2, 3, 4)
    assert m.sparsity_violation() == 0.0
