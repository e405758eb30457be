import math

import pytest

from kspecfun.errors import DomainError
from kspecfun.kbessel import (
    BesselParams,
    _gmk_log_pairs,
    eval_gmk_bessel,
    eval_k_bessel_first,
    gmk_bessel_term,
)
from kspecfun.kgamma import k_gamma, k_pochhammer

UNIT_J = BesselParams(k=1, nu=0, gamma=1, lambda1=1, c=-1, b=1)


def test_classical_j0():
    r = eval_gmk_bessel(UNIT_J, 2.0, tol=1e-14)
    assert r.converged
    assert r.value == pytest.approx(0.22389077914123566805, rel=1e-13)


def test_classical_i1():
    p = BesselParams(k=1, nu=1, gamma=1, lambda1=1, c=1, b=1)
    r = eval_gmk_bessel(p, 1.0, tol=1e-14)
    assert r.value == pytest.approx(0.56515910399248502721, rel=1e-13)


def test_classical_j0_cancellation():
    # z = 10 loses ~4 digits to alternation; extended-precision path must hold
    r = eval_gmk_bessel(UNIT_J, 10.0, tol=1e-15)
    assert r.value == pytest.approx(-0.2459357644513483352, rel=1e-12)


def test_general_parameters_value():
    # 60-digit brute-force reference
    p = BesselParams(k=2, nu=0.5, gamma=1.5, lambda1=2, c=-1, b=2)
    r = eval_gmk_bessel(p, 3.0, tol=1e-14)
    assert r.value == pytest.approx(-0.029639810584798740155, rel=1e-12)


def test_z_zero():
    p = BesselParams(k=1, nu=1, gamma=1, lambda1=1, c=-1, b=1)
    r = eval_gmk_bessel(p, 0.0)
    assert r.value == 0.0
    assert r.converged and r.terms_used == 1
    # nu = 0: only the n = 0 term survives, (z/2)^0 = 1
    r0 = eval_gmk_bessel(UNIT_J, 0.0)
    assert r0.value == pytest.approx(1.0 / k_gamma(1.0, 1.0), rel=1e-14)


def test_c_zero_collapses_to_first_term():
    p = BesselParams(k=2, nu=0.5, gamma=1.5, lambda1=2, c=0, b=2)
    r = eval_gmk_bessel(p, 3.0)
    s0 = p.nu + 0.5 * (p.b + 1.0)
    expected = (3.0 / 2.0) ** p.nu / k_gamma(s0, p.k)
    assert r.value == pytest.approx(expected, rel=1e-14)
    assert r.terms_used == 1


def test_incremental_matches_direct_terms():
    # non-integer lambda1/k exercises the log-domain path
    p = BesselParams(k=1, nu=0.5, gamma=2.0, lambda1=1.5, c=-1, b=2)
    z = 4.0
    pairs = _gmk_log_pairs(p, z, 120)
    terms = [t for t, _ in pairs]
    for n in range(101):
        direct = gmk_bessel_term(p, z, n)
        assert terms[n] == pytest.approx(direct, rel=1e-12)


def test_term_recurrence_formula():
    # ratio compared in log form so deep-tail indices stay representable
    from kspecfun.kgamma import log_k_gamma

    p = BesselParams(k=2, nu=1.0, gamma=1.5, lambda1=3.0, c=-0.7, b=2)
    z = 2.5
    s0 = p.nu + 0.5 * (p.b + 1.0)
    rhos = [rho for _, rho in _gmk_log_pairs(p, z, 102)]
    for n in range(101):
        log_r = log_k_gamma(p.lambda1 * (n + 1) + s0, p.k) - log_k_gamma(
            p.lambda1 * n + s0, p.k
        )
        expected = math.exp(
            math.log(abs(p.c))
            + math.log(p.gamma + n * p.k)
            + 2.0 * math.log(z / 2.0)
            - 2.0 * math.log(n + 1.0)
            - log_r
        )
        assert rhos[n] == pytest.approx(expected, rel=1e-12)
    # sign alternation from c < 0, checked where terms are representable
    for n in range(0, 12):
        t_n = gmk_bessel_term(p, z, n)
        t_next = gmk_bessel_term(p, z, n + 1)
        assert t_n != 0.0
        assert (t_next < 0.0) == (t_n > 0.0)


def test_series_result_contract():
    r = eval_gmk_bessel(UNIT_J, 5.0, tol=1e-12, max_terms=400)
    assert r.converged
    assert r.terms_used >= 1
    assert r.tail_estimate <= 1e-12
    capped = eval_gmk_bessel(UNIT_J, 30.0, tol=1e-12, max_terms=4)
    assert not capped.converged


def test_first_kind_reduction():
    # weights reduce to 1/(n!)^2 at unit parameters and z/2 enters first power
    r = eval_k_bessel_first(1.0, 0.0, 1.0, 1.0, 2.0, tol=1e-14)
    assert r.value == pytest.approx(0.22389077914123566805, rel=1e-13)


def test_first_kind_general_value():
    # 200-term extended-precision reference
    r = eval_k_bessel_first(2.0, 1.0, 2.0, 1.0, 1.0, tol=1e-14)
    assert r.value == pytest.approx(0.41258107308286099768, rel=1e-13)


def test_first_kind_z_zero():
    r = eval_k_bessel_first(2.0, 1.0, 2.0, 1.0, 0.0)
    assert r.value == pytest.approx(1.0 / k_gamma(2.0, 2.0), rel=1e-14)
    assert r.terms_used == 1


def test_param_validation():
    with pytest.raises(DomainError):
        BesselParams(k=0, nu=0, gamma=1, lambda1=1, c=-1, b=1)
    with pytest.raises(DomainError):
        BesselParams(k=1, nu=0, gamma=1, lambda1=0, c=-1, b=1)
    with pytest.raises(DomainError):
        BesselParams(k=1, nu=0, gamma=1, lambda1=1, c=-1, b=-3)
    with pytest.raises(DomainError):
        eval_gmk_bessel(UNIT_J, -1.0)
    with pytest.raises(DomainError):
        eval_k_bessel_first(1.0, -2.0, 1.0, 1.0, 1.0)


def test_pochhammer_weight_visible():
    # doubling gamma doubles the n=1 term's contribution relative to gamma=1
    p1 = BesselParams(k=1, nu=0, gamma=1.0, lambda1=1, c=1, b=1)
    p2 = BesselParams(k=1, nu=0, gamma=2.0, lambda1=1, c=1, b=1)
    t1 = gmk_bessel_term(p1, 1.0, 1)
    t2 = gmk_bessel_term(p2, 1.0, 1)
    assert t2 / t1 == pytest.approx(
        k_pochhammer(2.0, 1, 1.0) / k_pochhammer(1.0, 1, 1.0), rel=1e-14
    )
