import math

import pytest

from kspecfun.errors import DomainError
from kspecfun.identities import (
    CSV_FIELDS,
    IDENTITY_IDS,
    classical_reduction_check,
    corollary1_rhs,
    corollary3_rhs,
    theorem1_rhs_canonical,
    theorem1_rhs_paper,
    theorem2_rhs_canonical,
    theorem2_rhs_paper,
    to_record,
    verify,
)
from kspecfun.kbessel import BesselParams
from kspecfun.kgamma import k_gamma
from kspecfun.quadrature import ObParams, oberhettinger_closed_form

UNIT = BesselParams(k=1, nu=1, gamma=1, lambda1=1, c=-1, b=1)
GEN = BesselParams(k=2, nu=0.5, gamma=1.5, lambda1=2, c=1, b=2)

UNIT_PARAMS = dict(k=1, nu=1, gamma=1, lambda1=1, c=-1, b=1, mu=1, lam=2, a=1, y=1)
GEN_PARAMS = dict(k=2, nu=0.5, gamma=1.5, lambda1=2, c=1, b=2, mu=0.5, lam=1.5, a=2, y=0.5)


def test_canonical_value_pins():
    # frozen from 50-digit term-by-term sums of the closed-form images
    assert theorem1_rhs_canonical(UNIT, 1.0, 2.0, 1.0, 1.0, tol=1e-13).value == pytest.approx(
        0.05994941425506648404, rel=1e-12
    )
    assert theorem2_rhs_canonical(UNIT, 0.5, 2.0, 1.0, 1.0, tol=1e-13).value == pytest.approx(
        0.035622556948013906223, rel=1e-12
    )
    assert theorem1_rhs_canonical(GEN, 0.5, 1.5, 2.0, 0.5, tol=1e-13).value == pytest.approx(
        0.13407906355454481474, rel=1e-12
    )
    assert theorem2_rhs_canonical(GEN, 0.5, 1.5, 2.0, 0.5, tol=1e-13).value == pytest.approx(
        0.083612897993277648976, rel=1e-12
    )


def test_canonical_c_zero_collapse():
    p = BesselParams(k=2, nu=0.5, gamma=1.5, lambda1=2, c=0, b=2)
    mu, lam, a, y = 0.5, 1.5, 2.0, 0.5
    s0 = p.nu + 0.5 * (p.b + 1.0)
    front = (y / 2.0) ** p.nu / k_gamma(s0, p.k)
    r1 = theorem1_rhs_canonical(p, mu, lam, a, y)
    assert r1.terms_used == 1
    assert r1.value == pytest.approx(
        front * oberhettinger_closed_form(ObParams(mu, lam + p.nu, a)), rel=1e-12
    )
    r2 = theorem2_rhs_canonical(p, mu, lam, a, y)
    assert r2.value == pytest.approx(
        front * oberhettinger_closed_form(ObParams(mu + p.nu, lam + p.nu, a)), rel=1e-12
    )


def test_canonical_y_zero():
    r = theorem1_rhs_canonical(UNIT, 1.0, 2.0, 1.0, 0.0)
    assert r.value == 0.0 and r.converged


def test_corollary1_matches_negated_paper_form():
    for lambda1 in (1.0, 2.0):
        for c in (-1.0, 1.0):
            bp = BesselParams(k=1, nu=1, gamma=1, lambda1=lambda1, c=c, b=1)
            bn = BesselParams(k=1, nu=1, gamma=1, lambda1=lambda1, c=-c, b=1)
            v_cor = corollary1_rhs(bp, 1.0, 2.0, 1.0, 1.0).value
            v_neg = theorem1_rhs_paper(bn, 1.0, 2.0, 1.0, 1.0).value
            assert v_cor == pytest.approx(v_neg, rel=1e-12)


def test_corollary3_matches_negated_paper_form_at_b_one():
    for c in (-1.0, 1.0):
        bp = BesselParams(k=1, nu=0.5, gamma=1, lambda1=1, c=c, b=1)
        bn = BesselParams(k=1, nu=0.5, gamma=1, lambda1=1, c=-c, b=1)
        v_cor = corollary3_rhs(bp, 0.5, 2.0, 1.0, 1.0).value
        v_neg = theorem2_rhs_paper(bn, 0.5, 2.0, 1.0, 1.0).value
        assert v_cor == pytest.approx(v_neg, rel=1e-12)


def test_corollary_rhs_requires_k_one():
    with pytest.raises(DomainError):
        corollary1_rhs(GEN, 0.5, 1.5, 2.0, 0.5)


def test_verify_theorem1_unit_match():
    r = verify("theorem1", UNIT_PARAMS)
    assert r.verdict == "match"
    assert r.rel_diff_canonical <= 1e-5
    assert r.rel_diff_paper <= 1e-5
    assert r.rhs_paper is not None
    assert r.quad_evals > 0 and r.series_terms > 0


def test_verify_theorem1_general_canonical_only():
    r = verify("theorem1", GEN_PARAMS)
    assert r.verdict == "canonical_only"
    assert r.rel_diff_canonical <= 1e-5
    assert r.rel_diff_paper > 1e-5
    assert "ratio" in r.diagnostics
    assert "n=0 0.125" in r.diagnostics


def test_verify_theorem2_unit_canonical_only():
    r = verify("theorem2", dict(UNIT_PARAMS, mu=0.5))
    assert r.verdict == "canonical_only"
    assert "n=1 4" in r.diagnostics


def test_verify_precondition_inconclusive():
    r = verify("theorem1", dict(UNIT_PARAMS, mu=5, lam=1))
    assert r.verdict == "inconclusive"
    assert r.diagnostics.startswith("precondition")
    assert math.isnan(r.lhs)


def test_verify_missing_parameter():
    r = verify("theorem1", {"mu": 1})
    assert r.verdict == "inconclusive"
    assert "missing" in r.diagnostics


def test_verify_non_convergence_series():
    # the integrand's own series gives up first and surfaces as a failure
    r = verify("theorem1", UNIT_PARAMS, max_terms=2)
    assert r.verdict == "inconclusive"
    assert "evaluation failed" in r.diagnostics and "converge" in r.diagnostics


def test_verify_non_convergence_quadrature():
    r = verify("theorem1", UNIT_PARAMS, tol_quad=1e-15, quad_budget=250)
    assert r.verdict == "inconclusive"
    assert "did not converge: quadrature" in r.diagnostics


def test_verify_is_deterministic():
    p = dict(UNIT_PARAMS, mu=0.5)
    assert verify("theorem2", p) == verify("theorem2", p)


def test_verify_unknown_identity():
    with pytest.raises(DomainError):
        verify("theorem3", UNIT_PARAMS)


def test_verify_corollary2_reports_reduction_gap():
    r = verify("corollary2", dict(nu=1, mu=1, lam=2, a=1, y=1))
    assert r.verdict == "match"
    assert "classical J reduction" in r.diagnostics
    # forced replacements visible in the echoed parameters
    assert r.params["k"] == 1.0 and r.params["c"] == -1.0 and r.params["gamma"] == 1.0


def test_verify_corollary1_flags_sign_flip():
    r = verify("corollary1", UNIT_PARAMS)
    assert r.verdict == "canonical_only"
    assert "n=1 -1" in r.diagnostics


def test_classical_reduction_check():
    assert classical_reduction_check("bessel_J", 0.0, 2.0) <= 1e-12
    assert classical_reduction_check("bessel_I", 1.0, 1.0) <= 1e-12
    assert classical_reduction_check("bessel_J", 0.0, 0.0) == 0.0
    with pytest.raises(DomainError):
        classical_reduction_check("bessel_K", 0.0, 1.0)


def test_to_record_fields():
    rec = to_record(verify("oberhettinger", {"mu": 1, "lam": 2, "a": 1}))
    assert set(rec) == set(CSV_FIELDS)
    assert rec["identity"] == "oberhettinger"
    assert rec["verdict"] == "match"
    assert rec["k"] is None and rec["y"] is None
    assert rec["rhs_paper"] is None and rec["rel_diff_paper"] is None
    assert rec["lhs"] == pytest.approx(1.0 / 3.0, rel=1e-7)


def test_to_record_skipped_has_no_nan():
    rec = to_record(verify("theorem1", dict(UNIT_PARAMS, mu=5, lam=1)))
    assert rec["verdict"] == "inconclusive"
    assert rec["lhs"] is None and rec["rhs_canonical"] is None


def test_identity_registry():
    assert "oberhettinger" in IDENTITY_IDS
    assert len(IDENTITY_IDS) == 7
