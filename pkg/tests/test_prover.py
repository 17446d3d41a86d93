import numpy as np
import pytest

from app import prover
from app.etaquotient import CHARACTER_MINUS_ONE, CHARACTER_TRIVIAL
from app.hecke import InsufficientPrecisionError
from app.prover import (
    FAMILY_ALPHAS,
    NAMED_ALPHA_SETS,
    build_g1_reduced,
    build_g2_reduced,
    certify_forms,
    delta,
    derive_params,
    g1_eta,
    g2_eta,
    internal_precisions,
    relating_unit,
    resolve_params,
    scan_alpha,
    signed_mismatch,
    sturm_bound,
    verify_base,
    verify_e4_reduction,
    verify_eta_conditions,
    verify_family_member,
    verify_internal,
    verify_lifting,
    verify_quintuple_family,
    verify_sturm_extension,
)
from app.runner import ReportSink
from app.schemas import VerificationReport

# minimal A leaves a negative order at the cusps 1/d, d odd, of g1
CUSP_LIFTED = {23, 30, 31, 38, 39, 46, 47, 54, 55, 63}


def test_named_alpha_set():
    assert len(FAMILY_ALPHAS) == 25
    assert NAMED_ALPHA_SETS["theorem-list"] == NAMED_ALPHA_SETS["all"] == FAMILY_ALPHAS


def test_params_alpha_one():
    p = derive_params(1)
    assert (p.j, p.t, p.r, p.A) == (0, 1, 0, 21)
    assert (p.level, p.weight, p.shift1, p.shift2, p.sturm) == (12, 850, 8, 71, 1700)
    assert p.character_case == CHARACTER_TRIVIAL
    assert p.colors == 5


def test_params_alpha_four():
    p = derive_params(4)
    assert (p.j, p.t, p.r, p.A) == (0, 4, 1, 10)
    assert (p.level, p.weight, p.shift1, p.shift2, p.sturm) == (24, 445, 5, 41, 1780)
    assert p.character_case == CHARACTER_MINUS_ONE


def test_params_alpha_zero_is_total():
    p = derive_params(0)
    assert (p.r, p.A, p.weight) == (1, 22, 931)
    assert (p.A + p.r) % 2 == 1


def test_odd_formula_level_is_doubled():
    p = derive_params(2)
    assert p.formula_level == 3
    assert p.level == 6
    assert g1_eta(p).level == 6


def test_bad_arguments():
    with pytest.raises(ValueError):
        derive_params(-1)
    with pytest.raises(ValueError):
        derive_params(1, lift=10)


def test_sturm_bound_examples():
    assert sturm_bound(850, 12) == 1700
    assert sturm_bound(12, 1) == 1
    assert sturm_bound(445, 24) == 1780
    assert sturm_bound(121, 24) == 484


def test_shift_consistency():
    for alpha in range(101):
        p = derive_params(alpha)
        assert (p.shift1 + p.t) % 9 == 0, alpha
        assert (p.shift2 + 10 * p.t + 9 * p.j) % 81 == 0, alpha
        assert (p.A + p.r) % 2 == 1


def test_minimal_A_cusp_conditions():
    for alpha in FAMILY_ALPHAS:
        ok = certify_forms(derive_params(alpha), strict=True)["ok"]
        assert ok == (alpha not in CUSP_LIFTED), alpha


def test_alpha_63_minimal_cusp_sum():
    p = derive_params(63)
    assert p.A == 3
    g1 = g1_eta(p)
    assert g1.as_dict() == {1: -164, 2: 190}
    cert = certify_forms(p)
    assert cert["g1"]["cusp_sums"]["1"] == "-69"


def test_lift_keeps_level_and_certifies():
    for alpha in CUSP_LIFTED:
        minimal = derive_params(alpha)
        params, cert, history = resolve_params(alpha)
        assert cert["ok"], alpha
        assert params.effective_A == minimal.A + 24
        assert params.level == minimal.level
        assert history["minimal_A"] == minimal.A
    lifted = derive_params(63, lift=24)
    assert (lifted.weight, lifted.level, lifted.sturm) == (1093, 24, 4372)


def test_forms_agree_for_every_listed_alpha():
    for alpha in FAMILY_ALPHAS:
        params, cert, _ = resolve_params(alpha)
        assert cert["ok"], (alpha, cert["problems"])
        assert cert["g1"]["form"] == cert["g2"]["form"]
        assert cert["g1"]["form"]["weight"] == params.weight
        expected = CHARACTER_MINUS_ONE if alpha % 4 in (0, 3) else CHARACTER_TRIVIAL
        assert cert["g1"]["form"]["character"] == expected
        assert g2_eta(params).weight == g1_eta(params).weight


def test_build_g1_leading_terms():
    g1 = build_g1_reduced(derive_params(1), 20)
    assert g1.tolist()[:8] == [0] * 8
    assert g1.coeff(8) == 1
    assert g1.coeff(9) == 2


def test_build_g2_leading_terms():
    g2 = build_g2_reduced(derive_params(1), 100)
    assert g2.tolist()[:71] == [0] * 71
    assert g2.coeff(71) == 1
    assert g2.coeff(72) == 2
    g2_four = build_g2_reduced(derive_params(4), 60)
    assert g2_four.tolist()[:41] == [0] * 41
    assert g2_four.coeff(41) == 1


def test_delta_values():
    assert delta(1, 0) == 19
    assert delta(1, 1) == 172
    assert delta(4, 1) == 202
    for alpha in (1, 7, 63):
        for k in range(4):
            assert delta(alpha, k + 1) == 9 * delta(alpha, k) + alpha


def test_base_congruences():
    assert verify_base(0, 1, 30).status == "passed"
    assert verify_base(1, 0, 20).status == "passed"
    report = verify_base(0, 0, 0)
    assert report.passed
    assert report.precision == 19


def test_family_members():
    assert verify_family_member(1, 0, 50).passed
    assert verify_family_member(1, 1, 10).passed
    report = verify_family_member(7, 0, 30)
    assert report.passed
    assert "a_23(27n + 25)" in report.claim


def test_a5_closed_form():
    report = verify_quintuple_family(1, 5)
    assert report.passed
    assert report.details["closed_form"] == 172
    assert report.details["closed_form_matches_delta"]


def test_direct_mode_positive_and_negative():
    assert verify_internal(1, 100, mode="direct").passed
    for alpha in (2, 5):
        report = verify_internal(alpha, 100, mode="direct")
        assert report.status == "failed"
        assert report.first_failure is not None


def test_internal_sturm_alpha_one():
    report = verify_internal(1)
    assert report.status == "passed", report.details
    assert report.bound == 1700
    assert report.details["compared_terms"] >= 1701
    assert report.details["hecke"]["g2"]["iterations"] == 4
    assert report.precision == internal_precisions(derive_params(1))["g2"]
    assert "note" in report.details


def test_internal_sturm_alpha_seven():
    report = verify_internal(7, n_max=50)
    assert report.passed
    assert report.bound == 484
    assert report.details["cross_check"] == {"n_max": 50, "first_failure": None}
    assert report.details["first_failure_source"] is None
    assert report.details["unit"] == 1


def test_cross_check_failure_is_attributed(monkeypatch):
    monkeypatch.setattr(prover, "direct_mismatch", lambda *args, **kwargs: (3, 1))
    report = verify_internal(7, n_max=50)
    assert report.status == "failed"
    assert report.first_failure == 3
    assert report.details["first_failure_source"] == "cross-check"
    assert report.details["cross_check"]["first_failure"] == 3


def test_internal_sturm_minus_sign_alpha():
    report = verify_internal(4, n_max=40)
    assert report.status == "passed", report.details
    assert report.bound == 1780
    assert report.details["unit"] == 2
    assert report.details["first_failure_source"] is None
    assert "== -a_14(" in report.claim


def test_internal_without_lift_fails_on_cusps():
    report = verify_internal(63, allow_lift=False)
    assert report.status == "failed"
    assert report.first_failure is None
    assert report.details["forms"]["problems"]


def test_precision_override_below_minimum():
    with pytest.raises(InsufficientPrecisionError, match="Sturm minimum"):
        verify_internal(7, precision=100)


def test_precision_override_above_minimum():
    minimum = internal_precisions(derive_params(7))["minimum"]
    report = verify_internal(7, precision=minimum + 400)
    assert report.passed
    assert report.details["compared_terms"] > 485


def test_eta_conditions_report():
    assert verify_eta_conditions(1).passed
    lifted = verify_eta_conditions(31)
    assert lifted.passed
    assert lifted.details["lift"]["minimal_A"] == 3
    assert verify_eta_conditions(31, allow_lift=False).status == "failed"


def test_sturm_extension():
    report = verify_sturm_extension(7)
    assert report.passed
    assert report.bound == 968


def test_lifting_end_to_end():
    report = verify_lifting(1, 1, 5)
    assert report.passed
    assert report.details["hypotheses_hold"]
    assert report.details["conclusion"] == "passed"


def test_e4_reduction():
    assert verify_e4_reduction(2000).passed


def test_scan_alpha_tabulates():
    sink = ReportSink()
    reports = scan_alpha(range(0, 12), sink, n_max=40, workers=2)
    assert [r.alpha for r in reports] == list(range(12))
    assert len(sink) == 12
    by_alpha = {r.alpha: r for r in reports}
    for alpha in (1, 3, 4, 6, 7, 9, 11):
        assert by_alpha[alpha].passed, alpha
    assert by_alpha[2].status == "failed"
    assert scan_alpha([], n_max=10) == []


@pytest.mark.slow
def test_internal_sturm_full_list():
    for alpha in FAMILY_ALPHAS:
        report = verify_internal(alpha)
        assert report.passed, (alpha, report.first_failure)


@pytest.mark.slow
def test_family_spot_checks():
    for alpha in FAMILY_ALPHAS:
        assert verify_family_member(alpha, 0, 50).passed, alpha
    for alpha in (1, 4, 7, 63):
        assert verify_family_member(alpha, 1, 10).passed, alpha


@pytest.mark.slow
def test_base_grid():
    for j in range(3):
        for t in range(9):
            assert verify_base(j, t, 50).passed, (j, t)


def test_relating_unit_and_signed_mismatch():
    x = np.array([0, 1, 2, 0, 1])
    y = np.array([0, 2, 1, 0, 2])
    assert relating_unit(x, y) == 2
    assert signed_mismatch(x, y) == (None, 2)
    assert relating_unit(np.zeros(3, dtype=np.int64), np.array([1, 0, 2])) == 1
    assert signed_mismatch(np.array([1, 1, 0]), np.array([1, 2, 0])) == (1, 1)
    assert signed_mismatch(np.array([1, 1, 0]), np.array([1, 2, 0]), unit=2) == (0, 2)


def test_direct_mode_records_unit():
    minus = verify_internal(3, 100, mode="direct")
    assert minus.passed
    assert minus.details["unit"] == 2
    assert "== -a_11(" in minus.claim
    plus = verify_internal(1, 100, mode="direct")
    assert plus.details["unit"] == 1
    assert "== a_5(" in plus.claim


def test_scan_passes_every_listed_alpha():
    reports = scan_alpha(range(81), n_max=60, workers=4)
    by_alpha = {r.alpha: r for r in reports}
    assert len(by_alpha) == 81
    for alpha in FAMILY_ALPHAS:
        assert by_alpha[alpha].passed, (alpha, by_alpha[alpha].first_failure)
    for alpha in (2, 5):
        assert by_alpha[alpha].status == "failed", alpha


def test_family_offset_beyond_modulus():
    assert delta(17, 1) == 251
    report = verify_family_member(17, 1, 2)
    assert "243n + 251" in report.claim
    assert report.details["claim"]["residue"] == 251
    assert report.details["claim"]["reduced_residue"] is False
    assert report.status in ("passed", "failed")


def test_lifting_minus_sign_alpha():
    report = verify_lifting(4, 1, 5)
    assert report.passed
    assert report.details["hypotheses_hold"]
    assert not report.details["vacuous"]
    assert report.details["unit"] == 2


def test_lifting_vacuous_outside_list():
    # n_max 300 drives the internal check past n = 100
    report = verify_lifting(2, 0, 300)
    assert report.details["internal"] == "failed"
    assert not report.details["hypotheses_hold"]
    assert report.details["vacuous"]
    assert report.status == "passed"


def test_lifting_vacuous_for_listed_alpha_fails(monkeypatch):
    forced = VerificationReport(check="base", claim="forced", status="failed", first_failure=0)
    monkeypatch.setattr(prover, "verify_base", lambda j, t, n_max: forced)
    report = verify_lifting(1, 0, 5)
    assert report.details["vacuous"]
    assert report.details["base"] == "failed"
    assert report.status == "failed"
