from fractions import Fraction

import pytest
from sympy import jacobi_symbol

from app.etaquotient import (
    CHARACTER_GENERAL,
    CHARACTER_MINUS_ONE,
    CHARACTER_TRIVIAL,
    EtaQuotient,
    EtaQuotientError,
    FormSpec,
    character_kind,
    check_modularity,
    cusp_order_sums,
    kronecker,
)


def test_discriminant_function():
    delta = EtaQuotient(1, {1: 24})
    verdict = check_modularity(delta)
    assert verdict.ok
    assert verdict.form == FormSpec(12, 1, CHARACTER_TRIVIAL, 1)
    assert delta.prefactor_shift == Fraction(1)
    assert verdict.cusp_verdict == "strict"


def test_level_two_weight_eight():
    eq = EtaQuotient(2, {1: 8, 2: 8})
    verdict = check_modularity(eq)
    assert verdict.ok
    assert verdict.cusp_sums == {1: Fraction(12), 2: Fraction(24)}
    assert verdict.form.weight == 8


def test_first_family_member_g1():
    # alpha = 1: eta(z)^184 eta(2z)^4 E_4^189 on Gamma_0(12)
    eq = EtaQuotient(12, {1: 184, 2: 4}, e4_power=189)
    assert eq.weight == 850
    verdict = check_modularity(eq)
    assert verdict.ok
    assert verdict.form.character_kind == CHARACTER_TRIVIAL
    sums = cusp_order_sums(eq)
    assert sums[1] == sums[3] == 186
    assert sums[2] == sums[4] == sums[6] == sums[12] == 192


def test_negative_cusp_reported():
    # alpha = 63 with the minimal A = 3
    verdict = check_modularity(EtaQuotient(24, {1: -164, 2: 190}))
    assert not verdict.ok
    assert verdict.form is None
    assert verdict.cusp_sums[1] == -69
    assert verdict.cusp_verdict == "violated"
    assert any("negative cusp order" in v for v in verdict.violations)


def test_twenty_four_conditions():
    verdict = check_modularity(EtaQuotient(1, {1: 2}))
    assert not verdict.ok
    assert any("not 0 mod 24" in v for v in verdict.violations)
    assert verdict.cusps_nonnegative


def test_malformed_quotients():
    with pytest.raises(EtaQuotientError):
        EtaQuotient(6, {4: 2})
    with pytest.raises(EtaQuotientError):
        EtaQuotient(2, {1: 2, 2: 1})
    with pytest.raises(EtaQuotientError):
        EtaQuotient(0, {})


def test_character_classification():
    assert character_kind(EtaQuotient(4, {1: 1, 4: 1})) == (CHARACTER_MINUS_ONE, -1)
    assert character_kind(EtaQuotient(6, {1: 1, 3: 1})) == (CHARACTER_GENERAL, -3)
    assert character_kind(EtaQuotient(4, {1: 4, 4: 4})) == (CHARACTER_TRIVIAL, 1)


def test_form_character_values():
    form = FormSpec(445, 24, CHARACTER_MINUS_ONE, -1)
    assert [form.character(d) for d in (1, 3, 5, 7)] == [1, -1, 1, -1]


def test_kronecker_agrees_with_jacobi_on_odd_moduli():
    for n in range(1, 80, 2):
        for a in range(-40, 40):
            assert kronecker(a, n) == jacobi_symbol(a, n), (a, n)


def test_kronecker_completely_multiplicative(rng):
    for _ in range(500):
        a, b = (int(v) for v in rng.integers(-60, 61, size=2))
        m, n = (int(v) for v in rng.integers(1, 61, size=2))
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n), (a, b, n)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n), (a, m, n)
    for a in range(-20, 21):
        assert kronecker(a, 12) == kronecker(a, 4) * kronecker(a, 3), a


def test_kronecker_extensions():
    assert [kronecker(a, 2) for a in (1, 3, 5, 7, 4)] == [1, -1, -1, 1, 0]
    assert kronecker(-1, -1) == -1
    assert kronecker(1, 0) == 1
    assert kronecker(5, 0) == 0
    assert kronecker(6, 4) == 0
    assert kronecker(-3, 8) == -1
