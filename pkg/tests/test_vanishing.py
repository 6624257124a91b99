from decimal import Decimal, ROUND_HALF_UP, getcontext
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleychar.catalog import small_catalog
from cayleychar.dixon import CharacterTable
from cayleychar.errors import InputError, VerificationError
from cayleychar.vanishing import (
    burnside_check,
    check_energy_bound,
    classify_classes,
    contrapositive_classify,
    decimal_string,
    repeating_decimal,
    verify_main_theorem,
    weight,
)


@pytest.mark.parametrize(
    "name,num,den",
    [
        ("sym:3", 8, 3),  # (1+1+2)^2 / 6
        ("sym:4", 25, 6),  # 10^2 / 24
        ("alt:5", 64, 15),  # 16^2 / 60
        ("quaternion:8", 9, 2),  # 6^2 / 8
        ("cyclic:7", 7, 1),
        ("mathieu:11", 11881, 1980),  # 218^2 / 7920
        ("sym:7", 3364, 315),  # 232^2 / 5040
    ],
)
def test_weights(get_table, name, num, den):
    wr = weight(get_table(name))
    assert wr.weight == Fraction(num, den)


def test_m11_weight_rendering(get_table):
    wr = weight(get_table("mathieu:11"))
    assert wr.degree_sum == 218
    assert wr.decimal() == "6.0005050505"
    assert wr.repetend() == "6.00(05)"


def test_decimal_helpers():
    assert decimal_string(Fraction(8, 3)) == "2.6666666667"
    assert decimal_string(Fraction(8, 3), 3) == "2.667"
    assert decimal_string(Fraction(1, 8), 2) == "0.13"
    assert decimal_string(Fraction(-1, 3), 4) == "-0.3333"
    assert decimal_string(Fraction(7, 2), 0) == "4"
    assert repeating_decimal(Fraction(1, 4)) == "0.25"
    assert repeating_decimal(Fraction(1, 7)) == "0.(142857)"
    assert repeating_decimal(Fraction(5)) == "5"


@given(st.fractions(max_denominator=10**6).filter(lambda x: abs(x) < 10**6), st.integers(0, 20))
def test_decimal_matches_decimal_module(x, digits):
    getcontext().prec = 60
    d = Decimal(x.numerator) / Decimal(x.denominator)
    q = Decimal(1).scaleb(-digits)
    want = abs(d).quantize(q, rounding=ROUND_HALF_UP)
    got = decimal_string(x, digits)
    if want != 0 and x < 0:
        assert got == "-" + str(want)
    else:
        assert got.lstrip("-") == str(want)


@given(st.fractions(min_value=0, max_value=100, max_denominator=500))
def test_repetend_parses_back(x):
    s = repeating_decimal(x)
    if "(" not in s:
        assert Fraction(s) == x
        return
    head, rep = s[:-1].split("(")
    whole, _, pre = head.partition(".")
    # x = whole.pre + 0.00..rep repeating
    value = Fraction(head) + Fraction(int(rep), (10 ** len(rep) - 1) * 10 ** len(pre))
    assert value == x


def test_m11_verdicts(get_table):
    T = get_table("mathieu:11")
    v = {c.label: c for c in classify_classes(T)}
    assert v["5a"].is_rational and v["5a"].is_vanishing
    assert v["5a"].centralizer_order == 5 and v["5a"].weight_comparison == "below"
    assert v["6a"].weight_comparison == "below"
    assert v["1a"].is_vanishing is False
    assert contrapositive_classify(T) == [T.classes.index(next(c for c in T.classes if c.label == "5a")), 5]


def test_sym7_three_cycle(get_table):
    T = get_table("sym:7")
    c = next(c for c in T.classes if c.element_order == 3 and c.size == 70)
    v = classify_classes(T)[c.index]
    assert c.is_rational and not v.is_vanishing
    assert c.centralizer_order == 72
    assert Fraction(72) >= weight(T).weight
    chk = check_energy_bound(T, c.index)
    assert chk.holds and not chk.singular and chk.mcclelland_ok


def test_check_energy_bound_hypotheses(get_table):
    T = get_table("cyclic:5")
    with pytest.raises(InputError):
        check_energy_bound(T, 0)
    with pytest.raises(InputError):
        check_energy_bound(T, 1)  # irrational
    T = get_table("sym:3")
    with pytest.raises(InputError):
        check_energy_bound(T, 1)  # transpositions vanish on the 2-dim character
    assert check_energy_bound(T, 2).energy == 8
    assert check_energy_bound(T, 2).bound == 2 * 4


def test_abelian_iff_weight_equals_order(get_table):
    for name in small_catalog(32):
        T = get_table(name)
        assert (weight(T).weight == T.order) == T.group.is_abelian()


@pytest.mark.parametrize("name", small_catalog(60))
def test_main_theorem_small(get_table, name):
    T = get_table(name)
    rep = verify_main_theorem(T)
    assert rep.theorem_holds, rep.diagnostics
    assert burnside_check(T)
    for i in contrapositive_classify(T):
        assert any(row[i].is_zero() for row in T.values)


def test_contrapositive_raises_on_inconsistent_table(get_table):
    T = get_table("mathieu:11")
    j = next(c.index for c in T.classes if c.label == "5a")
    # zap every zero in column 5a: structurally wrong, but enough to exercise the guard
    values = [list(r) for r in T.values]
    for row in values:
        if row[j].is_zero():
            row[j] = row[j] + 1
    broken = CharacterTable(
        group=T.group, classes=T.classes, degrees=T.degrees, values=values,
        prime_used=T.prime_used, exponent=T.exponent,
    )
    with pytest.raises(VerificationError):
        contrapositive_classify(broken)
    rep = verify_main_theorem(broken)
    assert not rep.theorem_holds
    assert rep.diagnostics[0].startswith("internal inconsistency")
