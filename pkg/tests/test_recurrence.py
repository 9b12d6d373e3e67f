from fractions import Fraction
from math import comb

import pytest

from genfib.recurrence import (
    RecurrenceSequence,
    SecondOrderRule,
    SumComparison,
    ThirdOrderRule,
    lemma2_sum,
    lemma3_binomial,
    lemma5_equiv_factor,
    lemma5_equiv_sum,
    lemma5_pair_check,
    lemma5_sum,
    lemma_window,
    rule_satisfied,
    rule_span,
)
from genfib.seqcore import FIBONACCI, fib

from oracles import F
from rules import second_order_trials, third_order_trials

FIB_RULE = SecondOrderRule(1, 1, 1, 2)
# from G_{m+n} - (-1)^n G_{m-n} = F_n (G_{m-1} + G_{m+1}) at n = 2, shifted by 2
FIB_RULE3 = ThirdOrderRule(1, 1, 1, 4, 3, 1)
X = FIBONACCI.term


def test_rule_satisfied_examples():
    assert rule_satisfied(FIB_RULE, X, range(-10, 11))
    assert not rule_satisfied(SecondOrderRule(1, 1, 1, 3), X, range(0, 11))
    assert rule_satisfied(FIB_RULE3, X, range(2, 21))


def test_rule_validation():
    with pytest.raises(ValueError):
        SecondOrderRule(0, 1, 1, 2)
    with pytest.raises(ValueError):
        SecondOrderRule(1, 1, 2, 2)
    with pytest.raises(ValueError):
        ThirdOrderRule(1, 1, 0, 1, 2, 3)
    with pytest.raises(ValueError):
        ThirdOrderRule(1, 1, 1, 1, 2, 1)
    rule = SecondOrderRule(2, Fraction(1, 3), 1, 2)
    assert isinstance(rule.f1, Fraction) and rule.f2 == Fraction(1, 3)


def test_lemma2_form1_example():
    c = lemma2_sum(1, FIB_RULE, X, 10, 2)
    assert c.lhs == F(8) + F(7) + F(6) == 42
    assert c.rhs == F(10) - F(7) == 42
    assert c.equal


def test_lemma2_form2_single_term():
    c = lemma2_sum(2, FIB_RULE, X, 10, 0)
    assert c.lhs == fib(9)
    assert c.rhs == fib(10) - fib(8)
    assert c.equal


def test_lemma2_form3_example():
    # sum_{j<=3} F_{1-j} / (-1)^j = F_1 - F_0 + F_{-1} - F_{-2}
    expected = F(1) - F(0) + F(-1) - F(-2)
    c = lemma2_sum(3, FIB_RULE, X, 0, 3)
    assert c.lhs == expected == 3
    assert c.equal


def test_lemma5_form1_example():
    c = lemma5_sum(1, FIB_RULE3, X, 12, 2)
    assert c.lhs == 144 == c.rhs


def test_lemma5_form4_example():
    c = lemma5_sum(4, FIB_RULE3, X, 10, 1)
    assert c.lhs == -55 == c.rhs


def test_lemma5_equiv_form6_example():
    c = lemma5_equiv_sum(6, FIB_RULE3, X, 8, 1)
    assert c.lhs == 21 == c.rhs


def test_lemma5_form3_presentations_share_rhs():
    nested = lemma5_sum(3, FIB_RULE3, X, 6, 2)
    complement = lemma5_equiv_sum(3, FIB_RULE3, X, 6, 2)
    assert nested.rhs == complement.rhs == 8
    assert nested.equal and complement.equal


@pytest.mark.parametrize("form", range(1, 7))
def test_k_zero_is_plain_term(form):
    rule, seq = third_order_trials(3)[2]
    for fn in (lemma5_sum, lemma5_equiv_sum):
        c = fn(form, rule, seq, 5, 0)
        assert c.lhs == c.rhs == seq(5)


def test_lemma2_k_zero_reduces_to_rule():
    for rule, seq in second_order_trials(10):
        for m in range(-3, 4):
            # form 1 at k = 0: f2 X_{m-b} = X_m - f1 X_{m-a}
            assert lemma2_sum(1, rule, seq, m, 0).equal
            assert rule_satisfied(rule, seq, [m])


def _lemma2_brute(form, rule, seq, m, k):
    f1, f2, a, b = rule.f1, rule.f2, rule.a, rule.b
    if form == 1:
        return f2 * sum(f1**j * seq(m - b - a * j) for j in range(k + 1)), seq(m) - f1 ** (k + 1) * seq(m - (k + 1) * a)
    if form == 2:
        return f1 * sum(f2**j * seq(m - a - b * j) for j in range(k + 1)), seq(m) - f2 ** (k + 1) * seq(m - (k + 1) * b)
    if form == 3:
        w = -f1 / f2
        return (sum(seq(m + a - (b - a) * j) / w**j for j in range(k + 1)),
                f1 * seq(m) + f2 / w**k * seq(m - (k + 1) * (b - a)))
    w = -f2 / f1
    return (sum(seq(m + b - (a - b) * j) / w**j for j in range(k + 1)),
            f2 * seq(m) + f1 / w**k * seq(m - (k + 1) * (a - b)))


def test_lemma2_scales_differ_from_brute_only_by_normalization():
    # the engine's lhs for forms 1, 2 is the whole left side including the prefactor
    for rule, seq in second_order_trials(8):
        for form in range(1, 5):
            for k in range(5):
                c = lemma2_sum(form, rule, seq, 2, k)
                assert (c.lhs, c.rhs) == _lemma2_brute(form, rule, seq, 2, k)


def test_lemma3_binomial_against_brute():
    for rule, seq in second_order_trials(8):
        f1, f2, a, b = rule.f1, rule.f2, rule.a, rule.b
        for k in range(6):
            m = 1
            got = [lemma3_binomial(f, rule, seq, m, k) for f in (1, 2, 3)]
            assert got[0].lhs == sum(comb(k, j) * (f2 / f1) ** j * seq(m - a * k + (a - b) * j) for j in range(k + 1))
            assert got[1].lhs == sum((-f2) ** j * comb(k, j) * seq(m + a * k - b * j) for j in range(k + 1))
            assert got[2].lhs == sum((-f1) ** j * comb(k, j) * seq(m + b * k - a * j) for j in range(k + 1))
            assert all(g.equal for g in got)


def test_random_second_order_trials():
    for rule, seq in second_order_trials():
        for k in range(9):
            for m in (-2, 0, 3):
                for form in range(1, 5):
                    assert lemma2_sum(form, rule, seq, m, k).equal, (rule, form, m, k)
                for form in range(1, 4):
                    assert lemma3_binomial(form, rule, seq, m, k).equal, (rule, form, m, k)


def test_random_third_order_trials():
    for rule, seq in third_order_trials():
        for k in range(7):
            for form in range(1, 7):
                assert lemma5_sum(form, rule, seq, 1, k).equal, (rule, form, k)
                assert lemma5_equiv_sum(form, rule, seq, 1, k).equal, (rule, form, k)
                assert lemma5_pair_check(form, rule, seq, 1, k).equal, (rule, form, k)


def test_equiv_factor_matches_rhs_ratio():
    rule = ThirdOrderRule(Fraction(2, 3), -5, Fraction(7, 2), 1, 3, -2)
    k = 3
    f1, f2, f3 = rule.f1, rule.f2, rule.f3
    assert lemma5_equiv_factor(1, rule, k) == f3**k / f1**k
    assert lemma5_equiv_factor(4, rule, k) == f1**k / (-f1 / f3) ** k
    assert lemma5_equiv_factor(6, rule, k) == f3**k / (-f3 / f2) ** k


def test_recurrence_sequence_satisfies_rule():
    for rule, seq in second_order_trials(20) + third_order_trials(20):
        assert rule_satisfied(rule, seq, range(-30, 31))


def test_recurrence_sequence_seed_count():
    rule = SecondOrderRule(1, 1, -2, 3)  # links m-3, m, m+2: span 5
    assert rule_span(rule) == 5
    with pytest.raises(ValueError):
        RecurrenceSequence(rule, [1, 2])
    seq = RecurrenceSequence(rule, [1, 0, 0, 0, 0], start=-2)
    assert rule_satisfied(rule, seq, range(-20, 20))


def test_collapsed_rule_rejected():
    # X_m = 1*X_m + f2 X_{m-b}: the X_m terms cancel
    with pytest.raises(ValueError):
        RecurrenceSequence(SecondOrderRule(1, 2, 0, 1), [])


def test_fibonacci_via_unrolled_rule():
    seq = RecurrenceSequence(FIB_RULE, [0, 1])
    assert [seq(i) for i in range(-5, 8)] == [fib(i) for i in range(-5, 8)]


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        lemma2_sum(1, FIB_RULE, X, 0, -1)
    with pytest.raises(ValueError):
        lemma5_sum(1, FIB_RULE3, X, 0, -2)


def test_bad_form_rejected():
    with pytest.raises(ValueError):
        lemma2_sum(5, FIB_RULE, X, 0, 1)
    with pytest.raises(ValueError):
        lemma3_binomial(0, FIB_RULE, X, 0, 1)
    with pytest.raises(ValueError):
        lemma5_equiv_sum(7, FIB_RULE3, X, 0, 1)


def test_window_and_bounded_accessor():
    lo, hi = lemma_window("lemma2", 1, FIB_RULE, 10, 2)
    assert (lo, hi) == (6, 10)
    values = {i: F(i) for i in range(lo, hi + 1)}
    assert lemma2_sum(1, FIB_RULE, values.__getitem__, 10, 2).equal
    del values[lo]
    with pytest.raises(ValueError, match="undefined at index 6"):
        lemma2_sum(1, FIB_RULE, values.__getitem__, 10, 2)


def test_window_covers_every_touched_index():
    touched = set()

    def spy(i):
        touched.add(i)
        return F(i)

    for kind, fn, form in [("lemma2", lemma2_sum, 3), ("lemma3", lemma3_binomial, 2)]:
        touched.clear()
        fn(form, FIB_RULE, spy, 4, 5)
        lo, hi = lemma_window(kind, form, FIB_RULE, 4, 5)
        assert min(touched) == lo and max(touched) == hi
    for kind, fn in [("lemma5", lemma5_sum), ("lemma5_equiv", lemma5_equiv_sum)]:
        touched.clear()
        fn(2, FIB_RULE3, spy, 4, 3)
        lo, hi = lemma_window(kind, 2, FIB_RULE3, 4, 3)
        assert min(touched) == lo and max(touched) == hi
    with pytest.raises(ValueError):
        lemma_window("nope", 1, FIB_RULE, 0, 0)


def test_sum_comparison():
    assert SumComparison(Fraction(1, 2), Fraction(2, 4)).equal
    assert not SumComparison(Fraction(1), Fraction(2))
