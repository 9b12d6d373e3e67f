"""Weighted and binomial sum identities for sequences obeying a generic linear rule.

A second-order rule is ``X_m = f1 X_{m-a} + f2 X_{m-b}``; a third-order rule
adds ``f3 X_{m-c}``.  Any sequence satisfying such a rule also satisfies a
family of telescoping sums, binomial sums and double binomial sums.  Each
function here expands one of those sums term by term in exact rationals and
returns both sides for comparison.

Sequences are passed as *term accessors*: any callable mapping an integer
index to a number (``int`` or ``Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from .seqcore import binom

__all__ = [
    "TermAccessor",
    "SecondOrderRule",
    "ThirdOrderRule",
    "SumComparison",
    "RecurrenceSequence",
    "rule_span",
    "rule_satisfied",
    "lemma2_sum",
    "lemma3_binomial",
    "lemma5_sum",
    "lemma5_equiv_sum",
    "lemma5_equiv_factor",
    "lemma5_pair_check",
    "lemma_window",
]

TermAccessor = Callable[[int], Union[int, Fraction]]
Term = Tuple[Fraction, int]  # (weight, index)


def _nonzero_fraction(value, name: str) -> Fraction:
    value = Fraction(value)
    if value == 0:
        raise ValueError(f"rule coefficient {name} must be non-zero")
    return value


@dataclass(frozen=True)
class SecondOrderRule:
    f1: Fraction
    f2: Fraction
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "f1", _nonzero_fraction(self.f1, "f1"))
        object.__setattr__(self, "f2", _nonzero_fraction(self.f2, "f2"))
        if self.a == self.b:
            raise ValueError(f"rule offsets must differ, got a = b = {self.a}")

    def pairs(self) -> Tuple[Tuple[Fraction, int], ...]:
        return ((self.f1, self.a), (self.f2, self.b))


@dataclass(frozen=True)
class ThirdOrderRule:
    f1: Fraction
    f2: Fraction
    f3: Fraction
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("f1", "f2", "f3"):
            object.__setattr__(self, name, _nonzero_fraction(getattr(self, name), name))
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError(
                f"rule offsets must be pairwise distinct, got {(self.a, self.b, self.c)}"
            )

    def pairs(self) -> Tuple[Tuple[Fraction, int], ...]:
        return ((self.f1, self.a), (self.f2, self.b), (self.f3, self.c))


Rule = Union[SecondOrderRule, ThirdOrderRule]


@dataclass(frozen=True)
class SumComparison:
    """Both evaluated sides of one identity instance."""

    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.equal


def _relation(rule: Rule) -> Dict[int, Fraction]:
    # relation centred on m:  sum_p coef[p] * X_{m+p} == 0
    coef: Dict[int, Fraction] = {0: Fraction(-1)}
    for f, offset in rule.pairs():
        coef[-offset] = coef.get(-offset, Fraction(0)) + f
    coef = {p: c for p, c in coef.items() if c != 0}
    if len(coef) < 2:
        raise ValueError("rule collapses to a single term; nothing to unroll")
    return coef


def rule_span(rule: Rule) -> int:
    """Number of consecutive seed values needed to unroll ``rule``."""
    coef = _relation(rule)
    return max(coef) - min(coef)


class RecurrenceSequence:
    """Term accessor built by unrolling ``rule`` in both directions from seeds.

    ``seeds`` gives consecutive values starting at index ``start``; exactly as
    many are needed as the span between the lowest and highest index the rule
    links.  Terms are cached, so use one instance per worker.
    """

    def __init__(self, rule: Rule, seeds: Sequence, start: int = 0):
        coef = _relation(rule)
        self.rule = rule
        self._coef = coef
        self._top = max(coef)
        self._bot = min(coef)
        self.order = self._top - self._bot
        if len(seeds) != self.order:
            raise ValueError(f"need {self.order} seed values, got {len(seeds)}")
        self._cache: Dict[int, Fraction] = {
            start + i: Fraction(v) for i, v in enumerate(seeds)
        }
        self._lo = start
        self._hi = start + self.order - 1

    def __call__(self, index: int) -> Fraction:
        cache = self._cache
        while index > self._hi:
            target = self._hi + 1
            m = target - self._top
            acc = sum(c * cache[m + p] for p, c in self._coef.items() if p != self._top)
            cache[target] = -acc / self._coef[self._top]
            self._hi = target
        while index < self._lo:
            target = self._lo - 1
            m = target - self._bot
            acc = sum(c * cache[m + p] for p, c in self._coef.items() if p != self._bot)
            cache[target] = -acc / self._coef[self._bot]
            self._lo = target
        return cache[index]


def _rule_rhs(rule: Rule, X: TermAccessor, m: int) -> Fraction:
    return sum((f * X(m - offset) for f, offset in rule.pairs()), Fraction(0))


def rule_satisfied(rule: Rule, X: TermAccessor, m_range: Iterable[int]) -> bool:
    """True iff ``X_m`` equals the rule's right side for every ``m`` in ``m_range``."""
    return all(X(m) == _rule_rhs(rule, X, m) for m in m_range)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        # the summation convention for negative k is undefined; refuse rather than guess
        raise ValueError(f"k must be a non-negative integer, got {k!r}")


def _check_form(form: int, count: int) -> None:
    if form not in range(1, count + 1):
        raise ValueError(f"form must be in 1..{count}, got {form!r}")


def _evaluate(terms: List[Term], X: TermAccessor) -> Fraction:
    total = Fraction(0)
    for weight, index in terms:
        try:
            value = X(index)
        except (IndexError, KeyError) as exc:
            raise ValueError(f"term accessor undefined at index {index}") from exc
        total += weight * value
    return total


def _compare(sides: Tuple[List[Term], List[Term]], X: TermAccessor) -> SumComparison:
    lhs_terms, rhs_terms = sides
    return SumComparison(_evaluate(lhs_terms, X), _evaluate(rhs_terms, X))


def _second_order_terms(form: int, rule: SecondOrderRule, m: int, k: int):
    _check_form(form, 4)
    _check_k(k)
    f1, f2, a, b = rule.f1, rule.f2, rule.a, rule.b
    js = range(k + 1)
    if form == 1:
        lhs = [(f2 * f1**j, m - b - a * j) for j in js]
        rhs = [(Fraction(1), m), (-(f1 ** (k + 1)), m - (k + 1) * a)]
    elif form == 2:
        lhs = [(f1 * f2**j, m - a - b * j) for j in js]
        rhs = [(Fraction(1), m), (-(f2 ** (k + 1)), m - (k + 1) * b)]
    elif form == 3:
        w = -f1 / f2
        lhs = [(w**-j, m + a - (b - a) * j) for j in js]
        rhs = [(f1, m), (f2 / w**k, m - (k + 1) * (b - a))]
    else:
        w = -f2 / f1
        lhs = [(w**-j, m + b - (a - b) * j) for j in js]
        rhs = [(f2, m), (f1 / w**k, m - (k + 1) * (a - b))]
    return lhs, rhs


def lemma2_sum(form: int, rule: SecondOrderRule, X: TermAccessor, m: int, k: int) -> SumComparison:
    """Telescoping weighted sums of a second-order rule (forms 1-4).

    1. ``f2 * sum f1^j X_{m-b-aj} = X_m - f1^{k+1} X_{m-(k+1)a}``
    2. ``f1 * sum f2^j X_{m-a-bj} = X_m - f2^{k+1} X_{m-(k+1)b}``
    3. ``sum X_{m+a-(b-a)j} / (-f1/f2)^j = f1 X_m + f2 (-f1/f2)^{-k} X_{m-(k+1)(b-a)}``
    4. form 3 with the roles of ``(f1, a)`` and ``(f2, b)`` swapped.
    """
    return _compare(_second_order_terms(form, rule, m, k), X)


def _binomial_terms(form: int, rule: SecondOrderRule, m: int, k: int):
    _check_form(form, 3)
    _check_k(k)
    f1, f2, a, b = rule.f1, rule.f2, rule.a, rule.b
    js = range(k + 1)
    if form == 1:
        ratio = f2 / f1
        lhs = [(binom(k, j) * ratio**j, m - a * k + (a - b) * j) for j in js]
        rhs = [(1 / f1**k, m)]
    elif form == 2:
        lhs = [((-f2) ** j * binom(k, j), m + a * k - b * j) for j in js]
        rhs = [(f1**k, m)]
    else:
        lhs = [((-f1) ** j * binom(k, j), m + b * k - a * j) for j in js]
        rhs = [(f2**k, m)]
    return lhs, rhs


def lemma3_binomial(form: int, rule: SecondOrderRule, X: TermAccessor, m: int, k: int) -> SumComparison:
    """Binomial sums of a second-order rule.

    1. ``sum C(k,j) (f2/f1)^j X_{m-ak+(a-b)j} = X_m / f1^k``
    2. ``sum (-f2)^j C(k,j) X_{m+ak-bj} = f1^k X_m``
    3. ``sum (-f1)^j C(k,j) X_{m+bk-aj} = f2^k X_m``
    """
    return _compare(_binomial_terms(form, rule, m, k), X)


# Each double-sum form is (j-weight, s-weight, start offset, j step, s step, rhs factor),
# all as functions of (f1, f2, f3, a, b, c, k).  The summand is
#   C(k,j) C(inner,s) * wj^j * ws^s * X_{m + start + jstep*j + sstep*s}
_NESTED = {  # inner sum s = 0..j, C(j, s)
    1: lambda f1, f2, f3, a, b, c, k: (f2 / f3, f1 / f2, -c * k, c - b, b - a, 1 / f3**k),
    2: lambda f1, f2, f3, a, b, c, k: (f3 / f2, f1 / f3, -b * k, b - c, c - a, 1 / f2**k),
    3: lambda f1, f2, f3, a, b, c, k: (f3 / f1, f2 / f3, -a * k, a - c, c - b, 1 / f1**k),
    4: lambda f1, f2, f3, a, b, c, k: (f2 / f3, -1 / f2, -(c - a) * k, c - b, b, (-f1 / f3) ** k),
    5: lambda f1, f2, f3, a, b, c, k: (f1 / f3, -1 / f1, -(c - b) * k, c - a, a, (-f2 / f3) ** k),
    6: lambda f1, f2, f3, a, b, c, k: (f1 / f2, -1 / f1, -(b - c) * k, b - a, a, (-f3 / f2) ** k),
}
_COMPLEMENT = {  # inner sum s = 0..k-j, C(k-j, s)
    1: lambda f1, f2, f3, a, b, c, k: (f3 / f1, f2 / f1, -a * k, a - c, a - b, 1 / f1**k),
    2: lambda f1, f2, f3, a, b, c, k: (f2 / f1, f3 / f1, -a * k, a - b, a - c, 1 / f1**k),
    3: lambda f1, f2, f3, a, b, c, k: (f1 / f2, f3 / f2, -b * k, b - a, b - c, 1 / f2**k),
    4: lambda f1, f2, f3, a, b, c, k: (-f3, -f2, a * k, -c, -b, f1**k),
    5: lambda f1, f2, f3, a, b, c, k: (-f3, -f1, b * k, -c, -a, f2**k),
    6: lambda f1, f2, f3, a, b, c, k: (-f2, -f1, c * k, -b, -a, f3**k),
}


def _double_terms(table, complement: bool, form: int, rule: ThirdOrderRule, m: int, k: int):
    _check_form(form, 6)
    _check_k(k)
    wj, ws, start, jstep, sstep, factor = table[form](
        rule.f1, rule.f2, rule.f3, rule.a, rule.b, rule.c, k
    )
    lhs = []
    for j in range(k + 1):
        inner = k - j if complement else j
        cj = binom(k, j) * wj**j
        for s in range(inner + 1):
            lhs.append((cj * binom(inner, s) * ws**s, m + start + jstep * j + sstep * s))
    return lhs, [(factor, m)]


def lemma5_sum(form: int, rule: ThirdOrderRule, X: TermAccessor, m: int, k: int) -> SumComparison:
    """Double binomial sums of a third-order rule, inner index ``s <= j`` (forms 1-6).

    Form 1 reads ``sum_j sum_s C(k,j) C(j,s) (f2/f3)^j (f1/f2)^s
    X_{m-ck+(c-b)j+(b-a)s} = X_m / f3^k``; the others permute the roles of
    the three rule terms (see ``_NESTED``).
    """
    return _compare(_double_terms(_NESTED, False, form, rule, m, k), X)


def lemma5_equiv_sum(form: int, rule: ThirdOrderRule, X: TermAccessor, m: int, k: int) -> SumComparison:
    """Double binomial sums with inner index ``s <= k - j`` and weight ``C(k,j) C(k-j,s)``."""
    return _compare(_double_terms(_COMPLEMENT, True, form, rule, m, k), X)


def _rhs_factor(table, form: int, rule: ThirdOrderRule, k: int) -> Fraction:
    return table[form](rule.f1, rule.f2, rule.f3, rule.a, rule.b, rule.c, k)[-1]


def lemma5_equiv_factor(form: int, rule: ThirdOrderRule, k: int) -> Fraction:
    """Ratio of the ``s <= k-j`` form's right-side factor to the ``s <= j`` form's."""
    _check_form(form, 6)
    _check_k(k)
    return _rhs_factor(_COMPLEMENT, form, rule, k) / _rhs_factor(_NESTED, form, rule, k)


def lemma5_pair_check(form: int, rule: ThirdOrderRule, X: TermAccessor, m: int, k: int) -> SumComparison:
    """Cross-check the two double-sum presentations against each other.

    ``lhs`` is the ``s <= k-j`` sum; ``rhs`` is the ``s <= j`` sum scaled by
    :func:`lemma5_equiv_factor`.  The two sums are expanded independently.
    """
    nested = lemma5_sum(form, rule, X, m, k)
    complement = lemma5_equiv_sum(form, rule, X, m, k)
    return SumComparison(complement.lhs, nested.lhs * lemma5_equiv_factor(form, rule, k))


_TERM_BUILDERS = {
    "lemma2": lambda form, rule, m, k: _second_order_terms(form, rule, m, k),
    "lemma3": lambda form, rule, m, k: _binomial_terms(form, rule, m, k),
    "lemma5": lambda form, rule, m, k: _double_terms(_NESTED, False, form, rule, m, k),
    "lemma5_equiv": lambda form, rule, m, k: _double_terms(_COMPLEMENT, True, form, rule, m, k),
}


def lemma_window(kind: str, form: int, rule: Rule, m: int, k: int) -> Tuple[int, int]:
    """Inclusive index range touched by one sum instance (both sides).

    ``kind`` is one of ``lemma2``, ``lemma3``, ``lemma5``, ``lemma5_equiv``.
    The accessor must be defined, and satisfy the rule, on this window.
    """
    try:
        build = _TERM_BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown lemma kind {kind!r}") from None
    lhs, rhs = build(form, rule, m, k)
    indices = [i for _, i in lhs] + [i for _, i in rhs]
    return min(indices), max(indices)
