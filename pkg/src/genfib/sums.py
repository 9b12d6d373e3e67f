"""Weighted, binomial and double binomial sums of generalized Fibonacci terms.

Identity ids:

* ``T1.1``-``T1.3``  weighted sums with Fibonacci-ratio weights
* ``T2.1``-``T2.3``  binomial sums with Fibonacci-ratio weights
* ``C1``-``C8``      specializations of the ``T2`` family
* ``T3.1``-``T3.6``  double binomial sums over one sequence
* ``T4.1``-``T4.6``  double binomial sums over a pair of sequences

Every sum accumulates an integer numerator over a single power of its weight
denominator, so each side is produced as one canonical ``Fraction``.  The
generic engine in :mod:`genfib.recurrence` expands the same sums term by term;
:func:`engine_counterpart` routes an instance through it for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .recurrence import (
    SecondOrderRule,
    SumComparison,
    ThirdOrderRule,
    lemma2_sum,
    lemma3_binomial,
    lemma5_equiv_sum,
    lemma5_sum,
)
from .seqcore import FIBONACCI, SequenceSpec, fib, lucas

__all__ = [
    "GuardError",
    "TheoremParams",
    "GUARDS",
    "guard_text",
    "guard_violation",
    "theorem1_sum",
    "theorem2_binomial",
    "theorem2_corollary",
    "theorem3_double",
    "theorem4_double",
    "shifted_binomial_sum",
    "lucas_weighted_binomial",
    "shift_rule",
    "difference_rule",
    "pair_rule",
    "engine_violation",
    "engine_counterpart",
]


class GuardError(ValueError):
    """An identity was asked for at parameters where a weight factor vanishes."""

    def __init__(self, identity: str, factor: str):
        super().__init__(f"{identity}: {factor} vanishes, the identity is undefined here")
        self.identity = identity
        self.factor = factor


@dataclass(frozen=True)
class TheoremParams:
    m: int = 0
    n: int = 0
    r: int = 0
    k: int = 0
    g: SequenceSpec = FIBONACCI
    h: Optional[SequenceSpec] = None  # second sequence for T4; defaults to g

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")

    @property
    def other(self) -> SequenceSpec:
        return self.g if self.h is None else self.h


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _powers(x: int, k: int) -> List[int]:
    out = [1]
    for _ in range(k):
        out.append(out[-1] * x)
    return out


# --- guards ---------------------------------------------------------------

_FACTORS: Dict[str, Tuple[Callable[[TheoremParams], int], str]] = {
    "F_n": (lambda p: fib(p.n), "n != 0"),
    "F_{n+r}": (lambda p: fib(p.n + p.r), "n + r != 0"),
    "G_0": (lambda p: p.g.term(0), "G_0 != 0"),
    "G_n": (lambda p: p.g.term(p.n), "G_n != 0"),
    "G_r": (lambda p: p.g.term(p.r), "G_r != 0"),
    "G_{n+r}": (lambda p: p.g.term(p.n + p.r), "G_{n+r} != 0"),
}

GUARDS: Dict[str, Tuple[str, ...]] = {
    "T1.1": ("F_n",),
    "T1.2": ("F_n",),
    "T1.3": ("F_{n+r}", "F_n"),
    "T2.1": ("F_{n+r}",),
    "T2.2": ("F_n",),
    "T2.3": ("F_n",),
    "C1": ("F_{n+r}",),
    "C2": ("F_n",),
    "C3": (),
    "C4": ("F_n",),
    "C5": ("F_n",),
    "C6": ("F_n",),
    "C7": (),
    "C8": (),
    # n = 0 collapses the generating rule even where no weight vanishes
    **{f"T3.{i}": ("F_n",) for i in range(1, 7)},
    "T4.1": ("G_0",),
    "T4.2": ("G_{n+r}",),
    "T4.3": ("G_n",),
    "T4.4": ("G_r",),
    "T4.5": ("G_r",),
    "T4.6": ("G_r",),
}


def guard_text(identity: str) -> str:
    factors = GUARDS[identity]
    return " and ".join(_FACTORS[f][1] for f in factors) if factors else "none"


def guard_violation(identity: str, params: TheoremParams) -> Optional[str]:
    """Name of the first vanishing factor, or ``None`` when the guard passes."""
    for factor in GUARDS[identity]:
        if _FACTORS[factor][0](params) == 0:
            return factor
    return None


def _require(identity: str, params: TheoremParams) -> None:
    factor = guard_violation(identity, params)
    if factor is not None:
        raise GuardError(identity, factor)


def _form_id(prefix: str, form: int, count: int) -> str:
    if form not in range(1, count + 1):
        raise ValueError(f"form must be in 1..{count}, got {form!r}")
    return f"{prefix}.{form}"


# --- summation kernels ----------------------------------------------------


def _single_sum(k, num, den, parity, start, step, G, binomial=True) -> Fraction:
    """``sum_j [C(k,j)] (-1)^(parity*j) (num/den)^j G(start + step*j)``."""
    dp = _powers(den, k)
    total = 0
    npow = 1
    for j in range(k + 1):
        t = npow * dp[k - j] * G(start + step * j)
        if binomial:
            t *= comb(k, j)
        total += -t if (parity * j) & 1 else t
        npow *= num
    return Fraction(total, dp[k])


def _double_sum(k, complement, weight, index, G, den=1) -> Fraction:
    """``sum_j sum_s C(k,j) C(inner,s) weight(j,s) G(index(j,s)) / den``.

    ``inner`` is ``k - j`` when ``complement`` else ``j``.
    """
    total = 0
    for j in range(k + 1):
        ckj = comb(k, j)
        inner = k - j if complement else j
        for s in range(inner + 1):
            total += ckj * comb(inner, s) * weight(j, s) * G(index(j, s))
    return Fraction(total, den)


# --- weighted sums --------------------------------------------------------


def theorem1_sum(form: int, params: TheoremParams) -> SumComparison:
    """Weighted sums with ratio weights ``F(n+r)/F(n)``, ``F(r)/F(n)`` or ``F(r)/F(n+r)``.

    1. ``F_r sum (-1)^{rj} (F_{n+r}/F_n)^j G_{m+n+r+rj}
       = (-1)^{kr} F_n (F_{n+r}/F_n)^{k+1} G_{m+(k+1)r} - (-1)^r F_n G_m``
    2. ``F_{n+r} sum (-1)^{(r+1)j} (F_r/F_n)^j G_{m+r+(n+r)j}
       = (-1)^r F_n G_m + (-1)^{(r+1)k} F_n (F_r/F_n)^{k+1} G_{m+(k+1)(n+r)}``
    3. ``sum (F_r/F_{n+r})^j G_{m-r+nj}
       = (-1)^r (F_{n+r}/F_n) G_m - (-1)^r (F_r/F_n) (F_r/F_{n+r})^k G_{m+(k+1)n}``
    """
    identity = _form_id("T1", form, 3)
    _require(identity, params)
    m, n, r, k, G = params.m, params.n, params.r, params.k, params.g.term
    fn, fr, fnr = fib(n), fib(r), fib(n + r)
    if form == 1:
        lhs = fr * _single_sum(k, fnr, fn, r, m + n + r, r, G, binomial=False)
        rhs = Fraction(_sign(k * r) * fnr ** (k + 1) * G(m + (k + 1) * r), fn**k)
        rhs -= _sign(r) * fn * G(m)
    elif form == 2:
        lhs = fnr * _single_sum(k, fr, fn, r + 1, m + r, n + r, G, binomial=False)
        rhs = _sign(r) * fn * G(m) + Fraction(
            _sign((r + 1) * k) * fr ** (k + 1) * G(m + (k + 1) * (n + r)), fn**k
        )
    else:
        lhs = _single_sum(k, fr, fnr, 0, m - r, n, G, binomial=False)
        rhs = Fraction(_sign(r) * fnr * G(m), fn) - Fraction(
            _sign(r) * fr ** (k + 1) * G(m + (k + 1) * n), fn * fnr**k
        )
    return SumComparison(Fraction(lhs), Fraction(rhs))


# --- binomial sums --------------------------------------------------------


def theorem2_binomial(form: int, params: TheoremParams) -> SumComparison:
    """Binomial sums with Fibonacci-ratio weights.

    1. ``sum (-1)^j C(k,j) (F_r/F_{r+n})^j G_{m+rk+nj} = (-1)^{rk} (F_n/F_{r+n})^k G_m``
    2. ``sum (-1)^{rj} C(k,j) (F_r/F_n)^j G_{m-rk+(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_m``
    3. ``sum (-1)^{j+rj} C(k,j) (F_{n+r}/F_n)^j G_{m-(n+r)k+rj}
       = (-1)^{k+rk} (F_r/F_n)^k G_m``
    """
    identity = _form_id("T2", form, 3)
    _require(identity, params)
    m, n, r, k, G = params.m, params.n, params.r, params.k, params.g.term
    fn, fr, fnr = fib(n), fib(r), fib(n + r)
    if form == 1:
        lhs = _single_sum(k, fr, fnr, 1, m + r * k, n, G)
        rhs = Fraction(_sign(r * k) * fn**k * G(m), fnr**k)
    elif form == 2:
        lhs = _single_sum(k, fr, fn, r, m - r * k, n + r, G)
        rhs = Fraction(_sign(r * k) * fnr**k * G(m), fn**k)
    else:
        lhs = _single_sum(k, fnr, fn, r + 1, m - (n + r) * k, r, G)
        rhs = Fraction(_sign(k + r * k) * fr**k * G(m), fn**k)
    return SumComparison(lhs, rhs)


def _negated_closed_form(spec: SequenceSpec, p: int) -> int:
    # F_{p+1} G_0 - F_p G_1, which equals (-1)^p G_{-p}
    return fib(p + 1) * spec.g0 - fib(p) * spec.g1


def theorem2_corollary(identity: str, params: TheoremParams) -> SumComparison:
    """Specializations of the ``T2`` binomial sums.

    ====  ===================================================================
    C1    sum (-1)^j C(k,j) (F_r/F_{r+n})^j G_{nj}
          = (F_n/F_{r+n})^k (F_{rk+1} G_0 - F_{rk} G_1)
    C2    sum (-1)^j C(k,j) G_{nj} / L_n^j = (F_{nk+1} G_0 - F_{nk} G_1) / L_n^k
    C3    sum (-1)^j C(k,j) G_j = F_{k+1} G_0 - F_k G_1
    C4    sum (-1)^{rj} C(k,j) (F_r/F_n)^j G_{(n+r)j} = (-1)^{rk} (F_{n+r}/F_n)^k G_{rk}
    C5    sum (-1)^{j+rj} C(k,j) (F_{n+r}/F_n)^j G_{rj}
          = (-1)^{k+rk} (F_r/F_n)^k G_{(n+r)k}
    C6    sum (-1)^{nj} C(k,j) G_{2nj} = (-1)^{nk} L_n^k G_{nk}
    C7    sum (-1)^j C(k,j) G_{2j} = (-1)^k G_k
    C8    sum C(k,j) G_j = G_{2k}
    ====  ===================================================================
    """
    if identity not in _COROLLARIES:
        raise ValueError(f"unknown corollary {identity!r}; expected C1..C8")
    _require(identity, params)
    return _COROLLARIES[identity](params)


def _c1(p):
    n, r, k, spec = p.n, p.r, p.k, p.g
    lhs = _single_sum(k, fib(r), fib(n + r), 1, 0, n, spec.term)
    rhs = Fraction(fib(n) ** k * _negated_closed_form(spec, r * k), fib(n + r) ** k)
    return SumComparison(lhs, rhs)


def _c2(p):
    n, k, spec = p.n, p.k, p.g
    ln = lucas(n)
    lhs = _single_sum(k, 1, ln, 1, 0, n, spec.term)
    return SumComparison(lhs, Fraction(_negated_closed_form(spec, n * k), ln**k))


def _c3(p):
    k, spec = p.k, p.g
    lhs = _single_sum(k, 1, 1, 1, 0, 1, spec.term)
    return SumComparison(lhs, Fraction(_negated_closed_form(spec, k)))


def _c4(p):
    n, r, k, G = p.n, p.r, p.k, p.g.term
    lhs = _single_sum(k, fib(r), fib(n), r, 0, n + r, G)
    rhs = Fraction(_sign(r * k) * fib(n + r) ** k * G(r * k), fib(n) ** k)
    return SumComparison(lhs, rhs)


def _c5(p):
    n, r, k, G = p.n, p.r, p.k, p.g.term
    lhs = _single_sum(k, fib(n + r), fib(n), r + 1, 0, r, G)
    rhs = Fraction(_sign(k + r * k) * fib(r) ** k * G((n + r) * k), fib(n) ** k)
    return SumComparison(lhs, rhs)


def _c6(p):
    n, k, G = p.n, p.k, p.g.term
    lhs = _single_sum(k, 1, 1, n, 0, 2 * n, G)
    return SumComparison(lhs, Fraction(_sign(n * k) * lucas(n) ** k * G(n * k)))


def _c7(p):
    k, G = p.k, p.g.term
    return SumComparison(_single_sum(k, 1, 1, 1, 0, 2, G), Fraction(_sign(k) * G(k)))


def _c8(p):
    k, G = p.k, p.g.term
    return SumComparison(_single_sum(k, 1, 1, 0, 0, 1, G), Fraction(G(2 * k)))


_COROLLARIES = {
    "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4,
    "C5": _c5, "C6": _c6, "C7": _c7, "C8": _c8,
}


def shifted_binomial_sum(spec: SequenceSpec, s: int, k: int) -> SumComparison:
    """``sum_j C(k,j) G_{s+j} = G_{s+2k}``; ``T2.2`` at ``r=2, n=-1, m=s+2k``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return SumComparison(_single_sum(k, 1, 1, 0, s, 1, spec.term), Fraction(spec.term(s + 2 * k)))


def lucas_weighted_binomial(spec: SequenceSpec, n: int, k: int) -> SumComparison:
    """``sum_j (-1)^{j+nj} C(k,j) L_n^j G_{nj} = (-1)^{k+nk} G_{2nk}``; ``C5`` at ``r = n``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    lhs = _single_sum(k, lucas(n), 1, n + 1, 0, n, spec.term)
    return SumComparison(lhs, Fraction(_sign(k + n * k) * spec.term(2 * n * k)))


# --- double binomial sums -------------------------------------------------


def theorem3_double(form: int, params: TheoremParams) -> SumComparison:
    """Double binomial sums with ``F_n`` weights over one sequence (forms 1-6).

    Forms 1-3 use ``C(k,j) C(k-j,s)``, forms 4-6 use ``C(k,j) C(j,s)``:

    1. ``sum (-1)^{n(j+s)} F_n^{j+s} G_{m-2nk+(n+1)j+(n-1)s} = (-1)^{nk} G_m``
    2. as 1 with index ``m-2nk+(n-1)j+(n+1)s``
    3. ``sum (-1)^{nj} G_{m-(n+1)k-(n-1)j+2s} / F_n^j = G_m / F_n^k``
    4. ``sum (-1)^s G_{m+(n+1)k-2j+(n+1)s} / F_n^s = (-1)^{(n+1)k} G_m / F_n^k``
    5. ``sum (-1)^{n(j+s)+s} G_{m+2k-(n+1)j+2ns} / F_n^j = (-1)^k G_m``
    6. as 5 with index ``m-2k-(n-1)j+2ns``
    """
    identity = _form_id("T3", form, 6)
    _require(identity, params)
    m, n, k, G = params.m, params.n, params.k, params.g.term
    f = fib(n)
    fp = _powers(f, k)
    if form == 1:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * (j + s)) & 1 else 1) * fp[j + s],
            lambda j, s: m - 2 * n * k + (n + 1) * j + (n - 1) * s, G,
        )
        rhs = Fraction(_sign(n * k) * G(m))
    elif form == 2:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * (j + s)) & 1 else 1) * fp[j + s],
            lambda j, s: m - 2 * n * k + (n - 1) * j + (n + 1) * s, G,
        )
        rhs = Fraction(_sign(n * k) * G(m))
    elif form == 3:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * j) & 1 else 1) * fp[k - j],
            lambda j, s: m - (n + 1) * k - (n - 1) * j + 2 * s, G, fp[k],
        )
        rhs = Fraction(G(m), fp[k])
    elif form == 4:
        lhs = _double_sum(
            k, False, lambda j, s: (-1 if s & 1 else 1) * fp[k - s],
            lambda j, s: m + (n + 1) * k - 2 * j + (n + 1) * s, G, fp[k],
        )
        rhs = Fraction(_sign((n + 1) * k) * G(m), fp[k])
    else:
        base, jstep = (m + 2 * k, -(n + 1)) if form == 5 else (m - 2 * k, -(n - 1))
        lhs = _double_sum(
            k, False, lambda j, s: (-1 if (n * (j + s) + s) & 1 else 1) * fp[k - j],
            lambda j, s: base + jstep * j + 2 * n * s, G, fp[k],
        )
        rhs = Fraction(_sign(k) * G(m))
    return SumComparison(lhs, rhs)


def theorem4_double(form: int, params: TheoremParams) -> SumComparison:
    """Double binomial sums over ``H`` with ``G``-ratio weights (forms 1-6).

    Forms 1-3 use ``C(k,j) C(j,s)``, forms 4-6 use ``C(k,j) C(k-j,s)``:

    1. ``sum (-1)^{nj+s} G_{n+r}^{j-s} G_n^s / G_0^j H_{m+rk+(n-r)j+rs}
       = (G_r/G_0)^k H_m``
    2. ``sum (-1)^{n(j+s)+s} G_0^{j-s} G_n^s / G_{n+r}^j H_{m+nk+(r-n)j+ns}
       = (-1)^{nk} (G_r/G_{n+r})^k H_m``
    3. ``sum (-1)^{n(j+s)+j} G_0^{j-s} G_{n+r}^s / G_n^j H_{m+(n+r)k-nj+(n-r)s}
       = (-1)^{(n+1)k} (G_r/G_n)^k H_m``
    4. ``sum (-1)^{ns+j+s} G_0^j G_{n+r}^s / G_r^{j+s} H_{m-(n+r)k+rj+ns}
       = (-1)^{(n+1)k} (G_n/G_r)^k H_m``
    5. ``sum (-1)^{ns+j} G_0^j G_n^s / G_r^{j+s} H_{m-nk+rj+(n+r)s}
       = (-1)^{nk} (G_{n+r}/G_r)^k H_m``
    6. ``sum (-1)^{n(j+s)+j} G_{n+r}^j G_n^s / G_r^{j+s} H_{m-rk+nj+(n+r)s}
       = (G_0/G_r)^k H_m``
    """
    identity = _form_id("T4", form, 6)
    _require(identity, params)
    m, n, r, k = params.m, params.n, params.r, params.k
    g, H = params.g, params.other.term
    z = _powers(g.term(0), k)
    gn = _powers(g.term(n), k)
    gr = _powers(g.term(r), k)
    gnr = _powers(g.term(n + r), k)
    hm = H(m)
    if form == 1:
        lhs = _double_sum(
            k, False, lambda j, s: (-1 if (n * j + s) & 1 else 1) * gnr[j - s] * gn[s] * z[k - j],
            lambda j, s: m + r * k + (n - r) * j + r * s, H, z[k],
        )
        rhs = Fraction(gr[k] * hm, z[k])
    elif form == 2:
        lhs = _double_sum(
            k, False, lambda j, s: (-1 if (n * (j + s) + s) & 1 else 1) * z[j - s] * gn[s] * gnr[k - j],
            lambda j, s: m + n * k + (r - n) * j + n * s, H, gnr[k],
        )
        rhs = Fraction(_sign(n * k) * gr[k] * hm, gnr[k])
    elif form == 3:
        lhs = _double_sum(
            k, False, lambda j, s: (-1 if (n * (j + s) + j) & 1 else 1) * z[j - s] * gnr[s] * gn[k - j],
            lambda j, s: m + (n + r) * k - n * j + (n - r) * s, H, gn[k],
        )
        rhs = Fraction(_sign((n + 1) * k) * gr[k] * hm, gn[k])
    elif form == 4:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * s + j + s) & 1 else 1) * z[j] * gnr[s] * gr[k - j - s],
            lambda j, s: m - (n + r) * k + r * j + n * s, H, gr[k],
        )
        rhs = Fraction(_sign((n + 1) * k) * gn[k] * hm, gr[k])
    elif form == 5:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * s + j) & 1 else 1) * z[j] * gn[s] * gr[k - j - s],
            lambda j, s: m - n * k + r * j + (n + r) * s, H, gr[k],
        )
        rhs = Fraction(_sign(n * k) * gnr[k] * hm, gr[k])
    else:
        lhs = _double_sum(
            k, True, lambda j, s: (-1 if (n * (j + s) + j) & 1 else 1) * gnr[j] * gn[s] * gr[k - j - s],
            lambda j, s: m - r * k + n * j + (n + r) * s, H, gr[k],
        )
        rhs = Fraction(z[k] * hm, gr[k])
    return SumComparison(lhs, rhs)


# --- generating rules and the generic-engine route ------------------------


def shift_rule(n: int, r: int) -> SecondOrderRule:
    """``G_m = (-1)^r F_{n+r}/F_n G_{m+r} - (-1)^r F_r/F_n G_{m+n+r}``."""
    fn = fib(n)
    if fn == 0:
        raise ValueError("n = 0 leaves the rule undefined")
    return SecondOrderRule(
        Fraction(_sign(r) * fib(n + r), fn), Fraction(-_sign(r) * fib(r), fn), -r, -n - r
    )


def difference_rule(n: int) -> ThirdOrderRule:
    """``G_m = (-1)^n G_{m-2n} + F_n G_{m-n-1} + F_n G_{m-n+1}``."""
    return ThirdOrderRule(_sign(n), fib(n), fib(n), 2 * n, n + 1, n - 1)


def pair_rule(g: SequenceSpec, n: int, r: int) -> ThirdOrderRule:
    """Rule for ``H`` read off the two-sequence identity, normalized by ``G_r``."""
    gr = g.term(r)
    if gr == 0:
        raise ValueError("G_r = 0 leaves the rule undefined")
    return ThirdOrderRule(
        Fraction(-_sign(n) * g.term(n), gr),
        Fraction(_sign(n) * g.term(n + r), gr),
        Fraction(g.term(0), gr),
        -n - r, -n, -r,
    )


def engine_violation(identity: str, params: TheoremParams) -> Optional[str]:
    """Why the generating rule is unusable at ``params``, or ``None``.

    The generic engine needs non-zero coefficients and distinct offsets,
    which is stricter than the identity's own guard.
    """
    n, r = params.n, params.r
    family = identity.split(".")[0]
    if family in ("T1", "T2"):
        for name, value in (("F_n", fib(n)), ("F_r", fib(r)), ("F_{n+r}", fib(n + r))):
            if value == 0:
                return f"{name} = 0"
        return None
    if family == "T3":
        return f"n = {n} gives coincident or vanishing rule terms" if n in (-1, 0, 1) else None
    if family == "T4":
        g = params.g
        for name, value in (
            ("G_0", g.term(0)), ("G_n", g.term(n)), ("G_r", g.term(r)), ("G_{n+r}", g.term(n + r)),
        ):
            if value == 0:
                return f"{name} = 0"
        if n == 0 or r == 0 or n == r:
            return "offsets -n-r, -n, -r coincide"
        return None
    raise ValueError(f"{identity!r} has no generating rule")


def _scaled(c: SumComparison, factor) -> SumComparison:
    return SumComparison(c.lhs * factor, c.rhs * factor)


# T3 / T4 form -> (engine function, engine form)
_T3_ROUTE = {1: (lemma5_equiv_sum, 1), 2: (lemma5_equiv_sum, 2), 3: (lemma5_equiv_sum, 3),
             4: (lemma5_sum, 4), 5: (lemma5_sum, 5), 6: (lemma5_sum, 6)}
_T4_ROUTE = {1: (lemma5_sum, 1), 2: (lemma5_sum, 2), 3: (lemma5_sum, 3),
             4: (lemma5_equiv_sum, 4), 5: (lemma5_equiv_sum, 5), 6: (lemma5_equiv_sum, 6)}


def engine_counterpart(identity: str, params: TheoremParams) -> SumComparison:
    """Evaluate a ``T1``-``T4`` instance through the generic rule engine.

    The result is rescaled to the theorem's normalization, so it must equal
    the direct evaluation exactly.
    """
    reason = engine_violation(identity, params)
    if reason is not None:
        raise ValueError(f"{identity}: generic route unavailable ({reason})")
    family, form = identity.split(".")
    form = int(form)
    m, n, r, k = params.m, params.n, params.r, params.k
    if family == "T1":
        rule = shift_rule(n, r)
        scale = {1: -_sign(r) * fib(n), 2: _sign(r) * fib(n), 3: 1}[form]
        return _scaled(lemma2_sum(form, rule, params.g.term, m, k), scale)
    if family == "T2":
        return lemma3_binomial(form, shift_rule(n, r), params.g.term, m, k)
    if family == "T3":
        fn, lemma_form = _T3_ROUTE[form]
        return fn(lemma_form, difference_rule(n), params.g.term, m, k)
    fn, lemma_form = _T4_ROUTE[form]
    return fn(lemma_form, pair_rule(params.g, n, r), params.other.term, m, k)

