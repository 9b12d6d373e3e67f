"""The five classical identities linking Fibonacci, Lucas and generalized terms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .recurrence import SumComparison
from .seqcore import FIBONACCI, SequenceSpec, fib, lucas

__all__ = ["FundamentalParams", "FUNDAMENTAL_IDS", "check_fundamental", "check_eq1_from_eq5"]

FUNDAMENTAL_IDS = ("I1", "I2", "I3", "I4", "I5")


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


@dataclass(frozen=True)
class FundamentalParams:
    m: int
    n: int
    r: int = 0
    g: SequenceSpec = FIBONACCI
    h: Optional[SequenceSpec] = None  # second sequence, only I4 reads it

    @property
    def other(self) -> SequenceSpec:
        return self.g if self.h is None else self.h


def check_fundamental(identity: str, params: FundamentalParams) -> SumComparison:
    """Evaluate both sides of one of ``I1``..``I5``.

    ======  ==========================================================
    I1      G(m+n) = F(n-1) G(m) + F(n) G(m+1)
    I2      G(m+n) + (-1)^n G(m-n) = L(n) G(m)
    I3      G(m+n) - (-1)^n G(m-n) = F(n) (G(m-1) + G(m+1))
    I4      G(n+r) H(m+n) - G(n) H(m+n+r) = (-1)^n (G(r) H(m) - G(0) H(m+r))
    I5      (-1)^r F(n) G(m) = F(n+r) G(m+r) - F(r) G(m+n+r)
    ======  ==========================================================
    """
    m, n, r = params.m, params.n, params.r
    G = params.g.term
    if identity == "I1":
        lhs = G(m + n)
        rhs = fib(n - 1) * G(m) + fib(n) * G(m + 1)
    elif identity == "I2":
        lhs = G(m + n) + _sign(n) * G(m - n)
        rhs = lucas(n) * G(m)
    elif identity == "I3":
        lhs = G(m + n) - _sign(n) * G(m - n)
        rhs = fib(n) * (G(m - 1) + G(m + 1))
    elif identity == "I4":
        H = params.other.term
        lhs = G(n + r) * H(m + n) - G(n) * H(m + n + r)
        rhs = _sign(n) * (G(r) * H(m) - G(0) * H(m + r))
    elif identity == "I5":
        lhs = _sign(r) * fib(n) * G(m)
        rhs = fib(n + r) * G(m + r) - fib(r) * G(m + n + r)
    else:
        raise ValueError(f"unknown fundamental identity {identity!r}; expected one of {FUNDAMENTAL_IDS}")
    return SumComparison(Fraction(lhs), Fraction(rhs))


def check_eq1_from_eq5(m: int, n: int, spec: SequenceSpec = FIBONACCI) -> SumComparison:
    """Recover ``I1`` at ``(m, n)`` from ``I5`` at ``(m+1, -n, n-1)``.

    I5 at the substituted point reads
    ``(-1)^r' F(n') G(m') = F(n'+r') G(m'+r') - F(r') G(m'+n'+r')``
    with ``m'+r' = m+n`` and ``m'+n'+r' = m``.  Solving it for ``G(m+n)``
    gives ``lhs``; ``rhs`` is the right side of I1.  Both are evaluated
    numerically, so the check also confirms that the substituted I5 holds.
    """
    G = spec.term
    m5, n5, r5 = m + 1, -n, n - 1
    pivot = fib(n5 + r5)  # F(-1) = 1
    solved = Fraction(_sign(r5) * fib(n5) * G(m5) + fib(r5) * G(m5 + n5 + r5), pivot)
    rhs = fib(n - 1) * G(m) + fib(n) * G(m + 1)
    return SumComparison(solved, Fraction(rhs))
