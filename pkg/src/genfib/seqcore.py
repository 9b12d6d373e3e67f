"""Exact Fibonacci, Lucas and generalized Fibonacci terms for any integer index.

Every term is a Python ``int``; every weight or sum value is a
:class:`fractions.Fraction`, which is kept in lowest terms with a positive
denominator after each operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "Rational",
    "SequenceSpec",
    "FIBONACCI",
    "LUCAS",
    "fib",
    "fib_pair",
    "lucas",
    "gen_term",
    "gen_term_oracle",
    "binom",
    "parse_sequence",
    "ORACLE_LIMIT",
]

Rational = Fraction

ORACLE_LIMIT = 10_000


@dataclass(frozen=True)
class SequenceSpec:
    """Seed pair ``(G_0, G_1)`` of a sequence obeying ``G_m = G_{m-1} + G_{m-2}``."""

    g0: int
    g1: int
    label: str = ""

    def __post_init__(self):
        if not (isinstance(self.g0, int) and isinstance(self.g1, int)):
            raise TypeError("seed values must be integers")

    def term(self, m: int) -> int:
        return _term(self.g0, self.g1, m)

    @property
    def seeds(self) -> tuple[int, int]:
        return (self.g0, self.g1)

    @property
    def name(self) -> str:
        return self.label or f"{self.g0},{self.g1}"

    def __str__(self) -> str:
        return self.name


FIBONACCI = SequenceSpec(0, 1, "fibonacci")
LUCAS = SequenceSpec(2, 1, "lucas")


def fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` for ``n >= 0`` by fast doubling."""
    if n < 0:
        raise ValueError("fib_pair needs a non-negative index")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F_{2i} = F_i (2F_{i+1} - F_i),  F_{2i+1} = F_i^2 + F_{i+1}^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


@lru_cache(maxsize=1 << 14)
def fib(n: int) -> int:
    """Fibonacci number ``F_n``; negative indices use ``F_{-n} = (-1)^{n+1} F_n``."""
    if n >= 0:
        return fib_pair(n)[0]
    f = fib_pair(-n)[0]
    return f if n & 1 else -f


@lru_cache(maxsize=1 << 14)
def lucas(n: int) -> int:
    """Lucas number ``L_n``; ``L_{-n} = (-1)^n L_n``."""
    p = abs(n)
    f, f1 = fib_pair(p)
    value = 2 * f1 - f
    return -value if n < 0 and p & 1 else value


@lru_cache(maxsize=1 << 17)
def _term(g0: int, g1: int, m: int) -> int:
    if m >= 0:
        # G_m = F_{m-1} G_0 + F_m G_1
        f, f1 = fib_pair(m)
        return (f1 - f) * g0 + f * g1
    p = -m
    f, f1 = fib_pair(p)
    value = f1 * g0 - f * g1
    return -value if p & 1 else value


def gen_term(spec: SequenceSpec, m: int) -> int:
    """Term ``G_m`` of the sequence seeded by ``spec``, for any integer ``m``."""
    return _term(spec.g0, spec.g1, m)


def gen_term_oracle(spec: SequenceSpec, m: int) -> int:
    """Unroll the recurrence one step at a time; independent check for :func:`gen_term`."""
    if abs(m) > ORACLE_LIMIT:
        raise IndexError(f"oracle index {m} exceeds the guard |m| <= {ORACLE_LIMIT}")
    prev, cur = spec.g0, spec.g1  # (G_0, G_1)
    if m >= 0:
        for _ in range(m):
            prev, cur = cur, prev + cur
        return prev
    # walk backward: G_{i-2} = G_i - G_{i-1}
    for _ in range(-m):
        prev, cur = cur - prev, prev
    return prev


def binom(k: int, j: int) -> int:
    """Binomial coefficient, zero outside ``0 <= j <= k``."""
    if k < 0:
        raise ValueError(f"binom needs k >= 0, got {k}")
    if j < 0 or j > k:
        return 0
    return comb(k, j)


def parse_sequence(text: str) -> SequenceSpec:
    """Parse ``fibonacci``, ``lucas`` or a ``g0,g1`` seed pair."""
    key = text.strip().lower()
    if key in ("fibonacci", "fib", "f"):
        return FIBONACCI
    if key in ("lucas", "luc", "l"):
        return LUCAS
    parts = key.split(",")
    if len(parts) != 2:
        raise ValueError(f"cannot parse sequence {text!r}; use fibonacci, lucas or g0,g1")
    try:
        g0, g1 = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"seed pair {text!r} must be two integers") from None
    if (g0, g1) == FIBONACCI.seeds:
        return FIBONACCI
    if (g0, g1) == LUCAS.seeds:
        return LUCAS
    return SequenceSpec(g0, g1)
