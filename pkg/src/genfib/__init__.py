"""Generalized Fibonacci sequences and exact verification of their weighted sum identities."""

from .identities import FundamentalParams, check_eq1_from_eq5, check_fundamental
from .recurrence import (
    RecurrenceSequence,
    SecondOrderRule,
    SumComparison,
    ThirdOrderRule,
    lemma2_sum,
    lemma3_binomial,
    lemma5_equiv_sum,
    lemma5_sum,
    rule_satisfied,
)
from .seqcore import (
    FIBONACCI,
    LUCAS,
    Rational,
    SequenceSpec,
    binom,
    fib,
    gen_term,
    gen_term_oracle,
    lucas,
)
from .sums import (
    GuardError,
    TheoremParams,
    theorem1_sum,
    theorem2_binomial,
    theorem2_corollary,
    theorem3_double,
    theorem4_double,
)
from .verifier import GridSpec, list_identities, run_grid

__version__ = "0.1.0"
