"""Identity registry, guard-aware grid sweeps and report output."""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

from .identities import FundamentalParams, check_eq1_from_eq5, check_fundamental
from .recurrence import (
    SumComparison,
    lemma2_sum,
    lemma3_binomial,
    lemma5_equiv_sum,
    lemma5_sum,
)
from .seqcore import FIBONACCI, LUCAS, SequenceSpec
from .sums import (
    TheoremParams,
    engine_violation,
    difference_rule,
    shift_rule,
    guard_text,
    guard_violation,
    theorem1_sum,
    theorem2_binomial,
    theorem2_corollary,
    theorem3_double,
    theorem4_double,
)

__all__ = [
    "IdentityDescriptor",
    "GridSpec",
    "VerificationRecord",
    "UnknownIdentityError",
    "REGISTRY",
    "REPORT_SCHEMA",
    "STATUSES",
    "list_identities",
    "resolve_identities",
    "iter_records",
    "run_grid",
    "summarize",
    "default_jobs",
    "write_json",
    "write_csv",
    "write_text",
    "record_to_dict",
]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped-guard"
STATUSES = (PASS, FAIL, SKIPPED)

JOBS_ENV = "GENFIB_JOBS"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    arity: Tuple[str, ...]
    formula: str
    guard: str
    evaluate: Callable[[TheoremParams], SumComparison] = field(repr=False, compare=False)
    precheck: Callable[[TheoremParams], Optional[str]] = field(repr=False, compare=False)


def _fundamental(identity):
    def evaluate(p: TheoremParams) -> SumComparison:
        return check_fundamental(identity, FundamentalParams(p.m, p.n, p.r, p.g, p.h))
    return evaluate


def _never(p: TheoremParams) -> Optional[str]:
    return None


def _theorem_guard(identity):
    return lambda p: guard_violation(identity, p)


def _build_registry() -> Dict[str, IdentityDescriptor]:
    entries: List[IdentityDescriptor] = []

    def add(id_, arity, formula, evaluate, precheck=_never, guard="none"):
        entries.append(IdentityDescriptor(id_, tuple(arity), formula, guard, evaluate, precheck))

    fundamentals = {
        "I1": (("G", "m", "n"), "G(m+n) = F(n-1) G(m) + F(n) G(m+1)"),
        "I2": (("G", "m", "n"), "G(m+n) + (-1)^n G(m-n) = L(n) G(m)"),
        "I3": (("G", "m", "n"), "G(m+n) - (-1)^n G(m-n) = F(n) (G(m-1) + G(m+1))"),
        "I4": (("G", "H", "m", "n", "r"),
               "G(n+r) H(m+n) - G(n) H(m+n+r) = (-1)^n (G(r) H(m) - G(0) H(m+r))"),
        "I5": (("G", "m", "n", "r"), "(-1)^r F(n) G(m) = F(n+r) G(m+r) - F(r) G(m+n+r)"),
    }
    for id_, (arity, formula) in fundamentals.items():
        add(id_, arity, formula, _fundamental(id_))
    add("X1", ("G", "m", "n"), "I5 at (m+1, -n, n-1) solved for G(m+n) reproduces I1",
        lambda p: check_eq1_from_eq5(p.m, p.n, p.g))

    rule5 = "rule G(m) = (-1)^r F(n+r)/F(n) G(m+r) - (-1)^r F(r)/F(n) G(m+n+r)"
    rule5_guard = "n != 0 and r != 0 and n + r != 0"
    rule5_check = lambda p: engine_violation("T1.1", p)  # noqa: E731
    lemma2_text = {
        1: "f2 sum f1^j X(m-b-aj) = X(m) - f1^(k+1) X(m-(k+1)a)",
        2: "f1 sum f2^j X(m-a-bj) = X(m) - f2^(k+1) X(m-(k+1)b)",
        3: "sum X(m+a-(b-a)j) / (-f1/f2)^j = f1 X(m) + f2 (-f1/f2)^-k X(m-(k+1)(b-a))",
        4: "sum X(m+b-(a-b)j) / (-f2/f1)^j = f2 X(m) + f1 (-f2/f1)^-k X(m-(k+1)(a-b))",
    }
    for form, text in lemma2_text.items():
        add(f"L2.{form}", ("G", "m", "n", "r", "k"), f"{text}; {rule5}",
            lambda p, f=form: lemma2_sum(f, shift_rule(p.n, p.r), p.g.term, p.m, p.k),
            rule5_check, rule5_guard)
    lemma3_text = {
        1: "sum C(k,j) (f2/f1)^j X(m-ak+(a-b)j) = X(m) / f1^k",
        2: "sum (-f2)^j C(k,j) X(m+ak-bj) = f1^k X(m)",
        3: "sum (-f1)^j C(k,j) X(m+bk-aj) = f2^k X(m)",
    }
    for form, text in lemma3_text.items():
        add(f"L3.{form}", ("G", "m", "n", "r", "k"), f"{text}; {rule5}",
            lambda p, f=form: lemma3_binomial(f, shift_rule(p.n, p.r), p.g.term, p.m, p.k),
            rule5_check, rule5_guard)

    rule3 = "rule G(m) = (-1)^n G(m-2n) + F(n) G(m-n-1) + F(n) G(m-n+1)"
    rule3_guard = "n not in {-1, 0, 1}"
    rule3_check = lambda p: engine_violation("T3.1", p)  # noqa: E731
    nested_text = {
        1: "sum_j sum_(s<=j) C(k,j) C(j,s) (f2/f3)^j (f1/f2)^s X(m-ck+(c-b)j+(b-a)s) = X(m)/f3^k",
        2: "sum_j sum_(s<=j) C(k,j) C(j,s) (f3/f2)^j (f1/f3)^s X(m-bk+(b-c)j+(c-a)s) = X(m)/f2^k",
        3: "sum_j sum_(s<=j) C(k,j) C(j,s) (f3/f1)^j (f2/f3)^s X(m-ak+(a-c)j+(c-b)s) = X(m)/f1^k",
        4: "sum_j sum_(s<=j) C(k,j) C(j,s) (f2/f3)^j (-1/f2)^s X(m-(c-a)k+(c-b)j+bs) = (-f1/f3)^k X(m)",
        5: "sum_j sum_(s<=j) C(k,j) C(j,s) (f1/f3)^j (-1/f1)^s X(m-(c-b)k+(c-a)j+as) = (-f2/f3)^k X(m)",
        6: "sum_j sum_(s<=j) C(k,j) C(j,s) (f1/f2)^j (-1/f1)^s X(m-(b-c)k+(b-a)j+as) = (-f3/f2)^k X(m)",
    }
    complement_text = {
        1: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (f3/f1)^j (f2/f1)^s X(m-ak-(c-a)j-(b-a)s) = X(m)/f1^k",
        2: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (f2/f1)^j (f3/f1)^s X(m-ak-(b-a)j-(c-a)s) = X(m)/f1^k",
        3: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (f1/f2)^j (f3/f2)^s X(m-bk-(a-b)j-(c-b)s) = X(m)/f2^k",
        4: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (-1)^(j+s) f3^j f2^s X(m+ak-cj-bs) = f1^k X(m)",
        5: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (-1)^(j+s) f3^j f1^s X(m+bk-cj-as) = f2^k X(m)",
        6: "sum_j sum_(s<=k-j) C(k,j) C(k-j,s) (-1)^(j+s) f2^j f1^s X(m+ck-bj-as) = f3^k X(m)",
    }
    for form in range(1, 7):
        add(f"L5.{form}", ("G", "m", "n", "k"), f"{nested_text[form]}; {rule3}",
            lambda p, f=form: lemma5_sum(f, difference_rule(p.n), p.g.term, p.m, p.k),
            rule3_check, rule3_guard)
        add(f"L5E.{form}", ("G", "m", "n", "k"), f"{complement_text[form]}; {rule3}",
            lambda p, f=form: lemma5_equiv_sum(f, difference_rule(p.n), p.g.term, p.m, p.k),
            rule3_check, rule3_guard)

    theorem_text = {
        "T1.1": "F(r) sum (-1)^(rj) (F(n+r)/F(n))^j G(m+n+r+rj)"
                " = (-1)^(kr) F(n) (F(n+r)/F(n))^(k+1) G(m+(k+1)r) - (-1)^r F(n) G(m)",
        "T1.2": "F(n+r) sum (-1)^((r+1)j) (F(r)/F(n))^j G(m+r+(n+r)j)"
                " = (-1)^r F(n) G(m) + (-1)^((r+1)k) F(n) (F(r)/F(n))^(k+1) G(m+(k+1)(n+r))",
        "T1.3": "sum (F(r)/F(n+r))^j G(m-r+nj)"
                " = (-1)^r F(n+r)/F(n) G(m) - (-1)^r F(r)/F(n) (F(r)/F(n+r))^k G(m+(k+1)n)",
        "T2.1": "sum (-1)^j C(k,j) (F(r)/F(r+n))^j G(m+rk+nj) = (-1)^(rk) (F(n)/F(r+n))^k G(m)",
        "T2.2": "sum (-1)^(rj) C(k,j) (F(r)/F(n))^j G(m-rk+(n+r)j) = (-1)^(rk) (F(n+r)/F(n))^k G(m)",
        "T2.3": "sum (-1)^(j+rj) C(k,j) (F(n+r)/F(n))^j G(m-(n+r)k+rj) = (-1)^(k+rk) (F(r)/F(n))^k G(m)",
    }
    for id_, text in theorem_text.items():
        fn = theorem1_sum if id_.startswith("T1") else theorem2_binomial
        add(id_, ("G", "m", "n", "r", "k"), text,
            lambda p, f=int(id_[-1]), fn=fn: fn(f, p), _theorem_guard(id_), guard_text(id_))

    corollaries = {
        "C1": (("G", "n", "r", "k"),
               "sum (-1)^j C(k,j) (F(r)/F(r+n))^j G(nj) = (F(n)/F(r+n))^k (F(rk+1) G(0) - F(rk) G(1))"),
        "C2": (("G", "n", "k"), "sum (-1)^j C(k,j) G(nj) / L(n)^j = (F(nk+1) G(0) - F(nk) G(1)) / L(n)^k"),
        "C3": (("G", "k"), "sum (-1)^j C(k,j) G(j) = F(k+1) G(0) - F(k) G(1)"),
        "C4": (("G", "n", "r", "k"),
               "sum (-1)^(rj) C(k,j) (F(r)/F(n))^j G((n+r)j) = (-1)^(rk) (F(n+r)/F(n))^k G(rk)"),
        "C5": (("G", "n", "r", "k"),
               "sum (-1)^(j+rj) C(k,j) (F(n+r)/F(n))^j G(rj) = (-1)^(k+rk) (F(r)/F(n))^k G((n+r)k)"),
        "C6": (("G", "n", "k"), "sum (-1)^(nj) C(k,j) G(2nj) = (-1)^(nk) L(n)^k G(nk)"),
        "C7": (("G", "k"), "sum (-1)^j C(k,j) G(2j) = (-1)^k G(k)"),
        "C8": (("G", "k"), "sum C(k,j) G(j) = G(2k)"),
    }
    for id_, (arity, text) in corollaries.items():
        add(id_, arity, text, lambda p, i=id_: theorem2_corollary(i, p),
            _theorem_guard(id_), guard_text(id_))

    t3_text = {
        1: "sum_j sum_(s<=k-j) (-1)^(n(j+s)) C(k,j) C(k-j,s) F(n)^(j+s) G(m-2nk+(n+1)j+(n-1)s) = (-1)^(nk) G(m)",
        2: "sum_j sum_(s<=k-j) (-1)^(n(j+s)) C(k,j) C(k-j,s) F(n)^(j+s) G(m-2nk+(n-1)j+(n+1)s) = (-1)^(nk) G(m)",
        3: "sum_j sum_(s<=k-j) (-1)^(nj) C(k,j) C(k-j,s) G(m-(n+1)k-(n-1)j+2s) / F(n)^j = G(m) / F(n)^k",
        4: "sum_j sum_(s<=j) (-1)^s C(k,j) C(j,s) G(m+(n+1)k-2j+(n+1)s) / F(n)^s = (-1)^((n+1)k) G(m) / F(n)^k",
        5: "sum_j sum_(s<=j) (-1)^(n(j+s)+s) C(k,j) C(j,s) G(m+2k-(n+1)j+2ns) / F(n)^j = (-1)^k G(m)",
        6: "sum_j sum_(s<=j) (-1)^(n(j+s)+s) C(k,j) C(j,s) G(m-2k-(n-1)j+2ns) / F(n)^j = (-1)^k G(m)",
    }
    for form, text in t3_text.items():
        id_ = f"T3.{form}"
        add(id_, ("G", "m", "n", "k"), text, lambda p, f=form: theorem3_double(f, p),
            _theorem_guard(id_), guard_text(id_))

    t4_text = {
        1: "sum_j sum_(s<=j) (-1)^(nj+s) C(k,j) C(j,s) G(n+r)^(j-s) G(n)^s / G(0)^j"
           " H(m+rk+(n-r)j+rs) = (G(r)/G(0))^k H(m)",
        2: "sum_j sum_(s<=j) (-1)^(n(j+s)+s) C(k,j) C(j,s) G(0)^(j-s) G(n)^s / G(n+r)^j"
           " H(m+nk+(r-n)j+ns) = (-1)^(nk) (G(r)/G(n+r))^k H(m)",
        3: "sum_j sum_(s<=j) (-1)^(n(j+s)+j) C(k,j) C(j,s) G(0)^(j-s) G(n+r)^s / G(n)^j"
           " H(m+(n+r)k-nj+(n-r)s) = (-1)^((n+1)k) (G(r)/G(n))^k H(m)",
        4: "sum_j sum_(s<=k-j) (-1)^(ns+j+s) C(k,j) C(k-j,s) G(0)^j G(n+r)^s / G(r)^(j+s)"
           " H(m-(n+r)k+rj+ns) = (-1)^((n+1)k) (G(n)/G(r))^k H(m)",
        5: "sum_j sum_(s<=k-j) (-1)^(ns+j) C(k,j) C(k-j,s) G(0)^j G(n)^s / G(r)^(j+s)"
           " H(m-nk+rj+(n+r)s) = (-1)^(nk) (G(n+r)/G(r))^k H(m)",
        6: "sum_j sum_(s<=k-j) (-1)^(n(j+s)+j) C(k,j) C(k-j,s) G(n+r)^j G(n)^s / G(r)^(j+s)"
           " H(m-rk+nj+(n+r)s) = (G(0)/G(r))^k H(m)",
    }
    for form, text in t4_text.items():
        id_ = f"T4.{form}"
        add(id_, ("G", "H", "m", "n", "r", "k"), text, lambda p, f=form: theorem4_double(f, p),
            _theorem_guard(id_), guard_text(id_))

    registry = {d.id: d for d in sorted(entries, key=lambda d: d.id)}
    if len(registry) != len(entries):  # pragma: no cover - registry construction
        raise RuntimeError("duplicate identity ids")
    return registry


REGISTRY: Dict[str, IdentityDescriptor] = _build_registry()


class UnknownIdentityError(ValueError):
    def __init__(self, unknown: Sequence[str]):
        self.unknown = tuple(unknown)
        super().__init__(
            f"unknown identity id(s): {', '.join(unknown)}; available: {', '.join(REGISTRY)}"
        )


def list_identities(prefix: Optional[str] = None) -> List[IdentityDescriptor]:
    """Registry entries whose id starts with ``prefix``, sorted by id."""
    return [d for d in REGISTRY.values() if not prefix or d.id.startswith(prefix)]


def resolve_identities(selection: Iterable[str]) -> Tuple[str, ...]:
    """Expand ``all`` and validate ids; result follows registry order."""
    wanted = set()
    unknown = []
    for item in selection:
        if item == "all":
            wanted.update(REGISTRY)
        elif item in REGISTRY:
            wanted.add(item)
        else:
            unknown.append(item)
    if unknown:
        raise UnknownIdentityError(unknown)
    return tuple(i for i in REGISTRY if i in wanted)


def default_jobs() -> int:
    value = os.environ.get(JOBS_ENV)
    if value:
        try:
            jobs = int(value)
        except ValueError:
            raise ValueError(f"{JOBS_ENV} must be an integer, got {value!r}") from None
        if jobs < 1:
            raise ValueError(f"{JOBS_ENV} must be >= 1, got {jobs}")
        return jobs
    return os.cpu_count() or 1


Range = Tuple[int, int]


@dataclass(frozen=True)
class GridSpec:
    """Inclusive parameter ranges, seed lists and identity selection for a sweep."""

    m: Range = (-6, 6)
    n: Range = (-6, 6)
    r: Range = (-6, 6)
    k: Range = (0, 6)
    seeds: Tuple[SequenceSpec, ...] = (FIBONACCI, LUCAS)
    h_seeds: Optional[Tuple[SequenceSpec, ...]] = None  # defaults to seeds
    identities: Tuple[str, ...] = ("all",)
    jobs: int = 1
    chunk_size: int = 2048

    def __post_init__(self):
        for name in ("m", "n", "r", "k"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"range {name} is empty: {lo}..{hi}")
        if self.k[0] < 0:
            raise ValueError(f"k range must start at 0 or above, got {self.k[0]}")
        if not self.seeds:
            raise ValueError("at least one seed pair is required")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        resolve_identities(self.identities)

    def values(self, name: str) -> Sequence:
        if name == "G":
            return self.seeds
        if name == "H":
            return self.h_seeds or self.seeds
        lo, hi = getattr(self, name)
        return range(lo, hi + 1)


@dataclass(slots=True)
class VerificationRecord:
    identity: str
    params: Tuple[Tuple[str, object], ...]
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    status: str


def _make_params(names: Sequence[str], values: Sequence) -> TheoremParams:
    return TheoremParams(**{("g" if k == "G" else "h" if k == "H" else k): v
                            for k, v in zip(names, values)})


def evaluate_one(identity: str, assignment: Dict[str, object]) -> VerificationRecord:
    """Evaluate one identity at one parameter assignment."""
    desc = REGISTRY[identity]
    values = tuple(assignment[name] for name in desc.arity)
    status, lhs, rhs = _evaluate(desc, values)
    return VerificationRecord(identity, tuple(zip(desc.arity, values)), lhs, rhs, status)


def _evaluate(desc: IdentityDescriptor, values: Sequence):
    params = _make_params(desc.arity, values)
    if desc.precheck(params) is not None:
        return SKIPPED, None, None
    result = desc.evaluate(params)
    return (PASS if result.equal else FAIL), result.lhs, result.rhs


def _run_chunk(task):
    identity, chunk = task
    desc = REGISTRY[identity]
    return [_evaluate(desc, values) for values in chunk]


def _tasks(grid: GridSpec) -> Iterator[Tuple[str, List[tuple]]]:
    for identity in resolve_identities(grid.identities):
        desc = REGISTRY[identity]
        combos = itertools.product(*(grid.values(name) for name in desc.arity))
        while True:
            chunk = list(itertools.islice(combos, grid.chunk_size))
            if not chunk:
                break
            yield identity, chunk


def iter_records(grid: GridSpec) -> Iterator[VerificationRecord]:
    """Yield records in a fixed order: registry order, then parameter product order.

    The order does not depend on ``grid.jobs``.
    """
    tasks = list(_tasks(grid))
    if grid.jobs == 1:
        results = map(_run_chunk, tasks)
        yield from _attach(tasks, results)
        return
    with ProcessPoolExecutor(max_workers=grid.jobs) as pool:
        yield from _attach(tasks, pool.map(_run_chunk, tasks))


def _attach(tasks, results) -> Iterator[VerificationRecord]:
    for (identity, chunk), outcomes in zip(tasks, results):
        names = REGISTRY[identity].arity
        for values, (status, lhs, rhs) in zip(chunk, outcomes):
            yield VerificationRecord(identity, tuple(zip(names, values)), lhs, rhs, status)


def summarize(records: Iterable[VerificationRecord]) -> Dict[str, int]:
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for rec in records:
        summary[_SUMMARY_KEY[rec.status]] += 1
    return summary


_SUMMARY_KEY = {PASS: "pass", FAIL: "fail", SKIPPED: "skipped"}


@dataclass
class GridResult:
    records: List[VerificationRecord]
    summary: Dict[str, int]


def run_grid(grid: GridSpec) -> GridResult:
    records = list(iter_records(grid))
    return GridResult(records, summarize(records))


# --- report formats -------------------------------------------------------

_FRACTION_PATTERN = r"^-?[0-9]+/[1-9][0-9]*$"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["records", "summary"],
    "additionalProperties": False,
    "properties": {
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity", "params", "lhs", "rhs", "status"],
                "additionalProperties": False,
                "properties": {
                    "identity": {"type": "string", "enum": list(REGISTRY)},
                    "params": {
                        "type": "object",
                        "additionalProperties": {
                            "oneOf": [
                                {"type": "integer"},
                                {"type": "array", "items": {"type": "integer"},
                                 "minItems": 2, "maxItems": 2},
                            ]
                        },
                    },
                    "lhs": {"type": ["string", "null"], "pattern": _FRACTION_PATTERN},
                    "rhs": {"type": ["string", "null"], "pattern": _FRACTION_PATTERN},
                    "status": {"enum": list(STATUSES)},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "skipped"],
            "additionalProperties": False,
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("pass", "fail", "skipped")},
        },
    },
}


def _fraction_text(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else f"{x.numerator}/{x.denominator}"


def _param_value(v):
    return [v.g0, v.g1] if isinstance(v, SequenceSpec) else v


def record_to_dict(rec: VerificationRecord) -> dict:
    return {
        "identity": rec.identity,
        "params": {name: _param_value(v) for name, v in rec.params},
        "lhs": _fraction_text(rec.lhs),
        "rhs": _fraction_text(rec.rhs),
        "status": rec.status,
    }


def write_json(records: Iterable[VerificationRecord], out: TextIO) -> Dict[str, int]:
    """Stream ``{"records": [...], "summary": {...}}``; returns the summary."""
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    out.write('{"records": [')
    first = True
    for rec in records:
        summary[_SUMMARY_KEY[rec.status]] += 1
        out.write("\n" if first else ",\n")
        out.write(json.dumps(record_to_dict(rec)))
        first = False
    out.write("\n],\n" if not first else "],\n")
    out.write(f'"summary": {json.dumps(summary)}}}\n')
    return summary


CSV_COLUMNS = ("identity", "params", "lhs", "rhs", "status")


def write_csv(records: Iterable[VerificationRecord], out: TextIO) -> Dict[str, int]:
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        summary[_SUMMARY_KEY[rec.status]] += 1
        d = record_to_dict(rec)
        writer.writerow([
            d["identity"],
            json.dumps(d["params"], separators=(",", ":")),
            d["lhs"] or "",
            d["rhs"] or "",
            d["status"],
        ])
    return summary


def _text_line(rec: VerificationRecord) -> str:
    params = " ".join(
        f"{name}={v.g0},{v.g1}" if isinstance(v, SequenceSpec) else f"{name}={v}"
        for name, v in rec.params
    )
    if rec.status == SKIPPED:
        return f"{rec.status:<13} {rec.identity:<6} {params}"
    return (f"{rec.status:<13} {rec.identity:<6} {params}  "
            f"lhs={_fraction_text(rec.lhs)} rhs={_fraction_text(rec.rhs)}")


def write_text(records: Iterable[VerificationRecord], out: TextIO) -> Dict[str, int]:
    """One line per record, failures first, then a summary line."""
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    rest = io.StringIO()
    for rec in records:
        summary[_SUMMARY_KEY[rec.status]] += 1
        line = _text_line(rec) + "\n"
        if rec.status == FAIL:
            out.write(line)
        else:
            rest.write(line)
    out.write(rest.getvalue())
    out.write(f"summary: pass={summary['pass']} fail={summary['fail']} "
              f"skipped={summary['skipped']}\n")
    return summary
