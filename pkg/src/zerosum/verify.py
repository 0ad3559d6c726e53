"""Exhaustive verification sweeps over canonical sequences.

A sweep walks every orbit representative for a given (p, l, filter) and
runs a set of named checks on each one.  Failed claims are recorded, never
raised, so a sweep always produces a complete report.

Parallelism is by striding the representative stream: shard ``(k, n)`` is
split into worker shards ``(k + n*j, n*w)`` for ``j < w``, and worker reports
are merged by a single reducer.  ``ZEROSUM_THREADS`` caps ``w``.
"""

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import comb

from . import structure as cl
from .fp import Prime
from .ratios import check_necessary_conditions
from .sequences import (
    FILTERS,
    Sequence,
    enumerate_canonical,
    multiplicity_profile,
    subsum_count,
    thb_lower_bound,
)
from .solutions import (
    affine_reduce,
    enumerate_solutions,
    is_exceptional,
    minimal_solutions,
    solution_dim,
)

CHECKS = ("dim_theorems", "minimal_counts", "reconstruction", "sumset_lemmas", "affine", "exceptional")
MAX_FAILURES = 100
MAX_P = 17
MAX_L = 24
# candidate multisets above this need allow_large=True
LARGE_SWEEP = 1_000_000


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    p: int
    l: int
    filter: str = "all"
    checks: tuple = ("dim_theorems",)
    shard: tuple = (0, 1)
    allow_large: bool = False

    def __post_init__(self):
        try:
            p = Prime(self.p)
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from None
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "checks", tuple(self.checks))
        object.__setattr__(self, "shard", tuple(self.shard))
        if p > MAX_P:
            raise InvalidSpec(f"p = {p} exceeds {MAX_P}")
        if not 1 <= self.l <= MAX_L:
            raise InvalidSpec(f"l = {self.l} outside [1, {MAX_L}]")
        if self.filter not in FILTERS:
            raise InvalidSpec(f"unknown filter {self.filter!r}")
        unknown = set(self.checks) - set(CHECKS)
        if unknown or not self.checks:
            raise InvalidSpec(f"unknown checks {sorted(unknown)}")
        k, n = self.shard
        if not 0 <= k < n:
            raise InvalidSpec(f"shard index {k} not below total {n}")
        if self.candidates > LARGE_SWEEP and not self.allow_large:
            raise InvalidSpec(
                f"{self.candidates} candidate multisets; pass allow_large to run this sweep"
            )

    @property
    def candidates(self):
        return comb(self.l + self.p - 2, self.l)


@dataclass
class VerificationReport:
    spec: SweepSpec
    checked: int = 0
    failures: list = field(default_factory=list)
    tallies: Counter = field(default_factory=Counter)
    elapsed_ms: int = 0

    @property
    def verified(self):
        return not self.failures

    @property
    def exit_code(self):
        return 0 if self.verified else 1

    def as_dict(self):
        return {
            "p": int(self.spec.p),
            "l": self.spec.l,
            "filter": self.spec.filter,
            "checks": list(self.spec.checks),
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
            "shard": "%d/%d" % self.spec.shard,
            "tallies": dict(sorted(self.tallies.items())),
        }

    def to_json(self):
        return json.dumps(self.as_dict())

    def comparable(self):
        """The report minus timing and shard layout."""
        d = self.as_dict()
        del d["elapsed_ms"], d["shard"]
        return d


def _failure_key(f):
    return (f["check"], len(f["sequence"]), f["sequence"], f["claim"])


def _cap(failures):
    out, seen = [], Counter()
    for f in sorted(failures, key=_failure_key):
        if seen[f["check"]] < MAX_FAILURES:
            out.append(f)
            seen[f["check"]] += 1
    return out


class _Item:
    """Per-sequence cache shared by all checks."""

    def __init__(self, A):
        self.A = A

    @cached_property
    def solutions(self):
        return enumerate_solutions(self.A)

    @cached_property
    def dim(self):
        return solution_dim(self.A, self.solutions)

    @cached_property
    def cls(self):
        p, l = self.A.p, len(self.A)
        return cl.classify(self.A) if l >= p - 1 else None

    @cached_property
    def minimal_count(self):
        return len(minimal_solutions(self.solutions))


class _Run:
    def __init__(self, check):
        self.check = check
        self.failures = []
        self.tallies = Counter()

    def expect(self, A, claim, expected, got, ok=None):
        if ok is None:
            ok = expected == got
        if not ok:
            self.failures.append(
                {"sequence": str(A), "check": self.check, "claim": claim, "expected": expected, "got": got}
            )
        return ok

    def tally(self, key):
        self.tallies[f"{self.check}:{key}"] += 1


def _dim_theorems(item, run):
    A = item.A
    p, l = A.p, len(A)
    if item.cls is None:
        run.tally("unclassified")
        run.expect(A, "dim_at_most_l_minus_1", f"<= {l - 1}", item.dim, item.dim <= l - 1)
        return
    run.tally(item.cls.label)
    run.expect(A, f"dim[{item.cls.label}]", item.cls.predicted_dim, item.dim)
    if l == p - 1 and A.sigma != 0:
        lifted = solution_dim(A.completed())
        run.expect(A, "completed_dim", item.dim + 1, lifted)


def _near_constant_shape(A):
    p = A.p
    counts = Counter(A.entries)
    if len(counts) == 1:
        return True
    if sorted(counts.values()) != [1, len(A) - 1]:
        return False
    r = counts.most_common(1)[0][0]
    return (2 * r) % p in counts


def _minimal_counts(item, run):
    A = item.A
    p, l = A.p, len(A)
    n = item.minimal_count
    if l > p:
        run.tally("long")
        run.expect(A, "at_least_l_minus_1", f">= {l - 1}", n, n >= l - 1)
    elif l == p:
        if len(set(A.entries)) == 1:
            run.tally("excluded_constant")
            return
        run.tally("length_p")
        run.expect(A, "at_least_p_minus_1", f">= {p - 1}", n, n >= p - 1)
        cls = item.cls
        if cls.tag == cl.EXCEPTIONAL_P:
            m, M = sorted((cls.t, p - 2 - cls.t))
            run.tally(f"exceptional_t={cls.t}")
            run.expect(A, "exceptional_count", m * M + comb(M, m), n)
            if cls.t in (1, p - 3):
                run.expect(A, "extremal_count", 2 * (p - 3), n)
    elif l == p - 1:
        if _near_constant_shape(A):
            run.tally("excluded_near_constant")
            return
        run.tally("length_p_minus_1")
        run.expect(A, "at_least_p_minus_3", f">= {p - 3}", n, n >= p - 3)
    else:
        run.tally("no_claim")


def _reconstruction(item, run):
    A = item.A
    p, l = A.p, len(A)
    if l < p - 1:
        run.tally("no_claim")
        return
    try:
        sup = cl.reconstruct(A, "superset")
        eq = cl.reconstruct(A, "equal")
    except cl.BudgetExceeded:
        run.tally("skipped_budget")
        return
    for B in sup.classes:
        rep = check_necessary_conditions(A, B)
        run.tally(f"ratio_pairs_d={rep.d}")
        run.expect(A, f"ratio_conditions[{','.join(map(str, B))}]", True, rep.passed)
    run.expect(A, "collinear_present", True, eq.includes_collinear)
    if l > p:
        run.expect(A, "superset_only_collinear", [list(sup.collinear_class)], [list(c) for c in sup.classes])
    elif l == p:
        run.expect(A, "equal_only_collinear", [list(eq.collinear_class)], [list(c) for c in eq.classes])
    else:
        for B in eq.others():
            form = cl.partner_form(A, B)
            run.tally(f"partner_form={form}")
            run.expect(A, f"partner_form[{','.join(map(str, B))}]", "i|ii|iii", form, form is not None)
    run.tally(f"equal_classes={len(eq.classes)}")


def _sumset_lemmas(item, run):
    A = item.A
    p, l = A.p, len(A)
    size = subsum_count(A)
    profile = multiplicity_profile(A)
    run.expect(A, "cauchy_davenport", f">= {min(p, l + 1)}", size, size >= min(p, l + 1))
    bound = thb_lower_bound(profile, p)
    run.expect(A, "pair_multiplicity_bound", f">= {bound}", size, size >= bound)
    if size == l + 1 < p:
        run.tally("plus_one_hypothesis")
        run.expect(A, "single_pair", [l], list(profile))
    if l >= 2 and size == l + 2 < p:
        run.tally("plus_two_hypothesis")
        doubled = False
        if profile == (l - 1, 1):
            pairs = Counter(min(a, p - a) for a in A.entries)
            for r in (q for q, c in pairs.items() if c == l - 1):
                doubled |= min(2 * r % p, p - 2 * r % p) in pairs
        if l == 2 and not doubled:
            run.tally("plus_two_length_two_escape")
            return
        run.expect(A, "pair_plus_double", True, doubled)


def _affine(item, run):
    A = item.A
    p, l = A.p, len(A)
    for alpha in range(p):
        red = affine_reduce(A, alpha)
        if red is None:
            run.expect(A, f"witness_exists[alpha={alpha}]", True, False, ok=l < p - 1)
            run.tally("unreachable_target")
            continue
        S = enumerate_solutions(A, alpha)
        T = enumerate_solutions(red.reduced)
        flipped = sorted(red.flip(m) for m in S)
        run.expect(A, f"flip_bijection[alpha={alpha}]", True, flipped == list(T))
        run.expect(A, f"affine_dim[alpha={alpha}]", solution_dim(red.reduced, T), S.affine_rank)
        run.tally("targets")


def _exceptional(item, run):
    A = item.A
    p, l = A.p, len(A)
    if l == p or (l == p - 1 and A.sigma == 0):
        expected = item.cls.tag in cl.EXCEPTIONAL_TAGS
        got = is_exceptional(A, item.solutions)
        run.tally("exceptional" if got else "regular")
        run.expect(A, f"exceptional_iff_family[{item.cls.tag}]", expected, got)
    else:
        run.tally("no_claim")


_CHECKERS = {
    "dim_theorems": _dim_theorems,
    "minimal_counts": _minimal_counts,
    "reconstruction": _reconstruction,
    "sumset_lemmas": _sumset_lemmas,
    "affine": _affine,
    "exceptional": _exceptional,
}


def check_sequence(A, check):
    """Run one named check on one sequence; returns (failures, tallies)."""
    run = _Run(check)
    _CHECKERS[check](_Item(A), run)
    return run.failures, run.tallies


def replay(failure):
    """Re-run the check behind a failure record on its sequence."""
    A = Sequence.parse(failure["sequence"])
    return check_sequence(A, failure["check"])[0]


def _run_shard(spec):
    report = VerificationReport(spec)
    runs = [_Run(c) for c in spec.checks]
    for A in enumerate_canonical(spec.p, spec.l, spec.filter, spec.shard):
        item = _Item(A)
        for run in runs:
            _CHECKERS[run.check](item, run)
        report.checked += 1
    for run in runs:
        report.failures.extend(run.failures)
        report.tallies.update(run.tallies)
    report.failures = _cap(report.failures)
    return report


def merge(spec, reports):
    out = VerificationReport(spec)
    for r in reports:
        out.checked += r.checked
        out.failures.extend(r.failures)
        out.tallies.update(r.tallies)
    out.failures = _cap(out.failures)
    return out


def default_workers():
    env = os.environ.get("ZEROSUM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_sweep(spec, workers=None):
    start = time.perf_counter()
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        report = _run_shard(spec)
    else:
        k, n = spec.shard
        parts = [replace(spec, shard=(k + n * j, n * workers)) for j in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            report = merge(spec, pool.map(_run_shard, parts))
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def _single(spec, check, workers):
    return run_sweep(replace(spec, checks=(check,)), workers)


def verify_dim_theorems(spec, workers=None):
    return _single(spec, "dim_theorems", workers)


def verify_minimal_counts(spec, workers=None):
    return _single(spec, "minimal_counts", workers)


def verify_reconstruction(spec, workers=None):
    return _single(spec, "reconstruction", workers)


def verify_sumset_lemmas(spec, workers=None):
    return _single(spec, "sumset_lemmas", workers)


def verify_affine(spec, workers=None):
    return _single(spec, "affine", workers)


def verify_exceptional(spec, workers=None):
    return _single(spec, "exceptional", workers)
