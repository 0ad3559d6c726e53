"""Ratio decomposition of a pair (A, B) and the constraints it must obey.

Indices are grouped by the coordinate quotient b_i / a_i.  When every 0-1
solution of A also solves B, the subsum sets of the groups are heavily
constrained; :func:`check_necessary_conditions` evaluates those constraints
so they can be observed on concrete pairs.
"""

from dataclasses import dataclass

import numpy as np

from .fp import inverse
from .sequences import Sequence, subsums
from .solutions import MAX_DIRECT, enumerate_solutions


class LengthMismatch(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class RatioDecomposition:
    ratios: tuple  # distinct quotients, ascending
    parts: tuple  # 1-based index tuples, one per ratio
    subsequences: tuple  # Sequence per part
    ratio_sets: tuple  # frozenset of subsums per part

    @property
    def d(self):
        return len(self.ratios)

    def excess(self):
        """sum over parts of (|Sigma_i| - 1)."""
        return sum(len(s) - 1 for s in self.ratio_sets)


def _residues(B, p, l):
    b = [int(x) % p for x in B]
    if len(b) != l:
        raise LengthMismatch(f"expected {l} entries, got {len(b)}")
    return b


def decompose(A, B):
    p, l = A.p, len(A)
    b = _residues(B, p, l)
    groups = {}
    for i, (a, bi) in enumerate(zip(A.entries, b), start=1):
        groups.setdefault(bi * inverse(a, p) % p, []).append(i)
    ratios = tuple(sorted(groups))
    parts = tuple(tuple(groups[lam]) for lam in ratios)
    subs = tuple(Sequence(p, [A[i - 1] for i in part]) for part in parts)
    return RatioDecomposition(ratios, parts, subs, tuple(subsums(s) for s in subs))


@dataclass(frozen=True)
class NecessaryConditions:
    d: int
    excess: int
    sums_disjoint: bool  # Sigma_i and -Sigma_j share only 0
    size_bounds: bool  # l <= excess <= p
    weighted_sum: bool  # excess == p forces sum lambda_i (|Sigma_i| - 1) == 0
    zero_ratio: bool

    @property
    def passed(self):
        return self.sums_disjoint and self.size_bounds and self.weighted_sum

    def as_dict(self):
        return {
            "d": self.d,
            "excess": self.excess,
            "sums_disjoint": self.sums_disjoint,
            "size_bounds": self.size_bounds,
            "weighted_sum": self.weighted_sum,
            "zero_ratio": self.zero_ratio,
            "passed": self.passed,
        }


def solutions_contained(A, B):
    """True when every 0-1 solution for A also solves B."""
    p = A.p
    b = np.array(_residues(B, p, len(A)), dtype=np.int64)
    x = enumerate_solutions(A).indicators()
    return not ((x @ b) % p).any()


def check_necessary_conditions(A, B):
    p, l = A.p, len(A)
    if l <= MAX_DIRECT and not solutions_contained(A, B):
        raise PreconditionViolated("some 0-1 solution of A does not solve B")
    dec = decompose(A, B)
    zero_ratio = 0 in dec.ratios
    if dec.d == 1:
        return NecessaryConditions(1, dec.excess(), True, True, True, zero_ratio)
    sets = dec.ratio_sets
    disjoint = all(
        sets[i] & {(-s) % p for s in sets[j]} == {0}
        for i in range(dec.d)
        for j in range(dec.d)
        if i != j
    )
    excess = dec.excess()
    weighted = True
    if excess == p:
        weighted = sum(lam * (len(s) - 1) for lam, s in zip(dec.ratios, sets)) % p == 0
    return NecessaryConditions(dec.d, excess, disjoint, l <= excess <= p, weighted, zero_ratio)
