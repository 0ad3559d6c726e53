"""Structure classes for sequences of length p-1, p and beyond.

Every sequence of length >= p-1 falls into one of finitely many explicit
families, each with a known value of dim(A).  :func:`classify` matches the
families in a fixed order and reports the first hit; :func:`reconstruct`
recovers every B whose solution set contains (or equals) that of A.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fp import inverse, nullspace_basis
from .ratios import LengthMismatch
from .sequences import Sequence
from .solutions import MAX_DIRECT, TooLong, enumerate_solutions, solution_dim, subset_sums

MAX_CODIM = 5

# l = p
CONSTANT = "Constant"
EXCEPTIONAL_P = "ExceptionalP"
FULL_RANK = "FullRank"
# l = p - 1, zero-sum
ZS_NEAR_CONSTANT = "ZS_NearConstant"
ZS_FORM_II = "ZS_FormII"
ZS_FORM_III = "ZS_FormIII"
ZS_FORM_IV = "ZS_FormIV"
ZS_SPORADIC_7 = "ZS_Sporadic7"
ZS_FULL_RANK = "ZS_FullRank"
# other lengths
LONGER_THAN_P = "LongerThanP"
NON_ZERO_SUM = "NonZeroSum"

EXCEPTIONAL_TAGS = {CONSTANT, EXCEPTIONAL_P, ZS_NEAR_CONSTANT, ZS_FORM_II, ZS_FORM_III, ZS_FORM_IV}

# value map turning (-1, 1, -2, 2, -3, 3) into its non-collinear partner
# (-1, 1, 3, -3, 2, -2) mod 7
SPORADIC_PARTNER = {6: 6, 1: 1, 5: 3, 2: 4, 4: 2, 3: 5}


class UnsupportedLength(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class StructureClass:
    tag: str
    predicted_dim: int
    t: int = None
    r: int = None
    witness: tuple = None  # A[witness[i]] is the i-th entry of the family pattern
    lifted: "StructureClass" = None

    @property
    def label(self):
        if self.lifted is not None:
            return f"{self.tag}({self.lifted.tag})"
        return self.tag

    def as_dict(self, verified_dim=None):
        src = self.lifted if self.lifted is not None else self
        return {
            "tag": self.label,
            "t": src.t,
            "r": src.r,
            "predicted_dim": self.predicted_dim,
            "verified_dim": verified_dim,
        }


def _patterns(p, l):
    """Family instances in family order: (tag, t, r, pattern, dim)."""
    rs = range(1, p)
    if l == p:
        for r in rs:
            yield CONSTANT, None, r, [r] * p, 1
        for t in range(1, p - 2):
            for r in rs:
                yield EXCEPTIONAL_P, t, r, [r] * t + [-r] * (p - 2 - t) + [-(t + 1) * r] * 2, p - 2
    elif l == p - 1:
        for r in rs:
            yield ZS_NEAR_CONSTANT, None, r, [r] * (p - 2) + [2 * r], 1
        if p >= 5:
            for r in rs:
                yield ZS_FORM_II, None, r, [r] * (p - 5) + [-r] + [2 * r] * 3, p - 4
        for t in range(0, p - 5):
            for r in rs:
                pat = [r] * t + [-r] * (p - 4 - t) + [2 * r] + [-(t + 3) * r] * 2
                yield ZS_FORM_III, t, r, pat, p - 3
        for t in range(1, p - 3):
            for r in rs:
                pat = [r] * t + [-r] * (p - 3 - t) + [-(t + 1) * r, -(t + 2) * r]
                yield ZS_FORM_IV, t, r, pat, p - 3
        if p == 7:
            yield ZS_SPORADIC_7, None, None, [-1, 1, -2, 2, -3, 3], 4


@lru_cache(maxsize=None)
def _family_table(p, l):
    table = {}
    for tag, t, r, pat, dim in _patterns(p, l):
        pat = tuple(x % p for x in pat)
        key = tuple(sorted(pat))
        # first match in family order (then smallest t, then smallest r) wins
        table.setdefault(key, (tag, t, r, pat, dim))
    return table


def _witness(entries, pattern):
    slots = {}
    for i, a in enumerate(entries):
        slots.setdefault(a, []).append(i)
    return tuple(slots[v].pop(0) for v in pattern)


def _match(A, l):
    hit = _family_table(int(A.p), l).get(tuple(sorted(A.entries)))
    if hit is None:
        return None
    tag, t, r, pat, dim = hit
    return StructureClass(tag, dim, t, r, _witness(A.entries, pat))


def classify(A):
    p, l = A.p, len(A)
    if l > p:
        return StructureClass(LONGER_THAN_P, l - 1)
    if l < p - 1:
        raise UnsupportedLength(f"no classification for length {l} < p - 1 = {p - 1}")
    if l == p:
        return _match(A, l) or StructureClass(FULL_RANK, p - 1)
    if A.sigma != 0:
        lifted = classify(A.completed())
        return StructureClass(NON_ZERO_SUM, lifted.predicted_dim - 1, lifted=lifted)
    return _match(A, l) or StructureClass(ZS_FULL_RANK, p - 2)


def _as_residues(B, p):
    return [int(b) % p for b in B]


def collinear(A, B):
    """The scalar lam with B = lam * A, or None."""
    p = A.p
    b = _as_residues(B, p)
    if len(b) != len(A):
        raise LengthMismatch(f"lengths {len(A)} and {len(b)} differ")
    lam = b[0] * inverse(A[0], p) % p
    if lam and all(lam * a % p == x for a, x in zip(A.entries, b)):
        return lam
    return None


def normalize(B, p):
    """Projective representative of B: scaled so the first entry is 1."""
    b = _as_residues(B, p)
    s = inverse(b[0], p)
    return tuple(s * x % p for x in b)


@dataclass(frozen=True)
class ReconstructionResult:
    mode: str
    classes: tuple  # normalized residue tuples, sorted
    collinear_class: tuple

    @property
    def includes_collinear(self):
        return self.collinear_class in self.classes

    def others(self):
        return [c for c in self.classes if c != self.collinear_class]

    def as_dict(self, p):
        return {
            "p": int(p),
            "l": len(self.collinear_class),
            "mode": self.mode,
            "classes": [list(c) for c in self.classes],
            "includes_collinear": self.includes_collinear,
        }


def _zero_counts(cands, p):
    """Number of 0-1 solutions of each candidate row."""
    l = cands.shape[1]
    if l <= 16:
        bits = (np.arange(1 << l)[:, None] >> np.arange(l)) & 1
        return ((bits @ cands.T) % p == 0).sum(axis=0)
    return np.array([np.count_nonzero(subset_sums(row, p) == 0) for row in cands])


def reconstruct(A, mode="equal"):
    """All projective classes B with S_A <= S_B (superset) or S_A = S_B (equal)."""
    if mode not in ("superset", "equal"):
        raise ValueError(f"unknown mode {mode!r}")
    p, l = A.p, len(A)
    if l > MAX_DIRECT:
        raise TooLong(f"length {l} exceeds {MAX_DIRECT}")
    S = enumerate_solutions(A)
    x = S.indicators()
    if len(x):
        dim = solution_dim(A, S)
        ann = nullspace_basis(x, p)
    else:
        dim = 0
        ann = np.eye(l, dtype=np.int64)
    k = l - dim
    if k > MAX_CODIM:
        raise BudgetExceeded(f"annihilator has dimension {k} > {MAX_CODIM}")
    assert len(ann) == k
    # projective points: coefficient vectors whose first nonzero entry is 1
    coeffs = np.array(list(itertools.product(range(p), repeat=k)), dtype=np.int64)
    nz = coeffs != 0
    lead = coeffs[np.arange(len(coeffs)), nz.argmax(axis=1)]
    coeffs = coeffs[nz.any(axis=1) & (lead == 1)]
    cands = (coeffs @ ann) % p
    cands = cands[(cands != 0).all(axis=1)]
    if mode == "equal" and len(cands):
        cands = cands[_zero_counts(cands, p) == len(S)]
    classes = tuple(sorted({normalize(row, p) for row in cands.tolist()}))
    return ReconstructionResult(mode, classes, normalize(A.entries, p))


def _swap_form(a, b, lam, p):
    """Positions (i, j) if b equals lam * a with the entries at i, j swapped."""
    diff = [k for k in range(len(a)) if b[k] != lam * a[k] % p]
    if len(diff) != 2:
        return None
    i, j = diff
    if b[i] == lam * a[j] % p and b[j] == lam * a[i] % p:
        return i, j
    return None


def _rest_is_pm(rest, r, p, t):
    c = Counter(rest)
    return c[r % p] == t and c[-r % p] == len(rest) - t and len(c) <= 2


def partner_form(A, B):
    """Which non-collinear pairing (i), (ii), (iii) relates A and B, if any.

    Only meaningful for length p - 1; returns None when no form applies.
    """
    p, l = A.p, len(A)
    a = list(A.entries)
    b = _as_residues(B, p)
    if l != p - 1 or len(b) != l or 0 in b:
        return None
    for lam in range(1, p):
        if p == 7 and sorted(a) == list(range(1, 7)):
            if all(b[k] == lam * SPORADIC_PARTNER[a[k]] % p for k in range(l)):
                return "iii"
        ij = _swap_form(a, b, lam, p)
        if ij is None:
            continue
        i, j = ij
        rest = [a[k] for k in range(l) if k not in ij]
        pair = {a[i], a[j]}
        for r in range(1, p):
            if pair == {r, 2 * r % p} and all(x == r for x in rest):
                return "i"
            for t in range(1, p - 3):
                if pair == {-(t + 1) * r % p, -(t + 2) * r % p} and _rest_is_pm(rest, r, p, t):
                    return "ii"
    return None
