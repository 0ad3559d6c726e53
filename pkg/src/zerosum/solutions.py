"""0-1 solution sets of a1 x1 + ... + al xl = alpha over F_p.

A solution (a *support*) is stored as a Python ``int`` bit mask: bit ``i-1``
is set when index ``i`` of ``[1, l]`` belongs to the support.  Numeric order
of masks with equal popcount is colex order on the underlying subsets.
"""

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .fp import RankAccumulator, row_rank
from .sequences import Sequence

MAX_DIRECT = 32
MAX_MITM = 40
# refuse to materialize solution sets bigger than this many supports
MAX_MEMBERS = 1 << 26
_TABLE_BITS = 20


class TooLong(ValueError):
    pass


class EmptySolutionSet(ValueError):
    pass


def support_indices(mask):
    """1-based sorted index list of a support mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def support_mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def popcount(mask):
    return bin(mask).count("1")


def indicator_matrix(masks, l):
    masks = np.asarray(masks, dtype=np.uint64)
    shifts = np.arange(l, dtype=np.uint64)
    return ((masks[:, None] >> shifts) & np.uint64(1)).astype(np.int64)


def subset_sums(entries, p):
    """Array ``s`` of length 2**l with ``s[mask]`` the subset sum mod p."""
    sums = np.zeros(1, dtype=np.int64)
    for a in entries:
        sums = np.concatenate([sums, (sums + a) % p])
    return sums


def _check_size(l, p, cap):
    if l > cap:
        raise TooLong(f"length {l} exceeds the cap of {cap}")
    if (1 << l) // p > MAX_MEMBERS:
        raise TooLong(f"about 2^{l}/{p} supports would not fit in memory")


def _solve_direct(entries, p, alpha):
    l = len(entries)
    low = min(l, _TABLE_BITS)
    table = subset_sums(entries[:low], p)
    if low == l:
        return np.flatnonzero(table == alpha).astype(np.uint64)
    high = subset_sums(entries[low:], p)
    base = np.arange(table.size, dtype=np.uint64)
    parts = []
    for hi, s in enumerate(high):
        hit = base[table == (alpha - s) % p]
        if hit.size:
            parts.append(hit | np.uint64(hi << low))
    if not parts:
        return np.zeros(0, dtype=np.uint64)
    return np.concatenate(parts)


def _solve_mitm(entries, p, alpha):
    l = len(entries)
    h = (l + 1) // 2
    left = subset_sums(entries[:h], p)
    right = subset_sums(entries[h:], p)
    left_masks = np.arange(left.size, dtype=np.uint64)
    right_masks = np.arange(right.size, dtype=np.uint64) << np.uint64(h)
    parts = []
    for c in range(p):
        rs = right_masks[right == c]
        ls = left_masks[left == (alpha - c) % p]
        if rs.size and ls.size:
            parts.append((ls[None, :] | rs[:, None]).ravel())
    if not parts:
        return np.zeros(0, dtype=np.uint64)
    return np.sort(np.concatenate(parts))


@dataclass(eq=False)
class SolutionSet:
    """All supports J with sum_{j in J} a_j = target."""

    p: int
    l: int
    target: int
    members: np.ndarray  # sorted uint64 masks

    def __len__(self):
        return len(self.members)

    def __contains__(self, mask):
        i = np.searchsorted(self.members, np.uint64(mask))
        return i < len(self.members) and int(self.members[i]) == mask

    def __iter__(self):
        return (int(m) for m in self.members)

    def indicators(self):
        return indicator_matrix(self.members, self.l)

    @cached_property
    def span_rank(self):
        if len(self.members) == 0:
            return 0
        return row_rank(self.indicators(), self.p)

    @cached_property
    def affine_rank(self):
        if len(self.members) == 0:
            raise EmptySolutionSet("no 0-1 solution hits this target")
        x = self.indicators()
        diff = (x[1:] - x[0]) % self.p
        if len(diff) == 0:
            return 0
        return row_rank(diff, self.p)

    @property
    def dim(self):
        """Dimension of the affine hull (the linear span when target is 0)."""
        return self.span_rank if self.target == 0 else self.affine_rank

    def ordered(self):
        """Supports sorted by (cardinality, colex)."""
        return sorted(self, key=lambda m: (popcount(m), m))

    def as_dict(self):
        return {
            "p": int(self.p),
            "l": self.l,
            "alpha": int(self.target),
            "solutions": [support_indices(m) for m in self.ordered()],
            "dim": self.dim if len(self.members) else None,
        }

    def to_json(self):
        return json.dumps(self.as_dict())


def enumerate_solutions(A, alpha=0, mode="direct"):
    """Materialize S_A^alpha; ``mode`` is ``"direct"`` or ``"mitm"``."""
    p, l = A.p, len(A)
    alpha %= p
    if mode == "direct":
        _check_size(l, p, MAX_DIRECT)
        members = _solve_direct(A.entries, p, alpha)
    elif mode == "mitm":
        _check_size(l, p, MAX_MITM)
        members = _solve_mitm(A.entries, p, alpha)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return SolutionSet(p, l, alpha, members)


def solution_dim(A, solutions=None):
    """dim(A): rank over F_p of the indicator vectors of S_A."""
    l, p = len(A), A.p
    if solutions is None:
        solutions = enumerate_solutions(A)
    x = solutions.indicators()
    if len(x) == 0:
        return 0
    target = l - 1
    # a few spread-out rows usually saturate the rank already
    if len(x) > 3 * l:
        probe = x[np.linspace(0, len(x) - 1, 2 * l).astype(int)]
        if row_rank(probe, p, stop_at=target) == target:
            return target
    return row_rank(x, p, stop_at=target)


def minimal_solutions(S):
    """Inclusion-minimal nonempty supports, ordered by (cardinality, colex)."""
    members = S.members[S.members != 0]
    if members.size == 0:
        return []
    x = members.copy()
    counts = np.zeros(len(x), dtype=np.int64)
    while x.any():
        counts += (x & np.uint64(1)).astype(np.int64)
        x >>= np.uint64(1)
    found = np.zeros(0, dtype=np.uint64)
    for k in np.unique(counts):
        level = members[counts == k]
        if found.size:
            covered = ((level[:, None] & found[None, :]) == found[None, :]).any(axis=1)
            level = level[~covered]
        found = np.concatenate([found, level])
    return [int(m) for m in found]


def _decompose(mask, minimals):
    """Split a support into disjoint minimal supports."""
    parts = []
    while mask:
        for m in minimals:
            if m & ~mask == 0:
                parts.append(m)
                mask ^= m
                break
        else:
            raise AssertionError("support is not a union of minimal solutions")
    return parts


def minimal_basis(A, solutions=None):
    """Basis of A^perp made of minimal solutions, or None if dim(A) < l-1.

    Rows of the returned 0/1 matrix are the indicator vectors.
    """
    l, p = len(A), A.p
    if solutions is None:
        solutions = enumerate_solutions(A)
    acc = RankAccumulator(l, p)
    chosen = []
    for m in solutions.ordered():
        if m and acc.add(indicator_matrix([m], l)[0]):
            chosen.append(m)
            if acc.rank == l - 1:
                break
    if acc.rank < l - 1:
        return None
    minimals = minimal_solutions(solutions)
    strips = []
    for e in chosen:
        for m in _decompose(e, minimals):
            if m not in strips:
                strips.append(m)
    acc = RankAccumulator(l, p)
    basis = [m for m in strips if acc.add(indicator_matrix([m], l)[0])]
    return indicator_matrix(basis, l)


def exceptional_pairs(A, solutions=None):
    """Pairs (i, j), 1-based, that every solution meets in 0 or 2 indices."""
    l = len(A)
    _check_size(l, A.p, MAX_DIRECT)
    if solutions is None:
        solutions = enumerate_solutions(A)
    x = solutions.indicators()
    pairs = []
    for i in range(l):
        same = (x[:, i + 1:] == x[:, i:i + 1]).all(axis=0)
        pairs.extend((i + 1, i + 2 + int(j)) for j in np.flatnonzero(same))
    return pairs


def is_exceptional(A, solutions=None):
    return bool(exceptional_pairs(A, solutions))


def _same_weight_masks(l, k):
    # Gosper's hack: k-subsets of [1, l] in colex order
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    while m < 1 << l:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


@dataclass(frozen=True)
class AffineReduction:
    """Witness I with sum_{i in I} a_i = alpha and the sequence A_I.

    ``flip`` toggles the coordinates in I; it carries S_A^alpha onto
    S_{A_I} and is its own inverse.
    """

    I: int
    reduced: Sequence

    def flip(self, mask):
        return mask ^ self.I

    @property
    def indices(self):
        return support_indices(self.I)


def affine_reduce(A, alpha):
    p, l = A.p, len(A)
    alpha %= p
    hit = None
    if l <= _TABLE_BITS:
        sums = subset_sums(A.entries, p)
        masks = np.flatnonzero(sums == alpha)
        if masks.size:
            weights = np.array([popcount(int(m)) for m in masks])
            hit = int(masks[np.lexsort((masks, weights))[0]])
    else:
        for k in range(l + 1):
            for m in _same_weight_masks(l, k):
                if sum(A[i - 1] for i in support_indices(m)) % p == alpha:
                    hit = m
                    break
            if hit is not None:
                break
    if hit is None:
        return None
    reduced = Sequence(p, [-a if hit >> i & 1 else a for i, a in enumerate(A)])
    return AffineReduction(hit, reduced)


def affine_dim(A, alpha, solutions=None):
    """Dimension of the affine hull of S_A^alpha."""
    if solutions is None:
        solutions = enumerate_solutions(A, alpha)
    return solutions.affine_rank
