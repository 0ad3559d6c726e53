"""Sequences of nonzero residues, their subsums and canonical forms."""

import itertools
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .fp import Prime, inverse

FILTERS = ("all", "zero_sum", "nonzero_sum")

_TEXT_RE = re.compile(r"p=(\d+);A=(\d+(?:,\d+)*)")


@dataclass(frozen=True)
class Sequence:
    """An ordered sequence ``a_1, ..., a_l`` of nonzero residues mod ``p``.

    Entries are reduced mod p on construction, so ``Sequence(7, [-1, 1])``
    is the same object as ``Sequence(7, [6, 1])``.
    """

    p: Prime
    entries: tuple

    def __post_init__(self):
        p = Prime(self.p)
        entries = tuple(int(a) % p for a in self.entries)
        if not entries:
            raise ValueError("a sequence needs at least one entry")
        if 0 in entries:
            raise ValueError(f"entries must be nonzero mod {p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text):
        m = _TEXT_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"cannot parse sequence {text!r}; expected 'p=<int>;A=<c1>,<c2>,...'")
        p = Prime(int(m.group(1)))
        entries = [int(c) for c in m.group(2).split(",")]
        for c in entries:
            if not 1 <= c < p:
                raise ValueError(f"residue {c} outside [1, {p - 1}]")
        return cls(p, entries)

    def __str__(self):
        return f"p={int(self.p)};A=" + ",".join(map(str, self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def sigma(self):
        return sum(self.entries) % self.p

    @property
    def is_zero_sum(self):
        return self.sigma == 0

    def scale(self, lam):
        return Sequence(self.p, [lam * a for a in self.entries])

    def permute(self, perm):
        """Sequence whose i-th entry is ``self[perm[i]]`` (0-based)."""
        return Sequence(self.p, [self.entries[j] for j in perm])

    def append(self, a):
        return Sequence(self.p, self.entries + (a,))

    def completed(self):
        """The zero-sum extension ``(a_1, ..., a_l, -sigma(A))``."""
        if self.sigma == 0:
            raise ValueError("sequence is already zero-sum")
        return self.append(-self.sigma)

    def as_array(self):
        return np.array(self.entries, dtype=np.int64)


def _subsum_bits(entries, p):
    full = (1 << p) - 1
    bits = 1
    for a in entries:
        bits |= ((bits << a) | (bits >> (p - a))) & full
    return bits


def subsums(A):
    """The set of all subset sums of ``A`` (always contains 0)."""
    bits = _subsum_bits(A.entries, A.p)
    return frozenset(s for s in range(A.p) if bits >> s & 1)


def subsum_count(A):
    return bin(_subsum_bits(A.entries, A.p)).count("1")


def multiplicity_profile(A):
    """Counts of each pair {a, -a} in ``A``, largest first."""
    pairs = Counter(min(a, A.p - a) for a in A.entries)
    return tuple(sorted(pairs.values(), reverse=True))


def thb_lower_bound(profile, p):
    return min(int(p), 1 + sum(i * m for i, m in enumerate(profile, start=1)))


@dataclass(frozen=True)
class CanonicalForm:
    """Orbit representative with witnesses.

    ``representative[permutation[i]] == scale * A[i]`` for every position i.
    """

    representative: Sequence
    scale: int
    permutation: tuple

    def recover(self):
        rep = self.representative
        back = inverse(self.scale, rep.p)
        return Sequence(rep.p, [back * rep[j] for j in self.permutation])


def canonical_form(A):
    p = A.p
    best = None
    best_lam = None
    for lam in range(1, p):
        cand = tuple(sorted(lam * a % p for a in A.entries))
        if best is None or cand < best:
            best, best_lam = cand, lam
    scaled = [best_lam * a % p for a in A.entries]
    order = sorted(range(len(scaled)), key=lambda i: (scaled[i], i))
    perm = [0] * len(scaled)
    for pos, i in enumerate(order):
        perm[i] = pos
    return CanonicalForm(Sequence(p, best), best_lam, tuple(perm))


def is_canonical(entries, p):
    """True when ``entries`` (sorted ascending) is the least sorted scaling."""
    t = tuple(entries)
    for lam in range(2, p):
        if tuple(sorted(lam * a % p for a in t)) < t:
            return False
    return True


def _canonical_mask(block, p):
    # block: (n, l) nondecreasing rows; True where the row is its orbit's minimum
    keep = np.ones(len(block), dtype=bool)
    for lam in range(2, p):
        scaled = np.sort((block * lam) % p, axis=1)
        diff = scaled != block
        first = diff.argmax(axis=1)
        rows = np.arange(len(block))
        smaller = diff.any(axis=1) & (scaled[rows, first] < block[rows, first])
        keep &= ~smaller
    return keep


def enumerate_canonical(p, l, filter="all", shard=(0, 1), chunk=1 << 16):
    """Yield one canonical representative per scaling/permutation orbit.

    Candidates are the nondecreasing tuples over ``[1, p-1]`` in
    lexicographic order; shard ``(k, n)`` keeps every n-th candidate starting
    at index k, so shards partition the stream.
    """
    p = Prime(p)
    if l < 1:
        raise ValueError("length must be >= 1")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    k, n = shard
    if not 0 <= k < n:
        raise ValueError(f"bad shard {shard}")
    stream = itertools.combinations_with_replacement(range(1, p), l)
    stream = itertools.islice(stream, k, None, n)
    while True:
        rows = list(itertools.islice(stream, chunk))
        if not rows:
            return
        block = np.array(rows, dtype=np.int64)
        keep = _canonical_mask(block, p)
        if filter != "all":
            zs = block.sum(axis=1) % p == 0
            keep &= zs if filter == "zero_sum" else ~zs
        for row in block[keep]:
            yield Sequence(p, row.tolist())
