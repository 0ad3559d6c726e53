"""Arithmetic and dense linear algebra over the prime field F_p.

Matrices are plain ``numpy`` integer arrays whose entries live in ``[0, p)``.
Everything here is meant for small primes (p <= 17 in practice) and widths
of at most 64 columns, so int64 never overflows during elimination.
"""

import numpy as np

MAX_WIDTH = 64


class ZeroInverse(ZeroDivisionError):
    pass


class Prime(int):
    """An odd prime modulus.

    Behaves like an ``int``; construction fails for composites and for 2.
    """

    def __new__(cls, p):
        p = int(p)
        if p < 3:
            raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
            d += 1
        return super().__new__(cls, p)

    def __repr__(self):
        return f"Prime({int(self)})"


def inverse(a, p):
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def as_matrix(rows, p):
    """Coerce ``rows`` to a 2-d int64 array reduced mod p."""
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m[None, :]
    if m.ndim != 2 or m.shape[1] < 1:
        raise ValueError("expected a non-empty 2-d array of residues")
    if m.shape[1] > MAX_WIDTH:
        raise ValueError(f"width {m.shape[1]} exceeds {MAX_WIDTH}")
    return m % p


def row_reduce(rows, p, stop_at=None):
    """Reduced row echelon form of ``rows`` over F_p.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.  With
    ``stop_at`` set, elimination halts as soon as that many pivots are found.
    The input is never modified.
    """
    m = as_matrix(rows, p).copy()
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows or (stop_at is not None and r >= stop_at):
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = (m[r] * inverse(int(m[r, c]), p)) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def row_rank(rows, p, stop_at=None):
    """Rank over F_p; forward elimination only, optionally capped."""
    m = as_matrix(rows, p).copy()
    inv = _inverse_table(p)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows or (stop_at is not None and r >= stop_at):
            break
        nz = m[r:, c].nonzero()[0]
        if not len(nz):
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        pivot = m[r] * inv[m[r, c]] % p
        m[r + 1:] = (m[r + 1:] - m[r + 1:, c, None] * pivot) % p
        r += 1
    return r


_INVERSES = {}


def _inverse_table(p):
    p = int(p)
    if p not in _INVERSES:
        table = np.zeros(p, dtype=np.int64)
        table[1:] = [pow(a, p - 2, p) for a in range(1, p)]
        _INVERSES[p] = table
    return _INVERSES[p]


def nullspace_basis(rows, p):
    """Basis (as rows) of the right nullspace {v : M v^T = 0} over F_p."""
    m = as_matrix(rows, p)
    ncols = m.shape[1]
    R, pivots = row_reduce(m, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, c in zip(R, pivots):
            basis[i, c] = (-row[f]) % p
    if basis.size:
        assert not ((m @ basis.T) % p).any()
    return basis


class RankAccumulator:
    """Incrementally maintained echelon basis.

    ``add`` reports whether the inserted row enlarged the span, which lets a
    caller stop scanning once the rank has saturated.
    """

    def __init__(self, width, p):
        self.p = int(p)
        self.width = width
        self._rows = {}  # pivot column -> normalized row

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, v):
        p = self.p
        v = np.asarray(v, dtype=np.int64) % p
        for c, row in self._rows.items():
            if v[c]:
                v = (v - v[c] * row) % p
        return v

    def add(self, v):
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * inverse(int(v[c]), self.p)) % self.p
        # keep existing rows reduced against the new pivot
        for k, row in self._rows.items():
            if row[c]:
                self._rows[k] = (row - row[c] * v) % self.p
        self._rows[c] = v
        return True

    def contains(self, v):
        return not self.reduce(v).any()

    def basis(self):
        if not self._rows:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.array([self._rows[c] for c in sorted(self._rows)])
