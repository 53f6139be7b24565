"""Dense GF(2) linear algebra on bit-packed rows.

A matrix with ``ncols`` columns is a list of Python ints; bit ``j`` of row ``i``
is the entry ``(i, j)``.  Matrices here have at most a few hundred rows, so
plain Gaussian elimination on ints is fast enough.
"""

from __future__ import annotations

from typing import List, Optional, Sequence


class SingularMatrix(ArithmeticError):
    """Raised when an inverse or unique solution is requested of a singular matrix."""


def pack(rows: Sequence[Sequence[int]]) -> List[int]:
    out = []
    for r in rows:
        v = 0
        for j, b in enumerate(r):
            if b & 1:
                v |= 1 << j
        out.append(v)
    return out


def unpack(rows: Sequence[int], ncols: int) -> List[List[int]]:
    return [[(r >> j) & 1 for j in range(ncols)] for r in rows]


def rank(rows: Sequence[int]) -> int:
    """Rank via an xor basis keyed by leading bit."""
    basis: dict = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in basis:
                r ^= basis[h]
            else:
                basis[h] = r
                break
    return len(basis)


def transpose(rows: Sequence[int], ncols: int) -> List[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return out


def inverse(rows: Sequence[int]) -> List[int]:
    """Inverse of a square matrix; raises :class:`SingularMatrix`."""
    n = len(rows)
    a = list(rows)
    inv = [1 << i for i in range(n)]
    for c in range(n):
        bit = 1 << c
        piv = next((i for i in range(c, n) if a[i] & bit), None)
        if piv is None:
            raise SingularMatrix("matrix of size %d is singular (column %d)" % (n, c))
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        for i in range(n):
            if i != c and a[i] & bit:
                a[i] ^= a[c]
                inv[i] ^= inv[c]
    if any(a[i] != 1 << i for i in range(n)):
        raise SingularMatrix("matrix is not square-invertible")
    return inv


def mat_vec(rows: Sequence[int], v: int) -> int:
    """``A v`` with ``v`` a bit vector; result bit ``i`` is row ``i`` dotted with ``v``."""
    out = 0
    for i, r in enumerate(rows):
        if bin(r & v).count("1") & 1:
            out |= 1 << i
    return out


def vec_mat(v: int, rows: Sequence[int]) -> int:
    """``v A``: xor of the rows selected by ``v``."""
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= rows[i]
        v >>= 1
        i += 1
    return out


def mat_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    return [vec_mat(r, b) for r in a]


def solve(rows: Sequence[int], ncols: int, rhs: int) -> Optional[int]:
    """Some ``x`` with ``A x = rhs`` (bit ``i`` of ``rhs`` for row ``i``), or
    ``None`` when the system is inconsistent."""
    aug = [(r, (rhs >> i) & 1) for i, r in enumerate(rows)]
    pivots = []
    k = 0
    for c in range(ncols):
        bit = 1 << c
        piv = next((i for i in range(k, len(aug)) if aug[i][0] & bit), None)
        if piv is None:
            continue
        aug[k], aug[piv] = aug[piv], aug[k]
        pr, pb = aug[k]
        for i in range(len(aug)):
            if i != k and aug[i][0] & bit:
                aug[i] = (aug[i][0] ^ pr, aug[i][1] ^ pb)
        pivots.append(c)
        k += 1
    if any(b for r, b in aug[k:]):
        return None
    x = 0
    for i, c in enumerate(pivots):
        if aug[i][1]:
            x |= 1 << c
    return x
