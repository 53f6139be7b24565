"""The Kudo-Araki algebra: words ``q_I = q_{i_1} ∘ ... ∘ q_{i_k}`` and their
reduction to the admissible (non-decreasing) basis by the Adem relation.

Sequences are plain tuples of non-negative ints; ``()`` is the unit.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .f2 import F2Sum, binom_mod2

QSeq = tuple


def is_admissible(seq: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def is_strongly_admissible(seq: Sequence[int]) -> bool:
    return is_admissible(seq) and all(i >= 1 for i in seq)


def seq_degree(seq: Sequence[int]) -> int:
    """``|I| = i_1 + 2 i_2 + ... + 2^{k-1} i_k``."""
    return sum(i << j for j, i in enumerate(seq))


def adem_step(m: int, n: int) -> F2Sum:
    """Rewrite ``q_m ∘ q_n`` (``m > n``) as a sum of admissible pairs."""
    if not m > n >= 0:
        raise ValueError("Adem relation needs m > n >= 0, got (%d, %d)" % (m, n))
    return F2Sum.from_set(_adem_terms(m, n))


@lru_cache(maxsize=None)
def _adem_terms(m: int, n: int) -> tuple:
    out = []
    # 0 <= 2i - m - n <= i - n - 1 and m + 2n - 2i >= 0
    lo = (m + n + 1) // 2
    hi = min(m - 1, (m + 2 * n) // 2)
    for i in range(lo, hi + 1):
        if binom_mod2(i - n - 1, 2 * i - m - n):
            out.append((m + 2 * n - 2 * i, i))
    return tuple(out)


def normalize(seq: Sequence[int]) -> F2Sum:
    """Normal form of ``q_seq`` in the admissible basis."""
    seq = tuple(seq)
    if any(i < 0 for i in seq):
        raise ValueError("Kudo-Araki indices must be non-negative: %r" % (seq,))
    return F2Sum.from_set(_normalize(seq))


@lru_cache(maxsize=None)
def _normalize(seq: tuple) -> frozenset:
    for j in range(len(seq) - 1):
        if seq[j] > seq[j + 1]:
            head, tail = seq[:j], seq[j + 2:]
            acc: set = set()
            for a, b in _adem_terms(seq[j], seq[j + 1]):
                acc ^= _normalize(head + (a, b) + tail)
            return frozenset(acc)
    return frozenset((seq,))


def normalize_rightmost(seq: Sequence[int]) -> F2Sum:
    """Same normal form, rewriting the rightmost violation first.

    Exists to check confluence of the rewriting system; not cached.
    """
    seq = tuple(seq)
    for j in range(len(seq) - 2, -1, -1):
        if seq[j] > seq[j + 1]:
            head, tail = seq[:j], seq[j + 2:]
            acc: set = set()
            for a, b in _adem_terms(seq[j], seq[j + 1]):
                acc ^= normalize_rightmost(head + (a, b) + tail).terms
            return F2Sum.from_set(acc)
    return F2Sum.single(seq)


def compose(a: F2Sum, b: F2Sum) -> F2Sum:
    """Product ``a ∘ b`` in K, normalized."""
    acc: set = set()
    for x in a.terms:
        for y in b.terms:
            acc ^= _normalize(x + y)
    return F2Sum.from_set(acc)


def render_qseq(seq: Sequence[int]) -> str:
    return "q[%s]" % ",".join(map(str, seq))
