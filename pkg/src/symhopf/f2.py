"""Formal sums with coefficients in GF(2).

An :class:`F2Sum` is an immutable finite set of terms; addition is symmetric
difference.  Terms must be hashable and totally ordered (``<``), which is what
makes iteration and rendering deterministic.
"""

from __future__ import annotations

from typing import Callable, Generic, Hashable, Iterable, Iterator, TypeVar

T = TypeVar("T", bound=Hashable)
U = TypeVar("U", bound=Hashable)


def binom_mod2(n: int, k: int) -> int:
    """Binomial coefficient ``C(n, k)`` reduced mod 2.

    Uses Lucas: the coefficient is odd iff the binary digits of ``k`` are a
    subset of those of ``n``.  Zero unless ``0 <= k <= n``.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def digit_disjoint(a: int, b: int) -> bool:
    """True when ``a`` and ``b`` share no binary digit, i.e. C(a+b, a) is odd."""
    return (a & b) == 0


def submasks(n: int) -> Iterator[int]:
    """All ``k`` with C(n, k) odd, in increasing order."""
    out = []
    s = n
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & n
    return reversed(out)


def parity_set(terms: Iterable[T]) -> frozenset:
    s: set = set()
    for t in terms:
        if t in s:
            s.remove(t)
        else:
            s.add(t)
    return frozenset(s)


class F2Sum(Generic[T]):
    """A GF(2) linear combination of terms, stored as the set of terms with
    coefficient one."""

    __slots__ = ("_terms", "_sorted")

    def __init__(self, terms: Iterable[T] = ()):
        self._terms = parity_set(terms)
        self._sorted = None

    @classmethod
    def from_set(cls, terms: Iterable[T]) -> "F2Sum[T]":
        """Build from terms already known to be distinct (no reduction)."""
        out = cls.__new__(cls)
        out._terms = frozenset(terms)
        out._sorted = None
        return out

    @classmethod
    def zero(cls) -> "F2Sum[T]":
        return cls.from_set(())

    @classmethod
    def single(cls, term: T) -> "F2Sum[T]":
        return cls.from_set((term,))

    @property
    def terms(self) -> frozenset:
        return self._terms

    def sorted_terms(self) -> tuple:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms))
        return self._sorted

    def __iter__(self) -> Iterator[T]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, term) -> bool:
        return term in self._terms

    def __add__(self, other: "F2Sum[T]") -> "F2Sum[T]":
        if not isinstance(other, F2Sum):
            return NotImplemented
        return F2Sum.from_set(self._terms ^ other._terms)

    __sub__ = __add__

    def __eq__(self, other) -> bool:
        if isinstance(other, F2Sum):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "F2Sum(0)"
        return "F2Sum(%s)" % " + ".join(map(repr, self))

    def map(self, f: Callable[[T], "F2Sum[U]"]) -> "F2Sum[U]":
        """Extend ``f`` linearly: sum of ``f(t)`` over the terms."""
        acc: set = set()
        for t in self._terms:
            acc ^= f(t)._terms
        return F2Sum.from_set(acc)


def linear_sum(parts: Iterable[F2Sum]) -> F2Sum:
    acc: set = set()
    for p in parts:
        acc ^= p.terms
    return F2Sum.from_set(acc)


def bilinear(a: F2Sum, b: F2Sum, f: Callable) -> F2Sum:
    """Extend a map on term pairs bilinearly."""
    acc: set = set()
    for x in a.terms:
        for y in b.terms:
            acc ^= f(x, y).terms
    return F2Sum.from_set(acc)


def tensor(a: F2Sum, b: F2Sum) -> F2Sum:
    """``a ⊗ b`` with tensor terms represented as pairs."""
    return F2Sum.from_set((x, y) for x in a.terms for y in b.terms)


def swap(t: F2Sum) -> F2Sum:
    return F2Sum.from_set((y, x) for x, y in t.terms)
