"""Homology of the symmetric groups in Nakaoka's monomial basis.

A basis element is a Pontryagin monomial ``q_{I_1}(ι) * ... * q_{I_r}(ι) * ι^s``
with every ``I_j`` strongly admissible.  :class:`NakaokaMonomial` stores ``s``
and the sorted multiset of the ``I_j``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Sequence

from .f2 import F2Sum, submasks
from .kudo_araki import _normalize, is_strongly_admissible, render_qseq, seq_degree


@dataclass(frozen=True, order=True)
class NakaokaMonomial:
    iota: int = 0
    factors: tuple = ()

    @property
    def component(self) -> int:
        return self.iota + sum(1 << len(f) for f in self.factors)

    @property
    def degree(self) -> int:
        return sum(seq_degree(f) for f in self.factors)

    def exponents(self) -> Counter:
        return Counter(self.factors)

    def __str__(self) -> str:
        return render_monomial(self)


def monomial(iota: int = 0, factors: Iterable[Sequence[int]] = ()) -> NakaokaMonomial:
    """Validated constructor; the dataclass itself trusts its inputs."""
    if iota < 0:
        raise ValueError("negative iota exponent")
    fs = tuple(sorted(tuple(f) for f in factors))
    for f in fs:
        if not f or not is_strongly_admissible(f):
            raise ValueError("factor %r is not strongly admissible" % (f,))
    return NakaokaMonomial(iota, fs)


UNIT = NakaokaMonomial(0, ())
IOTA = NakaokaMonomial(1, ())


def pontryagin(a: NakaokaMonomial, b: NakaokaMonomial) -> NakaokaMonomial:
    if not b.factors:
        return NakaokaMonomial(a.iota + b.iota, a.factors)
    if not a.factors:
        return NakaokaMonomial(a.iota + b.iota, b.factors)
    return NakaokaMonomial(a.iota + b.iota, tuple(sorted(a.factors + b.factors)))


def power(a: NakaokaMonomial, e: int) -> NakaokaMonomial:
    return NakaokaMonomial(a.iota * e, tuple(sorted(a.factors * e)))


def pontryagin_sum(a: F2Sum, b: F2Sum) -> F2Sum:
    return F2Sum(pontryagin(x, y) for x in a.terms for y in b.terms)


def _from_admissible(seq: tuple) -> NakaokaMonomial:
    k = 0
    while k < len(seq) and seq[k] == 0:
        k += 1
    if k == len(seq):
        return NakaokaMonomial(1 << k, ())
    return NakaokaMonomial(0, (seq[k:],) * (1 << k))


@lru_cache(maxsize=None)
def _apply_qseq(seq: tuple) -> frozenset:
    return frozenset(_from_admissible(t) for t in _normalize(seq))


def apply_qseq(seq: Sequence[int]) -> F2Sum:
    """``q_seq(ι)`` expanded in the monomial basis.

    Leading zeros of an admissible term are squarings: ``q_0(a) = a*a``.
    """
    seq = tuple(seq)
    if any(i < 0 for i in seq):
        raise ValueError("Kudo-Araki indices must be non-negative: %r" % (seq,))
    return F2Sum.from_set(_apply_qseq(seq))


# -- coproducts ------------------------------------------------------------

def _decompositions(seq: tuple):
    for js in iproduct(*(range(i + 1) for i in seq)):
        yield js, tuple(i - j for i, j in zip(seq, js))


@lru_cache(maxsize=None)
def _cup_coproduct_generator(seq: tuple) -> frozenset:
    acc: set = set()
    for js, ks in _decompositions(seq):
        left = _apply_qseq(js)
        right = _apply_qseq(ks)
        acc ^= {(a, b) for a in left for b in right}
    return frozenset(acc)


def _tensor_mul(x: Iterable, y: Iterable) -> frozenset:
    acc: set = set()
    for a, b in x:
        for c, d in y:
            t = (pontryagin(a, c), pontryagin(b, d))
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
    return frozenset(acc)


def _tensor_square(x: Iterable) -> frozenset:
    # Frobenius: cross terms cancel in characteristic 2
    return frozenset((power(a, 2), power(b, 2)) for a, b in x)


@lru_cache(maxsize=None)
def _cup_coproduct_power(seq: tuple, e: int) -> frozenset:
    if e == 1:
        return _cup_coproduct_generator(seq)
    half = _cup_coproduct_power(seq, e // 2)
    out = _tensor_square(half)
    if e % 2:
        out = _tensor_mul(out, _cup_coproduct_generator(seq))
    return out


@lru_cache(maxsize=None)
def _cup_coproduct(m: NakaokaMonomial) -> frozenset:
    iota = NakaokaMonomial(m.iota, ())
    acc = frozenset(((iota, iota),))
    for seq, e in sorted(m.exponents().items()):
        acc = _tensor_mul(acc, _cup_coproduct_power(seq, e))
    return acc


def cup_coproduct(m: NakaokaMonomial) -> F2Sum:
    """Coproduct dual to the cup product.

    On generators ``Δ q_I = Σ_{J+K=I} q_J ⊗ q_K`` (entrywise, zeros allowed)
    with each side reduced through the Adem and ``q_0`` relations, and
    ``Δ ι = ι ⊗ ι``; extended multiplicatively.
    """
    return F2Sum.from_set(_cup_coproduct(m))


@lru_cache(maxsize=None)
def _transfer_coproduct(m: NakaokaMonomial) -> frozenset:
    gens = [((), m.iota)] if m.iota else []
    gens += sorted(m.exponents().items())
    out = []
    for choice in iproduct(*(tuple(submasks(e)) for _, e in gens)):
        li, lf, ri, rf = 0, [], 0, []
        for (g, e), a in zip(gens, choice):
            if g == ():
                li, ri = a, e - a
            else:
                lf += [g] * a
                rf += [g] * (e - a)
        out.append((NakaokaMonomial(li, tuple(sorted(lf))),
                    NakaokaMonomial(ri, tuple(sorted(rf)))))
    return frozenset(out)


def transfer_coproduct(m: NakaokaMonomial) -> F2Sum:
    """Coproduct dual to the transfer product.

    Every ``q_I(ι)`` is primitive and ``ι`` is group-like for the split of
    components, so ``Δ(g^e) = Σ C(e, a) g^a ⊗ g^{e-a}``; only ``a`` whose binary
    digits lie inside those of ``e`` survive mod 2.
    """
    return F2Sum.from_set(_transfer_coproduct(m))


def cup_coproduct_sum(x: F2Sum) -> F2Sum:
    return x.map(cup_coproduct)


def transfer_coproduct_sum(x: F2Sum) -> F2Sum:
    return x.map(transfer_coproduct)


# -- bases -----------------------------------------------------------------

@lru_cache(maxsize=None)
def strongly_admissible(length: int, max_degree: int) -> tuple:
    """Strongly admissible sequences of a given length and degree <= bound."""
    out = []

    def rec(prefix, lo, deg):
        j = len(prefix)
        if j == length:
            out.append(tuple(prefix))
            return
        # the remaining entries are >= i, so weight at least i * (2^length - 2^j)
        i = lo
        while deg + i * ((1 << length) - (1 << j)) <= max_degree:
            rec(prefix + [i], i, deg + (i << j))
            i += 1

    if length >= 1:
        rec([], 1, 0)
    return tuple(sorted(out, key=lambda s: (seq_degree(s), s)))


@lru_cache(maxsize=None)
def generators(max_component: int, max_degree: int) -> tuple:
    """(sequence, component, degree) for all ``q_I(ι)`` within the bounds."""
    out = []
    k = 1
    while (1 << k) <= max_component:
        for s in strongly_admissible(k, max_degree):
            out.append((s, 1 << k, seq_degree(s)))
        k += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _basis(n: int, d: int) -> tuple:
    gens = generators(n, d)
    out = []

    def rec(idx, comp, deg, chosen):
        if deg == d:
            out.append(NakaokaMonomial(n - comp, tuple(sorted(chosen))))
        if idx == len(gens):
            return
        for j in range(idx, len(gens)):
            s, c, g = gens[j]
            if comp + c <= n and deg + g <= d:
                chosen.append(s)
                rec(j, comp + c, deg + g, chosen)
                chosen.pop()

    rec(0, 0, 0, [])
    return tuple(sorted(set(out)))


def basis(component: int, degree: int) -> list:
    """All Nakaoka monomials of the given component and degree, sorted."""
    if component < 0 or degree < 0:
        raise ValueError("component and degree must be non-negative")
    return list(_basis(component, degree))


# -- rendering -------------------------------------------------------------

def render_monomial(m: NakaokaMonomial) -> str:
    parts = []
    for seq, e in sorted(m.exponents().items()):
        parts.append(render_qseq(seq) + ("^%d" % e if e > 1 else ""))
    if m.iota:
        parts.append("i" + ("^%d" % m.iota if m.iota > 1 else ""))
    return "*".join(parts) if parts else "1"


def render_sum(x: F2Sum) -> str:
    if not x:
        return "0"
    return " + ".join(render_monomial(m) for m in x)


def render_tensor_sum(x: F2Sum) -> str:
    if not x:
        return "0"
    return " + ".join("%s (x) %s" % (render_monomial(a), render_monomial(b)) for a, b in x)
