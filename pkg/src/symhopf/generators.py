"""Alternative generating sets.

* Feshbach's minimal cup-product generators of ``H^*(BS_m)``, indexed by
  Dickson partitions, written as gathered monomials.
* Stiefel-Whitney classes ``w_{i,n}``, computed as the functional that is one
  exactly on products of ``q_{1,...,1}(ι)`` and powers of ``ι``, together with
  the bi-partition formula for the coproduct of ``w(k, ℓ)``.
* An oracle in ``H_*(⊔ BO(n))``: the Kudo-Araki action on the classes
  ``b_i`` extended by the Cartan formula, which gives the same
  Stiefel-Whitney functionals by a separate route.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, List, Optional, Sequence, Tuple

from . import cohomology as coh
from . import duality
from .cohomology import GatheredBlock, GatheredMonomial
from .f2 import F2Sum, tensor
from .gf2 import rank
from .homology import NakaokaMonomial


# -- Dickson partitions and Feshbach generators ----------------------------

@dataclass(frozen=True, order=True)
class DicksonPartition:
    """``p = Σ_{k<n} t_k 2^k (2^{n-k} - 1)`` with some ``t_k`` odd."""

    level: int
    t: tuple

    def __post_init__(self):
        if self.level < 1 or len(self.t) != self.level:
            raise ValueError("a level-n partition has exactly n coefficients, n >= 1")
        if any(x < 0 for x in self.t):
            raise ValueError("coefficients must be non-negative")
        if not any(x % 2 for x in self.t):
            raise ValueError("some coefficient must be odd")

    @property
    def value(self) -> int:
        n = self.level
        return sum(t * (1 << k) * ((1 << (n - k)) - 1) for k, t in enumerate(self.t))

    def __str__(self):
        n = self.level
        terms = ["%d*%d" % (t, (1 << k) * ((1 << (n - k)) - 1))
                 for k, t in enumerate(self.t) if t]
        return "%d = %s" % (self.value, " + ".join(terms))


def _powers(t: int) -> List[int]:
    return [1 << i for i in range(t.bit_length()) if t >> i & 1]


def mu(lam: DicksonPartition) -> int:
    """The width function of a Dickson partition.

    Let ``2^ℓ`` be the largest power of two appearing in the binary expansions
    of two different ``t_k``.  Then ``μ = 2^{ℓ+1} + Σ 2^d`` over the powers
    ``2^d > 2^ℓ`` that occur; with no overlap ``μ = Σ t_k``.  (The repeated
    power contributes twice, which is what the BS_12 generator list needs.)
    """
    seen: Dict[int, int] = {}
    for t in lam.t:
        for p in _powers(t):
            seen[p] = seen.get(p, 0) + 1
    repeated = [p for p, c in seen.items() if c > 1]
    if not repeated:
        return sum(lam.t)
    top = max(repeated)
    return 2 * top + sum(p for p in seen if p > top)


def maxwidth(lam: DicksonPartition) -> int:
    return mu(lam) << lam.level


def dickson_partitions(level: int, max_width: int) -> List[DicksonPartition]:
    """All level-``n`` Dickson partitions with maxwidth <= ``max_width``."""
    bound = max_width >> level
    out = []
    for t in iproduct(range(bound + 1), repeat=level):
        if not any(x % 2 for x in t):
            continue
        lam = DicksonPartition(level, t)
        if maxwidth(lam) <= max_width:
            out.append(lam)
    return sorted(out, key=lambda l: (l.value, l.t))


def feshbach_class(lam: DicksonPartition, m: int) -> GatheredMonomial:
    """``Π_{k+ℓ=n} γ_{ℓ,2^k}^{t_k} ⊙ 1_{m - 2^n}``."""
    n = lam.level
    if (1 << n) > m:
        raise ValueError("level %d does not fit in component %d" % (n, m))
    pairs = [(n - k, t) for k, t in enumerate(lam.t) if t]
    block = GatheredBlock.make(pairs, (1 << n) >> max(l for l, _ in pairs))
    return GatheredMonomial((block,), m - (1 << n))


def feshbach_generators(m: int) -> List[Tuple[DicksonPartition, GatheredMonomial]]:
    """Feshbach's generators of ``H^*(BS_m)``, by level and then degree."""
    if m < 0:
        raise ValueError("component must be non-negative")
    out = []
    n = 1
    while (1 << n) <= m:
        for lam in dickson_partitions(n, m):
            out.append((lam, feshbach_class(lam, m)))
        n += 1
    return out


def qk0l1(k: int, l: int) -> NakaokaMonomial:
    """``q_{k·0, ℓ·1}(ι) = (q_{ℓ·1}(ι))^{*2^k}``; ``ι^{2^k}`` when ``ℓ = 0``."""
    if l == 0:
        return NakaokaMonomial(1 << k, ())
    return NakaokaMonomial(0, ((1,) * l,) * (1 << k))


def indecomposable_defect(m: int, max_degree: int,
                          gens: Optional[Sequence[GatheredMonomial]] = None) -> List[tuple]:
    """Compare a generating set of ``H^*(BS_m)`` with the indecomposables.

    For each degree ``d`` returns ``(d, dim H^d, dim D^d, #gens, rank(D^d + gens))``
    where ``D^d`` is spanned by cup products of positive-degree classes.  The
    set is a minimal generating set through ``max_degree`` exactly when
    ``#gens = dim H^d - dim D^d`` and the final rank is ``dim H^d`` everywhere.
    """
    if gens is None:
        gens = [g for _, g in feshbach_generators(m)]
    out = []
    for d in range(1, max_degree + 1):
        basis = coh.basis(m, d)
        index = {x: i for i, x in enumerate(basis)}

        def vec(s: F2Sum) -> int:
            v = 0
            for x in s.terms:
                v ^= 1 << index[x]
            return v

        dec = []
        for a in range(1, d // 2 + 1):
            for x in coh.basis(m, a):
                for y in coh.basis(m, d - a):
                    dec.append(vec(coh.cup(x, y, method="direct")))
        mine = [vec(F2Sum.single(g)) for g in gens if g.degree == d]
        rd = rank(dec)
        out.append((d, len(basis), rd, len(mine), rank(dec + mine)))
    return out


# -- Stiefel-Whitney classes -----------------------------------------------

def is_sw_monomial(m: NakaokaMonomial) -> bool:
    """Products of classes ``q_{ℓ·1}(ι)``, ``ℓ >= 1``, and powers of ``ι``."""
    return all(all(i == 1 for i in f) for f in m.factors)


def sw_functional(m: NakaokaMonomial) -> int:
    return int(is_sw_monomial(m))


@lru_cache(maxsize=None)
def sw_total(i: int, n: int) -> F2Sum:
    """``w_{i,n} ∈ H^i(BS_n)`` in the gathered basis."""
    if i < 0 or n < 0:
        raise ValueError("negative index")
    if i > n:
        return F2Sum.zero()
    return duality.functional_from(n, i, sw_functional)


def sw_degree(k: int, l: int) -> int:
    return (1 << k) * ((1 << l) - 1)


def sw_class(k: int, l: int, m: Optional[int] = None) -> F2Sum:
    """``w(k, ℓ) = w_{2^k(2^ℓ-1), 2^{k+ℓ}}``; with ``m`` given, the class of the
    same degree on component ``m``."""
    if k < 0 or l < 0:
        raise ValueError("k and ℓ are non-negative")
    n = 1 << (k + l) if m is None else m
    return sw_total(sw_degree(k, l), n)


# -- Dickson bi-partitions and the coproduct formula -----------------------

def _pair_vector(k: int, l: int) -> tuple:
    return sw_degree(k, l), 1 << (k + l)


@lru_cache(maxsize=None)
def _parts_fitting(deg: int, comp: int) -> tuple:
    """Pairs ``(k_i, ℓ_i)`` whose vector fits inside ``(deg, comp)``."""
    out = []
    e = 0
    while (1 << e) <= comp:
        for l in range(e + 1):
            k = e - l
            d, c = _pair_vector(k, l)
            if d <= deg and c <= comp:
                out.append((k, l))
        e += 1
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _bipartitions_of_vector(deg: int, comp: int, floor: tuple = (-1, -1)) -> tuple:
    """Multisets (sorted tuples) of pairs ``>= floor`` with total ``(deg, comp)``."""
    if deg == 0 and comp == 0:
        return ((),)
    out = []
    for p in _parts_fitting(deg, comp):
        if p < floor:
            continue
        d, c = _pair_vector(*p)
        for rest in _bipartitions_of_vector(deg - d, comp - c, p):
            out.append((p,) + rest)
    return tuple(out)


def bipartitions(k: int, l: int) -> List[tuple]:
    """All Dickson bi-partitions of ``(k, ℓ)`` as sorted tuples of pairs."""
    return list(_bipartitions_of_vector(*_pair_vector(k, l)))


@lru_cache(maxsize=None)
def refines(fine: tuple, coarse: tuple) -> bool:
    """``fine`` arises from ``coarse`` by replacing entries with bi-partitions
    of themselves, i.e. ``fine`` groups into blocks summing to each entry."""
    if _vector_of(fine) != _vector_of(coarse) or len(fine) < len(coarse):
        return False
    target = [_pair_vector(*p) for p in coarse]
    items = sorted((_pair_vector(*p) for p in fine), reverse=True)
    bins = [list(t) for t in target]

    def place(i):
        if i == len(items):
            return all(b[0] == 0 and b[1] == 0 for b in bins)
        d, c = items[i]
        tried = set()
        for b in bins:
            key = tuple(b)
            if key in tried or b[0] < d or b[1] < c:
                continue
            tried.add(key)
            b[0] -= d
            b[1] -= c
            if place(i + 1):
                return True
            b[0] += d
            b[1] += c
        return False

    return place(0)


def _repeat_free(p: tuple) -> bool:
    return len(set(p)) == len(p)


def _vector_of(p: tuple) -> tuple:
    d = c = 0
    for q in p:
        a, b = _pair_vector(*q)
        d += a
        c += b
    return d, c


@lru_cache(maxsize=None)
def split_poset(k: int, l: int) -> tuple:
    """``Π_{k,ℓ}``: ordered pairs ``(p', p'')`` of repeat-free multisets whose
    union is a bi-partition of ``(k, ℓ)``."""
    out = []
    for p in bipartitions(k, l):
        for mask in iproduct((0, 1), repeat=len(p)):
            left = tuple(q for q, s in zip(p, mask) if not s)
            right = tuple(q for q, s in zip(p, mask) if s)
            if _repeat_free(left) and _repeat_free(right):
                out.append((left, right))
    return tuple(sorted(set(out)))


def split_leq(a: tuple, b: tuple) -> bool:
    """``p' ∪ p'' <= q' ∪ q''`` when each side refines the corresponding side."""
    return refines(a[0], b[0]) and refines(a[1], b[1])


@lru_cache(maxsize=None)
def phi_table(k: int, l: int) -> Dict[tuple, int]:
    """``φ`` on ``Π_{k,ℓ}``: ``Σ_{q >= p} φ(q) = 1`` for every ``p``, solved
    from the top of the poset down."""
    elems = split_poset(k, l)
    above = {p: [q for q in elems if q != p and split_leq(p, q)] for p in elems}
    phi: Dict[tuple, int] = {}
    remaining = set(elems)
    while remaining:
        ready = [p for p in remaining if all(q in phi for q in above[p])]
        if not ready:
            raise RuntimeError("refinement order on Π_{%d,%d} has a cycle" % (k, l))
        for p in ready:
            phi[p] = 1 ^ (sum(phi[q] for q in above[p]) & 1)
            remaining.discard(p)
    return phi


def phi(split: tuple, k: int, l: int) -> int:
    table = phi_table(k, l)
    if split not in table:
        raise ValueError("split %r is not in Π_{%d,%d}" % (split, k, l))
    return table[split]


def sw_transfer(parts: tuple) -> F2Sum:
    """``⊙_{(k_i, ℓ_i)} w(k_i, ℓ_i)``; the empty product is ``1_0``."""
    acc = F2Sum.single(coh.unit(0))
    for k, l in parts:
        acc = coh.transfer_sum(acc, sw_class(k, l))
    return acc


def sw_coproduct(k: int, l: int) -> F2Sum:
    """``Δ w(k, ℓ)`` via the bi-partition formula."""
    acc: set = set()
    for split, value in sorted(phi_table(k, l).items()):
        if value:
            acc ^= tensor(sw_transfer(split[0]), sw_transfer(split[1])).terms
    return F2Sum.from_set(acc)


def sw_coproduct_direct(k: int, l: int) -> F2Sum:
    """``Δ w(k, ℓ)`` by applying the gathered coproduct to ``sw_class``."""
    return coh.coproduct_sum(sw_class(k, l))


# -- the BO(n) oracle ------------------------------------------------------

BOMonomial = tuple  # sorted tuple of b-indices


def bo_monomial(indices: Sequence[int]) -> BOMonomial:
    if any(i < 0 for i in indices):
        raise ValueError("b-indices are non-negative")
    return tuple(sorted(indices))


def _ka_coeff(r: int, i: int) -> int:
    # binom(r + i - 1, i); the i = 0 term is always 1, so that q_0 squares
    if i == 0:
        return 1
    n = r + i - 1
    return 1 if n >= i and (i & ~n) == 0 else 0


@lru_cache(maxsize=None)
def _q_on_b(r: int, n: int) -> frozenset:
    acc: set = set()
    for i in range(n + 1):
        if _ka_coeff(r, i):
            acc ^= {tuple(sorted((n - i, r + n + i)))}
    return frozenset(acc)


def _mul(a: BOMonomial, b: BOMonomial) -> BOMonomial:
    return tuple(sorted(a + b))


@lru_cache(maxsize=None)
def _bo_q(r: int, mon: BOMonomial) -> frozenset:
    if not mon:
        return frozenset(((),)) if r == 0 else frozenset()
    head, rest = mon[0], mon[1:]
    acc: set = set()
    for a in range(r + 1):
        left = _q_on_b(a, head)
        if not left:
            continue
        right = _bo_q(r - a, rest)
        for x in left:
            for y in right:
                acc ^= {_mul(x, y)}
    return frozenset(acc)


def bo_apply_q(r: int, mon: Sequence[int]) -> F2Sum:
    """``q_r`` on a monomial in the ``b_i`` (Cartan formula over factors)."""
    if r < 0:
        raise ValueError("operation index must be non-negative")
    return F2Sum.from_set(_bo_q(r, bo_monomial(mon)))


def bo_apply_qseq(seq: Sequence[int], mon: Sequence[int]) -> F2Sum:
    """``q_{i_1} ∘ ... ∘ q_{i_k}``: the last index acts first."""
    cur = frozenset((bo_monomial(mon),))
    for r in reversed(tuple(seq)):
        acc: set = set()
        for x in cur:
            acc ^= _bo_q(r, x)
        cur = frozenset(acc)
    return F2Sum.from_set(cur)


@lru_cache(maxsize=None)
def bo_image(m: NakaokaMonomial) -> frozenset:
    """Image of a Nakaoka monomial: ``ι ↦ b_0``, ``q_I(ι) ↦ q_I(b_0)``, products to products."""
    cur = frozenset((((0,) * m.iota),))
    for f in m.factors:
        img = bo_apply_qseq(f, (0,)).terms
        acc: set = set()
        for x in cur:
            for y in img:
                acc ^= {_mul(x, y)}
        cur = frozenset(acc)
    return cur


def bo_sw_functional(i: int, n: int):
    """``w_{i,n}`` read off ``BO(n)``: the coefficient of ``b_0^{n-i} b_1^i``."""
    target = (0,) * (n - i) + (1,) * i

    def f(m: NakaokaMonomial) -> int:
        return int(target in bo_image(m))

    return f


def is_tainted(mon: BOMonomial) -> bool:
    return any(j > 1 for j in mon)


def render_bo(mon: BOMonomial) -> str:
    if not mon:
        return "1"
    counts: Dict[int, int] = {}
    for j in mon:
        counts[j] = counts.get(j, 0) + 1
    return "*".join("b%d" % j + ("^%d" % e if e > 1 else "") for j, e in sorted(counts.items()))


def render_bo_sum(s: F2Sum) -> str:
    if not s:
        return "0"
    return " + ".join(render_bo(m) for m in sorted(s.terms, key=lambda m: (m[::-1])))
