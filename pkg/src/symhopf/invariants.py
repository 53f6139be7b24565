"""Invariant-theoretic models of the cohomology Hopf ring.

Two models live here.

* :class:`MultiSymPoly` -- polynomials in ``k`` families of variables
  ``x(ℓ)_j``, ``1 <= j <= n``, invariant under permuting the subscripts.  A
  monomial is a tuple of ``n`` columns, column ``j`` being the exponent vector
  ``(e_1j, ..., e_kj)``; an orbit is recorded by its sorted column tuple.
  The standard product, the shuffle product and the de-coupling coproduct make
  these a Hopf ring.
* :class:`SetMonomial` -- monomials in variables ``x_A``, ``A ⊆ {1..m}``, with
  cohomology mapped in by sending a gathered block to a proper monomial and
  transfer products to symmetrizations.

"Sym" always means the orbit sum: each distinct image counted once.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, Optional, Sequence

from .cohomology import GatheredBlock, GatheredMonomial
from .f2 import F2Sum


def multiset_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct orderings of a multiset, lexicographic from the sorted order."""
    counts: Dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(items)
    out: list = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                out.append(key)
                yield from rec()
                out.pop()
                counts[key] += 1

    return rec()


# -- symmetric polynomials in several sets of variables --------------------

Rep = tuple  # sorted tuple of columns


@lru_cache(maxsize=None)
def _orbit(rep: Rep) -> frozenset:
    return frozenset(multiset_permutations(rep))


def _canon(mono: Sequence) -> Rep:
    return tuple(sorted(mono))


class MultiSymPoly:
    """An element of ``F_2[x(1), ..., x(k)]^{S_n}`` as a sum of orbit sums."""

    __slots__ = ("k", "n", "orbits")

    def __init__(self, k: int, n: int, orbits: Iterable[Rep] = ()):
        self.k = k
        self.n = n
        self.orbits = F2Sum(_canon(r) for r in orbits)
        for r in self.orbits:
            if len(r) != n or any(len(c) != k for c in r):
                raise ValueError("orbit %r does not have shape (%d, %d)" % (r, n, k))

    @classmethod
    def _raw(cls, k, n, orbits: F2Sum) -> "MultiSymPoly":
        out = cls.__new__(cls)
        out.k, out.n, out.orbits = k, n, orbits
        return out

    @classmethod
    def zero(cls, k: int, n: int) -> "MultiSymPoly":
        return cls._raw(k, n, F2Sum.zero())

    @classmethod
    def one(cls, k: int, n: int) -> "MultiSymPoly":
        """The unit ``1_n`` for the standard product on ``n`` variables."""
        return cls._raw(k, n, F2Sum.single(((0,) * k,) * n))

    @classmethod
    def sigma(cls, k: int, l: int, n: int) -> "MultiSymPoly":
        """``σ(ℓ)_n = x(ℓ)_1 ⋯ x(ℓ)_n``."""
        if not 1 <= l <= k:
            raise ValueError("family index must lie in 1..%d" % k)
        col = tuple(1 if i == l - 1 else 0 for i in range(k))
        return cls._raw(k, n, F2Sum.single((col,) * n))

    @classmethod
    def from_monomials(cls, k: int, n: int, monos: Iterable[Sequence]) -> "MultiSymPoly":
        """Collect an invariant sum of explicit monomials into orbit sums;
        raises if the input is not invariant."""
        full = F2Sum(tuple(tuple(c) for c in m) for m in monos)
        reps = {_canon(m) for m in full}
        for r in reps:
            if not _orbit(r) <= full.terms:
                raise ValueError("polynomial is not symmetric")
        return cls._raw(k, n, F2Sum.from_set(reps))

    def monomials(self) -> frozenset:
        acc: set = set()
        for r in self.orbits.terms:
            acc |= _orbit(r)
        return frozenset(acc)

    @property
    def degree_set(self) -> set:
        return {sum(map(sum, r)) for r in self.orbits.terms}

    def __bool__(self):
        return bool(self.orbits)

    def __eq__(self, other):
        if isinstance(other, MultiSymPoly):
            if not self.orbits and not other.orbits:
                return True
            return (self.k, self.n, self.orbits) == (other.k, other.n, other.orbits)
        if other == 0:
            return not self.orbits
        return NotImplemented

    def __hash__(self):
        return hash((self.k, self.n, self.orbits))

    def __add__(self, other: "MultiSymPoly") -> "MultiSymPoly":
        if not other.orbits:
            return self
        if not self.orbits:
            return other
        _same_shape(self, other)
        return MultiSymPoly._raw(self.k, self.n, self.orbits + other.orbits)

    def __mul__(self, other: "MultiSymPoly") -> "MultiSymPoly":
        return product(self, other)

    def __pow__(self, e: int) -> "MultiSymPoly":
        out = MultiSymPoly.one(self.k, self.n)
        for _ in range(e):
            out = product(out, self)
        return out

    def __repr__(self):
        return "MultiSymPoly(k=%d, n=%d, %s)" % (self.k, self.n, render_multisym(self))

    def __str__(self):
        return render_multisym(self)


def _same_shape(f: MultiSymPoly, g: MultiSymPoly):
    if (f.k, f.n) != (g.k, g.n):
        raise ValueError("shapes differ: (k=%d, n=%d) vs (k=%d, n=%d)" % (f.k, f.n, g.k, g.n))


def _add_cols(a: Sequence, b: Sequence) -> tuple:
    return tuple(tuple(x + y for x, y in zip(c, d)) for c, d in zip(a, b))


def product(f: MultiSymPoly, g: MultiSymPoly) -> MultiSymPoly:
    """The standard product; zero when the numbers of variables differ."""
    if f.k != g.k:
        raise ValueError("different numbers of variable families")
    if f.n != g.n or not f or not g:
        return MultiSymPoly.zero(f.k, f.n)
    fm, gm = f.monomials(), g.monomials()
    candidates = set()
    for a in f.orbits.terms:
        for b in gm:
            candidates.add(_canon(_add_cols(a, b)))
    out = []
    for c in candidates:
        coeff = 0
        for a in fm:
            if all(x <= y for ca, cc in zip(a, c) for x, y in zip(ca, cc)):
                rest = tuple(tuple(y - x for x, y in zip(ca, cc)) for ca, cc in zip(a, c))
                if rest in gm:
                    coeff ^= 1
        if coeff:
            out.append(c)
    return MultiSymPoly._raw(f.k, f.n, F2Sum.from_set(out))


def shuffle_product(f: MultiSymPoly, g: MultiSymPoly) -> MultiSymPoly:
    """``f ⊙ g``: shift the subscripts of ``g`` past those of ``f``, multiply, and
    sum over the ``(n+n') choose n`` shuffles."""
    if f.k != g.k:
        raise ValueError("different numbers of variable families")
    k, n, m = f.k, f.n, g.n
    fo, go = f.orbits.terms, g.orbits.terms
    candidates = {_canon(a + b) for a in fo for b in go}
    out = []
    for c in candidates:
        coeff = 0
        for s in combinations(range(n + m), n):
            sset = set(s)
            left = _canon(c[i] for i in s)
            if left not in fo:
                continue
            right = _canon(c[i] for i in range(n + m) if i not in sset)
            if right in go:
                coeff ^= 1
        if coeff:
            out.append(c)
    return MultiSymPoly._raw(k, n + m, F2Sum.from_set(out))


def _sub_multisets(rep: Rep, a: int) -> Iterator[tuple]:
    """Distinct ways to split a sorted multiset into a size-``a`` part and the rest."""
    counts: Dict = {}
    for c in rep:
        counts[c] = counts.get(c, 0) + 1
    keys = sorted(counts)

    def rec(i, left, need):
        if i == len(keys):
            if need == 0:
                yield tuple(left)
            return
        key = keys[i]
        for t in range(min(counts[key], need) + 1):
            yield from rec(i + 1, left + [key] * t, need - t)

    for left in rec(0, [], a):
        rest = list(rep)
        for c in left:
            rest.remove(c)
        yield left, tuple(rest)


def decouple_coproduct(f: MultiSymPoly, split: Sequence[int]) -> F2Sum:
    """``Δ_{a,b} f`` as a sum of pairs of orbit representatives: the first
    ``a`` subscripts go left, the last ``b`` go right."""
    a, b = split
    if a + b != f.n or a < 0 or b < 0:
        raise ValueError("split (%d, %d) does not add up to %d" % (a, b, f.n))
    out = []
    for r in f.orbits.terms:
        out.extend(_sub_multisets(r, a))
    return F2Sum.from_set(out)


def decouple(f: MultiSymPoly, split: Sequence[int]) -> list:
    """``Δ_{a,b} f`` as a list of ``(MultiSymPoly, MultiSymPoly)`` basis pairs."""
    a, b = split
    return [(MultiSymPoly._raw(f.k, a, F2Sum.single(l)), MultiSymPoly._raw(f.k, b, F2Sum.single(r)))
            for l, r in decouple_coproduct(f, split)]


def full_coproduct(f: MultiSymPoly) -> F2Sum:
    """Sum of ``Δ_{a, n-a}`` over all ``a``; terms are pairs of orbit reps."""
    acc: set = set()
    for a in range(f.n + 1):
        acc ^= decouple_coproduct(f, (a, f.n - a)).terms
    return F2Sum.from_set(acc)


def render_orbit_as_hopf(rep: Rep, k: int) -> str:
    """An orbit sum as a Hopf ring monomial in the ``σ(ℓ)_n`` and units."""
    counts: Dict = {}
    for c in rep:
        counts[c] = counts.get(c, 0) + 1
    zero = (0,) * k
    parts = []
    for col in sorted(counts, reverse=True):
        if col == zero:
            continue
        n = counts[col]
        parts.append(".".join("s(%d)_%d" % (l + 1, n) + ("^%d" % e if e > 1 else "")
                              for l, e in enumerate(col) if e))
    if zero in counts or not parts:
        parts.append("u[%d]" % counts.get(zero, 0))
    return " o ".join(parts)


def render_multisym(f: MultiSymPoly) -> str:
    if not f.orbits:
        return "0"
    return " + ".join(render_orbit_as_hopf(r, f.k) for r in f.orbits)


# -- the x_A model ---------------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _mask(A: Iterable[int]) -> int:
    v = 0
    for a in A:
        if a < 1:
            raise ValueError("ground elements are 1-based")
        v |= 1 << (a - 1)
    return v


def _members(mask: int) -> tuple:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class SetMonomial:
    """``Π x_A^{e_A}`` on ground set ``{1..m}``; support sets have ``|A| >= 2``."""

    __slots__ = ("m", "exps", "_key")

    def __init__(self, m: int, exps):
        acc: Dict[int, int] = {}
        items = exps.items() if isinstance(exps, dict) else exps
        for A, e in items:
            mask = A if isinstance(A, int) else _mask(A)
            if mask >> m:
                raise ValueError("set %r exceeds the ground set of size %d" % (_members(mask), m))
            if _popcount(mask) < 2:
                raise ValueError("support sets need at least two elements")
            if e < 0:
                raise ValueError("negative exponent")
            acc[mask] = acc.get(mask, 0) + e
        self.m = m
        self.exps = tuple(sorted((k, v) for k, v in acc.items() if v))
        self._key = (m, self.exps)

    @property
    def degree(self) -> int:
        return sum(e * (_popcount(A) - 1) for A, e in self.exps)

    def support(self) -> list:
        return [A for A, _ in self.exps]

    def permute(self, perm: Sequence[int]) -> "SetMonomial":
        """Apply ``i -> perm[i-1]`` (a 1-based permutation of the ground set)."""
        out = []
        for A, e in self.exps:
            out.append((_mask(perm[i - 1] for i in _members(A)), e))
        return SetMonomial(self.m, out)

    def __mul__(self, other: "SetMonomial") -> "SetMonomial":
        if self.m != other.m:
            raise ValueError("different ground sets")
        return SetMonomial(self.m, list(self.exps) + list(other.exps))

    def __eq__(self, other):
        return isinstance(other, SetMonomial) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "SetMonomial(%d, %s)" % (self.m, render_set_monomial(self))

    def __str__(self):
        return render_set_monomial(self)


def set_monomial(m: int, exps) -> SetMonomial:
    return SetMonomial(m, exps)


def is_proper(mono: SetMonomial) -> bool:
    """Proper monomials are exactly the images of gathered monomials:
    support sets of size ``2^ℓ`` (``ℓ >= 1``) forming a laminar family, and
    inside each maximal set the support sets of each size partition it with a
    common exponent."""
    return _proper_structure(mono) is not None


def _proper_structure(mono: SetMonomial) -> Optional[list]:
    """For a proper monomial, ``(maximal set, profile)`` for each maximal set."""
    sets = dict(mono.exps)
    for A in sets:
        size = _popcount(A)
        if size & (size - 1):
            return None
    keys = list(sets)
    for i, A in enumerate(keys):
        for B in keys[i + 1:]:
            inter = A & B
            if inter and inter != A and inter != B:
                return None
    maximal = [A for A in keys if not any(B != A and (A & B) == A for B in keys)]
    out = []
    for U in maximal:
        inside = [A for A in keys if A & U == A]
        by_size: Dict[int, list] = {}
        for A in inside:
            by_size.setdefault(_popcount(A), []).append(A)
        profile = []
        for size, group in by_size.items():
            union = 0
            for A in group:
                union |= A
            if union != U or len(group) * size != _popcount(U):
                return None
            es = {sets[A] for A in group}
            if len(es) != 1:
                return None
            profile.append((size.bit_length() - 1, es.pop()))
        out.append((U, tuple(sorted(profile, reverse=True))))
    return out


def from_proper(mono: SetMonomial) -> GatheredMonomial:
    """The gathered monomial whose symmetrization contains ``mono``."""
    struct = _proper_structure(mono)
    if struct is None:
        raise ValueError("monomial %s is not proper" % mono)
    widths: Dict[tuple, int] = {}
    covered = 0
    for U, prof in struct:
        widths[prof] = widths.get(prof, 0) + 1
        covered |= U
    blocks = [GatheredBlock(p, w) for p, w in widths.items()]
    return GatheredMonomial(blocks, mono.m - _popcount(covered))


def standard_monomial(x: GatheredMonomial) -> SetMonomial:
    """Blocks on consecutive ground intervals, translates of ``{1..2^ℓ}``
    inside each, each raised to its ``d``; unit points left free at the end."""
    exps = []
    base = 0
    for b in x.blocks:
        for l, d in b.profile:
            size = 1 << l
            for t in range(b.component >> l):
                lo = base + t * size
                exps.append((((1 << size) - 1) << lo, d))
        base += b.component
    return SetMonomial(x.component, exps)


@lru_cache(maxsize=None)
def _set_orbit(mono: SetMonomial) -> frozenset:
    m = mono.m
    return frozenset(mono.permute(p) for p in permutations(range(1, m + 1)))


def set_orbit(mono: SetMonomial) -> F2Sum:
    return F2Sum.from_set(_set_orbit(mono))


def to_invariant(x: GatheredMonomial) -> F2Sum:
    """The orbit sum of the standard proper monomial of ``x``."""
    return set_orbit(standard_monomial(x))


def to_invariant_sum(a: F2Sum) -> F2Sum:
    return a.map(to_invariant)


def orbit_key(mono: SetMonomial):
    """An orbit invariant: the gathered monomial for proper monomials, and the
    least permuted image otherwise."""
    if is_proper(mono):
        return from_proper(mono)
    return min(_set_orbit(mono))


def orbit_decompose(f: F2Sum) -> dict:
    """Split an invariant sum into orbits: key -> representative."""
    reps: dict = {}
    for t in f.terms:
        k = orbit_key(t)
        reps.setdefault(k, t)
    for k, t in reps.items():
        if not _set_orbit(t) <= f.terms:
            raise ValueError("sum is not invariant under the symmetric group")
    return reps


def invariant_cup(a: F2Sum, b: F2Sum) -> F2Sum:
    """Product of two invariant sums, followed by the projection that forgets
    orbits of improper monomials.  The result is a sum of proper orbit sums."""
    if not a or not b:
        return F2Sum.zero()
    ms = {t.m for t in a.terms} | {t.m for t in b.terms}
    if len(ms) != 1:
        return F2Sum.zero()
    ao = orbit_decompose(a)
    orbit_decompose(b)  # raises unless b is invariant
    full_a = a.terms
    full_b = b.terms
    candidates = set()
    for ra in ao.values():
        for t in full_b:
            c = ra * t
            if is_proper(c):
                candidates.add(from_proper(c))
    out: set = set()
    for g in candidates:
        c = standard_monomial(g)
        cexp = dict(c.exps)
        coeff = 0
        for s in full_a:
            rest = dict(cexp)
            ok = True
            for A, e in s.exps:
                left = rest.get(A, 0) - e
                if left < 0:
                    ok = False
                    break
                rest[A] = left
            if ok and SetMonomial(c.m, rest) in full_b:
                coeff ^= 1
        if coeff:
            out |= _set_orbit(c)
    return F2Sum.from_set(out)


def proper_orbits(a: F2Sum) -> F2Sum:
    """The gathered monomials whose orbits make up the proper part of ``a``."""
    return F2Sum.from_set(k for k in orbit_decompose(a) if isinstance(k, GatheredMonomial))


def _display_key(item):
    # by least element, enclosing sets before the sets inside them
    A = item[0]
    return min(_members(A)), -_popcount(A), _members(A)


def render_set_monomial(mono: SetMonomial) -> str:
    if not mono.exps:
        return "1"
    return " ".join("x{%s}" % ",".join(map(str, _members(A))) + ("^%d" % e if e > 1 else "")
                    for A, e in sorted(mono.exps, key=_display_key))


def render_invariant(a: F2Sum) -> str:
    """Invariant sums rendered orbit by orbit as ``Sym(...)``."""
    if not a:
        return "0"
    reps = orbit_decompose(a)
    keys = sorted(reps, key=lambda k: (0, k) if isinstance(k, GatheredMonomial) else (1, k))
    out = []
    for k in keys:
        rep = standard_monomial(k) if isinstance(k, GatheredMonomial) else reps[k]
        out.append("Sym(%s)" % render_set_monomial(rep))
    return " + ".join(out)


# -- quotient maps onto symmetric polynomials ------------------------------

def v2(n: int) -> int:
    if n <= 0:
        raise ValueError("2-adic valuation needs a positive integer")
    return (n & -n).bit_length() - 1


def scale(l: int, n: int) -> int:
    """Exponent form of the scale of ``γ_{ℓ,n}``: ``γ_{ℓ,n}`` survives in the
    scale-``k`` quotient exactly when ``ℓ <= k <= ℓ + v_2(n)``."""
    return l + v2(n)


def survives_scale(l: int, n: int, k: int) -> bool:
    return l <= k <= scale(l, n)


def _block_image(b: GatheredBlock, k: int) -> Optional[MultiSymPoly]:
    comp = b.component
    for l, d in b.profile:
        if not survives_scale(l, comp >> l, k):
            return None
    m = comp >> k
    col = [0] * k
    for l, d in b.profile:
        col[l - 1] = d
    return MultiSymPoly._raw(k, m, F2Sum.single((tuple(col),) * m))


def scale_quotient(x: GatheredMonomial, k: int) -> MultiSymPoly:
    """Image in symmetric polynomials in ``k`` variable families.

    ``γ_{ℓ,n} ↦ σ(ℓ)_{n / 2^{k-ℓ}}`` for survivors, every other generator to
    zero; ``1_u ↦ 1_{u / 2^k}``, and zero when ``2^k`` does not divide ``u``
    (such components carry no length-``k`` homology).
    """
    if k < 1:
        raise ValueError("scale quotients are indexed by k >= 1")
    if x.component % (1 << k) or x.unit % (1 << k):
        return MultiSymPoly.zero(k, x.component >> k)
    out = MultiSymPoly.one(k, 0)
    for b in x.blocks:
        img = _block_image(b, k)
        if img is None:
            return MultiSymPoly.zero(k, x.component >> k)
        out = shuffle_product(out, img)
    return shuffle_product(out, MultiSymPoly.one(k, x.unit >> k))


def scale_quotient_sum(a: F2Sum, k: int, component: int) -> MultiSymPoly:
    out = MultiSymPoly.zero(k, component >> k)
    for x in a.terms:
        out = out + scale_quotient(x, k)
    return out


def level_quotient(x: GatheredMonomial, l: int) -> MultiSymPoly:
    """Image in classical symmetric polynomials (one family): ``γ_{ℓ,n} ↦ σ_n``,
    other levels to zero, ``1_u ↦ 1_{u/2^ℓ}`` when ``2^ℓ`` divides ``u``."""
    if l < 1:
        raise ValueError("levels start at 1")
    n = x.component >> l
    if x.component % (1 << l) or x.unit % (1 << l):
        return MultiSymPoly.zero(1, n)
    out = MultiSymPoly.one(1, 0)
    for b in x.blocks:
        if len(b.profile) != 1 or b.profile[0][0] != l:
            return MultiSymPoly.zero(1, n)
        d = b.profile[0][1]
        out = shuffle_product(out, MultiSymPoly._raw(1, b.width, F2Sum.single(((d,),) * b.width)))
    return shuffle_product(out, MultiSymPoly.one(1, x.unit >> l))
