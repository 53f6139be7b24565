"""Cohomology of the symmetric groups in the gathered-monomial basis.

A gathered block is a cup monomial ``Π γ_{ℓ,n_ℓ}^{d_ℓ}`` whose factors all
live on one component; it is recorded by its profile ``((ℓ, d), ...)``
(strictly decreasing ℓ) and its width, the ``n`` attached to the largest ℓ.
A gathered monomial is a transfer product of blocks with pairwise distinct
profiles, times a unit ``1_u``.

Internally a monomial is also viewed as a list of *parts* ``(profile, width)``
where the unit is the part with empty profile; the transfer, coproduct and
cup formulas then treat units and blocks uniformly.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable, Iterator, Optional, Sequence

from .f2 import F2Sum, bilinear

Profile = tuple  # ((ℓ, d), ...) with ℓ strictly decreasing


def top_level(profile: Profile) -> int:
    return profile[0][0] if profile else 0


def make_profile(pairs: Iterable[Sequence[int]]) -> Profile:
    """Canonical profile from (ℓ, d) pairs; repeated ℓ have their d's added."""
    acc: dict = {}
    for l, d in pairs:
        if l < 1 or d < 0:
            raise ValueError("profile entries need ℓ >= 1 and d >= 0, got (%d, %d)" % (l, d))
        acc[l] = acc.get(l, 0) + d
    return tuple(sorted(((l, d) for l, d in acc.items() if d), reverse=True))


def part_component(profile: Profile, width: int) -> int:
    return width << top_level(profile)


def part_degree(profile: Profile, width: int) -> int:
    comp = part_component(profile, width)
    return sum(d * (comp >> l) * ((1 << l) - 1) for l, d in profile)


class GatheredBlock:
    """``Π_ℓ γ_{ℓ, n_ℓ}^{d_ℓ}`` with ``n_ℓ = 2^{ℓ_max - ℓ} · width``."""

    __slots__ = ("profile", "width", "component", "degree", "_key")

    def __init__(self, profile: Profile, width: int):
        if not profile:
            raise ValueError("a gathered block needs a non-empty profile")
        if width < 1:
            raise ValueError("block width must be positive")
        self.profile = profile
        self.width = width
        self.component = part_component(profile, width)
        self.degree = part_degree(profile, width)
        self._key = (self.component, self.degree, profile, width)

    @classmethod
    def make(cls, pairs: Iterable[Sequence[int]], width: int) -> "GatheredBlock":
        return cls(make_profile(pairs), width)

    def factors(self) -> list:
        """``(ℓ, n, d)`` for each generator power, in increasing ℓ."""
        return [(l, self.component >> l, d) for l, d in reversed(self.profile)]

    def __eq__(self, other):
        return isinstance(other, GatheredBlock) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GatheredBlock(%r, %d)" % (self.profile, self.width)

    def __str__(self):
        return render_block(self)


class GatheredMonomial:
    """Transfer product of blocks with distinct profiles and a unit ``1_u``."""

    __slots__ = ("blocks", "unit", "component", "degree", "_key")

    def __init__(self, blocks: Iterable[GatheredBlock] = (), unit: int = 0):
        blocks = tuple(sorted(blocks))
        profiles = [b.profile for b in blocks]
        if len(set(profiles)) != len(profiles):
            raise ValueError("gathered monomials have pairwise distinct profiles; use transfer()")
        if unit < 0:
            raise ValueError("unit index must be non-negative")
        self.blocks = blocks
        self.unit = unit
        self.component = sum(b.component for b in blocks) + unit
        self.degree = sum(b.degree for b in blocks)
        self._key = (tuple(b._key for b in blocks), unit)

    def parts(self) -> tuple:
        ps = tuple((b.profile, b.width) for b in self.blocks)
        return ps + (((), self.unit),) if self.unit else ps

    def __eq__(self, other):
        return isinstance(other, GatheredMonomial) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "GatheredMonomial(%r, unit=%d)" % (list(self.blocks), self.unit)

    def __str__(self):
        return render_monomial(self)


def gamma(l: int, n: int) -> GatheredMonomial:
    if l < 1 or n < 1:
        raise ValueError("γ_{ℓ,n} needs ℓ >= 1 and n >= 1")
    return GatheredMonomial((GatheredBlock(((l, 1),), n),))


def unit(m: int) -> GatheredMonomial:
    return GatheredMonomial((), m)


def block_monomial(pairs: Iterable[Sequence[int]], width: int) -> GatheredMonomial:
    return GatheredMonomial((GatheredBlock.make(pairs, width),))


def gather(parts: Iterable[tuple]) -> Optional[GatheredMonomial]:
    """Transfer product of parts; ``None`` when it vanishes.

    Same-profile parts combine by ``binom(w + w', w)``: they merge when their
    widths are binary-digit-disjoint and kill the product otherwise.
    """
    acc: dict = {}
    for profile, width in parts:
        if width == 0:
            continue
        w = acc.get(profile, 0)
        if w & width:
            return None
        acc[profile] = w | width
    u = acc.pop((), 0)
    return GatheredMonomial((GatheredBlock(p, w) for p, w in acc.items()), u)


def from_parts(parts: Iterable[tuple]) -> F2Sum:
    g = gather(parts)
    return F2Sum.zero() if g is None else F2Sum.single(g)


# -- transfer product and coproduct ---------------------------------------

def transfer(x: GatheredMonomial, y: GatheredMonomial) -> F2Sum:
    return from_parts(x.parts() + y.parts())


def transfer_sum(a: F2Sum, b: F2Sum) -> F2Sum:
    return bilinear(a, b, transfer)


def coproduct(x: GatheredMonomial) -> F2Sum:
    """``Δx`` as a sum of pairs: every part of width ``w`` splits as
    ``w' + w''`` independently, each splitting with coefficient one."""
    parts = x.parts()
    out = []
    for split in iproduct(*(range(w + 1) for _, w in parts)):
        left = [(p, a) for (p, _), a in zip(parts, split)]
        right = [(p, w - a) for (p, w), a in zip(parts, split)]
        out.append((gather(left), gather(right)))
    return F2Sum.from_set(out)


def coproduct_sum(a: F2Sum) -> F2Sum:
    return a.map(coproduct)


# -- cup product -----------------------------------------------------------

def _part_divisor(profile: Profile) -> int:
    return 1 << top_level(profile)


def cup_parts(p: tuple, q: tuple) -> tuple:
    """Cup of two parts on a common component: profiles add, units are neutral."""
    (pp, pw), (qp, qw) = p, q
    comp = part_component(pp, pw)
    if part_component(qp, qw) != comp:
        raise ValueError("cup of parts on different components")
    if not pp:
        return q
    if not qp:
        return p
    prof = make_profile(pp + qp)
    return prof, comp >> top_level(prof)


def _slice(part: tuple, comp: int) -> tuple:
    profile, _ = part
    return profile, comp >> top_level(profile)


def transport_matrices(rows: Sequence[int], cols: Sequence[int],
                       steps: Sequence[Sequence[int]]) -> Iterator[tuple]:
    """Non-negative integer matrices with the given margins whose ``(i, j)``
    entry is a multiple of ``steps[i][j]``; yielded as flat row-major tuples."""
    r, c = len(rows), len(cols)
    cells = [0] * (r * c)
    colrem = list(cols)

    def rec(i, j, rowrem):
        if i == r:
            if not any(colrem):
                yield tuple(cells)
            return
        if j == c - 1:
            v = rowrem
            if v <= colrem[j] and v % steps[i][j] == 0:
                cells[i * c + j] = v
                colrem[j] -= v
                yield from rec(i + 1, 0, rows[i + 1] if i + 1 < r else 0)
                colrem[j] += v
            return
        s = steps[i][j]
        top = min(rowrem, colrem[j])
        for v in range(0, top + 1, s):
            cells[i * c + j] = v
            colrem[j] -= v
            yield from rec(i, j + 1, rowrem - v)
            colrem[j] += v

    if r == 0 or c == 0:
        if not any(rows) and not any(cols):
            yield ()
        return
    yield from rec(0, 0, rows[0])


def maximal_matchings(x: GatheredMonomial, y: GatheredMonomial) -> list:
    """Matchings of ``x`` against ``y`` that refine no other matching.

    A matching pairs parts of a partition of ``x`` with equal-component parts
    of a partition of ``y``; it is maximal exactly when no block of ``x`` and
    block of ``y`` are matched twice, so it is a transport matrix between the
    component vectors.  Each is returned as a sorted tuple of ``(i, j, c)``.
    """
    xs, ys = x.parts(), y.parts()
    rows = [part_component(*p) for p in xs]
    cols = [part_component(*q) for q in ys]
    steps = [[max(_part_divisor(p[0]), _part_divisor(q[0])) for q in ys] for p in xs]
    out = []
    nc = len(cols)
    for cells in transport_matrices(rows, cols, steps):
        out.append(tuple((k // nc, k % nc, v) for k, v in enumerate(cells) if v))
    return out


def all_matchings(x: GatheredMonomial, y: GatheredMonomial) -> list:
    """Every matching, maximal or not, as a sorted tuple of ``(i, j, c)``;
    several triples may share ``(i, j)``."""
    xs, ys = x.parts(), y.parts()
    steps = {(i, j): max(_part_divisor(p[0]), _part_divisor(q[0]))
             for i, p in enumerate(xs) for j, q in enumerate(ys)}
    out = []
    for mu in maximal_matchings(x, y):
        options = [[tuple((i, j, steps[i, j] * v) for v in part)
                    for part in _integer_partitions(c // steps[i, j])]
                   for i, j, c in mu]
        for combo in iproduct(*options):
            out.append(tuple(sorted(t for grp in combo for t in grp)))
    return out


def _integer_partitions(n: int, largest: Optional[int] = None) -> list:
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - k, k):
            out.append((k,) + rest)
    return out


def refines(fine: tuple, coarse: tuple) -> bool:
    """True when ``coarse`` arises from ``fine`` by merging matched pairs that
    join the same two blocks (the bijection commutes with the inclusions)."""
    def cells(mu):
        acc: dict = {}
        for i, j, c in mu:
            acc.setdefault((i, j), []).append(c)
        return acc

    f, g = cells(fine), cells(coarse)
    if set(f) != set(g):
        return False
    return all(_groups_into(sorted(f[k], reverse=True), sorted(g[k], reverse=True)) for k in f)


def _groups_into(items: list, targets: list) -> bool:
    if sum(items) != sum(targets) or len(items) < len(targets):
        return False
    bins = list(targets)

    def place(k):
        if k == len(items):
            return all(b == 0 for b in bins)
        seen = set()
        for t in range(len(bins)):
            if bins[t] >= items[k] and bins[t] not in seen:
                seen.add(bins[t])
                bins[t] -= items[k]
                if place(k + 1):
                    return True
                bins[t] += items[k]
        return False

    return place(0)


def maximal_matchings_by_filter(x: GatheredMonomial, y: GatheredMonomial) -> list:
    """Reference route: enumerate all matchings and drop every one that
    refines a different matching, by pairwise comparison."""
    every = sorted(set(all_matchings(x, y)))
    return [mu for mu in every
            if not any(nu != mu and refines(mu, nu) for nu in every)]


def matching_term(x: GatheredMonomial, y: GatheredMonomial, mu: tuple) -> Optional[GatheredMonomial]:
    """The gathered term a matching contributes, or ``None`` when its
    same-profile products collide."""
    xs, ys = x.parts(), y.parts()
    prods = [cup_parts(_slice(xs[i], c), _slice(ys[j], c)) for i, j, c in mu]
    return gather(prods)


def cup(x: GatheredMonomial, y: GatheredMonomial, method: str = "filter") -> F2Sum:
    """Cup product by summing over maximal matchings; zero across components.

    ``method="filter"`` enumerates every matching and discards refinements by
    pairwise comparison; ``method="direct"`` enumerates the maximal ones as
    transport matrices.  The two give the same set of matchings.
    """
    if x.component != y.component:
        return F2Sum.zero()
    if method == "filter":
        matchings = maximal_matchings_by_filter(x, y)
    elif method == "direct":
        matchings = maximal_matchings(x, y)
    else:
        raise ValueError("unknown cup method %r" % (method,))
    acc: set = set()
    for mu in matchings:
        t = matching_term(x, y, mu)
        if t is not None:
            acc ^= {t}
    return F2Sum.from_set(acc)


def cup_sum(a: F2Sum, b: F2Sum, method: str = "filter") -> F2Sum:
    return bilinear(a, b, lambda x, y: cup(x, y, method))


def cup_power(a: F2Sum, e: int) -> F2Sum:
    if e < 0:
        raise ValueError("negative cup power")
    if e == 0:
        comps = {x.component for x in a}
        if len(comps) != 1:
            raise ValueError("zeroth power needs a class on a single component")
        return F2Sum.single(unit(comps.pop()))
    out = a
    for _ in range(e - 1):
        out = cup_sum(out, a)
    return out


# -- basis -----------------------------------------------------------------

def _profiles_with_top(k: int, max_degree: int) -> list:
    """Profiles with largest level ``k`` and per-width degree <= bound."""
    out = []
    weights = [(l, (1 << k) - (1 << (k - l))) for l in range(k, 0, -1)]

    def rec(idx, deg, chosen):
        if idx == len(weights):
            if chosen and chosen[0][0] == k:
                out.append((tuple(chosen), deg))
            return
        l, wt = weights[idx]
        if idx == 0:
            d = 1
        else:
            rec(idx + 1, deg, chosen)
            d = 1
        while deg + d * wt <= max_degree:
            rec(idx + 1, deg + d * wt, chosen + [(l, d)])
            d += 1

    if k >= 1:
        rec(0, 0, [])
    return out


def profiles(max_component: int, max_degree: int) -> list:
    """(profile, component per width, degree per width) within bounds."""
    out = []
    k = 1
    while (1 << k) <= max_component:
        for prof, deg in _profiles_with_top(k, max_degree):
            out.append((prof, 1 << k, deg))
        k += 1
    return out


_basis_cache: dict = {}


def basis(component: int, degree: int) -> list:
    """All gathered monomials of the given bidegree in canonical order."""
    if component < 0 or degree < 0:
        raise ValueError("component and degree must be non-negative")
    key = (component, degree)
    if key in _basis_cache:
        return list(_basis_cache[key])
    profs = profiles(component, degree)
    out = []

    def rec(idx, comp, deg, chosen):
        if deg == degree:
            out.append(GatheredMonomial([GatheredBlock(p, w) for p, w in chosen],
                                        component - comp))
        for j in range(idx, len(profs)):
            p, c, g = profs[j]
            w = 1
            while comp + w * c <= component and deg + w * g <= degree:
                chosen.append((p, w))
                rec(j + 1, comp + w * c, deg + w * g, chosen)
                chosen.pop()
                w += 1

    rec(0, 0, 0, [])
    res = tuple(sorted(set(out)))
    _basis_cache[key] = res
    return list(res)


# -- rendering -------------------------------------------------------------

def render_block(b: GatheredBlock) -> str:
    return ".".join("g[%d,%d]" % (l, n) + ("^%d" % d if d > 1 else "")
                    for l, n, d in b.factors())


def render_monomial(x: GatheredMonomial) -> str:
    parts = [render_block(b) for b in x.blocks]
    if x.unit or not parts:
        parts.append("u[%d]" % x.unit)
    return " o ".join(parts)


def render_sum(a: F2Sum) -> str:
    if not a:
        return "0"
    return " + ".join(render_monomial(x) for x in a)


def render_tensor_sum(a: F2Sum) -> str:
    if not a:
        return "0"
    return " + ".join("%s (x) %s" % (render_monomial(l), render_monomial(r)) for l, r in a)


def to_json(x: GatheredMonomial) -> dict:
    return {"blocks": [{"profile": [list(p) for p in b.profile], "width": b.width}
                       for b in x.blocks],
            "unit": x.unit}
