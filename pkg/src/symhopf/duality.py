"""Duality between gathered monomials and Nakaoka monomials.

The pairing is evaluated from the cohomology side only: a transfer product is
paired through the transfer coproduct of the homology class, a cup product
through the cup coproduct, and the generators are the dual basis elements
``γ_{ℓ,n} = ((q_{1,...,1})^{*n})^∨`` and ``1_u = (ι^{*u})^∨``.  No cohomology
product is used, so solving against the pairing matrix gives a cup product
that is independent of the matching algorithm.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence

import numpy as np

from . import cohomology as coh
from . import homology as hom
from .cohomology import GatheredMonomial, top_level, part_component, part_degree
from .f2 import F2Sum
from .gf2 import SingularMatrix, inverse, unpack, vec_mat
from .homology import NakaokaMonomial


class SingularPairing(SingularMatrix):
    """The pairing matrix of some bidegree failed to be invertible."""


def generator_dual(l: int, n: int) -> NakaokaMonomial:
    """The homology monomial ``(q_{1,...,1}(ι))^{*n}`` with ``ℓ`` ones."""
    return NakaokaMonomial(0, ((1,) * l,) * n)


@lru_cache(maxsize=None)
def _pair_part(part: tuple, m: NakaokaMonomial) -> int:
    profile, width = part
    comp = part_component(profile, width)
    if m.component != comp or m.degree != part_degree(profile, width):
        return 0
    if not profile:
        return int(m == NakaokaMonomial(width, ()))
    # peel one copy of the lowest-level generator off the block
    l, d = profile[-1]
    target = generator_dual(l, comp >> l)
    rest = profile[:-1] + (((l, d - 1),) if d > 1 else ())
    rest_part = (rest, comp >> top_level(rest))
    acc = 0
    for a, b in hom._cup_coproduct(m):
        if a == target:
            acc ^= _pair_part(rest_part, b)
    return acc


@lru_cache(maxsize=None)
def _pair_parts(parts: tuple, m: NakaokaMonomial) -> int:
    if len(parts) == 1:
        return _pair_part(parts[0], m)
    head, rest = parts[0], parts[1:]
    hc = part_component(*head)
    hd = part_degree(*head)
    acc = 0
    for a, b in hom._transfer_coproduct(m):
        if a.component == hc and a.degree == hd and _pair_part(head, a):
            acc ^= _pair_parts(rest, b)
    return acc


def pair(x: GatheredMonomial, m: NakaokaMonomial) -> int:
    """``⟨x, m⟩ ∈ {0, 1}``; zero unless the bidegrees agree."""
    if x.component != m.component or x.degree != m.degree:
        return 0
    parts = x.parts()
    if not parts:
        return int(m == hom.UNIT)
    return _pair_parts(parts, m)


def pair_sum(a: F2Sum, b: F2Sum) -> int:
    acc = 0
    for x in a.terms:
        for m in b.terms:
            acc ^= pair(x, m)
    return acc


def pair_tensor(t: F2Sum, s: F2Sum) -> int:
    """Pairing of a cohomology tensor sum against a homology tensor sum."""
    acc = 0
    for x, y in t.terms:
        for m, n in s.terms:
            acc ^= pair(x, m) & pair(y, n)
    return acc


# -- matrices and solves ---------------------------------------------------

@lru_cache(maxsize=None)
def _matrix(n: int, d: int) -> tuple:
    rows = coh.basis(n, d)
    cols = hom.basis(n, d)
    if len(rows) != len(cols):
        raise SingularPairing("bases differ in size at (%d, %d): %d vs %d"
                              % (n, d, len(rows), len(cols)))
    packed = []
    for x in rows:
        v = 0
        for j, m in enumerate(cols):
            if pair(x, m):
                v |= 1 << j
        packed.append(v)
    return tuple(rows), tuple(cols), tuple(packed)


def pairing_matrix(n: int, d: int) -> list:
    """Entries ``⟨basis_r, basis_c⟩`` as a list of 0/1 rows."""
    rows, cols, packed = _matrix(n, d)
    return unpack(packed, len(cols))


@lru_cache(maxsize=None)
def _inverse(n: int, d: int) -> tuple:
    rows, cols, packed = _matrix(n, d)
    try:
        return tuple(inverse(packed))
    except SingularMatrix as exc:
        raise SingularPairing("pairing matrix at (%d, %d) is singular" % (n, d)) from exc


def functional_to_basis(n: int, d: int, values: Sequence[int]) -> F2Sum:
    """The cohomology class whose pairing with ``hom.basis(n, d)[j]`` is ``values[j]``."""
    rows, cols, _ = _matrix(n, d)
    if len(values) != len(cols):
        raise ValueError("expected %d values, got %d" % (len(cols), len(values)))
    v = 0
    for j, b in enumerate(values):
        if b & 1:
            v |= 1 << j
    z = vec_mat(v, _inverse(n, d))
    return F2Sum.from_set(rows[i] for i in range(len(rows)) if (z >> i) & 1)


def functional_from(n: int, d: int, f) -> F2Sum:
    """Convenience wrapper: ``f`` maps each homology basis element to a bit."""
    return functional_to_basis(n, d, [f(m) & 1 for m in hom.basis(n, d)])


def cup_oracle(x: GatheredMonomial, y: GatheredMonomial) -> F2Sum:
    """Cup product computed by dualizing the cup coproduct of homology."""
    if x.component != y.component:
        return F2Sum.zero()
    n = x.component
    d = x.degree + y.degree
    values = []
    for m in hom.basis(n, d):
        acc = 0
        for a, b in hom._cup_coproduct(m):
            if a.degree == x.degree and pair(x, a):
                acc ^= pair(y, b)
        values.append(acc)
    return functional_to_basis(n, d, values)


def cup_oracle_sum(a: F2Sum, b: F2Sum) -> F2Sum:
    acc: set = set()
    for x in a.terms:
        for y in b.terms:
            acc ^= cup_oracle(x, y).terms
    return F2Sum.from_set(acc)


def cup_oracle_table(n: int, d1: int, d2: int) -> Dict[tuple, F2Sum]:
    """``cup_oracle`` on every basis pair of degrees ``(d1, d2)`` in component
    ``n`` at once, with the bilinear forms batched through integer matmuls."""
    xs, h1, p1 = _matrix(n, d1)
    ys, h2, p2 = _matrix(n, d2)
    zs, h, _ = _matrix(n, d1 + d2)
    if not xs or not ys:
        return {}
    a1 = np.array(unpack(p1, len(h1)), dtype=np.int64)
    a2 = np.array(unpack(p2, len(h2)), dtype=np.int64)
    i1 = {m: j for j, m in enumerate(h1)}
    i2 = {m: j for j, m in enumerate(h2)}
    vals = np.zeros((len(xs), len(ys), len(h)), dtype=np.int64)
    for k, m in enumerate(h):
        t = np.zeros((len(h1), len(h2)), dtype=np.int64)
        for a, b in hom._cup_coproduct(m):
            if a.degree == d1:
                t[i1[a], i2[b]] ^= 1
        if t.any():
            vals[:, :, k] = (a1 @ t @ a2.T) & 1
    inv = np.array(unpack(_inverse(n, d1 + d2), len(zs)), dtype=np.int64)
    sol = (vals.reshape(-1, len(h)) @ inv) & 1
    sol = sol.reshape(len(xs), len(ys), len(zs))
    out = {}
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            out[x, y] = F2Sum.from_set(zs[k] for k in np.flatnonzero(sol[i, j]))
    return out


def realizes(x: F2Sum, n: int, d: int, f) -> bool:
    """True when ``x`` pairs with every ``m`` in ``hom.basis(n, d)`` as ``f(m)``."""
    return all(pair_sum(x, F2Sum.single(m)) == (f(m) & 1) for m in hom.basis(n, d))

