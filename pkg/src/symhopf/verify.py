"""Property suites shared by the ``verify`` command and the test-suite.

Each suite returns a :class:`SuiteResult` counting individual checks; a
failing check records a short human-readable description.
"""

from __future__ import annotations

import functools
import inspect
import random
import time
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Dict, List, Optional

from . import cohomology as coh
from . import duality
from . import generators as gen
from . import homology as hom
from . import invariants as inv
from . import kudo_araki as ka
from .f2 import F2Sum, linear_sum, tensor
from .gf2 import rank


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 50:
                self.failures.append(what)
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def summary(self) -> str:
        return "%s: %d passed, %d failed (%.2fs)" % (self.name, self.passed, self.failed, self.seconds)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "failed": self.failed,
                "seconds": round(self.seconds, 3), "failures": self.failures, "notes": self.notes}


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t
        return res
    return wrapper


def _cs(x) -> str:
    return coh.render_sum(x) if isinstance(x, F2Sum) else coh.render_monomial(x)


def _one(text: str) -> coh.GatheredMonomial:
    from .expr import parse_cohomology
    s = parse_cohomology(text)
    assert len(s) == 1, text
    return s.sorted_terms()[0]


# -- dimensions, pairing, oracle -------------------------------------------

@_timed
def dimensions(max_component: int = 10, max_degree: int = 12) -> SuiteResult:
    """Gathered and Nakaoka bases have equal size in every bidegree."""
    r = SuiteResult("dimensions")
    for n in range(max_component + 1):
        for d in range(max_degree + 1):
            a, b = len(coh.basis(n, d)), len(hom.basis(n, d))
            r.check(a == b, "(%d,%d): %d gathered vs %d Nakaoka" % (n, d, a, b))
    return r


@_timed
def pairing(max_component: int = 10, max_degree: int = 12) -> SuiteResult:
    """Every pairing matrix is square and invertible over GF(2)."""
    r = SuiteResult("pairing")
    for n in range(max_component + 1):
        for d in range(max_degree + 1):
            try:
                rows, cols, packed = duality._matrix(n, d)
                ok = rank(list(packed)) == len(rows) == len(cols)
            except duality.SingularPairing:
                ok = False
            r.check(ok, "(%d,%d) singular" % (n, d))
    return r


@_timed
def oracle(max_component: int = 8, max_degree: int = 10, method: str = "filter") -> SuiteResult:
    """Matching-algorithm cup equals the duality solve on all basis pairs."""
    r = SuiteResult("oracle")
    for n in range(max_component + 1):
        for d1 in range(max_degree + 1):
            for d2 in range(max_degree + 1 - d1):
                for (x, y), z in duality.cup_oracle_table(n, d1, d2).items():
                    got = coh.cup(x, y, method=method)
                    r.check(got == z, "%s . %s: matching %s, oracle %s"
                            % (x, y, _cs(got), _cs(z)))
    return r


@_timed
def matchings(max_component: int = 8, max_degree: int = 10) -> SuiteResult:
    """The refinement filter and the transport-matrix enumeration select
    the same maximal matchings."""
    r = SuiteResult("matchings")
    for n in range(max_component + 1):
        bs = [x for d in range(max_degree + 1) for x in coh.basis(n, d)]
        for x in bs:
            for y in bs:
                if x.degree + y.degree > max_degree:
                    continue
                a = sorted(coh.maximal_matchings(x, y))
                b = sorted(coh.maximal_matchings_by_filter(x, y))
                r.check(a == b, "%s vs %s" % (x, y))
    return r


# -- worked examples -------------------------------------------------------

@_timed
def examples(**_) -> SuiteResult:
    """Worked computations in BS_4, BS_6 and BS_12 components."""
    r = SuiteResult("examples")
    g = coh.gamma
    cup, tr = coh.cup_sum, coh.transfer_sum
    one = F2Sum.single

    def g11(e):
        return coh.cup_power(one(g(1, 1)), e)

    # γ_{1,2} · (γ_{1,1}^n ⊙ γ_{1,1}^m) = γ_{1,1}^{n+1} ⊙ γ_{1,1}^{m+1}, n ≠ m
    for a in range(0, 5):
        for b in range(0, 5):
            if a == b:
                continue
            lhs = cup(one(g(1, 2)), tr(g11(a), g11(b)))
            rhs = tr(g11(a + 1), g11(b + 1))
            r.check(lhs == rhs, "γ12·(γ11^%d ⊙ γ11^%d) = %s" % (a, b, _cs(lhs)))
            # γ_{2,1} · (γ_{1,1}^n ⊙ γ_{1,1}^m) = 0
            z = cup(one(g(2, 1)), tr(g11(a), g11(b)))
            r.check(not z, "γ21·(γ11^%d ⊙ γ11^%d) = %s" % (a, b, _cs(z)))
    # (γ_{1,1}^i ⊙ γ_{1,1}^j)·(γ_{1,1}^k ⊙ γ_{1,1}^l)
    for i, j, k, l in iproduct(range(4), repeat=4):
        x = tr(g11(i), g11(j))
        y = tr(g11(k), g11(l))
        if not x or not y:
            continue
        lhs = cup(x, y)
        rhs = tr(g11(i + k), g11(j + l)) + tr(g11(i + l), g11(j + k))
        r.check(lhs == rhs, "(γ11^%d⊙γ11^%d)(γ11^%d⊙γ11^%d) = %s" % (i, j, k, l, _cs(lhs)))
    # γ_{1,2}^p γ_{2,1}^q · (γ_{1,1}^k ⊙ γ_{1,1}^l), k != 0
    for p, q, k, l in iproduct(range(3), range(3), range(1, 4), range(4)):
        if k == l:
            continue
        left = cup(coh.cup_power(one(g(1, 2)), p), coh.cup_power(one(g(2, 1)), q))
        lhs = cup(left, tr(g11(k), g11(l)))
        rhs = tr(g11(k + p), g11(l + p)) if q == 0 else F2Sum.zero()
        r.check(lhs == rhs, "γ12^%d γ21^%d·(γ11^%d ⊙ γ11^%d) = %s" % (p, q, k, l, _cs(lhs)))
    # the lone BS_4 relation and the BS_6 relation
    lone = cup(tr(one(g(1, 1)), one(coh.unit(2))), one(g(2, 1)))
    r.check(not lone, "(γ11 ⊙ 1_2)·γ21 = %s" % _cs(lone))
    six = cup(one(g(2, 1)), tr(tr(g11(2), one(g(1, 1))), one(coh.unit(2))))
    r.check(not six, "γ21·(γ11^2 ⊙ γ11 ⊙ 1_2) = %s" % _cs(six))
    # (γ_{1,1} ⊙ 1_2)·γ_{1,2} = γ_{1,1}^2 ⊙ γ_{1,1}
    u = cup(tr(one(g(1, 1)), one(coh.unit(2))), one(g(1, 2)))
    r.check(u == tr(g11(2), g11(1)), "(γ11 ⊙ 1_2)·γ12 = %s" % _cs(u))
    # pairing of γ_{1,2}^3 with q_{0,3} and q_{2,2}
    c = coh.cup_power(one(g(1, 2)), 3)
    for seq in [(0, 3), (2, 2)]:
        v = duality.pair_sum(c, hom.apply_qseq(seq))
        r.check(v == 1, "<γ12^3, q%s> = %d" % (list(seq), v))
    # γ_{1,2}^3 is exactly the dual of those two classes
    h = hom.basis(4, 6)
    dual = {m for m in h if duality.pair_sum(c, one(m))}
    r.check(dual == set(hom.apply_qseq((0, 3)).terms) | set(hom.apply_qseq((2, 2)).terms),
            "γ12^3 pairs with %s" % sorted(map(str, dual)))
    # gathering identity
    lhs = coh.transfer(_one("g[1,4].g[2,2]^3"), _one("g[1,2].g[2,1]^3"))
    r.check(lhs == one(_one("g[1,6].g[2,3]^3")), "gathering gives %s" % _cs(lhs))
    # the Adem-relation term quoted for Δ q_{2,2}
    d = hom.cup_coproduct(hom.monomial(0, [(2, 2)]))
    r.check((hom.monomial(0, [(1,), (1,)]), hom.monomial(0, [(2,), (2,)])) in d,
            "Δ q[2,2] lacks q[0,1] ⊗ q[0,2]")
    return r


# -- Hopf ring axioms ------------------------------------------------------

def _basis_upto(n: int, max_degree: int) -> list:
    return [x for d in range(max_degree + 1) for x in coh.basis(n, d)]


def _tensor_product(s: F2Sum, t: F2Sum, op: Callable) -> F2Sum:
    """Factorwise product of two tensor sums, ``op`` acting on monomials."""
    acc: set = set()
    for a, b in s.terms:
        for c, d in t.terms:
            acc ^= tensor(op(a, c), op(b, d)).terms
    return F2Sum.from_set(acc)


@_timed
def hopf(max_component: int = 8, trials: int = 1000, max_degree: int = 6,
         seed: int = 20261014) -> SuiteResult:
    """Randomized Hopf ring axioms: distributivity, both bialgebra laws,
    (co)associativity and commutativity."""
    r = SuiteResult("hopf")
    rng = random.Random(seed)
    pools = {n: _basis_upto(n, max_degree) for n in range(max_component + 1)}
    one = F2Sum.single
    cupm = lambda a, b: coh.cup(a, b, method="direct")
    for t in range(trials):
        n = rng.randint(1, max_component)
        n1 = rng.randint(0, n)
        n2 = n - n1
        al = rng.choice(pools[n])
        be, ga = rng.choice(pools[n1]), rng.choice(pools[n2])
        x, y, z = rng.choice(pools[n]), rng.choice(pools[n]), rng.choice(pools[n])
        tag = "trial %d: α=%s β=%s γ=%s x=%s y=%s z=%s" % (t, al, be, ga, x, y, z)
        # distributivity α·(β ⊙ γ) = Σ (α'·β) ⊙ (α''·γ)
        lhs = coh.cup_sum(one(al), coh.transfer(be, ga), method="direct")
        rhs = linear_sum(coh.transfer_sum(cupm(a1, be), cupm(a2, ga))
                         for a1, a2 in coh.coproduct(al).terms
                         if a1.component == n1)
        r.check(lhs == rhs, "distributivity " + tag)
        # bialgebra laws
        lhs = coh.coproduct_sum(cupm(x, y))
        rhs = _tensor_product(coh.coproduct(x), coh.coproduct(y), cupm)
        r.check(lhs == rhs, "cup bialgebra " + tag)
        lhs = coh.coproduct_sum(coh.transfer(be, ga))
        rhs = _tensor_product(coh.coproduct(be), coh.coproduct(ga), coh.transfer)
        r.check(lhs == rhs, "transfer bialgebra " + tag)
        # (co)associativity and commutativity
        r.check(coh.cup_sum(cupm(x, y), one(z), "direct") == coh.cup_sum(one(x), cupm(y, z), "direct"),
                "cup associativity " + tag)
        r.check(cupm(x, y) == cupm(y, x), "cup commutativity " + tag)
        w = rng.choice(pools[rng.randint(0, max_component)])
        r.check(coh.transfer_sum(coh.transfer(be, ga), one(w)) == coh.transfer_sum(one(be), coh.transfer(ga, w)),
                "transfer associativity " + tag)
        r.check(coh.transfer(be, ga) == coh.transfer(ga, be), "transfer commutativity " + tag)
        d = coh.coproduct(al)
        r.check(_reassoc(F2Sum.from_set(_flatten_left(d))) == F2Sum.from_set(_flatten_right(d)),
                "coassociativity " + tag)
        r.check(F2Sum.from_set((b, a) for a, b in d.terms) == d, "cocommutativity " + tag)
        r.check(cupm(x, coh.unit(n)) == one(x), "cup unit " + tag)
    return r


def _flatten_left(d: F2Sum):
    acc: set = set()
    for a, b in d.terms:
        for a1, a2 in coh.coproduct(a).terms:
            acc ^= {((a1, a2), b)}
    return acc


def _flatten_right(d: F2Sum):
    acc: set = set()
    for a, b in d.terms:
        for b1, b2 in coh.coproduct(b).terms:
            acc ^= {(a, (b1, b2))}
    return acc


def _reassoc(t: F2Sum) -> F2Sum:
    return F2Sum.from_set((a, (b, c)) for (a, b), c in t.terms)


@_timed
def homology_laws(max_component: int = 8, max_degree: int = 10) -> SuiteResult:
    """Coassociativity, cocommutativity and component bookkeeping of both
    homology coproducts, and their multiplicativity on sampled products."""
    r = SuiteResult("homology")
    for n in range(max_component + 1):
        for d in range(max_degree + 1):
            for m in hom.basis(n, d):
                for name, cop in (("cup", hom.cup_coproduct), ("transfer", hom.transfer_coproduct)):
                    t = cop(m)
                    r.check(F2Sum.from_set((b, a) for a, b in t.terms) == t,
                            "%s coproduct of %s not cocommutative" % (name, m))
                    left = F2Sum(((a1, a2), b) for a, b in t.terms for a1, a2 in cop(a).terms)
                    right = F2Sum((a, (b1, b2)) for a, b in t.terms for b1, b2 in cop(b).terms)
                    r.check(_reassoc(left) == right, "%s coproduct of %s not coassociative" % (name, m))
                for a, b in hom.cup_coproduct(m).terms:
                    r.check(a.component == b.component == n, "Δ· of %s leaves its component" % m)
                for a, b in hom.transfer_coproduct(m).terms:
                    r.check(a.component + b.component == n, "Δ⊙ of %s splits wrongly" % m)
    rng = random.Random(7)
    cells = [(n, d) for n in range(max_component + 1) for d in range(max_degree + 1) if hom.basis(n, d)]
    for _ in range(300):
        (n1, d1), (n2, d2) = rng.choice(cells), rng.choice(cells)
        if n1 + n2 > max_component:
            continue
        a, b = rng.choice(hom.basis(n1, d1)), rng.choice(hom.basis(n2, d2))
        for name, cop in (("cup", hom.cup_coproduct), ("transfer", hom.transfer_coproduct)):
            lhs = cop(hom.pontryagin(a, b))
            rhs = F2Sum((hom.pontryagin(x, z), hom.pontryagin(y, w))
                        for x, y in cop(a).terms for z, w in cop(b).terms)
            r.check(lhs == rhs, "%s coproduct not multiplicative on %s * %s" % (name, a, b))
    return r


@_timed
def adjointness(max_component: int = 6, max_degree: int = 6) -> SuiteResult:
    """``<x ⊙ y, m> = <x ⊗ y, Δ⊙ m>`` and ``<x · y, m> = <x ⊗ y, Δ· m>``."""
    r = SuiteResult("adjointness")
    for n in range(max_component + 1):
        for d in range(max_degree + 1):
            for m in hom.basis(n, d):
                dc = hom.cup_coproduct(m)
                dt = hom.transfer_coproduct(m)
                for d1 in range(d + 1):
                    for x in coh.basis(n, d1):
                        for y in coh.basis(n, d - d1):
                            lhs = duality.pair_sum(coh.cup(x, y, method="direct"), F2Sum.single(m))
                            rhs = duality.pair_tensor(F2Sum.single((x, y)), dc)
                            r.check(lhs == rhs, "cup adjointness %s, %s on %s" % (x, y, m))
                for n1 in range(n + 1):
                    for d1 in range(d + 1):
                        for x in coh.basis(n1, d1):
                            for y in coh.basis(n - n1, d - d1):
                                lhs = duality.pair_sum(coh.transfer(x, y), F2Sum.single(m))
                                rhs = duality.pair_tensor(F2Sum.single((x, y)), dt)
                                r.check(lhs == rhs, "transfer adjointness %s, %s on %s" % (x, y, m))
    return r


# -- Kudo-Araki ------------------------------------------------------------

@_timed
def kudo_araki(max_length: int = 4, max_entry: int = 6, max_n: int = 8) -> SuiteResult:
    """q_0 relations from the Adem relation, confluence, idempotence and degree."""
    r = SuiteResult("kudo-araki")
    r.check(not ka.adem_step(1, 0), "q1 q0 != 0")
    for n in range(max_n + 1):
        r.check(not ka.adem_step(2 * n + 1, 0), "q_%d q_0 != 0" % (2 * n + 1))
        if n >= 1:
            r.check(ka.adem_step(2 * n, 0) == F2Sum.single((0, n)), "q_%d q_0 != q_0 q_%d" % (2 * n, n))
    r.check(not ka.normalize((2, 1)), "q2 q1 != 0")
    for k in range(max_length + 1):
        for seq in iproduct(range(max_entry + 1), repeat=k):
            left = ka.normalize(seq)
            right = ka.normalize_rightmost(seq)
            r.check(left == right, "normalize %r not confluent" % (seq,))
            deg = ka.seq_degree(seq)
            for t in left:
                if not r.check(ka.is_admissible(t) and ka.seq_degree(t) == deg and len(t) == k,
                               "normalize %r gave %r" % (seq, t)):
                    break
                r.check(ka.normalize(t) == F2Sum.single(t), "normalize not idempotent on %r" % (t,))
    return r


# -- polynomial subalgebras ------------------------------------------------

def _polynomial_monomials(n: int, max_degree: int) -> List[tuple]:
    gens = [(l, 1 << (n - l)) for l in range(1, n + 1)]
    degs = [(1 << (n - l)) * ((1 << l) - 1) for l, _ in gens]
    out = []

    def rec(i, deg, exps):
        if i == len(gens):
            out.append((deg, tuple(exps)))
            return
        e = 0
        while deg + e * degs[i] <= max_degree:
            rec(i + 1, deg + e * degs[i], exps + [e])
            e += 1

    rec(0, 0, [])
    return [(d, dict(zip(gens, e))) for d, e in sorted(out)]


@_timed
def polynomial(max_level: int = 3, max_degree: Optional[int] = None) -> SuiteResult:
    """Monomials in ``γ_{ℓ,2^k}``, ``k+ℓ=n``, are independent in ``H^*(BS_{2^n})``:
    the pairing rank of each degree's monomials equals their number."""
    r = SuiteResult("polynomial")
    bounds = {1: 16, 2: 18, 3: 18}
    for n in range(1, max_level + 1):
        top = max_degree if max_degree is not None else bounds.get(n, 14)
        monos = _polynomial_monomials(n, top)
        by_degree: Dict[int, list] = {}
        for d, e in monos:
            by_degree.setdefault(d, []).append(e)
        comp = 1 << n
        for d, group in sorted(by_degree.items()):
            h = hom.basis(comp, d)
            vecs = []
            for exps in group:
                cls = F2Sum.single(coh.unit(comp))
                for (l, w), e in sorted(exps.items()):
                    if e:
                        cls = coh.cup_sum(cls, coh.cup_power(F2Sum.single(coh.gamma(l, w)), e), "direct")
                v = 0
                for j, m in enumerate(h):
                    if duality.pair_sum(cls, F2Sum.single(m)):
                        v |= 1 << j
                vecs.append(v)
            r.check(rank(vecs) == len(group), "level %d degree %d: rank %d of %d"
                    % (n, d, rank(vecs), len(group)))
    return r


# -- Feshbach --------------------------------------------------------------

BS12_TABLE = [
    (1, "1 = 1*1", "g[1,1] o u[10]"),
    (1, "3 = 3*1", "g[1,1]^3 o u[10]"),
    (1, "5 = 5*1", "g[1,1]^5 o u[10]"),
    (2, "2 = 1*2", "g[1,2] o u[8]"),
    (2, "3 = 1*3", "g[2,1] o u[8]"),
    (2, "5 = 1*3 + 1*2", "g[1,2].g[2,1] o u[8]"),
    (2, "6 = 3*2", "g[1,2]^3 o u[8]"),
    (2, "7 = 1*3 + 2*2", "g[1,2]^2.g[2,1] o u[8]"),
    (2, "8 = 2*3 + 1*2", "g[1,2].g[2,1]^2 o u[8]"),
    (2, "9 = 3*3", "g[2,1]^3 o u[8]"),
    (3, "4 = 1*4", "g[1,4] o u[4]"),
    (3, "6 = 1*6", "g[2,2] o u[4]"),
    (3, "7 = 1*7", "g[3,1] o u[4]"),
]


@_timed
def feshbach(max_component: int = 12, max_degree: int = 12) -> SuiteResult:
    """The BS_12 generator table, the pairing criterion for the factors, and
    agreement of the generator count with the indecomposables."""
    r = SuiteResult("feshbach")
    rows = gen.feshbach_generators(12)
    got = [(lam.level, str(lam), coh.render_monomial(g)) for lam, g in rows]
    r.check(len(got) == len(BS12_TABLE), "BS12 table has %d rows, expected %d" % (len(got), len(BS12_TABLE)))
    for a, b in zip(got, BS12_TABLE):
        r.check(a == b, "row %r != %r" % (a, b))
    for m in range(2, max_component + 1):
        for lam, g in gen.feshbach_generators(m):
            for l, d in g.blocks[0].profile:
                k = lam.level - l
                v = duality.pair(coh.gamma(l, 1 << k), gen.qk0l1(k, l))
                r.check(v == 1, "γ_{%d,%d} does not pair with q_{%d·0,%d·1}" % (l, 1 << k, k, l))
    for d, dim, dec, ngen, total in gen.indecomposable_defect(12, max_degree):
        r.check(ngen == dim - dec and total == dim,
                "BS12 degree %d: dim %d, decomposables %d, generators %d, span %d"
                % (d, dim, dec, ngen, total))
    return r


# -- Stiefel-Whitney -------------------------------------------------------

@_timed
def stiefel_whitney(max_component: int = 8, **_) -> SuiteResult:
    """The BO(n) calculation, the Stiefel-Whitney functionals, the coproduct
    formula and the generating criterion."""
    r = SuiteResult("stiefel-whitney")
    q11 = gen.bo_apply_qseq((1, 1), (0,))
    r.check(q11 == F2Sum([(0, 1, 1, 1), (0, 0, 0, 3), (0, 0, 1, 2)]),
            "q[1,1](b0) = %s" % gen.render_bo_sum(q11))
    r.check(gen.bo_apply_q(1, (0,)) == F2Sum.single((0, 1)), "q1(b0) != b0 b1")
    pairs = [(k, l) for k in range(4) for l in range(4) if 1 <= (1 << (k + l)) <= max_component]
    for k, l in pairs:
        n = 1 << (k + l)
        i = gen.sw_degree(k, l)
        w = gen.sw_class(k, l)
        r.check(duality.realizes(w, n, i, gen.sw_functional), "w(%d,%d) is not the indicator" % (k, l))
        bo = gen.bo_sw_functional(i, n)
        for m in hom.basis(n, i):
            r.check(bo(m) == gen.sw_functional(m), "BO value of w_{%d,%d} on %s" % (i, n, m))
        r.check(duality.pair_sum(w, F2Sum.single(gen.qk0l1(k, l))) == 1,
                "w(%d,%d) does not pair with q_{%d·0,%d·1}" % (k, l, k, l))
        a, b = gen.sw_coproduct(k, l), gen.sw_coproduct_direct(k, l)
        r.check(a == b, "Δw(%d,%d): formula %s, direct %s"
                % (k, l, coh.render_tensor_sum(a), coh.render_tensor_sum(b)))
    for l in range(1, 4):
        if (1 << l) > max_component:
            continue
        img = gen.bo_apply_qseq((1,) * l, (0,))
        head = (0,) + (1,) * ((1 << l) - 1)
        r.check(head in img and all(gen.is_tainted(t) for t in img.terms if t != head),
                "q_{%d·1}(b0) is not b0 b1^%d plus tainted terms" % (l, (1 << l) - 1))
    return r


# -- invariant theory ------------------------------------------------------

def _proper_enumeration(m: int, d: int) -> Dict:
    from itertools import combinations
    sets = [sum(1 << (a - 1) for a in A) for s in (2, 4, 8, 16) if s <= m
            for A in combinations(range(1, m + 1), s)]
    found: Dict = {}

    def rec(i, deg, cur):
        if deg == d:
            mono = inv.SetMonomial(m, cur)
            if inv.is_proper(mono):
                g = inv.from_proper(mono)
                found[g] = found.get(g, 0) + 1
            return
        for j in range(i, len(sets)):
            w = bin(sets[j]).count("1") - 1
            if deg + w <= d:
                rec(j, deg + w, cur + [(sets[j], 1)])

    rec(0, 0, [])
    return found


@_timed
def invariants(max_component: int = 6, max_degree: int = 8) -> SuiteResult:
    """Quartic relation, the proper-orbit bijection, the ring map and the
    scale quotients."""
    r = SuiteResult("invariants")
    M = inv.MultiSymPoly
    shuffle = inv.shuffle_product
    s1 = shuffle(M.sigma(2, 1, 1), M.one(2, 1))
    s2 = shuffle(M.sigma(2, 2, 1), M.one(2, 1))
    e = shuffle(M.sigma(2, 1, 1) * M.sigma(2, 2, 1), M.one(2, 1))
    p1, p2 = M.sigma(2, 1, 2), M.sigma(2, 2, 2)
    quartic = e ** 2 + e * s1 * s2 + p1 * s2 ** 2 + s1 ** 2 * p2
    r.check(quartic == 0, "quartic relation leaves %s" % quartic)
    # bijection with proper orbits, degreewise
    for m in range(max_component + 1):
        for d in range(min(max_degree, 6) + 1):
            found = _proper_enumeration(m, d)
            basis = set(coh.basis(m, d))
            r.check(set(found) == basis, "(%d,%d): %d proper orbits, %d gathered" % (m, d, len(found), len(basis)))
            for x in basis:
                r.check(found.get(x, 0) == len(inv.to_invariant(x)),
                        "orbit of %s is not a single orbit of proper monomials" % x)
    # ring map
    for m in range(max_component + 1):
        bs = _basis_upto(m, max_degree)
        for i, x in enumerate(bs):
            for y in bs[i:]:
                if x.degree + y.degree > max_degree:
                    continue
                lhs = inv.invariant_cup(inv.to_invariant(x), inv.to_invariant(y))
                rhs = inv.to_invariant_sum(coh.cup(x, y, method="direct"))
                r.check(lhs == rhs, "invariant cup of %s and %s" % (x, y))
    # scale quotients as Hopf ring maps
    for k in (1, 2, 3):
        step = 1 << k
        for m in range(0, 9, step):
            bs = _basis_upto(m, max_degree)
            for x in bs:
                qx = inv.scale_quotient(x, k)
                lhs = inv.full_coproduct(qx)
                acc: set = set()
                for a, b in coh.coproduct(x).terms:
                    qa, qb = inv.scale_quotient(a, k), inv.scale_quotient(b, k)
                    for ra in qa.orbits.terms:
                        for rb in qb.orbits.terms:
                            acc ^= {(ra, rb)}
                r.check(lhs.terms == frozenset(acc), "scale-%d coproduct on %s" % (k, x))
                for y in bs:
                    if x.degree + y.degree > max_degree:
                        continue
                    lhs = inv.scale_quotient_sum(coh.cup(x, y, method="direct"), k, m)
                    r.check(lhs == qx * inv.scale_quotient(y, k), "scale-%d cup on %s, %s" % (k, x, y))
        for m1 in range(0, 9):
            for m2 in range(0, 9 - m1):
                for x in _basis_upto(m1, 4):
                    for y in _basis_upto(m2, 4):
                        lhs = inv.scale_quotient_sum(coh.transfer(x, y), k, m1 + m2)
                        rhs = shuffle(inv.scale_quotient(x, k), inv.scale_quotient(y, k))
                        r.check(lhs == rhs, "scale-%d transfer on %s, %s" % (k, x, y))
    return r


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "dimensions": dimensions,
    "pairing": pairing,
    "oracle": oracle,
    "matchings": matchings,
    "examples": examples,
    "hopf": hopf,
    "homology": homology_laws,
    "adjointness": adjointness,
    "kudo-araki": kudo_araki,
    "polynomial": polynomial,
    "feshbach": feshbach,
    "stiefel-whitney": stiefel_whitney,
    "invariants": invariants,
}


def run(name: str, max_component: Optional[int] = None, max_degree: Optional[int] = None) -> List[SuiteResult]:
    """Run one suite (or ``all``) with optional range overrides."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(nm)
        fn = SUITES[nm]
        kwargs = {}
        params = inspect.signature(fn).parameters
        if max_component is not None and "max_component" in params:
            kwargs["max_component"] = max_component
        if max_degree is not None and "max_degree" in params:
            kwargs["max_degree"] = max_degree
        out.append(fn(**kwargs))
    return out
