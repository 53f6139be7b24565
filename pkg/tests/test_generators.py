import pytest

from symhopf import cohomology as coh
from symhopf import duality
from symhopf import generators as gen
from symhopf import homology as hom
from symhopf.f2 import F2Sum
from symhopf.verify import BS12_TABLE

DP = gen.DicksonPartition
one = F2Sum.single


def p(text):
    from symhopf.expr import parse_cohomology
    return parse_cohomology(text)


def single(text):
    return p(text).sorted_terms()[0]


# -- Feshbach --------------------------------------------------------------

def test_dickson_partition_validation():
    with pytest.raises(ValueError):
        DP(2, (2, 0))
    with pytest.raises(ValueError):
        DP(2, (1,))
    assert DP(2, (1, 1)).value == 5
    assert str(DP(2, (1, 1))) == "5 = 1*3 + 1*2"


def test_mu():
    assert gen.mu(DP(1, (3,))) == 3
    assert gen.mu(DP(2, (2, 1))) == 3
    assert gen.maxwidth(DP(2, (2, 1))) == 12
    # the repeated power 2^0 counts twice
    assert gen.mu(DP(2, (1, 1))) == 2
    assert gen.mu(DP(2, (1, 3))) == 4


def test_bs12_table():
    rows = [(lam.level, str(lam), coh.render_monomial(g)) for lam, g in gen.feshbach_generators(12)]
    assert rows == BS12_TABLE


def test_bs12_spot_rows():
    gens = {coh.render_monomial(g) for _, g in gen.feshbach_generators(12)}
    assert {"g[1,1] o u[10]", "g[1,1]^3 o u[10]", "g[1,1]^5 o u[10]"} <= gens
    assert "g[1,2].g[2,1] o u[8]" in gens
    assert not [lam for lam, _ in gen.feshbach_generators(12) if lam.level == 4]


def test_bs4_generators():
    gens = [coh.render_monomial(g) for _, g in gen.feshbach_generators(4)]
    assert gens == ["g[1,1] o u[2]", "g[1,2]", "g[2,1]"]
    for d, dim, dec, ngen, total in gen.indecomposable_defect(4, 10):
        assert ngen == dim - dec and total == dim


@pytest.mark.parametrize("gens", [
    None,
    ["g[1,1] o u[4]", "g[1,2] o u[2]", "g[2,1] o u[2]", "g[1,1]^2 o g[1,1] o u[2]"],
])
def test_bs6_generating_sets(gens):
    if gens is not None:
        gens = [single(t) for t in gens]
    for d, dim, dec, ngen, total in gen.indecomposable_defect(6, 10, gens):
        assert ngen == dim - dec and total == dim


def test_bs6_relation():
    assert not coh.cup_sum(one(coh.gamma(2, 1)), p("g[1,1]^2 o g[1,1] o u[2]"))


@pytest.mark.parametrize("m", [8, 10, 12])
def test_indecomposables(m):
    for d, dim, dec, ngen, total in gen.indecomposable_defect(m, 7):
        assert ngen == dim - dec and total == dim


def test_pairing_criterion():
    for k in range(3):
        for l in range(1, 4 - k):
            assert duality.pair(coh.gamma(l, 1 << k), gen.qk0l1(k, l)) == 1


# -- Stiefel-Whitney ------------------------------------------------------

def test_bo_action():
    assert gen.bo_apply_q(1, (0,)) == one((0, 1))
    assert gen.render_bo_sum(gen.bo_apply_qseq((1, 1), (0,))) == "b0*b1^3 + b0^2*b1*b2 + b0^3*b3"
    assert gen.bo_apply_q(0, (0,)) == one((0, 0))


def test_bo_matches_indicator():
    for n in range(0, 9):
        for i in range(0, n + 1):
            f = gen.bo_sw_functional(i, n)
            for m in hom.basis(n, i):
                assert f(m) == gen.sw_functional(m)


def test_sw_examples():
    assert gen.sw_class(0, 1) == one(coh.gamma(1, 1))
    assert coh.render_sum(gen.sw_class(2, 1)) == "g[1,1] o g[2,1] o u[2] + g[1,4]"
    assert gen.sw_coproduct(0, 1) == F2Sum([(coh.gamma(1, 1), coh.unit(0)), (coh.unit(0), coh.gamma(1, 1))])
    w24 = gen.sw_total(2, 4)
    assert duality.realizes(w24, 4, 2, gen.sw_functional)
    assert gen.sw_class(2, 0) == one(coh.unit(4))


@pytest.mark.parametrize("k,l", [(k, l) for k in range(4) for l in range(4) if k + l <= 3])
def test_sw_coproduct_formula(k, l):
    assert gen.sw_coproduct(k, l) == gen.sw_coproduct_direct(k, l)
    assert duality.realizes(gen.sw_class(k, l), 1 << (k + l), gen.sw_degree(k, l), gen.sw_functional)
    if l:
        assert duality.pair_sum(gen.sw_class(k, l), one(gen.qk0l1(k, l))) == 1


def test_refinement_example():
    coarse = tuple(sorted(((2, 1), (1, 2), (1, 3))))
    assert coarse in gen.bipartitions(3, 2)
    fine = tuple(sorted(((1, 0), (0, 1), (0, 2), (1, 2), (1, 3))))
    assert fine in gen.bipartitions(3, 2)
    assert gen.refines(fine, coarse)
    assert not gen.refines(coarse, fine)
    # the entry (1, 1) does not give a bi-partition of (3, 2) alongside the others
    assert not gen.refines(tuple(sorted(((1, 0), (0, 1), (1, 1), (1, 2), (1, 3)))), coarse)


def test_phi_maximal_elements():
    table = gen.phi_table(2, 1)
    elems = list(table)
    for a in elems:
        if not any(b != a and gen.split_leq(a, b) for b in elems):
            assert table[a] == 1
        # the defining sum
        assert sum(table[b] for b in elems if gen.split_leq(a, b)) % 2 == 1


def test_w24_pairs_with_q1_squared():
    q1q1 = hom.monomial(0, [(1,), (1,)])
    assert duality.pair_sum(gen.sw_class(1, 1), one(q1q1)) == 1


@pytest.mark.parametrize("k,l", [(0, 1), (1, 1), (0, 2), (2, 1)])
def test_sw_coproduct_adjoint_to_product(k, l):
    # <Δw, a ⊗ b> = <w, a * b> over all homology pairs of complementary bidegree
    w = gen.sw_class(k, l)
    n, i = 1 << (k + l), gen.sw_degree(k, l)
    dw = gen.sw_coproduct(k, l)
    for n1 in range(n + 1):
        for i1 in range(i + 1):
            for a in hom.basis(n1, i1):
                for b in hom.basis(n - n1, i - i1):
                    lhs = duality.pair_tensor(dw, one((a, b)))
                    assert lhs == duality.pair_sum(w, one(hom.pontryagin(a, b)))


@pytest.mark.parametrize("k,l", [(3, 1), (2, 2), (1, 3), (0, 4)])
def test_sw_classes_on_component_16(k, l):
    n, i = 1 << (k + l), gen.sw_degree(k, l)
    assert duality.realizes(gen.sw_class(k, l), n, i, gen.sw_functional)


@pytest.mark.parametrize("l", range(1, 5))
def test_q_ones_on_b0_are_untainted_only_once(l):
    img = gen.bo_apply_qseq((1,) * l, (0,))
    head = (0,) + (1,) * ((1 << l) - 1)
    assert head in img
    assert all(gen.is_tainted(t) for t in img if t != head)
