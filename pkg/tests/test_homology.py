import pytest
from hypothesis import given, settings

from symhopf import homology as hom
from symhopf.f2 import F2Sum

from strategies import nakaoka

M = hom.monomial


def test_products():
    p = hom.pontryagin(hom.IOTA, hom.IOTA)
    assert p == M(2) and p.component == 2 and p.degree == 0
    p = hom.pontryagin(M(0, [(1,)]), hom.IOTA)
    assert p.factors == ((1,),) and p.iota == 1 and (p.component, p.degree) == (3, 1)
    p = hom.pontryagin(M(0, [(1, 1)]), M(0, [(1,)]))
    assert (p.component, p.degree) == (6, 4)
    assert hom.power(M(0, [(1,)]), 2) == M(0, [(1,), (1,)])


def test_apply_qseq():
    assert hom.apply_qseq((0, 1)) == F2Sum.single(M(0, [(1,), (1,)]))
    assert not hom.apply_qseq((1, 0))
    assert hom.apply_qseq((2, 0)) == F2Sum.single(M(0, [(1,), (1,)]))
    assert hom.apply_qseq(()) == F2Sum.single(hom.IOTA)
    assert hom.apply_qseq((0,)) == F2Sum.single(M(2))


def test_coproduct_examples():
    assert hom.cup_coproduct(hom.IOTA) == F2Sum.single((hom.IOTA, hom.IOTA))
    q1 = M(0, [(1,)])
    assert hom.transfer_coproduct(q1) == F2Sum([(q1, hom.UNIT), (hom.UNIT, q1)])
    assert hom.transfer_coproduct(M(2)) == F2Sum([(M(2), hom.UNIT), (hom.UNIT, M(2))])
    q1i = M(1, [(1,)])
    assert hom.transfer_coproduct(q1i) == F2Sum(
        [(q1i, hom.UNIT), (q1, hom.IOTA), (hom.IOTA, q1), (hom.UNIT, q1i)])


def test_cup_coproduct_of_q1():
    # q_1(ι) pairs with γ_{1,1}; its diagonal is q_1 ⊗ ι^2 + ι^2 ⊗ q_1
    q1 = M(0, [(1,)])
    assert hom.cup_coproduct(q1) == F2Sum([(q1, M(2)), (M(2), q1)])


@pytest.mark.parametrize("d", range(0, 13))
def test_bs2_has_one_class_per_degree(d):
    b = hom.basis(2, d)
    assert len(b) == 1
    assert b[0] == (M(2) if d == 0 else M(0, [(d,)]))


def test_small_bases():
    assert hom.basis(3, 2) == [M(1, [(2,)])]
    assert set(hom.basis(4, 3)) == {M(2, [(3,)]), M(0, [(1, 1)]), M(0, [(1,), (2,)])}
    assert hom.basis(0, 0) == [hom.UNIT]
    assert hom.basis(0, 1) == []


def _bs4_poincare(d):
    # H^*(BS_4) = F_2[x1, x2, x3] / (x1 x3), counted by monomials avoiding x1 x3
    n = 0
    for a in range(d + 1):
        for c in range((d - a) // 3 + 1):
            if a and c:
                continue
            if (d - a - 3 * c) % 2 == 0:
                n += 1
    return n


@pytest.mark.parametrize("d", range(0, 15))
def test_bs4_dimensions(d):
    assert len(hom.basis(4, d)) == _bs4_poincare(d)


@pytest.mark.parametrize("k", range(0, 5))
def test_odd_components_match_even(k):
    # |S_{2k+1} : S_{2k}| is odd, so the mod 2 homology agrees
    for d in range(0, 9):
        assert len(hom.basis(2 * k + 1, d)) == len(hom.basis(2 * k, d))


@given(nakaoka)
def test_basis_gradings(m):
    assert m in hom.basis(m.component, m.degree)


@given(nakaoka)
def test_coproducts_cocommutative_coassociative(m):
    for cop in (hom.cup_coproduct, hom.transfer_coproduct):
        t = cop(m)
        assert F2Sum((b, a) for a, b in t) == t
        left = F2Sum((a1, (a2, b)) for a, b in t for a1, a2 in cop(a))
        right = F2Sum((a, (b1, b2)) for a, b in t for b1, b2 in cop(b))
        assert left == right


@given(nakaoka, nakaoka)
@settings(max_examples=60)
def test_coproducts_multiplicative(a, b):
    for cop in (hom.cup_coproduct, hom.transfer_coproduct):
        lhs = cop(hom.pontryagin(a, b))
        rhs = F2Sum((hom.pontryagin(x, z), hom.pontryagin(y, w))
                    for x, y in cop(a) for z, w in cop(b))
        assert lhs == rhs


@given(nakaoka)
def test_transfer_counit(m):
    t = hom.transfer_coproduct(m)
    assert (m, hom.UNIT) in t and (hom.UNIT, m) in t


def test_render():
    assert hom.render_monomial(M(2, [(1, 1), (1, 1), (3,)])) == "q[1,1]^2*q[3]*i^2"
    assert hom.render_monomial(hom.UNIT) == "1"
    assert hom.render_sum(F2Sum.zero()) == "0"
