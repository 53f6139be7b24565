import pytest
from hypothesis import given, settings, strategies as st

from symhopf import cohomology as coh
from symhopf import duality
from symhopf import homology as hom
from symhopf.f2 import F2Sum
from symhopf.gf2 import rank

M = hom.monomial
one = F2Sum.single


def test_pairing_examples():
    c = coh.cup_power(one(coh.gamma(1, 2)), 3)
    assert duality.pair_sum(c, hom.apply_qseq((0, 3))) == 1
    assert duality.pair_sum(c, hom.apply_qseq((2, 2))) == 1
    for m in range(6):
        assert duality.pair(coh.unit(m), M(m)) == 1
    g21 = coh.gamma(2, 1)
    for m in hom.basis(4, 3):
        assert duality.pair(g21, m) == int(m == M(0, [(1, 1)]))


def test_generators_are_dual():
    for l, n in [(1, 1), (1, 2), (1, 3), (1, 5), (2, 1), (2, 2), (2, 3), (3, 1)]:
        g = coh.gamma(l, n)
        h = hom.basis(g.component, g.degree)
        assert [duality.pair(g, m) for m in h] == [int(m == duality.generator_dual(l, n)) for m in h]


def test_pairing_vanishes_off_bidegree():
    assert duality.pair(coh.gamma(1, 1), M(0, [(2,)])) == 0
    assert duality.pair(coh.gamma(1, 1), M(1, [(1,)])) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_pairing_matrices_invertible(n):
    for d in range(0, 9):
        rows = duality.pairing_matrix(n, d)
        packed = [sum(b << j for j, b in enumerate(r)) for r in rows]
        assert rank(packed) == len(rows) == len(hom.basis(n, d))


def test_oracle_examples():
    g12, g21 = coh.gamma(1, 2), coh.gamma(2, 1)
    assert duality.cup_oracle(g12, g12) == coh.cup_power(one(g12), 2)
    x = coh.transfer(coh.gamma(1, 1), coh.unit(2)).sorted_terms()[0]
    assert not duality.cup_oracle(x, g21)


def test_oracle_table_matches_single_solves():
    table = duality.cup_oracle_table(4, 2, 3)
    for (x, y), z in table.items():
        assert duality.cup_oracle(x, y) == z


@given(st.data())
@settings(max_examples=40)
def test_functional_round_trip(data):
    n = data.draw(st.integers(0, 6))
    d = data.draw(st.integers(0, 6))
    h = hom.basis(n, d)
    values = data.draw(st.lists(st.integers(0, 1), min_size=len(h), max_size=len(h)))
    x = duality.functional_to_basis(n, d, values)
    assert duality.realizes(x, n, d, lambda m: values[h.index(m)])


def test_zero_functional():
    assert not duality.functional_to_basis(4, 3, [0, 0, 0])


def test_indicator_of_generator_dual_contains_generator():
    for l, n in [(1, 2), (2, 1), (1, 4), (2, 2), (3, 1)]:
        g = coh.gamma(l, n)
        target = duality.generator_dual(l, n)
        x = duality.functional_from(g.component, g.degree, lambda m: int(m == target))
        assert g in x


def test_adjointness_samples():
    for n in range(0, 5):
        for d in range(0, 5):
            for m in hom.basis(n, d):
                dc = hom.cup_coproduct(m)
                for d1 in range(d + 1):
                    for x in coh.basis(n, d1):
                        for y in coh.basis(n, d - d1):
                            assert duality.pair_sum(coh.cup(x, y), one(m)) == \
                                duality.pair_tensor(one((x, y)), dc)
