"""Hypothesis strategies over small bases."""

from hypothesis import strategies as st

from symhopf import cohomology as coh
from symhopf import homology as hom


def coh_pool(max_component, max_degree):
    return [x for n in range(max_component + 1) for d in range(max_degree + 1) for x in coh.basis(n, d)]


def hom_pool(max_component, max_degree):
    return [m for n in range(max_component + 1) for d in range(max_degree + 1) for m in hom.basis(n, d)]


COH = coh_pool(6, 5)
HOM = hom_pool(6, 6)

gathered = st.sampled_from(COH)
nakaoka = st.sampled_from(HOM)


@st.composite
def same_component(draw, k=2, max_component=6, max_degree=4):
    n = draw(st.integers(0, max_component))
    pool = [x for d in range(max_degree + 1) for x in coh.basis(n, d)]
    return [draw(st.sampled_from(pool)) for _ in range(k)]
