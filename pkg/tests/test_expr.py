import pytest
from hypothesis import given, strategies as st

from symhopf import cohomology as coh
from symhopf import homology as hom
from symhopf.expr import ParseError, looks_like_cohomology, parse_cohomology, parse_homology, parse_words, tokenize
from symhopf.f2 import F2Sum

from strategies import COH, HOM

one = F2Sum.single


def test_atoms():
    assert parse_cohomology("g[1,2]") == one(coh.gamma(1, 2))
    assert parse_cohomology("u[0]") == one(coh.unit(0))
    assert parse_cohomology("0") == F2Sum.zero()
    assert parse_homology("i") == one(hom.IOTA)
    assert parse_homology("1") == one(hom.UNIT)


def test_precedence():
    # ^ binds tighter than ., which binds tighter than o, then +
    a = parse_cohomology("g[1,1] o g[1,1]^2")
    b = coh.transfer_sum(one(coh.gamma(1, 1)), coh.cup_power(one(coh.gamma(1, 1)), 2))
    assert a == b
    a = parse_cohomology("g[1,2].g[2,1] o u[8]")
    b = coh.transfer_sum(coh.cup(coh.gamma(1, 2), coh.gamma(2, 1)), one(coh.unit(8)))
    assert a == b
    assert parse_cohomology("g[1,1] + g[1,1]") == 0
    assert parse_cohomology("(g[1,1] o u[1])^2") == parse_cohomology("g[1,1]^2 o u[1]")


def test_homology_grammar():
    x = parse_homology("q[1,1]*i^2")
    assert x == one(hom.monomial(2, [(1, 1)]))
    assert parse_homology("q[1,0]") == 0
    assert parse_homology("q[2,0]") == one(hom.monomial(0, [(1,), (1,)]))
    assert parse_homology("i + i") == 0


def test_words():
    assert parse_words("q[1,0] + q[2]") == [(1, 0), (2,)]
    assert parse_words("0") == [None]


@pytest.mark.parametrize("text,pos", [
    ("g[1,x]", 4),
    ("g[1,2", 5),
    ("g[1,2] o", 8),
    ("g[0,1]", 1),
    ("g[1]", 1),
    ("g[1,1] g[1,1]", 7),
    ("z", 0),
])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_cohomology(text)
    assert info.value.pos == pos
    assert info.value.expected
    assert "^" in str(info.value)


def test_homology_errors():
    with pytest.raises(ParseError) as info:
        parse_homology("q[1,1]**i")
    assert info.value.pos == 7
    with pytest.raises(ParseError):
        parse_homology("2")


def test_tokens():
    assert [t.value for t in tokenize("go u")] == ["g", "o", "u", ""]


def test_sniffing():
    assert looks_like_cohomology("g[1,1] o u[2]")
    assert not looks_like_cohomology("q[1,1]*i")


@given(st.lists(st.sampled_from(COH), max_size=4))
def test_cohomology_round_trip(terms):
    s = F2Sum(terms)
    text = coh.render_sum(s)
    assert parse_cohomology(text) == s
    assert coh.render_sum(parse_cohomology(text)) == text


@given(st.lists(st.sampled_from(HOM), max_size=4))
def test_homology_round_trip(terms):
    s = F2Sum(terms)
    text = hom.render_sum(s)
    assert parse_homology(text) == s
