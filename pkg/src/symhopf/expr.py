"""Parsers for class expressions.

Cohomology: ``g[l,n]`` (γ_{ℓ,n}), ``u[m]`` (1_m), ``.`` cup, ``o`` transfer,
``^`` cup power, ``+`` sum, parentheses; precedence ``^ > . > o > +``.

Homology: ``i`` (ι), ``q[i1,...,ik]`` (q_I(ι)), ``*`` Pontryagin product,
``^`` Pontryagin power, ``+`` sum, parentheses; the literal ``1`` is the
empty monomial.

Kudo-Araki words: ``q[i1,...,ik]`` summed with ``+``.

``0`` is accepted everywhere as the zero class.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Optional, Sequence

from . import cohomology as coh
from . import homology as hom
from .f2 import F2Sum


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: Sequence[str], found: str = ""):
        self.text = text
        self.pos = pos
        self.expected = list(expected)
        self.found = found
        what = "end of input" if not found else repr(found)
        super().__init__("at position %d: expected %s, found %s\n  %s\n  %s^"
                         % (pos, " or ".join(self.expected), what, text, " " * pos))


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            out.append(Token("int", m.group(1), start))
        elif m.group(2) is not None:
            # split words so that "go" or "oi" do not hide operators
            for j, ch in enumerate(m.group(2)):
                out.append(Token("name", ch, start + j))
        elif m.group(3) is not None:
            out.append(Token("sym", m.group(3), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected) -> None:
        t = self.tok
        raise ParseError(self.text, t.pos, expected, t.value)

    def accept(self, value: str) -> bool:
        if self.tok.kind != "int" and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            self.fail(["'%s'" % value])

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            self.fail(["a non-negative integer"])
        self.i += 1
        return int(t.value)

    def int_list(self) -> List[int]:
        self.expect("[")
        vals = [self.integer()]
        while self.accept(","):
            vals.append(self.integer())
        self.expect("]")
        return vals

    def finish(self) -> None:
        if self.tok.kind != "end":
            self.fail(self.trailing)

    trailing: Sequence[str] = ("end of input",)


class _CohomologyParser(_Parser):
    trailing = ("'+'", "'o'", "'.'", "'^'", "end of input")

    def parse(self) -> F2Sum:
        v = self.sum_()
        self.finish()
        return v

    def sum_(self) -> F2Sum:
        v = self.transfer_()
        while self.accept("+"):
            v = v + self.transfer_()
        return v

    def transfer_(self) -> F2Sum:
        v = self.cup_()
        while self.accept("o"):
            v = coh.transfer_sum(v, self.cup_())
        return v

    def cup_(self) -> F2Sum:
        v = self.power_()
        while self.accept("."):
            v = coh.cup_sum(v, self.power_(), method="direct")
        return v

    def power_(self) -> F2Sum:
        v = self.atom_()
        while self.accept("^"):
            v = coh.cup_power(v, self.integer())
        return v

    def atom_(self) -> F2Sum:
        t = self.tok
        if self.accept("("):
            v = self.sum_()
            self.expect(")")
            return v
        if t.kind == "int":
            if t.value != "0":
                self.fail(["'g[l,n]'", "'u[m]'", "'0'", "'('"])
            self.i += 1
            return F2Sum.zero()
        if self.accept("g"):
            pos = self.tok.pos
            args = self.int_list()
            if len(args) != 2:
                raise ParseError(self.text, pos, ["two entries in g[l,n]"], "%d entries" % len(args))
            l, n = args
            if l < 1 or n < 1:
                raise ParseError(self.text, pos, ["g[l,n] with l >= 1 and n >= 1"], "g[%d,%d]" % (l, n))
            return F2Sum.single(coh.gamma(l, n))
        if self.accept("u"):
            pos = self.tok.pos
            args = self.int_list()
            if len(args) != 1:
                raise ParseError(self.text, pos, ["one entry in u[m]"], "%d entries" % len(args))
            return F2Sum.single(coh.unit(args[0]))
        self.fail(["'g[l,n]'", "'u[m]'", "'0'", "'('"])


class _HomologyParser(_Parser):
    trailing = ("'+'", "'*'", "'^'", "end of input")

    def parse(self) -> F2Sum:
        v = self.sum_()
        self.finish()
        return v

    def sum_(self) -> F2Sum:
        v = self.prod_()
        while self.accept("+"):
            v = v + self.prod_()
        return v

    def prod_(self) -> F2Sum:
        v = self.power_()
        while self.accept("*"):
            v = hom.pontryagin_sum(v, self.power_())
        return v

    def power_(self) -> F2Sum:
        v = self.atom_()
        while self.accept("^"):
            e = self.integer()
            acc = F2Sum.single(hom.UNIT)
            for _ in range(e):
                acc = hom.pontryagin_sum(acc, v)
            v = acc
        return v

    def atom_(self) -> F2Sum:
        t = self.tok
        if self.accept("("):
            v = self.sum_()
            self.expect(")")
            return v
        if t.kind == "int":
            if t.value not in ("0", "1"):
                self.fail(["'i'", "'q[...]'", "'1'", "'0'", "'('"])
            self.i += 1
            return F2Sum.single(hom.UNIT) if t.value == "1" else F2Sum.zero()
        if self.accept("i"):
            return F2Sum.single(hom.IOTA)
        if self.accept("q"):
            return hom.apply_qseq(self.int_list())
        self.fail(["'i'", "'q[...]'", "'1'", "'0'", "'('"])


class _WordParser(_Parser):
    trailing = ("'+'", "end of input")

    def parse(self) -> List[tuple]:
        words = [self.word()]
        while self.accept("+"):
            words.append(self.word())
        self.finish()
        return words

    def word(self) -> tuple:
        if self.tok.kind == "int" and self.tok.value == "0":
            self.i += 1
            return None
        self.expect("q")
        return tuple(self.int_list())


def parse_cohomology(text: str) -> F2Sum:
    return _CohomologyParser(text).parse()


def parse_homology(text: str) -> F2Sum:
    return _HomologyParser(text).parse()


def parse_words(text: str) -> List[Optional[tuple]]:
    """Kudo-Araki words; ``None`` stands for an explicit ``0`` summand."""
    return _WordParser(text).parse()


def looks_like_cohomology(text: str) -> bool:
    """Grammar sniffing for commands that accept either kind of class."""
    names = {t.value for t in tokenize(text) if t.kind == "name"}
    syms = {t.value for t in tokenize(text) if t.kind == "sym"}
    if names & {"g", "u", "o"} or "." in syms:
        return True
    return False
