"""Text syntax for (compressed) words.

Tokens are generator names, ``name^-1`` and parenthesized groups, each
optionally raised to an integer power::

    t^-1 a t (a^2)^-1
    (a b)^1048576
    (a b)^(2^20)  (a b)^2^20  ((a)^(3*2^40))^-1

Powers of stable-letter-free subwords become binary-powering grammars, so
the explicit word is never written out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .alphabet import Alphabet
from .errors import WordSyntaxError
from .slp import Leaf, Node, concat_nodes, invert_node, power_node

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[()^*-]))")

#: Largest repetition count allowed for a group that contains stable letters.
MAX_STABLE_REPEAT = 100_000
_MAX_EXPONENT_BITS = 1 << 20


@dataclass
class _Sym:
    name: str
    pos: int


@dataclass
class _Group:
    items: list
    pos: int


@dataclass
class _Pow:
    base: object
    exponent: int
    pos: int


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None, value=None):
        tok = self.toks[self.k]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise WordSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.k += 1
        return tok

    def word(self):
        items = []
        while True:
            kind, value, pos = self.peek()
            if kind == "name" or (kind == "sym" and value == "("):
                items.append(self.item())
            elif kind == "end" or (kind == "sym" and value == ")"):
                return items
            else:
                raise WordSyntaxError(f"unexpected {value!r}", pos)

    def item(self):
        kind, value, pos = self.peek()
        if kind == "name":
            self.take()
            node = _Sym(value, pos)
        else:
            self.take("sym", "(")
            node = _Group(self.word(), pos)
            self.take("sym", ")")
        while self.peek()[:2] == ("sym", "^"):
            self.take()
            node = _Pow(node, self.exponent(), pos)
        return node

    def exponent(self):
        sign = 1
        if self.peek()[:2] == ("sym", "-"):
            self.take()
            sign = -1
        return sign * self.term()

    def term(self):
        kind, value, pos = self.peek()
        if kind == "sym" and value == "(":
            self.take()
            result = self.exponent()
            while self.peek()[:2] == ("sym", "*"):
                self.take()
                result *= self.exponent()
            self.take("sym", ")")
            return result
        base = int(self.take("int")[1])
        powers = []
        while self.peek()[:2] == ("sym", "^") and self.toks[self.k + 1][0] == "int":
            self.take()
            powers.append((int(self.take("int")[1]), self.toks[self.k - 1][2]))
        # right associative: 2^3^2 = 2^(3^2)
        value_ = None
        for exp, epos in reversed(powers):
            value_ = exp if value_ is None else _checked_pow(exp, value_, epos)
        return base if value_ is None else _checked_pow(base, value_, pos)


def _checked_pow(base: int, exp: int, pos: int) -> int:
    if base > 1 and exp * base.bit_length() > _MAX_EXPONENT_BITS:
        raise WordSyntaxError("exponent too large", pos)
    return base ** exp


def _parse(text: str) -> list:
    parser = _Parser(text)
    items = parser.word()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise WordSyntaxError(f"unexpected {value!r}", pos)
    return items


def _names(items, out):
    for item in items:
        if isinstance(item, _Sym):
            out.setdefault(item.name, None)
        elif isinstance(item, _Group):
            _names(item.items, out)
        else:
            _names([item.base], out)
    return out


def infer_alphabet(text: str, exclude: Sequence[str] = ()) -> Alphabet:
    """Generators in order of first appearance, minus ``exclude``."""
    return Alphabet(n for n in _names(_parse(text), {}) if n not in exclude)


class _Builder:
    def __init__(self, alphabet: Alphabet, stable: str | None):
        self.alphabet = alphabet
        self.stable = stable
        self.leaves: dict[int, Leaf] = {}

    def stream(self, items) -> list:
        out: list = []
        for item in items:
            out += self.one(item)
        return _merge(out)

    def one(self, item) -> list:
        if isinstance(item, _Sym):
            if item.name == self.stable:
                return [1]
            if item.name not in self.alphabet:
                raise WordSyntaxError(f"unknown generator {item.name!r}", item.pos)
            x = self.alphabet.letter(item.name)
            if x not in self.leaves:
                self.leaves[x] = Leaf(x)
            return [self.leaves[x]]
        if isinstance(item, _Group):
            return self.stream(item.items)
        inner = self.one(item.base)
        e = item.exponent
        if not any(isinstance(x, int) for x in inner):
            return [power_node(concat_nodes(inner), e)]
        if abs(e) > MAX_STABLE_REPEAT:
            raise WordSyntaxError("power of a word with stable letters is too large", item.pos)
        if e < 0:
            inner = [-x if isinstance(x, int) else invert_node(x) for x in reversed(inner)]
        return _merge(inner * abs(e))


def _merge(stream: list) -> list:
    out: list = []
    chunk: list = []
    for x in stream:
        if isinstance(x, int):
            if chunk:
                out.append(concat_nodes(chunk))
                chunk = []
            out.append(x)
        else:
            chunk.append(x)
    if chunk:
        out.append(concat_nodes(chunk))
    return out


def parse_word(text: str, alphabet: Alphabet | None = None, stable: str | None = None) -> list:
    """Parse into a stream of grammar nodes and stable-letter exponents (+1/-1).

    Without ``alphabet`` the generators are inferred from the text.
    """
    items = _parse(text)
    if alphabet is None:
        alphabet = Alphabet(n for n in _names(items, {}) if n != stable)
    return _Builder(alphabet, stable).stream(items)


def parse_base_word(text: str, alphabet: Alphabet) -> Node:
    """Parse a word without stable letters into a single grammar node."""
    stream = parse_word(text, alphabet)
    return concat_nodes(stream)
