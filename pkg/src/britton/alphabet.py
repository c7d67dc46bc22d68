"""Involutive generator alphabets.

Letters are encoded as nonzero integers: generator number ``k`` (zero based)
is ``k + 1`` and its formal inverse is ``-(k + 1)``.  Inversion is therefore
plain negation, a fixed-point-free involution.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import AlphabetMismatch

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Alphabet:
    """An ordered list of generator names closed under formal inversion."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        seen = set()
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        self.names = names
        self._index = {name: k + 1 for k, name in enumerate(names)}

    @property
    def rank(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)!r})"

    def letter(self, name: str, sign: int = 1) -> int:
        try:
            code = self._index[name]
        except KeyError:
            raise AlphabetMismatch(f"generator {name!r} not in {list(self.names)}") from None
        return code if sign > 0 else -code

    def parse_token(self, token: str) -> int:
        """Parse ``a`` or ``a^-1``."""
        if token.endswith("^-1"):
            return self.letter(token[:-3], -1)
        return self.letter(token)

    def token(self, letter: int) -> str:
        name = self.names[abs(letter) - 1]
        return name if letter > 0 else name + "^-1"

    def format(self, word: Sequence[int]) -> str:
        return " ".join(self.token(x) for x in word)

    def parse(self, text: str) -> list[int]:
        """Parse a whitespace separated word of plain tokens."""
        return [self.parse_token(tok) for tok in text.split()]

    def check(self, word: Iterable[int]) -> None:
        n = self.rank
        for x in word:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise AlphabetMismatch(f"letter {x!r} outside alphabet of rank {n}")

    def all_letters(self) -> list[int]:
        return [s * k for k in range(1, self.rank + 1) for s in (1, -1)]


def inverse_word(word: Sequence[int]) -> list[int]:
    return [-x for x in reversed(word)]
