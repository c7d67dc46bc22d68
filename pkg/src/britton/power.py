"""The compressed power problem in free groups.

Given an explicit word ``w`` and a grammar ``G``, find the integer ``z``
with ``w^z == val(G)`` in the free group.  Write the reduced form of ``w``
as ``p s p^-1`` with ``s`` cyclically reduced.  For ``z != 0`` the word
``p s^z p^-1`` is already freely reduced, so a solution forces
``|nf(val(G))| == 2|p| + |z||s|``; the candidate ``|z|`` follows by
division, the sign is read off the letters following ``p`` and the
candidate is checked by compressed equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alphabet import Alphabet, inverse_word
from .errors import AlphabetMismatch
from .free_group import FreeReducer, cyclic_decompose, free_reduce
from .slp import EMPTY, CompositionSystem, Node, char_at, concat_nodes, power_node, verify_equal, word_node


@dataclass(frozen=True)
class PowerAnswer:
    """``z`` is None when there is no solution; ``exact`` tells whether the
    deciding comparison expanded both sides or relied on fingerprints."""

    z: int | None
    exact: bool = True

    @property
    def found(self) -> bool:
        return self.z is not None

    def __str__(self) -> str:
        return "none" if self.z is None else f"z={self.z}"


NO_SOLUTION = PowerAnswer(None)


class PowerSolver:
    """Solves ``w^z = val(G)`` for a fixed explicit ``w`` and many ``G``."""

    def __init__(self, word: Sequence[int]):
        self.reduced = free_reduce(word)
        self.prefix, self.core = cyclic_decompose(self.reduced)
        leaves: dict = {}
        self._prefix = word_node(self.prefix, leaves)
        self._prefix_inv = word_node([-x for x in reversed(self.prefix)], leaves)
        self._core = word_node(self.core, leaves)

    @property
    def trivial(self) -> bool:
        return not self.reduced

    def candidate(self, z: int) -> Node:
        """Grammar for ``p s^z p^-1`` (freely reduced when ``z != 0``)."""
        if z == 0:
            return EMPTY
        return concat_nodes([self._prefix, power_node(self._core, z), self._prefix_inv])

    def solve(self, target: Node, reducer: FreeReducer | None = None,
              exact_bound: int | None = None) -> PowerAnswer:
        reducer = reducer or FreeReducer()
        nf = reducer.reduce(target)
        if nf.length == 0:
            return PowerAnswer(0)
        if self.trivial:
            return NO_SOLUTION
        rest = nf.length - 2 * len(self.prefix)
        if rest <= 0 or rest % len(self.core):
            return NO_SOLUTION
        q = rest // len(self.core)
        # the letters right after p start s or s^-1, never both, so read them
        # exactly: fingerprints of s^q and s^-q coincide for some q near MOD
        start = len(self.prefix)
        window = [char_at(nf, start + k) for k in range(1, len(self.core) + 1)]
        if window == self.core:
            z = q
        elif window == inverse_word(self.core):
            z = -q
        else:
            return NO_SOLUTION
        same, decided_exactly = verify_equal(nf, self.candidate(z), exact_bound)
        return PowerAnswer(z if same else None, decided_exactly)


def compressed_power(w: Sequence[int] | str, g: CompositionSystem,
                     exact_bound: int | None = None, alphabet: Alphabet | None = None) -> PowerAnswer:
    """Find ``z`` with ``w^z == val(g)`` in the free group over ``g.alphabet``.

    ``w`` is a list of letters, or a plain word string parsed with the
    grammar's alphabet.  If ``alphabet`` is given it must match ``g``'s.
    """
    if alphabet is not None and alphabet != g.alphabet:
        raise AlphabetMismatch(f"{alphabet!r} vs {g.alphabet!r}")
    if isinstance(w, str):
        w = g.alphabet.parse(w)
    g.alphabet.check(w)
    return PowerSolver(w).solve(g.root, exact_bound=exact_bound)
