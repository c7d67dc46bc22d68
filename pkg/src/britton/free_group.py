"""Free reduction of explicit and grammar-compressed words.

In a free group the freely reduced word is the unique geodesic
representative, so it doubles as the shortlex normal form whatever order
the generators are listed in.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from . import kernels
from .slp import (
    EMPTY,
    CompositionSystem,
    CutEliminator,
    Node,
    Pair,
    Slp,
    char_at,
    concat2,
    cut_node,
    expand_node,
    postorder,
    range_metrics,
)


def free_reduce(word: Sequence[int]) -> list[int]:
    return kernels.free_reduce(word)


def is_reduced(word: Sequence[int]) -> bool:
    return all(word[k + 1] != -word[k] for k in range(len(word) - 1))


def is_cyclically_reduced(word: Sequence[int]) -> bool:
    return is_reduced(word) and not (len(word) > 1 and word[0] == -word[-1])


def word_problem(word: Sequence[int]) -> bool:
    """True iff ``word`` represents the identity of the free group."""
    return not free_reduce(word)


class CyclicDecomposition(NamedTuple):
    """``word == prefix + core + prefix^-1`` with ``core`` cyclically reduced."""

    prefix: list[int]
    core: list[int]


def cyclic_decompose(word: Sequence[int]) -> CyclicDecomposition:
    """Peel the longest conjugating prefix off a freely reduced word."""
    if not is_reduced(word):
        raise ValueError("cyclic_decompose needs a freely reduced word")
    lo, hi = 0, len(word) - 1
    while lo < hi and word[lo] == -word[hi]:
        lo += 1
        hi -= 1
    return CyclicDecomposition(list(word[:lo]), list(word[lo:hi + 1]))


class FreeReducer:
    """Compressed free reduction with memoization across calls.

    ``reduce`` maps a node to a node (possibly containing cuts) whose value
    is the free reduction of the input value.  The cancellation at each
    binary rule ``X -> Y Z`` is the longest common prefix of ``nf(Y)^-1``
    and ``nf(Z)``, located by binary search over fingerprint comparisons;
    pairs of children no longer than ``small`` letters are scanned exactly.

    Nodes already reduced are returned as is, so a reduced grammar comes
    back with its identity intact.
    """

    def __init__(self, small: int = 64):
        self.small = small
        self._eliminate = CutEliminator()
        self._nf: dict[Node, Node] = {}

    def reduce(self, root: Node) -> Node:
        flat = self._eliminate(root)
        nf = self._nf
        for node in postorder(flat, nf):
            if isinstance(node, Pair):
                left, right = nf[node.left], nf[node.right]
                k = self.cancellation(left, right)
                if k == 0 and left is node.left and right is node.right:
                    nf[node] = node
                elif k == 0:
                    nf[node] = concat2(left, right)
                else:
                    head = cut_node(left, 1, left.length - k) if left.length > k else EMPTY
                    tail = cut_node(right, k + 1, right.length) if right.length > k else EMPTY
                    nf[node] = concat2(head, tail)
            else:
                nf[node] = node
        return nf[flat]

    def cancellation(self, left: Node, right: Node) -> int:
        n = min(left.length, right.length)
        if n == 0:
            return 0
        if left.length <= self.small and right.length <= self.small:
            return kernels.cancel_length(expand_node(left), expand_node(right))
        last = left.length
        if char_at(left, last) != -char_at(right, 1):
            return 0
        lo, hi = 1, n
        while lo < hi:
            mid = (lo + hi + 1) // 2
            suffix_inverse = range_metrics(left, last - mid + 1, last)[1]
            if suffix_inverse == range_metrics(right, 1, mid)[0]:
                lo = mid
            else:
                hi = mid - 1
        return lo


def compressed_free_reduce(cs: CompositionSystem) -> Slp:
    """Cut-free grammar for the free reduction of ``val(cs)``."""
    reduced = FreeReducer().reduce(cs.root)
    return Slp(cs.alphabet, CutEliminator()(reduced))


def compressed_word_problem(cs: CompositionSystem, reducer: FreeReducer | None = None) -> bool:
    reducer = reducer or FreeReducer()
    return reducer.reduce(cs.root).length == 0
