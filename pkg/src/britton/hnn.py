"""Britton reduction for HNN-extensions of free groups with cyclic associated subgroups.

The group is ``<F, t | t^-1 g t = h>`` with ``F`` free.  Its elements are
given as sequences ``H_0 t^z1 H_1 ... t^zm H_m`` whose ``t``-free segments
``H_i`` are grammar compressed.  A pin is a position ``i`` with
``t^-1 H_i t`` and ``val(H_i) = g^l``, or ``t H_i t^-1`` and
``val(H_i) = h^l``; reducing it merges ``H_{i-1}``, the power ``h^l``
(resp. ``g^l``) and ``H_{i+1}`` into one grammar.  Membership and the
exponent ``l`` come from the compressed power solver.

Ascending extensions (``g`` ranging over the whole base group) are also
handled by pushing every ``t`` to the right end, which turns the word
problem into one compressed word problem in ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .alphabet import Alphabet, inverse_word
from .errors import MalformedInput, OrderMismatch
from .free_group import FreeReducer, free_reduce
from .power import PowerSolver
from .slp import (
    EMPTY,
    CompositionSystem,
    Cut,
    CutEliminator,
    Leaf,
    Node,
    Pair,
    concat2,
    concat_nodes,
    postorder,
    power_node,
    word_node,
)


@dataclass(frozen=True)
class HnnPresentation:
    alphabet: Alphabet
    g: tuple[int, ...]
    h: tuple[int, ...]
    stable: str = "t"


def make_hnn(alphabet: Alphabet, g: Sequence[int] | str, h: Sequence[int] | str,
             stable: str = "t") -> HnnPresentation:
    """Build ``<F(alphabet), stable | stable^-1 g stable = h>``.

    ``g`` and ``h`` are freely reduced on the way in and must have the same
    order, i.e. be both trivial or both nontrivial.
    """
    if isinstance(g, str):
        g = alphabet.parse(g)
    if isinstance(h, str):
        h = alphabet.parse(h)
    alphabet.check(g)
    alphabet.check(h)
    if stable in alphabet:
        raise ValueError(f"stable letter {stable!r} clashes with a generator")
    g, h = free_reduce(g), free_reduce(h)
    if bool(g) != bool(h):
        raise OrderMismatch("g and h must both be trivial or both be nontrivial")
    return HnnPresentation(alphabet, tuple(g), tuple(h), stable)


def bs12() -> HnnPresentation:
    """Baumslag-Solitar BS(1,2) = <a, t | t^-1 a t = a^2>."""
    return make_hnn(Alphabet(["a"]), [1], [1, 1])


@dataclass(frozen=True)
class BrittonSequence:
    """``parts[0] t^signs[0] parts[1] ... t^signs[m-1] parts[m]``."""

    parts: tuple[CompositionSystem, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.signs) + 1:
            raise ValueError("a sequence needs exactly one more segment than stable letters")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("stable-letter exponents must be +1 or -1")

    @property
    def m(self) -> int:
        return len(self.signs)

    @property
    def size(self) -> int:
        """Encoding size ``m + sum |H_i|``."""
        return self.m + sum(p.size for p in self.parts)

    @property
    def alphabet(self) -> Alphabet:
        return self.parts[0].alphabet

    @classmethod
    def from_items(cls, alphabet: Alphabet, items: Iterable) -> BrittonSequence:
        """Assemble from a stream of ``+1``/``-1`` (stable letters) and base chunks.

        A chunk is a Node, a CompositionSystem or a list of letters; adjacent
        chunks are concatenated.
        """
        parts: list[CompositionSystem] = []
        signs: list[int] = []
        chunk: list[Node] = []
        for item in items:
            if isinstance(item, int):
                parts.append(CompositionSystem(alphabet, concat_nodes(chunk)))
                signs.append(item)
                chunk = []
            elif isinstance(item, Node):
                chunk.append(item)
            elif isinstance(item, CompositionSystem):
                if item.alphabet != alphabet:
                    raise ValueError("segment over a different alphabet")
                chunk.append(item.root)
            else:
                alphabet.check(item)
                chunk.append(word_node(item))
        parts.append(CompositionSystem(alphabet, concat_nodes(chunk)))
        return cls(tuple(parts), tuple(signs))

    def items(self) -> list:
        out: list = [self.parts[0].root]
        for sign, part in zip(self.signs, self.parts[1:]):
            out += [sign, part.root]
        return out

    def expand(self, limit: int | None = None) -> list:
        """Explicit segments and signs: ``[w_0, s_1, w_1, ...]`` with lists for words."""
        out: list = [self.parts[0].expand(limit)]
        for sign, part in zip(self.signs, self.parts[1:]):
            out += [sign, part.expand(limit)]
        return out


class Pin(NamedTuple):
    index: int
    case: str
    ell: int


def eta_power(segment: Node, word: Sequence[int], ell: int) -> Node:
    """``word^ell`` built over the shape of ``segment``.

    Every letter of ``segment`` is replaced by a variable for ``word`` (or
    its inverse when ``ell < 0``), giving ``word^(+-|segment|)``, and the
    result is cut down to ``|ell| * |word|`` letters.  Needs
    ``|ell| <= |val(segment)|``, which holds whenever
    ``val(segment) = g^ell`` for nontrivial ``g`` in a free group.
    """
    if ell == 0 or not word:
        return EMPTY
    if abs(ell) > segment.length:
        raise ValueError("exponent exceeds segment length")
    w = list(word) if ell > 0 else inverse_word(word)
    k = len(w)
    unit = word_node(w)
    memo: dict[Node, Node] = {}
    for node in postorder(segment):
        if isinstance(node, Leaf):
            memo[node] = unit
        elif isinstance(node, Pair):
            memo[node] = concat2(memo[node.left], memo[node.right])
        elif isinstance(node, Cut):
            end = min(node.stop, node.child.length)
            if node.start > end:
                memo[node] = EMPTY
            else:
                memo[node] = Cut(memo[node.child], (node.start - 1) * k + 1, end * k)
        else:
            memo[node] = EMPTY
    return Cut(memo[segment], 1, abs(ell) * k)


class BrittonEngine:
    """Pin detection and reduction for one presentation.

    Power-problem answers are cached by segment node, so rescanning a
    sequence after a reduction only solves for the new segment.
    """

    def __init__(self, pres: HnnPresentation, replacement: str = "pow",
                 exact_bound: int | None = None, reducer: FreeReducer | None = None):
        if replacement not in ("pow", "eta"):
            raise ValueError(f"unknown replacement strategy {replacement!r}")
        self.pres = pres
        self.replacement = replacement
        self.exact_bound = exact_bound
        self.reducer = reducer or FreeReducer()
        self._solvers = {"i": PowerSolver(pres.g), "ii": PowerSolver(pres.h)}
        self._g = word_node(pres.g)
        self._h = word_node(pres.h)
        self._cache: dict[tuple[Node, str], int | None] = {}

    def exponent(self, segment: Node, case: str) -> int | None:
        key = (segment, case)
        if key not in self._cache:
            answer = self._solvers[case].solve(segment, self.reducer, self.exact_bound)
            self._cache[key] = answer.z
        return self._cache[key]

    def find_pin(self, seq: BrittonSequence, order: str = "leftmost") -> Pin | None:
        positions = range(1, seq.m)
        if order == "rightmost":
            positions = reversed(positions)
        elif order != "leftmost":
            raise ValueError(f"unknown order {order!r}")
        for i in positions:
            left, right = seq.signs[i - 1], seq.signs[i]
            if left == right:
                continue
            case = "i" if left == -1 else "ii"
            ell = self.exponent(seq.parts[i].root, case)
            if ell is not None:
                return Pin(i, case, ell)
        return None

    def replacement_node(self, seq: BrittonSequence, pin: Pin) -> Node:
        # case (i): t^-1 g^l t -> h^l ; case (ii): t h^l t^-1 -> g^l
        if self.replacement == "pow":
            unit = self._h if pin.case == "i" else self._g
            return power_node(unit, pin.ell)
        word = self.pres.h if pin.case == "i" else self.pres.g
        return eta_power(seq.parts[pin.index].root, word, pin.ell)

    def apply(self, seq: BrittonSequence, pin: Pin) -> BrittonSequence:
        i = pin.index
        if not 1 <= i < seq.m:
            raise ValueError(f"pin index {i} out of range")
        merged = concat_nodes([seq.parts[i - 1].root, self.replacement_node(seq, pin), seq.parts[i + 1].root])
        parts = seq.parts[:i - 1] + (CompositionSystem(seq.alphabet, merged),) + seq.parts[i + 2:]
        signs = seq.signs[:i - 1] + seq.signs[i + 1:]
        return BrittonSequence(parts, signs)


def find_pin(pres: HnnPresentation, seq: BrittonSequence, order: str = "leftmost") -> Pin | None:
    return BrittonEngine(pres).find_pin(seq, order)


def apply_pin_reduction(pres: HnnPresentation, seq: BrittonSequence, pin: Pin,
                        replacement: str = "pow") -> BrittonSequence:
    return BrittonEngine(pres, replacement).apply(seq, pin)


@dataclass
class BrittonRun:
    """Outcome of a full reduction: the final sequence and size bookkeeping."""

    final: BrittonSequence
    identity: bool
    steps: int
    initial_size: int
    final_size: int
    max_size: int
    pins: list[Pin] = field(default_factory=list)


def britton_reduce(pres: HnnPresentation, seq: BrittonSequence, *, order: str = "leftmost",
                   replacement: str = "pow", exact_bound: int | None = None,
                   trace: Callable[[str], None] | None = None) -> BrittonRun:
    """Reduce pins until none is left, then decide the residue."""
    if seq.alphabet != pres.alphabet:
        raise ValueError("sequence and presentation use different alphabets")
    engine = BrittonEngine(pres, replacement, exact_bound)
    initial = size = max_size = seq.size
    pins = []
    while True:
        pin = engine.find_pin(seq, order)
        if pin is None:
            break
        seq = engine.apply(seq, pin)
        after = seq.size
        pins.append(pin)
        if trace is not None:
            trace(f"step={len(pins)} index={pin.index} case={pin.case} ell={pin.ell} "
                  f"size_before={size} size_after={after}")
        size = after
        max_size = max(max_size, size)
    identity = seq.m == 0 and engine.reducer.reduce(seq.parts[0].root).length == 0
    return BrittonRun(seq, identity, len(pins), initial, size, max_size, pins)


def semi_compressed_word_problem(pres: HnnPresentation, seq: BrittonSequence, **options) -> bool:
    """True iff the sequence represents the identity of the HNN-extension."""
    return britton_reduce(pres, seq, **options).identity


# ---------------------------------------------------------------------------
# ascending extensions


@dataclass(frozen=True)
class AscendingPresentation:
    """``<F, t | t^-1 a t = phi(a)>`` for every generator ``a``.

    ``phi[k]`` is the image of generator ``k + 1``.  The solver assumes the
    endomorphism is injective; this is not (and cannot in general be) checked.
    """

    alphabet: Alphabet
    phi: tuple[tuple[int, ...], ...]
    stable: str = "t"

    def image(self, letter: int) -> list[int]:
        word = self.phi[abs(letter) - 1]
        return list(word) if letter > 0 else inverse_word(word)


def make_ascending(alphabet: Alphabet, phi: Mapping[str, Sequence[int] | str],
                   stable: str = "t") -> AscendingPresentation:
    if stable in alphabet:
        raise ValueError(f"stable letter {stable!r} clashes with a generator")
    images = []
    for name in alphabet.names:
        if name not in phi:
            raise ValueError(f"no image given for generator {name!r}")
        word = phi[name]
        if isinstance(word, str):
            word = alphabet.parse(word)
        alphabet.check(word)
        images.append(tuple(word))
    return AscendingPresentation(alphabet, tuple(images), stable)


def bs12_ascending() -> AscendingPresentation:
    return make_ascending(Alphabet(["a"]), {"a": "a a"})


class _Iterates:
    """Grammars for ``phi^k`` of single letters and of whole segments."""

    def __init__(self, asc: AscendingPresentation):
        self.asc = asc
        letters = asc.alphabet.all_letters()
        self.levels: list[dict[int, Node]] = [{x: Leaf(x) for x in letters}]
        self._memos: dict[int, dict[Node, Node]] = {}

    def letter_level(self, k: int) -> dict[int, Node]:
        while len(self.levels) <= k:
            prev = self.levels[-1]
            self.levels.append({x: concat_nodes(prev[y] for y in self.asc.image(x)) for x in prev})
        return self.levels[k]

    def apply(self, segment: Node, k: int) -> Node:
        images = self.letter_level(k)
        memo = self._memos.setdefault(k, {})
        for node in postorder(segment, memo):
            if isinstance(node, Leaf):
                memo[node] = images[node.letter]
            elif isinstance(node, Pair):
                memo[node] = concat2(memo[node.left], memo[node.right])
            else:
                memo[node] = EMPTY
        return memo[segment]


def ascending_word_problem(asc: AscendingPresentation, items: Iterable,
                           reducer: FreeReducer | None = None) -> bool:
    """Word problem for an ascending extension.

    ``items`` is the stream accepted by :meth:`BrittonSequence.from_items`.
    With ``s_k`` the running sum of stable exponents, the word is trivial iff
    ``s_n == 0`` and ``prod phi^(n - s_i)(w_i)`` is trivial in ``F``.
    """
    seq = BrittonSequence.from_items(asc.alphabet, items)
    n = seq.m
    if sum(seq.signs) != 0:
        return False
    eliminate = CutEliminator()
    iterates = _Iterates(asc)
    factors = []
    running = 0
    for i, part in enumerate(seq.parts):
        if i:
            running += seq.signs[i - 1]
        level = n - running
        if level < 0:
            raise MalformedInput("negative iterate of the endomorphism")
        factors.append(iterates.apply(eliminate(part.root), level))
    product = concat_nodes(factors)
    reducer = reducer or FreeReducer()
    return reducer.reduce(product).length == 0
