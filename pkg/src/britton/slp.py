"""Straight-line programs and composition systems.

A grammar is stored as a DAG of immutable nodes: ``Leaf`` (one letter),
``Pair`` (concatenation of two nonempty nodes), ``Cut`` (the substring
``child[start:stop]`` with 1-based inclusive, clamped indices) and the
singleton ``EMPTY``.  A node *is* a variable; its right-hand side is given by
its children.  Every node carries, computed once at construction:

* ``length``  -- ``|val(X)|`` as a Python int (arbitrary precision),
* ``fp``      -- polynomial fingerprint of ``val(X)`` modulo ``2^61 - 1``,
* ``ifp``     -- fingerprint of the formal inverse ``val(X)^-1``,
* ``pw``      -- ``base ** length`` modulo ``2^61 - 1``,
* ``depth``   -- height of the DAG below the node.

The fingerprint base is drawn at import time and may be reseeded with
:func:`seed_fingerprints`.  Nodes built under one base must not be compared
with nodes built under another.

:class:`CompositionSystem` wraps a root node together with its alphabet and,
optionally, the names of user variables.  :class:`Slp` is the cut-free case.
"""

from __future__ import annotations

import json
import random
from array import array
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .alphabet import Alphabet
from .errors import GrammarError, TooLong

MOD = (1 << 61) - 1

#: Default bound below which equality is decided by explicit expansion.
EXACT_CHECK_BOUND = 10**6

_base = 0


def seed_fingerprints(seed: int | None = None) -> int:
    """Draw a new fingerprint base from ``seed`` (fresh entropy if None).

    Returns the seed actually used so that runs can be reproduced.
    """
    global _base
    if seed is None:
        seed = random.SystemRandom().randrange(1 << 63)
    _base = random.Random(seed).randrange(2, MOD - 1)
    return seed


def fingerprint_base() -> int:
    return _base


def base_power(n: int) -> int:
    """``base ** n`` modulo the prime, exponent reduced modulo ``p - 1``."""
    return pow(_base, n % (MOD - 1), MOD)


def collision_bound(length: int) -> float:
    """Chance that two distinct words of ``length`` letters share a fingerprint.

    The fingerprint is a polynomial of degree below ``length`` evaluated at a
    uniform base from ``MOD - 3`` candidates, and a nonzero difference
    polynomial has at most ``length - 1`` roots.  For ``length <= MOD / 3``
    this is at most ``length / MOD``, i.e. below 2^-11 up to 2^50 letters.
    """
    return max(length - 1, 0) / (MOD - 3)


def set_exact_check_bound(bound: int) -> None:
    global EXACT_CHECK_BOUND
    EXACT_CHECK_BOUND = int(bound)


seed_fingerprints()


# ---------------------------------------------------------------------------
# nodes


class Node:
    __slots__ = ("length", "fp", "ifp", "pw", "depth")

    def children(self) -> tuple[Node, ...]:
        return ()


class Empty(Node):
    __slots__ = ()

    def __init__(self):
        self.length = 0
        self.fp = 0
        self.ifp = 0
        self.pw = 1
        self.depth = 0

    def __repr__(self):
        return "EMPTY"


EMPTY = Empty()


class Leaf(Node):
    __slots__ = ("letter",)

    def __init__(self, letter: int):
        self.letter = letter
        self.length = 1
        self.fp = letter % MOD
        self.ifp = (-letter) % MOD
        self.pw = _base
        self.depth = 1

    def __repr__(self):
        return f"Leaf({self.letter})"


class Pair(Node):
    __slots__ = ("left", "right")

    def __init__(self, left: Node, right: Node):
        self.left = left
        self.right = right
        self.length = left.length + right.length
        self.fp = (left.fp * right.pw + right.fp) % MOD
        self.ifp = (right.ifp * left.pw + left.ifp) % MOD
        self.pw = left.pw * right.pw % MOD
        self.depth = 1 + max(left.depth, right.depth)

    def children(self):
        return (self.left, self.right)

    def __repr__(self):
        return f"Pair(len={self.length})"


class Cut(Node):
    __slots__ = ("child", "start", "stop")

    def __init__(self, child: Node, start: int, stop: int):
        if not 1 <= start <= stop:
            raise ValueError(f"malformed cut [{start}:{stop}]")
        self.child = child
        self.start = start
        self.stop = stop
        end = min(stop, child.length)
        self.depth = 1 + child.depth
        if start > end:
            self.length, self.fp, self.ifp, self.pw = 0, 0, 0, 1
        else:
            self.length = end - start + 1
            self.fp, self.ifp, self.pw = range_metrics(child, start, end)

    def children(self):
        return (self.child,)

    def __repr__(self):
        return f"Cut(len={self.length}, [{self.start}:{self.stop}])"


def _combine(a, b):
    fa, ia, pa = a
    fb, ib, pb = b
    return (fa * pb + fb) % MOD, (ib * pa + ia) % MOD, pa * pb % MOD


def range_metrics(node: Node, i: int, j: int) -> tuple[int, int, int]:
    """``(fp, ifp, pw)`` of ``val(node)[i:j]``; requires ``1 <= i <= j <= |node|``.

    The range is covered by at most two full nodes per level, which are then
    folded left to right.
    """
    acc = (0, 0, 1)
    stack = [(node, i, j)]
    while stack:
        node, i, j = stack.pop()
        if i == 1 and j == node.length:
            acc = _combine(acc, (node.fp, node.ifp, node.pw))
        elif isinstance(node, Pair):
            mid = node.left.length
            if j > mid:
                stack.append((node.right, max(i - mid, 1), j - mid))
            if i <= mid:
                stack.append((node.left, i, min(j, mid)))
        else:  # Cut; leaves are always fully covered
            off = node.start - 1
            stack.append((node.child, i + off, j + off))
    return acc


def char_at(node: Node, k: int) -> int:
    """The letter at 1-based position ``k``."""
    if not 1 <= k <= node.length:
        raise IndexError(k)
    while True:
        if isinstance(node, Leaf):
            return node.letter
        if isinstance(node, Pair):
            mid = node.left.length
            if k <= mid:
                node = node.left
            else:
                node, k = node.right, k - mid
        else:
            node, k = node.child, k + node.start - 1


# ---------------------------------------------------------------------------
# construction helpers


def concat2(a: Node, b: Node) -> Node:
    if a.length == 0:
        return b
    if b.length == 0:
        return a
    return Pair(a, b)


def concat_nodes(nodes: Iterable[Node]) -> Node:
    """Balanced concatenation; empty operands are dropped."""
    items = [n for n in nodes if n.length]
    if not items:
        return EMPTY
    while len(items) > 1:
        nxt = [Pair(items[k], items[k + 1]) for k in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def word_node(word: Sequence[int], leaves: dict | None = None) -> Node:
    """A balanced grammar for an explicit word."""
    if leaves is None:
        leaves = {}
    out = []
    for x in word:
        leaf = leaves.get(x)
        if leaf is None:
            leaf = leaves[x] = Leaf(x)
        out.append(leaf)
    return concat_nodes(out)


def cut_node(node: Node, i: int, j: int) -> Node:
    """``val(node)[i:j]`` with cut-of-cut collapsing and trivial cases folded."""
    if not 1 <= i <= j:
        raise ValueError(f"malformed cut [{i}:{j}]")
    while True:
        end = min(j, node.length)
        if i > end:
            return EMPTY
        if i == 1 and end == node.length:
            return node
        if isinstance(node, Cut):
            off = node.start - 1
            node, i, j = node.child, i + off, end + off
        elif isinstance(node, Pair) and end <= node.left.length:
            node, j = node.left, end
        elif isinstance(node, Pair) and i > node.left.length:
            mid = node.left.length
            node, i, j = node.right, i - mid, end - mid
        else:
            return Cut(node, i, end)


def power_node(node: Node, z: int) -> Node:
    """``val(node) ** z`` by binary powering; negative ``z`` powers the inverse."""
    if z < 0:
        node, z = invert_node(node), -z
    if z == 0 or node.length == 0:
        return EMPTY
    result = None
    square = node
    while True:
        if z & 1:
            result = square if result is None else Pair(result, square)
        z >>= 1
        if not z:
            return result
        square = Pair(square, square)


def invert_node(root: Node, memo: dict | None = None) -> Node:
    """Grammar for ``val(root)^-1`` of size linear in the input."""
    if memo is None:
        memo = {}
    leaves = {}
    for node in postorder(root, memo):
        if isinstance(node, Leaf):
            x = -node.letter
            inv = leaves.get(x)
            if inv is None:
                inv = leaves[x] = Leaf(x)
        elif isinstance(node, Pair):
            inv = Pair(memo[node.right], memo[node.left])
        elif isinstance(node, Cut):
            n = node.child.length
            end = min(node.stop, n)
            if node.start > end:
                inv = EMPTY
            else:
                inv = Cut(memo[node.child], n - end + 1, n - node.start + 1)
        else:
            inv = EMPTY
        memo[node] = inv
    return memo[root]


def postorder(root: Node, skip: Mapping | set = ()) -> list[Node]:
    """Nodes reachable from ``root``, children first, excluding those in ``skip``."""
    if root in skip:
        return []
    out = []
    seen = set()
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done:
            out.append(node)
            continue
        # mark on visit, not on push: a shared child pushed early must
        # still be emitted before every parent
        if node in seen:
            continue
        seen.add(node)
        stack.append((node, True))
        for child in reversed(node.children()):
            if child not in seen and child not in skip:
                stack.append((child, False))
    return out


def dag_size(root: Node) -> int:
    """Grammar size: one per letter or cut occurrence, two per binary rule."""
    total = 0
    for node in postorder(root):
        if isinstance(node, Pair):
            total += 2
        elif isinstance(node, (Leaf, Cut)):
            total += 1
    return total


def has_cuts(root: Node) -> bool:
    return any(isinstance(n, Cut) for n in postorder(root))


# ---------------------------------------------------------------------------
# expansion


def expand_node(root: Node, limit: int | None = None) -> array:
    """Explicit ``val(root)`` as ``array('q')``; raises TooLong beyond ``limit``."""
    if limit is not None and root.length > limit:
        raise TooLong(root.length, limit)
    out = array("q")
    if root.length == 0:
        return out
    indegree: dict[Node, int] = {}
    for node in postorder(root):
        for child in node.children():
            indegree[child] = indegree.get(child, 0) + 1
    shared = {n for n, d in indegree.items() if d > 1 and not isinstance(n, Leaf)}
    _extract(root, out, shared)
    return out


def _extract(root, out, shared):
    memo: dict[Node, array] = {}
    # entries (node, i, j); (None, node, mark) records a finished shared node
    stack: list = [(root, 1, root.length)]
    while stack:
        node, i, j = stack.pop()
        if node is None:
            memo[i] = out[j:]
            continue
        if i == 1 and j == node.length:
            hit = memo.get(node)
            if hit is not None:
                out += hit
                continue
            if node in shared:
                stack.append((None, node, len(out)))
        if isinstance(node, Leaf):
            out.append(node.letter)
        elif isinstance(node, Pair):
            mid = node.left.length
            if j > mid:
                stack.append((node.right, max(i - mid, 1), j - mid))
            if i <= mid:
                stack.append((node.left, i, min(j, mid)))
        elif isinstance(node, Cut):
            off = node.start - 1
            stack.append((node.child, i + off, j + off))


def verify_equal(a: Node, b: Node, exact_bound: int | None = None) -> tuple[bool, bool]:
    """Compare two values; returns ``(equal, decided_exactly)``.

    Below ``exact_bound`` letters both sides are expanded.  Above it the
    forward and inverse fingerprints are compared; a false positive has
    probability at most ``length / (2^61 - 1)``.
    """
    if a.length != b.length:
        return False, True
    if a is b:
        return True, True
    bound = EXACT_CHECK_BOUND if exact_bound is None else exact_bound
    if a.length <= bound:
        return expand_node(a) == expand_node(b), True
    return a.fp == b.fp and a.ifp == b.ifp, False


# ---------------------------------------------------------------------------
# cut elimination


class CutEliminator:
    """Rewrites composition systems into cut-free grammars.

    Results are memoized per node, so repeated calls on grammars sharing
    structure reuse earlier work and return identical node objects.  A
    cut-free input comes back unchanged.
    """

    def __init__(self):
        self._flat: dict[Node, Node] = {}
        self._slices: dict[tuple, Node] = {}

    def __call__(self, root: Node) -> Node:
        flat = self._flat
        for node in postorder(root, flat):
            if isinstance(node, Pair):
                left, right = flat[node.left], flat[node.right]
                if left is node.left and right is node.right:
                    flat[node] = node
                else:
                    flat[node] = concat2(left, right)
            elif isinstance(node, Cut):
                end = min(node.stop, node.child.length)
                if node.start > end:
                    flat[node] = EMPTY
                else:
                    flat[node] = self._slice(node.child, node.start, end)
            else:
                flat[node] = node
        return flat[root]

    def _slice(self, node, i, j):
        flat, slices = self._flat, self._slices
        results: list[Node] = []
        # (node, i, j, False) asks for a slice; (node, i, j, True) joins the
        # two slices on top of ``results`` for a range split at node's middle
        stack = [(node, i, j, False)]
        while stack:
            node, i, j, join = stack.pop()
            if join:
                right = results.pop()
                res = slices[(node, i, j)] = Pair(results.pop(), right)
                results.append(res)
                continue
            if i == 1 and j == node.length:
                results.append(flat[node])
                continue
            hit = slices.get((node, i, j))
            if hit is not None:
                results.append(hit)
            elif isinstance(node, Pair):
                mid = node.left.length
                if j <= mid:
                    stack.append((node.left, i, j, False))
                elif i > mid:
                    stack.append((node.right, i - mid, j - mid, False))
                else:
                    stack.append((node, i, j, True))
                    stack.append((node.right, 1, j - mid, False))
                    stack.append((node.left, i, mid, False))
            else:
                off = node.start - 1
                stack.append((node.child, i + off, j + off, False))
        return results[0]


# ---------------------------------------------------------------------------
# grammar objects


class CutExpr(NamedTuple):
    """A cut right-hand side ``var[start:stop]`` in rule form."""

    var: str
    start: int
    stop: int


@dataclass(frozen=True)
class VarMetrics:
    length: int
    fp: int
    ifp: int


class CompositionSystem:
    """A grammar-compressed word over ``alphabet``.

    ``names`` maps user-visible variable names to nodes; it is empty for
    grammars produced by the algorithms.
    """

    __slots__ = ("alphabet", "root", "names", "size")

    def __init__(self, alphabet: Alphabet, root: Node, names: Mapping[str, Node] | None = None):
        self.alphabet = alphabet
        self.root = root
        self.names = MappingProxyType(dict(names or {}))
        self.size = dag_size(root)

    def __repr__(self):
        return f"{type(self).__name__}(length={self.root.length}, size={self.size})"

    @property
    def length(self) -> int:
        return self.root.length

    @property
    def depth(self) -> int:
        return self.root.depth

    @property
    def is_cut_free(self) -> bool:
        return not has_cuts(self.root)

    def node(self, var: str | None = None) -> Node:
        if var is None:
            return self.root
        try:
            return self.names[var]
        except KeyError:
            raise KeyError(f"no variable {var!r}") from None

    def metrics(self, var: str | None = None) -> VarMetrics:
        n = self.node(var)
        return VarMetrics(n.length, n.fp, n.ifp)

    def expand(self, limit: int | None = None) -> list[int]:
        return expand_node(self.root, limit).tolist()

    # constructors

    @classmethod
    def from_word(cls, alphabet: Alphabet, word: Sequence[int]):
        alphabet.check(word)
        return cls(alphabet, word_node(word))

    @classmethod
    def from_node(cls, alphabet: Alphabet, root: Node):
        return cls(alphabet, root)

    @classmethod
    def from_rules(cls, alphabet: Alphabet, start: str, rules: Mapping[str, Sequence]):
        """Build from named rules; raises GrammarError listing all violations.

        A right-hand side is a sequence of letters (ints), variable names
        (str) and :class:`CutExpr` items.
        """
        problems = validate(alphabet, start, rules)
        if problems:
            raise GrammarError(problems)
        names: dict[str, Node] = {}
        leaves: dict[int, Leaf] = {}
        for var in _rule_order(rules):
            parts = []
            for item in rules[var]:
                if isinstance(item, CutExpr):
                    parts.append(Cut(names[item.var], int(item.start), int(item.stop)))
                elif isinstance(item, str):
                    parts.append(names[item])
                else:
                    parts.append(word_node([item], leaves))
            # a lone item is kept as is, so an empty cut survives a round trip
            names[var] = parts[0] if len(parts) == 1 else concat_nodes(parts)
        return cls(alphabet, names[start], names)

    def to_rules(self) -> tuple[str, dict[str, list]]:
        """Export as named rules in normal form (``a``, ``B C`` or ``B[i:j]``)."""
        if self.root is EMPTY:
            start = next((v for v, n in self.names.items() if n is EMPTY), "S")
            return start, {start: []}
        label: dict[Node, str] = {}
        used: set[str] = set()

        def claim(node, name):
            base, k = name, 1
            while name in used:
                name = f"{base}_{k}"
                k += 1
            used.add(name)
            label[node] = name

        for name, node in self.names.items():
            if node not in label:
                claim(node, name)
        rules: dict[str, list] = {}
        counter = 0
        for node in postorder(self.root):
            if node not in label:
                if isinstance(node, Leaf):
                    gen = self.alphabet.names[abs(node.letter) - 1]
                    claim(node, f"X_{gen}" if node.letter > 0 else f"X_{gen}_inv")
                else:
                    counter += 1
                    claim(node, f"N{counter}")
            name = label[node]
            if isinstance(node, Leaf):
                rules[name] = [node.letter]
            elif isinstance(node, Pair):
                rules[name] = [label[node.left], label[node.right]]
            elif isinstance(node, Cut):
                rules[name] = [CutExpr(label[node.child], node.start, node.stop)]
            else:
                rules[name] = []
        return label[self.root], rules


class Slp(CompositionSystem):
    """A cut-free composition system."""

    __slots__ = ()

    def __init__(self, alphabet: Alphabet, root: Node, names: Mapping[str, Node] | None = None):
        if has_cuts(root):
            raise GrammarError(["straight-line program contains a cut"])
        super().__init__(alphabet, root, names)


def _rule_order(rules):
    """All variables, dependencies first (input is acyclic)."""
    order = []
    stack = [(var, False) for var in reversed(list(rules))]
    seen = set()
    while stack:
        var, done = stack.pop()
        if done:
            order.append(var)
            continue
        if var in seen:
            continue
        seen.add(var)
        stack.append((var, True))
        for dep in _deps(rules[var]):
            if dep not in seen:
                seen.add(dep)
                stack.append((dep, False))
    return order


def _deps(rhs):
    for item in rhs:
        if isinstance(item, CutExpr):
            yield item.var
        elif isinstance(item, str):
            yield item


def validate(alphabet: Alphabet, start: str, rules: Mapping[str, Sequence]) -> list[str]:
    """Diagnostics for a grammar in rule form; an empty list means valid."""
    problems = []
    if start not in rules:
        problems.append(f"start variable {start!r} has no rule")
    for var, rhs in rules.items():
        for item in rhs:
            if isinstance(item, CutExpr):
                if item.var not in rules:
                    problems.append(f"{var}: dangling variable {item.var!r} in cut")
                if not (isinstance(item.start, int) and isinstance(item.stop, int)) or not 1 <= item.start <= item.stop:
                    problems.append(f"{var}: malformed cut [{item.start}:{item.stop}]")
            elif isinstance(item, str):
                if item not in rules:
                    problems.append(f"{var}: dangling variable {item!r}")
            elif not isinstance(item, int) or item == 0 or abs(item) > alphabet.rank:
                problems.append(f"{var}: letter {item!r} outside alphabet")
    # cycle detection by iterative three-colour DFS
    colour: dict[str, int] = {}
    for root in rules:
        if root in colour:
            continue
        path = [root]
        colour[root] = 1
        stack = [iter([d for d in _deps(rules[root]) if d in rules])]
        while stack:
            dep = next(stack[-1], None)
            if dep is None:
                stack.pop()
                colour[path.pop()] = 2
                continue
            state = colour.get(dep, 0)
            if state == 1:
                cycle = path[path.index(dep):] + [dep]
                problems.append("cycle: " + " -> ".join(cycle))
            elif state == 0:
                colour[dep] = 1
                path.append(dep)
                stack.append(iter([d for d in _deps(rules[dep]) if d in rules]))
    return problems


# ---------------------------------------------------------------------------
# module-level operations


def to_chomsky_normal_form(s: Slp) -> Slp:
    """Equivalent grammar whose rules are single letters or pairs of variables."""
    start, rules = s.to_rules()
    return Slp.from_rules(s.alphabet, start, rules)


def expand(cs: CompositionSystem, limit: int | None = None) -> list[int]:
    return cs.expand(limit)


def length(cs: CompositionSystem, var: str | None = None) -> int:
    return cs.node(var).length


def fingerprint(cs: CompositionSystem, var: str | None = None) -> VarMetrics:
    return cs.metrics(var)


def substring_fp(cs: CompositionSystem, i: int, j: int, var: str | None = None) -> int:
    """Fingerprint of ``val[i:j]`` with the clamping convention of cuts."""
    if not 1 <= i <= j:
        raise ValueError(f"need 1 <= i <= j, got {i}, {j}")
    node = cs.node(var)
    end = min(j, node.length)
    if i > end:
        return EMPTY.fp
    return range_metrics(node, i, end)[0]


def equal(cs1: CompositionSystem, cs2: CompositionSystem, exact_bound: int | None = None) -> bool:
    if cs1.alphabet != cs2.alphabet:
        raise ValueError("grammars over different alphabets")
    return verify_equal(cs1.root, cs2.root, exact_bound)[0]


def normalize_cuts(cs: CompositionSystem) -> Slp:
    return Slp(cs.alphabet, CutEliminator()(cs.root))


def concat(*systems: CompositionSystem) -> CompositionSystem:
    alphabet = systems[0].alphabet
    if any(s.alphabet != alphabet for s in systems):
        raise ValueError("grammars over different alphabets")
    return _wrap(systems, alphabet, concat_nodes(s.root for s in systems))


def power(cs: CompositionSystem, z: int) -> CompositionSystem:
    return _wrap([cs], cs.alphabet, power_node(cs.root, z))


def invert(cs: CompositionSystem) -> CompositionSystem:
    return _wrap([cs], cs.alphabet, invert_node(cs.root))


def _wrap(sources, alphabet, root):
    cls = Slp if all(isinstance(s, Slp) for s in sources) else CompositionSystem
    return cls(alphabet, root)


# ---------------------------------------------------------------------------
# JSON


def _decode_token(alphabet: Alphabet, tok: Mapping):
    if "t" in tok:
        return alphabet.parse_token(tok["t"])
    if "v" in tok:
        return str(tok["v"])
    if "cut" in tok:
        var, i, j = tok["cut"]
        return CutExpr(str(var), int(i), int(j))
    raise GrammarError([f"unknown token {tok!r}"])


def grammar_from_json(obj: Mapping, alphabet: Alphabet | None = None) -> CompositionSystem:
    """Decode ``{"alphabet": [...], "start": "S", "rules": {...}}``.

    ``alphabet`` overrides or supplies the alphabet when the object omits it.
    """
    if alphabet is None:
        alphabet = Alphabet(obj["alphabet"])
    try:
        rules = {str(var): [_decode_token(alphabet, t) for t in rhs] for var, rhs in obj["rules"].items()}
        start = str(obj["start"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GrammarError([f"malformed grammar JSON: {exc}"]) from None
    cs = CompositionSystem.from_rules(alphabet, start, rules)
    if cs.is_cut_free:
        return Slp(alphabet, cs.root, cs.names)
    return cs


def grammar_to_json(cs: CompositionSystem) -> dict:
    start, rules = cs.to_rules()
    out = {}
    for var, rhs in rules.items():
        toks = []
        for item in rhs:
            if isinstance(item, CutExpr):
                toks.append({"cut": [item.var, str(item.start), str(item.stop)]})
            elif isinstance(item, str):
                toks.append({"v": item})
            else:
                toks.append({"t": cs.alphabet.token(item)})
        out[var] = toks
    return {"alphabet": list(cs.alphabet.names), "start": start, "rules": out}


def load_grammar(path, alphabet: Alphabet | None = None) -> CompositionSystem:
    with open(path) as fh:
        return grammar_from_json(json.load(fh), alphabet)


def dump_grammar(cs: CompositionSystem, path) -> None:
    with open(path, "w") as fh:
        json.dump(grammar_to_json(cs), fh, indent=1)


def doubling_grammar(n: int) -> Slp:
    """The grammar ``A_0 -> a b``, ``A_{i+1} -> A_i A_i`` with start ``A_n``."""
    alphabet = Alphabet(["a", "b"])
    rules = {"A_0": [1, 2]}
    for i in range(n):
        rules[f"A_{i + 1}"] = [f"A_{i}", f"A_{i}"]
    return Slp.from_rules(alphabet, f"A_{n}", rules)
