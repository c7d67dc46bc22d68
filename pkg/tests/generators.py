"""Random instances shared by the property and acceptance tests.

A word is a token list: ``("t", +1/-1)`` for a stable letter and
``("pow", word, k)`` for the base word ``word^k``.  The explicit form is
built by plain list arithmetic; the compressed form uses powering grammars.
"""

from __future__ import annotations

import random

from oracles import random_reduced, word_power

from britton.slp import Leaf, Pair, dag_size, invert_node, power_node, word_node


def explicit(tokens):
    segments, signs, cur = [], [], []
    for tok in tokens:
        if tok[0] == "t":
            segments.append(cur)
            signs.append(tok[1])
            cur = []
        else:
            cur = cur + word_power(tok[1], tok[2])
    segments.append(cur)
    return segments, signs


def items(tokens):
    leaves = {}
    out = []
    for tok in tokens:
        if tok[0] == "t":
            out.append(tok[1])
        else:
            out.append(power_node(word_node(tok[1], leaves), tok[2]))
    return out


def explicit_length(tokens):
    return sum(len(t[1]) * abs(t[2]) for t in tokens if t[0] == "pow")


def stable_count(tokens):
    return sum(1 for t in tokens if t[0] == "t")


def invert_tokens(tokens):
    out = []
    for tok in reversed(tokens):
        out.append(("t", -tok[1]) if tok[0] == "t" else ("pow", tok[1], -tok[2]))
    return out


def _junk(rng, rank):
    return ("pow", random_reduced(rng, rank, rng.randint(1, 3)), rng.choice([1, 1, -1, 2]))


def _relator(rng, g, h, kmax):
    k = rng.randint(-kmax, kmax)
    if rng.random() < 0.5:
        rel = [("t", -1), ("pow", g, k), ("t", 1), ("pow", h, -k)]
    else:
        rel = [("t", 1), ("pow", h, k), ("t", -1), ("pow", g, -k)]
    return rel if rng.random() < 0.5 else invert_tokens(rel)


def random_tokens(rng, g, h, rank, max_stable, kmax):
    out = []
    for _ in range(rng.randint(0, max_stable)):
        r = rng.random()
        if r < 0.35 and g:
            out.append(("pow", g, rng.randint(-kmax, kmax)))
        elif r < 0.7 and h:
            out.append(("pow", h, rng.randint(-kmax, kmax)))
        elif r < 0.85:
            out.append(_junk(rng, rank))
        out.append(("t", rng.choice((1, -1))))
    if rng.random() < 0.7:
        out.append(_junk(rng, rank))
    return out


def trivial_tokens(rng, g, h, rank, max_stable, kmax):
    """A product of conjugates of relators, so trivial by construction."""
    out = []
    budget = max_stable
    while budget >= 4 or (budget >= 2 and not out):
        conj = []
        if budget >= 4 and rng.random() < 0.5:
            conj = [_junk(rng, rank), ("t", rng.choice((1, -1)))]
        if rng.random() < 0.5:
            conj.append(_junk(rng, rank))
        used = 2 + 2 * stable_count(conj)
        if used > budget:
            conj = [_junk(rng, rank)]
            used = 2
        out += conj + _relator(rng, g, h, kmax) + invert_tokens(conj)
        budget -= used
        if rng.random() < 0.4:
            break
    return out


def mutate_tokens(rng, tokens, rank):
    tokens = list(tokens)
    idx = [i for i, t in enumerate(tokens) if t[0] == "pow"]
    if idx and rng.random() < 0.6:
        i = rng.choice(idx)
        _, w, k = tokens[i]
        tokens[i] = ("pow", w, k + rng.choice((1, -1)))
    else:
        tokens.insert(rng.randint(0, len(tokens)), ("pow", [rng.choice((1, -1, 2, -2)[:2 * rank])], 1))
    return tokens


def random_presentation(rng, rank=2, max_len=4):
    if rng.random() < 0.08:
        return [], []
    g = random_reduced(rng, rank, rng.randint(1, max_len))
    h = random_reduced(rng, rank, rng.randint(1, max_len))
    return g, h


def random_hnn_instance(rng: random.Random, rank=2, max_stable=6, max_explicit=10**4, kmax=None):
    """``(g, h, tokens)`` mixing trivial, perturbed and unstructured words."""
    while True:
        g, h = random_presentation(rng, rank)
        k = kmax if kmax is not None else rng.choice((3, 20, 300))
        kind = rng.random()
        if kind < 0.4:
            tokens = trivial_tokens(rng, g, h, rank, max_stable, k)
        elif kind < 0.65:
            tokens = mutate_tokens(rng, trivial_tokens(rng, g, h, rank, max_stable, k), rank)
        else:
            tokens = random_tokens(rng, g, h, rank, max_stable, k)
        if stable_count(tokens) <= max_stable and explicit_length(tokens) <= max_explicit:
            return g, h, tokens


def random_slp_node(rng: random.Random, rank: int, rules: int, max_len: int, max_size: int = 60):
    """A random DAG with about ``rules`` binary rules, explicit length at most
    ``max_len`` and grammar size at most ``max_size``.

    Rules pick earlier nodes (or their inverses) as children, so values
    cancel a lot.
    """
    while True:
        leaves = {x: Leaf(x) for x in range(-rank, rank + 1) if x}
        nodes = [leaves[x] for x in random_reduced(rng, rank, rng.randint(1, 3))]
        nodes += [leaves[rng.choice(list(leaves))] for _ in range(2)]
        memo: dict = {}
        square = rng.uniform(0.0, 0.7)
        for _ in range(rules):
            if rng.random() < square and 2 * nodes[-1].length <= max_len:
                nodes.append(Pair(nodes[-1], nodes[-1]))
                continue
            # favour recent nodes so lengths grow geometrically
            a = nodes[-1] if rng.random() < 0.6 else rng.choice(nodes)
            b = a if rng.random() < 0.35 else rng.choice(nodes[-4:])
            if rng.random() < 0.5:
                a, b = b, a
            if rng.random() < 0.3:
                a = invert_node(a, memo)
            if a.length + b.length > max_len:
                continue
            nodes.append(Pair(a, b))
        root = nodes[-1]
        if dag_size(root) <= max_size:
            return root
