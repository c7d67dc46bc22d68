"""Independent brute-force references.

Nothing here imports the solvers: words are plain lists of nonzero ints
(generator k is k+1, inverse is negation) and every answer comes from
explicit letter-by-letter computation.
"""

from __future__ import annotations

import random


def reduce_word(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def inv(word):
    return [-x for x in reversed(word)]


def word_power(word, z):
    unit = list(word) if z >= 0 else inv(word)
    return unit * abs(z)


def membership(g, u):
    """``l`` with ``g^l == u`` in the free group, found by enumeration, or None.

    ``|g^l|`` is at least ``|l|`` for nontrivial ``g``, so ``|l| <= |u|``
    bounds the search.
    """
    u = reduce_word(u)
    if not u:
        return 0
    g = reduce_word(g)
    if not g:
        return None
    for unit, sign in ((g, 1), (inv(g), -1)):
        acc = []
        for ell in range(1, len(u) + 1):
            for x in unit:
                if acc and acc[-1] == -x:
                    acc.pop()
                else:
                    acc.append(x)
            if acc == u:
                return sign * ell
    return None


def britton_identity(g, h, segments, signs):
    """Explicit Britton reduction in ``<F, t | t^-1 g t = h>``.

    ``segments`` has one more entry than ``signs``.  Any pin may be reduced
    first; this scans from the left.
    """
    segs = [reduce_word(s) for s in segments]
    signs = list(signs)
    changed = True
    while changed:
        changed = False
        for i in range(1, len(signs)):
            if signs[i - 1] == -1 and signs[i] == 1:
                ell = membership(g, segs[i])
                image = h
            elif signs[i - 1] == 1 and signs[i] == -1:
                ell = membership(h, segs[i])
                image = g
            else:
                continue
            if ell is None:
                continue
            segs[i - 1:i + 2] = [reduce_word(segs[i - 1] + word_power(image, ell) + segs[i + 1])]
            del signs[i - 1:i + 1]
            changed = True
            break
    return not signs and not segs[0]


def ascending_identity(phi, segments, signs):
    """Word problem in ``<F, t | t^-1 x t = phi(x)>`` by pushing ``t`` right.

    ``t^-1 x = phi(x) t^-1`` and ``x t = t phi(x)`` let every ``t`` move to
    the end; the word is trivial iff the exponent sum is 0 and the
    collected base word is.
    """
    if sum(signs) != 0:
        return False
    n = len(signs)

    def apply(word, times):
        for _ in range(times):
            out = []
            for x in word:
                out += phi[x] if x > 0 else inv(phi[-x])
            word = out
        return word

    total = list(segments[0])
    running = 0
    total = apply(total, n)
    for sign, seg in zip(signs, segments[1:]):
        running += sign
        total += apply(list(seg), n - running)
    return not reduce_word(total)


def amalgam_rewrite(segments, edges, images, inverse):
    """Explicit generalized Britton rewriting for a graph of groups.

    ``images[e] = (alpha_e, omega_e)``; ``inverse`` maps edge names both ways.
    """
    segs = [reduce_word(s) for s in segments]
    edges = list(edges)
    changed = True
    while changed:
        changed = False
        for i in range(1, len(edges)):
            e = edges[i - 1]
            if edges[i] != inverse[e]:
                continue
            alpha, omega = images[e]
            ell = membership(omega, segs[i])
            if ell is None:
                continue
            segs[i - 1:i + 2] = [reduce_word(segs[i - 1] + word_power(alpha, ell) + segs[i + 1])]
            del edges[i - 1:i + 1]
            changed = True
            break
    return not edges and not segs[0]


def random_reduced(rng: random.Random, rank: int, length: int):
    out = []
    while len(out) < length:
        x = rng.choice([k for k in range(-rank, rank + 1) if k])
        if out and out[-1] == -x:
            continue
        out.append(x)
    return out


def random_cyclically_reduced(rng: random.Random, rank: int, length: int):
    while True:
        w = random_reduced(rng, rank, length)
        if len(w) < 2 or w[0] != -w[-1]:
            return w
