"""Explicit (uncompressed) Britton reduction, the baseline for ``bench``.

Every segment is held as a freely reduced list of letters, so memory and
time grow with the explicit length of the word.
"""

from __future__ import annotations

from typing import Sequence

from .alphabet import inverse_word
from .free_group import cyclic_decompose, free_reduce
from .hnn import HnnPresentation


def explicit_power(w: Sequence[int], u: Sequence[int]) -> int | None:
    """``z`` with ``w^z == u`` in the free group, or None."""
    target = free_reduce(u)
    if not target:
        return 0
    r = free_reduce(w)
    if not r:
        return None
    p, s = cyclic_decompose(r)
    rest = len(target) - 2 * len(p)
    if rest <= 0 or rest % len(s):
        return None
    q = rest // len(s)
    for z in (q, -q):
        core = s * q if z > 0 else inverse_word(s) * q
        if p + core + inverse_word(p) == target:
            return z
    return None


def _power(word: Sequence[int], z: int) -> list[int]:
    unit = list(word) if z >= 0 else inverse_word(word)
    return unit * abs(z)


def naive_britton(pres: HnnPresentation, segments: Sequence[Sequence[int]], signs: Sequence[int],
                  limit: int | None = None) -> tuple[bool, int]:
    """Decide the explicit word ``w_0 t^s1 w_1 ...``; returns ``(identity, steps)``.

    Raises MemoryError if a segment would exceed ``limit`` letters.
    """
    segs = [free_reduce(s) for s in segments]
    signs = list(signs)
    steps = 0
    i = 1
    while i < len(signs):
        left, right = signs[i - 1], signs[i]
        if left == right:
            i += 1
            continue
        # t^-1 g^l t -> h^l and t h^l t^-1 -> g^l
        unit, image = (pres.g, pres.h) if left == -1 else (pres.h, pres.g)
        ell = explicit_power(unit, segs[i])
        if ell is None:
            i += 1
            continue
        merged = free_reduce(segs[i - 1] + _power(image, ell) + segs[i + 1])
        if limit is not None and len(merged) > limit:
            raise MemoryError(f"segment of {len(merged)} letters exceeds {limit}")
        segs[i - 1:i + 2] = [merged]
        del signs[i - 1:i + 1]
        steps += 1
        i = max(1, i - 1)
    return (not signs and not segs[0]), steps
