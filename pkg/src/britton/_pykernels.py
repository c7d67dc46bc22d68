"""Pure-Python versions of the explicit-word kernels.

Used when the compiled ``_kernels`` extension is unavailable or when
``BRITTON_PURE_PYTHON`` is set.  Semantics must match ``_kernels.pyx`` exactly.
"""

from __future__ import annotations

MOD = (1 << 61) - 1


def free_reduce(word):
    stack = []
    push = stack.append
    pop = stack.pop
    for x in word:
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return stack


def fingerprint(word, base):
    """Return ``(fp(w), fp(w^-1))`` modulo 2^61 - 1."""
    fp = 0
    ifp = 0
    pw = 1
    for x in word:
        fp = (fp * base + x) % MOD
        ifp = (ifp + (-x) % MOD * pw) % MOD
        pw = pw * base % MOD
    return fp, ifp


def cancel_length(left, right):
    """Length of the longest suffix of ``left`` whose inverse prefixes ``right``."""
    n = min(len(left), len(right))
    k = 0
    last = len(left) - 1
    while k < n and left[last - k] == -right[k]:
        k += 1
    return k
