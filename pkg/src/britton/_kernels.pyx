# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled explicit-word kernels; see ``_pykernels`` for the reference semantics."""

from cpython cimport array
import array

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef u64 MOD = (<u64>1 << 61) - 1


cdef inline u64 mulmod(u64 a, u64 b) nogil:
    cdef u128 prod = <u128>a * b
    cdef u64 lo = <u64>(prod & MOD)
    cdef u64 hi = <u64>(prod >> 61)
    cdef u64 r = lo + hi
    if r >= MOD:
        r -= MOD
    return r


cdef inline u64 code(i64 x) nogil:
    if x >= 0:
        return <u64>x
    return MOD - <u64>(-x)


cdef array.array _template = array.array('q', [])


def free_reduce(const i64[:] word):
    cdef Py_ssize_t n = word.shape[0]
    cdef array.array out = array.clone(_template, n, zero=False)
    cdef i64[:] stack = out
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t k
    cdef i64 x
    with nogil:
        for k in range(n):
            x = word[k]
            if top > 0 and stack[top - 1] == -x:
                top -= 1
            else:
                stack[top] = x
                top += 1
    array.resize(out, top)
    return out


def fingerprint(const i64[:] word, u64 base):
    cdef Py_ssize_t n = word.shape[0]
    cdef u64 fp = 0, ifp = 0, pw = 1
    cdef Py_ssize_t k
    with nogil:
        for k in range(n):
            fp = mulmod(fp, base) + code(word[k])
            if fp >= MOD:
                fp -= MOD
            ifp = ifp + mulmod(code(-word[k]), pw)
            if ifp >= MOD:
                ifp -= MOD
            pw = mulmod(pw, base)
    return fp, ifp


def cancel_length(const i64[:] left, const i64[:] right):
    cdef Py_ssize_t n = min(left.shape[0], right.shape[0])
    cdef Py_ssize_t last = left.shape[0] - 1
    cdef Py_ssize_t k = 0
    with nogil:
        while k < n and left[last - k] == -right[k]:
            k += 1
    return k
