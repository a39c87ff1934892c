# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for dense integer Laurent-polynomial arithmetic.

Same contracts as heckewb._ring_py. The fast path works in C int64 with
conservative magnitude guards (coefficients below 2**26 for products,
2**61 for sums, at most 1024 terms); anything larger is delegated to the
pure-Python kernel so results stay exact for arbitrary integers.
"""

from libc.stdlib cimport free, malloc

from . import _ring_py as _py

cdef long long MUL_BOUND = 1 << 26
cdef long long ADD_BOUND = 1 << 61
cdef Py_ssize_t TERM_LIMIT = 1024


def neg(off, coeffs):
    return _py.neg(off, coeffs)


cdef object _strip(long long aoff, long long *out, Py_ssize_t n):
    cdef Py_ssize_t i = 0, j = n
    while i < j and out[i] == 0:
        i += 1
    while j > i and out[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, ()
    cdef tuple t = tuple(out[k] for k in range(i, j))
    return aoff + i, t


def add(aoff, ac, boff, bc):
    cdef Py_ssize_t la = len(ac), lb = len(bc)
    if la == 0:
        return boff, bc
    if lb == 0:
        return aoff, ac
    if la > TERM_LIMIT or lb > TERM_LIMIT:
        return _py.add(aoff, ac, boff, bc)
    cdef long long ao, bo, off, end, x
    cdef Py_ssize_t n, k, base
    cdef long long *out
    try:
        ao = aoff
        bo = boff
    except OverflowError:
        return _py.add(aoff, ac, boff, bc)
    off = ao if ao < bo else bo
    end = ao + la if ao + la > bo + lb else bo + lb
    n = <Py_ssize_t> (end - off)
    out = <long long *> malloc(n * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    for k in range(n):
        out[k] = 0
    try:
        base = <Py_ssize_t> (ao - off)
        for k in range(la):
            x = ac[k]
            if x > ADD_BOUND or x < -ADD_BOUND:
                raise OverflowError()
            out[base + k] += x
        base = <Py_ssize_t> (bo - off)
        for k in range(lb):
            x = bc[k]
            if x > ADD_BOUND or x < -ADD_BOUND:
                raise OverflowError()
            out[base + k] += x
        return _strip(off, out, n)
    except OverflowError:
        return _py.add(aoff, ac, boff, bc)
    finally:
        free(out)


def mul(aoff, ac, boff, bc):
    cdef Py_ssize_t la = len(ac), lb = len(bc)
    if la == 0 or lb == 0:
        return 0, ()
    if la > TERM_LIMIT or lb > TERM_LIMIT:
        return _py.mul(aoff, ac, boff, bc)
    cdef long long ao, bo, x, a
    cdef Py_ssize_t n, i, j
    cdef long long *av
    cdef long long *bv
    cdef long long *out
    try:
        ao = aoff
        bo = boff
    except OverflowError:
        return _py.mul(aoff, ac, boff, bc)
    n = la + lb - 1
    av = <long long *> malloc((la + lb + n) * sizeof(long long))
    if av == NULL:
        raise MemoryError()
    bv = av + la
    out = bv + lb
    try:
        for i in range(la):
            x = ac[i]
            if x > MUL_BOUND or x < -MUL_BOUND:
                raise OverflowError()
            av[i] = x
        for j in range(lb):
            x = bc[j]
            if x > MUL_BOUND or x < -MUL_BOUND:
                raise OverflowError()
            bv[j] = x
        for i in range(n):
            out[i] = 0
        for i in range(la):
            a = av[i]
            if a != 0:
                for j in range(lb):
                    out[i + j] += a * bv[j]
        return _strip(ao + bo, out, n)
    except OverflowError:
        return _py.mul(aoff, ac, boff, bc)
    finally:
        free(av)
