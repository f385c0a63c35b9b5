# cython: language_level=3
"""Compiled polynomial kernels with the same API as _pykernel.

Products whose coefficient bound fits in 62 bits run as an int64
schoolbook loop; everything else uses the big-integer paths.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t
from math import gcd, isqrt

from . import _pykernel as _py

cdef Py_ssize_t _KRONECKER_MIN = 12
cdef Py_ssize_t _C_MUL_MAX = 400
cdef object _LIMIT = 1 << 62


cpdef tuple normalize(a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


cpdef tuple add(a, b):
    cdef Py_ssize_t i, lb
    if len(a) < len(b):
        a, b = b, a
    lb = len(b)
    if not lb:
        return tuple(a)
    r = list(a)
    for i in range(lb):
        r[i] = r[i] + b[i]
    return normalize(r)


cpdef tuple sub(a, b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if la >= lb:
        r = list(a)
        for i in range(lb):
            r[i] = r[i] - b[i]
    else:
        r = [-c for c in b]
        for i in range(la):
            r[i] = r[i] + a[i]
    return normalize(r)


cpdef tuple neg(a):
    return tuple([-c for c in a])


cpdef tuple scale(a, c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cpdef tuple shift(a, Py_ssize_t k):
    if not a or not k:
        return tuple(a)
    return (0,) * k + tuple(a)


cpdef object max_norm(a):
    cdef object m = 0
    for c in a:
        if c < 0:
            c = -c
        if c > m:
            m = c
    return m


def content(a):
    return gcd(*a)


cpdef tuple primitive(a):
    if not a:
        return ()
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple([x // c for x in a])


cdef tuple _mul_int64(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), n = la + lb - 1, i, j
    cdef int64_t *x = <int64_t *> malloc(la * sizeof(int64_t))
    cdef int64_t *y = <int64_t *> malloc(lb * sizeof(int64_t))
    cdef int64_t *r = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t xi
    if x == NULL or y == NULL or r == NULL:
        free(x); free(y); free(r)
        raise MemoryError()
    try:
        for i in range(la):
            x[i] = a[i]
        for j in range(lb):
            y[j] = b[j]
        for i in range(n):
            r[i] = 0
        for i in range(la):
            xi = x[i]
            if xi:
                for j in range(lb):
                    r[i + j] += xi * y[j]
        while n and r[n - 1] == 0:
            n -= 1
        return tuple([r[i] for i in range(n)])
    finally:
        free(x); free(y); free(r)


cpdef tuple mul(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if not la or not lb:
        return ()
    if la == 1:
        return scale(b, a[0])
    if lb == 1:
        return scale(a, b[0])
    bound = max_norm(a) * max_norm(b) * min(la, lb)
    if bound < _LIMIT and la + lb <= _C_MUL_MAX:
        return _mul_int64(a, b)
    return _py.mul(a, b)


def sqr(a):
    return mul(a, a)


cdef object _divexact_school(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), k, j
    if la < lb:
        return None
    r = list(a)
    lc = b[-1]
    q = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        if c:
            qk, rem = divmod(c, lc)
            if rem:
                return None
            q[k] = qk
            for j in range(lb):
                r[k + j] = r[k + j] - qk * b[j]
    for j in range(lb - 1):
        if r[j]:
            return None
    return tuple(q)


def divexact_or_none(a, b):
    """Return a / b if b divides a in Z[t], else None."""
    cdef Py_ssize_t la, lb
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    la, lb = len(a), len(b)
    if la < lb:
        return None
    if lb == 1:
        c = b[0]
        out = []
        for x in a:
            qx, rx = divmod(x, c)
            if rx:
                return None
            out.append(qx)
        return tuple(out)
    if a[-1] % b[-1] or (b[0] and a[0] % b[0]):
        return None
    if lb < _KRONECKER_MIN or la - lb < _KRONECKER_MIN:
        return _divexact_school(a, b)
    return _py.divexact_or_none(a, b)


def divexact(a, b):
    q = divexact_or_none(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


cdef object _evaluate_int(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def gcd_poly(a, b):
    """Primitive gcd over Q[t], normalized to positive leading coefficient."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a, b = primitive(a), primitive(b)
    if a == b:
        return a
    fn, gn = max_norm(a), max_norm(b)
    bnd = 2 * min(fn, gn) + 29
    x = max(min(bnd, 99 * isqrt(bnd)),
            2 * min(fn // abs(a[-1]), gn // abs(b[-1])) + 2)
    for _ in range(_py._HEU_ROUNDS):
        fv = _evaluate_int(a, x)
        gv = _evaluate_int(b, x)
        if fv and gv:
            hv = gcd(fv, gv)
            h = primitive(_py._interpolate(hv, x))
            if h and divexact_or_none(a, h) is not None \
                    and divexact_or_none(b, h) is not None:
                return h
            cf = _py._interpolate(fv // hv, x)
            if cf:
                h = divexact_or_none(a, cf)
                if h is not None and divexact_or_none(b, h) is not None:
                    return primitive(h)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _py._gcd_prs(a, b)


def root_multiplicity_at_one(a):
    """Return (m, a / (t - 1)^m) with the quotient not vanishing at t = 1."""
    cdef Py_ssize_t m = 0, n, i
    a = list(a)
    while a and sum(a) == 0:
        n = len(a)
        q = [0] * (n - 1)
        acc = 0
        for i in range(n - 1, 0, -1):
            acc = acc + a[i]
            q[i - 1] = acc
        a = q
        m += 1
    return m, tuple(a)
