"""Dense integer polynomial kernels, pure Python.

Polynomials are tuples of ints, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.  Large products go
through Kronecker substitution so the heavy lifting happens inside
CPython's big-integer multiply.
"""

from math import gcd, isqrt

# below this length schoolbook beats packing into big integers
_KRONECKER_MIN = 12

_HEU_ROUNDS = 6


def normalize(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return tuple(a)
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return normalize(r)


def sub(a, b):
    if len(a) >= len(b):
        r = list(a)
        for i, c in enumerate(b):
            r[i] -= c
    else:
        r = [-c for c in b]
        for i, c in enumerate(a):
            r[i] += c
    return normalize(r)


def neg(a):
    return tuple(-c for c in a)


def scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def shift(a, k):
    """Multiply by t**k, k >= 0."""
    if not a or not k:
        return tuple(a)
    return (0,) * k + tuple(a)


def max_norm(a):
    return max(map(abs, a)) if a else 0


def content(a):
    return gcd(*a)


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple(x // c for x in a)


def _pack(a, nbytes):
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in a)
    negs = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in a)
    return int.from_bytes(pos, "little") - int.from_bytes(negs, "little")


def _unpack(v, nbytes, length):
    # digits are balanced: each lies in [-2^(w-1), 2^(w-1))
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * length, "little")
    data = (v + offset).to_bytes(length * nbytes + 1, "little")
    fb = int.from_bytes
    return [fb(data[i:i + nbytes], "little") - half
            for i in range(0, length * nbytes, nbytes)]


def mul(a, b):
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    if la == 1:
        return scale(b, a[0])
    if lb == 1:
        return scale(a, b[0])
    if la < _KRONECKER_MIN or lb < _KRONECKER_MIN:
        r = [0] * (la + lb - 1)
        if la > lb:
            a, b = b, a
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b, i):
                    r[j] += x * y
        return normalize(r)
    bound = max_norm(a) * max_norm(b) * min(la, lb)
    nbytes = (bound.bit_length() + 2 + 7) // 8
    v = _pack(a, nbytes) * _pack(b, nbytes)
    return normalize(_unpack(v, nbytes, la + lb - 1))


def sqr(a):
    return mul(a, a)


def _divexact_school(a, b):
    la, lb = len(a), len(b)
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
            for j, y in enumerate(b):
                r[k + j] -= qk * y
    if any(r[:lb - 1]):
        return None
    return tuple(q)


def divexact_or_none(a, b):
    """Return a / b if b divides a in Z[t], else None."""
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
    # a quotient q of a satisfies |q_i| <= 2^deg(q) * ||a||_2 (Mignotte)
    dq = la - lb
    norm2 = isqrt(sum(c * c for c in a)) + 1
    nbytes = (dq + norm2.bit_length() + 2 + 7) // 8
    av = _pack(a, nbytes)
    bv = _pack(b, nbytes)
    qv, rv = divmod(av, bv)
    if rv:
        return None
    try:
        q = normalize(_unpack(qv, nbytes, dq + 1))
    except OverflowError:
        return None
    if len(q) != dq + 1 or mul(q, b) != tuple(a):
        return None
    return q


def divexact(a, b):
    q = divexact_or_none(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def _interpolate(h, x):
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return tuple(out)


def _evaluate_int(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _gcd_prs(a, b):
    # primitive remainder sequence; slow but unconditional
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        la, lb = len(a), len(b)
        r = list(a)
        lc = b[-1]
        for k in range(la - lb, -1, -1):
            c = r[k + lb - 1]
            if c:
                g = gcd(c, lc)
                m1, m2 = lc // g, c // g
                r = [m1 * x for x in r]
                for j, y in enumerate(b):
                    r[k + j] -= m2 * y
        a, b = b, primitive(normalize(r[:lb - 1]))
    return primitive(a)


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
    for _ in range(_HEU_ROUNDS):
        fv = _evaluate_int(a, x)
        gv = _evaluate_int(b, x)
        if fv and gv:
            hv = gcd(fv, gv)
            h = primitive(_interpolate(hv, x))
            if h and divexact_or_none(a, h) is not None \
                    and divexact_or_none(b, h) is not None:
                return h
            cf = _interpolate(fv // hv, x)
            if cf:
                h = divexact_or_none(a, cf)
                if h is not None and divexact_or_none(b, h) is not None:
                    return primitive(h)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _gcd_prs(a, b)


def root_multiplicity_at_one(a):
    """Return (m, a / (t - 1)^m) with the quotient not vanishing at t = 1."""
    m = 0
    a = list(a)
    while a and sum(a) == 0:
        # synthetic division by t - 1
        n = len(a)
        q = [0] * (n - 1)
        acc = 0
        for i in range(n - 1, 0, -1):
            acc += a[i]
            q[i - 1] = acc
        a = q
        m += 1
    return m, tuple(a)
