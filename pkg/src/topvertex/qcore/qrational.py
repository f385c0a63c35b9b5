"""Rational functions in t = q^(1/2) with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._backend import kernel as K

__all__ = ["QRational", "geometric_tail", "t_power", "q_power"]


def _strip_low(p):
    k = 0
    while not p[k]:
        k += 1
    return k, (p[k:] if k else p)


class QRational:
    """A value t^s * N(t) / D(t) kept in canonical form.

    N and D are integer polynomials with nonzero constant terms, coprime
    in Z[t], and D has a positive leading coefficient.  Every value has
    exactly one such representation, so equality and hashing are
    structural.
    """

    __slots__ = ("_s", "_n", "_d", "_hash")

    def __new__(cls, value=0):
        if isinstance(value, QRational):
            return value
        if isinstance(value, int):
            return cls._const(value, 1)
        if isinstance(value, Fraction):
            return cls._const(value.numerator, value.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to QRational")

    @classmethod
    def _make(cls, s, n, d):
        obj = object.__new__(cls)
        obj._s = s
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    def __reduce__(self):
        # the default protocol would call __new__() and mutate the zero singleton
        return (_rebuild, (self._s, self._n, self._d))

    @classmethod
    def _const(cls, p, q):
        if not p:
            return _ZERO
        g = gcd(p, q)
        return cls._make(0, (p // g,), (q // g,))

    @classmethod
    def _reduce(cls, s, n, d):
        """Canonicalize t^s n/d for integer polynomials n, d (d nonzero)."""
        if not n:
            return _ZERO
        if not d:
            raise ZeroDivisionError("QRational with zero denominator")
        k, n = _strip_low(n)
        s += k
        k, d = _strip_low(d)
        s -= k
        if len(d) > 1 and len(n) > 1:
            g = K.gcd_poly(n, d)
            if g != (1,):
                n = K.divexact(n, g)
                d = K.divexact(d, g)
        c = gcd(gcd(*n), gcd(*d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return cls._make(s, n, d)

    @classmethod
    def from_laurent(cls, coeffs):
        """Build from a mapping exponent -> rational coefficient."""
        items = [(e, Fraction(c)) for e, c in coeffs.items() if c]
        if not items:
            return _ZERO
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        den = 1
        for _, c in items:
            den = den * c.denominator // gcd(den, c.denominator)
        n = [0] * (hi - lo + 1)
        for e, c in items:
            n[e - lo] += c.numerator * (den // c.denominator)
        return cls._reduce(lo, tuple(n), (den,))

    @classmethod
    def from_polys(cls, numerator, denominator=(1,), shift=0):
        """t^shift * numerator / denominator from coefficient lists."""
        return cls._reduce(shift, K.normalize(list(numerator)),
                           K.normalize(list(denominator)))

    # -- inspection -------------------------------------------------------

    @property
    def shift(self):
        return self._s

    @property
    def numerator_coeffs(self):
        return self._n

    @property
    def denominator_coeffs(self):
        return self._d

    def is_zero(self):
        return not self._n

    def __bool__(self):
        return bool(self._n)

    def is_laurent_polynomial(self):
        return len(self._d) == 1

    def is_constant(self):
        return len(self._n) <= 1 and len(self._d) == 1 and (not self._n or self._s == 0)

    def laurent_coefficients(self) -> dict[int, Fraction]:
        if len(self._d) != 1:
            raise ValueError("not a Laurent polynomial")
        d = self._d[0]
        return {self._s + i: Fraction(c, d) for i, c in enumerate(self._n) if c}

    def to_fraction(self) -> Fraction:
        if not self._n:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self._n[0], self._d[0])

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        num = Fraction(0)
        for c in reversed(self._n):
            num = num * x + c
        den = Fraction(0)
        for c in reversed(self._d):
            den = den * x + c
        if not den:
            raise ZeroDivisionError(f"pole at t = {x}")
        return num / den * x ** self._s

    def invert_t(self) -> "QRational":
        """Substitute t -> 1/t."""
        if not self._n:
            return self
        n = self._n[::-1]
        d = self._d[::-1]
        s = -self._s - (len(self._n) - 1) + (len(self._d) - 1)
        if d[-1] < 0:
            n = tuple(-c for c in n)
            d = tuple(-c for c in d)
        return QRational._make(s, n, d)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRational):
            return other
        if isinstance(other, (int, Fraction)):
            return QRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._n:
            return self
        if not self._n:
            return o
        s1, s2 = self._s, o._s
        s = min(s1, s2)
        n1 = K.shift(self._n, s1 - s)
        n2 = K.shift(o._n, s2 - s)
        d1, d2 = self._d, o._d
        if d1 == d2:
            n = K.add(n1, n2)
            if not n:
                return _ZERO
            if len(d1) == 1:
                return QRational._reduce(s, n, d1)
            return QRational._reduce(s, n, d1)
        if len(d1) == 1 and len(d2) == 1:
            return QRational._reduce(s, K.add(K.scale(n1, d2[0]), K.scale(n2, d1[0])),
                                     (d1[0] * d2[0],))
        g = K.gcd_poly(d1, d2)
        if g == (1,):
            n = K.add(K.mul(n1, d2), K.mul(n2, d1))
            if not n:
                return _ZERO
            return QRational._finish(s, n, K.mul(d1, d2))
        d1g = K.divexact(d1, g)
        d2g = K.divexact(d2, g)
        n = K.add(K.mul(n1, d2g), K.mul(n2, d1g))
        if not n:
            return _ZERO
        k, n = _strip_low(n)
        h = K.gcd_poly(n, g)
        if h != (1,):
            n = K.divexact(n, h)
            d = K.mul(d1g, K.divexact(d2, h))
        else:
            d = K.mul(d1g, d2)
        return QRational._finish(s + k, n, d)

    __radd__ = __add__

    @staticmethod
    def _finish(s, n, d):
        # n, d already coprime over Q[t]; fix content, sign and t-valuation
        k, n = _strip_low(n)
        c = gcd(gcd(*n), gcd(*d))
        if d[-1] < 0:
            c = -c
        if c != 1:
            n = tuple(x // c for x in n)
            d = tuple(x // c for x in d)
        return QRational._make(s + k, n, d)

    def __neg__(self):
        if not self._n:
            return self
        return QRational._make(self._s, tuple(-c for c in self._n), self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other or not self._n:
                return _ZERO
            d0 = self._d
            g = gcd(other, gcd(*d0))
            if g == 1:
                return QRational._make(self._s, K.scale(self._n, other), d0)
            return QRational._make(self._s, K.scale(self._n, other // g),
                                   tuple(x // g for x in d0))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._n or not o._n:
            return _ZERO
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        s = self._s + o._s
        if len(d1) == 1 and len(d2) == 1:
            return QRational._finish(s, K.mul(n1, n2), (d1[0] * d2[0],))
        if len(d2) > 1 and len(n1) > 1:
            g = K.gcd_poly(n1, d2)
            if g != (1,):
                n1 = K.divexact(n1, g)
                d2 = K.divexact(d2, g)
        if len(d1) > 1 and len(n2) > 1:
            g = K.gcd_poly(n2, d1)
            if g != (1,):
                n2 = K.divexact(n2, g)
                d1 = K.divexact(d1, g)
        return QRational._finish(s, K.mul(n1, n2), K.mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise ZeroDivisionError("inverse of zero QRational")
        n, d = self._d, self._n
        if d[-1] < 0:
            n = tuple(-c for c in n)
            d = tuple(-c for c in d)
        return QRational._make(-self._s, n, d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return _ONE
        # numerator and denominator stay coprime under powers
        n, d = (1,), (1,)
        bn, bd = self._n, self._d
        e = k
        while e:
            if e & 1:
                n = K.mul(n, bn)
                d = K.mul(d, bd)
            e >>= 1
            if e:
                bn = K.mul(bn, bn)
                bd = K.mul(bd, bd)
        return QRational._make(self._s * k, n, d)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._s == o._s and self._n == o._n and self._d == o._d

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_constant():
                h = hash(self.to_fraction())
            else:
                h = hash((self._s, self._n, self._d))
            self._hash = h
        return h

    # -- rendering --------------------------------------------------------

    def __str__(self):
        num = _render_laurent(self._n, self._s)
        if self._d == (1,):
            return num
        den = _render_laurent(self._d, 0)
        if len([c for c in self._n if c]) > 1:
            num = f"({num})"
        if len([c for c in self._d if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"QRational({self})"


def _render_laurent(coeffs, shift):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        e = i + shift
        if e == 0:
            mono = ""
        elif e == 1:
            mono = "t"
        else:
            mono = f"t^{e}"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


_ZERO = QRational._make(0, (), (1,))
_ONE = QRational._make(0, (1,), (1,))


def t_power(k: int) -> QRational:
    return QRational._make(k, (1,), (1,))


def q_power(a) -> QRational:
    """q^a for integer or half-integer a, i.e. t^(2a)."""
    two_a = Fraction(a) * 2
    if two_a.denominator != 1:
        raise ValueError(f"q-exponent {a} is not a half-integer")
    return t_power(int(two_a))


def geometric_tail(first_exponent, step: int) -> QRational:
    """Closed form of sum_{n>=0} q^(first_exponent + n*step), step < 0."""
    if step >= 0:
        raise ValueError("non-summable tail")
    two_first = Fraction(first_exponent) * 2
    if two_first.denominator != 1:
        raise ValueError(f"q-exponent {first_exponent} is not a half-integer")
    m = -2 * step
    # t^(2f) / (1 - t^(-m)) = t^(2f + m) / (t^m - 1)
    den = [0] * (m + 1)
    den[0] = -1
    den[m] = 1
    return QRational._make(int(two_first) + m, (1,), tuple(den))


def _rebuild(s, n, d):
    return QRational._make(s, n, d) if n else _ZERO
