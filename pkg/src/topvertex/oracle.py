"""Numeric oracle for vertex values at a rational point t > 1.

At t = t0 > 1 the letters q^(nu_i - i + 1/2) = t0^(2 nu_i - 2i + 1) are
positive and decay geometrically, so truncating the alphabet after N
letters gives a lower bound and the dropped tail is bounded by
d! * p1(tail)^d in every skew Schur evaluation of degree d.  The result
is an interval with exact rational endpoints that must contain the
symbolic value.  No Jacobi-Trudi or Newton identity is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import Partition, kappa, subpartitions
from .schur import tableau_skew_schur

__all__ = ["Interval", "skew_schur_interval", "vertex_interval"]


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other):
        # both operands are nonnegative here
        return Interval(self.lo * other.lo, self.hi * other.hi)

    def scale(self, c: Fraction):
        a, b = self.lo * c, self.hi * c
        return Interval(min(a, b), max(a, b))

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    @property
    def width(self):
        return self.hi - self.lo


def _letters(nu, t0, n):
    nu = Partition(nu)
    return [t0 ** (2 * nu.part(i) - 2 * i + 1) for i in range(1, n + 1)]


def _tail_p1(nu, t0, n):
    # sum_{i > n} t0^(-2i + 1) once n >= len(nu): a geometric series
    nu = Partition(nu)
    if n < len(nu):
        raise ValueError("truncation shorter than the partition")
    first = t0 ** (-2 * (n + 1) + 1)
    return first / (1 - t0 ** -2)


def skew_schur_interval(lam, mu, nu, t0: Fraction, n: int = 40) -> Interval:
    """Bounds on s_{lam/mu}(q^(nu + rho)) at t = t0 > 1."""
    lam, mu = Partition(lam), Partition(mu)
    t0 = Fraction(t0)
    if t0 <= 1:
        raise ValueError("the oracle needs t0 > 1")
    if not lam.contains(mu):
        return Interval(Fraction(0), Fraction(0))
    xs = _letters(nu, t0, n)
    tail = _tail_p1(nu, t0, n)
    lo = Fraction(tableau_skew_schur(lam, mu, xs))
    slack = Fraction(0)
    for xi in subpartitions(lam):
        if xi == lam or not xi.contains(mu):
            continue
        d = sum(lam) - sum(xi)
        head = Fraction(tableau_skew_schur(xi, mu, xs))
        slack += head * factorial(d) * tail ** d
    return Interval(lo, lo + slack)


def vertex_interval(l1, l2, l3, t0: Fraction, n: int = 40) -> Interval:
    """Bounds on C_{l1 l2 l3} at t = t0 from truncated tableau sums."""
    l1, l2, l3 = Partition(l1), Partition(l2), Partition(l3)
    t0 = Fraction(t0)
    l2t, l3t = l2.conjugate(), l3.conjugate()
    total = Interval(Fraction(0), Fraction(0))
    for mu in subpartitions(l1):
        if not l3t.contains(mu):
            continue
        total = total + skew_schur_interval(l1, mu, l2t, t0, n) * skew_schur_interval(l3t, mu, l2, t0, n)
    pref = skew_schur_interval(l2, (), (), t0, n)
    return (total * pref).scale(t0 ** kappa(l3))
