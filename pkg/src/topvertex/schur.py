"""Skew Schur functions at principal specializations q^(nu + rho).

Values for a single principal alphabet are QRationals.  Alphabets that
carry series variables (scaled or joined ones) give polynomials in
those variables, returned as untruncated QSeries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .partitions import EMPTY, Partition, subpartitions
from .qcore import QRational, QSeries, geometric_tail, t_power

__all__ = [
    "Principal", "Scaled", "Joined", "principal", "scaled", "joined",
    "power_sum", "complete_h", "skew_schur", "skew_schur_branching",
    "skew_schur_jt", "schur_rho", "determinant", "tableau_skew_schur",
]


@dataclass(frozen=True)
class Principal:
    """x_i = q^(nu_i - i + 1/2), i >= 1; inverted means t -> 1/t."""
    nu: Partition
    inverted: bool = False

    @property
    def variables(self):
        return ()


@dataclass(frozen=True)
class Scaled:
    """Every letter of base multiplied by coeff * prod(var^exp)."""
    base: "Alphabet"
    coeff: QRational
    exps: tuple
    variables: tuple


@dataclass(frozen=True)
class Joined:
    parts: tuple
    variables: tuple


Alphabet = Union[Principal, Scaled, Joined]


def principal(nu=(), inverted=False) -> Principal:
    return Principal(Partition(nu), bool(inverted))


def scaled(base, variables, exps, coeff=1) -> Scaled:
    variables = tuple(variables)
    if base.variables and base.variables != variables:
        raise ValueError("scaled alphabet variables disagree with base")
    return Scaled(base, QRational(coeff), tuple(exps), variables)


def joined(*parts) -> Joined:
    vs = [p.variables for p in parts if p.variables]
    variables = vs[0] if vs else ()
    if any(v != variables for v in vs):
        raise ValueError("joined alphabets must share series variables")
    return Joined(tuple(parts), variables)


# -- principal alphabets: QRational fast path ------------------------------

@lru_cache(maxsize=None)
def _p_principal(nu: Partition, inverted: bool, r: int) -> QRational:
    ell = len(nu)
    total = geometric_tail(Fraction(r * (-2 * ell - 1), 2), -r)
    for i, part in enumerate(nu, 1):
        total = total + t_power(r * (2 * part - 2 * i + 1))
    return total.invert_t() if inverted else total


@lru_cache(maxsize=None)
def _h_principal(nu: Partition, inverted: bool, n: int) -> QRational:
    if n < 0:
        return QRational(0)
    if n == 0:
        return QRational(1)
    acc = QRational(0)
    for r in range(1, n + 1):
        acc = acc + _p_principal(nu, inverted, r) * _h_principal(nu, inverted, n - r)
    return acc * QRational(Fraction(1, n))


@lru_cache(maxsize=None)
def _e_principal(nu: Partition, inverted: bool, n: int) -> QRational:
    if n < 0:
        return QRational(0)
    if n == 0:
        return QRational(1)
    acc = QRational(0)
    for r in range(1, n + 1):
        term = _p_principal(nu, inverted, r) * _e_principal(nu, inverted, n - r)
        acc = acc + term if r % 2 else acc - term
    return acc * QRational(Fraction(1, n))


def determinant(matrix, zero, one):
    """Division-free determinant by Laplace expansion over column subsets."""
    n = len(matrix)
    if n == 0:
        return one
    # memo over (row, used-columns mask), expanding along rows top-down
    layer = {0: one}
    for i in range(n):
        row = matrix[i]
        nxt = {}
        for mask, val in layer.items():
            # sign from number of used columns to the left of j
            for j in range(n):
                if mask >> j & 1:
                    continue
                entry = row[j]
                if entry is None:
                    continue
                left = bin(mask & ((1 << j) - 1)).count("1")
                term = val * entry
                if (j - left) % 2:
                    term = -term
                m2 = mask | (1 << j)
                prev = nxt.get(m2)
                nxt[m2] = term if prev is None else prev + term
        layer = nxt
    return layer.get((1 << n) - 1, zero)


def _jt_matrix(lam, mu, h):
    n = len(lam)
    mu = tuple(mu) + (0,) * (n - len(mu))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            k = lam[i] - mu[j] - i + j
            row.append(h(k) if k >= 0 else None)
        rows.append(row)
    return rows


def _skew_principal(lam: Partition, mu: Partition, nu: Partition, inverted: bool) -> QRational:
    return _skew_principal_cached(lam, mu, nu, inverted)


@lru_cache(maxsize=None)
def _skew_principal_cached(lam, mu, nu, inverted):
    if not lam.contains(mu):
        return QRational(0)
    if lam == mu:
        return QRational(1)
    lt, mt = lam.conjugate(), mu.conjugate()
    zero, one = QRational(0), QRational(1)
    if len(lt) < len(lam):
        m = _jt_matrix(lt, mt, lambda k: _e_principal(nu, inverted, k))
    else:
        m = _jt_matrix(lam, mu, lambda k: _h_principal(nu, inverted, k))
    return determinant(m, zero, one)


def schur_rho(lam) -> QRational:
    """s_lam(q^rho)."""
    return _skew_principal(Partition(lam), EMPTY, EMPTY, False)


# -- general alphabets: QSeries-valued -------------------------------------

def _const_series(variables, value):
    return QSeries(variables, {(0,) * len(variables): value})


@lru_cache(maxsize=None)
def _power_sum_series(a, r: int) -> QSeries:
    variables = a.variables
    if isinstance(a, Principal):
        return _const_series(variables, _p_principal(a.nu, a.inverted, r))
    if isinstance(a, Scaled):
        base = _power_sum_series(a.base, r)
        if not base.variables:
            base = _const_series(variables, base.constant_term())
        mono = QSeries.monomial(variables, tuple(r * e for e in a.exps), a.coeff ** r)
        return base * mono
    if isinstance(a, Joined):
        total = QSeries.zero(variables)
        for part in a.parts:
            p = _power_sum_series(part, r)
            if not p.variables and variables:
                p = _const_series(variables, p.constant_term())
            total = total + p
        return total
    raise TypeError(f"unknown alphabet {a!r}")


def power_sum(a, r: int):
    """p_r of an alphabet; a QRational when the alphabet has no variables."""
    if r < 1:
        raise ValueError("power sums are indexed from r = 1")
    if isinstance(a, Principal):
        return _p_principal(a.nu, a.inverted, r)
    return _power_sum_series(a, r)


@lru_cache(maxsize=None)
def _h_series(a, n: int) -> QSeries:
    variables = a.variables
    if n == 0:
        return QSeries.one(variables)
    acc = QSeries.zero(variables)
    for r in range(1, n + 1):
        acc = acc + _power_sum_series(a, r) * _h_series(a, n - r)
    return acc.scale(Fraction(1, n))


def complete_h(a, n: int):
    if isinstance(a, Principal):
        return _h_principal(a.nu, a.inverted, n)
    if n < 0:
        return QSeries.zero(a.variables)
    return _h_series(a, n)


@lru_cache(maxsize=None)
def skew_schur_jt(lam, mu, a):
    """Jacobi-Trudi evaluation with h_n from Newton's identities."""
    lam, mu = Partition(lam), Partition(mu)
    if isinstance(a, Principal):
        return _skew_principal(lam, mu, a.nu, a.inverted)
    variables = a.variables
    if not lam.contains(mu):
        return QSeries.zero(variables)
    m = _jt_matrix(lam, mu, lambda k: _h_series(a, k))
    return determinant(m, QSeries.zero(variables), QSeries.one(variables))


def _lift(value, variables):
    if isinstance(value, QSeries):
        if value.variables == variables:
            return value
        return _const_series(variables, value.constant_term())
    return _const_series(variables, value)


@lru_cache(maxsize=None)
def skew_schur_branching(lam, mu, a):
    """Evaluation through branching over joined parts and homogeneity."""
    lam, mu = Partition(lam), Partition(mu)
    if isinstance(a, Principal):
        return _skew_principal(lam, mu, a.nu, a.inverted)
    variables = a.variables
    if not lam.contains(mu):
        return QSeries.zero(variables)
    if isinstance(a, Scaled):
        d = sum(lam) - sum(mu)
        base = _lift(skew_schur_branching(lam, mu, a.base), variables)
        mono = QSeries.monomial(variables, tuple(d * e for e in a.exps), a.coeff ** d)
        return base * mono
    if isinstance(a, Joined):
        parts = a.parts
        if len(parts) == 1:
            return _lift(skew_schur_branching(lam, mu, parts[0]), variables)
        first = parts[0]
        rest = joined(*parts[1:]) if len(parts) > 2 else parts[1]
        total = QSeries.zero(variables)
        for xi in subpartitions(lam):
            if not xi.contains(mu):
                continue
            left = _lift(skew_schur_branching(lam, xi, first), variables)
            right = _lift(skew_schur_branching(xi, mu, rest), variables)
            total = total + left * right
        return total
    raise TypeError(f"unknown alphabet {a!r}")


def skew_schur(lam, mu, a):
    """s_{lam/mu} at alphabet a (zero unless mu is contained in lam)."""
    lam, mu = Partition(lam), Partition(mu)
    if isinstance(a, Principal):
        return _skew_principal(lam, mu, a.nu, a.inverted)
    return skew_schur_branching(lam, mu, a)


# -- finite alphabets: tableau oracle --------------------------------------

def tableau_skew_schur(lam, mu, xs):
    """s_{lam/mu}(x_1..x_N) summed over semistandard tableaux.

    Letters are added one at a time; each letter fills a horizontal strip.
    Works for any commutative ring elements xs.
    """
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return 0
    # states: intermediate shape nu with mu <= nu <= lam -> weight
    states = {mu: 1}
    for x in xs:
        nxt = {}
        for nu, w in states.items():
            for nu2, k in _horizontal_strips(nu, lam):
                v = w * x ** k if k else w
                nxt[nu2] = nxt[nu2] + v if nu2 in nxt else v
        states = nxt
    return states.get(lam, 0)


def _horizontal_strips(nu, lam):
    # shapes nu2 with nu <= nu2 <= lam and nu2/nu a horizontal strip
    n = len(lam)
    base = tuple(nu) + (0,) * (n - len(nu))
    out = []

    def rec(i, prefix, added):
        if i == n:
            out.append((Partition(prefix), added))
            return
        hi = lam[i]
        if i > 0:
            hi = min(hi, base[i - 1])
        for v in range(base[i], hi + 1):
            prefix.append(v)
            rec(i + 1, prefix, added + v - base[i])
            prefix.pop()

    rec(0, [], 0)
    return out
