"""Two-vertex amplitudes around a (-1,-1)-curve and the local flop identity.

Z0(Q)  = sum_mu (-Q)^|mu| C_{l1, l2, mu^t} C_{l3, l4, mu}
Z0+(Q) = sum_mu (-Q)^|mu| C_{l1, mu^t, l4} C_{l3, mu, l2}

Both are divided by the conifold factor prod_k (1 - Q q^k)^k, after
which they are polynomials in Q.  Polynomials in the single Kahler
variable are stored as lists of QRationals indexed by the power of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, c_table, enumerate_partitions, kappa, partitions_of
from .qcore import QRational, QSeries, Truncation, series_exp, t_power
from .schur import joined, principal, scaled, schur_rho, skew_schur
from .vertex import vertex

__all__ = [
    "LocalAmplitude", "conifold_factor", "conifold_log", "z0", "z0_plus",
    "normalized", "z0_closed", "z0_plus_closed", "c_product",
    "check_flop_identity", "check_sum_lemma", "check_product_lemma",
    "FlopWitness", "boundary_tuples",
]

VAR = ("Q",)


def _poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _poly_mul(a, b, cap=None):
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if cap is not None:
        n = min(n, cap + 1)
    out = [QRational(0)] * n
    for i, x in enumerate(a):
        if not x or i >= n:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            if y:
                out[i + j] = out[i + j] + x * y
    return _poly_trim(out)


def _series_to_poly(s: QSeries):
    if not s.terms:
        return []
    n = max(e[0] for e in s.terms)
    return _poly_trim([s.coefficient((k,)) for k in range(n + 1)])


@dataclass(frozen=True)
class LocalAmplitude:
    """A polynomial (or truncated series) in one Kahler variable."""
    boundary: tuple
    side: str
    coeffs: tuple
    cap: int | None = None

    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else QRational(0)

    def render(self, var="Q0"):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"[{c}]" + ("" if k == 0 else f"*{var}" + ("" if k == 1 else f"^{k}")))
        return " + ".join(parts) if parts else "0"


def conifold_log(cap: int) -> QSeries:
    """log prod_k (1 - Q q^k)^k = -sum_n (Q^n / n) q^n / (1 - q^n)^2."""
    tr = Truncation.total(1, cap)
    terms = {}
    for n in range(1, cap + 1):
        x = t_power(2 * n)
        terms[(n,)] = -(x / (1 - x) ** 2) * QRational(Fraction(1, n))
    return QSeries(VAR, terms, tr)


@lru_cache(maxsize=None)
def _conifold(cap):
    return series_exp(conifold_log(cap))


def conifold_factor(cap: int) -> QSeries:
    """prod_k (1 - Q q^k)^k truncated at Q^cap, coefficients in closed form."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    return _conifold(cap)


def _boundary(lams):
    if len(lams) != 4:
        raise ValueError("need four boundary partitions")
    return tuple(Partition(l) for l in lams)


def _sum_size(lams):
    return sum(sum(l) for l in lams)


def _amplitude(lams, cap, plus):
    l1, l2, l3, l4 = lams
    coeffs = []
    for n in range(cap + 1):
        acc = QRational(0)
        for mu in partitions_of(n):
            mt = mu.conjugate()
            if plus:
                term = vertex(l1, mt, l4) * vertex(l3, mu, l2)
            else:
                term = vertex(l1, l2, mt) * vertex(l3, l4, mu)
            acc = acc + term
        coeffs.append(-acc if n % 2 else acc)
    return tuple(_poly_trim(coeffs))


def z0(lams, cap: int | None = None) -> LocalAmplitude:
    lams = _boundary(lams)
    if cap is None:
        cap = _sum_size(lams) + 2
    return LocalAmplitude(lams, "original", _amplitude(lams, cap, False), cap)


def z0_plus(lams, cap: int | None = None) -> LocalAmplitude:
    lams = _boundary(lams)
    if cap is None:
        cap = _sum_size(lams) + 2
    return LocalAmplitude(lams, "flopped", _amplitude(lams, cap, True), cap)


def normalized(amp: LocalAmplitude) -> LocalAmplitude:
    """Divide by the conifold factor and check the quotient is a polynomial.

    The raw amplitude must be computed past sum |l_i|; the coefficients of
    the quotient beyond that degree are asserted to vanish.
    """
    cap = amp.cap
    bound = _sum_size(amp.boundary)
    if cap is None or cap < bound:
        raise ValueError("amplitude cap below the degree bound")
    tr = Truncation.total(1, cap)
    s = QSeries(VAR, {(k,): c for k, c in enumerate(amp.coeffs)}, tr)
    quot = s * conifold_factor(cap).inverse()
    poly = _series_to_poly(quot)
    if len(poly) - 1 > bound:
        raise ArithmeticError(
            f"normalized amplitude for {amp.boundary} has degree {len(poly) - 1} "
            f"above the bound {bound}")
    return LocalAmplitude(amp.boundary, amp.side, tuple(poly), None)


def c_product(mu, nu, sign=1):
    """prod_k (1 - sign * Q q^k)^{C_k(mu, nu)} as a polynomial in Q."""
    poly = [QRational(1)]
    for k, mult in c_table(mu, nu).items():
        factor = [QRational(1), -QRational(sign) * t_power(2 * k)]
        for _ in range(mult):
            poly = _poly_mul(poly, factor)
    return poly


def _two_alphabet(nu_plain, nu_inverted):
    # (q^(nu_plain + rho), Q q^(-nu_inverted - rho))
    return joined(principal(nu_plain), scaled(principal(nu_inverted, True), VAR, (1,)))


def _tau_sum(a, b, x_a, x_b, transpose_first):
    """sum_tau (-Q)^|tau| s_{a/tau'}(x_a) s_{b/tau''}(x_b).

    transpose_first selects which factor receives tau^t.
    """
    total = QSeries.zero(VAR)
    for n in range(min(sum(a), sum(b)) + 1):
        for tau in partitions_of(n):
            ta, tb = (tau.conjugate(), tau) if transpose_first else (tau, tau.conjugate())
            if not a.contains(ta) or not b.contains(tb):
                continue
            term = skew_schur(a, ta, x_a) * skew_schur(b, tb, x_b)
            if not term.is_zero():
                sign = -1 if n % 2 else 1
                total = total + term * QSeries.monomial(VAR, (n,), sign)
    return total


def _sum_part_original(lams):
    l1, l2, l3, l4 = lams
    return _tau_sum(l2.conjugate(), l4.conjugate(),
                    _two_alphabet(l1, l3), _two_alphabet(l3, l1), True)


def _sum_part_flopped(lams):
    l1, l2, l3, l4 = lams
    l1t, l3t = l1.conjugate(), l3.conjugate()
    return _tau_sum(l2, l4, _two_alphabet(l3t, l1t), _two_alphabet(l1t, l3t), False)


def z0_closed(lams) -> LocalAmplitude:
    """Closed form of the normalized original-side amplitude."""
    lams = _boundary(lams)
    l1, l2, l3, l4 = lams
    pref = t_power(kappa(l2) + kappa(l4)) * schur_rho(l1) * schur_rho(l3)
    prod = c_product(l1.conjugate(), l3.conjugate())
    body = _series_to_poly(_sum_part_original(lams))
    poly = [c * pref for c in _poly_mul(prod, body)]
    return LocalAmplitude(lams, "original", tuple(_poly_trim(poly)), None)


def z0_plus_closed(lams) -> LocalAmplitude:
    """Closed form of the normalized flopped-side amplitude."""
    lams = _boundary(lams)
    l1, l2, l3, l4 = lams
    pref = schur_rho(l1) * schur_rho(l3)
    prod = c_product(l1, l3)
    body = _series_to_poly(_sum_part_flopped(lams))
    poly = [c * pref for c in _poly_mul(prod, body)]
    return LocalAmplitude(lams, "flopped", tuple(_poly_trim(poly)), None)


@dataclass(frozen=True)
class FlopWitness:
    holds: bool
    boundary: tuple
    power: int | None = None
    lhs: QRational | None = None
    rhs: QRational | None = None


def _invert_variable(poly):
    # polynomial in Q+ -> Laurent dict in Q0 with Q+ = 1/Q0
    return {-k: c for k, c in enumerate(poly) if c}


def _compare_laurent(lhs, rhs, lams):
    for k in sorted(set(lhs) | set(rhs)):
        a = lhs.get(k, QRational(0))
        b = rhs.get(k, QRational(0))
        if a != b:
            return FlopWitness(False, lams, k, a, b)
    return FlopWitness(True, lams)


def check_flop_identity(lams, original=None, flopped=None) -> FlopWitness:
    """Normalized Z0+ at Q0+ = 1/Q0 against the transformed normalized Z0."""
    lams = _boundary(lams)
    l1, l2, l3, l4 = lams
    if original is None:
        original = normalized(z0(lams))
    if flopped is None:
        flopped = normalized(z0_plus(lams))
    n = _sum_size(lams)
    lhs = _invert_variable(flopped.coeffs)
    pref = t_power(kappa(l1) - kappa(l2) + kappa(l3) - kappa(l4))
    if n % 2:
        pref = -pref
    rhs = {k - n: c * pref for k, c in enumerate(original.coeffs) if c}
    return _compare_laurent(lhs, rhs, lams)


def check_sum_lemma(lams) -> FlopWitness:
    """The tau-sum of the flopped side at Q0+ = 1/Q0 against the original one."""
    lams = _boundary(lams)
    _, l2, _, l4 = lams
    lhs = _invert_variable(_series_to_poly(_sum_part_flopped(lams)))
    n = sum(l2) + sum(l4)
    sign = -1 if n % 2 else 1
    rhs = {k - n: c * sign for k, c in enumerate(_series_to_poly(_sum_part_original(lams))) if c}
    return _compare_laurent(lhs, rhs, lams)


def check_product_lemma(l1, l3) -> FlopWitness:
    """prod (1 - q^k/Q0)^{C_k(l1,l3)} against its transposed counterpart."""
    l1, l3 = Partition(l1), Partition(l3)
    lhs = _invert_variable(c_product(l1, l3))
    n = sum(l1) + sum(l3)
    pref = t_power(kappa(l1) + kappa(l3))
    if n % 2:
        pref = -pref
    rhs = {k - n: c * pref for k, c in enumerate(c_product(l1.conjugate(), l3.conjugate())) if c}
    return _compare_laurent(lhs, rhs, (l1, l3))


def boundary_tuples(max_total: int):
    """All 4-tuples of partitions with total size <= max_total."""
    parts = list(enumerate_partitions(max_total))
    out = []
    for a in parts:
        for b in parts:
            if sum(a) + sum(b) > max_total:
                continue
            for c in parts:
                if sum(a) + sum(b) + sum(c) > max_total:
                    continue
                for d in parts:
                    if sum(a) + sum(b) + sum(c) + sum(d) <= max_total:
                        out.append((a, b, c, d))
    return out
