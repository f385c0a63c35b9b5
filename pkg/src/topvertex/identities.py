"""Exhaustive checks of the combinatorial identities behind the vertex calculus.

Each check returns an IdentityResult; a failure carries the first witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .localflop import (boundary_tuples, c_product, check_product_lemma, check_sum_lemma,
                        conifold_log)
from .partitions import Partition, c_table, enumerate_partitions, kappa, subpartitions
from .qcore import QRational, QSeries, Truncation, geometric_tail, series_exp, t_power
from .schur import (joined, power_sum, principal, scaled, skew_schur, skew_schur_branching,
                    skew_schur_jt)

__all__ = [
    "IdentityResult", "check_kappa", "check_c_sums", "check_c_symmetry",
    "hook_product_log", "check_hook_product", "check_cauchy", "check_dual_cauchy",
    "check_branching", "check_homogeneity", "check_conjugation",
    "check_local_lemmas", "run_battery",
]

VAR = ("Q",)


@dataclass
class IdentityResult:
    name: str
    cases: int = 0
    failures: int = 0
    witness: dict | None = None
    seconds: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def fail(self, **witness):
        self.failures += 1
        if self.witness is None:
            self.witness = {k: str(v) for k, v in witness.items()}

    def as_dict(self):
        return {"name": self.name, "holds": self.holds, "cases": self.cases,
                "failures": self.failures, "witness": self.witness, "params": self.params}


def _parts(n):
    return list(enumerate_partitions(n))


def _pairs(n):
    ps = _parts(n)
    return [(a, b) for a in ps for b in ps]


# -- partition statistics ---------------------------------------------------

def check_kappa(max_size: int) -> IdentityResult:
    r = IdentityResult("kappa", params={"max_size": max_size})
    for mu in _parts(max_size):
        r.cases += 1
        k = kappa(mu)
        if k % 2 or kappa(mu.conjugate()) != -k:
            r.fail(mu=mu, kappa=k, kappa_t=kappa(mu.conjugate()))
    return r


def check_c_sums(max_size: int) -> IdentityResult:
    r = IdentityResult("c-sums", params={"max_size": max_size})
    for mu, nu in _pairs(max_size):
        r.cases += 1
        table = c_table(mu, nu)
        s0 = sum(table.values())
        s1 = sum(k * v for k, v in table.items())
        if (any(v < 0 for v in table.values()) or s0 != sum(mu) + sum(nu)
                or 2 * s1 != kappa(mu) + kappa(nu)):
            r.fail(mu=mu, nu=nu, table=table)
    return r


def check_c_symmetry(max_size: int) -> IdentityResult:
    r = IdentityResult("c-symmetry", params={"max_size": max_size})
    for mu, nu in _pairs(max_size):
        r.cases += 1
        a = c_table(mu, nu)
        b = {-k: v for k, v in c_table(mu.conjugate(), nu.conjugate()).items()}
        if a != b:
            r.fail(mu=mu, nu=nu, lhs=a, rhs=b)
    return r


# -- the hook product --------------------------------------------------------

def _row_sum(mu, n):
    # sum_{i>=1} x^(mu_i - i) at x = q^n, closed as a rational function
    total = geometric_tail(Fraction(-n * (len(mu) + 1)), -n)
    for i, m in enumerate(mu, 1):
        total = total + t_power(2 * n * (m - i))
    return total


def hook_product_log(mu, nu, cap: int) -> QSeries:
    """log prod_{i,j} (1 - Q q^(mu_i - i + nu_j - j + 1)) below Q^(cap+1).

    The double sum over (i, j) of x^h factors as x * (row sum of mu) *
    (row sum of nu), each closed geometrically.
    """
    mu, nu = Partition(mu), Partition(nu)
    tr = Truncation.total(1, cap)
    terms = {}
    for n in range(1, cap + 1):
        inner = t_power(2 * n) * _row_sum(mu, n) * _row_sum(nu, n)
        terms[(n,)] = -inner * QRational(Fraction(1, n))
    return QSeries(VAR, terms, tr)


def check_hook_product(max_size: int, cap: int) -> IdentityResult:
    """Hook product against the conifold factor times prod (1 - Q q^k)^C_k."""
    r = IdentityResult("hook-product", params={"max_size": max_size, "cap": cap})
    tr = Truncation.total(1, cap)
    conifold = series_exp(conifold_log(cap))
    for mu, nu in _pairs(max_size):
        r.cases += 1
        lhs = series_exp(hook_product_log(mu, nu, cap))
        poly = c_product(mu, nu)
        rhs = conifold * QSeries(VAR, {(k,): c for k, c in enumerate(poly) if c}, tr)
        if lhs != rhs:
            bad = next(k for k in range(cap + 1)
                       if lhs.coefficient((k,)) != rhs.coefficient((k,)))
            r.fail(mu=mu, nu=nu, power=bad, lhs=lhs.coefficient((bad,)),
                   rhs=rhs.coefficient((bad,)))
    return r


# -- skew Schur identities ---------------------------------------------------

def _lift(value, tr):
    if isinstance(value, QSeries):
        return value.truncate(tr) if value.variables == VAR else \
            QSeries(VAR, {(0,): value.constant_term()}, tr)
    return QSeries(VAR, {(0,): value}, tr)


def _cauchy_kernel(x, y, cap, dual):
    # prod (1 - x_i y_j)^(-1), or prod (1 + x_i y_j) when dual, via power sums
    tr = Truncation.total(1, cap)
    terms = {}
    for r in range(1, cap + 1):
        c = _lift(power_sum(x, r), tr).coefficient((r,)) * power_sum(y, r)
        c = c * QRational(Fraction(1, r))
        if dual and r % 2 == 0:
            c = -c
        terms[(r,)] = c
    return series_exp(QSeries(VAR, terms, tr))


def _cauchy_sides(l1, l2, x, y, cap, dual):
    tr = Truncation.total(1, cap)
    lhs = QSeries.zero(VAR, tr)
    for lam in enumerate_partitions(cap + sum(l1)):
        if not lam.contains(l1):
            continue
        second = lam.conjugate() if dual else lam
        if not second.contains(l2):
            continue
        lhs = lhs + _lift(skew_schur(lam, l1, x), tr) * _lift(skew_schur(second, l2, y), tr)
    body = QSeries.zero(VAR, tr)
    a, b = (l2.conjugate(), l1.conjugate()) if dual else (l2, l1)
    for m in subpartitions(a):
        mb = m.conjugate() if dual else m
        if not b.contains(mb):
            continue
        body = body + _lift(skew_schur(a, m, x), tr) * _lift(skew_schur(b, mb, y), tr)
    return lhs, _cauchy_kernel(x, y, cap, dual) * body


def _check_cauchy(name, max_size, cap, dual, nus):
    r = IdentityResult(name, params={"max_size": max_size, "cap": cap})
    for n1, n2 in nus:
        x = scaled(principal(n1), VAR, (1,))
        y = principal(n2)
        for l1, l2 in _pairs(max_size):
            r.cases += 1
            lhs, rhs = _cauchy_sides(l1, l2, x, y, cap, dual)
            if lhs != rhs:
                r.fail(l1=l1, l2=l2, x=n1, y=n2)
    return r


_CAUCHY_ALPHABETS = (((), ()), ((1,), (2, 1)))


def check_cauchy(max_size: int, cap: int = 2) -> IdentityResult:
    """sum_lam s_{lam/l1}(x) s_{lam/l2}(y) with x = Q q^(nu+rho), y = q^(nu'+rho)."""
    return _check_cauchy("cauchy", max_size, cap, False, _CAUCHY_ALPHABETS)


def check_dual_cauchy(max_size: int, cap: int = 2) -> IdentityResult:
    return _check_cauchy("dual-cauchy", max_size, cap, True, _CAUCHY_ALPHABETS)


def check_branching(max_size: int) -> IdentityResult:
    """Branching over (x, Q y) against Jacobi-Trudi with combined power sums."""
    r = IdentityResult("branching", params={"max_size": max_size})
    alpha = joined(principal((1,)), scaled(principal((), True), VAR, (1,)))
    for lam in _parts(max_size):
        for mu in subpartitions(lam):
            r.cases += 1
            a = skew_schur_branching(lam, mu, alpha)
            b = skew_schur_jt(lam, mu, alpha)
            if a != b:
                r.fail(lam=lam, mu=mu)
    return r


def check_homogeneity(max_size: int) -> IdentityResult:
    r = IdentityResult("homogeneity", params={"max_size": max_size})
    base = principal((2,))
    alpha = scaled(base, VAR, (1,), t_power(3))
    for lam in _parts(max_size):
        for mu in subpartitions(lam):
            r.cases += 1
            d = sum(lam) - sum(mu)
            lhs = skew_schur_jt(lam, mu, alpha)
            rhs = QSeries.monomial(VAR, (d,), t_power(3 * d) * skew_schur(lam, mu, base))
            if lhs != rhs:
                r.fail(lam=lam, mu=mu)
    return r


def check_conjugation(max_size: int, nu_size: int = 3) -> IdentityResult:
    """s_{lam/mu}(q^(nu+rho)) = (-1)^(|lam|-|mu|) s_{lam^t/mu^t}(q^(-nu^t-rho))."""
    r = IdentityResult("conjugation", params={"max_size": max_size, "nu_size": nu_size})
    for nu in _parts(nu_size):
        for lam in _parts(max_size):
            for mu in subpartitions(lam):
                r.cases += 1
                lhs = skew_schur(lam, mu, principal(nu))
                rhs = skew_schur(lam.conjugate(), mu.conjugate(), principal(nu.conjugate(), True))
                if (sum(lam) - sum(mu)) % 2:
                    rhs = -rhs
                if lhs != rhs:
                    r.fail(lam=lam, mu=mu, nu=nu)
    return r


def check_local_lemmas(max_size: int) -> list[IdentityResult]:
    """The tau-sum transform and the C-product inversion used by the local flop."""
    tau = IdentityResult("tau-sum-transform", params={"max_size": max_size})
    for lams in boundary_tuples(max_size):
        tau.cases += 1
        w = check_sum_lemma(lams)
        if not w.holds:
            tau.fail(boundary=lams, power=w.power)
    prod = IdentityResult("c-product-inversion", params={"max_size": max_size})
    for a, b in _pairs(max_size):
        prod.cases += 1
        w = check_product_lemma(a, b)
        if not w.holds:
            prod.fail(l1=a, l3=b, power=w.power)
    return [tau, prod]


def run_battery(max_size: int = 5, pair_size: int | None = None,
                hook_size: int = 3, hook_cap: int = 4) -> list[IdentityResult]:
    """Every identity at the given sizes, in a fixed order."""
    if pair_size is None:
        pair_size = min(max_size, 4)
    steps = [
        lambda: check_kappa(max_size),
        lambda: check_c_sums(pair_size),
        lambda: check_c_symmetry(pair_size),
        lambda: check_hook_product(min(hook_size, pair_size), hook_cap),
        lambda: check_cauchy(pair_size),
        lambda: check_dual_cauchy(pair_size),
        lambda: check_branching(max_size),
        lambda: check_homogeneity(max_size),
        lambda: check_conjugation(max_size),
    ]
    out = []
    for step in steps:
        start = time.perf_counter()
        res = step()
        res.seconds = time.perf_counter() - start
        out.append(res)
    start = time.perf_counter()
    for res in check_local_lemmas(min(pair_size, 3)):
        res.seconds = time.perf_counter() - start
        out.append(res)
    return out
