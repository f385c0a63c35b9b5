"""Two local P1xP1 surfaces joined by a (-1,-1)-curve, and the instanton sum.

Three routes to the instanton part Z_inst = Z / Z|_{Q_B1 = Q_B2 = 0}:

* z_inst: the vertex contraction over the fan,
* z_inst_closed: the sum over the four partitions on the B-edges with
  the infinite products reduced to finite C_k products,
* nekrasov_rhs: the SU(2) x SU(2) bifundamental sum of sinh ratios under
  q = e^(-2R hbar), Q_Fk = e^(-4R a_k), Q0 = e^(2R(a_1 + a_2 - m)).

Every series uses the variables VARS below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .partitions import Partition, c_table, enumerate_partitions, f_mu_nu, kappa
from .qcore import QRational, QSeries, Truncation, t_power
from .schur import schur_rho
from .partfun import z_graph
from .toricgeom import Fan, build_graph

__all__ = [
    "VARS", "figure5_fan", "figure5_graph", "instanton_truncation", "z_inst",
    "z_inst_closed", "nekrasov_rhs", "InstantonSum", "regularized_exponents",
    "four_tuples", "compare_series", "FORMS",
]

VARS = ("QB1", "QB2", "QF1", "QF2", "Q0")
_B1, _B2, _F1, _F2, _Q0 = range(5)

_RAYS = ((0, 0), (1, 1), (1, 0), (0, 1), (-1, 0), (0, -1), (2, 1), (1, 2))
_TRIANGLES = ((0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 2),
              (1, 2, 3), (1, 3, 7), (1, 7, 6), (1, 6, 2))
_NAMES = {"Q0": (2, 3), "B1": (0, 3), "B1'": (0, 5), "F1": (0, 2), "F1'": (0, 4),
          "B2": (1, 2), "B2'": (1, 7), "F2": (1, 3), "F2'": (1, 6)}
# class variable carried by each named edge
_EDGE_VAR = {"B1": _B1, "B1'": _B1, "B2": _B2, "B2'": _B2, "F1": _F1, "F1'": _F1,
             "F2": _F2, "F2'": _F2, "Q0": _Q0}


def figure5_fan() -> Fan:
    return Fan.make(_RAYS, _TRIANGLES, _NAMES)


def figure5_graph():
    """The toric graph with the eight outer edges directed to framing -1."""
    fan = figure5_fan()
    g = build_graph(fan)
    directions = {}
    for e in g.edges:
        directions[e.cone] = e.head if e.framing > 0 else e.tail
    return build_graph(fan, directions)


def instanton_truncation(cap: int, fcap: int) -> Truncation:
    """Q_B total degree <= cap, each of Q_F1, Q_F2, Q0 of degree <= fcap."""
    w = [(1, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]
    return Truncation(5, list(zip(w, (cap, fcap, fcap, fcap))))


def _normalize_b(series: QSeries) -> QSeries:
    base = series.restrict(lambda ex: ex[_B1] == 0 and ex[_B2] == 0)
    return series * base.inverse()


def z_inst(cap: int, fcap: int = 2, workers: int | None = None) -> QSeries:
    """Instanton part from the vertex contraction over the fan."""
    g = figure5_graph()
    groups = {}
    for e in g.edges:
        groups.setdefault(_EDGE_VAR[e.name], []).append(e.coords)
    for v, cs in groups.items():
        if len(set(cs)) != 1:
            raise ArithmeticError(f"edges named for {VARS[v]} carry different classes")
    pf = z_graph(g, by_class=True, truncation=_class_truncation(g, cap, fcap), workers=workers)
    order = [_EDGE_VAR[n] for n in pf.variables]
    tr = instanton_truncation(cap, fcap)

    def remap(ex):
        out = [0] * 5
        for v, d in zip(order, ex):
            out[v] = d
        return tuple(out)

    return _normalize_b(pf.series.map_exponents(remap, VARS, tr))


def _class_truncation(g, cap, fcap):
    # the instanton truncation expressed in the by-class variable order
    names = []
    seen = set()
    for e in g.edges:
        if e.coords not in seen:
            seen.add(e.coords)
            names.append(e.name)
    idx = [_EDGE_VAR[n] for n in names]
    base = instanton_truncation(cap, fcap)
    cons = []
    for w, c in base.constraints:
        cons.append(([w[i] for i in idx], c))
    return Truncation(len(names), cons)


# -- closed form ---------------------------------------------------------------

def four_tuples(cap: int):
    """(mu^1_1, mu^1_2, mu^2_1, mu^2_2) with total size <= cap."""
    parts = list(enumerate_partitions(cap))
    for tup in product(parts, repeat=4):
        if sum(sum(p) for p in tup) <= cap:
            yield tup


def _c_series(mu, nu, mono, trunc, power=1):
    """prod_k (1 - Y q^k)^(power * C_k(mu, nu)) with Y the monomial mono."""
    s = QSeries.one(VARS, trunc)
    for k, mult in c_table(mu, nu).items():
        f = QSeries.one(VARS, trunc) - QSeries.monomial(VARS, mono, t_power(2 * k), trunc)
        s = s * f ** mult
    return s.inverse() if power < 0 else s


FORMS = ("displayed", "corrected")


def _check_form(form):
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")


def z_inst_closed(cap: int, fcap: int = 2, form: str = "corrected") -> QSeries:
    """Instanton part from the partition sum over the B-edges.

    Both forms weight Q_Bk by prod (1 - Q_Fk q^k)^(-2 C_k(mu^k_1, mu^k_2^t)).
    "displayed" pairs the B-edges across Q0 through C_k(mu^1_l, mu^2_n^t)
    with prefactor prod s_mu(q^rho)^2; "corrected" uses C_k(mu^1_l, mu^2_n)
    and takes s(q^rho)^2 of the transposed partitions on the two edges
    adjacent to Q0, which is what the vertex contraction produces.
    """
    _check_form(form)
    tr = instanton_truncation(cap, fcap)
    total = QSeries.zero(VARS, tr)
    qf = {1: (0, 0, 1, 0, 0), 2: (0, 0, 0, 1, 0)}
    y = {(1, 1): (0, 0, 1, 1, 1), (1, 2): (0, 0, 1, 0, 1),
         (2, 1): (0, 0, 0, 1, 1), (2, 2): (0, 0, 0, 0, 1)}
    for tup in four_tuples(cap):
        m11, m12, m21, m22 = tup
        mus = {1: (m11, m12), 2: (m21, m22)}
        n1, n2 = sum(m11) + sum(m12), sum(m21) + sum(m22)
        if form == "displayed":
            pref = (schur_rho(m11) * schur_rho(m12) * schur_rho(m21) * schur_rho(m22)) ** 2
        else:
            pref = (schur_rho(m11) * schur_rho(m12.conjugate())
                    * schur_rho(m21) * schur_rho(m22.conjugate())) ** 2
        if not pref:
            continue
        term = QSeries.monomial(VARS, (n1, n2, 0, 0, 0), pref, tr)
        for k in (1, 2):
            term = term * _c_series(mus[k][0], mus[k][1].conjugate(), qf[k], tr, -1) ** 2
        for (l, n), mono in y.items():
            other = mus[2][n - 1]
            if form == "displayed":
                other = other.conjugate()
            term = term * _c_series(mus[1][l - 1], other, mono, tr)
        total = total + term
    return total


# -- the sinh-ratio sum ----------------------------------------------------------

def _window_counts(lam, nu, size, window):
    c: Counter = Counter()
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            a = lam.part(i) - nu.part(j) + j - i
            b = j - i
            if abs(a) <= window:
                c[a] += 1
            if abs(b) <= window:
                c[b] -= 1
    return {k: v for k, v in c.items() if v}


def regularized_exponents(lam, nu) -> dict:
    """Signed multiplicities of k in prod_{i,j} F(lam_i - nu_j + j - i) / F(j - i).

    The truncated double products carry boundary factors near |k| ~ L that
    move with L; inside a fixed window the counts settle once L passes the
    window.  L is increased until two consecutive windows agree past that
    point, and the result is checked against -C_k(lam, nu^t).
    """
    lam, nu = Partition(lam), Partition(nu)
    window = sum(lam) + sum(nu) + len(lam) + len(nu) + 1
    size = max(len(lam), len(nu)) + 1
    prev = None
    while True:
        cur = _window_counts(lam, nu, size, window)
        if cur == prev and size > window + max(len(lam), len(nu)) + (lam[0] if lam else 0) + (nu[0] if nu else 0):
            break
        prev = cur
        size += 1
        if size > 10 * (window + 10):
            raise ArithmeticError(f"double product for {lam}, {nu} does not stabilize")
    want = {k: -v for k, v in f_mu_nu(lam, nu.conjugate()).items()}
    if cur != want:
        raise ArithmeticError(f"regularized exponents for {lam}, {nu} disagree with -C_k")
    return cur


@dataclass(frozen=True)
class InstantonSum:
    cap: int
    fcap: int
    form: str
    tuples: int
    series: QSeries


# monomials e^(-2R a) in doubled exponents (QB1, QB2, sF1, sF2, s0)
def _adjoint_shift(k, l, n):
    out = [0] * 5
    if (l, n) == (1, 2):
        out[_F1 + k - 1] = 2
    elif (l, n) == (2, 1):
        out[_F1 + k - 1] = -2
    return tuple(out)


_BIFUND = {(1, 1): (0, 0, 2, 2, 2), (2, 1): (0, 0, 0, 2, 2),
           (1, 2): (0, 0, 2, 0, 2), (2, 2): (0, 0, 0, 0, 2)}


class _Term:
    """const * monomial * prod (1 - X)^e, exponents of Q doubled throughout."""

    def __init__(self):
        self.const = QRational(1)
        self.two = 0
        self.mono = [0] * 5
        self.factors: Counter = Counter()

    def sinh_power(self, a, k, e):
        # sinh R(x)^e with e^(-2Rx) = A q^k, A given by doubled exponents a
        if not e:
            return
        self.two -= e
        deg = sum(a[2:])
        if deg == 0 and not any(a):
            if k == 0:
                raise ZeroDivisionError("sinh(0) survives regularization")
            self.const = self.const * (t_power(-k) - t_power(k)) ** e
            return
        if deg > 0:
            # X^(-e/2); doubled exponents of X are even, so e * x / 2 is integral
            self.mono = [m - e * x // 2 for m, x in zip(self.mono, a)]
            self.const = self.const * t_power(-k * e)
            self.factors[(tuple(a), k)] += e
        else:
            # -X^(1/2) (1 - X^-1): flip to a positive monomial
            self.mono = [m + e * x // 2 for m, x in zip(self.mono, a)]
            self.const = self.const * t_power(k * e)
            if e % 2:
                self.const = -self.const
            self.factors[(tuple(-x for x in a), -k)] += e


def _rhs_term(m11, m12, m21, m22, form):
    mus = {1: (m11, m12), 2: (m21, m22)}
    term = _Term()
    sizes = {k: sum(mus[k][0]) + sum(mus[k][1]) for k in (1, 2)}
    total = sizes[1] + sizes[2]
    # (Q_Bk / (2^4 Q_Fk))^(|mu^k_1| + |mu^k_2|)
    for k in (1, 2):
        term.mono[k - 1] += 2 * sizes[k]
        term.mono[_F1 + k - 1] -= 2 * sizes[k]
        term.two -= 4 * sizes[k]
    for k in (1, 2):
        for l, n in product((1, 2), repeat=2):
            a = _adjoint_shift(k, l, n)
            x, y = mus[k][l - 1], mus[k][n - 1]
            if form == "corrected" and k == 2:
                x, y = x.conjugate(), y.conjugate()
            for kk, e in regularized_exponents(x, y).items():
                term.sinh_power(a, kk, e)
    term.const = term.const * t_power(kappa(m11) + kappa(m12) - kappa(m21) - kappa(m22))
    term.two += 2 * total
    term.mono[_Q0] += 2 * total
    term.mono[_F1] += 2 * sum(m11) + sum(m21) + sum(m22)
    term.mono[_F2] += sum(m11) + sum(m12) + 2 * sum(m21)
    for l, n in product((1, 2), repeat=2):
        b = _BIFUND[(l, n)]
        for kk, e in regularized_exponents(mus[1][l - 1], mus[2][n - 1]).items():
            term.sinh_power(b, kk, -e)
    return term


def nekrasov_rhs(cap: int, fcap: int = 2, form: str = "displayed") -> InstantonSum:
    """The sinh-ratio instanton sum, expanded in the instanton truncation.

    The vector factor of gauge group k runs over
    sinh R(a_ln + hbar (mu^k_{l,i} - mu^k_{n,j} + j - i)) / sinh R(a_ln + hbar (j - i)).
    "displayed" uses it for both groups; "corrected" evaluates it on the
    transposed partitions for the second group, i.e. with hbar -> -hbar
    there, matching the sign of its kappa prefactor.

    Exponents of the Q variables are doubled so that X^(1/2) stays integral;
    every half-integer power must cancel in the total.
    """
    _check_form(form)
    tr = instanton_truncation(cap, fcap)
    doubled: dict = {}
    count = 0
    for tup in four_tuples(cap):
        count += 1
        term = _rhs_term(*tup, form)
        if term.two:
            raise ArithmeticError(f"powers of 2 fail to cancel for {tup}: 2^{term.two}")
        shift = term.mono
        caps = [None, None, 2 * fcap, 2 * fcap, 2 * fcap]
        room = [None if c is None else c - s for c, s in zip(caps, shift)]
        if any(r is not None and r < 0 for r in room):
            # every factor only raises the Q_F, Q0 degrees
            continue
        if shift[_B1] + shift[_B2] > 2 * cap:
            continue
        sub = Truncation(5, [([0, 0, 1, 0, 0], room[2]), ([0, 0, 0, 1, 0], room[3]),
                             ([0, 0, 0, 0, 1], room[4]), ([1, 1, 0, 0, 0], 0)])
        s = QSeries.monomial(VARS, (0,) * 5, term.const, sub)
        for (a, k), e in sorted(term.factors.items()):
            f = QSeries.one(VARS, sub) - QSeries.monomial(VARS, a, t_power(2 * k), sub)
            s = s * (f ** e if e > 0 else f.inverse() ** (-e))
        for ex, c in s.items():
            key = tuple(x + y for x, y in zip(ex, shift))
            v = doubled.get(key)
            v = c if v is None else v + c
            if v:
                doubled[key] = v
            else:
                doubled.pop(key, None)
    terms = {}
    for key, c in doubled.items():
        if any(x % 2 for x in key) or min(key) < 0:
            raise ArithmeticError(f"non-integral power {key} survives in the instanton sum")
        ex = tuple(x // 2 for x in key)
        if tr.admits(ex):
            terms[ex] = c
    return InstantonSum(cap, fcap, form, count, QSeries(VARS, terms, tr))


def compare_series(a: QSeries, b: QSeries):
    """First exponent (in sorted order) where two series differ, or None."""
    for ex in sorted(set(e for e, _ in a.items()) | set(e for e, _ in b.items())):
        x, y = a.coefficient(ex), b.coefficient(ex)
        if x != y:
            return ex, x, y
    return None
