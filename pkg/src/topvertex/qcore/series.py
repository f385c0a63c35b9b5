"""Truncated multivariate power series with QRational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .qrational import QRational

__all__ = ["Truncation", "QSeries", "series_log", "series_exp"]


class Truncation:
    """A conjunction of weighted-degree caps.

    An exponent vector e is kept when sum(w[i] * e[i]) <= cap for every
    (w, cap) constraint.  Weights are nonnegative integers.
    """

    __slots__ = ("nvars", "constraints")

    def __init__(self, nvars: int, constraints: Iterable[tuple[Sequence[int], int]] = ()):
        cons = []
        for w, cap in constraints:
            w = tuple(int(x) for x in w)
            if len(w) != nvars:
                raise ValueError("weight vector length does not match variables")
            if any(x < 0 for x in w):
                raise ValueError("truncation weights must be nonnegative")
            cons.append((w, int(cap)))
        self.nvars = nvars
        self.constraints = tuple(cons)

    @classmethod
    def total(cls, nvars, cap, weights=None):
        w = tuple(weights) if weights is not None else (1,) * nvars
        return cls(nvars, [(w, cap)])

    @classmethod
    def box(cls, caps):
        n = len(caps)
        cons = []
        for i, c in enumerate(caps):
            if c is None:
                continue
            w = [0] * n
            w[i] = 1
            cons.append((w, c))
        return cls(n, cons)

    @classmethod
    def none(cls, nvars):
        return cls(nvars, ())

    def __and__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("truncations over different variable counts")
        return Truncation(self.nvars, self.constraints + other.constraints)

    def admits(self, e) -> bool:
        for w, cap in self.constraints:
            s = 0
            for wi, ei in zip(w, e):
                s += wi * ei
            if s > cap:
                return False
        return True

    def slack(self, e):
        """Remaining budget per constraint for exponent e."""
        return tuple(cap - sum(wi * ei for wi, ei in zip(w, e))
                     for w, cap in self.constraints)

    def is_bounded(self) -> bool:
        covered = [False] * self.nvars
        for w, _ in self.constraints:
            for i, x in enumerate(w):
                if x > 0:
                    covered[i] = True
        return all(covered)

    def __eq__(self, other):
        return isinstance(other, Truncation) and self.nvars == other.nvars \
            and set(self.constraints) == set(other.constraints)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.constraints)))

    def __repr__(self):
        return f"Truncation({self.nvars}, {list(self.constraints)})"


class QSeries:
    """Power series in named variables, truncated by a Truncation.

    Terms live in a dict from exponent tuples to nonzero QRationals.  No
    stored term violates the truncation.
    """

    __slots__ = ("variables", "trunc", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None,
                 trunc: Truncation | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        self.trunc = trunc if trunc is not None else Truncation.none(n)
        if self.trunc.nvars != n:
            raise ValueError("truncation does not match variables")
        out = {}
        if terms:
            adm = self.trunc.admits
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e}")
                c = QRational(c)
                if c and adm(e):
                    out[e] = c
        self.terms = out

    @classmethod
    def _raw(cls, variables, terms, trunc):
        obj = object.__new__(cls)
        obj.variables = variables
        obj.trunc = trunc
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, variables, trunc=None):
        n = len(variables)
        return cls(variables, {(0,) * n: QRational(1)}, trunc)

    @classmethod
    def zero(cls, variables, trunc=None):
        return cls(variables, {}, trunc)

    @classmethod
    def monomial(cls, variables, exps, coeff=1, trunc=None):
        return cls(variables, {tuple(exps): coeff}, trunc)

    @classmethod
    def variable(cls, variables, name, trunc=None):
        e = [0] * len(variables)
        e[list(variables).index(name)] = 1
        return cls(variables, {tuple(e): 1}, trunc)

    # -- inspection -------------------------------------------------------

    def _zero_exp(self):
        return (0,) * len(self.variables)

    def constant_term(self) -> QRational:
        return self.terms.get(self._zero_exp(), QRational(0))

    def coefficient(self, exps) -> QRational:
        return self.terms.get(tuple(exps), QRational(0))

    def __getitem__(self, exps):
        return self.coefficient(exps)

    def items(self):
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self, weights=None):
        if not self.terms:
            return None
        w = weights or (1,) * len(self.variables)
        return max(sum(a * b for a, b in zip(w, e)) for e in self.terms)

    # -- helpers ----------------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError("series over different variables")

    def _meet(self, other):
        if self.trunc == other.trunc:
            return self.trunc
        return self.trunc & other.trunc

    def _coerce(self, other):
        if isinstance(other, QSeries):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QRational)):
            return QSeries(self.variables, {self._zero_exp(): other}, self.trunc)
        return None

    def truncate(self, trunc: Truncation) -> "QSeries":
        adm = trunc.admits
        return QSeries._raw(self.variables,
                            {e: c for e, c in self.terms.items() if adm(e)}, trunc)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        tr = self._meet(o)
        adm = tr.admits
        out = {e: c for e, c in self.terms.items() if adm(e)}
        for e, c in o.terms.items():
            if not adm(e):
                continue
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return QSeries._raw(self.variables, out, tr)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(self.variables, {e: -c for e, c in self.terms.items()},
                            self.trunc)

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

    def scale(self, c) -> "QSeries":
        c = QRational(c)
        if not c:
            return QSeries._raw(self.variables, {}, self.trunc)
        return QSeries._raw(self.variables, {e: v * c for e, v in self.terms.items()},
                            self.trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QRational)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check(other)
        tr = self._meet(other)
        return QSeries._raw(self.variables, _mul_terms(self.terms, other.terms, tr), tr)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.one(self.variables, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        if not self.trunc.is_bounded():
            raise ValueError("inverse needs a truncation bounding every variable")
        inv0 = c0.inverse()
        x = (self.scale(inv0) - 1)
        # 1/(1+x) = sum (-x)^n, x nilpotent under the truncation
        total = QSeries.one(self.variables, self.trunc)
        power = QSeries.one(self.variables, self.trunc)
        mx = -x
        while True:
            power = power * mx
            if power.is_zero():
                break
            total = total + power
        return total.scale(inv0)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QRational)):
            return self.scale(QRational(other).inverse())
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QRational)):
            other = self._coerce(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- transforms -------------------------------------------------------

    def map_exponents(self, fn: Callable, variables: Sequence[str],
                      trunc: Truncation | None = None) -> "QSeries":
        """Re-index terms through fn: old exponent tuple -> new tuple or None."""
        out = {}
        tr = trunc if trunc is not None else Truncation.none(len(variables))
        adm = tr.admits
        for e, c in self.terms.items():
            ne = fn(e)
            if ne is None:
                continue
            ne = tuple(ne)
            if any(x < 0 for x in ne):
                raise ValueError(f"negative exponent {ne} after re-indexing")
            if not adm(ne):
                continue
            v = out.get(ne)
            v = c if v is None else v + c
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return QSeries._raw(tuple(variables), out, tr)

    def map_coefficients(self, fn) -> "QSeries":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return QSeries._raw(self.variables, out, self.trunc)

    def restrict(self, predicate) -> "QSeries":
        return QSeries._raw(self.variables,
                            {e: c for e, c in self.terms.items() if predicate(e)},
                            self.trunc)

    # -- rendering --------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self.variables, e) if k)
            parts.append(f"[{c}]" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"QSeries({self.render()})"


def _mul_terms(a, b, trunc):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    cons = trunc.constraints
    if not cons:
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e)
                p = ca * cb
                out[e] = p if v is None else v + p
        return {e: c for e, c in out.items() if c}
    # precompute constraint loads
    la = [(ea, ca, [sum(w * x for w, x in zip(ws, ea)) for ws, _ in cons]) for ea, ca in a.items()]
    lb = [(eb, cb, [sum(w * x for w, x in zip(ws, eb)) for ws, _ in cons]) for eb, cb in b.items()]
    caps = [c for _, c in cons]
    idx = range(len(caps))
    for ea, ca, wa in la:
        room = [caps[i] - wa[i] for i in idx]
        if any(r < 0 for r in room):
            continue
        for eb, cb, wb in lb:
            ok = True
            for i in idx:
                if wb[i] > room[i]:
                    ok = False
                    break
            if not ok:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            p = ca * cb
            v = out.get(e)
            out[e] = p if v is None else v + p
    return {e: c for e, c in out.items() if c}


def series_log(s: QSeries) -> QSeries:
    """Formal logarithm of a series with constant term 1."""
    if s.constant_term() != 1:
        raise ValueError("log of non-unital series")
    if not s.trunc.is_bounded():
        raise ValueError("log needs a truncation bounding every variable")
    x = s - 1
    total = QSeries.zero(s.variables, s.trunc)
    power = QSeries.one(s.variables, s.trunc)
    n = 0
    while True:
        n += 1
        power = power * x
        if power.is_zero():
            break
        term = power.scale(Fraction(1 if n % 2 else -1, n))
        total = total + term
    return total


def series_exp(s: QSeries) -> QSeries:
    """Formal exponential of a series with zero constant term."""
    if s.constant_term():
        raise ValueError("exp of series with nonzero constant term")
    if not s.trunc.is_bounded():
        raise ValueError("exp needs a truncation bounding every variable")
    total = QSeries.one(s.variables, s.trunc)
    power = QSeries.one(s.variables, s.trunc)
    n = 0
    while True:
        n += 1
        power = (power * s).scale(Fraction(1, n))
        if power.is_zero():
            break
        total = total + power
    return total
