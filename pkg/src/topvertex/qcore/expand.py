"""Laurent expansion of a QRational around t = 1 in u, where t = e^(u/2)."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ._backend import kernel as K
from .qrational import QRational

__all__ = ["expand_at_unity", "InsufficientOrder"]


class InsufficientOrder(ArithmeticError):
    pass


def _exp_series(coeffs, shift, upto):
    # sum_i c_i exp((shift + i) u / 2) truncated after u^upto
    out = []
    pts = [(Fraction(shift + i, 2), c) for i, c in enumerate(coeffs) if c]
    for m in range(upto + 1):
        s = sum(c * k ** m for k, c in pts)
        out.append(Fraction(s) / factorial(m))
    return out


def expand_at_unity(f: QRational, order: int, precision: int | None = None) -> dict[int, Fraction]:
    """Coefficients of u^k, k <= order, in f(e^(u/2)); zero entries omitted.

    The working precision defaults to one that always suffices, found by
    counting the order of vanishing of numerator and denominator at t = 1.
    """
    f = QRational(f)
    if not f:
        return {}
    n, d, s = f.numerator_coeffs, f.denominator_coeffs, f.shift
    if precision is None:
        a, _ = K.root_multiplicity_at_one(n)
        b, _ = K.root_multiplicity_at_one(d)
        precision = max(order + b, order - a + 2 * b, b) + 1
    num = _exp_series(n, s, precision)
    den = _exp_series(d, 0, precision)
    vb = next((i for i, c in enumerate(den) if c), None)
    if vb is None:
        raise InsufficientOrder("insufficient expansion order")
    va = next((i for i, c in enumerate(num) if c), None)
    if va is None:
        va = precision + 1
    lead = va - vb
    # quotient of u^-va num by u^-vb den, valid through index precision - max(va, vb)
    nn = num[va:]
    dd = den[vb:]
    count = order - lead + 1
    if count <= 0:
        return {}
    usable = min(len(nn), len(dd))
    if count > usable:
        raise InsufficientOrder("insufficient expansion order")
    q = []
    d0 = dd[0]
    for k in range(count):
        acc = nn[k] if k < len(nn) else Fraction(0)
        for j in range(1, min(k, len(dd) - 1) + 1):
            acc -= dd[j] * q[k - j]
        q.append(acc / d0)
    return {lead + k: c for k, c in enumerate(q) if c}
