"""The topological vertex C_{l1 l2 l3}(q)."""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, kappa, subpartitions
from .qcore import QRational, t_power
from .schur import _skew_principal, schur_rho

__all__ = ["vertex"]


def vertex(l1, l2, l3) -> QRational:
    """C_{l1 l2 l3} = q^(kappa(l3)/2) s_{l2}(q^rho)
    sum_mu s_{l1/mu}(q^(l2^t + rho)) s_{l3^t/mu}(q^(l2 + rho))."""
    return _vertex(Partition(l1), Partition(l2), Partition(l3))


@lru_cache(maxsize=None)
def _vertex(l1, l2, l3):
    l2t, l3t = l2.conjugate(), l3.conjugate()
    total = QRational(0)
    for mu in subpartitions(l1):
        if not l3t.contains(mu):
            continue
        a = _skew_principal(l1, mu, l2t, False)
        if not a:
            continue
        total = total + a * _skew_principal(l3t, mu, l2, False)
    if not total:
        return total
    return t_power(kappa(l3)) * schur_rho(l2) * total
