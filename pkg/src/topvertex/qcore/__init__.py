"""Exact scalars and series: rational functions in t = q^(1/2).

Convention: q^a is stored as t^(2a), so every half-integer q-power in
the vertex formalism becomes an integer t-power.
"""

from . import _backend
from .expand import InsufficientOrder, expand_at_unity
from .qrational import QRational, geometric_tail, q_power, t_power
from .series import QSeries, Truncation, series_exp, series_log

KERNEL = _backend.name

__all__ = [
    "QRational", "QSeries", "Truncation", "geometric_tail", "q_power", "t_power",
    "series_log", "series_exp", "expand_at_unity", "InsufficientOrder", "KERNEL",
]
