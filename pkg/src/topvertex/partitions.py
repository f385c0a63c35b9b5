"""Integer partitions and the statistics used by the vertex formalism."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

from .qcore import QRational

__all__ = [
    "Partition", "kappa", "f_mu", "f_mu_nu", "c_table", "hook_exponent",
    "enumerate_partitions", "partitions_of", "hook_lengths",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts):
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; zero beyond the length."""
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return _conjugate(self)

    @property
    def t(self) -> "Partition":
        return _conjugate(self)

    def contains(self, other) -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def cells(self):
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield i, j

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"Partition({list(self)})"


@lru_cache(maxsize=None)
def _conjugate(mu: Partition) -> Partition:
    if not mu:
        return mu
    return Partition._trusted(tuple(sum(1 for p in mu if p > j) for j in range(mu[0])))


EMPTY = Partition()


def kappa(mu) -> int:
    mu = Partition(mu)
    return sum(mu) + sum(m * (m - 2 * j) for j, m in enumerate(mu, 1))


def f_mu(mu) -> QRational:
    """Content generating function sum over cells (i, j) of q^(j - i)."""
    coeffs: Counter = Counter()
    for i, j in Partition(mu).cells():
        coeffs[2 * (j - i)] += 1
    return QRational.from_laurent(coeffs)


def _f_laurent(mu) -> Counter:
    # f_mu as a Counter over q-exponents
    c: Counter = Counter()
    for i, j in Partition(mu).cells():
        c[j - i] += 1
    return c


def f_mu_nu(mu, nu) -> dict[int, int]:
    """Laurent coefficients (in q) of (q - 2 + 1/q) f_mu f_nu + f_mu + f_nu."""
    fm, fn = _f_laurent(mu), _f_laurent(nu)
    out: Counter = Counter()
    for a, x in fm.items():
        for b, y in fn.items():
            for d, w in ((1, 1), (0, -2), (-1, 1)):
                out[a + b + d] += w * x * y
    out.update(fm)
    out.update(fn)
    return {k: v for k, v in sorted(out.items()) if v}


@lru_cache(maxsize=None)
def _c_table(mu, nu):
    table = f_mu_nu(mu, nu)
    for k, v in table.items():
        if v < 0:
            raise ArithmeticError(
                f"negative coefficient C_{k}({mu},{nu}) = {v}: internal inconsistency")
    return table


def c_table(mu, nu) -> dict[int, int]:
    """The coefficients C_k(mu, nu), keyed by k, zero entries omitted."""
    return dict(_c_table(Partition(mu), Partition(nu)))


def hook_exponent(mu, nu, i: int, j: int) -> int:
    mu, nu = Partition(mu), Partition(nu)
    return mu.part(i) - i + nu.part(j) - j + 1


def hook_lengths(mu) -> list[int]:
    mu = Partition(mu)
    mt = mu.conjugate()
    return [mu[i - 1] - j + mt[j - 1] - i + 1 for i, j in mu.cells()]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse-lexicographic order."""
    if n == 0:
        return (EMPTY,)
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition._trusted(tuple(prefix)))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def enumerate_partitions(max_size: int) -> Iterator[Partition]:
    """All partitions of size <= max_size, sizes ascending."""
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    for n in range(max_size + 1):
        yield from partitions_of(n)


def subpartitions(lam) -> Iterator[Partition]:
    """All mu contained in lam."""
    lam = Partition(lam)

    def rec(i, bound, prefix):
        yield Partition._trusted(tuple(prefix))
        if i == len(lam):
            return
        for p in range(min(bound, lam[i]), 0, -1):
            prefix.append(p)
            yield from rec(i + 1, p, prefix)
            prefix.pop()

    yield from rec(0, lam[0] if lam else 0, [])
