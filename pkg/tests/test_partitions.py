import pytest
from hypothesis import given
from hypothesis import strategies as st

from topvertex.partitions import (Partition, c_table, enumerate_partitions, f_mu, f_mu_nu,
                                  hook_exponent, hook_lengths, kappa, partitions_of, subpartitions)
from topvertex.qcore import t_power

T = t_power(1)


@st.composite
def partitions(draw, max_size=8):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(partitions_of(n)))


def test_partition_validation():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    assert str(Partition()) == "[]" and str(Partition([3, 1, 1])) == "[3,1,1]"


@pytest.mark.parametrize("mu,k", [((), 0), ((2,), 2), ((1, 1), -2)])
def test_kappa(mu, k):
    assert kappa(mu) == k


@pytest.mark.parametrize("mu,val", [((), 0), ((1,), 1), ((2,), T ** 2 + 1)])
def test_f_mu(mu, val):
    assert f_mu(mu) == val


@pytest.mark.parametrize("mu,nu,table", [((), (), {}), ((1,), (1,), {-1: 1, 1: 1}),
                                         ((1,), (), {0: 1})])
def test_c_table(mu, nu, table):
    assert c_table(mu, nu) == table


@pytest.mark.parametrize("args,h", [(((), (), 1, 1), -1), (((1,), (1,), 1, 1), 1),
                                    (((2,), (), 1, 2), 0)])
def test_hook_exponent(args, h):
    assert hook_exponent(*args) == h


def test_enumeration():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(2)) == [(), (1,), (2,), (1, 1)]
    assert len(list(enumerate_partitions(4))) == 12
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_enumeration_unique():
    ps = list(enumerate_partitions(7))
    assert len(ps) == len(set(ps))


@given(partitions())
def test_conjugate_involution(mu):
    assert mu.conjugate().conjugate() == mu
    assert sum(mu.conjugate()) == sum(mu)


@given(partitions())
def test_kappa_conjugate(mu):
    assert kappa(mu) % 2 == 0
    assert kappa(mu.conjugate()) == -kappa(mu)


@given(partitions(5), partitions(5))
def test_c_sums(mu, nu):
    table = c_table(mu, nu)
    assert all(v > 0 for v in table.values())
    assert sum(table.values()) == sum(mu) + sum(nu)
    assert 2 * sum(k * v for k, v in table.items()) == kappa(mu) + kappa(nu)


@given(partitions(5), partitions(5))
def test_c_symmetry(mu, nu):
    flipped = {-k: v for k, v in c_table(mu.conjugate(), nu.conjugate()).items()}
    assert c_table(mu, nu) == flipped


@given(partitions(5), partitions(5))
def test_f_mu_nu_matches_rational(mu, nu):
    # the Laurent table against the QRational definition
    q = T ** 2
    expected = (q - 2 + 1 / q) * f_mu(mu) * f_mu(nu) + f_mu(mu) + f_mu(nu)
    table = f_mu_nu(mu, nu)
    got = sum((v * t_power(2 * k) for k, v in table.items()), start=T * 0)
    assert got == expected


@given(partitions(6))
def test_hook_lengths_positive(mu):
    hs = hook_lengths(mu)
    assert len(hs) == sum(mu) and all(h > 0 for h in hs)
    # hook_exponent(mu, mu^t) at a cell is its hook length
    mt = mu.conjugate()
    assert hs == [hook_exponent(mu, mt, i, j) for i, j in mu.cells()]


@given(partitions(6))
def test_subpartitions(mu):
    subs = list(subpartitions(mu))
    assert len(subs) == len(set(subs))
    assert all(mu.contains(s) for s in subs)
    assert () in subs and mu in subs
