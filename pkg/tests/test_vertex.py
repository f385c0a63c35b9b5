from fractions import Fraction as F

import pytest
from topvertex.oracle import skew_schur_interval, vertex_interval
from topvertex.partitions import enumerate_partitions, partitions_of
from topvertex.qcore import t_power
from topvertex.schur import principal, schur_rho, skew_schur
from topvertex.vertex import vertex

T = t_power(1)
P3 = list(enumerate_partitions(3))
P2 = list(enumerate_partitions(2))


def test_examples():
    assert vertex((), (), ()) == 1
    assert vertex((1,), (), ()) == 1 / (T - T ** -1)
    assert vertex((), (), (1,)) == 1 / (T - T ** -1)


@pytest.mark.parametrize("lam", P3 + list(partitions_of(4)))
def test_single_leg(lam):
    assert vertex(lam, (), ()) == schur_rho(lam)


def test_cyclic_symmetry():
    for a in P3:
        for b in P3:
            for c in P3:
                assert vertex(a, b, c) == vertex(b, c, a), (a, b, c)


def test_transpose_reflection():
    # C_{l1 l2 l3} = q^(sum kappa / 2) C_{l3^t l2^t l1^t}
    from topvertex.partitions import kappa
    for a in P2:
        for b in P2:
            for c in P2:
                k = kappa(a) + kappa(b) + kappa(c)
                assert vertex(a, b, c) == T ** k * vertex(c.t, b.t, a.t)


@pytest.mark.parametrize("t0", [F(2), F(3), F(5, 2)])
def test_oracle_intervals(t0):
    for a in P2:
        for b in P2:
            for c in P2:
                iv = vertex_interval(a, b, c, t0, 30)
                assert iv.contains(vertex(a, b, c).evaluate(t0)), (a, b, c, t0)
                assert iv.width < F(1, 10 ** 15)


def test_oracle_rejects_wrong_value():
    iv = vertex_interval((2,), (), (1,), F(2), 30)
    wrong = vertex((1, 1), (), (1,)).evaluate(F(2))
    assert not iv.contains(wrong)


def test_oracle_bounds_skew():
    iv = skew_schur_interval((2, 1), (1,), (1,), F(3), 20)
    assert iv.contains(skew_schur((2, 1), (1,), principal((1,))).evaluate(F(3)))
    with pytest.raises(ValueError):
        skew_schur_interval((1,), (), (), F(1, 2))
