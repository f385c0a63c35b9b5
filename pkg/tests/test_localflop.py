from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topvertex.localflop import (boundary_tuples, c_product, check_flop_identity,
                                 check_product_lemma, check_sum_lemma, conifold_factor, normalized,
                                 z0, z0_closed, z0_plus, z0_plus_closed)
from topvertex.partitions import enumerate_partitions, partitions_of
from topvertex.qcore import QRational, t_power

T = t_power(1)
Q_OVER = T ** 2 / (1 - T ** 2) ** 2


@st.composite
def partitions(draw, max_size=2):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(partitions_of(n)))


class TestConifold:
    def test_cap0(self):
        assert conifold_factor(0).coefficient((0,)) == 1
        assert len(conifold_factor(0)) == 1

    def test_cap1(self):
        assert conifold_factor(1).coefficient((1,)) == -Q_OVER

    def test_pinned_q2(self):
        # e2 of {q^k with multiplicity k} = (p1^2 - p2)/2 at q = 1/9
        assert conifold_factor(2).coefficient((2,)).evaluate(F(1, 3)) == F(729, 204800)

    def test_truncated_product(self):
        # the finite product up to k = 30 agrees to high order in q at t = 1/3
        q = F(1, 9)
        coeffs = [F(1)]
        for k in range(1, 31):
            for _ in range(k):
                coeffs = [a - (coeffs[i - 1] * q ** k if i else 0)
                          for i, a in enumerate(coeffs + [F(0)])][:4]
        for n in range(4):
            exact = conifold_factor(3).coefficient((n,)).evaluate(F(1, 3))
            assert abs(exact - coeffs[n]) < F(1, 10 ** 25)

    def test_negative_cap(self):
        with pytest.raises(ValueError):
            conifold_factor(-1)


class TestAmplitudes:
    def test_empty_is_conifold(self):
        amp = z0(((), (), (), ()), 2)
        assert list(amp.coeffs) == [conifold_factor(2).coefficient((k,)) for k in range(3)]
        assert z0_plus(((), (), (), ()), 2).coeffs == amp.coeffs

    def test_one_box_degree(self):
        n = normalized(z0(((1,), (), (), ()), 2))
        assert n.degree() == 1

    def test_closed_examples(self):
        assert z0_closed(((), (), (), ())).coeffs == (QRational(1),)
        got = z0_closed(((1,), (), (), ())).coeffs
        s = 1 / (T - T ** -1)
        assert got == (s, -s)

    def test_cap_below_bound(self):
        with pytest.raises(ValueError):
            normalized(z0(((1,), (1,), (), ()), 1))

    def test_boundary_validation(self):
        with pytest.raises(ValueError):
            z0(((), ()))

    @pytest.mark.parametrize("lams", boundary_tuples(2))
    def test_closed_forms(self, lams):
        assert normalized(z0(lams)).coeffs == z0_closed(lams).coeffs
        assert normalized(z0_plus(lams)).coeffs == z0_plus_closed(lams).coeffs

    @given(partitions(), partitions(), partitions(1), partitions(1))
    def test_degree_bound(self, a, b, c, d):
        lams = (a, b, c, d)
        n = sum(map(sum, lams))
        assert normalized(z0_plus(lams)).degree() <= n
        if not c and not d:
            assert normalized(z0_plus(lams)).degree() == sum(a) + sum(b)

    def test_render(self):
        amp = z0_closed(((1,), (), (), ()))
        assert "Q0" in amp.render() and amp.render().count("[") == 2


class TestFlopIdentity:
    def test_empty(self):
        assert check_flop_identity(((), (), (), ())).holds

    def test_one_box(self):
        assert check_flop_identity(((1,), (), (), ())).holds

    def test_all_boxes(self):
        w = check_flop_identity(((1,), (1,), (1,), (1,)))
        assert w.holds

    def test_detects_corruption(self):
        lams = ((1,), (1,), (), ())
        orig = normalized(z0(lams))
        bad = type(orig)(orig.boundary, orig.side, (orig.coeffs[0] * 2,) + orig.coeffs[1:], None)
        w = check_flop_identity(lams, original=bad)
        assert not w.holds and w.power is not None

    @pytest.mark.parametrize("lams", boundary_tuples(2))
    def test_sum_lemma(self, lams):
        assert check_sum_lemma(lams).holds

    def test_product_lemma(self):
        for a in enumerate_partitions(4):
            for b in enumerate_partitions(4):
                assert check_product_lemma(a, b).holds, (a, b)

    def test_c_product(self):
        # (1 - Q q^0)(...) for C_0((1), ()) = 1
        assert c_product((1,), ()) == [QRational(1), QRational(-1)]
