from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from topvertex.qcore import (InsufficientOrder, QRational, QSeries, Truncation, expand_at_unity,
                             geometric_tail, q_power, series_exp, series_log, t_power)
from topvertex.qcore import _pykernel

T = t_power(1)

small = st.integers(-4, 4)
laurent = st.tuples(st.integers(-3, 3), st.lists(small, min_size=1, max_size=5))


def qr(shift, coeffs):
    return QRational.from_laurent({shift + i: c for i, c in enumerate(coeffs) if c})


rationals = st.builds(lambda a, b: qr(*a) / qr(*b) if qr(*b) else qr(*a), laurent, laurent)
points = st.sampled_from([F(2), F(3), F(1, 3), F(-5, 2), F(7, 4)])


class TestGeometricTail:
    def test_half_step(self):
        assert geometric_tail(F(-1, 2), -1) == 1 / (T - T ** -1)

    def test_integer_start(self):
        assert geometric_tail(0, -1) == 1 / (1 - T ** -2)

    def test_step_two(self):
        assert geometric_tail(-1, -2) == T ** -2 / (1 - T ** -4)

    def test_non_summable(self):
        with pytest.raises(ValueError, match="non-summable"):
            geometric_tail(0, 1)

    def test_partial_sums_converge(self):
        # at t = 3 the tail is a convergent series in 1/q
        x = F(3)
        exact = geometric_tail(F(-1, 2), -1).evaluate(x)
        partial = sum(x ** (-2 * i + 1) for i in range(1, 60))
        assert abs(exact - partial) < F(1, 10 ** 50)


class TestCanonicalForm:
    def test_equal_representations(self):
        a = (T ** 2 - 1) / (T - 1)
        assert a == T + 1
        assert hash(a) == hash(T + 1)

    def test_q_power(self):
        assert q_power(F(1, 2)) == T
        with pytest.raises(ValueError):
            q_power(F(1, 3))

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            T / QRational(0)

    @given(rationals)
    def test_pickle_roundtrip(self, f):
        import pickle
        g = pickle.loads(pickle.dumps(f))
        assert g == f and hash(g) == hash(f)
        assert not QRational(0) and QRational(0) == 0

    @given(rationals, rationals)
    def test_cancel(self, f, g):
        assume(g)
        assert (f * g) / g == f

    @given(rationals, rationals, points)
    def test_evaluation_homomorphism(self, f, g, x):
        try:
            fx, gx = f.evaluate(x), g.evaluate(x)
        except ZeroDivisionError:
            return
        assert (f * g).evaluate(x) == fx * gx
        assert (f + g).evaluate(x) == fx + gx

    @given(rationals, st.integers(-3, 3))
    def test_powers(self, f, k):
        assume(f or k >= 0)
        lhs = f ** k
        rhs = QRational(1)
        for _ in range(abs(k)):
            rhs = rhs * f
        if k < 0:
            rhs = 1 / rhs
        assert lhs == rhs

    @given(rationals)
    def test_invert_t_involution(self, f):
        assert f.invert_t().invert_t() == f


class TestSeries:
    V = ("Q",)

    def test_log_one_plus_q(self):
        tr = Truncation.total(1, 2)
        s = QSeries(self.V, {(0,): 1, (1,): 1}, tr)
        assert series_log(s) == QSeries(self.V, {(1,): 1, (2,): F(-1, 2)}, tr)

    def test_log_one(self):
        tr = Truncation.total(1, 5)
        assert series_log(QSeries.one(self.V, tr)).is_zero()

    def test_log_cancellation(self):
        tr = Truncation.total(1, 3)
        x = QSeries(self.V, {(0,): 1, (1,): -(T ** 2)}, tr)
        assert series_log(x.inverse() * x).is_zero()

    def test_log_non_unital(self):
        with pytest.raises(ValueError, match="non-unital"):
            series_log(QSeries(self.V, {(0,): 2}, Truncation.total(1, 2)))

    def test_truncation_drops_terms(self):
        s = QSeries(self.V, {(0,): 1, (3,): 1}, Truncation.total(1, 2))
        assert s.coefficient((3,)) == 0
        assert len(s) == 1

    def test_weighted_caps(self):
        tr = Truncation(2, [((1, 0), 1), ((1, 2), 3)])
        assert tr.admits((1, 1)) and not tr.admits((0, 2)) and not tr.admits((2, 0))
        with pytest.raises(ValueError):
            Truncation(2, [((1, -1), 1)])

    series2 = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)),
                              st.builds(lambda c, k: QRational(c) * t_power(k), small, st.integers(-2, 2)),
                              max_size=5)

    @given(series2, series2, series2)
    def test_ring_axioms(self, a, b, c):
        tr = Truncation.total(2, 3)
        vs = ("x", "y")
        a, b, c = (QSeries(vs, d, tr) for d in (a, b, c))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @given(series2)
    def test_exp_log(self, d):
        tr = Truncation.total(2, 3)
        d = {k: v for k, v in d.items() if k != (0, 0)}
        s = QSeries(("x", "y"), {(0, 0): 1, **d}, tr)
        assert series_exp(series_log(s)) == s


class TestExpandAtUnity:
    def test_conifold_term(self):
        f = -1 / (T - T ** -1) ** 2
        assert expand_at_unity(f, 2) == {-2: F(-1), 0: F(1, 12), 2: F(-1, 240)}

    def test_constant(self):
        assert expand_at_unity(QRational(1), 4) == {0: F(1)}

    def test_cosh(self):
        assert expand_at_unity(T + T ** -1, 2) == {0: F(2), 2: F(1, 4)}

    def test_insufficient_order(self):
        f = -1 / (T - T ** -1) ** 2
        with pytest.raises(InsufficientOrder):
            expand_at_unity(f, 2, precision=1)

    @given(st.integers(1, 4))
    def test_even_in_u(self, d):
        f = -1 / (t_power(d) - t_power(-d)) ** 2
        assert all(k % 2 == 0 for k in expand_at_unity(f, 6))


polys = st.lists(st.integers(-10 ** 6, 10 ** 6), max_size=30).map(_pykernel.normalize)
big = st.lists(st.integers(-10 ** 30, 10 ** 30), max_size=20).map(_pykernel.normalize)


def _compiled():
    try:
        from topvertex.qcore import _ckernel
    except ImportError:
        pytest.skip("compiled kernel not built")
    return _ckernel


class TestKernels:
    @given(polys, polys)
    def test_mul_schoolbook_agrees(self, a, b):
        r = [0] * max(len(a) + len(b) - 1, 0)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                r[i + j] += x * y
        assert _pykernel.mul(a, b) == _pykernel.normalize(r)

    @given(polys, polys)
    def test_divexact_roundtrip(self, a, b):
        assume(b)
        assert _pykernel.divexact(_pykernel.mul(a, b), b) == a

    @given(polys, polys, polys)
    def test_gcd_contains_common_factor(self, a, b, g):
        assume(a and b and len(g) > 1)
        h = _pykernel.gcd_poly(_pykernel.mul(a, g), _pykernel.mul(b, g))
        assert _pykernel.divexact_or_none(h, _pykernel.primitive(g)) is not None

    @given(st.one_of(polys, big), st.one_of(polys, big))
    def test_compiled_agrees(self, a, b):
        ck = _compiled()
        assert ck.mul(a, b) == _pykernel.mul(a, b)
        assert ck.add(a, b) == _pykernel.add(a, b)
        assert ck.sub(a, b) == _pykernel.sub(a, b)
        assert ck.gcd_poly(a, b) == _pykernel.gcd_poly(a, b)
        if b:
            assert ck.divexact_or_none(a, b) == _pykernel.divexact_or_none(a, b)
            ab = ck.mul(a, b)
            assert ck.divexact(ab, b) == a
        assert ck.root_multiplicity_at_one(a) == _pykernel.root_multiplicity_at_one(a)
        assert ck.primitive(a) == _pykernel.primitive(a)

    def test_backend_switch(self):
        import subprocess
        import sys
        out = subprocess.run(
            [sys.executable, "-c", "from topvertex.qcore import KERNEL; print(KERNEL)"],
            env={"TOPVERTEX_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True)
        assert out.stdout.strip() == "python"
