import pytest

from topvertex import identities as I
from topvertex.qcore import t_power


def test_battery_small():
    results = I.run_battery(max_size=3)
    assert [r.name for r in results] == [
        "kappa", "c-sums", "c-symmetry", "hook-product", "cauchy", "dual-cauchy",
        "branching", "homogeneity", "conjugation", "tau-sum-transform", "c-product-inversion"]
    for r in results:
        assert r.holds, r.as_dict()
        assert r.cases > 0


def test_result_dict():
    r = I.check_kappa(3)
    d = r.as_dict()
    assert d["name"] == "kappa" and d["failures"] == 0 and d["cases"] == r.cases


# Each mutation below must be caught; otherwise the check would be vacuous.

def test_shifted_c_table_caught(monkeypatch):
    real = I.c_table
    monkeypatch.setattr(I, "c_table", lambda mu, nu: {k + 1: v for k, v in real(mu, nu).items()})
    assert not I.check_c_sums(3).holds
    assert not I.check_c_symmetry(3).holds


def test_wrong_c_product_caught(monkeypatch):
    real = I.c_product
    monkeypatch.setattr(I, "c_product", lambda mu, nu: real(nu, mu.conjugate()))
    r = I.check_hook_product(2, 3)
    assert not r.holds and r.witness


def test_wrong_jacobi_trudi_caught(monkeypatch):
    real = I.skew_schur_jt
    monkeypatch.setattr(I, "skew_schur_jt", lambda lam, mu, a: real(lam.conjugate(), mu.conjugate(), a))
    assert not I.check_branching(3).holds


def test_hook_log_empty():
    # the empty pair reduces to the conifold factor
    s = I.hook_product_log((), (), 2)
    x = t_power(2)
    assert s.coefficient((1,)) == -x / (1 - x) ** 2


@pytest.mark.parametrize("check", [I.check_cauchy, I.check_dual_cauchy])
def test_cauchy_sizes(check):
    r = check(2, cap=2)
    assert r.holds and r.params == {"max_size": 2, "cap": 2}
