"""The eleven acceptance criteria, each at exact equality.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``
to print one PASS/FAIL line per criterion.
"""

from fractions import Fraction as F

import pytest

from topvertex import localflop, nekrasov, partfun, toricgeom
from topvertex.identities import check_hook_product, hook_product_log, run_battery
from topvertex.partitions import enumerate_partitions
from topvertex.qcore import QSeries, Truncation, expand_at_unity, series_exp, series_log

P2_SURFACE = [(1, 0), (0, 1), (-1, -1)]


def criterion_1():
    results = run_battery(max_size=5, pair_size=4)
    bad = [r.name for r in results if not r.holds]
    cases = sum(r.cases for r in results)
    return not bad, f"{len(results)} identity families, {cases} cases" + (f", failing {bad}" if bad else "")


def criterion_2():
    r = check_hook_product(max_size=3, cap=4)
    empty = localflop.conifold_factor(4)
    canary = series_exp(hook_product_log((), (), 4)) == empty
    return r.holds and canary, f"{r.cases} pairs up to Q^4, empty canary {'ok' if canary else 'BROKEN'}"


def _raw_vs_closed(lams, closed_fn, raw_fn):
    n = sum(map(sum, lams))
    cap = n + 2
    raw = raw_fn(lams, cap)
    closed = closed_fn(lams)
    tr = Truncation.total(1, cap)
    poly = QSeries(("Q",), {(k,): c for k, c in enumerate(closed.coeffs) if c}, tr)
    lhs = QSeries(("Q",), {(k,): c for k, c in enumerate(raw.coeffs) if c}, tr)
    return lhs == localflop.conifold_factor(cap) * poly


def criterion_3():
    tuples = localflop.boundary_tuples(4)
    bad = [t for t in tuples
           if not (_raw_vs_closed(t, localflop.z0_closed, localflop.z0)
                   and _raw_vs_closed(t, localflop.z0_plus_closed, localflop.z0_plus))]
    return not bad, f"{len(tuples)} boundary tuples, both sides" + (f", first failure {bad[0]}" if bad else "")


def criterion_4():
    tuples = localflop.boundary_tuples(4)
    bad = []
    for t in tuples:
        n = sum(map(sum, t))
        for amp in (localflop.z0(t), localflop.z0_plus(t)):
            if localflop.normalized(amp).degree() > n:
                bad.append(("bound", t, amp.side))
    exact = 0
    for l1 in enumerate_partitions(4):
        for l2 in enumerate_partitions(4 - sum(l1)):
            t = (l1, l2, (), ())
            exact += 1
            for amp in (localflop.z0(t), localflop.z0_plus(t)):
                if localflop.normalized(amp).degree() != sum(l1) + sum(l2):
                    bad.append(("exact", t, amp.side))
    return not bad, f"bound on {len(tuples)} tuples, exact degree on {exact}" + (f", first failure {bad[0]}" if bad else "")


def criterion_5():
    tuples = localflop.boundary_tuples(4)
    bad = [t for t in tuples if not localflop.check_flop_identity(t).holds]
    return not bad, f"{len(tuples)} boundary tuples" + (f", first failure {bad[0]}" if bad else "")


def criterion_6():
    pf = partfun.z_fan(toricgeom.load_fan("conifold"), 3, by_class=True)
    tab = partfun.gw_extract(pf, 2)
    bad = []
    for d in (1, 2, 3):
        want = {0: F(1, d ** 3), 1: F(1, 12 * d), 2: F(d, 240)}
        for g, v in want.items():
            if tab.get(g, (d,)) != v:
                bad.append((g, d, tab.get(g, (d,)), v))
    return not bad, "N_{g,d} for g<=2, d<=3" + (f", mismatches {bad}" if bad else "")


def criterion_7():
    pf = partfun.z_fan(toricgeom.load_fan("local_p2"), 3, by_class=True)
    tab = partfun.gw_extract(pf, 0)
    got = [tab.get(0, (d,)) for d in (1, 2, 3)]
    want = [F(3), F(-45, 8), F(244, 9)]
    return got == want, f"N_0,d = {', '.join(map(str, got))}"


def criterion_8():
    f1 = toricgeom.load_fan("local_f1")
    a = partfun.check_flop_global(f1, f1.resolve_edge("E"), 3)
    f5 = nekrasov.figure5_fan()
    b = partfun.check_flop_global(f5, f5.resolve_edge("Q0"), 3)
    ok = a.holds and b.holds and a.vanishing_checked > 0 and b.vanishing_checked > 0
    return ok, (f"local F1: {a.compared} compared, {a.vanishing_checked} vanishing; "
                f"two-P1xP1 geometry: {b.compared} compared, {b.vanishing_checked} vanishing")


def criterion_9():
    rep = partfun.check_blowup(P2_SURFACE, [(1, 0), (0, 1)], 3, genus_max=1)
    ok = rep.holds and rep.vanishing and rep.matched and rep.exceptional
    return bool(ok), (f"{len(rep.vanishing)} vanishing, {len(rep.matched)} matched, "
                      f"{len(rep.exceptional)} exceptional checks"
                      + (f", failures {rep.failures[:2]}" if rep.failures else ""))


def _nekrasov(form):
    bad = []
    for cap in (0, 1, 2):
        lhs = nekrasov.z_inst(cap, 2)
        rhs = nekrasov.nekrasov_rhs(cap, 2, form=form).series
        w = nekrasov.compare_series(lhs, rhs)
        if w is not None:
            bad.append((cap, w))
    return bad


def criterion_10():
    """The instanton sum as displayed, with only the forced index reading."""
    bad = _nekrasov("displayed")
    if not bad:
        return True, "caps 0..2, fiber cap 2"
    cap, w = bad[0]
    ex, lhs, rhs = w
    return False, (f"displayed form differs from z_inst first at cap {cap}, "
                   f"exponent {list(ex)} (QB1,QB2,QF1,QF2,Q0): {lhs} vs {rhs}; "
                   f"lower caps agree; see README")


def criterion_10_corrected():
    bad = _nekrasov("corrected")
    return not bad, "corrected instanton sum, caps 0..2, fiber cap 2" + (f", failure {bad[0]}" if bad else "")


def criterion_10_closed():
    bad = [cap for cap in (0, 1, 2)
           if nekrasov.compare_series(nekrasov.z_inst(cap, 2),
                                      nekrasov.z_inst_closed(cap, 2, "corrected")) is not None]
    return not bad, "corrected closed partition sum, caps 0..2" + (f", failing caps {bad}" if bad else "")


def _odd_free(fan, cap):
    pf = partfun.z_fan(fan, cap, by_class=True)
    logz = series_log(pf.series)
    n = 0
    for _, c in logz.items():
        n += 1
        if any(k % 2 for k in expand_at_unity(c, 4)):
            return False, n
    return True, n


def criterion_11():
    notes, ok = [], True
    for name in ("conifold", "local_p2", "figure5"):
        g = toricgeom.build_graph(toricgeom.load_fan(name))
        same = partfun.z_graph(g, 2).series == partfun.z_graph(g.reversed(), 2).series
        ok &= same
        notes.append(f"reverse {name} {'ok' if same else 'FAIL'}")
    flips = 0
    for name in ("conifold", "local_f1", "figure5"):
        fan = toricgeom.load_fan(name)
        for cone in fan.interior_cones():
            if toricgeom.curve_class(fan, cone).is_minus_one_minus_one:
                res = toricgeom.flop(fan, cone)
                back = toricgeom.flop(res.fan, res.new_cone).fan
                ok &= back == fan
                flips += 1
    notes.append(f"{flips} flops involutive")
    terms = 0
    for name, cap in (("conifold", 4), ("local_p2", 3), ("local_p1xp1", 3),
                      ("local_f1", 3), ("figure5", 2)):
        good, n = _odd_free(toricgeom.load_fan(name), cap)
        ok &= good
        terms += n
    notes.append(f"{terms} log coefficients even in u")
    return ok, "; ".join(notes)


CRITERIA = [
    ("1", criterion_1), ("2", criterion_2), ("3", criterion_3), ("4", criterion_4),
    ("5", criterion_5), ("6", criterion_6), ("7", criterion_7), ("8", criterion_8),
    ("9", criterion_9), ("10", criterion_10), ("10.corrected", criterion_10_corrected),
    ("10.closed", criterion_10_closed), ("11", criterion_11),
]


@pytest.mark.parametrize("key,fn", [c for c in CRITERIA if c[0] != "10"], ids=[c[0] for c in CRITERIA if c[0] != "10"])
def test_criterion(key, fn, record_criterion):
    ok, detail = fn()
    assert record_criterion(key, ok, detail), detail


@pytest.mark.xfail(strict=True, reason="displayed instanton sum disagrees with the vertex result from cap 2")
def test_criterion_10_displayed(record_criterion):
    ok, detail = criterion_10()
    assert record_criterion("10", ok, detail), detail


if __name__ == "__main__":
    for key, fn in CRITERIA:
        ok, detail = fn()
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
