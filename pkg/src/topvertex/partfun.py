"""Global partition functions, free energies and Gromov-Witten invariants.

Z_X sums, over assignments of partitions to internal edges, the product
of edge factors (-1)^(|l|(n+1)) q^(kappa(l) n / 2) Q_e^|l| and one vertex
factor per trivalent vertex.  The sum is evaluated as a contraction: the
vertices are visited in a fixed order and the open edges form a frontier
whose partition assignments index the partial sums.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import EMPTY, Partition, kappa, partitions_of
from .qcore import QRational, QSeries, Truncation, expand_at_unity, series_log, t_power
from .toricgeom import (Fan, ToricGraph, blowup, build_graph, cone_key, flop,
                        grading_weights, ks_fan)
from .vertex import vertex

__all__ = [
    "PartitionFunction", "GWTable", "z_fan", "z_graph", "gw_extract", "edge_factor",
    "FlopComparison", "check_flop_global", "BlowupReport", "check_blowup", "worker_count",
]


def worker_count(default: int = 1) -> int:
    raw = os.environ.get("TOPVERTEX_WORKERS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


@dataclass(frozen=True)
class PartitionFunction:
    graph: ToricGraph
    variables: tuple              # variable names
    var_edges: tuple              # per variable, the edge indices it tracks
    var_coords: tuple             # per variable, homology coordinates of one edge
    truncation: Truncation
    series: QSeries

    def variable_of_edge(self):
        return {e: i for i, es in enumerate(self.var_edges) for e in es}


def edge_factor(lam, framing) -> QRational:
    lam = Partition(lam)
    f = t_power(kappa(lam) * framing)
    return -f if (sum(lam) * (framing + 1)) % 2 else f


def _vertex_order(graph):
    n = len(graph.vertices)
    nbrs = {v: set() for v in range(n)}
    for e in graph.edges:
        nbrs[e.tail].add(e.head)
        nbrs[e.head].add(e.tail)
    done, order = set(), []
    while len(order) < n:
        cands = [v for v in range(n) if v not in done]
        # most links into the processed set, then fewest new edges opened
        best = min(cands, key=lambda v: (-len(nbrs[v] & done), len(nbrs[v] - done), v))
        order.append(best)
        done.add(best)
    return order


def _edge_size_bounds(var, cons, room):
    hi = None
    for (w, _), r in zip(cons, room):
        if w[var] > 0:
            b = r // w[var]
            hi = b if hi is None else min(hi, b)
    if hi is None:
        raise ValueError("truncation does not bound every variable")
    return max(hi, -1)


def _assignments(opening, room, cons, var_of):
    """Partitions for the opening edges fitting in the remaining room."""
    if not opening:
        yield ()
        return
    e, rest = opening[0], opening[1:]
    v = var_of[e]
    hi = _edge_size_bounds(v, cons, room)
    for k in range(hi + 1):
        left = tuple(r - k * w[v] for (w, _), r in zip(cons, room))
        tails = list(_assignments(rest, left, cons, var_of))
        for lam in partitions_of(k):
            for tail in tails:
                yield (lam,) + tail


def _contract(graph, var_of, nvars, trunc, first_filter=None):
    cons = trunc.constraints
    order = _vertex_order(graph)
    edges = graph.edges
    zero_exp = (0,) * nvars
    frontier: tuple = ()
    states = {(): {zero_exp: QRational(1)}}
    for step, v in enumerate(order):
        vert = graph.vertices[v]
        inc = [h[1] for h in vert.cyclic if h[0] == "edge"]
        opening = tuple(e for e in inc if e not in frontier)
        keep = tuple(e for e in frontier if e not in inc)
        new_frontier = keep + opening
        nxt: dict = {}
        for key, poly in states.items():
            assign = dict(zip(frontier, key))
            loads = [min(sum(wi * xi for wi, xi in zip(w, ex)) for ex in poly) for w, _ in cons]
            room = tuple(cap - l for (_, cap), l in zip(cons, loads))
            for idx, choice in enumerate(_assignments(opening, room, cons, var_of)):
                if step == 0 and first_filter is not None and not first_filter(idx):
                    continue
                full = dict(assign)
                full.update(zip(opening, choice))
                lams = []
                for kind, x in vert.cyclic:
                    if kind == "leg":
                        lams.append(EMPTY)
                    else:
                        lam = full[x]
                        lams.append(lam if edges[x].tail == v else lam.conjugate())
                scalar = vertex(*lams)
                if not scalar:
                    continue
                shift = list(zero_exp)
                for e, lam in zip(opening, choice):
                    if lam:
                        scalar = scalar * edge_factor(lam, edges[e].framing)
                        shift[var_of[e]] += sum(lam)
                nkey = tuple(full[e] for e in new_frontier)
                target = nxt.setdefault(nkey, {})
                for ex, c in poly.items():
                    ne = tuple(a + b for a, b in zip(ex, shift))
                    if not trunc.admits(ne):
                        continue
                    val = c * scalar
                    prev = target.get(ne)
                    val = val if prev is None else prev + val
                    if val:
                        target[ne] = val
                    elif prev is not None:
                        del target[ne]
                if not target:
                    del nxt[nkey]
        states = nxt
        frontier = new_frontier
    return states.get((), {})


def _worker(args):
    graph, var_of, nvars, trunc, k, workers = args
    return _contract(graph, var_of, nvars, trunc, lambda i: i % workers == k)


def _variables(graph, by_class):
    if not by_class:
        names = tuple(e.name for e in graph.edges)
        groups = tuple((e.index,) for e in graph.edges)
        coords = tuple(e.coords for e in graph.edges)
        return names, groups, coords
    byc: dict = {}
    for e in graph.edges:
        byc.setdefault(e.coords, []).append(e.index)
    names, groups, coords = [], [], []
    for c, es in byc.items():
        names.append(graph.edges[es[0]].name)
        groups.append(tuple(es))
        coords.append(c)
    return tuple(names), tuple(groups), tuple(coords)


def z_graph(graph: ToricGraph, cap: int | None = None, by_class: bool = False,
            truncation: Truncation | None = None, workers: int | None = None) -> PartitionFunction:
    names, groups, coords = _variables(graph, by_class)
    nvars = len(names)
    if truncation is None:
        if cap is None or cap < 0:
            raise ValueError("cap must be a nonnegative integer")
        truncation = Truncation.total(nvars, cap)
    var_of = {e: i for i, es in enumerate(groups) for e in es}
    workers = worker_count() if workers is None else workers
    if workers > 1 and nvars:
        from concurrent.futures import ProcessPoolExecutor
        jobs = [(graph, var_of, nvars, truncation, k, workers) for k in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_worker, jobs))
        terms: dict = {}
        for part in parts:
            for e, c in part.items():
                terms[e] = terms[e] + c if e in terms else c
    else:
        terms = _contract(graph, var_of, nvars, truncation)
    series = QSeries(names, terms, truncation)
    return PartitionFunction(graph, names, groups, coords, truncation, series)


def z_fan(fan: Fan, cap: int | None = None, by_class: bool = False,
          truncation: Truncation | None = None, directions=None,
          workers: int | None = None) -> PartitionFunction:
    """Partition function truncated at total edge degree cap by default."""
    return z_graph(build_graph(fan, directions), cap, by_class, truncation, workers)


# -- Gromov-Witten invariants ---------------------------------------------------

@dataclass(frozen=True)
class GWTable:
    genus_max: int
    entries: dict                 # (g, class coords) -> Fraction
    classes: tuple                # complete classes, sorted
    basis: tuple                  # l-vectors of the coordinate basis
    free_energies: dict = field(default_factory=dict, compare=False)

    def get(self, g, beta) -> Fraction:
        return self.entries.get((g, tuple(beta)), Fraction(0))

    def rows(self):
        for beta in self.classes:
            for g in range(self.genus_max + 1):
                yield beta, g, self.get(g, beta)

    def to_tsv(self) -> str:
        lines = ["class\tgenus\tN"]
        for beta, g, n in self.rows():
            lines.append(f"{','.join(map(str, beta))}\t{g}\t{n}")
        return "\n".join(lines) + "\n"


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _class_of(ex, var_coords):
    k = len(var_coords[0]) if var_coords else 0
    beta = (0,) * k
    for d, c in zip(ex, var_coords):
        if d:
            beta = _add(beta, tuple(d * x for x in c))
    return beta


def _incomplete_classes(pf, targets, grading):
    """Classes in targets reached by some multidegree the truncation dropped."""
    vw = [sum(a * b for a, b in zip(grading, c)) for c in pf.var_coords]
    kmax = max((sum(a * b for a, b in zip(grading, t)) for t in targets), default=0)
    bad = set()
    n = len(vw)
    trunc = pf.truncation

    def rec(i, ex, weight):
        if i == n:
            if not trunc.admits(ex):
                beta = _class_of(ex, pf.var_coords)
                if beta in targets:
                    bad.add(beta)
            return
        d = 0
        while weight + d * vw[i] <= kmax:
            rec(i + 1, ex + (d,), weight + d * vw[i])
            d += 1

    rec(0, (), 0)
    return bad


def gw_extract(pf: PartitionFunction, genus_max: int) -> GWTable:
    """N_{g,beta} = (-1)^(g-1) [u^(2g-2)] F_beta(e^u) for complete classes beta."""
    if genus_max < 0:
        raise ValueError("genus_max must be nonnegative")
    hb = pf.graph.basis
    if not pf.variables:
        return GWTable(genus_max, {}, (), hb.basis)
    logz = series_log(pf.series)
    fb: dict = {}
    for ex, c in logz.items():
        beta = _class_of(ex, pf.var_coords)
        fb[beta] = fb[beta] + c if beta in fb else c
    grading = grading_weights(hb, pf.var_coords)
    # every class some admitted multidegree reaches, including ones with F_beta = 0
    targets = {_class_of(ex, pf.var_coords) for ex in _exponents(pf.truncation)}
    targets.discard(tuple(0 for _ in hb.basis))
    targets |= {b for b, f in fb.items() if f}
    incomplete = _incomplete_classes(pf, targets, grading)
    entries = {}
    classes = []
    order = 2 * genus_max - 2
    for beta in sorted(targets - incomplete, key=lambda b: (sum(x * y for x, y in zip(grading, b)), b)):
        f = fb.get(beta, QRational(0))
        coeffs = expand_at_unity(f, max(order, -2))
        for k, v in coeffs.items():
            if k % 2:
                raise ArithmeticError(f"odd power u^{k} in F_{list(beta)}: internal inconsistency")
            if k < -2:
                raise ArithmeticError(f"pole u^{k} beyond order 2 in F_{list(beta)}")
        classes.append(beta)
        for g in range(genus_max + 1):
            v = coeffs.get(2 * g - 2, Fraction(0))
            if v:
                entries[(g, beta)] = v if g % 2 else -v
    return GWTable(genus_max, entries, tuple(classes), hb.basis,
                   {b: fb.get(b, QRational(0)) for b in classes})


# -- global flop ---------------------------------------------------------------

@dataclass(frozen=True)
class FlopComparison:
    holds: bool
    compared: int
    vanishing_checked: int
    witness: dict | None = None

    def as_dict(self):
        return {"holds": self.holds, "compared": self.compared,
                "vanishing_checked": self.vanishing_checked, "witness": self.witness}


def _normalized_by_q0(pf, q0):
    """Z divided by its restriction to the Q0 variable alone."""
    s = pf.series
    only = s.restrict(lambda ex: all(d == 0 for i, d in enumerate(ex) if i != q0))
    return s * only.inverse()


def _flop_truncation(nvars, q0, cap):
    others = [0 if i == q0 else 1 for i in range(nvars)]
    alone = [1 if i == q0 else 0 for i in range(nvars)]
    return Truncation(nvars, [(others, cap), (alone, cap)])


def _exponents(trunc):
    """Every exponent vector admitted by a bounded truncation."""
    n = trunc.nvars

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        d = 0
        while True:
            cand = prefix + [d] + [0] * (n - len(prefix) - 1)
            if not trunc.admits(cand):
                break
            yield from rec(prefix + [d])
            d += 1

    yield from rec([])


def check_flop_global(fan: Fan, cone, cap: int, workers: int | None = None) -> FlopComparison:
    """Normalized Z of the flopped fan against the re-expanded original."""
    cone = cone_key(*cone)
    fr = flop(fan, cone)
    g_x, g_p = build_graph(fan), build_graph(fr.fan)
    n = len(g_x.edges)
    q0 = g_x.edge_by_cone(cone).index
    q0p = g_p.edge_by_cone(fr.new_cone).index
    zx = z_graph(g_x, truncation=_flop_truncation(n, q0, cap), workers=workers)
    zp = z_graph(g_p, truncation=_flop_truncation(n, q0p, cap), workers=workers)
    nx, np_ = _normalized_by_q0(zx, q0), _normalized_by_q0(zp, q0p)
    # edge correspondence through the shared 2-cones
    to_plus = {}
    for e in g_x.edges:
        if e.index == q0:
            continue
        to_plus[e.index] = g_p.edge_by_cone(e.cone).index
    adjacent = [e for e in g_x.edges if e.index != q0 and fr.class_map[e.cone].get(fr.new_cone)]
    adj_idx = {e.index for e in adjacent}
    adj_plus = {to_plus[i] for i in adj_idx}

    def image(ex):
        out = [0] * n
        for i, d in enumerate(ex):
            if i != q0:
                out[to_plus[i]] = d
        out[q0p] = sum(ex[i] for i in adj_idx) - ex[q0]
        return tuple(out)

    vanishing = compared = 0
    for side, series, trunc, z, adj in (("original", nx, zx.truncation, q0, adj_idx),
                                        ("flopped", np_, zp.truncation, q0p, adj_plus)):
        for ex in _exponents(trunc):
            if ex[z] > sum(ex[i] for i in adj):
                vanishing += 1
                c = series.coefficient(ex)
                if c:
                    return FlopComparison(False, compared, vanishing,
                                          {"side": side, "multidegree": list(ex),
                                           "coefficient": str(c)})
    for ex in _exponents(zx.truncation):
        ey = image(ex)
        if min(ey) < 0 or not zp.truncation.admits(ey):
            continue
        a, b = nx.coefficient(ex), np_.coefficient(ey)
        compared += 1
        if a != b:
            return FlopComparison(False, compared, vanishing,
                                  {"multidegree": list(ex), "flopped_multidegree": list(ey),
                                   "original": str(a), "flopped": str(b)})
    return FlopComparison(True, compared, vanishing)


# -- blowups ---------------------------------------------------------------------

@dataclass(frozen=True)
class BlowupReport:
    holds: bool
    vanishing: list               # (class, genus) checked for part (i)
    matched: list                 # (class hat, class, genus) checked for part (ii)
    exceptional: list             # (d, genus) checked for part (iii)
    failures: list

    def as_dict(self):
        def fmt(rows):
            return [[list(x) if isinstance(x, tuple) else x for x in r] for r in rows]
        return {"holds": self.holds, "vanishing": fmt(self.vanishing),
                "matched": fmt(self.matched), "exceptional": fmt(self.exceptional),
                "failures": self.failures}


def _conifold_gw(g, d):
    """N_{g,d} of a (-1,-1)-curve from F_d = -1/(d (q^(d/2) - q^(-d/2))^2)."""
    f = -((t_power(d) - t_power(-d)) ** -2) * QRational(Fraction(1, d))
    v = expand_at_unity(f, 2 * g - 2).get(2 * g - 2, Fraction(0))
    return v if g % 2 else -v


def _gw_by_lvector(table, fan):
    from .toricgeom import homology_basis
    hb = homology_basis(fan)
    out = {}
    for beta in table.classes:
        lv = hb.l_vector(beta)
        for g in range(table.genus_max + 1):
            out[(lv, g)] = table.get(g, beta)
    return out


def check_blowup(surface, cone, cap: int, genus_max: int = 1,
                 workers: int | None = None) -> BlowupReport:
    """Compare GW tables of K_S and of the canonical bundle over its blowup."""
    fan_s = ks_fan(surface)
    new_rays = blowup(surface, cone)
    fan_b = ks_fan(new_rays)
    e_ray = (cone[0][0] + cone[1][0], cone[0][1] + cone[1][1])
    ie = fan_b.ray_index(e_ray)
    e_cone = cone_key(0, ie)

    g_s = build_graph(fan_s)
    pf_s = z_graph(g_s, cap=cap, by_class=True, workers=workers)
    tab_s = gw_extract(pf_s, genus_max)

    g_b = build_graph(fan_b)
    hb = g_b.basis
    e_coords = g_b.edge_by_cone(e_cone).coords
    # weighted cap big enough for every pulled-back class of degree <= cap
    names, groups, coords = _variables(g_b, True)
    grading = grading_weights(hb, coords)
    need = 0
    for beta in tab_s.classes:
        lv_s = g_s.basis.l_vector(beta)
        lv_b = _pullback(lv_s, fan_s, fan_b, ie)
        need = max(need, sum(a * b for a, b in zip(grading, hb.express(lv_b))))
    need = max(need, cap * sum(a * b for a, b in zip(grading, e_coords)))
    weights = [sum(a * b for a, b in zip(grading, c)) for c in coords]
    trunc = Truncation.total(len(names), need, weights)
    pf_b = z_graph(g_b, by_class=True, truncation=trunc, workers=workers)
    tab_b = gw_extract(pf_b, genus_max)

    vanishing, matched, exceptional, failures = [], [], [], []
    s_by_lv = _gw_by_lvector(tab_s, fan_s)
    for beta in tab_b.classes:
        lv = hb.l_vector(beta)
        e_deg = lv[ie]
        multiple_of_e = _is_multiple(beta, e_coords)
        for g in range(genus_max + 1):
            val = tab_b.get(g, beta)
            if multiple_of_e is not None:
                if multiple_of_e <= cap:
                    want = _conifold_gw(g, multiple_of_e)
                    exceptional.append((multiple_of_e, g))
                    if val != want:
                        failures.append({"part": "iii", "class": list(beta), "genus": g,
                                         "value": str(val), "expected": str(want)})
            elif e_deg < 0:
                vanishing.append((beta, g))
                if val or tab_b.free_energies[beta]:
                    failures.append({"part": "i", "class": list(beta), "genus": g, "value": str(val)})
            elif e_deg == 0:
                lv_s = tuple(x for i, x in enumerate(lv) if i != ie)
                lv_s = _reorder(lv_s, fan_b, fan_s, ie)
                if (lv_s, g) not in s_by_lv:
                    continue
                want = s_by_lv[(lv_s, g)]
                matched.append((beta, g_s.basis.express(lv_s), g))
                if val != want:
                    failures.append({"part": "ii", "class": list(beta), "genus": g,
                                     "value": str(val), "expected": str(want)})
    return BlowupReport(not failures, vanishing, matched, exceptional, failures)


def _is_multiple(beta, e):
    d = None
    for b, x in zip(beta, e):
        if x == 0:
            if b:
                return None
            continue
        if b % x:
            return None
        k = b // x
        if d is None:
            d = k
        elif d != k:
            return None
    return d if d and d > 0 else None


def _reorder(lv_minus_e, fan_b, fan_s, ie):
    # rays of fan_b without the exceptional ray, mapped to fan_s ray order
    rays_b = [r for i, r in enumerate(fan_b.rays) if i != ie]
    vals = dict(zip(rays_b, lv_minus_e))
    return tuple(vals[r] for r in fan_s.rays)


def _pullback(lv_s, fan_s, fan_b, ie):
    # the pulled-back class pairs to zero with E; other entries agree
    vals = dict(zip(fan_s.rays, lv_s))
    return tuple(0 if i == ie else vals[r] for i, r in enumerate(fan_b.rays))
