"""Fans of toric Calabi-Yau threefolds and their toric graphs.

A fan is given by its slice at height one: 2D integer points (rays) and
triangles (3-cones) on them.  Curve classes are integer vectors indexed
by rays, the intersection numbers of the curve with the toric divisors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

__all__ = [
    "Fan", "Violation", "ValidationReport", "CurveClass", "GraphEdge", "GraphVertex",
    "ToricGraph", "FlopResult", "FanError", "validate", "curve_class", "build_graph", "flop",
    "ks_fan", "blowup", "homology_basis", "HomologyBasis", "fan_from_json",
    "fan_to_json", "load_fan", "cone_key", "sort_surface_rays", "grading_weights",
]


class FanError(ValueError):
    """Raised for malformed fans or surgery requests; carries a payload."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


def cone_key(a, b):
    return (a, b) if a < b else (b, a)


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def _orient(p, q, r):
    return _det(_sub(q, p), _sub(r, p))


@dataclass(frozen=True)
class Fan:
    rays: tuple
    triangles: tuple
    edge_names: tuple = ()   # pairs (name, (a, b))

    @classmethod
    def make(cls, rays, triangles, edge_names=None):
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        triangles = tuple(tuple(sorted(int(i) for i in t)) for t in triangles)
        names = ()
        if edge_names:
            names = tuple(sorted((str(n), cone_key(*map(int, c))) for n, c in dict(edge_names).items()))
        return cls(rays, triangles, names)

    @property
    def names(self) -> dict:
        return {n: c for n, c in self.edge_names}

    def name_of(self, cone) -> str:
        cone = cone_key(*cone)
        for n, c in self.edge_names:
            if c == cone:
                return n
        return f"{cone[0]}-{cone[1]}"

    def resolve_edge(self, name) -> tuple:
        """Edge name (or 'i-j' / 'i,j') to a 2-cone key."""
        names = self.names
        if name in names:
            return names[name]
        for sep in ("-", ","):
            if sep in str(name):
                try:
                    a, b = (int(x) for x in str(name).split(sep))
                    return cone_key(a, b)
                except ValueError:
                    pass
        raise FanError(f"unknown edge {name!r}", valid_names=sorted(self.edge_labels()))

    def ccw_triangles(self):
        out = []
        for a, b, c in self.triangles:
            if _orient(self.rays[a], self.rays[b], self.rays[c]) < 0:
                b, c = c, b
            out.append((a, b, c))
        return tuple(out)

    def cone_map(self) -> dict:
        """2-cone key -> list of triangle indices containing it."""
        m: dict = {}
        for ti, (a, b, c) in enumerate(self.triangles):
            for x, y in ((a, b), (b, c), (c, a)):
                m.setdefault(cone_key(x, y), []).append(ti)
        return m

    def interior_cones(self):
        return sorted(k for k, v in self.cone_map().items() if len(v) == 2)

    def boundary_cones(self):
        return sorted(k for k, v in self.cone_map().items() if len(v) == 1)

    def edge_labels(self):
        return [self.name_of(c) for c in self.interior_cones()]

    def ray_index(self, point) -> int:
        point = tuple(point)
        try:
            return self.rays.index(point)
        except ValueError:
            raise FanError(f"no ray at {list(point)}") from None


# -- validation --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    cone: tuple
    detail: str

    def as_dict(self):
        return {"kind": self.kind, "cone": list(self.cone), "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def valid(self) -> bool:
        return not self.violations

    def as_dict(self):
        return {"valid": self.valid, "violations": [v.as_dict() for v in self.violations]}


def _interiors_overlap(t1, t2) -> bool:
    # separating-axis test on closed half-planes through each triangle side
    for tri, other in ((t1, t2), (t2, t1)):
        p = tri
        if _orient(*p) < 0:
            p = (p[0], p[2], p[1])
        for i in range(3):
            a, b = p[i], p[(i + 1) % 3]
            if all(_orient(a, b, q) <= 0 for q in other):
                return False
    return True


def validate(fan: Fan) -> ValidationReport:
    out: list[Violation] = []
    rays, tris = fan.rays, fan.triangles
    n = len(rays)
    seen: dict = {}
    for i, r in enumerate(rays):
        if len(r) != 2:
            out.append(Violation("bad-ray", (i,), f"ray {i} is not a 2D integer point"))
            continue
        if r in seen:
            out.append(Violation("duplicate-ray", (seen[r], i), f"rays {seen[r]} and {i} coincide"))
        else:
            seen[r] = i
    if not tris:
        out.append(Violation("empty", (), "fan has no triangles"))
    good = []
    tri_seen: dict = {}
    for ti, t in enumerate(tris):
        if len(t) != 3 or len(set(t)) != 3 or any(not 0 <= i < n for i in t):
            out.append(Violation("bad-triangle", tuple(t), f"triangle {ti} has invalid indices"))
            continue
        key = tuple(sorted(t))
        if key in tri_seen:
            out.append(Violation("duplicate-triangle", tuple(t),
                                 f"triangles {tri_seen[key]} and {ti} coincide"))
            continue
        tri_seen[key] = ti
        d = _orient(rays[t[0]], rays[t[1]], rays[t[2]])
        if d == 0:
            out.append(Violation("degenerate", tuple(t), f"triangle {ti} is degenerate"))
            continue
        if abs(d) != 1:
            out.append(Violation("non-unimodular", tuple(t), f"triangle {ti} has det = {abs(d)}"))
        good.append(ti)
    if out:
        return ValidationReport(tuple(out))
    used = {i for t in tris for i in t}
    for i in range(n):
        if i not in used:
            out.append(Violation("unused-ray", (i,), f"ray {i} lies in no triangle"))
    cmap = fan.cone_map()
    for k, ts in sorted(cmap.items()):
        if len(ts) > 2:
            out.append(Violation("non-manifold", k, f"2-cone {list(k)} lies in {len(ts)} triangles"))
    for i, j in combinations(range(len(tris)), 2):
        p1 = tuple(rays[x] for x in tris[i])
        p2 = tuple(rays[x] for x in tris[j])
        if _interiors_overlap(p1, p2):
            out.append(Violation("overlap", tuple(tris[i]) + tuple(tris[j]),
                                 f"triangles {i} and {j} overlap"))
    if out:
        return ValidationReport(tuple(out))
    # simply connected support: connected, boundary one simple cycle, Euler char 1
    adj: dict = {i: set() for i in range(len(tris))}
    for ts in cmap.values():
        if len(ts) == 2:
            adj[ts[0]].add(ts[1])
            adj[ts[1]].add(ts[0])
    stack, comp = [0], {0}
    while stack:
        for y in adj[stack.pop()]:
            if y not in comp:
                comp.add(y)
                stack.append(y)
    if len(comp) != len(tris):
        out.append(Violation("disconnected", (), "triangles do not form a connected region"))
    bnd = [k for k, ts in cmap.items() if len(ts) == 1]
    deg: dict = {}
    for a, b in bnd:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    pinched = sorted(v for v, d in deg.items() if d != 2)
    if pinched:
        out.append(Violation("pinched-boundary", tuple(pinched), "boundary is not a simple cycle"))
    else:
        nb: dict = {}
        for a, b in bnd:
            nb.setdefault(a, []).append(b)
            nb.setdefault(b, []).append(a)
        start = bnd[0][0]
        prev, cur, steps = None, start, 0
        while True:
            nxt = nb[cur][0] if nb[cur][0] != prev else nb[cur][1]
            prev, cur = cur, nxt
            steps += 1
            if cur == start:
                break
        if steps != len(bnd):
            out.append(Violation("not-simply-connected", (), "boundary has several components"))
    chi = len(used) - len(cmap) + len(tris)
    if chi != 1 and not out:
        out.append(Violation("not-simply-connected", (), f"Euler characteristic {chi} != 1"))
    return ValidationReport(tuple(out))


def _require_valid(fan):
    rep = validate(fan)
    if not rep.valid:
        raise FanError("invalid fan", report=rep.as_dict())


# -- curve classes -----------------------------------------------------------

@dataclass(frozen=True)
class CurveClass:
    cone: tuple
    l_vector: tuple
    degrees: tuple            # (a', b') at the cone's two rays, in cone order
    basis_coords: tuple = ()

    @property
    def is_minus_one_minus_one(self):
        return self.degrees == (-1, -1)


def curve_class(fan: Fan, cone) -> CurveClass:
    a, b = cone_key(*cone)
    ts = fan.cone_map().get((a, b), [])
    if len(ts) != 2:
        raise FanError("not an interior 2-cone", cone=[a, b])
    (c,) = set(fan.triangles[ts[0]]) - {a, b}
    (d,) = set(fan.triangles[ts[1]]) - {a, b}
    va, vb, vc, vd = (fan.rays[i] for i in (a, b, c, d))
    # v_c + v_d + x v_a + y v_b = 0 with x + y = -2
    rhs = (2 * vb[0] - vc[0] - vd[0], 2 * vb[1] - vc[1] - vd[1])
    diff = _sub(va, vb)
    k = 0 if diff[0] else 1
    x = Fraction(rhs[k], diff[k])
    if x.denominator != 1 or x * diff[1 - k] != rhs[1 - k]:
        raise FanError("curve class equation has no integral solution", cone=[a, b])
    x = int(x)
    y = -2 - x
    lv = [0] * len(fan.rays)
    lv[c] += 1
    lv[d] += 1
    lv[a] += x
    lv[b] += y
    # A . l = 0 check
    for comp in (0, 1):
        if sum(lv[i] * fan.rays[i][comp] for i in range(len(lv))):
            raise FanError("curve class fails the linear relation", cone=[a, b])
    if sum(lv) != 0:
        raise FanError("curve class fails the height relation", cone=[a, b])
    return CurveClass((a, b), tuple(lv), (x, y))


# -- homology basis ----------------------------------------------------------

@dataclass(frozen=True)
class HomologyBasis:
    basis: tuple                  # rows: l-vectors spanning the lattice
    coords: dict                  # cone -> coordinate tuple

    @property
    def rank(self):
        return len(self.basis)

    def l_vector(self, coords):
        n = len(self.basis[0]) if self.basis else 0
        return tuple(sum(c * row[i] for c, row in zip(coords, self.basis)) for i in range(n))

    def express(self, lv):
        return _solve_coords(self.basis, lv)


def _hermite_rows(rows):
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        # euclid on column col
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                f = r[col] // piv[col]
                for i in range(ncols):
                    r[i] -= f * piv[i]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-v for v in piv]
        rows = [r for r in rows if r is not piv and any(r)]
        out.append(piv)
        col += 1
    # reduce entries above pivots
    for i, r in enumerate(out):
        p = next(k for k, v in enumerate(r) if v)
        for j in range(i):
            f = out[j][p] // r[p]
            if f:
                out[j] = [x - f * y for x, y in zip(out[j], r)]
    return [tuple(r) for r in out]


def homology_basis(fan: Fan) -> HomologyBasis:
    """Integral basis of the span of the edge classes.

    Edge classes themselves are preferred as basis vectors (greedily, in
    edge order) whenever they generate the whole lattice, so that curve
    classes get nonnegative coordinates; otherwise the Hermite rows are used.
    """
    cones = fan.interior_cones()
    lvs = {c: curve_class(fan, c).l_vector for c in cones}
    hermite = tuple(_hermite_rows(lvs.values()))
    basis = hermite
    chosen: list = []
    for c in cones:
        if len(_hermite_rows(chosen + [lvs[c]])) > len(chosen):
            chosen.append(lvs[c])
    if len(chosen) == len(hermite) and _same_lattice(chosen, hermite):
        basis = tuple(chosen)
    coords = {c: _solve_coords(basis, lv) for c, lv in lvs.items()}
    return HomologyBasis(basis, coords)


def _same_lattice(rows, hermite):
    try:
        for h in hermite:
            _solve_coords(rows, h)
    except FanError:
        return False
    return True


def _solve_coords(basis, lv):
    # exact rational solve, then insist on integrality
    import sympy
    m = sympy.Matrix([list(r) for r in basis]).T
    sol, params = m.gauss_jordan_solve(sympy.Matrix(list(lv)))
    if params.shape[0]:
        raise FanError("basis is not independent")
    out = []
    for x in sol:
        if not x.is_integer:
            raise FanError("vector not in the lattice", vector=list(lv))
        out.append(int(x))
    return tuple(out)


def grading_weights(hb: HomologyBasis, class_coords: Iterable[tuple]):
    """Integer functional g with g . x >= 1 on every listed class.

    Minimizes the total weight with a linear program and rescales the
    optimum to integers; every multidegree summing to a class beta then
    has weighted degree g . beta, which makes caps on g . beta complete.
    """
    xs = sorted(set(class_coords))
    k = hb.rank
    if k == 0:
        return ()
    small = _grading_search(xs, k, 3)
    if small is not None:
        return small
    from scipy.optimize import linprog
    c = [sum(x[i] for x in xs) for i in range(k)]
    res = linprog(c, A_ub=[[-v for v in x] for x in xs], b_ub=[-1] * len(xs),
                  bounds=[(None, None)] * k, method="highs")
    if not res.success:
        raise FanError("no positive grading exists for these curve classes")
    fr = [Fraction(v).limit_denominator(1000) for v in res.x]
    den = 1
    for f in fr:
        den = den * f.denominator // math.gcd(den, f.denominator)
    g = tuple(int(f * den) for f in fr)
    if any(sum(a * b for a, b in zip(g, x)) < 1 for x in xs):
        raise FanError("grading search failed")
    return g


def _grading_search(xs, k, box):
    from itertools import product
    best = None
    for g in product(range(-box, box + 1), repeat=k):
        vals = [sum(a * b for a, b in zip(g, x)) for x in xs]
        if min(vals) < 1:
            continue
        key = (sum(vals), tuple(-abs(v) for v in g), g)
        if best is None or key < best[0]:
            best = (key, g)
    return best[1] if best else None


# -- toric graph ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphEdge:
    index: int
    name: str
    cone: tuple
    tail: int                 # triangle the edge leaves
    head: int                 # triangle the edge enters
    rho1: int                 # ray on the right of the direction of travel
    rho2: int
    framing: int
    l_vector: tuple
    coords: tuple


@dataclass(frozen=True)
class GraphVertex:
    triangle: int
    # counterclockwise incident half-edges: ("edge", index) or ("leg", cone)
    cyclic: tuple


@dataclass(frozen=True)
class ToricGraph:
    fan: Fan
    vertices: tuple
    edges: tuple
    legs: tuple
    basis: HomologyBasis

    def edge_by_cone(self, cone):
        cone = cone_key(*cone)
        for e in self.edges:
            if e.cone == cone:
                return e
        raise FanError(f"no internal edge for cone {list(cone)}")

    def reversed(self) -> "ToricGraph":
        """Same graph with every internal edge direction flipped."""
        edges = tuple(GraphEdge(e.index, e.name, e.cone, e.head, e.tail, e.rho2, e.rho1,
                                -e.framing, e.l_vector, e.coords) for e in self.edges)
        return ToricGraph(self.fan, self.vertices, edges, self.legs, self.basis)

    def as_dict(self):
        return {
            "vertices": [{"triangle": list(self.fan.triangles[v.triangle]),
                          "cyclic": [[k, x if k == "edge" else list(x)] for k, x in v.cyclic]}
                         for v in self.vertices],
            "edges": [{"name": e.name, "cone": list(e.cone), "from": e.tail, "to": e.head,
                       "rho1": e.rho1, "rho2": e.rho2, "framing": e.framing,
                       "l_vector": list(e.l_vector), "class": list(e.coords)}
                      for e in self.edges],
            "legs": [list(c) for c in self.legs],
            "basis": [list(b) for b in self.basis.basis],
        }


def _framing(fan, cone, tail, lv):
    a, b = cone
    (c,) = set(fan.triangles[tail]) - {a, b}
    va, vb, vc = fan.rays[a], fan.rays[b], fan.rays[c]
    side = _sub(vb, va)
    normal = (side[1], -side[0])
    # outward normal points away from c
    if normal[0] * (vc[0] - va[0]) + normal[1] * (vc[1] - va[1]) > 0:
        normal = (-normal[0], -normal[1])
    right = (normal[1], -normal[0])
    pa = va[0] * right[0] + va[1] * right[1]
    pb = vb[0] * right[0] + vb[1] * right[1]
    rho1, rho2 = (a, b) if pa > pb else (b, a)
    diff = lv[rho1] - lv[rho2]
    if diff % 2:
        raise FanError("odd framing difference", cone=list(cone))
    return rho1, rho2, diff // 2


def build_graph(fan: Fan, directions: dict | None = None) -> ToricGraph:
    """Dual graph with framings.

    Edges default to pointing from the lower-indexed triangle to the
    higher one; directions maps a cone to its tail triangle to override.
    """
    _require_valid(fan)
    cmap = fan.cone_map()
    hb = homology_basis(fan)
    edges = []
    index_of = {}
    for i, cone in enumerate(fan.interior_cones()):
        t0, t1 = sorted(cmap[cone])
        if directions and cone in directions:
            tail = directions[cone]
            if tail not in (t0, t1):
                raise FanError("direction tail is not adjacent to the edge", cone=list(cone))
            head = t1 if tail == t0 else t0
        else:
            tail, head = t0, t1
        cc = curve_class(fan, cone)
        r1, r2, n = _framing(fan, cone, tail, cc.l_vector)
        edges.append(GraphEdge(i, fan.name_of(cone), cone, tail, head, r1, r2, n,
                               cc.l_vector, hb.coords[cone]))
        index_of[cone] = i
    verts = []
    for ti, (a, b, c) in enumerate(fan.ccw_triangles()):
        halves = []
        for x, y in ((a, b), (b, c), (c, a)):
            k = cone_key(x, y)
            halves.append(("edge", index_of[k]) if k in index_of else ("leg", k))
        # start from the smallest-index internal edge, keeping cyclic order
        keys = [(0, h[1]) if h[0] == "edge" else (1, h[1]) for h in halves]
        s = keys.index(min(keys))
        verts.append(GraphVertex(ti, tuple(halves[s:] + halves[:s])))
    legs = tuple(fan.boundary_cones())
    return ToricGraph(fan, tuple(verts), tuple(edges), legs, hb)


# -- surgeries -----------------------------------------------------------------

@dataclass(frozen=True)
class FlopResult:
    fan: Fan
    cone: tuple
    new_cone: tuple
    class_map: dict           # X cone -> {X+ cone: coefficient}
    framing_shift: dict       # side cone -> framing(X+) - framing(X)


def flop(fan: Fan, cone) -> FlopResult:
    _require_valid(fan)
    cone = cone_key(*cone)
    cc = curve_class(fan, cone)
    if not cc.is_minus_one_minus_one:
        raise FanError("flop undefined", cone=list(cone), degrees=list(cc.degrees))
    a, b = cone
    t1, t2 = fan.cone_map()[cone]
    (c,) = set(fan.triangles[t1]) - {a, b}
    (d,) = set(fan.triangles[t2]) - {a, b}
    tris = list(fan.triangles)
    tris[t1] = (a, c, d)
    tris[t2] = (b, c, d)
    new_cone = cone_key(c, d)
    names = dict(fan.names)
    for n, k in list(names.items()):
        if k == cone:
            names[n] = new_cone
    new = Fan.make(fan.rays, tris, names)
    adjacent = {cone_key(a, c), cone_key(b, c), cone_key(a, d), cone_key(b, d)}
    interior_new = set(new.interior_cones())
    cmap = {}
    for k in fan.interior_cones():
        if k == cone:
            cmap[k] = {new_cone: -1}
        elif k in adjacent:
            cmap[k] = {k: 1, new_cone: 1}
        else:
            cmap[k] = {k: 1}
        for target in cmap[k]:
            if target not in interior_new:
                raise FanError("flop class map leaves the interior", cone=list(k))
    # framings of the four quadrilateral sides, each directed away from it
    shifts = {}
    old_map, new_map = fan.cone_map(), new.cone_map()
    for k in sorted(adjacent & set(fan.interior_cones())):
        tail_old = next(t for t in old_map[k] if t in (t1, t2))
        tail_new = next(t for t in new_map[k] if t in (t1, t2))
        n_old = _framing(fan, k, tail_old, curve_class(fan, k).l_vector)[2]
        n_new = _framing(new, k, tail_new, curve_class(new, k).l_vector)[2]
        shifts[k] = n_new - n_old
    return FlopResult(new, cone, new_cone, cmap, shifts)


def sort_surface_rays(rays):
    rays = [tuple(int(x) for x in r) for r in rays]
    return sorted(rays, key=lambda v: math.atan2(v[1], v[0]) % (2 * math.pi))


def _check_surface(rays):
    if len(rays) < 3:
        raise FanError("surface fan needs at least three rays")
    if len(set(rays)) != len(rays):
        raise FanError("duplicate surface rays")
    for i in range(len(rays)):
        u, v = rays[i], rays[(i + 1) % len(rays)]
        d = _det(u, v)
        if d <= 0:
            raise FanError("surface fan is not complete", cone=[list(u), list(v)])
        if d != 1:
            raise FanError("surface fan is not smooth", cone=[list(u), list(v)], det=d)


def ks_fan(surface, edge_names=None) -> Fan:
    """Fan of the canonical bundle over a smooth complete toric surface."""
    rays = sort_surface_rays(surface)
    _check_surface(rays)
    allr = [(0, 0)] + rays
    n = len(rays)
    tris = [(0, 1 + i, 1 + (i + 1) % n) for i in range(n)]
    return Fan.make(allr, tris, edge_names)


def blowup(surface, cone) -> list:
    """Insert v_i + v_j between two adjacent rays of a surface fan."""
    rays = sort_surface_rays(surface)
    _check_surface(rays)
    u, v = (tuple(int(x) for x in r) for r in cone)
    n = len(rays)
    for i in range(n):
        a, b = rays[i], rays[(i + 1) % n]
        if {a, b} == {u, v}:
            new = (a[0] + b[0], a[1] + b[1])
            return rays[:i + 1] + [new] + rays[i + 1:]
    raise FanError("rays are not adjacent in the surface fan", cone=[list(u), list(v)])


# -- JSON ----------------------------------------------------------------------

def fan_from_json(data) -> Fan:
    if not isinstance(data, dict):
        raise FanError("fan JSON must be an object")
    if "surface" in data and "rays" not in data:
        return ks_fan(data["surface"], _names_from_json(data.get("edge_names"), None))
    for key in ("rays", "triangles"):
        if key not in data:
            raise FanError(f"fan JSON lacks {key!r}")
    rays, tris = data["rays"], data["triangles"]
    for i, r in enumerate(rays):
        if not (isinstance(r, list) and len(r) == 2 and all(isinstance(x, int) for x in r)):
            raise FanError(f"rays[{i}] must be a pair of integers", location=f"rays[{i}]")
    for i, t in enumerate(tris):
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, int) for x in t)):
            raise FanError(f"triangles[{i}] must be three integers", location=f"triangles[{i}]")
    return Fan.make(rays, tris, _names_from_json(data.get("edge_names"), rays))


def _names_from_json(names, rays):
    if not names:
        return None
    out = {}
    for n, c in names.items():
        if not (isinstance(c, list) and len(c) == 2):
            raise FanError(f"edge_names[{n!r}] must be a pair", location=f"edge_names.{n}")
        if all(isinstance(x, int) for x in c):
            out[n] = tuple(c)
        else:
            # pair of ray coordinates
            if rays is None:
                raise FanError("coordinate edge names need explicit rays")
            pts = [tuple(x) for x in c]
            rl = [tuple(r) for r in rays]
            out[n] = tuple(rl.index(p) for p in pts)
    return out


def fan_to_json(fan: Fan) -> dict:
    d = {"rays": [list(r) for r in fan.rays], "triangles": [list(t) for t in fan.triangles]}
    if fan.edge_names:
        d["edge_names"] = {n: list(c) for n, c in fan.edge_names}
    return d


def load_fan(path) -> Fan:
    """Read a fan from a JSON file, or a bundled example by name."""
    from pathlib import Path
    p = Path(path)
    if not p.exists():
        from importlib import resources
        cand = resources.files("topvertex") / "data" / "fans" / f"{p.stem}.json"
        if cand.is_file():
            text = cand.read_text()
        else:
            raise FanError(f"no such fan file {path!r}")
    else:
        text = p.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanError(f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    return fan_from_json(data)
