"""Named constructions, each with its labelling, embedding and claim suite.

Every builder returns a :class:`NamedGraph`; ``claims`` is a list of
zero-argument checks that :func:`NamedGraph.verify` runs and times.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Sequence

import numpy as np

from . import cycles
from .cycles import count_cycles_by_length, girth, has_cycle_of_length, is_pow2_cycle_free, iter_cycles
from .graph import (
    Graph,
    GraphError,
    RotationSystem,
    bfs_distances,
    complete_graph,
    genus,
    graph_from_edge_list,
    trace_faces,
)
from .replacement import (
    Gadget,
    Inflation,
    InflationPlan,
    format_plan,
    h7,
    h15,
    identity_gadget,
    inflate,
    k3_gadget,
    minimal_u_repairs,
    parse_plan,
    project_cycle,
    u_covered,
)
from .structure import are_isomorphic, is_bipartite, is_connected, kneser_graph, vertex_connectivity_at_least


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class Claim:
    name: str
    check: Callable[[], tuple[bool, str]]
    slow: bool = False

    def run(self) -> ClaimResult:
        t0 = time.perf_counter()
        try:
            ok, detail = self.check()
        except Exception as exc:  # a crashing check is a failed claim
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return ClaimResult(self.name, bool(ok), detail, time.perf_counter() - t0)


@dataclass(eq=False)
class NamedGraph:
    name: str
    graph: Graph
    rotation: RotationSystem | None = None
    labels: tuple[str, ...] | None = None
    edge_classes: dict[str, frozenset[tuple[int, int]]] = field(default_factory=dict)
    claims: list[Claim] = field(default_factory=list)
    inflation: Inflation | None = None
    metadata: dict[str, object] = field(default_factory=dict)

    def verify(self, include_slow: bool = True) -> list[ClaimResult]:
        return [c.run() for c in self.claims if include_slow or not c.slow]

    def edge_class(self, x: int, y: int) -> str | None:
        e = (min(x, y), max(x, y))
        for name, members in self.edge_classes.items():
            if e in members:
                return name
        return None

    @property
    def plan(self) -> InflationPlan | None:
        return None if self.inflation is None else self.inflation.plan


# --------------------------------------------------------------------------
# claim helpers
# --------------------------------------------------------------------------

def _claim_order(g: Graph, n: int) -> Claim:
    return Claim(f"order {n}", lambda: (g.n == n, f"order={g.n}"))


def _claim_regular(g: Graph, d: int = 3) -> Claim:
    name = "cubic" if d == 3 else f"{d}-regular"
    return Claim(name, lambda: (g.is_regular(d), f"degrees={sorted(set(g.degrees()))}"))


def _claim_edges(g: Graph, m: int) -> Claim:
    return Claim(f"{m} edges", lambda: (g.m == m, f"edges={g.m}"))


def _claim_spectrum(g: Graph, expected: dict[int, int], slow: bool = False) -> Claim:
    lmax = max(expected)
    want = {L: expected.get(L, 0) for L in range(3, lmax + 1)}

    def check():
        got = count_cycles_by_length(g, lmax).as_dict()
        return got == want, f"spectrum={_fmt(got)}"

    return Claim(f"spectrum<={lmax} = {_fmt(want)}", check, slow)


def _claim_no_cycle(g: Graph, L: int, slow: bool = False) -> Claim:
    def check():
        wit = cycles.find_cycle_of_length(g, L)
        return wit is None, "none found" if wit is None else f"witness {list(wit)}"

    return Claim(f"no {L}-cycle", check, slow)


def _claim_pow2_free(g: Graph, k: int, slow: bool = False) -> Claim:
    def check():
        res = is_pow2_cycle_free(g, k)
        return res.free, "free" if res.free else f"{2 ** res.m}-cycle {list(res.witness)}"

    return Claim(f"no 2^m-cycle for m<={k}", check, slow)


def _claim_girth(g: Graph, want: int) -> Claim:
    return Claim(f"girth {want}", lambda: (girth(g) == want, f"girth={girth(g)}"))


def _claim_connected(g: Graph) -> Claim:
    return Claim("connected", lambda: (is_connected(g), ""))


def _claim_genus0(g: Graph, rot: RotationSystem, faces: int | None = None) -> Claim:
    def check():
        gen = genus(g, rot)
        nf = len(trace_faces(g, rot))
        ok = gen == 0 and (faces is None or nf == faces)
        return ok, f"genus={gen}, faces={nf}"

    return Claim("genus 0" + (f" with {faces} faces" if faces else ""), check)


def _fmt(d: dict[int, int]) -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(d.items())) + "}"


# --------------------------------------------------------------------------
# small graphs
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def petersen() -> NamedGraph:
    """Kneser graph K(5,2): 2-subsets of {1..5}, adjacent when disjoint."""
    g = kneser_graph(5, 2)
    labels = tuple("".join(str(i + 1) for i in s) for s in itertools.combinations(range(5), 2))
    ng = NamedGraph("petersen", g, labels=labels)
    ng.claims = [
        _claim_order(g, 10),
        _claim_regular(g),
        _claim_girth(g, 5),
        _claim_pow2_free(g, 2),
    ]
    return ng


@lru_cache(maxsize=None)
def petersen_drawn() -> NamedGraph:
    """Petersen graph as drawn with a central vertex.

    Outer 9-cycle O0..O8 (vertices 0..8, 40 degrees apart), centre C (9)
    adjacent to O0, O3, O6, and chords O1-O5, O2-O7, O4-O8.
    """
    edges = [(i, (i + 1) % 9) for i in range(9)]
    edges += [(9, 0), (9, 3), (9, 6), (1, 5), (2, 7), (4, 8)]
    g = graph_from_edge_list(10, edges)
    labels = tuple(f"O{i}" for i in range(9)) + ("C",)
    ng = NamedGraph("petersen-drawn", g, labels=labels)
    ng.claims = [Claim("isomorphic to K(5,2)", lambda: (are_isomorphic(g, petersen().graph), ""))]
    return ng


def _sphere_rotation(g: Graph, points: np.ndarray) -> RotationSystem:
    """Clockwise (seen from outside) neighbour order for a convex polyhedron."""
    order = []
    for x in range(g.n):
        p = points[x] / np.linalg.norm(points[x])
        e1 = np.cross(p, [0.3, 0.5, 0.7])
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(p, e1)
        angle = {}
        for y in g.adjacency[x]:
            d = points[y] - points[x]
            angle[y] = math.atan2(float(d @ e2), float(d @ e1))
        order.append(sorted(g.adjacency[x], key=lambda y: -angle[y]))
    return RotationSystem.build(g, order)


@lru_cache(maxsize=None)
def icosahedron() -> NamedGraph:
    """Apexes 0 (top) and 11 (bottom), upper ring 1..5, lower ring 6..10.

    Upper vertex i is joined to lower vertices 5+i and 5+(i mod 5)+1.
    """
    edges = [(0, i) for i in range(1, 6)] + [(11, i) for i in range(6, 11)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + i % 5 + 1) for i in range(1, 6)]
    edges += [(i, 5 + i) for i in range(1, 6)] + [(i, 5 + i % 5 + 1) for i in range(1, 6)]
    g = graph_from_edge_list(12, edges)

    z, r = 1 / math.sqrt(5), 2 / math.sqrt(5)
    pts = [(0.0, 0.0, 1.0)]
    for i in range(1, 6):
        a = math.radians(72 * (i - 1))
        pts.append((r * math.cos(a), r * math.sin(a), z))
    for j in range(1, 6):
        # lower vertex 5+j sits between upper j-1 and j
        a = math.radians(72 * (j - 1) - 36)
        pts.append((r * math.cos(a), r * math.sin(a), -z))
    pts.append((0.0, 0.0, -1.0))
    rot = _sphere_rotation(g, np.array(pts))

    ng = NamedGraph("icosahedron", g, rotation=rot)
    ng.claims = [
        _claim_order(g, 12),
        _claim_edges(g, 30),
        _claim_regular(g, 5),
        Claim("20 triangular faces", lambda: (
            sorted(len(f) for f in trace_faces(g, rot)) == [3] * 20, "")),
        _claim_genus0(g, rot, 20),
    ]
    return ng


@lru_cache(maxsize=None)
def k4_planar() -> NamedGraph:
    """K4 drawn with vertex 3 in the centre of triangle 0-1-2."""
    g = complete_graph(4)
    rot = RotationSystem.build(g, [(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)])
    ng = NamedGraph("k4", g, rotation=rot)
    ng.claims = [_claim_genus0(g, rot, 4)]
    return ng


def truncate(named: NamedGraph, name: str | None = None) -> NamedGraph:
    """Truncate an embedded graph.

    New vertices are the darts ``(x, y)``, numbered with ``x`` ascending and
    then ``y`` ascending. Darts around one old vertex form a cycle in
    rotation order; ``(x, y)`` and ``(y, x)`` are joined by an "original"
    edge. The output carries the induced rotation system.
    """
    if named.rotation is None:
        raise GraphError(f"{named.name}: truncation needs a rotation system")
    g, rot = named.graph, named.rotation
    darts = [(x, y) for x in range(g.n) for y in g.adjacency[x]]
    index = {d: i for i, d in enumerate(darts)}
    edges = []
    original = []
    for x in range(g.n):
        for y in g.adjacency[x]:
            nxt = rot.successor(x, y)
            edges.append((index[(x, y)], index[(x, nxt)]))
            if x < y:
                original.append((index[(x, y)], index[(y, x)]))
    edges += original
    t = graph_from_edge_list(len(darts), edges)

    order = []
    for x, y in darts:
        ext = index[(y, x)]
        after = index[(x, rot.successor(x, y))]
        before = index[(x, next(z for z in g.adjacency[x] if rot.successor(x, z) == y))]
        order.append((ext, after, before))
    trot = RotationSystem.build(t, order)

    labels = tuple(f"{x}>{y}" for x, y in darts)
    classes = {
        "original": frozenset((min(a, b), max(a, b)) for a, b in original),
    }
    classes["polygon"] = frozenset(e for e in t.edges if e not in classes["original"])
    return NamedGraph(name or f"truncated-{named.name}", t, rotation=trot, labels=labels,
                      edge_classes=classes)


@lru_cache(maxsize=None)
def truncated_tetrahedron() -> NamedGraph:
    ng = truncate(k4_planar(), "truncated-tetrahedron")
    g, rot = ng.graph, ng.rotation
    ng.claims = [
        _claim_order(g, 12),
        _claim_regular(g),
        Claim("4 triangles + 4 hexagons", lambda: (
            sorted(len(f) for f in trace_faces(g, rot)) == [3] * 4 + [6] * 4, "")),
    ]
    return ng


def _face_lengths_by_edge(g: Graph, rot: RotationSystem) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], list[int]] = {e: [] for e in g.edges}
    for f in trace_faces(g, rot):
        for x, y in f:
            out[(min(x, y), max(x, y))].append(len(f))
    return out


@lru_cache(maxsize=None)
def c60() -> NamedGraph:
    """Truncated icosahedron with single/double bond classes.

    Double bonds are the images of icosahedron edges (they separate two
    hexagons); single bonds are the pentagon edges.
    """
    base = truncate(icosahedron(), "c60")
    g, rot = base.graph, base.rotation
    double = base.edge_classes["original"]
    single = base.edge_classes["polygon"]
    ng = NamedGraph("c60", g, rotation=rot, labels=base.labels,
                    edge_classes={"double": double, "single": single})

    def bonds_by_faces():
        sides = _face_lengths_by_edge(g, rot)
        ok = all(sorted(sides[e]) == [6, 6] for e in double)
        ok &= all(sorted(sides[e]) == [5, 6] for e in single)
        return ok, ""

    def one_double_per_vertex():
        per = [0] * g.n
        for x, y in double:
            per[x] += 1
            per[y] += 1
        return all(c == 1 for c in per), ""

    ng.claims = [
        _claim_order(g, 60),
        _claim_regular(g),
        _claim_edges(g, 90),
        Claim("30 double bonds", lambda: (len(double) == 30, f"{len(double)}")),
        Claim("60 single bonds", lambda: (len(single) == 60, f"{len(single)}")),
        Claim("double bonds border two hexagons, single bonds a pentagon and a hexagon", bonds_by_faces),
        Claim("each vertex meets exactly one double bond", one_double_per_vertex),
        Claim("faces: 12 pentagons + 20 hexagons", lambda: (
            sorted(len(f) for f in trace_faces(g, rot)) == [5] * 12 + [6] * 20, "")),
        _claim_genus0(g, rot, 32),
        _claim_spectrum(g, {5: 12, 6: 20, 7: 0, 8: 0}),
        _claim_connected(g),
    ]
    return ng


# LCF notation [-13, -9, 7, -7, 9, 13]^5
TUTTE_COXETER_LCF = (-13, -9, 7, -7, 9, 13)


@lru_cache(maxsize=None)
def tutte_coxeter() -> NamedGraph:
    """Vertices 0..29 around the Hamiltonian cycle; chords from the LCF code."""
    ham = [(i, (i + 1) % 30) for i in range(30)]
    chords = {(min(i, (i + TUTTE_COXETER_LCF[i % 6]) % 30), max(i, (i + TUTTE_COXETER_LCF[i % 6]) % 30))
              for i in range(30)}
    g = graph_from_edge_list(30, ham + sorted(chords))
    classes = {
        "hamiltonian": frozenset((min(a, b), max(a, b)) for a, b in ham),
        "chord": frozenset(chords),
    }
    ng = NamedGraph("tutte-coxeter", g, edge_classes=classes)

    def one_chord():
        per = [0] * 30
        for x, y in chords:
            per[x] += 1
            per[y] += 1
        return all(c == 1 for c in per) and len(chords) == 15, ""

    ng.claims = [
        _claim_order(g, 30),
        _claim_regular(g),
        _claim_girth(g, 8),
        Claim("bipartite", lambda: (bool(is_bipartite(g)), "")),
        Claim("each vertex on exactly one chord", one_chord),
        Claim("10 of the 8-cycles alternate chord and Hamiltonian edges",
              lambda: (len(alternating_eight_cycles()) == 10, f"{len(alternating_eight_cycles())} alternating")),
    ]
    return ng


def eight_cycles_have_consecutive_hamiltonian_edges(tc: NamedGraph) -> tuple[bool, str]:
    ham = tc.edge_classes["hamiltonian"]
    total = 0
    for cyc in iter_cycles(tc.graph, 8):
        total += 1
        kinds = [(min(cyc[i], cyc[(i + 1) % 8]), max(cyc[i], cyc[(i + 1) % 8])) in ham for i in range(8)]
        if not any(kinds[i] and kinds[(i + 1) % 8] for i in range(8)):
            return False, f"counterexample {cyc}"
    return total > 0, f"{total} eight-cycles checked"


# --------------------------------------------------------------------------
# inflated graphs
# --------------------------------------------------------------------------

def _inflation_labels(inf: Inflation, base_labels: Sequence[str] | None) -> tuple[str, ...]:
    out = []
    for v, x in enumerate(inf.projection):
        bl = base_labels[x] if base_labels else str(x)
        gad = inf.plan.gadgets[x]
        local = v - inf.offsets[x]
        out.append(bl if gad.is_identity else f"{bl}.{local}")
    return tuple(out)


def _gadget_named(gad: Gadget) -> NamedGraph:
    g = gad.graph
    names = {gad.u: "u", gad.v: "v", gad.w: "w"}
    labels = tuple(names.get(x, str(x)) for x in range(g.n))
    return NamedGraph(gad.name, g, rotation=gad.rotation, labels=labels,
                      metadata={"u": gad.u, "v": gad.v, "w": gad.w})


@lru_cache(maxsize=None)
def h7_named() -> NamedGraph:
    gad = h7()
    ng = _gadget_named(gad)
    g = gad.graph
    du, dv = bfs_distances(g, gad.u), bfs_distances(g, gad.v)
    ng.claims = [
        _claim_order(g, 7),
        Claim("degree sequence (2,2,2,3,3,3,3)", lambda: (sorted(g.degrees()) == [2, 2, 2, 3, 3, 3, 3], "")),
        Claim("d(u,v)=2, d(u,w)=2, d(v,w)=3",
              lambda: ((du[gad.v], du[gad.w], dv[gad.w]) == (2, 2, 3), f"{(du[gad.v], du[gad.w], dv[gad.w])}")),
        _claim_spectrum(g, {3: 2, 4: 0, 5: 1, 6: 2, 7: 1}),
        _claim_pow2_free(g, g.n.bit_length()),
        _claim_genus0(g, gad.rotation, 4),
    ]
    return ng


@lru_cache(maxsize=None)
def h15_named() -> NamedGraph:
    gad = h15()
    ng = _gadget_named(gad)
    g = gad.graph
    du, dv = bfs_distances(g, gad.u), bfs_distances(g, gad.v)
    ng.claims = [
        _claim_order(g, 15),
        Claim("d(u,v)=3, d(u,w)=3, d(v,w)=5",
              lambda: ((du[gad.v], du[gad.w], dv[gad.w]) == (3, 3, 5), f"{(du[gad.v], du[gad.w], dv[gad.w])}")),
        _claim_pow2_free(g, g.n.bit_length()),
    ]
    return ng


@lru_cache(maxsize=None)
def g12() -> NamedGraph:
    """Petersen with the centre replaced by a triangle.

    Labels: O0..O8 are 0..8, then T0, T1, T2 = 9, 10, 11 attached to O0,
    O3, O6.
    """
    base = petersen_drawn()
    plan = InflationPlan(
        base.graph,
        (identity_gadget(),) * 9 + (k3_gadget(),),
        (None,) * 9 + (0,),
    )
    inf = inflate(plan)
    g = inf.graph
    labels = tuple(f"O{i}" for i in range(9)) + ("T0", "T1", "T2")
    ng = NamedGraph("g12", g, labels=labels, inflation=inf)
    ng.claims = [
        _claim_order(g, 12),
        _claim_regular(g),
        _claim_spectrum(g, {3: 1, 4: 0, 5: 6, 6: 10}),
        Claim("all 10 single-vertex triangle replacements of Petersen are isomorphic",
              lambda: (len(triangle_replacement_classes()) == 1, "")),
    ]
    return ng


def triangle_replacement_classes() -> list[Graph]:
    """Non-isomorphic graphs among the 10 one-triangle inflations of Petersen."""
    p = petersen().graph
    reps: list[Graph] = []
    for x in range(p.n):
        plan = InflationPlan(
            p,
            tuple(k3_gadget() if y == x else identity_gadget() for y in range(p.n)),
            tuple(p.adjacency[x][0] if y == x else None for y in range(p.n)),
        )
        out = inflate(plan).graph
        if not any(are_isomorphic(out, r) for r in reps):
            reps.append(out)
    return reps


@lru_cache(maxsize=None)
def g420() -> NamedGraph:
    base = c60()
    double = base.edge_classes["double"]
    u_nbr = []
    for x in range(base.graph.n):
        (y,) = [y for y in base.graph.adjacency[x] if (min(x, y), max(x, y)) in double]
        u_nbr.append(y)
    plan = InflationPlan.uniform(base.graph, h7(), u_nbr)
    inf = inflate(plan, base.rotation)
    g = inf.graph
    ng = NamedGraph("g420", g, rotation=inf.rotation, inflation=inf,
                    labels=_inflation_labels(inf, base.labels))
    ng.claims = [
        _claim_order(g, 420),
        _claim_regular(g),
        _claim_edges(g, 630),
        _claim_connected(g),
        Claim("3-connected", lambda: (vertex_connectivity_at_least(g, 3), "")),
        _claim_genus0(g, inf.rotation),
        _claim_no_cycle(g, 4),
        _claim_no_cycle(g, 8),
        _claim_no_cycle(g, 16),
        _claim_spectrum(g, {3: 120, 4: 0, 5: 60, 6: 120, 7: 60}),
        _claim_spectrum(g, {3: 120, 5: 60, 6: 120, 7: 60, **{L: 0 for L in range(8, 18)}}, slow=True),
    ]
    return ng


def _data(name: str) -> str:
    return resources.files("pow2free").joinpath("data", name).read_text()


G78_PLAN_FILE = "g78.plan"
G78_DRAWN_PLAN_FILE = "g78_drawn.plan"
G450_PLAN_FILE = "g450.plan"
MARKSTROM24_PLAN_FILE = "markstrom24.plan"


def g78_drawn_plan() -> InflationPlan:
    """u-edges exactly as marked in the drawing (O2 on its chord); has a 16-cycle."""
    return parse_plan(_data(G78_DRAWN_PLAN_FILE), g12().graph)


@lru_cache(maxsize=None)
def g78() -> NamedGraph:
    base = g12()
    plan = parse_plan(_data(G78_PLAN_FILE), base.graph)
    inf = inflate(plan)
    g = inf.graph
    ng = NamedGraph("g78", g, inflation=inf, labels=_inflation_labels(inf, base.labels))
    ng.claims = [
        _claim_order(g, 78),
        _claim_regular(g),
        _claim_connected(g),
        _claim_no_cycle(g, 4),
        _claim_no_cycle(g, 8),
        _claim_no_cycle(g, 16),
        Claim("shipped plan is the first passing plan of the exhaustive 3^11 u-edge search",
              lambda: _shipped_g78_first(plan), slow=True),
    ]
    return ng


def _shipped_g78_first(plan: InflationPlan) -> tuple[bool, str]:
    passing = g78_search()
    ok = bool(passing) and passing[0].u_neighbor == plan.u_neighbor
    return ok, f"{len(passing)} passing plans"


def g78_candidate_plans() -> Iterable[InflationPlan]:
    """Every u-edge assignment on G12 with H7 at all vertices except T0, lexicographically."""
    base = g12().graph
    t0 = 9
    choices = [base.adjacency[x] if x != t0 else (None,) for x in range(base.n)]
    gads = tuple(identity_gadget() if x == t0 else h7() for x in range(base.n))
    for us in itertools.product(*choices):
        yield InflationPlan(base, gads, us)


def g78_search(progress: Callable[[int], None] | None = None) -> list[InflationPlan]:
    """All 3^11 u-assignments that leave no 4-, 8- or 16-cycle, in lexicographic order."""
    return _g78_search_cached() if progress is None else _g78_search(progress)


@lru_cache(maxsize=1)
def _g78_search_cached() -> list[InflationPlan]:
    return _g78_search(None)


def _g78_search(progress) -> list[InflationPlan]:
    found = []
    for i, plan in enumerate(g78_candidate_plans()):
        if progress is not None and i % 10000 == 0:
            progress(i)
        if is_pow2_cycle_free(inflate(plan).graph, 4):
            found.append(plan)
    return found


def chord_u_neighbors() -> list[int]:
    """For each Tutte-Coxeter vertex, the other end of its chord."""
    tc = tutte_coxeter()
    chords = tc.edge_classes["chord"]
    return [
        next(y for y in tc.graph.adjacency[x] if (min(x, y), max(x, y)) in chords)
        for x in range(tc.graph.n)
    ]


@lru_cache(maxsize=None)
def g450_chords() -> NamedGraph:
    """H15 at every Tutte-Coxeter vertex with u on the chord everywhere.

    This literal chord rule is not 32-cycle free: the chord/Hamiltonian
    alternating 8-cycles lift to 32-cycles. Kept so that fact stays checkable.
    """
    base = tutte_coxeter()
    plan = InflationPlan.uniform(base.graph, h15(), chord_u_neighbors())
    inf = inflate(plan)
    g = inf.graph
    ng = NamedGraph("g450-chords", g, inflation=inf, labels=_inflation_labels(inf, None))

    def lifted_32_cycle():
        wit = cycles.find_cycle_of_length(g, 32)
        if wit is None:
            return False, "no 32-cycle"
        proj = project_cycle(wit, inf)
        return len(proj.walk) == 8 and proj.simple, f"32-cycle over base cycle {list(proj.walk)}"

    ng.claims = [
        _claim_order(g, 450),
        _claim_regular(g),
        _claim_pow2_free(g, 4),
        Claim("has a 32-cycle lifted from an alternating 8-cycle", lifted_32_cycle),
    ]
    return ng


def alternating_eight_cycles() -> list[tuple[int, ...]]:
    """8-cycles of Tutte-Coxeter that alternate chord and Hamiltonian edges."""
    u = chord_u_neighbors()
    return [c for c in iter_cycles(tutte_coxeter().graph, 8) if u_covered(c, u)]


def g450_repairs(max_changes: int = 6) -> list[tuple[tuple[int, int], ...]]:
    """Smallest sets of u-edge moves (off the chord) that leave no u-covered 8-cycle."""
    base = tutte_coxeter().graph
    return minimal_u_repairs(base, chord_u_neighbors(), list(iter_cycles(base, 8)), max_changes)


@lru_cache(maxsize=None)
def g450() -> NamedGraph:
    """H15 at every Tutte-Coxeter vertex, u on the chord except at six vertices."""
    base = tutte_coxeter()
    plan = parse_plan(_data(G450_PLAN_FILE), base.graph)
    inf = inflate(plan)
    g = inf.graph
    chord_u = chord_u_neighbors()
    moved = tuple((x, y) for x, y in enumerate(plan.u_neighbor) if y != chord_u[x])
    ng = NamedGraph("g450", g, inflation=inf, labels=_inflation_labels(inf, None))
    ng.metadata["bound"] = "f(5) <= 450"
    ng.metadata["moved_u_edges"] = moved
    ng.claims = [
        _claim_order(g, 450),
        _claim_regular(g),
        _claim_connected(g),
        Claim("H15 at every vertex", lambda: (all(gd.name == "h15" for gd in plan.gadgets), "")),
        Claim("u on the chord at 24 of 30 vertices", lambda: (len(moved) == 6, f"moved {list(moved)}")),
        _claim_no_cycle(g, 4),
        _claim_no_cycle(g, 8),
        _claim_no_cycle(g, 16),
        _claim_no_cycle(g, 32),
        _claim_pow2_free(g, 5),
        Claim("shipped plan is the first minimal chord repair",
              lambda: _shipped_g450_first(moved), slow=True),
    ]
    return ng


def _shipped_g450_first(moved) -> tuple[bool, str]:
    repairs = g450_repairs()
    return bool(repairs) and repairs[0] == moved, f"{len(repairs)} minimal repairs of size {len(moved)}"


def markstrom24_candidate_plans() -> Iterable[InflationPlan]:
    """H7 at vertices 0, 1, 2 of K4 and a triangle at 3; u-edges in lexicographic order."""
    base = complete_graph(4)
    gads = (h7(), h7(), h7(), k3_gadget())
    choices = [base.adjacency[x] for x in range(3)] + [(base.adjacency[3][0],)]
    for us in itertools.product(*choices):
        yield InflationPlan(base, gads, us)


def markstrom24_search() -> list[InflationPlan]:
    return [p for p in markstrom24_candidate_plans() if is_pow2_cycle_free(inflate(p).graph, 3)]


@lru_cache(maxsize=None)
def markstrom24() -> NamedGraph:
    passing = markstrom24_search()
    if not passing:
        raise GraphError("no u-assignment of K4/H7/K3 avoids 4- and 8-cycles")
    plan = passing[0]
    inf = inflate(plan)
    g = inf.graph
    shipped = parse_plan(_data(MARKSTROM24_PLAN_FILE), plan.base)
    ng = NamedGraph("markstrom24", g, inflation=inf, labels=_inflation_labels(inf, None))
    ng.metadata["passing_plans"] = len(passing)
    ng.claims = [
        _claim_order(g, 24),
        _claim_regular(g),
        _claim_pow2_free(g, 3),
        Claim("shipped plan equals first passing plan",
              lambda: (shipped.u_neighbor == plan.u_neighbor, f"{len(passing)} of 27 pass")),
    ]
    return ng


REGISTRY: dict[str, Callable[[], NamedGraph]] = {
    "h7": h7_named,
    "h15": h15_named,
    "petersen": petersen,
    "g12": g12,
    "icosahedron": icosahedron,
    "c60": c60,
    "tutte-coxeter": tutte_coxeter,
    "g420": g420,
    "g78": g78,
    "g450": g450,
    "g450-chords": g450_chords,
    "markstrom24": markstrom24,
}


def get(name: str) -> NamedGraph:
    if name not in REGISTRY:
        raise KeyError(f"unknown graph {name!r}; known: {', '.join(REGISTRY)}")
    return REGISTRY[name]()


def plan_text(name: str) -> str:
    ng = get(name)
    if ng.plan is None:
        raise KeyError(f"{name} is not built from an inflation plan")
    return format_plan(ng.plan, header=f"inflation plan for {name}: vertex gadget u-endpoint")
