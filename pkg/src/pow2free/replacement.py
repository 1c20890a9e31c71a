"""Vertex inflation: replace each vertex of a cubic graph by a three-terminal gadget.

Gadget roles are ``u``, ``v`` and ``w``. An :class:`InflationPlan` fixes, for
every base vertex, the gadget and the incident edge that meets role ``u``; the
other two incident edges go to ``v`` (smaller neighbour index) and ``w``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    RotationSystem,
    graph_from_edge_list,
    trace_faces,
)

ROLES = ("u", "v", "w")


class PlanError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Gadget:
    name: str
    graph: Graph
    u: int
    v: int
    w: int
    rotation: RotationSystem | None = None

    def __post_init__(self):
        g = self.graph
        terms = (self.u, self.v, self.w)
        if self.is_identity:
            if g.n != 1 or g.m != 0:
                raise GraphError(f"gadget {self.name}: identity gadget must be a single vertex")
        else:
            if len(set(terms)) != 3:
                raise GraphError(f"gadget {self.name}: attachment vertices must be distinct")
            for x in range(g.n):
                want = 2 if x in terms else 3
                if g.degree(x) != want:
                    raise GraphError(
                        f"gadget {self.name}: vertex {x} has degree {g.degree(x)}, expected {want}"
                    )
        if self.rotation is not None:
            self.rotation.validate(g)

    @property
    def is_identity(self) -> bool:
        return self.u == self.v == self.w

    @property
    def order(self) -> int:
        return self.graph.n

    def terminal(self, role: str) -> int:
        return {"u": self.u, "v": self.v, "w": self.w}[role]

    def __repr__(self) -> str:
        return f"Gadget({self.name!r}, n={self.graph.n})"


def rotation_from_coordinates(g: Graph, coords: Sequence[tuple[float, float]]) -> RotationSystem:
    """Clockwise neighbour order from a straight-line drawing (y axis up)."""
    order = []
    for x in range(g.n):
        x0, y0 = coords[x]
        order.append(
            sorted(g.adjacency[x], key=lambda y: -math.atan2(coords[y][1] - y0, coords[y][0] - x0))
        )
    return RotationSystem.build(g, order)


@lru_cache(maxsize=None)
def identity_gadget() -> Gadget:
    g = graph_from_edge_list(1, [])
    return Gadget("identity", g, 0, 0, 0, RotationSystem(((),)))


@lru_cache(maxsize=None)
def k3_gadget() -> Gadget:
    g = graph_from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    rot = RotationSystem.build(g, [(1, 2), (2, 0), (0, 1)])
    return Gadget("k3", g, 0, 1, 2, rot)


# H7 labelling: v=0, a=1, b=2, w=3, p=4, u=5, q=6 (bottom row v-a-b-w, apex u).
H7_LABELS = ("v", "a", "b", "w", "p", "u", "q")
H7_EDGES = ((0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (4, 5), (5, 6), (6, 2), (3, 6))


@lru_cache(maxsize=None)
def h7() -> Gadget:
    g = graph_from_edge_list(7, H7_EDGES)
    c72, s72 = math.cos(math.radians(72)), math.sin(math.radians(72))
    apex = math.cos(math.radians(36)) + 1 / (2 * math.cos(math.radians(54)))
    coords = [(0, 0), (1, 0), (2, 0), (3, 0), (1 - c72, s72), (1.5, apex), (2 + c72, s72)]
    return Gadget("h7", g, u=5, v=0, w=3, rotation=rotation_from_coordinates(g, coords))


@lru_cache(maxsize=None)
def h15() -> Gadget:
    """Two H7 copies (vertices 0..6 and 7..13) plus a new vertex 14.

    The copies' v-terminals are joined to each other, their w-terminals are
    joined to vertex 14 (the new ``u``), and the old apexes 5 and 12 become
    the ``v`` and ``w`` terminals.
    """
    edges = list(H7_EDGES) + [(x + 7, y + 7) for x, y in H7_EDGES]
    edges += [(0, 7), (3, 14), (10, 14)]
    g = graph_from_edge_list(15, edges)
    return Gadget("h15", g, u=14, v=5, w=12)


GADGETS = {
    "identity": identity_gadget,
    "k3": k3_gadget,
    "h7": h7,
    "h15": h15,
}


def gadget_by_name(name: str) -> Gadget:
    try:
        return GADGETS[name]()
    except KeyError:
        raise PlanError(f"unknown gadget {name!r}") from None


@dataclass(frozen=True, eq=False)
class InflationPlan:
    """Per-vertex gadget plus the neighbour whose edge meets role ``u``.

    ``u_neighbor[x]`` may be None only for the identity gadget.
    """

    base: Graph
    gadgets: tuple[Gadget, ...]
    u_neighbor: tuple[int | None, ...]

    def __post_init__(self):
        if not self.base.is_cubic():
            raise PlanError("inflation needs a cubic base graph")
        if len(self.gadgets) != self.base.n or len(self.u_neighbor) != self.base.n:
            raise PlanError("plan must have exactly one entry per base vertex")
        for x, (gad, y) in enumerate(zip(self.gadgets, self.u_neighbor)):
            if y is None:
                if not gad.is_identity:
                    raise PlanError(f"vertex {x}: gadget {gad.name} needs a u-edge")
            elif not self.base.has_edge(x, y):
                raise PlanError(f"vertex {x}: u-edge ({x}, {y}) is not incident to it")

    @classmethod
    def uniform(cls, base: Graph, gadget: Gadget, u_neighbor: Sequence[int | None]) -> "InflationPlan":
        return cls(base, (gadget,) * base.n, tuple(u_neighbor))

    def roles(self, x: int) -> dict[int, str]:
        """Map each neighbour of ``x`` to the role its edge meets at ``x``."""
        nbrs = self.base.adjacency[x]
        uy = self.u_neighbor[x]
        if uy is None:
            uy = nbrs[0]
        rest = [y for y in nbrs if y != uy]
        return {uy: "u", rest[0]: "v", rest[1]: "w"}

    def with_entry(self, x: int, gadget: Gadget, u_neighbor: int | None) -> "InflationPlan":
        gads = list(self.gadgets)
        us = list(self.u_neighbor)
        gads[x], us[x] = gadget, u_neighbor
        return InflationPlan(self.base, tuple(gads), tuple(us))


@dataclass(frozen=True, eq=False)
class Inflation:
    """Result of :func:`inflate`."""

    graph: Graph
    projection: tuple[int, ...]
    offsets: tuple[int, ...]
    attachment: dict[tuple[int, int], int]  # (base x, base neighbour y) -> output vertex
    rotation: RotationSystem | None
    plan: InflationPlan


def inflate(plan: InflationPlan, base_rotation: RotationSystem | None = None) -> Inflation:
    """Replace every base vertex by its gadget.

    Output vertices are laid out in blocks, one per base vertex in index
    order; inside a block the gadget's own labels are kept. A rotation system
    is composed when ``base_rotation`` is given and every gadget has one.
    """
    base = plan.base
    offsets = []
    total = 0
    for gad in plan.gadgets:
        offsets.append(total)
        total += gad.order
    projection = [x for x, gad in enumerate(plan.gadgets) for _ in range(gad.order)]

    attachment: dict[tuple[int, int], int] = {}
    for x in range(base.n):
        gad = plan.gadgets[x]
        for y, role in plan.roles(x).items():
            attachment[(x, y)] = offsets[x] + gad.terminal(role)

    edges = []
    for x, gad in enumerate(plan.gadgets):
        off = offsets[x]
        edges.extend((a + off, b + off) for a, b in gad.graph.edges)
    for x, y in base.edges:
        edges.append((attachment[(x, y)], attachment[(y, x)]))
    g = graph_from_edge_list(total, edges)

    rotation = None
    if base_rotation is not None and all(gad.rotation is not None for gad in plan.gadgets):
        rotation = _compose_rotation(plan, base_rotation, offsets, attachment, g)

    return Inflation(g, tuple(projection), tuple(offsets), attachment, rotation, plan)


def _compose_rotation(plan, base_rot, offsets, attachment, g) -> RotationSystem:
    """Splice each gadget's embedding into the base rotation.

    At base vertex ``x`` with cyclic order ``(y1, y2, y3)`` the gadget needs a
    face meeting the matching terminals in that same order; the external
    edge of a terminal is inserted into the corner where that face passes.
    """
    base = plan.base
    order: list[list[int]] = [[] for _ in range(g.n)]
    for x in range(base.n):
        gad = plan.gadgets[x]
        off = offsets[x]
        cyc = base_rot.order[x]
        ext = {y: attachment[(y, x)] for y in cyc}
        if gad.is_identity:
            order[off] = [ext[y] for y in cyc]
            continue
        roles = plan.roles(x)
        want = [gad.terminal(roles[y]) for y in cyc]
        rot, face = _matching_face(gad, want)
        for a in range(gad.order):
            order[off + a] = [off + b for b in rot.order[a]]
        done = set()
        for p, a in face:
            if a in want and a not in done:
                done.add(a)
                seq = order[off + a]
                seq.insert(seq.index(off + p) + 1, ext[cyc[want.index(a)]])
    return RotationSystem.build(g, order)


def _matching_face(gad: Gadget, want: list[int]):
    """Gadget embedding (as given or mirrored) and a face visiting the terminals in ``want`` order."""
    for rot in (gad.rotation, gad.rotation.mirror()):
        for face in trace_faces(gad.graph, rot):
            seq = [d[1] for d in face if d[1] in want]
            if len(seq) != 3:
                continue
            k = seq.index(want[0])
            if seq[k:] + seq[:k] == want:
                return rot, face
    raise GraphError(f"gadget {gad.name}: no face carries the terminals in the required order")


@dataclass(frozen=True)
class ProjectedCycle:
    walk: tuple[int, ...]  # base vertices, consecutive repeats collapsed cyclically
    degenerate: bool  # cycle stays inside one gadget copy
    simple: bool  # image is a simple cycle of the base
    internal_edges: int
    external_edges: int

    @property
    def copies(self) -> tuple[int, ...]:
        """Base vertices whose gadget copies the cycle passes through."""
        return self.walk


def project_cycle(cycle: Sequence[int], inflation: Inflation) -> ProjectedCycle:
    g = inflation.graph
    L = len(cycle)
    if L < 3 or len(set(cycle)) != L or not all(
        g.has_edge(cycle[i], cycle[(i + 1) % L]) for i in range(L)
    ):
        raise GraphError("not a simple cycle of the inflated graph")
    proj = inflation.projection
    image = [proj[v] for v in cycle]
    external = sum(1 for i in range(L) if image[i] != image[(i + 1) % L])
    walk: list[int] = []
    for b in image:
        if not walk or walk[-1] != b:
            walk.append(b)
    while len(walk) > 1 and walk[0] == walk[-1]:
        walk.pop()
    degenerate = len(walk) == 1
    simple = len(walk) >= 3 and len(set(walk)) == len(walk)
    return ProjectedCycle(tuple(walk), degenerate, simple, L - external, external)


# --------------------------------------------------------------------------
# plan files: one "vertex gadget-name u-endpoint" line per base vertex
# --------------------------------------------------------------------------

def format_plan(plan: InflationPlan, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {ln}" for ln in header.splitlines())
    for x, (gad, y) in enumerate(zip(plan.gadgets, plan.u_neighbor)):
        lines.append(f"{x} {gad.name} {'-' if y is None else y}")
    return "\n".join(lines) + "\n"


def parse_plan(text: str, base: Graph) -> InflationPlan:
    gads: dict[int, Gadget] = {}
    us: dict[int, int | None] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        ln = raw.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise PlanError(f"line {lineno}: expected 'vertex gadget u-endpoint'")
        try:
            x = int(parts[0])
            y = None if parts[2] == "-" else int(parts[2])
        except ValueError:
            raise PlanError(f"line {lineno}: vertex and endpoint must be integers") from None
        if not 0 <= x < base.n:
            raise PlanError(f"line {lineno}: vertex {x} out of range")
        if x in gads:
            raise PlanError(f"line {lineno}: vertex {x} listed twice")
        gads[x] = gadget_by_name(parts[1])
        us[x] = y
    missing = [x for x in range(base.n) if x not in gads]
    if missing:
        raise PlanError(f"plan has no entry for vertices {missing}")
    return InflationPlan(
        base,
        tuple(gads[x] for x in range(base.n)),
        tuple(us[x] for x in range(base.n)),
    )


# --------------------------------------------------------------------------
# u-edge repair
# --------------------------------------------------------------------------

def u_covered(cycle: Sequence[int], u_neighbor: Sequence[int | None]) -> bool:
    """True when every vertex of the base cycle has its u-edge on the cycle.

    Such a cycle of length L inflates to one of length L + sum of the
    u-to-v/w distances of the gadgets along it.
    """
    L = len(cycle)
    return all(
        u_neighbor[x] in (cycle[i - 1], cycle[(i + 1) % L]) for i, x in enumerate(cycle)
    )


def minimal_u_repairs(
    base: Graph,
    u_neighbor: Sequence[int | None],
    cycles: Sequence[Sequence[int]],
    max_changes: int,
) -> list[tuple[tuple[int, int], ...]]:
    """Smallest sets of u-edge moves leaving none of ``cycles`` u-covered.

    Iterative deepening: branch on the vertices of the first covered cycle and
    their two other incident edges. Each repair is a sorted tuple of
    ``(vertex, new u-neighbour)``; the list is sorted and empty when more than
    ``max_changes`` moves would be needed.
    """
    cycles = [tuple(c) for c in cycles]
    # a cycle stays covered unless some vertex on it moves its u-edge off it
    through: dict[int, list[int]] = {}
    for i, c in enumerate(cycles):
        for x in c:
            through.setdefault(x, []).append(i)

    def covered_after(u, x, covered):
        out = set(covered)
        for i in through.get(x, ()):
            if u_covered(cycles[i], u):
                out.add(i)
            else:
                out.discard(i)
        return out

    def rec(u, changed, covered, banned, budget, out):
        if not covered:
            out.add(tuple(sorted(changed.items())))
            return
        if budget == 0:
            return
        c = cycles[min(covered)]
        moves = []
        for j, x in enumerate(c):
            if x in changed:
                continue
            on = (c[j - 1], c[(j + 1) % len(c)])
            moves.extend((x, y) for y in base.adjacency[x] if y not in on and (x, y) not in banned)
        banned = set(banned)
        for x, y in moves:
            old = u[x]
            u[x] = y
            rec(u, {**changed, x: y}, covered_after(u, x, covered), banned, budget - 1, out)
            u[x] = old
            # every repair using (x, y) was found in this branch
            banned.add((x, y))

    start = {i for i, c in enumerate(cycles) if u_covered(c, u_neighbor)}
    for k in range(max_changes + 1):
        found: set[tuple[tuple[int, int], ...]] = set()
        rec(list(u_neighbor), {}, start, frozenset(), k, found)
        if found:
            return sorted(found)
    return []
