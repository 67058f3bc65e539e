"""Surface validation, boundary extraction and orientability.

Validation comes in two levels.  The pseudo-surface level checks the
classical necessary conditions for a complex to triangulate a compact
surface: every simplex is a face of a triangle, every edge lies in at
most two triangles, and the triangle-adjacency graph is connected.
Those conditions still admit complexes that pinch at a vertex, so the
full surface level additionally requires every vertex link to be a
single cycle (interior vertex) or a single simple path (boundary
vertex).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import ClassVar, Mapping

from .errors import NotASurface, NotConnected
from .simplicial import Edge, SurfaceComplex, Triangle, link, triangle_edges


@dataclass(frozen=True)
class Violation:
    """One structured finding: which condition failed at which simplex."""

    kind: str
    simplex: tuple[int, ...]


@dataclass(frozen=True)
class SurfaceReport:
    is_pseudo_surface: bool
    is_surface: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary circle as a cyclic vertex sequence."""

    cycle: tuple[int, ...]

    def edges(self) -> frozenset[Edge]:
        n = len(self.cycle)
        return frozenset(
            tuple(sorted((self.cycle[i], self.cycle[(i + 1) % n]))) for i in range(n)
        )


@dataclass(frozen=True)
class NonOrientabilityWitness:
    """A closed edge-adjacent triangle path along which orientation reverses."""

    triangle_path: tuple[Triangle, ...]


@dataclass(frozen=True, eq=False)
class Orientable:
    signs: Mapping[Triangle, int]
    is_orientable: ClassVar[bool] = True


@dataclass(frozen=True, eq=False)
class NonOrientable:
    witness: NonOrientabilityWitness
    is_orientable: ClassVar[bool] = False


def induced_direction(t: Triangle, e: Edge) -> int:
    """Direction a positively oriented triangle induces on one of its edges.

    For sorted (a, b, c) the positive cyclic order is a->b->c->a, so the
    edges (a,b) and (b,c) are traversed low-to-high (+1) and (a,c)
    high-to-low (-1).  These are exactly the coefficients of the
    boundary operator, which keeps the two modules' sign conventions
    aligned.
    """
    a, b, c = t
    if e == (a, c):
        return -1
    if e == (a, b) or e == (b, c):
        return 1
    raise ValueError(f"edge {e} is not a face of triangle {t}")


def _adjacency_components(c: SurfaceComplex) -> list[list[Triangle]]:
    """Triangle components under the shares-an-edge relation."""
    remaining = set(c.triangles)
    components = []
    for t in c.triangles:
        if t not in remaining:
            continue
        queue = deque([t])
        remaining.discard(t)
        comp = []
        while queue:
            cur = queue.popleft()
            comp.append(cur)
            for e in triangle_edges(cur):
                for nb in c.triangles_of_edge(e):
                    if nb in remaining:
                        remaining.discard(nb)
                        queue.append(nb)
        components.append(sorted(comp))
    return components


def _link_shape(edges: tuple[Edge, ...]) -> str:
    """Classify a link 1-complex as 'cycle', 'path' or 'other'."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    # connectivity
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        for nb in adj[queue.popleft()]:
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    if len(seen) != len(adj):
        return "other"
    degrees = sorted(len(nbs) for nbs in adj.values())
    if all(d == 2 for d in degrees):
        return "cycle"
    if degrees.count(1) == 2 and all(d in (1, 2) for d in degrees):
        return "path"
    return "other"


def _analyze(c: SurfaceComplex) -> tuple[list[Violation], list[Violation]]:
    pseudo: list[Violation] = []
    # condition: every vertex and edge is the face of some triangle.
    # Face-closure construction makes this automatic; re-verified anyway.
    for v in c.vertices:
        if not c.triangles_of_vertex(v):
            pseudo.append(Violation("isolated-vertex", (v,)))
    for e in c.edges:
        if not c.triangles_of_edge(e):
            pseudo.append(Violation("isolated-edge", e))
    # condition: every edge lies in at most two triangles.
    for e in c.edges:
        if len(c.triangles_of_edge(e)) > 2:
            pseudo.append(Violation("edge-degree", e))
    # condition: triangles are connected through shared edges.
    components = _adjacency_components(c)
    for comp in components[1:]:
        pseudo.append(Violation("disconnected", comp[0]))

    links: list[Violation] = []
    boundary_edges = {e for e in c.edges if len(c.triangles_of_edge(e)) == 1}
    for v in c.vertices:
        shape = _link_shape(link(c, v))
        on_boundary = any(v in e for e in boundary_edges)
        if shape == "other" or (shape == "cycle") == on_boundary:
            links.append(Violation("vertex-link", (v,)))
    return pseudo, links


def check_pseudo_surface(c: SurfaceComplex) -> SurfaceReport:
    """Check the necessary triangulation conditions; findings are data, not errors."""
    pseudo, links = _analyze(c)
    return SurfaceReport(
        is_pseudo_surface=not pseudo,
        is_surface=not pseudo and not links,
        violations=tuple(pseudo),
    )


def check_surface(c: SurfaceComplex) -> SurfaceReport:
    """Pseudo-surface conditions plus the vertex-link condition."""
    pseudo, links = _analyze(c)
    return SurfaceReport(
        is_pseudo_surface=not pseudo,
        is_surface=not pseudo and not links,
        violations=tuple(pseudo) + tuple(links),
    )


def require_surface(c: SurfaceComplex) -> None:
    """Raise NotConnected / NotASurface unless ``c`` validates as a surface."""
    report = check_surface(c)
    if report.is_surface:
        return
    kinds = {v.kind for v in report.violations}
    if kinds == {"disconnected"}:
        raise NotConnected(
            "complex has multiple components; split with connected_components()",
            report.violations,
        )
    raise NotASurface("complex is not a surface triangulation", report.violations)


def boundary_components(c: SurfaceComplex) -> list[BoundaryComponent]:
    """The boundary circles, as disjoint simple cycles of vertex ids.

    Components are ordered by their least vertex id; each cycle starts
    at its least vertex and proceeds toward that vertex's least-id
    boundary neighbor, so output is deterministic.  Empty iff closed.
    """
    require_surface(c)
    neighbors: dict[int, list[int]] = {}
    for e in c.edges:
        if len(c.triangles_of_edge(e)) == 1:
            a, b = e
            neighbors.setdefault(a, []).append(b)
            neighbors.setdefault(b, []).append(a)
    remaining = set(neighbors)
    components = []
    while remaining:
        start = min(remaining)
        cycle = [start]
        prev, cur = None, start
        while True:
            nxt = min(n for n in neighbors[cur] if n != prev)
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        remaining.difference_update(cycle)
        components.append(BoundaryComponent(tuple(cycle)))
    return components


def orientability(c: SurfaceComplex) -> Orientable | NonOrientable:
    """Assign compatible triangle orientations, or exhibit why none exist.

    Signs propagate breadth-first over the triangle-adjacency graph from
    the lexicographically least triangle (sign +1): across each shared
    edge the neighbor gets the unique sign making the two induced edge
    directions opposite.  On conflict the returned witness is the closed
    triangle path through the BFS tree that reverses orientation.
    """
    require_surface(c)
    root = c.triangles[0]
    signs: dict[Triangle, int] = {root: 1}
    parent: dict[Triangle, Triangle | None] = {root: None}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for e in triangle_edges(t):
            for nb in c.triangles_of_edge(e):
                if nb == t:
                    continue
                forced = -signs[t] * induced_direction(t, e) * induced_direction(nb, e)
                if nb not in signs:
                    signs[nb] = forced
                    parent[nb] = t
                    queue.append(nb)
                elif signs[nb] != forced:
                    return NonOrientable(_witness(parent, t, nb))
    return Orientable(dict(sorted(signs.items())))


def _witness(parent, t1: Triangle, t2: Triangle) -> NonOrientabilityWitness:
    """Closed path t1 -> t2 through the BFS tree; replaying it flips the sign."""

    def ancestry(t):
        path = [t]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path[::-1]  # root first

    p1, p2 = ancestry(t1), ancestry(t2)
    k = 0
    while k < min(len(p1), len(p2)) and p1[k] == p2[k]:
        k += 1
    # lca .. t1, then the conflicting edge to t2, then back down to lca
    path = p1[k - 1 :] + p2[k - 1 :][::-1]
    return NonOrientabilityWitness(tuple(path))


def connected_components(c: SurfaceComplex) -> list[SurfaceComplex]:
    """Split by triangle adjacency; components ordered by least vertex id."""
    parts = [SurfaceComplex(comp) for comp in _adjacency_components(c)]
    parts.sort(key=lambda p: (p.vertices[0], p.triangles))
    return parts
