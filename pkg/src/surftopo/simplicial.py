"""Finite abstract 2-dimensional simplicial complexes.

A complex is given purely combinatorially by its triangles; edges and
vertices are derived so the face set is closed by construction.  All
values are immutable after construction and every operation here is a
pure function, so complexes can be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .errors import DegenerateTriangle, DuplicateTriangle, EmptyInput, UnknownVertex

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class FVector(NamedTuple):
    """Counts of vertices, edges and triangles."""

    v: int
    e: int
    f: int


def _canonical_triangle(triple) -> Triangle:
    a, b, c = triple
    for x in (a, b, c):
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"vertex ids must be integers, got {x!r}")
        if x < 0:
            raise ValueError(f"vertex ids must be nonnegative, got {x}")
    if a == b or a == c or b == c:
        raise DegenerateTriangle(f"triangle {triple} repeats a vertex")
    t = tuple(sorted((a, b, c)))
    return t  # type: ignore[return-value]


def triangle_edges(t: Triangle) -> tuple[Edge, Edge, Edge]:
    """The three edges of a canonical triangle, in lexicographic order."""
    a, b, c = t
    return (a, b), (a, c), (b, c)


class SurfaceComplex:
    """A set of triangles together with its derived faces.

    `triangles`, `edges` and `vertices` are sorted tuples, so iteration
    order is deterministic.  Instances are immutable; compare and hash
    by the triangle set.
    """

    __slots__ = ("triangles", "edges", "vertices", "_edge_tris", "_vertex_tris")

    def __init__(self, triangles: Iterable[tuple[int, int, int]]):
        seen: set[Triangle] = set()
        for triple in triangles:
            t = _canonical_triangle(triple)
            if t in seen:
                raise DuplicateTriangle(f"triangle {t} given twice")
            seen.add(t)
        if not seen:
            raise EmptyInput("a complex needs at least one triangle")
        self.triangles: tuple[Triangle, ...] = tuple(sorted(seen))

        edge_tris: dict[Edge, list[Triangle]] = {}
        vertex_tris: dict[int, list[Triangle]] = {}
        for t in self.triangles:
            for e in triangle_edges(t):
                edge_tris.setdefault(e, []).append(t)
            for v in t:
                vertex_tris.setdefault(v, []).append(t)
        self.edges: tuple[Edge, ...] = tuple(sorted(edge_tris))
        self.vertices: tuple[int, ...] = tuple(sorted(vertex_tris))
        self._edge_tris: Mapping[Edge, tuple[Triangle, ...]] = {
            e: tuple(ts) for e, ts in edge_tris.items()
        }
        self._vertex_tris: Mapping[int, tuple[Triangle, ...]] = {
            v: tuple(ts) for v, ts in vertex_tris.items()
        }

    def triangles_of_edge(self, e: Edge) -> tuple[Triangle, ...]:
        return self._edge_tris.get(tuple(sorted(e)), ())

    def triangles_of_vertex(self, v: int) -> tuple[Triangle, ...]:
        if v not in self._vertex_tris:
            raise UnknownVertex(f"vertex {v} is not in the complex")
        return self._vertex_tris[v]

    def __eq__(self, other):
        if not isinstance(other, SurfaceComplex):
            return NotImplemented
        return self.triangles == other.triangles

    def __hash__(self):
        return hash(self.triangles)

    def __repr__(self):
        v, e, f = f_vector(self)
        return f"SurfaceComplex(v={v}, e={e}, f={f})"


def build_complex(triples: Iterable[tuple[int, int, int]]) -> SurfaceComplex:
    """Build a complex from vertex-id triples.

    Triples are canonicalized (sorted); repeated vertices and duplicate
    canonical triples are hard errors rather than being cleaned up,
    since either usually indicates a modeling bug in the input data.
    """
    return SurfaceComplex(triples)


def f_vector(c: SurfaceComplex) -> FVector:
    return FVector(len(c.vertices), len(c.edges), len(c.triangles))


def euler_characteristic(c: SurfaceComplex) -> int:
    """V - E + F."""
    v, e, f = f_vector(c)
    return v - e + f


def subdivision_vertex_ids(c: SurfaceComplex) -> tuple[dict[Edge, int], dict[Triangle, int]]:
    """Fresh ids the barycentric subdivision assigns to edge and triangle barycenters.

    Ids start at max(existing)+1, edge barycenters first, each group in
    lexicographic order of the underlying simplex.  Exposed so callers
    (e.g. polygon-scheme realization) can track named points through a
    subdivision without re-deriving the allocation rule.
    """
    base = max(c.vertices) + 1
    edge_ids = {e: base + i for i, e in enumerate(c.edges)}
    tri_base = base + len(c.edges)
    tri_ids = {t: tri_base + i for i, t in enumerate(c.triangles)}
    return edge_ids, tri_ids


def barycentric_subdivision(c: SurfaceComplex) -> SurfaceComplex:
    """Replace each triangle by six, coning over edge and triangle barycenters.

    Output counts satisfy v' = v+e+f, e' = 2e+6f, f' = 6f, and the Euler
    characteristic is unchanged.
    """
    edge_ids, tri_ids = subdivision_vertex_ids(c)
    triples = []
    for t in c.triangles:
        w = tri_ids[t]
        for e in triangle_edges(t):
            m = edge_ids[e]
            triples.append((e[0], m, w))
            triples.append((e[1], m, w))
    return SurfaceComplex(triples)


def star(c: SurfaceComplex, v: int) -> SurfaceComplex:
    """The subcomplex of all triangles containing ``v``, with their faces."""
    return SurfaceComplex(c.triangles_of_vertex(v))


def link(c: SurfaceComplex, v: int) -> tuple[Edge, ...]:
    """The edges opposite ``v`` in the triangles containing it, sorted.

    As a 1-complex the link is a disjoint union of simple paths and
    cycles; for genuine surfaces it is a single cycle (interior vertex)
    or a single path (boundary vertex).
    """
    opposite = []
    for t in c.triangles_of_vertex(v):
        a, b = (x for x in t if x != v)
        opposite.append((a, b))
    return tuple(sorted(opposite))
