"""Polygonal edge-word presentations of closed surfaces.

A word like ``aba^-1b^-1`` labels the sides of a 2n-gon; gluing equally
labelled sides (respecting the arrows) yields a closed surface.  The
invariants come from tracing which polygon corners get identified, and
the surface itself is realized simplicially by triangulating the
polygon, subdividing, and quotienting the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentInvariants, LabelCountError, WordSyntaxError
from .simplicial import (
    SurfaceComplex,
    barycentric_subdivision,
    build_complex,
    subdivision_vertex_ids,
)

Letter = tuple[str, int]  # label, exponent +1 / -1


@dataclass(frozen=True)
class EdgeWord:
    """A closed-surface gluing word: every label occurs exactly twice."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        counts: dict[str, int] = {}
        for lab, exp in self.letters:
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {exp}")
            counts[lab] = counts.get(lab, 0) + 1
        if not counts:
            raise LabelCountError("empty word")
        bad = {lab: n for lab, n in counts.items() if n != 2}
        if bad:
            raise LabelCountError(
                "each label must occur exactly twice; "
                + ", ".join(f"{lab} occurs {n}x" for lab, n in sorted(bad.items()))
            )

    def __str__(self):
        return "".join(lab if exp == 1 else f"{lab}^-1" for lab, exp in self.letters)


@dataclass(frozen=True)
class SchemeInvariants:
    vertex_classes: int
    edge_count: int
    face_count: int
    chi: int
    orientable: bool


def parse_word(text: str) -> EdgeWord:
    """Parse ``label ("^-1")?`` terms; a label is one ASCII letter plus optional digits."""
    letters: list[Letter] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if not ("a" <= ch <= "z" or "A" <= ch <= "Z"):
            raise WordSyntaxError(f"expected a label letter, found {ch!r}", i)
        start = i
        i += 1
        while i < n and text[i].isdigit():
            i += 1
        label = text[start:i]
        exp = 1
        if i < n and text[i] == "^":
            if not text.startswith("^-1", i):
                raise WordSyntaxError("the only supported exponent is ^-1", i)
            exp = -1
            i += 3
        letters.append((label, exp))
    if not letters:
        raise WordSyntaxError("empty word", 0)
    return EdgeWord(tuple(letters))


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self):
        groups: dict[int, list] = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return groups


def _occurrences(w: EdgeWord) -> dict[str, list[int]]:
    occ: dict[str, list[int]] = {}
    for idx, (lab, _) in enumerate(w.letters):
        occ.setdefault(lab, []).append(idx)
    return occ


def scheme_invariants(w: EdgeWord) -> SchemeInvariants:
    """Corner-trace the polygon to count vertex classes after gluing.

    Side i of the 2n-gon runs counterclockwise from corner i to corner
    i+1; with exponent +1 the label arrow agrees with that direction,
    with -1 it is reversed.  Gluing the two occurrences of a label
    identifies arrow-start with arrow-start and arrow-end with
    arrow-end.  chi = v - e + 1 (one face), and the scheme is orientable
    iff every label occurs once with each exponent.
    """
    n2 = len(w.letters)
    uf = _UnionFind(range(n2))

    def arrow(idx: int) -> tuple[int, int]:
        lab, exp = w.letters[idx]
        tail, head = idx, (idx + 1) % n2
        return (tail, head) if exp == 1 else (head, tail)

    orientable = True
    for lab, (i, j) in _occurrences(w).items():
        si, ei = arrow(i)
        sj, ej = arrow(j)
        uf.union(si, sj)
        uf.union(ei, ej)
        if w.letters[i][1] == w.letters[j][1]:
            orientable = False
    v = len(uf.classes())
    e = len(_occurrences(w))
    return SchemeInvariants(
        vertex_classes=v,
        edge_count=e,
        face_count=1,
        chi=v - e + 1,
        orientable=orientable,
    )


def classify_scheme(w: EdgeWord):
    """Surface class of the closed surface the word presents (k = 0 always)."""
    from .classify import SurfaceClass

    inv = scheme_invariants(w)
    if inv.orientable:
        doubled = 2 - inv.chi
        if doubled < 0 or doubled % 2:
            raise InconsistentInvariants(f"orientable scheme with chi={inv.chi}")
        return SurfaceClass(True, doubled // 2, 0)
    genus = 2 - inv.chi
    if genus < 1:
        raise InconsistentInvariants(f"nonorientable scheme with chi={inv.chi}")
    return SurfaceClass(False, genus, 0)


def _fan_disk(n2: int) -> tuple[SurfaceComplex, list[list[int]]]:
    """Fan triangulation of the polygon, one extra vertex per side.

    The per-side midpoint keeps the fan simplicial even for 2-gons like
    ``aa``.  Returns the disk and, per side, the boundary vertex path
    from corner i to corner i+1.
    """
    ring = []
    for i in range(n2):
        ring.extend((i, n2 + i))
    center = 2 * n2
    tris = [
        (ring[k], ring[(k + 1) % len(ring)], center) for k in range(len(ring))
    ]
    paths = [[i, n2 + i, (i + 1) % n2] for i in range(n2)]
    return build_complex(tris), paths


def scheme_to_complex(w: EdgeWord) -> SurfaceComplex:
    """Realize the word as a triangulated closed surface.

    The polygon disk is subdivided twice before gluing; after that every
    triangle owns an interior vertex, so identifying boundary vertices
    pairwise along equally labelled sides can never collapse or
    duplicate a simplex and the quotient stays simplicial.
    """
    n2 = len(w.letters)
    disk, side_paths = _fan_disk(n2)
    for _ in range(2):
        edge_ids, _ = subdivision_vertex_ids(disk)
        disk = barycentric_subdivision(disk)
        side_paths = [
            [
                x
                for a, b in zip(path, path[1:])
                for x in (a, edge_ids[tuple(sorted((a, b)))])
            ]
            + [path[-1]]
            for path in side_paths
        ]

    uf = _UnionFind(disk.vertices)
    for lab, (i, j) in _occurrences(w).items():
        pi = side_paths[i] if w.letters[i][1] == 1 else side_paths[i][::-1]
        pj = side_paths[j] if w.letters[j][1] == 1 else side_paths[j][::-1]
        for x, y in zip(pi, pj):
            uf.union(x, y)

    rep = {v: uf.find(v) for v in disk.vertices}
    glued = [tuple(rep[v] for v in t) for t in disk.triangles]
    return build_complex(glued)
