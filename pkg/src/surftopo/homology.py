"""Exact integral simplicial homology via boundary matrices and Smith normal form.

Everything here works over unbounded Python integers: intermediate
entries of a Smith reduction can outgrow any fixed width, so no
fixed-width arithmetic is used anywhere in this module.  Matrices store
only their nonzero entries (boundary operators are extremely sparse)
but behave like ordinary dense integer matrices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .simplicial import Edge, SurfaceComplex, Triangle, f_vector, triangle_edges


class IntegerMatrix:
    """An immutable rows x cols matrix of exact integers."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self._entries: dict[tuple[int, int], int] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry position {(i, j)} outside {rows}x{cols}")
            if v:
                self._entries[(i, j)] = v

    @classmethod
    def from_rows(cls, data: Iterable[Iterable[int]], cols: int | None = None) -> "IntegerMatrix":
        rows_list = [list(r) for r in data]
        if rows_list:
            widths = {len(r) for r in rows_list}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            cols = widths.pop()
        elif cols is None:
            cols = 0
        entries = {
            (i, j): v for i, row in enumerate(rows_list) for j, v in enumerate(row) if v
        }
        return cls(len(rows_list), cols, entries)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self._entries.get((i, j), 0)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def nonzero_items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._entries.items())

    def is_zero(self) -> bool:
        return not self._entries

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for (i, k), u in self._entries.items():
            for j, v in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + u * v
        return IntegerMatrix(self.rows, other.cols, acc)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._entries) == (other.rows, other.cols, other._entries)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


@dataclass(frozen=True)
class SNFResult:
    """Diagonal of the Smith normal form: d1 | d2 | ... | dr, all positive."""

    diagonal: tuple[int, ...]
    rank: int
    shape: tuple[int, int]


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus torsion in divisibility order."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.betti:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ChainComplexData:
    """Boundary operators of a complex in canonical sorted bases."""

    d1: IntegerMatrix  # rows = vertices, cols = edges
    d2: IntegerMatrix  # rows = edges, cols = triangles
    vertex_index: Mapping[int, int]
    edge_index: Mapping[Edge, int]
    triangle_index: Mapping[Triangle, int]


def boundary_matrices(c: SurfaceComplex) -> ChainComplexData:
    """The boundary operators with every simplex oriented by increasing vertex id.

    For an edge (a, b) with a < b the boundary is b - a; for a triangle
    (a, b, c) with a < b < c it is (b,c) - (a,c) + (a,b).  The groups do
    not depend on the orientation choice; sorted order makes the
    matrices reproducible.
    """
    vix = {v: i for i, v in enumerate(c.vertices)}
    eix = {e: i for i, e in enumerate(c.edges)}
    tix = {t: i for i, t in enumerate(c.triangles)}
    d1 = {}
    for e, j in eix.items():
        a, b = e
        d1[(vix[b], j)] = 1
        d1[(vix[a], j)] = -1
    d2 = {}
    for t, j in tix.items():
        ab, ac, bc = triangle_edges(t)
        d2[(eix[bc], j)] = 1
        d2[(eix[ac], j)] = -1
        d2[(eix[ab], j)] = 1
    return ChainComplexData(
        d1=IntegerMatrix(len(vix), len(eix), d1),
        d2=IntegerMatrix(len(eix), len(tix), d2),
        vertex_index=vix,
        edge_index=eix,
        triangle_index=tix,
    )


def smith_normal_form(m: IntegerMatrix) -> SNFResult:
    """Diagonalize by unimodular row/column operations.

    Pivot rule: the nonzero entry of minimum absolute value, ties broken
    by lowest (row, col).  Unit pivots (the common case for boundary
    matrices) are found through a lazy heap; each retires its row and
    column after one sweep of row operations.  Non-unit pivots follow
    the textbook reduce/fix-up loop, which guarantees the divisibility
    chain.
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    units: list[tuple[int, int]] = []
    for (i, j), v in m.nonzero_items():
        rows.setdefault(i, {})[j] = v
        col_rows.setdefault(j, set()).add(i)
        if v in (1, -1):
            units.append((i, j))
    heapq.heapify(units)

    def set_entry(i: int, j: int, v: int) -> None:
        if v:
            was = rows[i].get(j)
            rows[i][j] = v
            col_rows.setdefault(j, set()).add(i)
            if v in (1, -1) and was != v:
                heapq.heappush(units, (i, j))
        else:
            if j in rows[i]:
                del rows[i][j]
                col_rows[j].discard(i)
                if not col_rows[j]:
                    del col_rows[j]

    def row_sub(k: int, i: int, q: int) -> None:
        # row k -= q * row i
        for j, v in list(rows[i].items()):
            set_entry(k, j, rows[k].get(j, 0) - q * v)

    def negate_row(i: int) -> None:
        for j, v in list(rows[i].items()):
            rows[i][j] = -v
            if v in (1, -1):
                heapq.heappush(units, (i, j))

    def retire(i: int, j: int) -> None:
        # row i holds only the pivot at column j by now
        del rows[i][j]
        if not rows[i]:
            del rows[i]
        col_rows[j].discard(i)
        if not col_rows.get(j):
            col_rows.pop(j, None)

    def pick_pivot() -> tuple[int, int]:
        while units:
            i, j = units[0]
            if i in rows and rows[i].get(j) in (1, -1):
                return i, j
            heapq.heappop(units)
        best = None
        for i in rows:
            for j, v in rows[i].items():
                key = (abs(v), i, j)
                if best is None or key < best:
                    best = key
        return best[1], best[2]

    diagonal: list[int] = []
    while rows:
        i, j = pick_pivot()
        if rows[i][j] < 0:
            negate_row(i)
        p = rows[i][j]
        if p == 1:
            for k in list(col_rows[j]):
                if k != i:
                    row_sub(k, i, rows[k][j])
            diagonal.append(1)
            retire(i, j)
            for l in list(rows.get(i, {})):
                set_entry(i, l, 0)
            if i in rows and not rows[i]:
                del rows[i]
            continue
        # reduce the pivot column; leftovers are remainders smaller than p
        progressed = False
        for k in list(col_rows[j]):
            if k == i:
                continue
            q = rows[k][j] // p
            if q:
                row_sub(k, i, q)
            if rows[k].get(j):
                progressed = True
        if progressed:
            continue
        # column is clear; reduce the pivot row (column ops now touch only row i)
        leftover = False
        for l in list(rows[i]):
            if l == j:
                continue
            r = rows[i][l] % p
            set_entry(i, l, r)
            if r:
                leftover = True
        if leftover:
            continue
        # divisibility fix-up: fold in a row containing a non-multiple of p
        bad = None
        for k in rows:
            if k == i:
                continue
            for l, v in rows[k].items():
                if v % p:
                    bad = k
                    break
            if bad is not None:
                break
        if bad is not None:
            row_sub(i, bad, -1)  # row i += row bad; its column-j entry is zero
            continue
        diagonal.append(p)
        retire(i, j)

    for a, b in zip(diagonal, diagonal[1:]):
        assert b % a == 0, "Smith diagonal must form a divisibility chain"
    return SNFResult(tuple(diagonal), len(diagonal), (m.rows, m.cols))


def homology_groups(c: SurfaceComplex) -> tuple[HomologyGroup, HomologyGroup, HomologyGroup]:
    """(H0, H1, H2) with exact Betti ranks and torsion coefficients.

    H0 = Z^(v - rank d1); H1 has rank (e - rank d1) - rank d2 and torsion
    the Smith diagonal entries of d2 exceeding 1; H2 = Z^(f - rank d2)
    and is torsion-free because there are no 3-chains to quotient by.
    """
    data = boundary_matrices(c)
    s1 = smith_normal_form(data.d1)
    s2 = smith_normal_form(data.d2)
    v, e, f = f_vector(c)
    h0 = HomologyGroup(v - s1.rank)
    h1 = HomologyGroup((e - s1.rank) - s2.rank, tuple(d for d in s2.diagonal if d > 1))
    h2 = HomologyGroup(f - s2.rank)
    return h0, h1, h2


def euler_from_homology(h: tuple[HomologyGroup, HomologyGroup, HomologyGroup]) -> int:
    """Alternating sum of the free ranks; torsion does not contribute."""
    h0, h1, h2 = h
    return h0.betti - h1.betti + h2.betti
