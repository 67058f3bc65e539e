"""Homeomorphism classification of compact surfaces.

Every validated connected surface is determined up to homeomorphism by
orientability, genus and the number of boundary circles; the genus is
recovered from the Euler characteristic via chi = 2 - 2g - k in the
orientable case and chi = 2 - g - k in the nonorientable one.  Symbolic
fundamental-group presentations and first homology follow from the
class alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistentInvariants
from .homology import HomologyGroup, IntegerMatrix, smith_normal_form
from .simplicial import SurfaceComplex, euler_characteristic
from .surface import boundary_components, orientability, require_surface

Word = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class SurfaceClass:
    """Classification verdict: Sigma(g,k) when orientable, U(g,k) otherwise."""

    orientable: bool
    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise InconsistentInvariants("genus and boundary count must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise InconsistentInvariants("nonorientable surfaces have genus >= 1")

    @property
    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary_count
        return 2 - self.genus - self.boundary_count

    def __str__(self):
        name = "Sigma" if self.orientable else "U"
        return f"{name}(g={self.genus},k={self.boundary_count})"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        known = set(self.generators)
        for rel in self.relators:
            for sym, _ in rel:
                if sym not in known:
                    raise ValueError(f"relator symbol {sym!r} is not a generator")

    def __str__(self):
        gens = ",".join(self.generators)
        rels = ", ".join(
            " ".join(sym if exp == 1 else f"{sym}^-1" for sym, exp in rel)
            for rel in self.relators
        )
        return f"<{gens} | {rels}>"


def classify(c: SurfaceComplex) -> SurfaceClass:
    """Decide the homeomorphism type of a validated connected surface."""
    require_surface(c)
    orientable = orientability(c).is_orientable
    k = len(boundary_components(c))
    chi = euler_characteristic(c)
    if orientable:
        doubled = 2 - k - chi
        if doubled < 0 or doubled % 2:
            raise InconsistentInvariants(
                f"orientable with chi={chi}, k={k}: 2-k-chi must be an even nonnegative number"
            )
        return SurfaceClass(True, doubled // 2, k)
    genus = 2 - k - chi
    if genus < 1:
        raise InconsistentInvariants(
            f"nonorientable with chi={chi}, k={k}: genus 2-k-chi must be >= 1"
        )
    return SurfaceClass(False, genus, k)


def homeomorphic(a: SurfaceComplex, b: SurfaceComplex) -> bool:
    """True iff the two validated surfaces have the same classification."""
    return classify(a) == classify(b)


def _commutator(x: str, y: str) -> Word:
    return ((x, 1), (y, 1), (x, -1), (y, -1))


def fundamental_group(s: SurfaceClass, reduced: bool = True) -> GroupPresentation:
    """Standard presentation of the fundamental group of the class.

    Closed orientable: <a1,b1,..,ag,bg | [a1,b1]..[ag,bg]>; closed
    nonorientable: <a1,..,ag | a1^2..ag^2>.  With boundary the single
    relator can be solved for the last boundary generator, leaving a
    free group; that reduced form is the default, the one-relator form
    (with all k boundary generators) is kept behind ``reduced=False``.
    """
    g, k = s.genus, s.boundary_count
    if s.orientable:
        handle_gens = [x for i in range(1, g + 1) for x in (f"a{i}", f"b{i}")]
        relator_core = [
            sym for i in range(1, g + 1) for sym in _commutator(f"a{i}", f"b{i}")
        ]
    else:
        handle_gens = [f"a{i}" for i in range(1, g + 1)]
        relator_core = [(f"a{i}", 1) for i in range(1, g + 1) for _ in range(2)]
    if k == 0:
        if not handle_gens:
            return GroupPresentation((), ())  # the sphere is simply connected
        return GroupPresentation(tuple(handle_gens), (tuple(relator_core),))
    boundary_gens = [f"c{i}" for i in range(1, k + 1)]
    if reduced:
        return GroupPresentation(tuple(handle_gens + boundary_gens[:-1]), ())
    relator = tuple(relator_core) + tuple((c, 1) for c in boundary_gens)
    return GroupPresentation(tuple(handle_gens + boundary_gens), (relator,))


def first_homology(s: SurfaceClass) -> HomologyGroup:
    """H1 of the class: the abelianized fundamental group.

    Closed orientable: Z^(2g).  Closed nonorientable: Z^(g-1) + Z/2, the
    single relation 2(a1+..+ag) = 0 contributing the order-2 torsion.
    With boundary the group is free because the relation eliminates one
    boundary generator.
    """
    g, k = s.genus, s.boundary_count
    if k == 0:
        if s.orientable:
            return HomologyGroup(2 * g)
        return HomologyGroup(g - 1, (2,))
    if s.orientable:
        return HomologyGroup(2 * g + k - 1)
    return HomologyGroup(g + k - 1)


def abelianized_homology(p: GroupPresentation) -> HomologyGroup:
    """Abelianization of a presentation, via the Smith form of its relator matrix."""
    gix = {sym: i for i, sym in enumerate(p.generators)}
    entries: dict[tuple[int, int], int] = {}
    for j, rel in enumerate(p.relators):
        for sym, exp in rel:
            pos = (gix[sym], j)
            entries[pos] = entries.get(pos, 0) + exp
    snf = smith_normal_form(
        IntegerMatrix(len(p.generators), len(p.relators), entries)
    )
    return HomologyGroup(
        len(p.generators) - snf.rank, tuple(d for d in snf.diagonal if d > 1)
    )
