"""Covers, the cover complex, complements, the nonface complex and the dual
ideal.

Everything here works on bitmasks.  ``Δ_N`` is never listed face by face;
:class:`NonfaceComplexView` answers membership queries against the ideal and
derives its facets from minimal covers.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import (
    MonomialIdeal,
    PreconditionError,
    SimplicialComplex,
    canonical_sort,
    degree,
    facet_complex,
    indices,
    mask_of,
    maximalize,
    minimalize,
)


def minimal_transversals(edges: Sequence[int]) -> tuple[int, ...]:
    """All inclusion-minimal sets meeting every edge, canonically sorted.

    Branches on the vertices of a smallest uncovered edge.  Vertices tried in
    earlier sibling branches are excluded, so each set is produced at most
    once, and a branch is cut as soon as some chosen vertex has lost every
    private edge (it can never regain one).
    """
    edges = minimalize(edges)
    if 0 in edges:
        return ()  # the empty edge cannot be met
    found: list[int] = []

    def private_ok(chosen: int) -> bool:
        # every chosen vertex must be the sole chosen vertex of some edge
        private = 0
        for e in edges:
            hit = e & chosen
            if hit and hit & (hit - 1) == 0:
                private |= hit
        return private == chosen

    def search(chosen: int, excluded: int) -> None:
        best = None
        for e in edges:
            if not e & chosen:
                avail = e & ~excluded
                if not avail:
                    return
                if best is None or degree(avail) < degree(best):
                    best = avail
        if best is None:
            found.append(chosen)
            return
        for v in indices(best):
            bit = 1 << v
            nxt = chosen | bit
            if private_ok(nxt):
                search(nxt, excluded)
            excluded |= bit

    search(0, 0)
    return minimalize(found)


class CoverComplex(SimplicialComplex):
    """Simplicial complex whose facets are the minimal covers of a source
    complex; ``covering_number`` is the least facet size."""

    @property
    def covering_number(self) -> int:
        if not self.facets:
            raise PreconditionError("complex has no cover")
        return min(degree(f) for f in self.facets)


def minimal_covers(complex_: SimplicialComplex, scope: str = "vertex") -> CoverComplex:
    """Minimal vertex covers of ``complex_``.

    ``scope`` may be ``"vertex"`` or ``"variable"``; minimal variable covers
    never use a non-vertex, so both scopes give the same facets.
    """
    if scope not in ("vertex", "variable"):
        raise ValueError(f"unknown cover scope {scope!r}")
    return CoverComplex(complex_.ambient, minimal_transversals(complex_.facets))


cover_complex = minimal_covers


def covering_number(complex_: SimplicialComplex) -> int:
    return minimal_covers(complex_).covering_number


def is_unmixed(complex_: SimplicialComplex) -> bool:
    return minimal_covers(complex_).is_pure()


def complement_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    full = complex_.ambient.full_mask
    return SimplicialComplex(complex_.ambient, [full & ~f for f in complex_.facets])


def dual_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The facet ideal of the cover complex.  Swaps the zero and unit ideals."""
    if ideal.is_unit():
        return MonomialIdeal(ideal.ambient, ())
    return MonomialIdeal(ideal.ambient, minimal_transversals(ideal.generators))


def nonface_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal of an explicit complex, computed as the facet
    ideal of the cover complex of its complement."""
    comp = complement_complex(complex_)
    return MonomialIdeal(complex_.ambient, minimal_transversals(comp.facets))


class NonfaceComplexView:
    """The Stanley-Reisner complex ``Δ_N`` of a square-free monomial ideal."""

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        self.ambient = ideal.ambient

    def __repr__(self) -> str:
        return f"NonfaceComplexView({self.ideal})"

    def __eq__(self, other) -> bool:
        return isinstance(other, NonfaceComplexView) and self.ideal == other.ideal

    def __hash__(self) -> int:
        return hash(self.ideal)

    def is_face(self, face: int) -> bool:
        return not self.ideal.contains(face)

    @cached_property
    def facets(self) -> tuple[int, ...]:
        if self.ideal.is_unit():
            return ()
        full = self.ambient.full_mask
        return canonical_sort(full & ~g for g in minimal_transversals(self.ideal.generators))

    def as_complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.ambient, self.facets)

    def dimension(self) -> int:
        if not self.facets:
            raise PreconditionError("the unit ideal has a void nonface complex")
        return max(degree(f) for f in self.facets) - 1

    def faces_of_dimension(self, i: int) -> tuple[int, ...]:
        out: set[int] = set()
        for f in self.facets:
            if degree(f) > i:
                out.update(mask_of(c) for c in combinations(indices(f), i + 1))
        return canonical_sort(out)

    def pure_skeleton(self, i: int) -> SimplicialComplex:
        """Subcomplex generated by all ``i``-dimensional faces."""
        return SimplicialComplex(self.ambient, self.faces_of_dimension(i))


def nonface_complex(ideal: MonomialIdeal) -> NonfaceComplexView:
    return NonfaceComplexView(ideal)


def is_face(view: NonfaceComplexView, face: int) -> bool:
    return view.is_face(face)


def alexander_dual(view: NonfaceComplexView) -> NonfaceComplexView:
    """Complex of complements of non-faces, as the nonface view of the dual
    ideal."""
    return NonfaceComplexView(dual_ideal(view.ideal))


def component(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Ideal generated by every square-free degree-``k`` monomial of ``ideal``."""
    n = ideal.n
    if k < 0:
        raise ValueError("component degree must be non-negative")
    if k > n or ideal.is_zero():
        return MonomialIdeal(ideal.ambient, ())
    full = ideal.ambient.full_mask
    out: set[int] = set()
    for g in ideal.generators:
        d = degree(g)
        if d > k:
            continue
        free = indices(full & ~g)
        for extra in combinations(free, k - d):
            out.add(g | mask_of(extra))
    return MonomialIdeal(ideal.ambient, out)


def variable_covers_of_size(complex_: SimplicialComplex, k: int) -> tuple[int, ...]:
    """Every ``k``-subset of the ambient variables meeting all facets."""
    n = complex_.n
    if k < 0 or k > n:
        return ()
    facets = complex_.facets
    found = []
    for c in combinations(range(n), k):
        m = mask_of(c)
        if all(f & m for f in facets):
            found.append(m)
    return canonical_sort(found)


def facet_complex_covers(ideal: MonomialIdeal) -> CoverComplex:
    """Cover complex of the facet complex of ``ideal``."""
    return minimal_covers(facet_complex(ideal))


def restrict_faces(facets: Iterable[int], subset: int) -> tuple[int, ...]:
    """Facets of the induced subcomplex on ``subset``."""
    return maximalize(f & subset for f in facets)
