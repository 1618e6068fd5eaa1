"""Leaves, free vertices, forests and localization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    MonomialIdeal,
    PreconditionError,
    SimplicialComplex,
    indices,
)

DEFAULT_MAX_FACETS = 15


@dataclass(frozen=True)
class ForestVerdict:
    """Outcome of :func:`is_forest`.

    ``witness`` is a leaf-elimination order when ``is_forest`` holds and a
    leafless subcollection otherwise.
    """

    is_forest: bool
    witness: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.is_forest


def _require_facet(complex_: SimplicialComplex, facet: int) -> None:
    if facet not in complex_.facets:
        raise PreconditionError("not a facet of the complex")


def remove_facet(complex_: SimplicialComplex, facet: int) -> SimplicialComplex:
    _require_facet(complex_, facet)
    return SimplicialComplex(complex_.ambient, [f for f in complex_.facets if f != facet])


def _leaf_partner(facets: tuple[int, ...], facet: int) -> Optional[int]:
    """A facet ``G`` with ``facet ∩ V(rest) ⊆ G``; ``facet`` itself when it
    is alone; ``None`` if ``facet`` is not a leaf."""
    rest = [g for g in facets if g != facet]
    if not rest:
        return facet
    union = 0
    for g in rest:
        union |= g
    meet = facet & union
    for g in rest:
        if meet & g == meet:
            return g
    return None


def is_leaf(complex_: SimplicialComplex, facet: int) -> tuple[bool, Optional[int]]:
    """Whether ``facet`` is a leaf, with the facet that swallows its
    intersection with the rest (``facet`` itself if it is the only one)."""
    _require_facet(complex_, facet)
    partner = _leaf_partner(complex_.facets, facet)
    return partner is not None, partner


def leaves(complex_: SimplicialComplex) -> tuple[int, ...]:
    return tuple(f for f in complex_.facets if _leaf_partner(complex_.facets, f) is not None)


def free_vertices(complex_: SimplicialComplex, facet: int) -> tuple[int, ...]:
    """Vertices of ``facet`` lying in no other facet."""
    _require_facet(complex_, facet)
    others = 0
    for g in complex_.facets:
        if g != facet:
            others |= g
    return indices(facet & ~others)


def has_leaf_order(complex_: SimplicialComplex) -> Optional[tuple[int, ...]]:
    """Greedily strip leaves; the removal order, or ``None`` if some stage
    has no leaf."""
    remaining = list(complex_.facets)
    order = []
    while remaining:
        current = tuple(remaining)
        for f in current:
            if _leaf_partner(current, f) is not None:
                order.append(f)
                remaining.remove(f)
                break
        else:
            return None
    return tuple(order)


def _has_leaf(facets: tuple[int, ...]) -> bool:
    return any(_leaf_partner(facets, f) is not None for f in facets)


def is_forest(complex_: SimplicialComplex, max_facets: Optional[int] = DEFAULT_MAX_FACETS) -> ForestVerdict:
    """Decide whether every nonempty subcollection of facets has a leaf.

    Subcollections are scanned by increasing size, so a leafless witness is
    one of the smallest.  Subcollections of one or two facets always have a
    leaf and are skipped.
    """
    facets = complex_.facets
    q = len(facets)
    if max_facets is not None and q > max_facets:
        raise PreconditionError(f"{q} facets exceeds the forest-check limit of {max_facets}")
    order = has_leaf_order(complex_)
    if order is None:
        # greedy removal got stuck; the stuck stage itself is leafless
        remaining = list(facets)
        while True:
            current = tuple(remaining)
            leaf = next((f for f in current if _leaf_partner(current, f) is not None), None)
            if leaf is None:
                return ForestVerdict(False, current)
            remaining.remove(leaf)
    for size in range(3, q + 1):
        for sub in _combinations_by_mask(q, size):
            chosen = tuple(facets[i] for i in indices(sub))
            if not _has_leaf(chosen):
                return ForestVerdict(False, chosen)
    return ForestVerdict(True, order)


def _combinations_by_mask(q: int, size: int):
    # Gosper's hack: all q-bit masks with `size` bits, increasing
    if size == 0:
        yield 0
        return
    sub = (1 << size) - 1
    limit = 1 << q
    while sub < limit:
        yield sub
        c = sub & -sub
        r = sub + c
        sub = (((r ^ sub) >> 2) // c) | r


def is_tree(complex_: SimplicialComplex, max_facets: Optional[int] = DEFAULT_MAX_FACETS) -> bool:
    if not complex_.facets:
        return False
    return complex_.is_connected() and is_forest(complex_, max_facets).is_forest


def localize(ideal: MonomialIdeal, prime_vars: int) -> MonomialIdeal:
    """Localize at the prime generated by the variables in ``prime_vars``.

    Variables outside the prime become units and are dropped from every
    generator; the result lives over the prime's variables only.  An empty
    prime yields the unit ideal over the original ambient set.
    """
    amb = ideal.ambient
    if prime_vars & ~amb.full_mask:
        raise PreconditionError("prime variables outside the ambient set")
    if prime_vars == 0:
        return MonomialIdeal(amb, (0,))
    target = amb.restrict(prime_vars)
    gens = [amb.transport(g & prime_vars, target) for g in ideal.generators]
    return MonomialIdeal(target, gens)
