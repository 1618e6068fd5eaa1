"""Colon ideals, linear-quotient orders, componentwise linearity and
shellings read off from quotient orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    FacetIdealError,
    MonomialIdeal,
    PreconditionError,
    VariableSet,
    degree,
    format_sets,
    maximalize,
)
from .duality import NonfaceComplexView, component, dual_ideal
from .homalg import QQ, FieldSpec, has_linear_resolution


class SearchLimitExceeded(FacetIdealError):
    pass


def colon(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    """``(ideal : m)``, generated by ``g / gcd(g, m)`` over the generators."""
    return MonomialIdeal(ideal.ambient, [g & ~m for g in ideal.generators])


def _colon_vars(prefix: Sequence[int], m: int) -> Optional[int]:
    # variables generating (prefix : m), or None if some generator is not linear
    diffs = [g & ~m for g in prefix]
    if 0 in diffs:
        return 0  # unit colon; counted as linear
    singles = 0
    for d in diffs:
        if d & (d - 1) == 0:
            singles |= d
    if all(d & singles for d in diffs):
        return singles
    return None


def is_linear_step(prefix: MonomialIdeal, m: int) -> tuple[bool, int]:
    """Whether ``(prefix : m)`` is generated by variables, and which ones.

    A unit colon (``prefix`` containing ``m``) is reported linear with no
    variables.
    """
    c = colon(prefix, m)
    if c.is_unit():
        return True, 0
    if all(degree(g) == 1 for g in c.generators):
        v = 0
        for g in c.generators:
            v |= g
        return True, v
    return False, 0


@dataclass(frozen=True)
class QuotientOrderCertificate:
    ambient: VariableSet
    order: tuple[int, ...]
    colon_vars: tuple[int, ...]  # entry k belongs to order[k + 1]

    def replay(self, ideal: Optional[MonomialIdeal] = None) -> bool:
        """Re-check every colon step; with ``ideal``, also check that the
        order lists exactly its minimal generators."""
        if ideal is not None and sorted(self.order) != sorted(ideal.generators):
            return False
        if len(set(self.order)) != len(self.order) or len(self.colon_vars) != max(len(self.order) - 1, 0):
            return False
        for k in range(1, len(self.order)):
            prefix = MonomialIdeal(self.ambient, self.order[:k])
            ok, v = is_linear_step(prefix, self.order[k])
            if not ok or v != self.colon_vars[k - 1]:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "order": format_sets(self.ambient, self.order),
            "colon_vars": format_sets(self.ambient, self.colon_vars),
        }


def find_linear_quotient_order(
    ideal: MonomialIdeal, max_nodes: Optional[int] = None
) -> Optional[QuotientOrderCertificate]:
    """Exhaustive search for an order of the minimal generators with linear
    quotients.

    Depth-first over orders, trying generators in canonical order.  Whether a
    prefix can be completed depends only on its set of generators, so failed
    sets are remembered.  ``max_nodes`` bounds the number of expanded prefixes.
    """
    gens = ideal.generators
    q = len(gens)
    if q == 0:
        return QuotientOrderCertificate(ideal.ambient, (), ())
    full = (1 << q) - 1
    dead: set[int] = set()
    order: list[int] = []
    colons: list[int] = []
    nodes = 0

    def extend(chosen: int) -> bool:
        nonlocal nodes
        if chosen == full:
            return True
        if chosen in dead:
            return False
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise SearchLimitExceeded(f"gave up after {max_nodes} prefixes")
        prefix = [gens[i] for i in order]
        for i in range(q):
            if chosen >> i & 1:
                continue
            v = _colon_vars(prefix, gens[i]) if order else 0
            if v is None:
                continue
            order.append(i)
            colons.append(v)
            if extend(chosen | 1 << i):
                return True
            order.pop()
            colons.pop()
        dead.add(chosen)
        return False

    if not extend(0):
        return None
    return QuotientOrderCertificate(ideal.ambient, tuple(gens[i] for i in order), tuple(colons[1:]))


@dataclass(frozen=True)
class ComponentVerdict:
    degree: int
    component: MonomialIdeal
    certificate: Optional[QuotientOrderCertificate]
    linear: bool

    @property
    def certified(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class ComponentwiseReport:
    components: tuple[ComponentVerdict, ...]

    @property
    def certified(self) -> bool:
        return all(c.certified for c in self.components)

    @property
    def componentwise_linear(self) -> bool:
        return all(c.linear for c in self.components)


def componentwise_linear_via_quotients(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    max_nodes: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
) -> ComponentwiseReport:
    """Search a quotient order on every nonzero square-free component.

    A certified equigenerated component is linear without further work; an
    uncertified one is decided by its Betti table over ``field``.
    """
    out = []
    ks = range(0, ideal.n + 1) if degrees is None else degrees
    for k in ks:
        comp = component(ideal, k)
        if comp.is_zero():
            continue
        try:
            cert = find_linear_quotient_order(comp, max_nodes)
        except SearchLimitExceeded:
            cert = None
        linear = True if cert is not None else has_linear_resolution(comp, field)
        out.append(ComponentVerdict(k, comp, cert, linear))
    return ComponentwiseReport(tuple(out))


@dataclass(frozen=True)
class ShellingCertificate:
    ambient: VariableSet
    facets: tuple[int, ...]

    def replay(self) -> bool:
        return is_shelling_order(self.facets)

    def to_json(self) -> dict:
        return {"shelling": format_sets(self.ambient, self.facets)}


def is_shelling_order(facets: Sequence[int]) -> bool:
    """Each facet meets the complex of its predecessors in a pure complex of
    codimension one."""
    for k in range(1, len(facets)):
        f = facets[k]
        meets = maximalize(f & g for g in facets[:k])
        if any(degree(m) != degree(f) - 1 for m in meets):
            return False
    return True


def shelling_from_quotients(ideal: MonomialIdeal, max_nodes: Optional[int] = None) -> ShellingCertificate:
    """A shelling of ``Δ_N`` obtained from a linear-quotient order of the dual.

    Facets of ``Δ_N`` are the complements of the dual's generators; the
    quotient order carries over unchanged.
    """
    if ideal.is_unit():
        raise PreconditionError("the unit ideal has a void nonface complex")
    dual = dual_ideal(ideal)
    if not dual.is_equigenerated():
        raise PreconditionError("dual ideal is not equigenerated: R/I is not Cohen-Macaulay")
    cert = find_linear_quotient_order(dual, max_nodes)
    if cert is None:
        raise PreconditionError("no quotient order found for the dual ideal")
    full = ideal.ambient.full_mask
    order = tuple(full & ~g for g in cert.order)
    shelling = ShellingCertificate(ideal.ambient, order)
    if set(order) != set(NonfaceComplexView(ideal).facets) or not shelling.replay():
        raise FacetIdealError("transported quotient order failed to replay as a shelling")
    return shelling
