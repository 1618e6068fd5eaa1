"""Simplicial homology over an exact field and the homological tests built
on it.

Cohen-Macaulayness is decided by Reisner's criterion on links, and its
sequential version by Duval's test on pure skeleta.  Graded Betti numbers,
and with them linear resolutions, come from Hochster's formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FacetIdealError,
    MonomialIdeal,
    PreconditionError,
    SimplicialComplex,
    degree,
    facet_complex,
    indices,
    maximalize,
    submasks,
)
from .duality import (
    NonfaceComplexView,
    component,
    covering_number,
    dual_ideal,
    nonface_ideal,
    restrict_faces,
)
from .linalg import rank


class EquivalenceViolation(AssertionError):
    """Two routes that must agree did not."""


@dataclass(frozen=True)
class FieldSpec:
    """Q (``characteristic == 0``) or the prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p > 1 and any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise FacetIdealError(f"{p} is not a prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        if t.startswith("fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                raise FacetIdealError(f"bad field {text!r}") from None
        raise FacetIdealError(f"bad field {text!r}; use q or fp:<p>")

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers ``b̃_i`` for ``i = -1, 0, ..., dim``."""

    betti: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        j = i + 1
        return self.betti[j] if 0 <= j < len(self.betti) else 0

    def as_dict(self) -> dict[int, int]:
        return {i - 1: b for i, b in enumerate(self.betti)}

    def vanishes_below(self, top: int) -> bool:
        return all(self[i] == 0 for i in range(-1, top))


@lru_cache(maxsize=1 << 16)
def _reduced_betti(facets: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not facets:
        return ()
    by_size: dict[int, list[int]] = {}
    seen: set[int] = set()
    for f in facets:
        for s in submasks(f):
            if s not in seen:
                seen.add(s)
                by_size.setdefault(degree(s), []).append(s)
    top = max(by_size)
    position = {s: i for group in by_size.values() for i, s in enumerate(group)}
    ranks = [0] * (top + 2)  # ranks[d]: boundary from size-d faces to size-(d-1)
    for d in range(1, top + 1):
        rows = []
        for s in by_size[d]:
            row = {}
            for j, v in enumerate(indices(s)):
                row[position[s & ~(1 << v)]] = -1 if j & 1 else 1
            rows.append(row)
        ranks[d] = rank(rows, p)
    return tuple(len(by_size[d]) - ranks[d] - ranks[d + 1] for d in range(0, top + 1))


def reduced_homology(complex_: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    return HomologyProfile(_reduced_betti(complex_.facets, field.characteristic))


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    """``Σ (-1)^i f_i`` over all faces including the empty face (``i = -1``)."""
    return sum(-1 if degree(s) % 2 == 0 else 1 for s in complex_.faces())


def link(complex_: SimplicialComplex, face: int) -> SimplicialComplex:
    if not complex_.has_face(face):
        raise PreconditionError("not a face of the complex")
    return SimplicialComplex(
        complex_.ambient, [f & ~face for f in complex_.facets if f & face == face]
    )


def _unit_check(ideal: MonomialIdeal) -> None:
    if ideal.is_unit():
        raise PreconditionError("R/I is zero for the unit ideal")


def krull_dimension(ideal: MonomialIdeal) -> int:
    """``n - α`` from the covers, checked against ``1 + dim Δ_N``."""
    _unit_check(ideal)
    if ideal.is_zero():
        via_covers = ideal.n
    else:
        via_covers = ideal.n - covering_number(facet_complex(ideal))
    via_nonfaces = 1 + NonfaceComplexView(ideal).dimension()
    if via_covers != via_nonfaces:
        raise EquivalenceViolation(f"krull dimension {via_covers} != {via_nonfaces}")
    return via_covers


@lru_cache(maxsize=1 << 14)
def _is_cm_facets(facets: tuple[int, ...], p: int) -> bool:
    if not facets:
        return False
    sizes = {degree(f) for f in facets}
    if len(sizes) > 1:
        # the link condition forces purity; skip the face scan
        return False
    d = sizes.pop() - 1
    faces: set[int] = set()
    for f in facets:
        faces.update(submasks(f))
    for face in sorted(faces, key=degree):
        top = d - degree(face)
        if top <= 0:
            continue  # links of dimension 0 or -1 are never obstructions
        lk = maximalize(f & ~face for f in facets if f & face == face)
        if not HomologyProfile(_reduced_betti(lk, p)).vanishes_below(top):
            return False
    return True


def is_cohen_macaulay_complex(complex_: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Reisner's criterion on an explicit complex."""
    return _is_cm_facets(complex_.facets, field.characteristic)


def is_cohen_macaulay(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """Whether ``R/I`` is Cohen-Macaulay, by Reisner's criterion on ``Δ_N``."""
    _unit_check(ideal)
    return _is_cm_facets(NonfaceComplexView(ideal).facets, field.characteristic)


def pure_skeleton_ideal(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Nonface ideal of the pure ``i``-dimensional subcomplex of ``Δ_N``."""
    _unit_check(ideal)
    view = NonfaceComplexView(ideal)
    if not -1 <= i <= view.dimension():
        raise PreconditionError(f"skeleton dimension {i} outside [-1, {view.dimension()}]")
    return nonface_ideal(view.pure_skeleton(i))


@dataclass(frozen=True)
class SkeletonResult:
    dimension: int
    ideal: MonomialIdeal
    cohen_macaulay: bool


def skeleton_report(ideal: MonomialIdeal, field: FieldSpec = QQ) -> list[SkeletonResult]:
    """Cohen-Macaulay verdict for every pure skeleton of ``Δ_N``."""
    _unit_check(ideal)
    view = NonfaceComplexView(ideal)
    out = []
    for i in range(-1, view.dimension() + 1):
        skel = view.pure_skeleton(i)
        cm = _is_cm_facets(skel.facets, field.characteristic)
        out.append(SkeletonResult(i, nonface_ideal(skel), cm))
    return out


def is_sequentially_cm(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    return all(r.cohen_macaulay for r in skeleton_report(ideal, field))


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers ``β_{i,j}(R/I)`` keyed by ``(i, j)``."""

    entries: dict[tuple[int, int], int]
    field: FieldSpec = QQ

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    def format(self) -> str:
        """Macaulay2-style table: column ``i``, row ``j - i``."""
        if not self.entries:
            return "(zero module)"
        pd = self.projective_dimension()
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        head = "     " + "".join(f"{i:>{width}}" for i in range(pd + 1))
        lines = [head]
        for r in rows:
            cells = "".join(
                f"{(self[i, i + r] or '.')!s:>{width}}" for i in range(pd + 1)
            )
            lines.append(f"{r:>3}: {cells}")
        return "\n".join(lines)


def betti_table(ideal: MonomialIdeal, field: FieldSpec = QQ) -> BettiTable:
    """Graded Betti numbers of ``R/I`` from reduced homology of the induced
    subcomplexes of ``Δ_N`` (Hochster's formula)."""
    _unit_check(ideal)
    facets = NonfaceComplexView(ideal).facets
    p = field.characteristic
    entries: dict[tuple[int, int], int] = {}
    for w in range(1 << ideal.n):
        j = degree(w)
        prof = _reduced_betti(restrict_faces(facets, w), p)
        for t, b in enumerate(prof, start=-1):
            if b:
                key = (j - t - 1, j)
                entries[key] = entries.get(key, 0) + b
    return BettiTable(entries, field)


def has_linear_resolution(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """All syzygies of an equigenerated ideal in degree ``d`` sit on the
    strand ``j = i + d - 1``.

    The zero and unit ideals count as linear; mixed generator degrees do not.
    """
    if ideal.is_zero() or ideal.is_unit():
        return True
    if not ideal.is_equigenerated():
        return False
    d = degree(ideal.generators[0])
    table = betti_table(ideal, field)
    return all(j == i + d - 1 for (i, j) in table.entries if i >= 1)


def is_componentwise_linear(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """Every nonzero square-free homogeneous component has a linear resolution."""
    for k in range(0, ideal.n + 1):
        comp = component(ideal, k)
        if not comp.is_zero() and not has_linear_resolution(comp, field):
            return False
    return True


def eagon_reiner_check(ideal: MonomialIdeal, field: FieldSpec = QQ) -> bool:
    """``R/I`` Cohen-Macaulay iff the dual ideal has a linear resolution.
    Raises :class:`EquivalenceViolation` if the two sides disagree."""
    cm = is_cohen_macaulay(ideal, field)
    linear = has_linear_resolution(dual_ideal(ideal), field)
    if cm != linear:
        raise EquivalenceViolation(
            f"Eagon-Reiner fails on {ideal}: CM={cm}, dual linear={linear}"
        )
    return cm


def clear_caches() -> None:
    _reduced_betti.cache_clear()
    _is_cm_facets.cache_clear()


def restricted_homology(ideal: MonomialIdeal, subset: int, field: FieldSpec = QQ) -> HomologyProfile:
    """Reduced homology of ``Δ_N`` induced on ``subset``."""
    _unit_check(ideal)
    facets = NonfaceComplexView(ideal).facets
    return HomologyProfile(_reduced_betti(restrict_faces(facets, subset), field.characteristic))
