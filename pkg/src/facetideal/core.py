"""Variables, square-free monomials, simplicial complexes and square-free
monomial ideals.

A square-free monomial is stored as an ``int`` bitmask over the indices of
its ambient :class:`VariableSet`; bit ``i`` set means ``x_i`` divides the
monomial.  The same bitmask doubles as a face of a simplicial complex, and
``0`` is both the monomial ``1`` and the empty face.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

SquareFreeMonomial = int


class FacetIdealError(ValueError):
    """Base class for errors raised by this package."""


class ParseError(FacetIdealError):
    pass


class PreconditionError(FacetIdealError):
    """An operation was called outside its domain."""


# ---------- bitmask helpers ----------

def indices(mask: int) -> tuple[int, ...]:
    """Sorted indices of the set bits of ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def canonical_key(mask: int) -> tuple[int, ...]:
    return indices(mask)


def canonical_sort(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=canonical_key))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def minimalize(monomials: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal elements, deduplicated and canonically sorted."""
    cands = sorted(set(monomials), key=lambda m: (degree(m), canonical_key(m)))
    kept: list[int] = []
    for m in cands:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return canonical_sort(kept)


def maximalize(faces: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal elements, deduplicated and canonically sorted."""
    cands = sorted(set(faces), key=lambda m: -degree(m))
    kept: list[int] = []
    for f in cands:
        if not any(f & k == f for k in kept):
            kept.append(f)
    return canonical_sort(kept)


# ---------- domain types ----------

@dataclass(frozen=True)
class VariableSet:
    """Ordered, duplicate-free list of variable names ``x_1..x_n``."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise FacetIdealError("a variable set needs at least one variable")
        seen = set()
        for name in self.names:
            if name in seen:
                raise ParseError(f"duplicate variable {name!r}")
            seen.add(name)

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def full_mask(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise FacetIdealError(f"unknown variable {name!r}") from None

    def mask(self, spec: Union[str, Iterable[str]]) -> int:
        """Monomial from ``"xyz"``, ``"x1*x2"`` or an iterable of names;
        ``"1"`` is the unit monomial."""
        if isinstance(spec, str):
            spec = _split_monomial(spec, self.names)
        m = 0
        for name in spec:
            bit = 1 << self.index(name)
            if m & bit:
                raise ParseError(f"variable {name!r} repeated: not square-free")
            m |= bit
        return m

    def support_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in indices(mask)]

    def format_monomial(self, mask: int) -> str:
        if mask == 0:
            return "1"
        parts = self.support_names(mask)
        if all(len(n) == 1 for n in self.names):
            return "".join(parts)
        return "*".join(parts)

    def restrict(self, mask: int) -> "VariableSet":
        return VariableSet(tuple(self.support_names(mask)))

    def transport(self, mask: int, target: "VariableSet") -> int:
        """Re-index a monomial into another variable set sharing its names."""
        return target.mask(self.support_names(mask))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Ambient variable set plus an antichain of facets.

    Faces passed in are reduced to their maximal elements.  No facets at all
    is the void complex; the single facet ``0`` is the complex ``{∅}``.
    """

    ambient: VariableSet
    facets: tuple[int, ...] = field(default=())

    def __post_init__(self):
        full = self.ambient.full_mask
        for f in self.facets:
            if f & ~full:
                raise FacetIdealError("facet outside the ambient variable set")
        object.__setattr__(self, "facets", maximalize(self.facets))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ambient == other.ambient and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.ambient, self.facets))

    @property
    def n(self) -> int:
        return len(self.ambient)

    @property
    def vertex_mask(self) -> int:
        v = 0
        for f in self.facets:
            v |= f
        return v

    @property
    def vertices(self) -> tuple[int, ...]:
        return indices(self.vertex_mask)

    def dimension(self) -> int:
        if not self.facets:
            return -1
        return max(degree(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({degree(f) for f in self.facets}) <= 1

    def is_connected(self) -> bool:
        if not self.facets:
            raise PreconditionError("connectivity of a complex with no facets")
        reached = self.facets[0]
        pending = list(self.facets[1:])
        grew = True
        while grew and pending:
            grew = False
            rest = []
            for f in pending:
                if f & reached:
                    reached |= f
                    grew = True
                else:
                    rest.append(f)
            pending = rest
        return not pending

    def has_face(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def faces(self) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return out

    def __str__(self) -> str:
        return format_object(self)


@dataclass(frozen=True)
class MonomialIdeal:
    """Square-free monomial ideal given by its minimal generators.

    ``generators == ()`` is the zero ideal, ``generators == (0,)`` the unit
    ideal.
    """

    ambient: VariableSet
    generators: tuple[int, ...] = field(default=())

    def __post_init__(self):
        full = self.ambient.full_mask
        for g in self.generators:
            if g & ~full:
                raise FacetIdealError("generator outside the ambient variable set")
        object.__setattr__(self, "generators", minimalize(self.generators))

    @property
    def n(self) -> int:
        return len(self.ambient)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.generators == (0,)

    def contains(self, monomial: int) -> bool:
        return any(g & monomial == g for g in self.generators)

    def degrees(self) -> set[int]:
        return {degree(g) for g in self.generators}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def __str__(self) -> str:
        return format_object(self)


def facet_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(complex_.ambient, complex_.facets)


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if ideal.is_unit():
        raise PreconditionError("the unit ideal has no facet complex")
    return SimplicialComplex(ideal.ambient, ideal.generators)


# ---------- text and JSON forms ----------

_RANGE = re.compile(r"^([A-Za-z_]+)(\d+)\.\.\1?(\d+)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def _parse_varlist(text: str) -> list[str]:
    names: list[str] = []
    for item in (t.strip() for t in text.split(",")):
        if not item:
            raise ParseError("empty entry in variable list")
        m = _RANGE.match(item)
        if m:
            stem, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            if hi < lo:
                raise ParseError(f"empty variable range {item!r}")
            names.extend(f"{stem}{k}" for k in range(lo, hi + 1))
        elif _NAME.match(item):
            names.append(item)
        else:
            raise ParseError(f"bad variable name {item!r}")
    return names


_JUXTAPOSED = re.compile(r"[A-Za-z]\d*")


def _split_monomial(token: str, known: Sequence[str] = ()) -> list[str]:
    if token == "1":
        return []
    if "^" in token:
        raise ParseError(f"exponent in {token!r}: only square-free monomials are supported")
    if token in known:
        parts = [token]
    elif "*" in token:
        parts = [p.strip() for p in token.split("*")]
    else:
        parts = _JUXTAPOSED.findall(token)
        if "".join(parts) != token:
            raise ParseError(f"cannot split monomial {token!r}; use '*' between names")
    for p in parts:
        if not _NAME.match(p):
            raise ParseError(f"bad variable {p!r} in monomial {token!r}")
    if len(set(parts)) != len(parts):
        raise ParseError(f"repeated variable in {token!r}: not square-free")
    return parts


def parse(text: str) -> Union[MonomialIdeal, SimplicialComplex]:
    """Parse ``(xyz, zu) over x,y,z,u`` (an ideal), ``<xyz, zu>`` (a complex),
    or the JSON form ``{"vars": [...], "gens": [[indices], ...]}``."""
    text = text.strip()
    if text.startswith("{"):
        return parse_json(text)
    if not text:
        raise ParseError("empty input")
    closers = {"(": ")", "<": ">", "⟨": "⟩"}
    opener = text[0]
    if opener not in closers:
        raise ParseError("input must start with '(' for an ideal or '<' for a complex")
    close = text.find(closers[opener])
    if close < 0:
        raise ParseError(f"missing {closers[opener]!r}")
    body, tail = text[1:close].strip(), text[close + 1:].strip()
    tokens = [t.strip() for t in body.split(",")] if body else []
    if tokens in (["0"], [""]):
        tokens = []
    if any(not t for t in tokens):
        raise ParseError("empty monomial")
    if tail:
        if not tail.startswith("over"):
            raise ParseError(f"unexpected trailing text {tail!r}")
        names = _parse_varlist(tail[4:].strip())
        monos = [_split_monomial(t, names) for t in tokens]
    else:
        monos = [_split_monomial(t) for t in tokens]
        names = []
        for mono in monos:
            for v in mono:
                if v not in names:
                    names.append(v)
        if not names:
            raise ParseError("no variables: give an explicit 'over' list")
    ambient = VariableSet(tuple(names))
    masks = [ambient.mask(m) if m else 0 for m in monos]
    if opener == "(":
        return MonomialIdeal(ambient, masks)
    return SimplicialComplex(ambient, masks)


def parse_json(text: str) -> Union[MonomialIdeal, SimplicialComplex]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vars" not in data:
        raise ParseError("JSON input needs a 'vars' list")
    ambient = VariableSet(tuple(data["vars"]))
    key = "facets" if "facets" in data else "gens"
    masks = []
    for idx in data.get(key, []):
        if len(set(idx)) != len(idx):
            raise ParseError("repeated index: not square-free")
        if any(not isinstance(i, int) or not 0 <= i < len(ambient) for i in idx):
            raise ParseError(f"index out of range in {idx}")
        masks.append(mask_of(idx))
    if key == "facets":
        return SimplicialComplex(ambient, masks)
    return MonomialIdeal(ambient, masks)


def format_object(obj: Union[MonomialIdeal, SimplicialComplex]) -> str:
    """Canonical text form; ``parse(format_object(x)) == x``."""
    amb = obj.ambient
    if isinstance(obj, MonomialIdeal):
        body = ", ".join(amb.format_monomial(g) for g in obj.generators) or "0"
        left, right = "(", ")"
    else:
        body = ", ".join(amb.format_monomial(f) for f in obj.facets)
        left, right = "<", ">"
    return f"{left}{body}{right} over {','.join(amb.names)}"


def to_json(obj: Union[MonomialIdeal, SimplicialComplex]) -> dict:
    if isinstance(obj, MonomialIdeal):
        return {"vars": list(obj.ambient.names), "gens": [list(indices(g)) for g in obj.generators]}
    return {"vars": list(obj.ambient.names), "facets": [list(indices(f)) for f in obj.facets]}


def format_sets(ambient: VariableSet, masks: Sequence[int]) -> list[list[str]]:
    """JSON-ready list of sorted variable-name lists."""
    return [ambient.support_names(m) for m in masks]
