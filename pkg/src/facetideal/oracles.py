"""Brute-force reference computations.

These deliberately avoid the fast paths used elsewhere in the package and
follow the definitions literally; Betti numbers, for instance, come from the
Taylor complex with dense Gaussian elimination instead of Hochster's formula.
They are exponential and meant for small inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .core import MonomialIdeal, SimplicialComplex


def _bits(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _mask(s) -> int:
    return sum(1 << i for i in s)


def _minimal(sets) -> list[frozenset]:
    sets = set(sets)
    return [s for s in sets if not any(t < s for t in sets)]


def _maximal(sets) -> list[frozenset]:
    sets = set(sets)
    return [s for s in sets if not any(s < t for t in sets)]


def brute_minimal_covers(complex_: SimplicialComplex) -> set[int]:
    n = complex_.n
    facets = [_bits(f) for f in complex_.facets]
    covers = []
    for r in range(n + 1):
        for c in combinations(range(n), r):
            s = frozenset(c)
            if all(s & f for f in facets):
                covers.append(s)
    return {_mask(s) for s in _minimal(covers)}


def brute_nonface_facets(ideal: MonomialIdeal) -> set[int]:
    """Maximal subsets whose monomial lies outside the ideal."""
    n = ideal.n
    gens = [_bits(g) for g in ideal.generators]
    faces = [
        frozenset(c)
        for r in range(n + 1)
        for c in combinations(range(n), r)
        if not any(g <= frozenset(c) for g in gens)
    ]
    return {_mask(s) for s in _maximal(faces)}


def brute_nonface_faces(ideal: MonomialIdeal) -> set[int]:
    gens = [_bits(g) for g in ideal.generators]
    return {
        _mask(c)
        for r in range(ideal.n + 1)
        for c in combinations(range(ideal.n), r)
        if not any(g <= frozenset(c) for g in gens)
    }


def brute_alexander_dual_faces(ideal: MonomialIdeal) -> set[int]:
    """Faces ``F`` of the Alexander dual: ``V \\ F`` is not a face of ``Δ_N``."""
    full = (1 << ideal.n) - 1
    faces = brute_nonface_faces(ideal)
    return {f for f in range(full + 1) if (full & ~f) not in faces}


def brute_component(ideal: MonomialIdeal, k: int) -> set[int]:
    gens = [_bits(g) for g in ideal.generators]
    return {
        _mask(c)
        for c in combinations(range(ideal.n), k)
        if any(g <= frozenset(c) for g in gens)
    }


def brute_colon(ideal: MonomialIdeal, m: int) -> set[int]:
    """Minimal square-free ``u`` with ``u * m`` in the ideal."""
    gens = [_bits(g) for g in ideal.generators]
    ms = _bits(m)
    members = [
        frozenset(c)
        for r in range(ideal.n + 1)
        for c in combinations(range(ideal.n), r)
        if any(g <= frozenset(c) | ms for g in gens)
    ]
    return {_mask(s) for s in _minimal(members)}


def _is_leaf(facets: list[frozenset], f: frozenset) -> bool:
    others = [g for g in facets if g != f]
    if not others:
        return True
    meet = f & frozenset().union(*others)
    return any(meet <= g for g in others)


def brute_is_forest(complex_: SimplicialComplex) -> bool:
    facets = [_bits(f) for f in complex_.facets]
    for r in range(1, len(facets) + 1):
        for sub in combinations(facets, r):
            if not any(_is_leaf(list(sub), f) for f in sub):
                return False
    return True


def dense_rank(matrix: list[list[int]], p: int = 0) -> int:
    """Gaussian elimination over ``Fraction`` (``p == 0``) or integers mod ``p``."""
    if p:
        rows = [[x % p for x in row] for row in matrix]
    else:
        rows = [[Fraction(x) for x in row] for row in matrix]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                if p:
                    f = rows[i][c] * pow(rows[r][c], -1, p) % p
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
                else:
                    f = rows[i][c] / rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def taylor_betti(ideal: MonomialIdeal, p: int = 0) -> dict[tuple[int, int], int]:
    """Graded Betti numbers of ``R/I`` from the Taylor complex.

    ``Tor_i(k, R/I)`` in multidegree ``m`` is the homology of the Taylor
    complex tensored with ``k``: basis the generator subsets with lcm ``m``,
    keeping only boundary terms that do not change the lcm.
    """
    gens = list(ideal.generators)
    q = len(gens)
    by_lcm: dict[int, dict[int, list[tuple[int, ...]]]] = {}
    for r in range(q + 1):
        for sub in combinations(range(q), r):
            lcm = 0
            for i in sub:
                lcm |= gens[i]
            by_lcm.setdefault(lcm, {}).setdefault(r, []).append(sub)
    out: dict[tuple[int, int], int] = {}
    for lcm, groups in by_lcm.items():
        ranks = {}
        for r, subs in groups.items():
            lower = groups.get(r - 1, [])
            if r == 0 or not lower:
                ranks[r] = 0
                continue
            pos = {s: i for i, s in enumerate(lower)}
            mat = []
            for s in subs:
                row = [0] * len(lower)
                for j in range(r):
                    face = s[:j] + s[j + 1:]
                    if face in pos:
                        row[pos[face]] = (-1) ** j
                mat.append(row)
            ranks[r] = dense_rank(mat, p)
        j = bin(lcm).count("1")
        for r, subs in groups.items():
            h = len(subs) - ranks[r] - ranks.get(r + 1, 0)
            if h:
                out[(r, j)] = out.get((r, j), 0) + h
    return out


def brute_reduced_betti(complex_: SimplicialComplex, p: int = 0) -> dict[int, int]:
    """Reduced Betti numbers from dense boundary matrices over all faces."""
    if not complex_.facets:
        return {}
    faces: set[frozenset] = set()
    for f in complex_.facets:
        fs = sorted(_bits(f))
        for r in range(len(fs) + 1):
            faces.update(frozenset(c) for c in combinations(fs, r))
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for s in faces:
        by_dim.setdefault(len(s) - 1, []).append(tuple(sorted(s)))
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        lower = {s: i for i, s in enumerate(by_dim[d - 1])}
        mat = []
        for s in by_dim[d]:
            row = [0] * len(lower)
            for j in range(len(s)):
                row[lower[s[:j] + s[j + 1:]]] = (-1) ** j
            mat.append(row)
        ranks[d] = dense_rank(mat, p)
    return {
        d: len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        for d in range(-1, top + 1)
    }
