"""Exact matrix rank over Q and GF(p) for sparse integer matrices."""

from __future__ import annotations

from math import gcd
from typing import Iterable

SparseRow = dict[int, int]


def _normalize(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def rank(rows: Iterable[SparseRow], characteristic: int = 0) -> int:
    """Rank of the matrix whose rows are ``{column: entry}`` dicts.

    Characteristic 0 uses fraction-free integer elimination with row content
    removal; a prime characteristic reduces entries mod ``p``.
    """
    p = characteristic
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        if p:
            r = {k: v % p for k, v in row.items() if v % p}
        else:
            r = {k: v for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                if p:
                    inv = pow(r[col], -1, p)
                    r = {k: v * inv % p for k, v in r.items()}
                else:
                    r = _normalize(r)
                pivots[col] = r
                break
            a = r[col]
            if p:
                # pivot rows are monic
                for k, v in piv.items():
                    nv = (r.get(k, 0) - a * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                b = piv[col]
                new = {k: v * b for k, v in r.items()}
                for k, v in piv.items():
                    nv = new.get(k, 0) - a * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                r = _normalize(new)
    return len(pivots)
