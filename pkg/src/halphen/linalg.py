"""Exact rank computations for sparse rational matrices.

The authoritative path is fraction-free elimination over the integers
(Bareiss-style cross-multiplication with gcd normalization, which keeps
entries small on the sparse coefficient matrices we build).  A mod-p
elimination backed by numpy is available as an accelerator; it is only
ever a cross-check, never the source of truth.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

import numpy as np

SparseRow = Mapping[int, int | Fraction]

ACCELERATOR_PRIME = 2_147_483_629  # largest prime below 2^31


def _integer_row(row: SparseRow) -> dict[int, int]:
    scale = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            scale = scale * v.denominator // gcd(scale, v.denominator)
    out = {}
    for k, v in row.items():
        iv = int(v * scale) if isinstance(v, Fraction) else v * scale
        if iv:
            out[k] = iv
    return out


def _strip_gcd(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def exact_rank(rows: Iterable[SparseRow]) -> int:
    """Rank over the rationals of the matrix whose rows are sparse maps
    column -> coefficient."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for raw in rows:
        row = _integer_row(raw)
        while row:
            c = min(row)
            pivot = pivots.get(c)
            if pivot is None:
                pivots[c] = _strip_gcd(row)
                rank += 1
                break
            a, b = row[c], pivot[c]
            nxt: dict[int, int] = {}
            for k in row.keys() | pivot.keys():
                v = b * row.get(k, 0) - a * pivot.get(k, 0)
                if v:
                    nxt[k] = v
            row = _strip_gcd(nxt)
    return rank


def modp_rank(
    rows: Iterable[SparseRow], n_cols: int, p: int = ACCELERATOR_PRIME
) -> int:
    """Rank over GF(p).  Always <= the rational rank; equality holds for
    all but finitely many primes, so a large prime is a fast
    high-probability check on `exact_rank` (tests compare the two)."""
    dense = []
    for row in rows:
        arr = np.zeros(n_cols, dtype=np.int64)
        for k, v in row.items():
            if isinstance(v, Fraction):
                num = v.numerator % p
                den = pow(v.denominator % p, -1, p)
                arr[k] = num * den % p
            else:
                arr[k] = v % p
        dense.append(arr)
    if not dense:
        return 0
    a = np.array(dense, dtype=np.int64)
    n_rows = a.shape[0]
    rank = 0
    row_at = 0
    for col in range(n_cols):
        if row_at >= n_rows:
            break
        nonzero = np.nonzero(a[row_at:, col])[0]
        if nonzero.size == 0:
            continue
        pivot_row = row_at + nonzero[0]
        if pivot_row != row_at:
            a[[row_at, pivot_row]] = a[[pivot_row, row_at]]
        inv = pow(int(a[row_at, col]), -1, p)
        a[row_at] = a[row_at] * inv % p
        below = a[row_at + 1 :, col]
        mask = below != 0
        if mask.any():
            a[row_at + 1 :][mask] = (
                a[row_at + 1 :][mask] - below[mask, None] * a[row_at][None, :]
            ) % p
        rank += 1
        row_at += 1
    return rank
