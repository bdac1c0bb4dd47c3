"""Exact determinants and permanents of 0/1 principal submatrices.

The census formulas consume det(A_S) and perm(A_S) for every vertex subset
S, so both are tabulated once per graph. det(-zA_S) and perm(zA_S) are never
materialized as polynomials: they are the monomials (-1)^|S| det(A_S) z^|S|
and perm(A_S) z^|S|, which keeps the downstream sums purely integer.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod

from .digraph import Digraph, VertexSet
from .errors import SizeCapError
from .polyring import TruncPoly

__all__ = [
    "DEFAULT_SIZE_CAP",
    "MinorTables",
    "exact_det",
    "exact_perm",
    "build_minor_tables",
    "det_I_minus_zA",
    "perm_I_plus_zA",
]

DEFAULT_SIZE_CAP = 20


def exact_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    k = _check_square(m)
    if k == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            for r in range(col + 1, k):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = a[col]
        pivot = pivot_row[col]
        for r in range(col + 1, k):
            row = a[r]
            factor = row[col]
            for c in range(col + 1, k):
                # exact division: entries stay integer minors of the input
                row[c] = (pivot * row[c] - factor * pivot_row[c]) // prev
            row[col] = 0
        prev = pivot
    return sign * a[k - 1][k - 1]


def exact_perm(m: list[list[int]], cap: int | None = None) -> int:
    """Exact permanent by Ryser's formula with Gray-code column toggling."""
    k = _check_square(m)
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if k > cap:
        raise SizeCapError(f"permanent dimension {k} exceeds cap {cap}")
    if k == 0:
        return 1
    cols = [[(i, m[i][j]) for i in range(k) if m[i][j]] for j in range(k)]
    return _ryser(cols, k)


def _ryser(cols: list[list[tuple[int, int]]], k: int) -> int:
    # perm(A) = (-1)^k sum_{S != 0} (-1)^|S| prod_i sum_{j in S} a_ij;
    # consecutive Gray codes differ in one column, so |S| parity == idx parity.
    sums = [0] * k
    total = 0
    gray = 0
    for idx in range(1, 1 << k):
        bit = idx & -idx
        gray ^= bit
        entries = cols[bit.bit_length() - 1]
        if gray & bit:
            for i, val in entries:
                sums[i] += val
        else:
            for i, val in entries:
                sums[i] -= val
        if 0 in sums:
            continue
        p = prod(sums)
        total += -p if idx & 1 else p
    return -total if k & 1 else total


@dataclass(frozen=True)
class MinorTables:
    """det(A_S) and perm(A_S) for every subset S, indexed by the subset bitmask.

    max_popcount < n marks a partial build: entries for larger subsets are
    zeroed. Partial tables are only valid for degree-truncated census runs.
    """

    n: int
    det_tab: list[int]
    perm_tab: list[int]
    max_popcount: int

    def is_full(self) -> bool:
        return self.max_popcount >= self.n

    def det(self, s: VertexSet) -> int:
        return self.det_tab[s.bits]

    def perm(self, s: VertexSet) -> int:
        return self.perm_tab[s.bits]


def build_minor_tables(
    g: Digraph,
    size_cap: int | None = None,
    workers: int = 1,
    max_popcount: int | None = None,
) -> MinorTables:
    """Tabulate det(A_S) and perm(A_S) over all 2**n subsets.

    Subsets with a vertex whose in- or out-neighbourhood within S is empty
    are short-circuited to 0 (a zero row or column kills both values).
    ``workers`` > 1 splits the subset range across processes; the merge is a
    fixed-position write of exact integers, so results are bit-identical for
    any worker count.
    """
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if g.n > cap:
        raise SizeCapError(f"graph order {g.n} exceeds size cap {cap}")
    max_pc = g.n if max_popcount is None else min(max_popcount, g.n)
    if max_pc < 0:
        raise ValueError(f"negative max_popcount {max_pc}")
    size = 1 << g.n
    args = (g.n, g.out_masks, g.in_masks, max_pc)
    if workers <= 1 or size < 4096:
        det_tab, perm_tab = _table_chunk(args, 0, size)
        return MinorTables(g.n, det_tab, perm_tab, max_pc)
    bounds = _chunk_bounds(size, workers)
    det_tab = [0] * size
    perm_tab = [0] * size
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_table_chunk, args, lo, hi) for lo, hi in bounds]
        for (lo, hi), fut in zip(bounds, futures):
            dets, perms = fut.result()
            det_tab[lo:hi] = dets
            perm_tab[lo:hi] = perms
    return MinorTables(g.n, det_tab, perm_tab, max_pc)


def _chunk_bounds(size: int, workers: int) -> list[tuple[int, int]]:
    pieces = min(max(workers * 4, 1), max(size // 1024, 1))
    step = (size + pieces - 1) // pieces
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def _table_chunk(args: tuple, start: int, stop: int) -> tuple[list[int], list[int]]:
    n, out_masks, in_masks, max_pc = args
    dets = [0] * (stop - start)
    perms = [0] * (stop - start)
    for bits in range(start, stop):
        if bits == 0:
            dets[0 - start] = 1
            perms[0 - start] = 1
            continue
        k = bits.bit_count()
        if k > max_pc:
            continue
        members = []
        rest = bits
        degenerate = False
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if not (out_masks[v] & bits) or not (in_masks[v] & bits):
                degenerate = True
                break
            members.append(v)
            rest ^= low
        if degenerate:
            continue
        rows = [[(out_masks[u] >> v) & 1 for v in members] for u in members]
        dets[bits - start] = exact_det(rows)
        cols = [
            [(i, 1) for i in range(k) if rows[i][j]]
            for j in range(k)
        ]
        perms[bits - start] = _ryser(cols, k)
    return dets, perms


def det_I_minus_zA(t: MinorTables) -> TruncPoly:
    """det(I - zA) as sum over subsets of (-1)^|S| det(A_S) z^|S|."""
    cap = t.max_popcount
    out = [0] * (cap + 1)
    for bits, d in enumerate(t.det_tab):
        if d:
            k = bits.bit_count()
            out[k] += -d if k & 1 else d
    return TruncPoly(tuple(out))


def perm_I_plus_zA(t: MinorTables) -> TruncPoly:
    """perm(I + zA) as sum over subsets of perm(A_S) z^|S|."""
    cap = t.max_popcount
    out = [0] * (cap + 1)
    for bits, p in enumerate(t.perm_tab):
        if p:
            out[bits.bit_count()] += p
    return TruncPoly(tuple(out))


def _check_square(m: list[list[int]]) -> int:
    k = len(m)
    for row in m:
        if len(row) != k:
            raise ValueError(f"matrix is not square: {k} rows, row of length {len(row)}")
    return k
