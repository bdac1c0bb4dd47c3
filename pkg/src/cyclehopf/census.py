"""Simple-cycle and Hamiltonian-cycle counting via subset convolution.

The census is read off the length-weighted generating function

    DPi(z) = sum_S (-1)^|S| det(A_S) z^|S| * D perm(I + zA restricted to V\\S)

whose z^l coefficient is l times the number of simple cycles of length l.
A second, independently assembled form of DPi (permanent polynomial against
the derivative of the determinant polynomial) is computed alongside and the
two must agree exactly; disagreement or a failed divisibility by l signals
an arithmetic bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .detperm import MinorTables
from .digraph import Digraph, VertexSet, subset_complement
from .errors import InternalCheckError
from .polyring import TruncPoly

__all__ = [
    "CycleCensus",
    "subgraph_convolve",
    "hamiltonian_count",
    "cycle_census_conv",
    "zeta_poly",
    "mobius_poly",
    "perm_poly_by_subset",
    "det_poly_by_subset",
]


@dataclass(frozen=True)
class CycleCensus:
    """Exact count of simple cycles per length; zero counts are not stored."""

    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for length, c in self.counts.items():
            if length < 1:
                raise ValueError(f"cycle length {length} < 1")
            if c < 0:
                raise ValueError(f"negative count {c} for length {length}")
        object.__setattr__(
            self, "counts", {k: v for k, v in sorted(self.counts.items()) if v}
        )

    def __getitem__(self, length: int) -> int:
        return self.counts.get(length, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def max_length(self) -> int:
        return max(self.counts, default=0)

    def truncated(self, max_length: int) -> "CycleCensus":
        return CycleCensus({k: v for k, v in self.counts.items() if k <= max_length})


def subgraph_convolve(
    f: Callable[[VertexSet], TruncPoly],
    g: Callable[[VertexSet], TruncPoly],
    graph: Digraph,
) -> TruncPoly:
    """Sum of f(S) * g(V\\S) over all 2**n vertex subsets S, including 0 and V."""
    acc: TruncPoly | None = None
    for bits in range(1 << graph.n):
        s = VertexSet(bits)
        term = f(s) * g(subset_complement(graph, s))
        acc = term if acc is None else acc + term
    assert acc is not None
    return acc


def hamiltonian_count(g: Digraph, t: MinorTables) -> int:
    """Number of Hamiltonian cycles: the weighted det/perm sum divided by n.

    n * h_n = sum_S (-1)^|S| det(A_S) (n - |S|) perm(A_{V\\S}); the division
    must be exact.
    """
    n = g.n
    if n == 0:
        return 0
    if not t.is_full():
        raise ValueError("hamiltonian_count needs full minor tables, got a partial build")
    full = (1 << n) - 1
    acc = 0
    det_tab, perm_tab = t.det_tab, t.perm_tab
    for bits, d in enumerate(det_tab):
        if not d:
            continue
        k = bits.bit_count()
        if k == n:
            continue
        p = perm_tab[full ^ bits]
        if not p:
            continue
        term = d * (n - k) * p
        acc += -term if k & 1 else term
    q, r = divmod(acc, n)
    if r:
        raise InternalCheckError(f"Hamiltonian sum {acc} not divisible by n={n}")
    return q


def cycle_census_conv(g: Digraph, t: MinorTables, max_length: int | None = None) -> CycleCensus:
    """Exact simple-cycle census from the minor tables.

    Both assembly variants of DPi are computed and must agree; each z^l
    coefficient must be divisible by l. ``max_length`` truncates the census
    (counts up to that length stay exact; partial tables require it).
    """
    n = g.n
    cap = t.max_popcount if max_length is None else min(max_length, t.max_popcount)
    if max_length is not None and max_length > t.max_popcount:
        raise ValueError(
            f"max_length {max_length} exceeds table popcount bound {t.max_popcount}"
        )
    if n == 0 or cap == 0:
        return CycleCensus({})
    dpi = _dpi_det_against_dperm(n, t, cap)
    variant = _dpi_perm_against_ddet(n, t, cap)
    if dpi != variant:
        raise InternalCheckError(
            f"census variants disagree: {dpi} vs {variant}"
        )
    counts: dict[int, int] = {}
    for length in range(1, cap + 1):
        q, r = divmod(dpi[length], length)
        if r:
            raise InternalCheckError(
                f"coefficient {dpi[length]} at degree {length} not divisible by {length}"
            )
        if q:
            counts[length] = q
    return CycleCensus(counts)


def _dpi_det_against_dperm(n: int, t: MinorTables, cap: int) -> list[int]:
    # sum_S (-1)^|S| det(A_S) z^|S| * sum_{T <= V\S} |T| perm(A_T) z^|T|
    dperm = _sos_table(n, [bits.bit_count() * p for bits, p in enumerate(t.perm_tab)])
    full = (1 << n) - 1
    dpi = [0] * (cap + 1)
    for bits, d in enumerate(t.det_tab):
        if not d:
            continue
        s = bits.bit_count()
        if s > cap:
            continue
        signed = -d if s & 1 else d
        row = dperm[full ^ bits]
        for deg in range(min(len(row) - 1, cap - s) + 1):
            val = row[deg]
            if val:
                dpi[s + deg] += signed * val
    return dpi


def _dpi_perm_against_ddet(n: int, t: MinorTables, cap: int) -> list[int]:
    # -sum_S perm(I + zA_S) * D det(I - zA on V\S)
    psos = _sos_table(n, list(t.perm_tab))
    ddet = _sos_table(
        n,
        [
            -bits.bit_count() * d if bits.bit_count() & 1 else bits.bit_count() * d
            for bits, d in enumerate(t.det_tab)
        ],
    )
    full = (1 << n) - 1
    dpi = [0] * (cap + 1)
    for bits in range(1 << n):
        p_row = psos[bits]
        m_row = ddet[full ^ bits]
        for i in range(min(len(p_row) - 1, cap) + 1):
            a = p_row[i]
            if not a:
                continue
            for j in range(min(len(m_row) - 1, cap - i) + 1):
                b = m_row[j]
                if b:
                    dpi[i + j] -= a * b
    return dpi


def _sos_table(n: int, weights: list[int]) -> list[list[int]]:
    """tab[U][d] = sum of weights[T] over T <= U with |T| = d."""
    size = 1 << n
    tab: list[list[int]] = [[0] * (n + 1) for _ in range(size)]
    nonzero = bytearray(size)
    for bits, w in enumerate(weights):
        if w:
            tab[bits][bits.bit_count()] = w
            nonzero[bits] = 1
    for b in range(n):
        bit = 1 << b
        for bits in range(size):
            if bits & bit and nonzero[bits ^ bit]:
                src = tab[bits ^ bit]
                tab[bits] = [x + y for x, y in zip(tab[bits], src)]
                nonzero[bits] = 1
    return tab


def perm_poly_by_subset(t: MinorTables) -> list[list[int]]:
    """Coefficients of perm(I + zA_U) for every subset U, indexed by bitmask."""
    return _sos_table(t.n, list(t.perm_tab))


def det_poly_by_subset(t: MinorTables) -> list[list[int]]:
    """Coefficients of det(I - zA_U) for every subset U, indexed by bitmask."""
    return _sos_table(
        t.n,
        [-d if bits.bit_count() & 1 else d for bits, d in enumerate(t.det_tab)],
    )


def zeta_poly(g: Digraph, t: MinorTables) -> TruncPoly:
    """Generating polynomial of the self-avoiding hikes by length: perm(I + zA)."""
    from .detperm import perm_I_plus_zA

    return perm_I_plus_zA(t)


def mobius_poly(g: Digraph, t: MinorTables) -> TruncPoly:
    """Signed generating polynomial of the self-avoiding hikes: det(I - zA)."""
    from .detperm import det_I_minus_zA

    return det_I_minus_zA(t)
