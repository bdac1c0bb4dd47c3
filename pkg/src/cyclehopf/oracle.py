"""Brute-force ground truth: explicit enumeration of simple cycles.

Two independent enumerators are provided so the oracle itself can be
cross-checked: a Johnson-style elementary-circuit search (the default) and
a naive pruned DFS. Loops are emitted by a pre-pass; backtracks fall out of
the main search as ordinary 2-circuits.
"""

from __future__ import annotations

from collections import defaultdict

from .census import CycleCensus
from .digraph import Digraph
from .errors import BudgetExceededError
from .hikes import SimpleCycle

__all__ = [
    "DEFAULT_CYCLE_BUDGET",
    "enumerate_simple_cycles",
    "enumerate_simple_cycles_dfs",
    "brute_force_census",
    "brute_force_hamiltonian",
]

DEFAULT_CYCLE_BUDGET = 10**6


def enumerate_simple_cycles(g: Digraph, budget: int = DEFAULT_CYCLE_BUDGET) -> list[SimpleCycle]:
    """Every elementary circuit exactly once, canonical, loops included."""
    out: list[SimpleCycle] = []
    for v in range(g.n):
        if g.has_edge(v, v):
            out.append(SimpleCycle((v,)))
            _check_budget(out, budget)
    # loop-free successor masks for the length >= 2 search
    succ = [g.out_masks[v] & ~(1 << v) for v in range(g.n)]
    for start in range(g.n):
        remaining = ((1 << g.n) - 1) ^ ((1 << start) - 1)
        comp = _scc_of(succ, remaining, start)
        if comp.bit_count() < 2:
            continue
        _johnson_search(start, comp, succ, out, budget)
    return out


def _johnson_search(
    start: int, comp: int, succ: list[int], out: list[SimpleCycle], budget: int
) -> None:
    """All circuits through ``start`` inside the strongly connected set ``comp``.

    Blocked-set bookkeeping per Johnson: a vertex stays blocked until some
    extension through it reaches ``start``, which keeps the search output-
    sensitive instead of factorial.
    """
    blocked: set[int] = set()
    blocked_by: dict[int, set[int]] = defaultdict(set)
    path: list[int] = []

    def unblock(v: int) -> None:
        stack = [v]
        while stack:
            u = stack.pop()
            if u in blocked:
                blocked.remove(u)
                stack.extend(blocked_by[u])
                blocked_by[u].clear()

    def circuit(v: int) -> bool:
        found = False
        path.append(v)
        blocked.add(v)
        for w in _bits(succ[v] & comp):
            if w == start:
                out.append(SimpleCycle(tuple(path)))
                _check_budget(out, budget)
                found = True
            elif w not in blocked:
                if circuit(w):
                    found = True
        if found:
            unblock(v)
        else:
            for w in _bits(succ[v] & comp):
                blocked_by[w].add(v)
        path.pop()
        return found

    circuit(start)


def enumerate_simple_cycles_dfs(
    g: Digraph, budget: int = DEFAULT_CYCLE_BUDGET
) -> list[SimpleCycle]:
    """Second, independent enumerator: DFS with smallest-vertex-first pruning."""
    out: list[SimpleCycle] = []
    succ = g.out_masks
    for start in range(g.n):
        if g.has_edge(start, start):
            out.append(SimpleCycle((start,)))
            _check_budget(out, budget)
        path = [start]
        visited = 1 << start

        def extend(v: int) -> None:
            nonlocal visited
            for w in _bits(succ[v]):
                if w == start and len(path) >= 2:
                    out.append(SimpleCycle(tuple(path)))
                    _check_budget(out, budget)
                elif w > start and not (visited >> w) & 1:
                    path.append(w)
                    visited |= 1 << w
                    extend(w)
                    path.pop()
                    visited ^= 1 << w

        extend(start)
    return out


def brute_force_census(g: Digraph, budget: int = DEFAULT_CYCLE_BUDGET) -> CycleCensus:
    counts: dict[int, int] = {}
    for c in enumerate_simple_cycles(g, budget):
        counts[c.length] = counts.get(c.length, 0) + 1
    return CycleCensus(counts)


def brute_force_hamiltonian(g: Digraph, budget: int = DEFAULT_CYCLE_BUDGET) -> int:
    if g.n == 0:
        return 0
    return sum(1 for c in enumerate_simple_cycles(g, budget) if c.length == g.n)


def _scc_of(succ: list[int], allowed: int, v: int) -> int:
    """Bitmask of the strongly connected component of ``v`` within ``allowed``."""
    fwd = _reachable(succ, allowed, v)
    n = len(succ)
    pred = [0] * n
    for u in _bits(allowed):
        for w in _bits(succ[u] & allowed):
            pred[w] |= 1 << u
    back = _reachable(pred, allowed, v)
    return fwd & back


def _reachable(succ: list[int], allowed: int, v: int) -> int:
    seen = 1 << v
    frontier = [v]
    while frontier:
        u = frontier.pop()
        fresh = succ[u] & allowed & ~seen
        seen |= fresh
        frontier.extend(_bits(fresh))
    return seen


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_budget(out: list, budget: int) -> None:
    if len(out) > budget:
        raise BudgetExceededError(f"cycle enumeration exceeded budget {budget}")
