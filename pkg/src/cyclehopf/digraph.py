"""Directed graphs, vertex subsets, and induced-subgraph machinery.

Vertices are integers ``0..n-1``. A vertex subset is encoded as an int
bitmask so that iterating all ``2**n`` subsets, taking complements, and
indexing precomputed per-subset tables are all cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ParseError

__all__ = [
    "Digraph",
    "VertexSet",
    "parse_edge_list",
    "induced_adjacency",
    "subset_complement",
    "all_subsets",
]


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0..n-1}`` as a bitmask; ``bits`` doubles as a table index."""

    bits: int

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex {v}")
            bits |= 1 << v
        return cls(bits)

    def members(self) -> tuple[int, ...]:
        bits, out = self.bits, []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())


EMPTY_SET = VertexSet(0)


@dataclass(frozen=True)
class Digraph:
    """Finite simple digraph; loops allowed, duplicate edges not representable."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset(edges))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """out_masks[u] has bit v set iff (u, v) is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """in_masks[v] has bit u set iff (u, v) is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v] |= 1 << u
        return tuple(masks)

    def full_set(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1)

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def induced(self, s: VertexSet) -> "Digraph":
        """Subgraph induced by ``s``, with vertices relabelled 0..|s|-1 in order."""
        verts = s.members()
        index = {v: i for i, v in enumerate(verts)}
        kept = [(index[u], index[v]) for (u, v) in self.edges if u in s and v in s]
        return Digraph.from_edges(len(verts), kept)


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format: "u v" per line, '#' comments, optional "n N" header.

    The header, when present, must be the first non-comment, non-blank line and
    declares the vertex count (allowing trailing isolated vertices). Without a
    header the vertex count is one past the largest index seen. Duplicate edges
    are an error, not a silent merge.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    declared_n: int | None = None
    saw_content = False
    max_index = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not saw_content and parts[0] == "n":
            if len(parts) != 2:
                raise ParseError(lineno, f"malformed header {line!r}, expected 'n N'")
            try:
                declared_n = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"malformed vertex count {parts[1]!r}") from None
            if declared_n < 0:
                raise ParseError(lineno, f"negative vertex count {declared_n}")
            saw_content = True
            continue
        saw_content = True
        if len(parts) != 2:
            raise ParseError(lineno, f"malformed line {line!r}, expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"malformed line {line!r}, indices must be integers") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, f"negative index in edge {u} {v}")
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise ParseError(lineno, f"edge {u} {v} exceeds declared n {declared_n}")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
        max_index = max(max_index, u, v)
    n = declared_n if declared_n is not None else max_index + 1
    return Digraph.from_edges(n, edges)


def induced_adjacency(g: Digraph, s: VertexSet) -> list[list[int]]:
    """0/1 adjacency matrix of the subgraph induced by ``s``, rows in vertex order."""
    _check_subset(g, s)
    verts = s.members()
    out = g.out_masks
    return [[(out[u] >> v) & 1 for v in verts] for u in verts]


def subset_complement(g: Digraph, s: VertexSet) -> VertexSet:
    """V(g) minus ``s``."""
    _check_subset(g, s)
    return VertexSet(((1 << g.n) - 1) & ~s.bits)


def all_subsets(n: int) -> Iterator[VertexSet]:
    """All 2**n subsets of {0..n-1}, ascending by integer encoding."""
    for bits in range(1 << n):
        yield VertexSet(bits)


def _check_subset(g: Digraph, s: VertexSet) -> None:
    if s.bits >> g.n:
        raise ValueError(f"vertex set {s.members()} not contained in 0..{g.n - 1}")
