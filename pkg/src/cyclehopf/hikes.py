"""Canonical simple cycles and self-avoiding hikes.

A simple cycle is stored as its vertex sequence rotated so the minimum
vertex comes first (directed, so rotation is the only freedom). A
self-avoiding hike is a set of pairwise vertex-disjoint simple cycles,
kept sorted by minimum vertex; the empty hike is the monoid unit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["SimpleCycle", "SelfAvoidingHike", "UNIT_HIKE"]


@dataclass(frozen=True, order=True)
class SimpleCycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        v = self.vertices
        if not v:
            raise ValueError("a simple cycle has at least one vertex")
        if len(set(v)) != len(v):
            raise ValueError(f"repeated vertex in cycle {v}")
        if min(v) != v[0]:
            raise ValueError(f"cycle {v} not rotated to start at its minimum vertex")

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "SimpleCycle":
        """Canonicalize an arbitrary rotation of the cycle."""
        seq = tuple(vertices)
        if not seq:
            raise ValueError("a simple cycle has at least one vertex")
        pivot = seq.index(min(seq))
        return cls(seq[pivot:] + seq[:pivot])

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def min_vertex(self) -> int:
        return self.vertices[0]

    def support_mask(self) -> int:
        mask = 0
        for v in self.vertices:
            mask |= 1 << v
        return mask

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def __repr__(self) -> str:
        return f"SimpleCycle({'-'.join(map(str, self.vertices))})"


@dataclass(frozen=True, order=True)
class SelfAvoidingHike:
    components: tuple[SimpleCycle, ...] = ()

    def __post_init__(self):
        mask = 0
        for c in self.components:
            cm = c.support_mask()
            if mask & cm:
                raise ValueError(f"components of {self.components} share a vertex")
            mask |= cm
        mins = [c.min_vertex for c in self.components]
        if mins != sorted(mins):
            raise ValueError("components not sorted by minimum vertex")

    @classmethod
    def from_components(cls, components: Iterable[SimpleCycle]) -> "SelfAvoidingHike":
        return cls(tuple(sorted(components, key=lambda c: c.min_vertex)))

    @property
    def length(self) -> int:
        return sum(c.length for c in self.components)

    @property
    def omega(self) -> int:
        """Number of prime factors (all gradings coincide on these hikes)."""
        return len(self.components)

    def support_mask(self) -> int:
        mask = 0
        for c in self.components:
            mask |= c.support_mask()
        return mask

    def is_unit(self) -> bool:
        return not self.components

    def restrict(self, index_subset: int) -> "SelfAvoidingHike":
        """Sub-hike keeping component i iff bit i of ``index_subset`` is set."""
        kept = tuple(
            c for i, c in enumerate(self.components) if (index_subset >> i) & 1
        )
        return SelfAvoidingHike(kept)

    def concat(self, other: "SelfAvoidingHike") -> "SelfAvoidingHike":
        """Product of vertex-disjoint hikes; raises if supports overlap."""
        return SelfAvoidingHike.from_components(self.components + other.components)

    def __repr__(self) -> str:
        if not self.components:
            return "SelfAvoidingHike(1)"
        inner = " | ".join("-".join(map(str, c.vertices)) for c in self.components)
        return f"SelfAvoidingHike({inner})"


UNIT_HIKE = SelfAvoidingHike(())
