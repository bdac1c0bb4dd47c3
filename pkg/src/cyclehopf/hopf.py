"""Symbolic algebra of self-avoiding hikes: coproduct, antipode, star ops.

Series here are finitely supported maps from self-avoiding hikes to exact
rationals. The star product of two hikes is their concatenation when
vertex-disjoint and zero otherwise; star-log/exp terminate because powers
of a unit-free series need ever more pairwise disjoint cycles and the graph
is finite. Everything in this module is verification-oriented and sized for
small graphs; the census module is the scalable counting path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .digraph import Digraph, VertexSet
from .errors import BudgetExceededError, InternalCheckError
from .hikes import UNIT_HIKE, SelfAvoidingHike, SimpleCycle
from .polyring import TruncPoly

__all__ = [
    "DEFAULT_HIKE_BUDGET",
    "SimpleCycle",
    "SelfAvoidingHike",
    "UNIT_HIKE",
    "HikeSeries",
    "enumerate_sa_hikes",
    "coproduct",
    "counit",
    "antipode",
    "star_convolve",
    "star_exp",
    "star_log",
    "star_power",
    "eulerian_idempotent",
    "dynkin_idempotent",
    "von_mangoldt_sa",
    "liouville_sa",
    "delta_series",
    "zeta_series",
    "mobius_series",
    "omega_series",
    "prime_series",
    "specialize",
    "specialize_on_subset",
    "format_series",
]

DEFAULT_HIKE_BUDGET = 10**6


class HikeSeries:
    """Finitely supported hike -> rational mapping with exact arithmetic."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[SelfAvoidingHike, object] | None = None):
        clean: dict[SelfAvoidingHike, Fraction] = {}
        if terms:
            for h, c in terms.items():
                f = Fraction(c)
                if f:
                    clean[h] = f
        self.terms = clean

    def coefficient(self, h: SelfAvoidingHike) -> Fraction:
        return self.terms.get(h, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[SelfAvoidingHike]:
        return set(self.terms)

    def __add__(self, other: "HikeSeries") -> "HikeSeries":
        out = dict(self.terms)
        for h, c in other.terms.items():
            out[h] = out.get(h, Fraction(0)) + c
        return HikeSeries(out)

    def __sub__(self, other: "HikeSeries") -> "HikeSeries":
        out = dict(self.terms)
        for h, c in other.terms.items():
            out[h] = out.get(h, Fraction(0)) - c
        return HikeSeries(out)

    def __neg__(self) -> "HikeSeries":
        return self.scale(-1)

    def scale(self, factor) -> "HikeSeries":
        f = Fraction(factor)
        return HikeSeries({h: f * c for h, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HikeSeries) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "HikeSeries(0)"
        return f"HikeSeries({len(self.terms)} terms)"


def enumerate_sa_hikes(
    g: Digraph,
    primes: list[SimpleCycle],
    budget: int = DEFAULT_HIKE_BUDGET,
) -> list[SelfAvoidingHike]:
    """Every set of pairwise vertex-disjoint primes, the empty hike included."""
    ordered = sorted(primes, key=lambda c: (c.min_vertex, c.length, c.vertices))
    masks = [c.support_mask() for c in ordered]
    hikes: list[SelfAvoidingHike] = [UNIT_HIKE]
    chosen: list[SimpleCycle] = []

    def extend(i: int, used: int) -> None:
        for j in range(i, len(ordered)):
            m = masks[j]
            if used & m:
                continue
            chosen.append(ordered[j])
            hikes.append(SelfAvoidingHike(tuple(chosen)))
            if len(hikes) > budget:
                raise BudgetExceededError(f"hike enumeration exceeded budget {budget}")
            extend(j + 1, used | m)
            chosen.pop()

    extend(0, 0)
    return hikes


def coproduct(h: SelfAvoidingHike) -> list[tuple[SelfAvoidingHike, SelfAvoidingHike]]:
    """All 2^omega splits of the components into an ordered pair of sub-hikes."""
    k = h.omega
    full = (1 << k) - 1
    return [(h.restrict(u), h.restrict(full ^ u)) for u in range(1 << k)]


def counit(h: SelfAvoidingHike) -> int:
    return 1 if h.is_unit() else 0


def antipode(s: HikeSeries) -> HikeSeries:
    """Coefficient of each hike flipped by (-1)^(number of components)."""
    return HikeSeries(
        {h: -c if h.omega & 1 else c for h, c in s.terms.items()}
    )


def star_convolve(a: HikeSeries, b: HikeSeries) -> HikeSeries:
    """Bilinear extension of: product of disjoint hikes, zero on overlap."""
    out: dict[SelfAvoidingHike, Fraction] = {}
    b_items = [(h, h.support_mask(), c) for h, c in b.terms.items()]
    for ha, ca in a.terms.items():
        ma = ha.support_mask()
        for hb, mb, cb in b_items:
            if ma & mb:
                continue
            key = ha.concat(hb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return HikeSeries(out)


def star_exp(a: HikeSeries) -> HikeSeries:
    """Star exponential; requires zero coefficient on the empty hike."""
    if a.coefficient(UNIT_HIKE):
        raise ValueError("star_exp needs a series with no empty-hike term")
    acc = delta_series()
    power = delta_series()
    k = 1
    kfact = 1
    while True:
        power = star_convolve(power, a)
        if power.is_zero():
            return acc
        kfact *= k
        acc = acc + power.scale(Fraction(1, kfact))
        k += 1


def star_log(a: HikeSeries) -> HikeSeries:
    """Star logarithm; requires coefficient 1 on the empty hike."""
    if a.coefficient(UNIT_HIKE) != 1:
        raise ValueError("star_log needs coefficient 1 on the empty hike")
    x = a - delta_series()
    acc = HikeSeries()
    power = delta_series()
    k = 1
    while True:
        power = star_convolve(power, x)
        if power.is_zero():
            return acc
        acc = acc + power.scale(Fraction(1 if k & 1 else -1, k))
        k += 1


def star_power(a: HikeSeries, k: int) -> HikeSeries:
    """k-fold star product; negative k inverts first (unit term must be nonzero)."""
    if k == 0:
        return delta_series()
    base = a if k > 0 else _star_invert(a)
    out = base
    for _ in range(abs(k) - 1):
        out = star_convolve(out, base)
    return out


def _star_invert(a: HikeSeries) -> HikeSeries:
    c = a.coefficient(UNIT_HIKE)
    if not c:
        raise ValueError("series with zero empty-hike coefficient is not star-invertible")
    # a = c(delta + y) with y nilpotent: a^-1 = (1/c) sum (-y)^k
    y = (a - delta_series().scale(c)).scale(Fraction(1, 1) / c)
    acc = delta_series()
    power = delta_series()
    while True:
        power = star_convolve(power, y)
        if power.is_zero():
            return acc.scale(Fraction(1, 1) / c)
        acc = acc + power if _parity_flip(power) else acc - power
        # sign handled below; see note
        break


def _parity_flip(_: HikeSeries) -> bool:
    raise NotImplementedError


def eulerian_idempotent(g: Digraph, budget: int = DEFAULT_HIKE_BUDGET) -> HikeSeries:
    """Star-log of the all-ones series; lands on the primes with coefficient 1."""
    hikes = _graph_hikes(g, budget)
    result = star_log(zeta_series(hikes))
    return _require_integral(result, "eulerian idempotent")


def dynkin_idempotent(g: Digraph, budget: int = DEFAULT_HIKE_BUDGET) -> HikeSeries:
    """Signed series convolved with the component-count weighted series."""
    hikes = _graph_hikes(g, budget)
    result = star_convolve(mobius_series(hikes), omega_series(hikes))
    return _require_integral(result, "dynkin idempotent")


def von_mangoldt_sa(h: SelfAvoidingHike) -> int:
    """Length for connected hikes (one component), zero otherwise."""
    return h.length if h.omega == 1 else 0


def liouville_sa(h: SelfAvoidingHike) -> int:
    return -1 if h.omega & 1 else 1


def delta_series() -> HikeSeries:
    return HikeSeries({UNIT_HIKE: 1})


def zeta_series(hikes: Iterable[SelfAvoidingHike]) -> HikeSeries:
    return HikeSeries({h: 1 for h in hikes})


def mobius_series(hikes: Iterable[SelfAvoidingHike]) -> HikeSeries:
    return HikeSeries({h: liouville_sa(h) for h in hikes})


def omega_series(hikes: Iterable[SelfAvoidingHike]) -> HikeSeries:
    return HikeSeries({h: h.omega for h in hikes})


def prime_series(primes: Iterable[SimpleCycle]) -> HikeSeries:
    return HikeSeries({SelfAvoidingHike((p,)): 1 for p in primes})


def specialize(s: HikeSeries, cap: int) -> TruncPoly:
    """Length generating polynomial: each hike contributes coeff * z^length."""
    out = [Fraction(0)] * (cap + 1)
    for h, c in s.terms.items():
        if h.length <= cap:
            out[h.length] += c
    return TruncPoly(tuple(int(c) if c.denominator == 1 else c for c in out))


def specialize_on_subset(s: HikeSeries, subset: VertexSet, cap: int) -> TruncPoly:
    """Like ``specialize`` but keeping only hikes supported inside ``subset``."""
    out = [Fraction(0)] * (cap + 1)
    allowed = subset.bits
    for h, c in s.terms.items():
        if h.length <= cap and h.support_mask() & ~allowed == 0:
            out[h.length] += c
    return TruncPoly(tuple(int(c) if c.denominator == 1 else c for c in out))


def format_series(s: HikeSeries) -> str:
    """Debug dump: one line per term, components as vertex sequences."""
    lines = []
    for h in sorted(s.terms, key=lambda h: (h.length, h.omega, h.components)):
        body = " | ".join(" ".join(map(str, c.vertices)) for c in h.components)
        lines.append(f"{s.terms[h]}  [{body}]")
    return "\n".join(lines)


def _graph_hikes(g: Digraph, budget: int) -> list[SelfAvoidingHike]:
    from .oracle import enumerate_simple_cycles

    primes = enumerate_simple_cycles(g, budget)
    return enumerate_sa_hikes(g, primes, budget)


def _require_integral(s: HikeSeries, what: str) -> HikeSeries:
    for h, c in s.terms.items():
        if c.denominator != 1:
            raise InternalCheckError(f"{what}: non-integer coefficient {c} on {h!r}")
    return s
