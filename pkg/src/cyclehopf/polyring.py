"""Exact truncated univariate polynomials in the formal variable z.

Coefficients are arbitrary-precision ints (exact Fractions also work, the
arithmetic never leaves the coefficient ring). Everything past the degree
cap is discarded; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["TruncPoly", "poly_add", "poly_mul", "weighted_derivative"]


@dataclass(frozen=True)
class TruncPoly:
    """Coefficients c_0..c_cap; immutable, length is always cap+1."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("TruncPoly needs at least the constant coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, cap: int) -> "TruncPoly":
        """Truncate/zero-pad ``coeffs`` to exactly cap+1 entries."""
        if cap < 0:
            raise ValueError(f"negative cap {cap}")
        c = list(coeffs[: cap + 1])
        c += [0] * (cap + 1 - len(c))
        return cls(tuple(c))

    @classmethod
    def zero(cls, cap: int) -> "TruncPoly":
        return cls.from_coeffs((), cap)

    @classmethod
    def one(cls, cap: int) -> "TruncPoly":
        return cls.from_coeffs((1,), cap)

    @classmethod
    def monomial(cls, coeff, degree: int, cap: int) -> "TruncPoly":
        """coeff * z**degree, truncated (vanishes when degree > cap)."""
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        if degree > cap:
            return cls.zero(cap)
        return cls.from_coeffs((0,) * degree + (coeff,), cap)

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, degree: int):
        return self.coeffs[degree]

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        self._check_cap(other)
        return TruncPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        self._check_cap(other)
        return TruncPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncPoly":
        return TruncPoly(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        """Cauchy product, truncated at the shared cap."""
        self._check_cap(other)
        cap = self.cap
        out = [0] * (cap + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: cap + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncPoly(tuple(out))

    def scale(self, factor) -> "TruncPoly":
        return TruncPoly(tuple(factor * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def _check_cap(self, other: "TruncPoly") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError(f"cap mismatch: {self.cap} vs {other.cap}")

    def __repr__(self) -> str:
        terms = [f"{c}*z^{d}" for d, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"TruncPoly({body}, cap={self.cap})"


def poly_add(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    return a + b


def poly_mul(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    return a * b


def weighted_derivative(a: TruncPoly) -> TruncPoly:
    """Length weighting: c_l z^l -> l*c_l z^l (equals z * d/dz)."""
    return TruncPoly(tuple(d * c for d, c in enumerate(a.coeffs)))
