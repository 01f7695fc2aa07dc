"""Exact rational vectors.

Every quantity in this package is a `fractions.Fraction`; there is no
floating point anywhere, so boundary classifications are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch


class RatVec:
    """Immutable vector with Fraction coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        if not self.coords:
            raise ValueError("vector needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return isinstance(other, RatVec) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "RatVec(%s)" % (", ".join(str(c) for c in self.coords))

    def __add__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RatVec") -> "RatVec":
        self._check_dim(other)
        return RatVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "RatVec":
        return RatVec(-a for a in self.coords)

    def __rmul__(self, scalar) -> "RatVec":
        s = Fraction(scalar)
        return RatVec(s * a for a in self.coords)

    def _check_dim(self, other: "RatVec"):
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch(
                "dimension mismatch: %d vs %d" % (len(self.coords), len(other.coords))
            )

    def dot(self, other: "RatVec") -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def primitive(self) -> tuple[int, ...]:
        """Smallest positive integer multiple of this vector.

        Clears denominators and divides by the gcd of the entries.  The
        direction is preserved (only positive scaling), so the returned
        vector defines the same halfspace ``v . x >= 0``.
        """
        if self.is_zero():
            raise ValueError("zero vector has no primitive form")
        denom_lcm = 1
        for c in self.coords:
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return tuple(v // g for v in ints)


def zeros(n: int) -> RatVec:
    return RatVec([Fraction(0)] * n)


def basis_vector(n: int, i: int) -> RatVec:
    """Canonical basis vector e_i (0-based index)."""
    coords = [Fraction(0)] * n
    coords[i] = Fraction(1)
    return RatVec(coords)


def from_ints(values) -> RatVec:
    return RatVec(Fraction(v) for v in values)
