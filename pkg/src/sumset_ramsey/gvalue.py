"""Exact elements of the countable torus subgroup Q[sqrt 2]/Z.

A value is stored as ``rat + irr*sqrt(2)`` with ``rat`` reduced into
``[0, 1)``.  Because sqrt(2) is irrational, reducing modulo Z only ever
touches the rational part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, order=True)
class GValue:
    rat: Fraction = Fraction(0)
    irr: Fraction = Fraction(0)

    def __post_init__(self):
        rat = Fraction(self.rat)
        object.__setattr__(self, "rat", rat - math.floor(rat))
        object.__setattr__(self, "irr", Fraction(self.irr))

    def __add__(self, other: GValue) -> GValue:
        return GValue(self.rat + other.rat, self.irr + other.irr)

    def __neg__(self) -> GValue:
        return GValue(-self.rat, -self.irr)

    def __sub__(self, other: GValue) -> GValue:
        return self + (-other)

    def __mul__(self, k: int) -> GValue:
        return GValue(self.rat * k, self.irr * k)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.rat) or bool(self.irr)

    def is_zero(self) -> bool:
        return not self

    def order(self):
        """Additive order; ``math.inf`` whenever the sqrt(2) part is nonzero."""
        if self.irr:
            return math.inf
        return self.rat.denominator

    def __repr__(self):
        return f"GValue({self.rat}, {self.irr})"

    def __str__(self):
        return f"({self.rat},{self.irr})"


HALF = GValue(Fraction(1, 2))


@lru_cache(maxsize=None)
def embed_residue(residue: int, modulus: int) -> GValue:
    """Canonical image of ``residue`` in Z/modulus; modulus 0 stands for Z."""
    if modulus == 0:
        return GValue(0, residue)
    return GValue(Fraction(residue, modulus), 0)
