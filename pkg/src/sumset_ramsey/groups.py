"""Finitely generated Abelian groups written as direct sums of cyclic factors.

A group is an ordered list of moduli; modulus ``0`` stands for a copy of Z.
Elements carry raw coordinates (residues for Z/m, integers for Z) and are
compared exactly.  Infinite groups are only ever enumerated through finite
*fragments*: every Z-coordinate restricted to ``[-bound, bound]``.

Enumeration order is colexicographic: the first factor varies fastest.

>>> G = GroupSpec.parse("Z/4 Z/4 Z")
>>> g, h = G.element(1, 0, 1), G.element(3, 2, 1)
>>> g + h
Element('Z/4 Z/4 Z', (0, 2, 2))
>>> sorted(sumset([g, h]))
[Element('Z/4 Z/4 Z', (2, 0, 2)), Element('Z/4 Z/4 Z', (0, 2, 2))]
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import reduce, total_ordering
from typing import Iterable, Sequence

from .errors import ParseError, ResourceLimitError, StructuralError
from .gvalue import GValue, embed_residue

INFINITE = 0

#: Largest fragment :func:`enumerate_fragment` will build unless told otherwise.
DEFAULT_FRAGMENT_CAP = 1_000_000

_FACTOR_RE = re.compile(r"^Z(?:/(\d+))?(?:\^(\d+))?$")


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(m) for m in self.factors)
        for m in factors:
            if m != INFINITE and m < 2:
                raise ValueError(f"cyclic factor modulus must be >= 2, got {m}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse ``"Z/4 Z/4 Z"``.  ``Z/4^3`` is accepted as shorthand for three copies."""
        factors: list[int] = []
        for token in text.split():
            match = _FACTOR_RE.match(token)
            if match is None:
                raise ParseError(f"bad group factor {token!r}", token=token)
            modulus = INFINITE if match.group(1) is None else int(match.group(1))
            if modulus != INFINITE and modulus < 2:
                raise ParseError(f"cyclic modulus must be >= 2 in {token!r}", token=token)
            factors.extend([modulus] * int(match.group(2) or 1))
        return cls(tuple(factors))

    @classmethod
    def power(cls, modulus: int, k: int) -> GroupSpec:
        return cls((modulus,) * k)

    def __str__(self):
        return " ".join("Z" if m == INFINITE else f"Z/{m}" for m in self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def rank(self) -> int:
        """Number of infinite cyclic factors."""
        return sum(1 for m in self.factors if m == INFINITE)

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self):
        if not self.is_finite():
            return math.inf
        return math.prod(self.factors)

    def fragment_size(self, bound: int = 0) -> int:
        return math.prod((2 * bound + 1) if m == INFINITE else m for m in self.factors)

    def zero(self) -> Element:
        return Element(self, (0,) * len(self.factors))

    def basis(self, index: int) -> Element:
        coords = [0] * len(self.factors)
        coords[index] = 1
        return Element(self, coords)

    def element(self, *coords) -> Element:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return Element(self, coords)

    def parse_element(self, text: str) -> Element:
        text = text.strip()
        if not text and not self.factors:
            return self.zero()
        try:
            coords = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ParseError(f"bad element {text!r}", token=text) from None
        if len(coords) != len(self.factors):
            raise ParseError(
                f"element {text!r} has {len(coords)} coordinates, group {self} has {len(self.factors)}",
                token=text,
            )
        return Element(self, coords)


def _reduce(coords: Iterable[int], factors: Sequence[int]) -> tuple[int, ...]:
    return tuple(c if m == INFINITE else c % m for c, m in zip(coords, factors))


@total_ordering
class Element:
    """An element of a :class:`GroupSpec`, always stored in canonical range."""

    __slots__ = ("spec", "coords", "_hash")

    def __init__(self, spec: GroupSpec, coords: Iterable[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(spec.factors):
            raise StructuralError(
                f"{len(coords)} coordinates given for a group with {len(spec.factors)} factors"
            )
        self.spec = spec
        self.coords = _reduce(coords, spec.factors)
        self._hash = hash((spec.factors, self.coords))

    @classmethod
    def _raw(cls, spec, coords):
        # coords already canonical
        self = object.__new__(cls)
        self.spec = spec
        self.coords = coords
        self._hash = hash((spec.factors, coords))
        return self

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.spec != self.spec:
            raise StructuralError(f"cannot combine elements of {self.spec} and {other.spec}")
        return None

    def __add__(self, other: Element) -> Element:
        if self._check(other) is NotImplemented:
            return NotImplemented
        factors = self.spec.factors
        coords = tuple(
            a + b if m == INFINITE else (a + b) % m
            for a, b, m in zip(self.coords, other.coords, factors)
        )
        return Element._raw(self.spec, coords)

    def __neg__(self) -> Element:
        return Element(self.spec, (-c for c in self.coords))

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __rmul__(self, k: int) -> Element:
        if not isinstance(k, int):
            return NotImplemented
        return Element(self.spec, (k * c for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __hash__(self):
        return self._hash

    def sort_key(self) -> tuple[int, ...]:
        return self.coords[::-1]

    def __lt__(self, other: Element):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Element({str(self.spec)!r}, {self.coords})"

    def __str__(self):
        return ",".join(map(str, self.coords))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c)

    def items(self) -> list[tuple[int, int]]:
        """Nonzero ``(index, raw coordinate)`` pairs in increasing index order."""
        return [(i, c) for i, c in enumerate(self.coords) if c]


def add(g: Element, h: Element) -> Element:
    return g + h


def scalar_mul(k: int, g: Element) -> Element:
    return k * g


def supp(g: Element) -> frozenset[int]:
    return frozenset(g.support)


def _coordinate_order(c: int, m: int):
    if c == 0:
        return 1
    if m == INFINITE:
        return math.inf
    return m // math.gcd(c, m)


def order_of(g: Element):
    """Least ``k >= 1`` with ``k*g == 0``, or ``math.inf``."""
    orders = [_coordinate_order(c, m) for c, m in zip(g.coords, g.spec.factors)]
    if math.inf in orders:
        return math.inf
    return reduce(math.lcm, orders, 1)


def canonical_gvalue(g: Element) -> tuple[tuple[int, GValue], ...]:
    """Nonzero coordinates of ``g`` mapped into Q[sqrt 2]/Z, with their indices."""
    factors = g.spec.factors
    return tuple((i, embed_residue(c, factors[i])) for i, c in g.items())


def enumerate_fragment(spec: GroupSpec, bound: int = 0, cap: int = DEFAULT_FRAGMENT_CAP) -> list[Element]:
    """All elements whose Z-coordinates lie in ``[-bound, bound]``.

    For a finite group this is the whole group.  Raises
    :class:`ResourceLimitError` when the fragment would exceed ``cap``.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    size = spec.fragment_size(bound)
    if size > cap:
        raise ResourceLimitError(
            f"fragment of {spec} with bound {bound} has {size} elements, above the cap of {cap}",
            cap=cap,
        )
    ranges = [range(-bound, bound + 1) if m == INFINITE else range(m) for m in spec.factors]
    return [Element._raw(spec, t[::-1]) for t in itertools.product(*reversed(ranges))]


@dataclass(frozen=True)
class SubgroupEnumeration:
    elements: tuple[Element, ...]
    label: str

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in set(self.elements)


def _dedupe(elements: Iterable[Element]) -> tuple[Element, ...]:
    return tuple(dict.fromkeys(elements))


def torsion_subgroup(spec: GroupSpec, d: int, bound: int = 0, cap: int = DEFAULT_FRAGMENT_CAP) -> SubgroupEnumeration:
    """Fragment elements killed by ``d``."""
    label = {2: "G2", 4: "G4"}.get(d, f"G{d}")
    elements = tuple(g for g in enumerate_fragment(spec, bound, cap) if not d * g)
    return SubgroupEnumeration(elements, label)


def two_torsion(spec: GroupSpec, bound: int = 0, cap: int = DEFAULT_FRAGMENT_CAP) -> SubgroupEnumeration:
    return torsion_subgroup(spec, 2, bound, cap)


def four_torsion(spec: GroupSpec, bound: int = 0, cap: int = DEFAULT_FRAGMENT_CAP) -> SubgroupEnumeration:
    return torsion_subgroup(spec, 4, bound, cap)


def double_image(spec: GroupSpec, bound: int = 0, cap: int = DEFAULT_FRAGMENT_CAP) -> SubgroupEnumeration:
    """``{2g : g in fragment}``, deduplicated, in order of first appearance.

    For finite groups the result is re-sorted into fragment order.
    """
    doubles = _dedupe(g + g for g in enumerate_fragment(spec, bound, cap))
    return SubgroupEnumeration(tuple(sorted(doubles)), "2G")


def solve_double(c: Element, domain: Iterable[Element]) -> list[Element]:
    """All ``x`` in ``domain`` with ``2x == c``."""
    return [x for x in domain if x + x == c]


def solve_quadruple(d: Element, domain: Iterable[Element]) -> list[Element]:
    """All ``y`` in ``domain`` with ``4y == d``."""
    return [y for y in domain if 4 * y == d]


def sumset(X: Iterable[Element]) -> list[Element]:
    """``X + X`` including the doubles ``2x``, deduplicated, in discovery order."""
    X = list(X)
    out = {}
    for i, x in enumerate(X):
        for y in X[i:]:
            out.setdefault(x + y, None)
    return list(out)


def generated_subgroup(generators: Sequence[Element], bound: int = 0) -> list[Element]:
    """Elements ``sum k_i g_i``; torsion generators use ``0 <= k_i < o(g_i)``,
    infinite-order ones use ``-bound <= k_i <= bound``.  Sorted, deduplicated.
    """
    if not generators:
        raise ValueError("need at least one generator")
    spec = generators[0].spec
    ranges = []
    for g in generators:
        o = order_of(g)
        ranges.append(range(-bound, bound + 1) if o == math.inf else range(o))
    found = set()
    for ks in itertools.product(*ranges):
        total = spec.zero()
        for k, g in zip(ks, generators):
            if k:
                total = total + k * g
        found.add(total)
    return sorted(found)


def subgroup_closure(generators: Iterable[Element], spec: GroupSpec) -> frozenset[Element]:
    """Subgroup generated by torsion elements, computed by breadth-first closure."""
    gens = [g for g in generators if g]
    for g in gens:
        if order_of(g) == math.inf:
            raise ValueError("subgroup_closure needs torsion generators")
    seen = {spec.zero()}
    frontier = [spec.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _factorizations(n: int, smallest: int = 2):
    if n == 1:
        yield ()
        return
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in _factorizations(n // d, d):
                yield (d,) + rest


def finite_group_specs(max_order: int, min_order: int = 1) -> list[GroupSpec]:
    """Every way of writing a group of order ``min_order..max_order`` as a
    direct sum of cyclic factors (non-decreasing moduli).  Isomorphic
    presentations such as ``Z/6`` and ``Z/2 Z/3`` are both listed."""
    return [GroupSpec(f) for order in range(min_order, max_order + 1) for f in _factorizations(order)]
