"""Integer patterns applied to sequences of group elements."""

from __future__ import annotations

from typing import Sequence

from .groups import Element, GroupSpec

PatternVec = tuple[int, ...]


def pattern_apply(eps: Sequence[int], g: Sequence[Element], spec: GroupSpec | None = None) -> Element:
    """``sum(eps[i] * g[i])`` over the common prefix of the two sequences.

    With both sequences empty there is no element to take the group from, so
    ``spec`` must be given.
    """
    if not g:
        if spec is None:
            raise ValueError("empty element sequence needs an explicit spec")
        return spec.zero()
    total = (spec or g[0].spec).zero()
    for k, x in zip(eps, g):
        if k:
            total = total + k * x
    return total


def leader_russell_patterns(r: int) -> list[PatternVec]:
    """``(4,)*(r-i) + (2,)*(2i)`` for ``i = 0..r``."""
    return [(4,) * (r - i) + (2,) * (2 * i) for i in range(r + 1)]
