"""Search for sets ``X`` with ``X + X`` monochromatic, and certificates that none exist.

All searches are exhaustive over an explicit finite domain.  A node cap turns
an over-long search into :class:`ResourceLimitError`; it never turns into a
"none found" answer.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .colorings import Color, Coloring, Finite2GColoring, TableColoring
from .errors import ResourceLimitError, check_deadline, deadline_after
from .groups import INFINITE, Element, GroupSpec, enumerate_fragment, sumset

log = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10_000_000


@dataclass(frozen=True)
class Witness:
    elements: tuple[Element, ...]
    color: Color
    provenance: tuple[str, ...] = field(default=(), compare=False)
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class Certificate:
    """Outcome of one exhaustive search.

    ``witness is None`` means the whole declared domain was explored and no
    size-``n`` witness exists in it.
    """

    domain: str
    n: int
    witness: Witness | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def outcome(self) -> str:
        return "found" if self.found else "none-in-domain"


def verify_witness(X: Iterable[Element], c: Coloring) -> tuple[bool, Color | None]:
    """``(True, colour)`` iff every element of ``X + X`` gets the same colour."""
    X = list(X)
    if not X:
        raise ValueError("X must be nonempty")
    colors = {c(s) for s in sumset(X)}
    if len(colors) == 1:
        return True, colors.pop()
    return False, None


class _Engine:
    """Shared state for one ``find_witness`` call: domain, colour caches, counters."""

    def __init__(self, domain, c, n, prune, deadline=None):
        self.deadline = deadline
        self.domain = domain
        self.c = c
        self.n = n
        self.prune = prune
        self.double = [c(x + x) for x in domain]
        self.classes: dict[Color, list[int]] = {}
        for i, col in enumerate(self.double):
            self.classes.setdefault(col, []).append(i)
        self._pair: dict[tuple[int, int], Color] = {}

    def pair(self, i, j):
        key = (i, j)
        col = self._pair.get(key)
        if col is None:
            col = self.c(self.domain[i] + self.domain[j])
            self._pair[key] = col
        return col

    def ok(self, i, j, target):
        return self.double[j] == target and self.pair(i, j) == target

    def search_root(self, i, budget):
        """Lexicographically least witness whose first element is ``domain[i]``."""
        target = self.double[i]
        if self.prune:
            pool = [j for j in self.classes[target] if j > i]
        else:
            pool = range(i + 1, len(self.domain))
        nodes = 1
        if self.n == 1:
            return (i,), nodes
        cands = [j for j in pool if self.ok(i, j, target)]

        def dfs(chosen, cands):
            nonlocal nodes
            need = self.n - len(chosen)
            for pos, j in enumerate(cands):
                if len(cands) - pos < need:
                    return None
                nodes += 1
                if nodes > budget:
                    raise ResourceLimitError("node limit reached", cap=budget, explored=nodes)
                check_deadline(self.deadline, nodes)
                if need == 1:
                    return chosen + (j,)
                rest = [k for k in cands[pos + 1:] if self.pair(j, k) == target]
                found = dfs(chosen + (j,), rest)
                if found is not None:
                    return found
            return None

        return dfs((i,), cands), nodes


def find_witness(
    domain: Sequence[Element],
    c: Coloring,
    n: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    threads: int = 1,
    prune: bool = True,
    descriptor: str | None = None,
    time_limit: float | None = None,
) -> Certificate:
    """Lexicographically least (by position in ``domain``) ``X`` of size ``n``
    with ``X + X`` monochromatic, or an exhaustive certificate that none exists.

    Candidates are first split by the colour of ``2x`` (all members of a witness
    share it), then extended by backtracking with pair-colour filtering.  With
    ``threads > 1`` first elements are explored concurrently in batches; the
    answer is the same as the single-threaded one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    domain = list(dict.fromkeys(domain))
    descriptor = descriptor or f"{len(domain)} elements"
    if not domain:
        return Certificate(descriptor, n, None, 0)
    engine = _Engine(domain, c, n, prune, deadline_after(time_limit))
    total = 0
    roots = range(len(domain))
    threads = max(1, threads)

    def run(i, budget):
        return engine.search_root(i, budget)

    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for start in range(0, len(domain), threads):
            batch = roots[start:start + threads]
            budget = node_limit - total
            if pool is None:
                results = [run(i, budget) for i in batch]
            else:
                results = list(pool.map(lambda i: run(i, budget), batch))
            total += sum(nodes for _, nodes in results)
            if total > node_limit:
                raise ResourceLimitError(
                    f"node limit {node_limit} reached after {total} nodes", cap=node_limit, explored=total
                )
            for found, _ in results:
                if found is not None:
                    X = tuple(domain[k] for k in found)
                    ok, color = verify_witness(X, c)
                    assert ok, "search returned a non-witness"
                    return Certificate(descriptor, n, Witness(X, color), total)
            if engine.deadline is not None and time.monotonic() > engine.deadline:
                raise ResourceLimitError(f"time limit reached after {total} nodes", explored=total)
    finally:
        if pool is not None:
            pool.shutdown()
    return Certificate(descriptor, n, None, total)


def naive_find_witness(domain: Sequence[Element], c: Coloring, n: int) -> Witness | None:
    """Reference search: every ``n``-subset in lexicographic order."""
    domain = list(dict.fromkeys(domain))
    for X in itertools.combinations(domain, n):
        ok, color = verify_witness(X, c)
        if ok:
            return Witness(X, color)
    return None


# -- sweeps over families ----------------------------------------------------

Family = Callable[[int], tuple[GroupSpec, int]]


def power_family(modulus: int) -> Family:
    """``K -> (Z/modulus)^K`` (modulus 0 gives Z^K)."""
    return lambda k: (GroupSpec.power(modulus, k), 0)


def bound_family(spec: GroupSpec) -> Family:
    """``B -> fragment of spec with bound B``."""
    return lambda b: (spec, b)


def certify_class(
    family: Family,
    coloring: Coloring | Callable[[GroupSpec, int], Coloring],
    n: int,
    sizes: Iterable[int],
    node_limit: int = DEFAULT_NODE_LIMIT,
    threads: int = 1,
    time_limit: float | None = None,
) -> list[Certificate]:
    """One certificate per fragment of the sweep.

    The sweep stops at the first fragment where a witness is found: larger
    fragments contain it, so no further "none" claims are made.
    """
    certs = []
    for size in sizes:
        spec, bound = family(size)
        c = coloring if isinstance(coloring, Coloring) else coloring(spec, bound)
        domain = enumerate_fragment(spec, bound)
        descriptor = f"{spec or 'trivial'} bound={bound}" if spec.rank else f"{spec or 'trivial'}"
        cert = find_witness(
            domain, c, n, node_limit=node_limit, threads=threads, descriptor=descriptor, time_limit=time_limit
        )
        log.info("%s n=%d: %s (%d nodes)", descriptor, n, cert.outcome, cert.nodes)
        certs.append(cert)
        if cert.found:
            break
    return certs


# -- minimal fragment numbers ------------------------------------------------


@dataclass
class MinimalResult:
    """Least size ``M`` at which every ``r``-colouring of the fragment has a witness.

    ``value is None`` means no such size was found up to ``max_size``; then
    ``counterexample`` avoids witnesses on the largest fragment tried.
    """

    family: str
    r: int
    n: int
    value: int | None
    counterexample: TableColoring | None
    nodes: int
    sizes_checked: list[int] = field(default_factory=list)
    diverges: bool = False
    note: str = ""


def nat_fragment(m: int, exclude_zero: bool = False) -> list[Element]:
    """``{0, ..., m}`` (or ``{1, ..., m}``) inside Z."""
    spec = GroupSpec((INFINITE,))
    return [Element(spec, (k,)) for k in range(1 if exclude_zero else 0, m + 1)]


def _witness_constraints(elements: Sequence[Element], n: int) -> list[tuple[int, ...]]:
    """Position sets of ``X + X`` for every ``n``-subset ``X`` whose sumset stays inside."""
    index = {g: i for i, g in enumerate(elements)}
    constraints = set()
    for X in itertools.combinations(elements, n):
        positions = []
        for s in sumset(X):
            p = index.get(s)
            if p is None:
                break
            positions.append(p)
        else:
            constraints.add(tuple(sorted(set(positions))))
    return sorted(constraints)


def find_avoiding_coloring(
    elements: Sequence[Element], r: int, n: int, node_limit: int = DEFAULT_NODE_LIMIT, deadline: float | None = None
):
    """An ``r``-colouring (list of ints by position) with no size-``n`` witness
    whose sumset lies inside ``elements``, or ``None`` if none exists.

    Colours are assigned in position order; a new position may use at most one
    colour beyond those already used, which removes colour-relabelling symmetry.
    Returns ``(colouring_or_None, nodes)``.
    """
    size = len(elements)
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(size)]
    for con in _witness_constraints(elements, n):
        by_last[con[-1]].append(con)
    colors = [0] * size
    nodes = 0

    def violated(p):
        for con in by_last[p]:
            col = colors[con[0]]
            if all(colors[q] == col for q in con[1:]):
                return True
        return False

    def assign(p, used):
        nonlocal nodes
        if p == size:
            return True
        for col in range(min(r, used + 1)):
            nodes += 1
            if nodes > node_limit:
                raise ResourceLimitError(
                    f"colouring search over {size} elements exceeded {node_limit} nodes",
                    cap=node_limit,
                    explored=nodes,
                )
            check_deadline(deadline, nodes)
            colors[p] = col
            if not violated(p) and assign(p + 1, max(used, col + 1)):
                return True
        return False

    found = assign(0, 0)
    return (list(colors) if found else None), nodes


def _family_fragments(family: str, exclude_zero: bool):
    if family == "nat":
        start = 1 if exclude_zero else 0
        return start, lambda m: nat_fragment(m, exclude_zero)
    if family.startswith("z") and family.endswith("sum"):
        modulus = int(family[1:-3])
        return 0, lambda k: enumerate_fragment(GroupSpec.power(modulus, k))
    raise ValueError(f"unknown family {family!r}")


def minimal_fragment_number(
    family: str,
    r: int,
    n: int,
    max_size: int,
    exclude_zero: bool = False,
    node_limit: int = DEFAULT_NODE_LIMIT,
    time_limit: float | None = None,
) -> MinimalResult:
    """Least fragment size with no witness-avoiding ``r``-colouring.

    ``family`` is ``"nat"`` (fragments ``{0..M}`` of Z, witnesses need
    ``X + X`` inside the fragment) or ``"z<m>sum"`` (``(Z/m)^K``, e.g. ``"z4sum"``).
    """
    if r < 1 or n < 1:
        raise ValueError("r and n must be >= 1")
    start, fragment = _family_fragments(family, exclude_zero)
    deadline = deadline_after(time_limit)
    result = MinimalResult(family, r, n, None, None, 0)
    if family != "nat":
        modulus = int(family[1:-3])
        if modulus <= 2 and n >= 2 and r >= 2:
            # 2G is {0}: two colours, one on 0, already avoid every 2-witness
            result.diverges = True
            result.note = "2G stays finite along the family; the finite-2G colouring avoids at every size"
    for size in range(start, max_size + 1):
        elements = fragment(size)
        try:
            coloring, nodes = find_avoiding_coloring(elements, r, n, node_limit - result.nodes, deadline)
        except ResourceLimitError as exc:
            result.nodes += exc.explored or 0
            lower = size
            raise ResourceLimitError(
                f"{exc}; best known: value >= {lower}",
                cap=node_limit,
                explored=result.nodes,
                best_known=(lower, None),
            ) from None
        result.nodes += nodes
        result.sizes_checked.append(size)
        if coloring is None:
            result.value = size
            return result
        result.counterexample = TableColoring(
            {g: col for g, col in zip(elements, coloring)}, elements[0].spec if elements else None
        )
    return result


def finite2g_avoids(spec: GroupSpec, n: int = 2) -> Certificate:
    """Run the witness search under the finite-2G colouring of a finite group."""
    return find_witness(enumerate_fragment(spec), Finite2GColoring(spec), n, descriptor=str(spec) or "trivial")
