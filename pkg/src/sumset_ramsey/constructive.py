"""Constructions that produce monochromatic sumsets.

The infinite Ramsey / Erdos-Rado steps are replaced by an exhaustive finite
search (:func:`ramsey_monochromatic_subset`).  Every constructor checks its
output with :func:`~sumset_ramsey.search.verify_witness` before returning it,
so a returned witness is always sound; failure is reported as
:class:`ConstructionError` (or :class:`ResourceLimitError` if a cap was hit).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .colorings import Coloring, TupleColoring, induced_tuple_coloring
from .errors import ConstructionError, ResourceLimitError, check_deadline, deadline_after
from .groups import (
    DEFAULT_FRAGMENT_CAP,
    INFINITE,
    Element,
    GroupSpec,
    double_image,
    enumerate_fragment,
    order_of,
    solve_double,
    subgroup_closure,
)
from .patterns import PatternVec, leader_russell_patterns, pattern_apply
from .search import DEFAULT_NODE_LIMIT, Witness, verify_witness

__all__ = [
    "PatternVec",
    "pattern_apply",
    "leader_russell_patterns",
    "IndependentSequence",
    "build_lemma23_sequence",
    "verify_independence_124",
    "independence_violation",
    "build_lemma24_sequence",
    "verify_epsilon_delta",
    "ramsey_monochromatic_subset",
    "leader_russell_required_size",
    "leader_russell_construct",
    "order2_construct",
    "prop42_construct",
    "prop42_pattern",
    "ramsey_exhaustive_failure_exists",
    "ORDER2_EPS",
    "ORDER2_DELTA",
    "PROP42_EPS",
    "PROP42_DELTA",
]

# coefficient pairs indexed by a bit f(k)
ORDER2_EPS = (3, 1)
ORDER2_DELTA = (0, 2)
PROP42_EPS = (1, 3)
PROP42_DELTA = (2, 0)

#: growth factor of the infinite-order sequence: digits 1, 2, 4 are all < 5,
#: so base-5 expansions make every {1,2,4}-combination unique
INFINITE_ORDER_BASE = 5

EXHAUSTIVE_PREFIX_LIMIT = 6


@dataclass
class IndependentSequence:
    kind: str
    terms: list[Element]
    doubles: list[Element] = field(default_factory=list)
    log: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.terms)


# -- sequences with unique {1,2,4}-representations ---------------------------


def build_lemma23_sequence(
    spec: GroupSpec,
    bound: int,
    N: int,
    strict: bool = True,
    node_limit: int = DEFAULT_NODE_LIMIT,
    time_limit: float | None = None,
) -> IndependentSequence:
    """Sequence ``g_0, g_1, ...`` whose {1,2,4}-combinations are unique.

    With an infinite cyclic factor, ``g_n = 5**n * a`` for ``a`` its generator
    (the fragment bound is not applied to these).  Otherwise candidates are taken
    from the fragment in order: ``g_n`` must avoid ``H``, the subgroup generated by
    the earlier terms, together with ``2 g_n`` and ``4 g_n``.  ``strict`` also
    requires ``3 g_n`` outside ``H`` (or ``3 g_n = 0`` for the final term); without
    it a coefficient pair such as ``1*g_0 + g_1 = 4*g_0 + g_1`` can collide
    whenever ``3 g_0`` lies in ``H``.
    Dead ends are backtracked.
    """
    seq = IndependentSequence("lemma23", [])
    infinite = [i for i, m in enumerate(spec.factors) if m == INFINITE]
    if infinite:
        a = spec.basis(infinite[0])
        seq.terms = [INFINITE_ORDER_BASE**k * a for k in range(N)]
        seq.log.append(f"infinite-order generator a={a}; g_n = {INFINITE_ORDER_BASE}^n a")
        return seq

    candidates = enumerate_fragment(spec, bound)
    order = spec.order()
    p = next((q for q in range(2, order + 1) if order % q == 0), 1)
    nodes = 0
    deadline = deadline_after(time_limit)
    best: list[Element] = []
    # whether the rest can be completed depends only on (depth, H)
    dead: set[tuple[int, frozenset[Element]]] = set()

    def dfs(terms: list[Element], H: frozenset[Element]):
        nonlocal nodes, best
        if len(terms) == N:
            return terms
        if len(terms) > len(best):
            best = list(terms)
        state = (len(terms), H)
        # every new term multiplies |H| by at least the least prime dividing |G|
        if state in dead or len(H) * p ** (N - len(terms)) > order:
            return None
        last = len(terms) == N - 1
        for g in candidates:
            if any(k * g in H for k in (1, 2, 4)):
                continue
            # 3g = 0 only hurts when a later term follows
            if strict and 3 * g in H and not (last and not 3 * g):
                continue
            nodes += 1
            if nodes > node_limit:
                raise ResourceLimitError("sequence search exceeded node limit", cap=node_limit, explored=nodes)
            check_deadline(deadline, nodes)
            seq.log.append(f"step {len(terms)}: pick {g}")
            found = dfs(terms + [g], subgroup_closure(terms + [g], spec))
            if found is not None:
                return found
            seq.log.append(f"step {len(terms)}: backtrack from {g}")
        dead.add(state)
        return None

    result = dfs([], frozenset({spec.zero()}))
    if result is None:
        raise ConstructionError(
            f"{spec} cannot supply {N} terms (longest prefix visited: {len(best)})",
            stage="lemma23",
            achieved=len(best),
        )
    seq.terms = result
    return seq


def _combinations_124(terms: Sequence[Element]):
    """Yield ``(indices, coefficients, value)`` for every {1,2,4}-combination, empty one included."""
    spec = terms[0].spec if terms else GroupSpec()
    for size in range(len(terms) + 1):
        for idx in itertools.combinations(range(len(terms)), size):
            for coeffs in itertools.product((1, 2, 4), repeat=size):
                value = spec.zero()
                for i, k in zip(idx, coeffs):
                    value = value + k * terms[i]
                yield idx, coeffs, value


def independence_violation(terms: Sequence[Element], prefix_len: int | None = None):
    """First pair of {1,2,4}-combinations that are equal but differ in their
    index sets or in a coefficient other than the last; ``None`` if there is none."""
    prefix_len = len(terms) if prefix_len is None else prefix_len
    if prefix_len > EXHAUSTIVE_PREFIX_LIMIT:
        raise ValueError(f"exhaustive check is limited to prefixes of length {EXHAUSTIVE_PREFIX_LIMIT}")
    buckets: dict[Element, list[tuple]] = {}
    for idx, coeffs, value in _combinations_124(list(terms[:prefix_len])):
        for other_idx, other_coeffs in buckets.get(value, ()):
            if other_idx != idx or other_coeffs[:-1] != coeffs[:-1]:
                return (other_idx, other_coeffs), (idx, coeffs), value
        buckets.setdefault(value, []).append((idx, coeffs))
    return None


def verify_independence_124(seq: IndependentSequence | Sequence[Element], prefix_len: int | None = None) -> bool:
    terms = seq.terms if isinstance(seq, IndependentSequence) else seq
    return independence_violation(terms, prefix_len) is None


# -- order-2 sequences -------------------------------------------------------


def build_lemma24_sequence(spec: GroupSpec, bound: int, N: int) -> IndependentSequence:
    """Pairs ``(g_n, z_n)`` with ``g_n`` of order 2 in ``2G``, independent of the
    earlier ``g_k``, and ``2 z_n = g_n``.

    Order-2 elements form a vector space over F_2, so greedy selection in
    fragment order never paints itself into a corner.
    """
    seq = IndependentSequence("lemma24", [])
    if spec.fragment_size(bound) > DEFAULT_FRAGMENT_CAP:
        return _lemma24_coordinates(spec, N, seq)
    fragment = enumerate_fragment(spec, bound)
    candidates = [g for g in double_image(spec, bound) if order_of(g) == 2]
    H = frozenset({spec.zero()})
    for g in candidates:
        if len(seq.doubles) == N:
            break
        if g in H:
            continue
        z = solve_double(g, fragment)[0]
        seq.doubles.append(g)
        seq.terms.append(z)
        seq.log.append(f"g_{len(seq.doubles) - 1} = {g}, z = {z}")
        H = subgroup_closure(seq.doubles, spec)
    if len(seq.doubles) < N:
        raise ConstructionError(
            f"2G of {spec} has only {len(seq.doubles)} independent elements of order 2, need {N}",
            stage="lemma24",
            achieved=len(seq.doubles),
        )
    return seq


def _lemma24_coordinates(spec, N, seq):
    # order-2 elements of 2G are spanned by (m/2) e_i over factors with 4 | m
    for i, m in enumerate(spec.factors):
        if len(seq.doubles) == N:
            break
        if m and m % 4 == 0:
            z = (m // 4) * spec.basis(i)
            seq.terms.append(z)
            seq.doubles.append(z + z)
            seq.log.append(f"g_{len(seq.doubles) - 1} = {z + z}, z = {z} (coordinate route)")
    if len(seq.doubles) < N:
        raise ConstructionError(
            f"2G of {spec} has only {len(seq.doubles)} independent elements of order 2, need {N}",
            stage="lemma24",
            achieved=len(seq.doubles),
        )
    return seq


def _order2_combination(zs, i_block, j_block, f, spec):
    total = spec.zero()
    for bit, i, j in zip(f, i_block, j_block):
        total = total + ORDER2_EPS[bit] * zs[i] + ORDER2_DELTA[bit] * zs[j]
    return total


def verify_epsilon_delta(zseq: IndependentSequence | Sequence[Element], n: int) -> bool:
    """For every choice of ``2n`` distinct indices and every ``f, g`` in ``{0,1}^n``:
    the two order-2 combinations agree iff ``f == g``."""
    zs = list(zseq.terms if isinstance(zseq, IndependentSequence) else zseq)
    if n == 0:
        return True
    if n > 3:
        raise ValueError("exhaustive epsilon/delta check is limited to n <= 3")
    if 2 * n > len(zs):
        raise ValueError(f"need {2 * n} terms, have {len(zs)}")
    spec = zs[0].spec
    bits = list(itertools.product((0, 1), repeat=n))
    for choice in itertools.permutations(range(len(zs)), 2 * n):
        values = {_order2_combination(zs, choice[:n], choice[n:], f, spec) for f in bits}
        if len(values) != len(bits):
            return False
    return True


# -- finite Ramsey -------------------------------------------------------------


def ramsey_monochromatic_subset(
    d: TupleColoring, m: int, node_limit: int = DEFAULT_NODE_LIMIT, time_limit: float | None = None
) -> tuple[int, ...] | None:
    """Lexicographically least ``m``-subset ``Y`` of the index domain whose
    increasing ``d.arity``-tuples all share one colour, or ``None`` after an
    exhaustive search.  Raises :class:`ResourceLimitError` at the node cap.
    """
    k = d.arity
    domain = list(d.index_domain)
    if m <= k - 1 or m == 0:
        return tuple(domain[:m]) if len(domain) >= m else None
    nodes = 0
    deadline = deadline_after(time_limit)

    def extend(Y, cands, colour):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise ResourceLimitError(f"Ramsey search exceeded {node_limit} nodes", cap=node_limit, explored=nodes)
        check_deadline(deadline, nodes)
        if len(Y) == m:
            return Y
        for pos, z in enumerate(cands):
            if len(Y) + len(cands) - pos < m:
                return None
            newY = Y + (z,)
            new_colour = colour
            if colour is None and len(newY) == k:
                new_colour = d(newY)
            rest = cands[pos + 1:]
            if new_colour is not None:
                if colour is None:
                    subsets = list(itertools.combinations(newY, k - 1))
                else:
                    subsets = [S + (z,) for S in itertools.combinations(Y, k - 2)] if k >= 2 else []
                if subsets:
                    rest = [w for w in rest if all(d(S + (w,)) == new_colour for S in subsets)]
            found = extend(newY, rest, new_colour)
            if found is not None:
                return found
        return None

    return extend((), domain, None)


# -- constructions -------------------------------------------------------------


def leader_russell_required_size(n: int, r: int, i: int, j: int) -> int:
    """Indices needed once patterns ``i < j`` share a colour: ``r-j`` in the
    a-block, ``n(j-i)`` in the b-blocks, ``2i`` in the c-block, plus ``r-i``
    above them so each pattern's support starts a full ``2r``-tuple."""
    return (r - j) + n * (j - i) + 2 * i + (r - i)


def _finish(X, c, provenance, meta, stage):
    X = tuple(X)
    if len(set(X)) != len(X):
        raise ConstructionError(f"{stage}: constructed elements are not distinct", stage=stage)
    ok, color = verify_witness(X, c)
    if not ok:
        raise ConstructionError(f"{stage}: constructed X+X is not monochromatic", stage=stage)
    return Witness(X, color, tuple(provenance), meta)


def leader_russell_construct(
    c: Coloring,
    r: int,
    n: int,
    seq: IndependentSequence | Sequence[Element],
    node_limit: int = DEFAULT_NODE_LIMIT,
    time_limit: float | None = None,
) -> Witness:
    """``n`` elements with ``X + X`` monochromatic for a colouring with at most ``r`` colours.

    Colours ``2r``-tuples of sequence indices by the colours of the ``r+1``
    patterns ``(4,)*(r-i) + (2,)*(2i)``, finds a large monochromatic index set,
    picks two patterns ``i < j`` of the same colour and assembles
    ``x_k = 2(a-block) + 2(k-th b-block) + (c-block)``.
    """
    terms = list(seq.terms if isinstance(seq, IndependentSequence) else seq)
    provenance = []
    m = max(leader_russell_required_size(n, r, i, j) for i in range(r + 1) for j in range(i + 1, r + 1))
    m = max(m, 2 * r)
    if len(terms) < m:
        raise ConstructionError(f"need {m} sequence terms, have {len(terms)}", stage="ramsey", achieved=len(terms))
    d = induced_tuple_coloring(c, "leader-russell", terms, 2 * r)
    Y = ramsey_monochromatic_subset(d, m, node_limit, time_limit)
    if Y is None:
        raise ConstructionError(f"no monochromatic {m}-set of {2 * r}-tuples among {len(terms)} indices", stage="ramsey")
    t = d(Y[: 2 * r])
    provenance.append(f"Y={list(Y)} pattern colours={[str(x) for x in t]}")
    pair = next(((i, j) for i in range(r + 1) for j in range(i + 1, r + 1) if t[i] == t[j]), None)
    if pair is None:
        raise ConstructionError("pattern colours are pairwise distinct (colouring uses more than r colours)", stage="pigeonhole")
    i, j = pair
    a_len, b_len, c_len = r - j, j - i, 2 * i
    a_blk = Y[:a_len]
    b_blks = [Y[a_len + k * b_len: a_len + (k + 1) * b_len] for k in range(n)]
    c_blk = Y[a_len + n * b_len: a_len + n * b_len + c_len]
    provenance.append(f"patterns i={i} j={j}; a={list(a_blk)} b={[list(b) for b in b_blks]} c={list(c_blk)}")
    spec = terms[0].spec
    base = spec.zero()
    for a in a_blk:
        base = base + 2 * terms[a]
    for cc in c_blk:
        base = base + terms[cc]
    X = []
    for blk in b_blks:
        x = base
        for b in blk:
            x = x + 2 * terms[b]
        X.append(x)
    meta = {"Y": Y, "i": i, "j": j, "a": a_blk, "b": b_blks, "c": c_blk}
    return _finish(X, c, provenance, meta, "leader-russell")


def order2_construct(
    c: Coloring,
    n: int,
    zseq: IndependentSequence | Sequence[Element],
    node_limit: int = DEFAULT_NODE_LIMIT,
    time_limit: float | None = None,
) -> Witness:
    """``2**n`` elements from half-order-2 elements ``z_k``.

    ``d(k_1..k_n) = c(2z_{k_1} + ... + 2z_{k_n})``; a monochromatic ``Y`` of size
    ``2n`` gives the ``i``-block (first ``n``) and ``j``-block (next ``n``), and
    ``x_f = sum eps_{f(k)} z_{i_k} + delta_{f(k)} z_{j_k}`` with
    ``eps = (3, 1)``, ``delta = (0, 2)``.
    """
    zs = list(zseq.terms if isinstance(zseq, IndependentSequence) else zseq)
    if len(zs) < 2 * n:
        raise ConstructionError(f"need {2 * n} terms, have {len(zs)}", stage="ramsey", achieved=len(zs))
    d = induced_tuple_coloring(c, "sum2", zs, n)
    Y = ramsey_monochromatic_subset(d, 2 * n, node_limit, time_limit)
    if Y is None:
        raise ConstructionError(f"no monochromatic {2 * n}-set of {n}-tuples among {len(zs)} indices", stage="ramsey")
    i_blk, j_blk = Y[:n], Y[n: 2 * n]
    spec = zs[0].spec
    fs = list(itertools.product((0, 1), repeat=n))
    X = [_order2_combination(zs, i_blk, j_blk, f, spec) for f in fs]
    provenance = [f"Y={list(Y)} i={list(i_blk)} j={list(j_blk)}"]
    return _finish(X, c, provenance, {"Y": Y, "i": i_blk, "j": j_blk, "fs": fs}, "order2")


def prop42_pattern(f: Sequence[int]) -> PatternVec:
    """``(eps_{f(1)}, delta_{f(1)}, ..., eps_{f(n)}, delta_{f(n)})`` with ``eps=(1,3)``, ``delta=(2,0)``."""
    return tuple(x for bit in f for x in (PROP42_EPS[bit], PROP42_DELTA[bit]))


def prop42_construct(
    c: Coloring,
    n: int,
    spec: GroupSpec | int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    time_limit: float | None = None,
) -> Witness:
    """``2**n`` elements of a power of Z/4 with ``X + X`` monochromatic.

    ``spec`` is ``(Z/4)^K`` or just ``K``.  Colours ``n``-sets of coordinates by
    ``c(2e_{a_1} + ... + 2e_{a_n})``, takes the first ``2n`` indices
    ``a_1 < ... < a_2n`` of a monochromatic set and returns ``x_f = s_f * e_a``.
    """
    if isinstance(spec, int):
        spec = GroupSpec.power(4, spec)
    if any(m != 4 for m in spec.factors):
        raise ValueError(f"expected a power of Z/4, got {spec}")
    basis = [spec.basis(k) for k in range(len(spec))]
    if len(basis) < 2 * n:
        raise ConstructionError(f"need {2 * n} coordinates, have {len(basis)}", stage="ramsey", achieved=len(basis))
    d = induced_tuple_coloring(c, "sum2", basis, n)
    Y = ramsey_monochromatic_subset(d, 2 * n, node_limit, time_limit)
    if Y is None:
        raise ConstructionError(f"no monochromatic {2 * n}-set of {n}-tuples among {len(basis)} coordinates", stage="ramsey")
    alpha = Y[: 2 * n]
    es = [basis[a] for a in alpha]
    fs = list(itertools.product((0, 1), repeat=n))
    X = [pattern_apply(prop42_pattern(f), es) for f in fs]
    provenance = [f"alpha={list(alpha)}"]
    return _finish(X, c, provenance, {"alpha": alpha, "fs": fs}, "prop42")


def ramsey_exhaustive_failure_exists(points: int, target: int, arity: int = 2, colors: int = 2) -> tuple[bool, int]:
    """Run the Ramsey search on every ``colors``-colouring of ``arity``-sets of
    ``points`` points.  Returns ``(some colouring has no monochromatic target-set,
    number of colourings tried)``."""
    tuples = list(itertools.combinations(range(points), arity))
    failed = False
    count = 0
    for assignment in itertools.product(range(colors), repeat=len(tuples)):
        table = dict(zip(tuples, assignment))
        d = TupleColoring(arity, tuple(range(points)), table.__getitem__)
        count += 1
        if ramsey_monochromatic_subset(d, target) is None:
            failed = True
    return failed, count
