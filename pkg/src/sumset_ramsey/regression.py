"""Known finite instances with exactly checkable outcomes.

:func:`run_checks` runs all of them; the ``verify-paper`` command prints the
results one per line.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .analysis import lemma22_counts
from .colorings import Finite2GColoring, Seq, SupportColoring, TableColoring
from .constructive import (
    build_lemma23_sequence,
    build_lemma24_sequence,
    prop42_construct,
    verify_epsilon_delta,
    verify_independence_124,
)
from .groups import GroupSpec, enumerate_fragment, finite_group_specs, generated_subgroup, order_of
from .gvalue import GValue
from .search import certify_class, find_witness, power_family, verify_witness

MIXED = GroupSpec.parse("Z/4 Z/4 Z")
PAIR = (MIXED.element(1, 0, 1), MIXED.element(3, 2, 1))
PAIR_COLOR = Seq([GValue(Fraction(1, 2)), GValue(0, 2)])
SUBGROUP_GENERATORS = (MIXED.element(1, 0, 1), MIXED.element(2, 0, 0), MIXED.element(0, 2, 0))
ISOMORPH = GroupSpec.parse("Z Z/2 Z/2")


def isomorph_to_mixed(x):
    """``(k, u, v) -> k(1,0,1) + u(2,0,0) + v(0,2,0)``, an isomorphism onto the subgroup."""
    k, u, v = x.coords
    a, b, c = SUBGROUP_GENERATORS
    return k * a + u * b + v * c


def check_pair():
    ok, color = verify_witness(PAIR, SupportColoring())
    return ok and color == PAIR_COLOR, f"monochromatic={ok} colour={color}"


def check_pair_search():
    cert = find_witness(enumerate_fragment(MIXED, 1), SupportColoring(), 2)
    detail = "none" if not cert.found else " ".join(str(x) for x in cert.witness.elements)
    return cert.found, f"witness={detail}"


def check_subgroup():
    H = generated_subgroup(SUBGROUP_GENERATORS, bound=2)
    contains = all(g in set(H) for g in PAIR)
    no_order4 = all(order_of(x) != 4 for x in H)
    cert = find_witness(H, SupportColoring(), 2)
    return contains and no_order4 and cert.found, f"size={len(H)} no_order_4={no_order4} witness_found={cert.found}"


def check_isomorph():
    cert = find_witness(enumerate_fragment(ISOMORPH, 8), SupportColoring(), 2)
    images = {isomorph_to_mixed(x) for x in enumerate_fragment(ISOMORPH, 1)}
    injective = len(images) == ISOMORPH.fragment_size(1)
    return (not cert.found) and injective, f"outcome={cert.outcome} nodes={cert.nodes} iso_injective={injective}"


def _certify(modulus, sizes):
    certs = certify_class(power_family(modulus), SupportColoring(), 2, sizes)
    ok = len(certs) == len(sizes) and not any(c.found for c in certs)
    return ok, " ".join(f"K={k}:{c.outcome}" for k, c in zip(sizes, certs))


def check_no_order2():
    return _certify(3, list(range(1, 6)))


def check_no_order4():
    return _certify(6, list(range(1, 5)))


def check_finite2g(max_order=32):
    bad = [str(s) for s in finite_group_specs(max_order) if find_witness(
        enumerate_fragment(s), Finite2GColoring(s), 2).found]
    return not bad, f"groups={len(finite_group_specs(max_order))} failures={bad or 'none'}"


def check_boolean():
    spec = GroupSpec.parse("Z/2^3")
    c = Finite2GColoring(spec)
    cert = find_witness(enumerate_fragment(spec), c, 2)
    return c.num_colors == 2 and not cert.found, f"colours={c.num_colors} outcome={cert.outcome}"


def check_lemma22(max_order=64):
    bad = []
    for s in finite_group_specs(max_order):
        n, doubles, quads = lemma22_counts(s)
        if doubles > n or quads > n * n:
            bad.append(str(s))
    return not bad, f"groups={len(finite_group_specs(max_order))} failures={bad or 'none'}"


def check_prop42_n1():
    spec = GroupSpec.power(4, 8)
    rng = random.Random(0)
    table = {2 * spec.basis(a): rng.randrange(3) for a in range(len(spec))}
    w = prop42_construct(TableColoring(table), 1, spec)
    a1, a2 = w.meta["alpha"]
    x0, x1 = w.elements
    e1, e2 = spec.basis(a1), spec.basis(a2)
    identities = x0 == e1 + 2 * e2 and x1 == 3 * e1 and x0 + x0 == x1 + x1 == 2 * e1 and x0 + x1 == 2 * e2
    return identities, f"alpha={list(w.meta['alpha'])} colour={w.color}"


def check_lemma_sequences():
    z = build_lemma23_sequence(GroupSpec.parse("Z"), 0, 5)
    s24 = build_lemma24_sequence(GroupSpec.power(4, 4), 0, 4)
    ok23 = verify_independence_124(z, 5)
    ok24 = all(verify_epsilon_delta(s24, n) for n in (1, 2))
    return ok23 and ok24, f"lemma23_terms={[str(t) for t in z.terms]} ok={ok23} lemma24_ok={ok24}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("counterexample-pair", check_pair),
    ("counterexample-search", check_pair_search),
    ("counterexample-subgroup", check_subgroup),
    ("isomorph-no-pair", check_isomorph),
    ("no-order-2-certified", check_no_order2),
    ("torsion-no-order-4-certified", check_no_order4),
    ("boolean-two-colours", check_boolean),
    ("finite-2G-negative", check_finite2g),
    ("lemma22-bounds", check_lemma22),
    ("prop42-n1", check_prop42_n1),
    ("independent-sequences", check_lemma_sequences),
]


def run_checks(names=None):
    """Yield ``(name, passed, detail)`` for each selected check."""
    for name, fn in CHECKS:
        if names and name not in names:
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an aborted run
            ok, detail = False, f"error: {exc!r}"
        yield name, ok, detail
