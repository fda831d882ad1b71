import itertools
import random

import pytest

from sumset_ramsey import (
    ConstantColoring,
    DomainError,
    Finite2GColoring,
    GroupSpec,
    InjectiveColoring,
    ResourceLimitError,
    Seq,
    SupportColoring,
    TableColoring,
    certify_class,
    enumerate_fragment,
    find_witness,
    minimal_fragment_number,
    verify_witness,
)
from sumset_ramsey.colorings import Small
from sumset_ramsey.gvalue import HALF, GValue
from sumset_ramsey.search import bound_family, nat_fragment, power_family

MIXED = GroupSpec.parse("Z/4 Z/4 Z")
PAIR = (MIXED.element(1, 0, 1), MIXED.element(3, 2, 1))

# least M such that every 2-colouring of {0..M} (resp. {1..M}) has a 2-witness
# with X+X inside the fragment; recomputed below by brute force
NAT_R2_N2 = 12
NAT_R2_N2_NO_ZERO = 14


def oracle_witness(domain, c, n):
    """Every n-subset in lexicographic order, sums coloured directly."""
    for X in itertools.combinations(domain, n):
        colours = {c(x + y) for x in X for y in X}
        if len(colours) == 1:
            return X
    return None


def random_small_fragment(rng):
    while True:
        factors = tuple(rng.choice([0, 2, 3, 4, 5, 6]) for _ in range(rng.randint(1, 3)))
        spec = GroupSpec(factors)
        bound = rng.randint(0, 2)
        if spec.fragment_size(bound) <= 12:
            return spec, bound


def random_closed_table(spec, bound, colours, rng):
    # colour the fragment and every sum of two fragment elements
    frag = enumerate_fragment(spec, bound)
    points = set(frag) | {x + y for x in frag for y in frag}
    return frag, TableColoring({g: rng.randrange(colours) for g in sorted(points)}, spec)


# -- verify_witness -------------------------------------------------------------


def test_verify_counterexample_pair():
    ok, colour = verify_witness(PAIR, SupportColoring())
    assert ok
    assert colour == Seq([HALF, GValue(0, 2)])


def test_verify_singleton():
    g = MIXED.element(1, 2, 3)
    assert verify_witness([g], SupportColoring()) == (True, SupportColoring()(2 * g))


def test_verify_boolean_pair_fails():
    b = GroupSpec.parse("Z/2 Z/2")
    ok, colour = verify_witness([b.zero(), b.element(1, 0)], Finite2GColoring(b))
    assert not ok and colour is None


def test_verify_outside_domain():
    z = GroupSpec.parse("Z/5")
    c = TableColoring({z.element(1): 0})
    with pytest.raises(DomainError):
        verify_witness([z.element(1), z.element(2)], c)


# -- find_witness ------------------------------------------------------------------


def test_find_counterexample_witness():
    cert = find_witness(enumerate_fragment(MIXED, 1), SupportColoring(), 2)
    assert cert.found and cert.outcome == "found"
    assert verify_witness(cert.witness.elements, SupportColoring())[0]
    assert cert.witness == find_witness(enumerate_fragment(MIXED, 1), SupportColoring(), 2, prune=False).witness


def test_no_witness_without_order_two():
    cert = find_witness(enumerate_fragment(GroupSpec.power(3, 4)), SupportColoring(), 2)
    assert not cert.found and cert.outcome == "none-in-domain"
    assert cert.nodes > 0


def test_singletons_always_found():
    frag = enumerate_fragment(GroupSpec.parse("Z/3 Z"), 1)
    for c in (SupportColoring(), InjectiveColoring(frag + [x + y for x in frag for y in frag])):
        cert = find_witness(frag, c, 1)
        assert cert.found and cert.witness.elements == (frag[0],)


def test_injective_never_has_pairs():
    frag = enumerate_fragment(MIXED, 1)
    c = InjectiveColoring(sorted({x + y for x in frag for y in frag}))
    assert not find_witness(frag, c, 2).found


def test_witness_is_least_in_domain_order():
    rng = random.Random(5)
    spec = GroupSpec.parse("Z/6 Z")
    frag, c = random_closed_table(spec, 1, 2, rng)
    cert = find_witness(frag, c, 2)
    assert cert.witness.elements == oracle_witness(frag, c, 2)


def test_agreement_with_oracle_on_random_tables():
    rng = random.Random(2024)
    for trial in range(200):
        spec, bound = random_small_fragment(rng)
        frag, c = random_closed_table(spec, bound, rng.randint(2, 4), rng)
        n = rng.randint(2, 3)
        expected = oracle_witness(frag, c, n)
        for prune in (True, False):
            cert = find_witness(frag, c, n, prune=prune)
            got = None if not cert.found else cert.witness.elements
            assert got == expected, (trial, spec, bound, n, prune)


def test_determinism_across_threads():
    rng = random.Random(9)
    for _ in range(25):
        spec, bound = random_small_fragment(rng)
        frag, c = random_closed_table(spec, bound, 2, rng)
        results = {find_witness(frag, c, 2, threads=t).witness for t in (1, 2, 4, 7)}
        assert len(results) == 1
    frag = enumerate_fragment(MIXED, 2)
    assert len({find_witness(frag, SupportColoring(), 2, threads=t).witness for t in (1, 3, 8)}) == 1


def test_none_is_monotone_under_subdomains():
    rng = random.Random(1)
    frag = enumerate_fragment(GroupSpec.parse("Z Z/2 Z/2"), 4)
    assert not find_witness(frag, SupportColoring(), 2).found
    for _ in range(30):
        sub = [x for x in frag if rng.random() < 0.5]
        assert not find_witness(sub, SupportColoring(), 2).found


def test_node_cap_is_not_a_certificate():
    frag = enumerate_fragment(GroupSpec.power(6, 4))
    with pytest.raises(ResourceLimitError) as exc:
        find_witness(frag, SupportColoring(), 2, node_limit=50)
    assert exc.value.cap == 50


def test_time_limit():
    frag = enumerate_fragment(GroupSpec.power(6, 5))
    with pytest.raises(ResourceLimitError):
        find_witness(frag, SupportColoring(), 2, time_limit=0.0)


def test_empty_domain():
    assert not find_witness([], ConstantColoring(), 2).found
    with pytest.raises(ValueError):
        find_witness(enumerate_fragment(MIXED, 0), ConstantColoring(), 0)


# -- certify_class ------------------------------------------------------------------


def test_certify_torsion_without_order_four():
    certs = certify_class(power_family(6), SupportColoring(), 2, range(1, 4))
    assert [c.outcome for c in certs] == ["none-in-domain"] * 3


def test_certify_isomorph_bounds():
    certs = certify_class(bound_family(GroupSpec.parse("Z Z/2 Z/2")), SupportColoring(), 2, range(0, 5))
    assert not any(c.found for c in certs)


def test_certify_injective_rule():
    certs = certify_class(
        bound_family(GroupSpec.parse("Z/4 Z")),
        lambda spec, b: InjectiveColoring.on_fragment(spec, 2 * b),
        2,
        range(0, 3),
    )
    assert not any(c.found for c in certs)


def test_certify_stops_at_first_witness():
    certs = certify_class(bound_family(MIXED), SupportColoring(), 2, range(0, 5))
    assert certs[-1].found
    assert all(not c.found for c in certs[:-1])
    assert len(certs) < 5


# -- minimal fragment numbers --------------------------------------------------------


def nat_has_witness(colours, start):
    # colours[k - start] is the colour of k; pairs x < y with 2y inside the fragment
    top = start + len(colours) - 1
    col = lambda k: colours[k - start]  # noqa: E731
    for x in range(start, top + 1):
        for y in range(x + 1, top + 1):
            if 2 * y > top:
                break
            if col(2 * x) == col(2 * y) == col(x + y):
                return True
    return False


def oracle_nat_minimal(r, start, limit):
    for M in range(start, limit + 1):
        size = M - start + 1
        if all(nat_has_witness(cs, start) for cs in itertools.product(range(r), repeat=size)):
            return M
    return None


def test_nat_fixture_matches_oracle():
    assert oracle_nat_minimal(2, 0, 16) == NAT_R2_N2
    assert oracle_nat_minimal(2, 1, 16) == NAT_R2_N2_NO_ZERO


def test_minimal_nat_two_colours():
    res = minimal_fragment_number("nat", 2, 2, 20)
    assert res.value == NAT_R2_N2
    assert res.sizes_checked == list(range(0, NAT_R2_N2 + 1))
    # the certificate for M - 1 really avoids witnesses
    cex = res.counterexample
    colours = [cex(x).value for x in nat_fragment(NAT_R2_N2 - 1)]
    assert not nat_has_witness(colours, 0)


def test_minimal_nat_exclude_zero():
    assert minimal_fragment_number("nat", 2, 2, 20, exclude_zero=True).value == NAT_R2_N2_NO_ZERO


def test_minimal_one_colour():
    # {0, 1, 2} is the first fragment holding X = {0, 1} together with X + X
    assert minimal_fragment_number("nat", 1, 2, 5).value == oracle_nat_minimal(1, 0, 5) == 2


def test_minimal_boolean_family_diverges():
    res = minimal_fragment_number("z2sum", 2, 2, 4)
    assert res.value is None and res.diverges
    avoid = res.counterexample
    assert avoid is not None
    frag = enumerate_fragment(GroupSpec.power(2, 4))
    assert not find_witness(frag, avoid, 2).found


def test_minimal_resource_error_reports_bound():
    with pytest.raises(ResourceLimitError) as exc:
        minimal_fragment_number("nat", 3, 2, 40, node_limit=2000)
    assert exc.value.best_known[0] >= 1


def test_minimal_colour_ids_are_normalised():
    res = minimal_fragment_number("nat", 2, 2, 20)
    colours = [res.counterexample(x) for x in nat_fragment(NAT_R2_N2 - 1)]
    assert colours[0] == Small(0)
