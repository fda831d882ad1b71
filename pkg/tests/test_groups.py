import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumset_ramsey import (
    GroupSpec,
    GValue,
    StructuralError,
    ResourceLimitError,
    canonical_gvalue,
    double_image,
    enumerate_fragment,
    four_torsion,
    order_of,
    sumset,
    supp,
    two_torsion,
)
from sumset_ramsey.groups import (
    add,
    finite_group_specs,
    generated_subgroup,
    scalar_mul,
    solve_double,
    solve_quadruple,
    subgroup_closure,
)

MIXED = GroupSpec.parse("Z/4 Z/4 Z")
g = MIXED.element(1, 0, 1)
h = MIXED.element(3, 2, 1)


# -- GValue ------------------------------------------------------------------


def test_gvalue_normalizes_rational_part():
    v = GValue(Fraction(5, 4), 0)
    assert v.rat == Fraction(1, 4)
    assert GValue(Fraction(-1, 4)).rat == Fraction(3, 4)
    assert GValue(Fraction(2, 4)) == GValue(Fraction(1, 2))


def test_gvalue_zero_and_order():
    assert GValue(0, 0).is_zero()
    assert not GValue(0, 1).is_zero()
    assert GValue(Fraction(1, 2)).order() == 2
    assert GValue(Fraction(3, 8)).order() == 8
    assert GValue(Fraction(1, 3), 1).order() == math.inf


def test_unique_order_two_gvalue():
    # among a grid of rationals only 1/2 has order 2
    grid = {GValue(Fraction(a, b)) for b in range(1, 13) for a in range(b)}
    assert [v for v in grid if v.order() == 2] == [GValue(Fraction(1, 2))]
    assert (GValue(Fraction(1, 2)) * 2).is_zero()


# -- parsing and basic arithmetic -----------------------------------------------


def test_parse_round_trip():
    assert MIXED.factors == (4, 4, 0)
    assert str(MIXED) == "Z/4 Z/4 Z"
    assert GroupSpec.parse("Z/3^2 Z").factors == (3, 3, 0)
    assert MIXED.parse_element("1,0,1") == g


@pytest.mark.parametrize("text", ["Z/1", "Z/x", "Q", "Z/4,Z", "Z/-3"])
def test_parse_rejects_bad_factors(text):
    with pytest.raises(ValueError) as exc:
        GroupSpec.parse(text)
    assert any(tok in str(exc.value) for tok in text.split())


def test_add_example():
    assert add(g, h) == MIXED.element(0, 2, 2)
    assert g + MIXED.zero() == g
    z4 = GroupSpec.parse("Z/4")
    assert z4.element(2) + z4.element(2) == z4.zero()


def test_add_mismatched_specs():
    with pytest.raises(StructuralError):
        add(g, GroupSpec.parse("Z/4").element(1))


def test_scalar_mul_examples():
    assert scalar_mul(2, h) == MIXED.element(2, 0, 2)
    assert scalar_mul(0, g) == MIXED.zero()
    assert scalar_mul(2, g) == add(g, g)
    assert scalar_mul(-1, g) == -g


def test_order_examples():
    assert order_of(MIXED.element(1, 0, 0)) == 4
    assert order_of(MIXED.element(0, 0, 1)) == math.inf
    assert order_of(MIXED.element(2, 2, 0)) == 2
    assert order_of(MIXED.zero()) == 1


def test_order_matches_brute_force():
    spec = GroupSpec.parse("Z/4 Z/6 Z/2")
    for x in enumerate_fragment(spec):
        k = next(k for k in range(1, 100) if (k * x) == spec.zero())
        assert order_of(x) == k


def test_canonical_gvalue_examples():
    assert canonical_gvalue(MIXED.element(2, 0, 2)) == ((0, GValue(Fraction(1, 2))), (2, GValue(0, 2)))
    assert canonical_gvalue(MIXED.zero()) == ()
    z2 = GroupSpec.parse("Z/2")
    assert canonical_gvalue(z2.element(1)) == ((0, GValue(Fraction(1, 2))),)


def test_support_is_increasing():
    assert g.support == (0, 2)
    assert supp(h) == frozenset({0, 1, 2})


# -- enumeration -----------------------------------------------------------------


def test_fragment_sizes():
    assert len(enumerate_fragment(GroupSpec.parse("Z/2 Z/2"), 5)) == 4
    assert len(enumerate_fragment(GroupSpec.parse("Z/4 Z"), 1)) == 12
    assert enumerate_fragment(GroupSpec(()), 3) == [GroupSpec(()).zero()]


def test_fragment_is_deterministic_and_distinct():
    a = enumerate_fragment(MIXED, 2)
    assert a == enumerate_fragment(MIXED, 2)
    assert len(set(a)) == len(a) == MIXED.fragment_size(2)
    assert a == sorted(a)
    assert all(abs(x.coords[2]) <= 2 for x in a)


def test_fragment_cap():
    with pytest.raises(ResourceLimitError) as exc:
        enumerate_fragment(GroupSpec.power(4, 12), cap=1000)
    assert "1000" in str(exc.value)


def test_torsion_and_doubles_z8():
    z8 = GroupSpec.parse("Z/8")
    e = z8.element
    assert list(two_torsion(z8).elements) == [e(0), e(4)]
    assert list(double_image(z8).elements) == [e(0), e(2), e(4), e(6)]
    assert list(two_torsion(GroupSpec.power(3, 3)).elements) == [GroupSpec.power(3, 3).zero()]
    assert len(four_torsion(GroupSpec.parse("Z/4"))) == 4


def test_subgroup_enumerations_closed_under_negation():
    for spec in finite_group_specs(32)[::5]:
        for sub in (two_torsion(spec), double_image(spec)):
            s = set(sub.elements)
            assert len(s) == len(sub.elements)
            assert all(-x in s for x in s)


def test_solve_examples():
    z8, z16, z3 = (GroupSpec.parse(t) for t in ("Z/8", "Z/16", "Z/3"))
    assert solve_double(z8.element(4), enumerate_fragment(z8)) == [z8.element(2), z8.element(6)]
    assert solve_quadruple(z16.zero(), enumerate_fragment(z16)) == [z16.element(k) for k in (0, 4, 8, 12)]
    assert solve_double(z3.element(1), enumerate_fragment(z3)) == [z3.element(2)]


def test_sumset_examples():
    assert set(sumset([g, h])) == {MIXED.element(2, 0, 2), MIXED.element(0, 2, 2)}
    assert sumset([g]) == [2 * g]
    b = GroupSpec.parse("Z/2 Z/2")
    a = b.element(1, 0)
    assert set(sumset([b.zero(), a])) == {b.zero(), a}
    assert sumset([]) == []


def test_generated_subgroup_of_counterexample():
    H = generated_subgroup([MIXED.element(1, 0, 1), MIXED.element(2, 0, 0), MIXED.element(0, 2, 0)], bound=1)
    assert g in H and h in H
    assert all(order_of(x) != 4 for x in H)


def test_subgroup_closure():
    z8 = GroupSpec.parse("Z/8")
    assert subgroup_closure([z8.element(2)], z8) == {z8.element(k) for k in (0, 2, 4, 6)}


# -- finite group catalogue ---------------------------------------------------------


def multiplicative_partitions(n):
    # unordered factorizations of n into factors >= 2, counted by brute force over sorted tuples
    out = set()

    def grow(rest, prefix):
        if rest == 1:
            out.add(tuple(sorted(prefix)))
            return
        for d in range(2, rest + 1):
            if rest % d == 0:
                grow(rest // d, prefix + [d])

    grow(n, [])
    return out


def test_group_catalogue_complete():
    specs = finite_group_specs(64)
    assert len(specs) == len(set(specs))
    for n in range(1, 65):
        assert {s.factors for s in specs if s.order() == n} == multiplicative_partitions(n), n
    assert len(finite_group_specs(32)) == 78


def test_catalogue_covers_every_isomorphism_class():
    # invariant-factor forms: each m_i divides m_{i+1}
    specs = finite_group_specs(64)
    for n in (8, 16, 32, 36, 48, 64):
        invariant = [s for s in specs if s.order() == n and all(b % a == 0 for a, b in zip(s.factors, s.factors[1:]))]
        assert len(invariant) == count_abelian_groups(n)


def count_abelian_groups(n):
    # product over primes of the partition numbers of the exponents
    def partitions(k, largest=None):
        largest = k if largest is None else largest
        if k == 0:
            return 1
        return sum(partitions(k - p, p) for p in range(1, min(k, largest) + 1))

    total, p, m = 1, 2, n
    while m > 1:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        total *= partitions(e)
        p += 1
    return total


# -- properties ----------------------------------------------------------------


@st.composite
def spec_and_pair(draw):
    factors = tuple(draw(st.lists(st.sampled_from([0, 2, 3, 4, 6, 8]), min_size=1, max_size=5)))
    spec = GroupSpec(factors)

    def coord(m):
        return st.integers(-20, 20) if m == 0 else st.integers(0, m - 1)

    x = spec.element(*[draw(coord(m)) for m in factors])
    y = spec.element(*[draw(coord(m)) for m in factors])
    return spec, x, y


@given(spec_and_pair())
@settings(max_examples=300, deadline=None)
def test_support_algebra(data):
    _, x, y = data
    assert supp(x) ^ supp(y) <= supp(x + y) <= supp(x) | supp(y)
    assert supp(2 * x) <= supp(x)


@given(spec_and_pair())
@settings(max_examples=200, deadline=None)
def test_group_axioms(data):
    spec, x, y = data
    assert x + y == y + x
    assert x + (-x) == spec.zero()
    assert (x + y) - y == x
    assert 3 * x == x + x + x
    assert hash(x + y) == hash(y + x)


def test_support_algebra_exhaustive():
    spec = GroupSpec.parse("Z/4 Z/2 Z")
    frag = enumerate_fragment(spec, 1)
    for x, y in itertools.product(frag, repeat=2):
        assert supp(x) ^ supp(y) <= supp(x + y) <= supp(x) | supp(y)


def test_quotient_identity_all_small_groups():
    for spec in finite_group_specs(64):
        assert len(double_image(spec)) * len(two_torsion(spec)) == spec.order()


def test_lemma22_bounds_brute_force():
    for spec in finite_group_specs(64):
        frag = enumerate_fragment(spec)
        n = sum(1 for x in frag if (x + x) == spec.zero())
        doubles, quads = {}, {}
        for x in frag:
            doubles[x + x] = doubles.get(x + x, 0) + 1
            quads[4 * x] = quads.get(4 * x, 0) + 1
        assert max(doubles.values()) <= n
        assert max(quads.values()) <= n * n


def test_canonical_embedding_injective_on_fragments():
    for spec, bound in [(MIXED, 2), (GroupSpec.parse("Z/2 Z/3 Z/6"), 0), (GroupSpec.parse("Z Z"), 3)]:
        frag = enumerate_fragment(spec, bound)
        assert len({canonical_gvalue(x) for x in frag}) == len(frag)


def test_order_two_iff_all_coordinates_half():
    half = GValue(Fraction(1, 2))
    for spec, bound in [(MIXED, 1), (GroupSpec.parse("Z/2 Z/6 Z/8"), 0)]:
        for x in enumerate_fragment(spec, bound):
            coords = [v for _, v in canonical_gvalue(x)]
            assert (order_of(x) == 2) == (bool(coords) and all(v == half for v in coords))
