"""
A two-element witness in Z/4 + Z/4 + Z
======================================

The support colouring gives ``g`` the sequence of its nonzero coordinates,
each read as a point of Q[sqrt 2]/Z.  Positions are forgotten.  In groups
without elements of order 4 it admits no pair ``X`` with ``X + X``
monochromatic.  Here order 4 is present and a pair appears.
"""

from sumset_ramsey import GroupSpec, SupportColoring, enumerate_fragment, find_witness, sumset, verify_witness
from sumset_ramsey.regression import ISOMORPH, SUBGROUP_GENERATORS, isomorph_to_mixed
from sumset_ramsey.groups import generated_subgroup, order_of

G = GroupSpec.parse("Z/4 Z/4 Z")
c = SupportColoring()

g = G.element(1, 0, 1)
h = G.element(3, 2, 1)

# 2g = 2h = (2,0,2) and g+h = (0,2,2): both read as [(1/2,0),(0,2)]
for s in sumset([g, h]):
    print(f"{str(s):>8}  {c(s)}")
print("monochromatic:", verify_witness([g, h], c))

# the search finds a pair of its own (colex order, so the Z coordinate is -1)
cert = find_witness(enumerate_fragment(G, 1), c, 2)
print(cert.outcome, [str(x) for x in cert.witness.elements], cert.witness.color)

###############################################################################
# The pair lives in the subgroup generated by (1,0,1), (2,0,0) and (0,2,0),
# which has no element of order 4.

H = generated_subgroup(SUBGROUP_GENERATORS, bound=2)
print(len(H), "elements, orders:", sorted({order_of(x) for x in H}, key=str))
print("pair inside:", g in H and h in H)

###############################################################################
# That subgroup is isomorphic to Z + Z/2 + Z/2.  Written that way the support
# colouring has no witness at all: the colouring depends on the presentation.

cert = find_witness(enumerate_fragment(ISOMORPH, 8), c, 2)
print(ISOMORPH, "bound 8:", cert.outcome, f"({cert.nodes} nodes)")
print("image of (1,0,0):", isomorph_to_mixed(ISOMORPH.element(1, 0, 0)))
