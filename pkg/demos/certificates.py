"""
Certifying that no witness exists
=================================

``certify_class`` runs the exhaustive search over a sweep of fragments and
returns one certificate per fragment.  A certificate either carries a witness
or states that the whole domain was searched.  Hitting a node or time cap
raises instead, so "none in domain" is never a guess.
"""

import time

from sumset_ramsey import (
    Finite2GColoring,
    GroupSpec,
    InjectiveColoring,
    ResourceLimitError,
    SupportColoring,
    certify_class,
    enumerate_fragment,
    find_witness,
)
from sumset_ramsey.groups import finite_group_specs
from sumset_ramsey.search import bound_family, power_family

c = SupportColoring()

# no elements of order 2
for cert in certify_class(power_family(3), c, 2, range(1, 6)):
    print(f"{cert.domain:<28} {cert.outcome:<15} nodes={cert.nodes}")

# torsion, but nothing of order 4
t0 = time.perf_counter()
for cert in certify_class(power_family(6), c, 2, range(1, 5)):
    print(f"{cert.domain:<28} {cert.outcome:<15} nodes={cert.nodes}")
print(f"  {time.perf_counter() - t0:.2f}s")

###############################################################################
# Growing the bound on Z + Z/2 + Z/2 never produces a pair.

certs = certify_class(bound_family(GroupSpec.parse("Z Z/2 Z/2")), c, 2, range(0, 9))
print("bounds 0..8:", {cert.outcome for cert in certs})

###############################################################################
# With finitely many doubles, colour 2G injectively and everything else with
# one extra colour.  Then 2x = 2y is forced for any monochromatic pair, and
# x + y lands on the same double only if x = y.

bad = [s for s in finite_group_specs(32) if find_witness(enumerate_fragment(s), Finite2GColoring(s), 2).found]
print(len(finite_group_specs(32)), "presentations of order <= 32, failures:", bad)

# the injective colouring kills pairs everywhere
frag = enumerate_fragment(GroupSpec.parse("Z/4 Z"), 2)
inj = InjectiveColoring.on_fragment(GroupSpec.parse("Z/4 Z"), 4)
print("injective:", find_witness(frag, inj, 2).outcome)

###############################################################################
# Caps are explicit.

try:
    find_witness(enumerate_fragment(GroupSpec.power(6, 4)), c, 2, node_limit=100)
except ResourceLimitError as exc:
    print("gave up:", exc)
