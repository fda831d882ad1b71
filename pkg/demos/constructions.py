"""
Building monochromatic sumsets
==============================

When the doubles form an infinite set, every finite colouring has large
``X`` with ``X + X`` monochromatic.  The constructions below follow the
standard route.  Pick a sequence with unique small combinations, colour
tuples of indices through the original colouring, find a monochromatic index
set and read ``X`` off it.  Every result is checked with ``verify_witness``
before it is returned.
"""

import itertools
import random

from sumset_ramsey import (
    FunctionColoring,
    GroupSpec,
    HashColoring,
    TableColoring,
    build_lemma23_sequence,
    build_lemma24_sequence,
    leader_russell_construct,
    order2_construct,
    prop42_construct,
    verify_epsilon_delta,
    verify_independence_124,
)

Z = GroupSpec.parse("Z")

# combinations with coefficients 1, 2, 4 must not collide; powers of 5 keep
# them apart, plain multiples 1, 2, 3, ... do not (2*1 = 1*2)
seq = build_lemma23_sequence(Z, 0, 12)
print([str(t) for t in seq.terms[:5]], verify_independence_124(seq, 5))
print(verify_independence_124([Z.element(k) for k in range(1, 6)]))

###############################################################################
# Two colours on Z.  Patterns (4,4), (4,2,2), (2,2,2,2) are coloured
# together; two of the three must agree, and that pair of patterns gives X.

c = FunctionColoring(lambda g: int(g.coords[0] % 3 == 1), 2, "mod3")
w = leader_russell_construct(c, 2, 2, seq)
print(w.provenance)
print([str(x) for x in w.elements], "colour", w.color)

###############################################################################
# Powers of Z/4: order-2 doubles give 2**n elements at once.

spec = GroupSpec.power(4, 24)
zs = build_lemma24_sequence(spec, 0, 24)
print("epsilon/delta:", verify_epsilon_delta(zs.terms[:6], 2))
w = order2_construct(HashColoring(3, seed=1), 2, zs)
print(w.provenance, len(w), "elements")

###############################################################################
# Same group family, coordinates chosen directly.  For n = 1 the two
# elements are e_a + 2e_b and 3e_a: both double to 2e_a, and they sum to 2e_b.

spec = GroupSpec.power(4, 64)
rng = random.Random(0)
basis = [spec.basis(k) for k in range(64)]
pair_sums = [2 * basis[a] + 2 * basis[b] for a, b in itertools.combinations(range(64), 2)]
c = TableColoring({s: rng.randrange(4) for s in pair_sums}, spec)
w = prop42_construct(c, 2, spec)
print("alpha =", list(w.meta["alpha"]))
for f, x in zip(w.meta["fs"], w.elements):
    print(f, [i for i, v in enumerate(x.coords) if v], [v for v in x.coords if v])
