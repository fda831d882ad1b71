"""
Finite shadows: least fragments forcing a witness
=================================================

For ``r`` colours and witness size ``n``, look for the least ``M`` such that
every ``r``-colouring of ``{0, ..., M}`` has ``X`` of size ``n`` with ``X + X``
monochromatic and inside the fragment.  The search walks colourings by
backtracking.  A new colour may only be the next unused one, so colour
relabellings are visited once.
"""

from sumset_ramsey import minimal_fragment_number
from sumset_ramsey.search import nat_fragment

res = minimal_fragment_number("nat", 2, 2, 30)
print("r=2 n=2:", res.value, f"({res.nodes} nodes)")

# the avoiding colouring of {0..M-1} that the search produced
avoid = res.counterexample
print("".join(str(avoid(x).value) for x in nat_fragment(res.value - 1)))

print("without 0:", minimal_fragment_number("nat", 2, 2, 30, exclude_zero=True).value)
print("one colour:", minimal_fragment_number("nat", 1, 2, 5).value)

###############################################################################
# Three-element witnesses take longer.  Give the search a budget and read the
# bound it reports if the budget runs out.

from sumset_ramsey import ResourceLimitError

try:
    r = minimal_fragment_number("nat", 2, 3, 60, node_limit=2_000_000, time_limit=5)
    print("r=2 n=3:", r.value)
except ResourceLimitError as exc:
    print("r=2 n=3: gave up,", exc.best_known)

###############################################################################
# In powers of Z/2 the doubles are just {0}; two colours avoid pairs forever.

res = minimal_fragment_number("z2sum", 2, 2, 4)
print("z2sum:", res.value, res.diverges, res.note)
