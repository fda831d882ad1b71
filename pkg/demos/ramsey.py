"""
The finite Ramsey step
======================

``ramsey_monochromatic_subset`` finds the lexicographically least ``m``-set
whose ``k``-subsets share a colour, or proves there is none.  On pairs with
two colours, six points always contain a monochromatic triangle and five
points need not.
"""

import itertools

from sumset_ramsey import ramsey_monochromatic_subset
from sumset_ramsey.colorings import TupleColoring
from sumset_ramsey.constructive import ramsey_exhaustive_failure_exists

for points in (5, 6):
    failed, count = ramsey_exhaustive_failure_exists(points, 3)
    print(f"{points} points, {count} colourings: some colouring avoids triangles = {failed}")

# the pentagon and its complement
pentagon = {(a, b): int((b - a) % 5 in (1, 4)) for a, b in itertools.combinations(range(5), 2)}
d = TupleColoring(2, tuple(range(5)), pentagon.__getitem__)
print("pentagon:", ramsey_monochromatic_subset(d, 3))

# add a sixth point and a triangle has to appear
hexagon = dict(pentagon)
hexagon.update({(a, 5): a % 2 for a in range(5)})
d = TupleColoring(2, tuple(range(6)), hexagon.__getitem__)
Y = ramsey_monochromatic_subset(d, 3)
print("with a sixth point:", Y, {hexagon[t] for t in itertools.combinations(Y, 2)})
