"""
2-torsion, doubles and the quotient identity
============================================

For a finite group the doubling map ``x -> 2x`` has kernel ``G2`` and image
``2G``, so ``|2G| * |G2| = |G|``.  The number of solutions of ``2x = c`` is at
most ``|G2|`` and of ``4y = d`` at most ``|G2|**2``.  ``analyze`` collects these
numbers and says which side of the finite-colour dichotomy a group falls on.
"""

from sumset_ramsey import GroupSpec, analyze, double_image, two_torsion
from sumset_ramsey.analysis import lemma22_counts
from sumset_ramsey.groups import finite_group_specs

for text in ("Z/8", "Z/2^3", "Z/4", "Z/4 Z/6"):
    rep = analyze(GroupSpec.parse(text))
    print(f"{text:<10} |G|={rep.size:<3} |G2|={rep.g2:<2} |G4|={rep.g4:<3} |2G|={rep.doubles:<3} {rep.classification}")

# Z is only ever seen through fragments; the classification is structural
print(dict(analyze(GroupSpec.parse("Z"), bound=3).lines())["classification"])

###############################################################################
# Countable direct powers: 2G is infinite unless the modulus is 2.

for m in (2, 3, 4, 6, 12):
    print(f"(Z/{m})^omega:", analyze(GroupSpec.parse(f"Z/{m}"), infinite_power=True).classification)

###############################################################################
# The identities over every presentation up to order 64.

specs = finite_group_specs(64)
print(all(len(double_image(s)) * len(two_torsion(s)) == s.order() for s in specs))
worst = max(specs, key=lambda s: lemma22_counts(s)[2])
print("largest 4y = d fibre:", worst, lemma22_counts(worst))
