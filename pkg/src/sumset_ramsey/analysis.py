"""Structure reports: 2-torsion, 4-torsion, doubles, and which side of the
finite-colour characterisation a group (or its countable direct power) is on."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .groups import INFINITE, GroupSpec, enumerate_fragment


@dataclass
class StructureReport:
    spec: GroupSpec
    bound: int
    size: int
    g2: int
    g4: int
    doubles: int
    double_elements: list = field(default_factory=list)
    exact: bool = True
    classification: str = ""
    arrow_finite: str = ""
    arrow_countable_colours: str = ""
    no_order2: bool = False
    torsion_no_order4: bool = False

    @property
    def quotient_identity(self) -> bool:
        """``|2G| * |G2| == |G|``; only meaningful when ``exact``."""
        return self.doubles * self.g2 == self.size

    def lines(self) -> list[tuple[str, str]]:
        out = [
            ("group", str(self.spec) or "trivial"),
            ("bound", str(self.bound)),
            ("exact", str(self.exact).lower()),
            ("order" if self.exact else "fragment_size", str(self.size)),
            ("G2", str(self.g2)),
            ("G4", str(self.g4)),
            ("2G", str(self.doubles)),
        ]
        if len(self.double_elements) <= 64:
            out.append(("2G_elements", " ".join(str(h) for h in self.double_elements)))
        if self.exact:
            out.append(("2G_times_G2_equals_G", str(self.quotient_identity).lower()))
        out += [
            ("classification", self.classification),
            ("finite_colours", self.arrow_finite),
            ("countably_many_colours", self.arrow_countable_colours),
            ("no_order_2", str(self.no_order2).lower()),
            ("torsion_without_order_4", str(self.torsion_no_order4).lower()),
        ]
        return out


def lemma22_counts(spec: GroupSpec, bound: int = 0) -> tuple[int, int, int]:
    """``(|G2|, max #solutions of 2x=c, max #solutions of 4y=d)`` over the fragment."""
    elements = enumerate_fragment(spec, bound)
    doubles = Counter(g + g for g in elements)
    quadruples = Counter(4 * g for g in elements)
    return doubles[spec.zero()], max(doubles.values()), max(quadruples.values())


def analyze(spec: GroupSpec, bound: int = 0, infinite_power: bool = False) -> StructureReport:
    """Count ``G2``, ``G4`` and ``2G`` on the fragment and classify.

    With ``infinite_power`` the classification is for the direct sum of
    countably many copies of ``spec`` instead of ``spec`` itself.
    """
    elements = enumerate_fragment(spec, bound)
    doubles = sorted({g + g for g in elements})
    report = StructureReport(
        spec=spec,
        bound=bound,
        size=len(elements),
        g2=sum(1 for g in elements if not g + g),
        g4=sum(1 for g in elements if not 4 * g),
        doubles=len(doubles),
        double_elements=doubles,
        exact=spec.is_finite(),
    )
    moduli = spec.factors
    has_z = INFINITE in moduli
    boolean = all(m == 2 for m in moduli)
    report.no_order2 = all(m == INFINITE or m % 2 for m in moduli)
    report.torsion_no_order4 = not has_z and all(m % 4 for m in moduli)
    report.arrow_countable_colours = "G -/-> (2) with countably many colours: countable group, injective colouring"

    big = [m for m in moduli if m == INFINITE or m > 2]
    if has_z:
        report.classification = "2G infinite: contains an element of infinite order (Z case)"
        report.arrow_finite = "G -> (n)_r for all finite n, r"
    elif infinite_power and big:
        if any(m % 4 == 0 for m in moduli):
            case = "2G has infinitely many elements of order 2 (order-2 construction)"
        else:
            case = "2G torsion with finitely many elements of order 2 (pattern construction)"
        report.classification = f"countable power: 2G infinite; {case}"
        report.arrow_finite = "G -> (n)_r for all finite n, r"
    else:
        k = 1 if (infinite_power and boolean) else report.doubles
        prefix = "countable power: " if infinite_power else ""
        kind = "Boolean, " if boolean else ""
        report.classification = f"{prefix}{kind}2G finite (|2G|={k}), negative side applies"
        report.arrow_finite = f"G -/-> (2)_{k + 1} via the finite-2G colouring"
    return report
