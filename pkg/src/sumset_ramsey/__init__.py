"""Monochromatic sumsets ``X + X`` in Abelian groups.

Groups are finite direct sums of cyclic factors (``Z`` or ``Z/m``).  The package
provides exact group arithmetic, the standard colourings, an exhaustive witness
search with certificates, and the constructive procedures that produce large
monochromatic sumsets in groups where ``2G`` is infinite.

>>> from sumset_ramsey import GroupSpec, SupportColoring, verify_witness
>>> G = GroupSpec.parse("Z/4 Z/4 Z")
>>> verify_witness([G.element(1, 0, 1), G.element(3, 2, 1)], SupportColoring())[0]
True
"""

from .analysis import StructureReport, analyze, lemma22_counts
from .colorings import (
    Color,
    Coloring,
    ConstantColoring,
    Finite2GColoring,
    FunctionColoring,
    HashColoring,
    InjectiveColoring,
    Seq,
    Small,
    SupportColoring,
    TableColoring,
    TupleColoring,
    coloring_from_rule,
    finite_2G_coloring,
    induced_tuple_coloring,
    injective_coloring,
    load_coloring,
    save_coloring,
    support_color,
)
from .constructive import (
    IndependentSequence,
    build_lemma23_sequence,
    build_lemma24_sequence,
    leader_russell_construct,
    order2_construct,
    prop42_construct,
    ramsey_monochromatic_subset,
    verify_epsilon_delta,
    verify_independence_124,
)
from .errors import (
    ConstructionError,
    DomainError,
    ParseError,
    ResourceLimitError,
    StructuralError,
    SumsetRamseyError,
)
from .groups import (
    Element,
    GroupSpec,
    canonical_gvalue,
    double_image,
    enumerate_fragment,
    four_torsion,
    generated_subgroup,
    order_of,
    sumset,
    supp,
    torsion_subgroup,
    two_torsion,
)
from .gvalue import GValue
from .patterns import leader_russell_patterns, pattern_apply
from .search import (
    Certificate,
    MinimalResult,
    Witness,
    certify_class,
    find_witness,
    minimal_fragment_number,
    verify_witness,
)

__version__ = "0.1.0"
