"""Mixed graphs of girth 5 built from elliptic semiplanes over GF(q),
with an exact mixed-girth engine and property certificates."""

from .cli import parse_mixed, render_mixed
from .errors import (
    HasArcsError,
    IndexOutOfBoundsError,
    KindMismatchError,
    MissingPartitionError,
    MixedCagesError,
    NotAPrimePowerError,
    OutOfRangeError,
    ParseError,
    SimplicityViolationError,
    TemplateInvalidError,
    TooLargeError,
)
from .gf import FieldTable, is_prime_power, make_field
from .girth import (
    CaseCount,
    CycleWitness,
    GirthReport,
    count_mixed_4cycles_casewise,
    enumerate_short_cycles,
    find_exemplar_5cycle,
    mixed_girth,
    validate_witness,
)
from .mixed import (
    DegreeProfile,
    HqParams,
    MixedGraph,
    build_circulant_digraph,
    build_hq,
    degree_profile,
    induced_subgraph,
    jump_count,
)
from .plane import (
    LabeledGraph,
    PartitionMap,
    VertexLabel,
    build_pg2,
    build_semiplane,
    incident,
)
from .verify import (
    BoundPair,
    Check,
    VerificationReport,
    bounds,
    check_part_circulants,
    check_part_matchings,
    check_simplicity,
    check_total_regularity,
    diameter_undirected,
    verify_hq,
)

__version__ = "0.1.0"

__all__ = [
    "FieldTable", "make_field", "is_prime_power",
    "MixedGraph", "DegreeProfile", "HqParams",
    "build_circulant_digraph", "jump_count", "build_hq",
    "degree_profile", "induced_subgraph",
    "VertexLabel", "PartitionMap", "LabeledGraph",
    "incident", "build_pg2", "build_semiplane",
    "CycleWitness", "GirthReport", "CaseCount",
    "mixed_girth", "validate_witness", "enumerate_short_cycles",
    "count_mixed_4cycles_casewise", "find_exemplar_5cycle",
    "Check", "VerificationReport", "BoundPair", "bounds",
    "check_total_regularity", "check_part_matchings", "check_simplicity",
    "check_part_circulants", "verify_hq", "diameter_undirected",
    "render_mixed", "parse_mixed",
    "MixedCagesError", "NotAPrimePowerError", "OutOfRangeError",
    "KindMismatchError", "SimplicityViolationError", "TooLargeError",
    "MissingPartitionError", "HasArcsError", "ParseError",
    "IndexOutOfBoundsError", "TemplateInvalidError",
    "__version__",
]
