"""Five-coloring of planar graphs with a small fifth color class.

The package takes a planar graph as a combinatorial embedding (a
rotation system), triangulates it, and colors it with five colors so
that color 5 lands on at most one sixth of the vertices.  The engine
peels low-degree vertices, reduces catalog configurations when the
minimum degree reaches five, and recolors with Kempe chains on the way
back up.  An exact-rational discharging audit certifies that the
catalog leaves no minimum-degree-5 graph unmatched.

>>> from fivecolor import named, color_planar, check_coloring
>>> g = named("icosahedron")
>>> sizes = check_coloring(g, color_planar(g))
>>> sizes[5] <= 2
True
"""

from .catalog import (
    ConfigurationSpec,
    NinePattern,
    PlainZero,
    TrialSequence,
    ValidationFailure,
    ValidationReport,
    VirtualHub,
    builtin_catalog,
    get_entry,
    validate_catalog,
    validate_entry,
)
from .discharge import AuditReport, ChargeLedger, SumMismatch, audit, final_charges, transfers
from .embedding import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    EmbeddedGraph,
    EmbeddingError,
    LoopEdge,
    NotPlanarEmbedding,
    Triangulation,
    UntriangulatableFace,
    build,
    from_faces,
    triangulate,
)
from .instances import GenSpec, ParseError, UnknownName, generate, named, read, write
from .kempe import BadColorPair, DiagonalContradiction, chain, free_color, swap
from .matching import CompletenessBreach, Occurrence, find_reducible, match_at
from .reducer import Coloring, RunStats, SchemeExhausted, check_coloring, color_planar

__version__ = "0.1.0"

__all__ = [
    "AsymmetricAdjacency",
    "AuditReport",
    "BadColorPair",
    "ChargeLedger",
    "Coloring",
    "CompletenessBreach",
    "ConfigurationSpec",
    "DiagonalContradiction",
    "DuplicateNeighbor",
    "EmbeddedGraph",
    "EmbeddingError",
    "GenSpec",
    "LoopEdge",
    "NinePattern",
    "NotPlanarEmbedding",
    "Occurrence",
    "ParseError",
    "PlainZero",
    "RunStats",
    "SchemeExhausted",
    "SumMismatch",
    "TrialSequence",
    "Triangulation",
    "UnknownName",
    "UntriangulatableFace",
    "ValidationFailure",
    "ValidationReport",
    "VirtualHub",
    "audit",
    "build",
    "builtin_catalog",
    "chain",
    "check_coloring",
    "color_planar",
    "final_charges",
    "find_reducible",
    "free_color",
    "from_faces",
    "generate",
    "get_entry",
    "match_at",
    "named",
    "read",
    "swap",
    "transfers",
    "triangulate",
    "validate_catalog",
    "validate_entry",
    "write",
    "__version__",
]
