"""Multi-level co-word maps of a scientific domain from count data.

Micro: focus-tunable term neighborhoods under an asymmetric proximity.
Meso: overlapping fields by k-clique percolation, with per-term
specificity/genericity profiles.  Macro: a field-overlap graph with
activity growth.  Exposed as a library, the `cowordmap` CLI, an HTTP
query service and exports (CSV/JSON/GraphML/DOT).
"""

from .cliques import (
    Community,
    CpmParams,
    LexicalGraph,
    build_lexical_graph,
    k_clique_communities,
    maximal_cliques,
)
from .corpus import (
    CorpusStore,
    TimeWindow,
    ingest,
    ingest_csv,
    load_store,
    normalize_label,
    save_store,
    total_occurrences,
    window_counts,
)
from .errors import (
    BudgetExceededError,
    CowordError,
    DegenerateWindowError,
    ParseError,
    UndefinedActivityError,
    UndefinedTermError,
    UnknownTermError,
    ValidationError,
    WindowRangeError,
)
from .estimators import FieldExtractor, MacroMapper
from .fields import (
    ParadigmaticField,
    TermFieldProfile,
    build_field,
    genericity_index,
    specificity_index,
    term_growth,
)
from .macromap import (
    MacroEdge,
    MacroMap,
    MacroNode,
    activity_color,
    build_macro_map,
    field_activity,
    normalized_share,
)
from .proximity import (
    ProximityParams,
    ProximityValue,
    dual_params,
    neighborhood,
    pair_value,
    proximity,
    proximity_row,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Community",
    "CorpusStore",
    "CowordError",
    "CpmParams",
    "DegenerateWindowError",
    "FieldExtractor",
    "LexicalGraph",
    "MacroEdge",
    "MacroMap",
    "MacroMapper",
    "MacroNode",
    "ParadigmaticField",
    "ParseError",
    "ProximityParams",
    "ProximityValue",
    "TermFieldProfile",
    "TimeWindow",
    "UndefinedActivityError",
    "UndefinedTermError",
    "UnknownTermError",
    "ValidationError",
    "WindowRangeError",
    "activity_color",
    "build_field",
    "build_lexical_graph",
    "build_macro_map",
    "dual_params",
    "field_activity",
    "genericity_index",
    "ingest",
    "ingest_csv",
    "k_clique_communities",
    "load_store",
    "maximal_cliques",
    "neighborhood",
    "normalize_label",
    "normalized_share",
    "pair_value",
    "proximity",
    "proximity_row",
    "save_store",
    "specificity_index",
    "term_growth",
    "total_occurrences",
    "window_counts",
]
