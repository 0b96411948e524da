"""Perrin cordial labelings: generators, constructors, verifier, oracle, claims sweep."""

from .claims import (
    Claim,
    ClaimCheckRow,
    builtin_claims,
    claim_for,
    default_grid,
    rows_to_csv,
    rows_to_markdown,
    sweep,
    sweep_all,
)
from .construct import (
    CONSTRUCTORS,
    Constructed,
    Infeasible,
    SchemeExhaustedError,
    SchemeParams,
    construct,
    construct_bistar,
    construct_complete,
    construct_complete_bipartite,
    construct_cycle,
    construct_friendship,
    construct_jellyfish,
    construct_path,
    construct_star,
    construct_triangular_snake,
    construct_wheel,
)
from .graph_io import (
    FormatError,
    export_dot,
    read_graph,
    read_labeling,
    write_graph,
    write_labeling,
)
from .graphs import (
    FAMILY_NAMES,
    FamilyParameterError,
    FamilySpec,
    Graph,
    UnknownVertexError,
    generate,
    induced_subgraph,
    is_connected,
)
from .labeling import (
    EdgeTally,
    InvalidLabelingError,
    LabelSupplyError,
    ParityPattern,
    PatternLengthError,
    PerrinLabeling,
    feasible_even_counts,
    induced_edge_label,
    is_cordial,
    is_valid,
    pattern_even_count,
    realize,
    tally,
    to_parity,
)
from .oracle import (
    GraphTooLargeError,
    SearchConfig,
    Verdict,
    decide_bipartite,
    decide_bistar_full,
    decide_exhaustive,
)
from .perrin import (
    Parity,
    PerrinSequence,
    even_count,
    even_count_scan,
    even_indices,
    odd_indices,
    perrin_parity,
    perrin_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
