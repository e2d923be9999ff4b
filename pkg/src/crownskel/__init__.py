"""Generalized crowns, layered stacks, critical pairs, strict
alternating cycles, and the adjacency matrices of their skeletons."""

from .poset import (
    CriticalPair,
    CycleError,
    Element,
    Poset,
    PosetError,
    transitive_closure,
)
from .crowns import (
    CritLayout,
    CrownParams,
    ParameterError,
    Regime,
    RegimeKind,
    beta_layer,
    build_crown,
    build_layered_crown,
    classify,
    crit_pairs_closed_form,
    extreme_subposet,
    layer_reach,
    layout,
    rep,
    row_set,
)
from .cycles import (
    BudgetExceededError,
    SkeletonGraph,
    enumerate_hyperedges,
    is_alternating_cycle,
    is_strict_alternating_cycle,
    skeleton,
    skeleton_edges,
)
from .matrix import (
    AdjMatrix,
    BenchReport,
    CycInterval,
    Label,
    LabelMismatchError,
    MatrixMismatchError,
    MODE_CORRECTED,
    MODE_LITERAL,
    MODES,
    adjacency_oracle,
    bench,
    canonical_labels,
    count_nonzero_block,
    hit_interval,
    layered_matrix,
    miss_interval,
    oracle_matrix,
    single_block,
    single_matrix,
    wide_block,
)
from .report import SweepResult, VerifyReport, sweep, sweep_tuples, verify
from .serialize import (
    export,
    export_matrix,
    export_poset,
    export_skeleton,
    parse_matrix_csv,
    parse_matrix_json,
)

__version__ = "0.1.0"
