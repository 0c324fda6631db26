"""Exact enumeration of glued (vincular) patterns over permutation cycle words.

The package connects four views of the same counting problem:

* permutations and their anchored cycle words (``perms``),
* arc diagrams and bicoloured Motzkin path encodings (``paths``),
* exact polynomial series and closed forms (``series``),
* whole-group censuses and equidistribution classes (``census``).

``verify`` bundles the cross-checks between all of them and ``cli`` exposes
the command-line entry point.
"""

from .census import (
    DEFAULT_MAX_N,
    DIAGONAL_PATTERNS,
    EnumerationLimitError,
    EquivalenceGroup,
    check_anchor_identities,
    check_conjectured_equivalences,
    check_diagonal_collapse,
    check_dmap_transport,
    check_exchange_identities,
    class_count_progression,
    conjectured_equivalences,
    distribution,
    enumeration_cap,
    partition_classes,
    partition_vincular_patterns,
    vincular_distribution,
)
from .kernels import (
    available_backends,
    backend_name,
    pair_census,
    single_census,
    vincular_census,
    weight_identity_failures,
)
from .perms import (
    CONVENTIONS,
    CyclicCount,
    MarkedPermutation,
    Pattern,
    PATTERN_NAMES,
    PATTERNS,
    complement_pattern,
    complement_reverse,
    count_cyclic,
    count_pair,
    count_vincular,
    enumerate_marked,
    enumerate_permutations,
    exchange_blocks,
    flatten,
    parse_pattern,
    parse_permutation,
    reduce_word,
    reverse_pattern,
    to_cycle_form,
    unflatten,
)
from .paths import (
    ArcDiagram,
    NoPreimageError,
    arc_diagram,
    class_weight,
    contract_path,
    enumerate_motzkin_paths,
    expand_path,
    node_weights,
    path_preimage,
    path_weight,
    step_weights,
    to_motzkin_path,
    weight_product,
)
from .series import (
    CfTruncation,
    MultiPoly,
    WEIGHTS1,
    WEIGHTS2,
    WEIGHTS_MARKED,
    WeightScheme,
    binom,
    bracket,
    catalan_number,
    catalan_series,
    coeff_closed,
    expand_f,
    marked_identity_check,
    motzkin_transfer,
    pattern_truncation,
    q_slice_closed,
    stirling_unsigned,
    truncated_cf,
)
from .verify import (
    CheckResult,
    SUITES,
    format_report,
    run_all,
    run_suite,
)

__version__ = "0.1.0"
