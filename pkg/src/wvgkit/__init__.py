"""Exact analysis of weighted voting games.

Power indices (Banzhaf, normalized and probabilistic, and Shapley-Shubik)
in exact rational arithmetic, by brute-force enumeration or by
pseudo-polynomial counting tables, plus the false-name manipulation
toolbox: splitting (with optimal-split search), merging, annexation,
bound checks, paradox scanning and instance generators.
"""

from .backend import available_backends, default_backend_name
from .counting import (
    DEFAULT_ENUM_LIMIT,
    ENUM_LIMIT_ENV,
    enumeration_limit,
    eta_dp,
    eta_enum,
)
from .errors import (
    EmptyPlayerList,
    GameError,
    InvalidPlayerId,
    NegativeWeight,
    ParameterOutOfRange,
    ParseError,
    PartsDoNotSumToWeight,
    QuotaExceedsTotalWeight,
    SingletonOrEmptyMerge,
    TooManyPlayersForEnumeration,
    WeightTooSmallToSplit,
    ZeroOrNegativeQuota,
    ZeroPart,
)
from .game import (
    WeightedVotingGame,
    canonicalize,
    critical_players,
    is_dictator,
    is_proper,
    is_unanimity,
    is_winning,
    new_game,
    validate_coalition,
)
from .indices import (
    BanzhafResult,
    CriticalityCounts,
    IndexKind,
    PowerIndexVector,
    ShapleyRawCounts,
    ShapleyResult,
    compute_banzhaf,
    compute_shapley,
    is_dummy,
    power_index,
)
from .instances import (
    PartitionInstance,
    ReductionOutput,
    dictator_family,
    partition_reduction,
    random_game,
    tight_split_family,
    unanimity_game,
)
from .manipulation import (
    AnnexAction,
    ManipulationReport,
    MergeAction,
    SplitAction,
    annexation_advisor,
    best_split,
    enumerate_partitions,
    evaluate_annexation,
    evaluate_merge,
    evaluate_split,
    merge_game,
    scan_annexation_nonmonotonicity,
    split_game,
    unanimity_payoffs,
)
from .textio import (
    GameDocument,
    decimal_string,
    format_fraction,
    game_to_document,
    game_to_text,
    parse_document,
    parse_game,
    render_index_table,
    render_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
