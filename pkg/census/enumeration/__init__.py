from census.enumeration.free import (
    enumerate_free,
    enumerate_free_by_filter,
    iter_free,
    iter_free_level_sequences,
)
from census.enumeration.level_sequences import (
    LevelSequence,
    iter_level_sequences,
    level_sequence_to_rooted,
    next_level_sequence,
)
from census.enumeration.rooted import DEFAULT_MAX_ORDER, check_order, enumerate_rooted, iter_rooted
