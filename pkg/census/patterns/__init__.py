from census.patterns.counting import (
    count_embeddings,
    count_path_pattern,
    count_pattern,
    count_pattern_rooted,
    count_star_pattern,
    degree_two_runs,
    pattern_count,
)
from census.patterns.oracle import connected_subsets, count_pattern_oracle
from census.patterns.pattern import (
    NAMED_PATTERNS,
    Pattern,
    PatternCount,
    chair_pattern,
    make_pattern,
    named_pattern,
    path_pattern,
    star_pattern,
)
