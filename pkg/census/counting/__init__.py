from census.counting.distribution import DistributionTable, fixed_root_count, orbit_distribution
from census.counting.tables import (
    CountTable,
    count_table,
    free_counts,
    mean_orbits_exact,
    root_degree_counts,
    rooted_counts,
    rooted_counts_via_exp,
    symmetric_edge_count,
)
