from census.trees.automorphisms import aut_size_free, aut_size_rooted
from census.trees.canonical import (
    CanonicalCode,
    canonical_free_code,
    canonical_rooted_code,
    centroids,
    is_centroid_rooting,
    split_halves,
)
from census.trees.oracle import brute_force_aut_count, brute_force_orbits, iter_automorphisms
from census.trees.orbits import (
    OrbitPartition,
    distinct_rootings,
    fixed_set_connected,
    fixed_vertices,
    orbits_free,
    orbits_rooted,
    symmetric_edge,
)
from census.trees.text_format import (
    format_free_tree,
    format_rooted_tree,
    iter_free_trees,
    iter_rooted_trees,
    parse_free_tree,
    parse_rooted_tree,
)
from census.trees.types import FreeTree, RootedTree, path_tree, star_tree, tree_from_depths
