"""Finite gyrogroups given by Cayley tables."""

from .cosets import CosetPartition, coset_partition, left_coset
from .covers import (
    is_gyration_invariant,
    is_symmetric,
    kg_violation,
    set_inv,
    set_oplus,
    star_of_point,
    symmetric_subsets,
    translate_cover,
    translate_intersection_holds,
)
from .product import product_gyrogroup, product_subset, relabel
from .search import SearchResult, canonical_form, search_gyrogroups
from .subgroups import (
    Subgyrogroup,
    closure,
    enumerate_subgyrogroups,
    is_l_subgyrogroup,
    is_subgyrogroup,
)
from .table import (
    CayleyTable,
    FiniteModel,
    as_mask,
    cyclic,
    format_gyro,
    full_mask,
    klein_four,
    mask_of,
    members,
    parse_gyro,
    read_gyro,
    symmetric3,
    trivial,
    write_gyro,
)
from .verify import GyrationMap, all_gyrations, gyr_table, is_gyrogroup, require_gyrogroup, verify_gyrogroup
