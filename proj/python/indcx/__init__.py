"""Independence complexes of grid graphs and hard particles at activity -1."""

from ._indcx import (  # noqa: F401
    BudgetExceeded,
    Graph,
    alternating_sum,
    build,
    class_sums,
    count_independent_sets,
    fix_boundary,
    g_fit,
    g_series,
    homology,
    homology_entry,
    induced_delete,
    morse_tree,
    partition_function,
    pattern_sum,
    q2_sum,
    spectra_match,
    transfer_charpoly,
    z_cylinder,
    z_hex_cylinder,
    z_hex_torus,
    z_rect,
)
