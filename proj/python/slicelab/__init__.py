"""Exact tools for polynomials on Boolean slices."""

from slicelab._core import (
    cli,
    deg1_scan,
    edge_weight,
    eigenvalue,
    extremal_min_fraction,
    find_good_shift,
    gamma_map,
    influence,
    is_good_slice,
    junta_support,
    lucas_binom_mod_p,
    matching_stats,
    nonvanish_fraction,
    spectrum,
    suboptimal_bound,
)

__all__ = [
    "cli",
    "deg1_scan",
    "edge_weight",
    "eigenvalue",
    "extremal_min_fraction",
    "find_good_shift",
    "gamma_map",
    "influence",
    "is_good_slice",
    "junta_support",
    "lucas_binom_mod_p",
    "matching_stats",
    "nonvanish_fraction",
    "spectrum",
    "suboptimal_bound",
]
