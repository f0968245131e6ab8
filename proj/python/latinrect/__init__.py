"""Exact counts of Latin rectangles by generalized Ryser inclusion-exclusion."""

from ._latinrect import (
    G,
    ResourceGuardError,
    bell_number,
    brute_force_count,
    derangements_classical,
    derangements_ryser,
    expression,
    g,
    lonely_hall_count,
    mobius_coefficient,
    partitions_of,
    reduced_count,
    total_count,
    total_count_direct,
)

__all__ = [
    "G",
    "ResourceGuardError",
    "bell_number",
    "brute_force_count",
    "derangements_classical",
    "derangements_ryser",
    "expression",
    "g",
    "lonely_hall_count",
    "mobius_coefficient",
    "partitions_of",
    "reduced_count",
    "total_count",
    "total_count_direct",
]
