from .distances import (
    geodesic_distance,
    hamming,
    hamming_profiles,
    hamming_set_profile,
    profile_distance_table,
)

__all__ = [
    "geodesic_distance",
    "hamming",
    "hamming_profiles",
    "hamming_set_profile",
    "profile_distance_table",
]
