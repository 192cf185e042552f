"""Total mutual-visibility sets in Hamming graphs."""

from hamvis.conflict import SolveCertificate, SolveOptions, brute_force_mut, build_conflict_graph, mut_exact
from hamvis.hamming import HammingShape, hamming_distance
from hamvis.visibility import is_tmv_hamming, is_total_mv_set

__all__ = [
    "HammingShape",
    "SolveCertificate",
    "SolveOptions",
    "brute_force_mut",
    "build_conflict_graph",
    "hamming_distance",
    "is_tmv_hamming",
    "is_total_mv_set",
    "mut_exact",
]
