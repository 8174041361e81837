"""Garside normal forms, reduced Burau matrices, and reservoir-bucket
searches for kernel elements of the Burau representation mod m.

Layering: permutations -> braid -> laurent/bandkernel -> burau -> search
-> cli.  The band kernel is a compiled extension when available and a
numpy fallback otherwise; bandkernel.backend_name() reports which.
"""

from .bandkernel import BandMatrix, backend_name
from .braid import (
    Braid,
    artin_letters,
    braid_from_json_dict,
    braid_to_json,
    braid_to_json_dict,
    garside_prefixes,
    garside_suffixes,
    gnf_from_artin,
    load_braid_file,
    parse_artin_text,
    trivial,
)
from .burau import (
    BurauContext,
    burau_of_braid,
    burau_of_letters,
    kernel_check,
    positive_kernel_candidate_check,
)
from .laurent import LaurentMatrix, LaurentPoly
from .search import (
    Bucket,
    BucketItem,
    SearchConfig,
    SearchReport,
    coefficient_patterns,
    discovery_probability,
    forced_run,
    mc_search,
    random_braid_walk,
    run_search,
    scatter_sample,
    search_step,
    trajectory,
)

__all__ = [
    "BandMatrix",
    "Braid",
    "Bucket",
    "BucketItem",
    "BurauContext",
    "LaurentMatrix",
    "LaurentPoly",
    "SearchConfig",
    "SearchReport",
    "artin_letters",
    "backend_name",
    "braid_from_json_dict",
    "braid_to_json",
    "braid_to_json_dict",
    "burau_of_braid",
    "burau_of_letters",
    "coefficient_patterns",
    "discovery_probability",
    "forced_run",
    "garside_prefixes",
    "garside_suffixes",
    "gnf_from_artin",
    "kernel_check",
    "load_braid_file",
    "mc_search",
    "parse_artin_text",
    "positive_kernel_candidate_check",
    "random_braid_walk",
    "run_search",
    "scatter_sample",
    "search_step",
    "trajectory",
    "trivial",
]
