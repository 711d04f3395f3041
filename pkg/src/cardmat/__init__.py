"""Exact tools for the cardinality constrained matroid polytope."""

from .cardinality import (CardinalitySequence, enumerate_feasible, greedy_fixed_cardinality,
                          optimize_chs)
from .errors import CardmatError
from .lp import InequalitySystem, cutting_plane_optimize, in_convex_hull, simplex_max
from .matroid import (Explicit, Free, Graphic, LinearGF2, Matroid, Partition, Restriction,
                      Truncation, Uniform, from_json)
from .polyhedra import (FacetVerdict, LinearInequality, affine_rank, build_fs, build_rank_ineq,
                        facet_oracle, fs_coefficients, fs_facet_verdict, polytope_dimension,
                        rank_facet_verdict, single_k_predicates)
from .separation import (MinMaxCertificate, SeparationOutcome, separate_fs, separate_point,
                         separate_rank_augpath, separate_rank_bruteforce)
from .verify import VerificationReport, probe_intersection_conjecture, verify_completeness

__all__ = [
    "CardinalitySequence",
    "CardmatError",
    "Explicit",
    "FacetVerdict",
    "Free",
    "Graphic",
    "InequalitySystem",
    "LinearGF2",
    "LinearInequality",
    "Matroid",
    "MinMaxCertificate",
    "Partition",
    "Restriction",
    "SeparationOutcome",
    "Truncation",
    "Uniform",
    "VerificationReport",
    "affine_rank",
    "build_fs",
    "build_rank_ineq",
    "cutting_plane_optimize",
    "enumerate_feasible",
    "facet_oracle",
    "from_json",
    "fs_coefficients",
    "fs_facet_verdict",
    "greedy_fixed_cardinality",
    "in_convex_hull",
    "optimize_chs",
    "polytope_dimension",
    "probe_intersection_conjecture",
    "rank_facet_verdict",
    "separate_fs",
    "separate_point",
    "separate_rank_augpath",
    "separate_rank_bruteforce",
    "simplex_max",
    "single_k_predicates",
    "verify_completeness",
]

__version__ = "0.1.0"
