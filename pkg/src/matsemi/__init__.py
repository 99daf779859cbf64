"""Exact diagonal-similarity analysis of matrices and matrix semigroups.

The package decides, in exact Gaussian-rational arithmetic and with
explicit witnesses, whether matrices and finitely generated matrix
semigroups are diagonally similar to nonnegative matrices, and checks
the structural facts that make such similarities possible: pattern
decomposability, invariant polyhedral cones, projective semigroup
closures, and algebra irreducibility.
"""

from .cones import (Cone, PropernessReport, Ray, canonical_ray, contains,
                    dual, extreme_rays, is_invariant, properness)
from .diagsim import (DiagonalWitness, SignDiagonal, conjugate,
                      diag_sim_nonneg, simultaneous_diag_sim)
from .exact import (EntryClassification, Matrix, Scalar, classify_entries,
                    inverse, matrix_product, matrix_vector, rank,
                    rank_one_factor)
from .harness import (FixtureSummary, SubsetReport, TheoremReport,
                      plant_group_instance, plant_semigroup_instance,
                      run_fixtures, sign_search_oracle,
                      subset_invariance_oracle, verify_group_theorem,
                      verify_semigroup_theorem)
from .semigroup import (Caps, GroupInfo, ProjectiveElement, SemigroupClosure,
                        XYFactorization, algebra_dimension, generate_closure,
                        group_info, is_irreducible, projective_canonical,
                        rank_one_ideal, xy_decomposition)
from .spectral import NonConvergenceError, SpectralResult, is_primitive, perron
from .structure import (DecompositionKind, DecompositionReport,
                        PatternDigraph, classify_decomposability,
                        pattern_digraph, scc_condensation, union_pattern)

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "Cone",
    "DecompositionKind",
    "DecompositionReport",
    "DiagonalWitness",
    "EntryClassification",
    "FixtureSummary",
    "GroupInfo",
    "Matrix",
    "NonConvergenceError",
    "PatternDigraph",
    "ProjectiveElement",
    "PropernessReport",
    "Ray",
    "Scalar",
    "SemigroupClosure",
    "SignDiagonal",
    "SpectralResult",
    "SubsetReport",
    "TheoremReport",
    "XYFactorization",
    "algebra_dimension",
    "canonical_ray",
    "classify_decomposability",
    "classify_entries",
    "conjugate",
    "contains",
    "diag_sim_nonneg",
    "dual",
    "extreme_rays",
    "generate_closure",
    "group_info",
    "inverse",
    "is_invariant",
    "is_irreducible",
    "is_primitive",
    "matrix_product",
    "matrix_vector",
    "pattern_digraph",
    "perron",
    "plant_group_instance",
    "plant_semigroup_instance",
    "projective_canonical",
    "properness",
    "rank",
    "rank_one_factor",
    "rank_one_ideal",
    "run_fixtures",
    "scc_condensation",
    "sign_search_oracle",
    "simultaneous_diag_sim",
    "subset_invariance_oracle",
    "union_pattern",
    "verify_group_theorem",
    "verify_semigroup_theorem",
    "xy_decomposition",
]
