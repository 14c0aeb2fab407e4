"""Koszul and Čech computations on monomial modules, the WPR tester and instance checks."""

from .cech import (CechPiece, CohomologyTable, cech_cohomology, cech_cohomology_localized, cech_dim_localized,
                   cech_piece, cech_slice, saturation_floor, stabilization_tripwire)
from .checks import (InstanceReport, base_independence_check, comparison_sequence_check, flat_base_change_check,
                     gamma0_isomorphism_check, idempotent_vanishing_check, lemma_2_110_witness_check,
                     lemma_functional, random_monomial_module, torsion_acyclicity_check)
from .koszul import (GradedComplexSlice, InducedMap, KoszulComplexSpec, KoszulTransitionMap, direct_transition,
                     induced_map, inverse_transition, koszul_cohomology, koszul_coslice, koszul_homology,
                     koszul_inverse_system, koszul_slice, sequence_degree)
from .wpr import NotProZeroUpTo, ProZeroCertified, Unknown, principal_fast_path, wpr_test

__all__ = [
    "CechPiece", "CohomologyTable", "GradedComplexSlice", "InducedMap", "InstanceReport", "KoszulComplexSpec",
    "KoszulTransitionMap", "NotProZeroUpTo", "ProZeroCertified", "Unknown", "base_independence_check",
    "cech_cohomology", "cech_cohomology_localized", "cech_dim_localized", "cech_piece", "cech_slice",
    "comparison_sequence_check", "direct_transition", "flat_base_change_check", "gamma0_isomorphism_check",
    "idempotent_vanishing_check", "induced_map", "inverse_transition", "koszul_cohomology", "koszul_coslice",
    "koszul_homology", "koszul_inverse_system", "koszul_slice", "lemma_2_110_witness_check", "lemma_functional",
    "principal_fast_path", "random_monomial_module", "saturation_floor", "sequence_degree",
    "stabilization_tripwire", "torsion_acyclicity_check", "wpr_test",
]
