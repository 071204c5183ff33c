"""Exact construction, verification and classification of smash products of
Taft algebras with metacyclic group algebras, over cyclotomic fields."""

from .errors import InvalidInput, MalformedInput, ScaleGuardExceeded
from .cyclofield import (CyclotomicField, CycScalar, RootOfUnity, make_field,
                         cyclotomic_polynomial, ambient_order, order_of)
from .hopf import (FinHopf, HopfElement, AxiomReport, verify_hopf,
                   group_likes, is_group_like, skew_primitives,
                   is_hopf_morphism, is_isomorphism, compose_morphisms,
                   identity_morphism, apply_morphism, morphism_matrix,
                   finhopf_to_json, finhopf_from_json, structure_equal)
from .builders import (TaftSpec, MetacyclicSpec, SmashSpec, MatchedPairData,
                       build_taft, build_group_algebra, build_matched_pair,
                       build_bicrossed, build_smash_presentation,
                       build_smash_via_actions, trivial_right_action,
                       verify_matched_pair, taft_index, group_index,
                       smash_index)
from .pairsearch import (SearchContext, ActionCandidate, GeneratorAction,
                         CensusResult, enumerate_candidates, check_candidate,
                         survivors, run_census, DEFAULT_MAX_CANDIDATES)
from .classify import (IsoWitness, ClassificationResult, are_isomorphic,
                       witness_satisfies, build_witness_map,
                       build_inverse_witness, dihedral_smash_spec,
                       parameter_pairs, predicted_class_count, classify,
                       oracle_isomorphic)

__all__ = [name for name in dir() if not name.startswith("_")]
