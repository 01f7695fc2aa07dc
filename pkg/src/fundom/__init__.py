"""Symmetry-breaking polyhedral cones for finite permutation groups.

Constructions (Dirichlet domains, the coset-table cone and its transitive
reduction, recursive generalized Dirichlet domains), exact rational
geometry with Farkas redundancy certificates, lexicographic-order
machinery, and brute-force audits of the tiling axioms and worst-case
orbit representation.
"""

from .audit import (EffectivenessReport, FDReport, effectiveness,
                    facet_elements_generate, fix_orthogonality_check,
                    min_generating_size, verify_fundamental_domain)
from .cones import (Classification, ConeSystem, DirichletIneq, Round,
                    fix_space_basis, implies, irredundant_core, make_ineq,
                    mutually_imply)
from .constructions import (CanonicalBasis, Explicit, KUniversal,
                            PerOrbitWeights, dirichlet_domain, gdd,
                            k_universal_vector, ssp, ssp_reduced,
                            transitive_reduction)
from .errors import (CapExceeded, DimensionMismatch, FundomError, InputError,
                     NontrivialStabilizer, StrategyExhausted)
from .groups import (DEFAULT_ENUM_CAP, PermGroup, SchreierSimsTable,
                     StabilizerChain, VectorOrbit, build_stabilizer_chain,
                     group_order, orbits_on_indices, vector_orbit)
from .lexmax import (TieBreakerResult, in_closure_lex, in_lex, is_lex_closed,
                     lex_compare, lex_max_in_orbit, min_positive_gap,
                     tie_breaker)
from .perms import Perm, act_on_vector, compose
from .ratvec import RatVec, basis_vector, from_ints, zeros

__version__ = "0.1.0"

__all__ = [
    "CanonicalBasis", "CapExceeded", "Classification", "ConeSystem",
    "DEFAULT_ENUM_CAP", "DimensionMismatch", "DirichletIneq",
    "EffectivenessReport", "Explicit", "FDReport", "FundomError",
    "InputError", "KUniversal", "NontrivialStabilizer", "Perm", "PermGroup",
    "PerOrbitWeights", "RatVec", "Round", "SchreierSimsTable",
    "StabilizerChain", "StrategyExhausted", "TieBreakerResult", "VectorOrbit",
    "act_on_vector", "basis_vector", "build_stabilizer_chain", "compose",
    "dirichlet_domain", "effectiveness", "facet_elements_generate",
    "fix_orthogonality_check", "fix_space_basis", "from_ints", "gdd",
    "group_order", "implies", "in_closure_lex", "in_lex", "irredundant_core",
    "is_lex_closed", "k_universal_vector", "lex_compare", "lex_max_in_orbit",
    "make_ineq", "min_generating_size", "min_positive_gap", "mutually_imply",
    "orbits_on_indices", "ssp", "ssp_reduced", "tie_breaker",
    "transitive_reduction", "vector_orbit", "verify_fundamental_domain",
    "zeros",
]
