"""Orbit categories, smash products, and machine checks of the duality
between group actions and group gradings on finite linear categories."""

from .exactlin import Mat, RingSpec
from .report import Check, ValidationFailed, VerificationReport
from .lincat import (
    LinCat,
    LinFunctor,
    Morphism,
    NatTrans,
    compose_functors,
    compose_morphisms,
    identity_functor,
    identity_nt,
    validate_category,
    validate_functor,
)
from .gcat import (
    EquivFunctor,
    EquivMorphism,
    FinGroup,
    GCategory,
    compose_equivariant,
    identity_equivariant,
    strict_equivariant,
    trivial_gcategory,
    validate_action,
    validate_equiv_morphism,
    validate_equivariant,
    validate_group,
)
from .graded import (
    DegFunctor,
    DegMorphism,
    GradedCat,
    compose_deg_functors,
    identity_deg_functor,
    strict_deg_functor,
    trivial_grading,
    validate_deg_functor,
    validate_deg_morphism,
    validate_grading,
)
from .covering import (
    InvFunctor,
    InvMorphism,
    f1_map,
    f2_map,
    invariant_with_trivial_adjuster,
    is_covering,
    is_precovering,
    validate_inv_morphism,
    validate_invariant,
)
from .orbit import (
    OrbitCat,
    check_covering_characterization,
    factorize_through_P,
    matrix_family_check,
    matrix_family_compose,
    matrix_form_hom,
    orbit2_iso,
    orbit_category,
    pstar,
    pstar_inv_on_2cell,
)
from .smash import SmashCat, q_factorization, smash_product, verify_free_action
from .duality import (
    TheoremFixtures,
    TheoremReport,
    epsilon,
    epsilon_prime,
    hash_on_2cell,
    hash_on_functor,
    omega,
    omega_prime,
    phi_square,
    psi_square,
    slash_on_2cell,
    slash_on_functor,
    theta_iso,
    verify_main_theorem,
    verify_triangles,
    xi_iso,
)
from .bundle import Bundle, BundleFormatError, dumps_bundle, loads_bundle, make_bundle

__version__ = "0.1.0"

__all__ = [
    "Mat",
    "RingSpec",
    "Check",
    "ValidationFailed",
    "VerificationReport",
    "LinCat",
    "LinFunctor",
    "Morphism",
    "NatTrans",
    "compose_functors",
    "compose_morphisms",
    "identity_functor",
    "identity_nt",
    "validate_category",
    "validate_functor",
    "EquivFunctor",
    "EquivMorphism",
    "FinGroup",
    "GCategory",
    "compose_equivariant",
    "identity_equivariant",
    "strict_equivariant",
    "trivial_gcategory",
    "validate_action",
    "validate_equiv_morphism",
    "validate_equivariant",
    "validate_group",
    "DegFunctor",
    "DegMorphism",
    "GradedCat",
    "compose_deg_functors",
    "identity_deg_functor",
    "strict_deg_functor",
    "trivial_grading",
    "validate_deg_functor",
    "validate_deg_morphism",
    "validate_grading",
    "InvFunctor",
    "InvMorphism",
    "f1_map",
    "f2_map",
    "invariant_with_trivial_adjuster",
    "is_covering",
    "is_precovering",
    "validate_inv_morphism",
    "validate_invariant",
    "OrbitCat",
    "check_covering_characterization",
    "factorize_through_P",
    "matrix_family_check",
    "matrix_family_compose",
    "matrix_form_hom",
    "orbit2_iso",
    "orbit_category",
    "pstar",
    "pstar_inv_on_2cell",
    "SmashCat",
    "q_factorization",
    "smash_product",
    "verify_free_action",
    "TheoremFixtures",
    "TheoremReport",
    "epsilon",
    "epsilon_prime",
    "hash_on_2cell",
    "hash_on_functor",
    "omega",
    "omega_prime",
    "phi_square",
    "psi_square",
    "slash_on_2cell",
    "slash_on_functor",
    "theta_iso",
    "verify_main_theorem",
    "verify_triangles",
    "xi_iso",
    "Bundle",
    "BundleFormatError",
    "dumps_bundle",
    "loads_bundle",
    "make_bundle",
]
