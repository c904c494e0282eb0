"""Exact combinatorics and integral homology of polyhedral product complexes.

The package keeps the void complex and the empty-face complex rigorously
distinct, computes reduced (co)homology over Z and over fields by Smith
normal form, tabulates bigraded slice homology, and mechanically verifies
the structural duality identities relating complexes, their Alexander
duals, compositions and sphere-pair product spaces.
"""

from .abelian import (
    FgAbelianGroup,
    GradedGroup,
    Z_GROUP,
    ZERO_GRADED,
    ZERO_GROUP,
    graded_tensor,
    tensor_additive,
)
from .complexes import (
    SimplicialComplex,
    composition_complex,
    consecutive_blocks,
    embed_on_blocks,
    enumerate_complexes,
    ghost_factorization,
    join,
    make_complex,
    mask_of,
    polyhedral_complex,
    random_complex,
    random_subcomplex,
    submasks,
    vertices_of,
)
from .documents import ComplexDocument, document_of, parse_document
from .hochster import (
    BigradedTable,
    DualityCheckError,
    DualityWitness,
    PieceReport,
    PieceVerdict,
    alexander_duality_witness,
    composition_homology,
    duality_group_sides,
    hochster_composition_formula,
    hochster_table,
    index_pairs,
)
from .homology import (
    GF,
    RATIONALS,
    FieldCoeff,
    UnsupportedSplitCheck,
    certify_homology_split,
    chain_complex,
    euler_characteristic_reduced,
    homology_consistency_failures,
    homology_of_faces,
    induced_inclusion_map,
    reduced_cohomology,
    reduced_homology,
    relative_homology,
    smith_normal_form,
)
from .spaces import (
    FiniteSpacePair,
    LedgerEntry,
    SpaceHomologyReport,
    SpherePairSystem,
    Verdict,
    complement_identity_check,
    factorization_identity_check,
    finite_product,
    sphere_pair_duality_check,
    sphere_pair_homology,
    substitution_identity_check,
)
from .verify import (
    SUITES,
    SuiteResult,
    Trial,
    cone_over_rp2,
    cycle_complex,
    minimize_complex,
    rp2_complex,
    run_suite,
    self_dual_complex,
)

__version__ = "0.1.0"

__all__ = [
    "BigradedTable",
    "ComplexDocument",
    "DualityCheckError",
    "DualityWitness",
    "FgAbelianGroup",
    "FieldCoeff",
    "FiniteSpacePair",
    "GF",
    "GradedGroup",
    "LedgerEntry",
    "PieceReport",
    "PieceVerdict",
    "RATIONALS",
    "SUITES",
    "SimplicialComplex",
    "SpaceHomologyReport",
    "SpherePairSystem",
    "SuiteResult",
    "Trial",
    "UnsupportedSplitCheck",
    "Verdict",
    "Z_GROUP",
    "ZERO_GRADED",
    "ZERO_GROUP",
    "alexander_duality_witness",
    "certify_homology_split",
    "chain_complex",
    "complement_identity_check",
    "composition_complex",
    "composition_homology",
    "cone_over_rp2",
    "consecutive_blocks",
    "cycle_complex",
    "document_of",
    "duality_group_sides",
    "embed_on_blocks",
    "enumerate_complexes",
    "euler_characteristic_reduced",
    "factorization_identity_check",
    "finite_product",
    "ghost_factorization",
    "graded_tensor",
    "hochster_composition_formula",
    "hochster_table",
    "homology_consistency_failures",
    "homology_of_faces",
    "index_pairs",
    "induced_inclusion_map",
    "join",
    "make_complex",
    "mask_of",
    "minimize_complex",
    "parse_document",
    "polyhedral_complex",
    "random_complex",
    "random_subcomplex",
    "reduced_cohomology",
    "reduced_homology",
    "relative_homology",
    "rp2_complex",
    "run_suite",
    "self_dual_complex",
    "smith_normal_form",
    "submasks",
    "tensor_additive",
    "vertices_of",
]
