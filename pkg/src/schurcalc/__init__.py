"""Exact linear algebra of symmetric group and torus-graded decompositions.

Everything is computed over the rationals with integer or Fraction
arithmetic; there is no floating point anywhere in the package.
"""

from .errors import BoundExceededError, InvariantError, WindowExceededError
from .glchar import (
    DominantWeight,
    GLChar,
    exterior_power,
    gl_tensor,
    hom_dim,
    lr_coeff,
    lr_expand,
    normalize_weight,
    product_group_tensor,
    schur_weyl,
    symmetric_power,
    weight_of,
)
from .koszul import (
    FinitenessCertificate,
    GradedObject,
    certify_finiteness,
    euler_falling_factorial,
    graded_power_image,
    kimura_split,
    sym,
    wedge,
)
from .partitions import (
    Partition,
    StandardTableau,
    all_partitions,
    canonical_tableau,
    dim_gl_irrep,
    dim_sym_irrep,
    standard_tableaux,
)
from .serre import (
    BigradedVS,
    CechCohomology,
    SerreAlgebra,
    build_serre_algebra,
    cech_cohomology,
    gm_shift_functor,
    verify_serre_duality,
)
from .symgroup import (
    GroupAlgebraElement,
    Permutation,
    SymChar,
    alt_projector,
    char_inner_product,
    char_irrep,
    character_table,
    decompose_module,
    induction_multiplicity,
    sym_projector,
    young_symmetrizer,
)
from .symseq import SymSeq, free_generator, localize, tensor, wedge_component

__version__ = "0.1.0"

__all__ = [
    "BigradedVS",
    "BoundExceededError",
    "CechCohomology",
    "DominantWeight",
    "FinitenessCertificate",
    "GLChar",
    "GradedObject",
    "GroupAlgebraElement",
    "InvariantError",
    "Partition",
    "Permutation",
    "SerreAlgebra",
    "StandardTableau",
    "SymChar",
    "SymSeq",
    "WindowExceededError",
    "all_partitions",
    "alt_projector",
    "build_serre_algebra",
    "canonical_tableau",
    "cech_cohomology",
    "certify_finiteness",
    "char_inner_product",
    "char_irrep",
    "character_table",
    "decompose_module",
    "dim_gl_irrep",
    "dim_sym_irrep",
    "euler_falling_factorial",
    "exterior_power",
    "free_generator",
    "gl_tensor",
    "gm_shift_functor",
    "graded_power_image",
    "hom_dim",
    "induction_multiplicity",
    "kimura_split",
    "localize",
    "lr_coeff",
    "lr_expand",
    "normalize_weight",
    "product_group_tensor",
    "schur_weyl",
    "standard_tableaux",
    "sym",
    "sym_projector",
    "symmetric_power",
    "tensor",
    "verify_serre_duality",
    "wedge",
    "wedge_component",
    "weight_of",
    "young_symmetrizer",
]
