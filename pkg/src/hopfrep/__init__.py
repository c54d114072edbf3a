"""Finite-dimensional Hopf algebras over finite fields: exact construction,
representation chopping, and certification of dimension laws."""

from .errors import (
    AlgebraError,
    ChopBudgetError,
    FieldError,
    GroupError,
    HopfError,
    HopfRepError,
    RecipeError,
    ValidationReport,
)
from .gf import FieldSpec, FiniteField, field_create, subfield_embedding
from .rng import SeededRng
from .poly import Poly, factor as factor_poly, roots as poly_roots
from .linalg import DenseMatrix, char_min_poly, charpoly, minpoly
from .algebra import (
    AlgebraData,
    IdealBasis,
    ModuleRep,
    annihilator,
    check_algebra_axioms,
    check_module_axioms,
    ideal_product,
    ideal_sum,
    ideal_sum_and_product,
    intersect_ideal_with_subalgebra,
    quotient_algebra,
    regular_module,
    subalgebra_from_basis,
)
from .hopf import (
    AlgebraMorphism,
    Character,
    HopfData,
    HopfSubalgebra,
    SolvableSeries,
    as_hopf_subalgebra,
    character_convolution,
    characters,
    check_hopf_axioms,
    commutative_mod_ideal,
    convolution_inverse,
    extended_augmentation_ideal,
    is_normal,
    quotient_hopf,
    trivial_module,
    twist_module,
    winding_automorphism,
)
from .meataxe import (
    CompositionSeries,
    IrreducibilityWitness,
    chop,
    endomorphism_dim,
    is_irreducible,
    module_isomorphism,
    radical,
    replay_witness,
    simple_dimensions,
    spin,
    splitting_tower,
)
from .groups import GroupTable, builtin_group, commutator_subgroup, group_from_table, subgroup_table
from .constructors import (
    ActionData,
    MatchedPair,
    bicrossproduct,
    conjugate_module,
    derived_series_chain,
    dual_group_algebra,
    dual_hopf,
    extend_scalars_hopf,
    group_algebra,
    induced_module,
    matched_pair_from_factorization,
    restrict_module,
    smash_algebra,
    translation_action,
)

__version__ = "0.1.0"
