"""Exact computer algebra for graded trinomial quotient rings.

The library computes with presentations

    k[t_ij] / ( T_0^beta_0 + lambda_i T_1^beta_1 + T_i^beta_i )_{2<=i<=r}

over the rationals: validation and numeric invariants of the defining
data, the induced torus grading, exact quotient-ring arithmetic by
monomial rewriting, canonical forms and isomorphism testing in dimension
two, a presentation normal form in dimension three, signature sequences,
and a toolkit for finitely generated submonoids of Z^n.  All arithmetic
is exact; no floating point anywhere.
"""

from .errors import (
    InvalidTarget,
    NotDimensionThree,
    NotHomogeneous,
    NotPointed,
    NotReduced,
    NotRepresentable,
    NotUnitPartition,
    NotUnmixed,
    TrinomError,
    ValidationError,
    Violation,
    VariableCountMismatch,
)
from .lattice import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel_basis,
    rational_feasible,
    smith_normal_form,
)
from .monoid import (
    GroupOrder,
    MonoidSpec,
    NullRelation,
    PositiveFunctional,
    build_order,
    is_unmixed,
    maximal_subgroup,
    positive_basis,
    unit_generators,
)
from .poly import Monomial, Polynomial
from .trinomial import (
    ClassifiedRing,
    FormalRadical,
    SubstitutionWitness,
    TrinomialData,
    dim3_normal_form,
    dimension,
    is_isomorphic_dim2,
    is_reduced,
    is_smooth,
    is_valid,
    jacobian_rank_at_origin,
    mori_normal_form,
    mori_normal_form_casewise,
    permute_blocks,
    reduce,
    replay_witness,
    tangent_dimension,
    validate,
    verify_witness,
    witness_script,
)
from .grading import (
    GradingMatrix,
    check_B0_trivial,
    check_effective,
    check_unmixed_grading,
    effectiveness_witness,
    induced_grading,
    weight_order,
)
from .ring import (
    FiniteTypeReport,
    RewriteSystem,
    check_finite_type,
    enumerate_graded_piece,
    homogeneous_degree,
    normal_form,
    ring_arithmetic,
    subalgebra_membership,
)
from .signature import (
    SignatureSequence,
    canonical_generator_order,
    greedy_signature_sequence,
    verify_signature_criteria,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
