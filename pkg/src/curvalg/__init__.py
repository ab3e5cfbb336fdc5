"""Exact symmetric-group algebra toolkit for short curvature-derivative
tensor generator formulas.

The package builds the group rings K[S_3] and K[S_5] over an exact scalar
field, classifies the two-dimensional idempotent family, derives complete
linear identity systems for the associated tensor symmetry classes, and
reduces the symmetrized product polynomials to their shortest coordinate
form, reproducing a fixed set of reference tables and formula fixtures
bit-exactly.
"""

from .scalars import (
    Eisenstein,
    Polynomial,
    RationalFunction,
    eisenstein_sqrt,
    reduce_fraction,
    roots_up_to_quadratic,
)
from .perms import (
    YoungTableau,
    compose,
    enumerate_s3_ordered,
    hook_dimension,
    inverse,
    sign,
    standard_tableaux,
)
from .groupring import (
    GroupRingElement,
    catalog,
    embed_fix12,
    embed_fix45,
    rho_element,
    sigma_element,
    young_symmetrizer,
)
from .fourier import FourierBlocks, block_idempotent, dft, inverse_dft, rep_matrix
from .ideals import (
    IdealBasis,
    IdentitySet,
    coefficient_matrix,
    commutation_check,
    delta,
    derivative_relations,
    left_ideal_basis,
    linear_identities,
)
from .tensorpoly import (
    TensorPolynomial,
    apply_operator,
    numeric_evaluate,
    numerator_root_scan,
    orientation_relation,
    reduce_polynomial,
    substitute_nu,
    symmetrize_product,
)

__version__ = "0.1.0"

__all__ = [
    "Eisenstein",
    "Polynomial",
    "RationalFunction",
    "eisenstein_sqrt",
    "reduce_fraction",
    "roots_up_to_quadratic",
    "YoungTableau",
    "compose",
    "enumerate_s3_ordered",
    "hook_dimension",
    "inverse",
    "sign",
    "standard_tableaux",
    "GroupRingElement",
    "catalog",
    "embed_fix12",
    "embed_fix45",
    "rho_element",
    "sigma_element",
    "young_symmetrizer",
    "FourierBlocks",
    "block_idempotent",
    "dft",
    "inverse_dft",
    "rep_matrix",
    "IdealBasis",
    "IdentitySet",
    "coefficient_matrix",
    "commutation_check",
    "delta",
    "derivative_relations",
    "left_ideal_basis",
    "linear_identities",
    "TensorPolynomial",
    "apply_operator",
    "numeric_evaluate",
    "numerator_root_scan",
    "orientation_relation",
    "reduce_polynomial",
    "substitute_nu",
    "symmetrize_product",
    "__version__",
]
