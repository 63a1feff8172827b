"""Exact-arithmetic toolkit for even hyperbolic 3-elementary lattices, their
primitive embeddings in the K3 lattice, and the fixed-locus invariants of
order-3 non-symplectic automorphisms."""

from . import errors
from .catalog import build, parse_expr
from .classify import (
    AMBIENT_RANK,
    ClassificationKey,
    EmbeddingPair,
    PairReport,
    classification_keys,
    complement_exists,
    enumerate_table1,
    index_determinant_identity,
    rs_exists,
    table1_rows,
    verify_pair,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial
from .fixed_locus import (
    GENERIC,
    MINUS_ZETA,
    NONEXISTENT,
    SPECIAL_THREE_POINTS,
    ZETA,
    Eisenstein,
    FixedLocus,
    enumerate_table2,
    euler_fiber_sum,
    fiber_counts,
    fixed_locus_from_invariants,
    fixed_locus_of,
    holomorphic_lefschetz,
    hurwitz_genus,
    kodaira_euler,
    point_count,
    table2_rows,
    topological_check,
)
from .isometry import (
    DiscriminantAction,
    Isometry,
    discriminant_action,
    enumerate_isometries,
    has_order3_trivial_on_A,
    is_isometry,
    matrix_from_dict,
    order3_isometry_u3_u,
    order3_isometry_u_u,
    order_of,
    short_vectors,
)
from .lattice import (
    DiscriminantGroup,
    FiniteQuadraticForm,
    Lattice,
    det,
    direct_sum,
    discriminant_form,
    discriminant_group,
    forms_match_opposite,
    is_even,
    is_p_elementary,
    lattice_from_dict,
    milgram_holds,
    rescale,
)
from .linalg import (
    Matrix,
    determinant,
    pair_value,
    rational_inverse,
    signature,
    smith_normal_form,
)

__all__ = [
    "AMBIENT_RANK",
    "ClassificationKey",
    "Cyclotomic",
    "DiscriminantAction",
    "DiscriminantGroup",
    "Eisenstein",
    "EmbeddingPair",
    "FiniteQuadraticForm",
    "FixedLocus",
    "GENERIC",
    "Isometry",
    "Lattice",
    "MINUS_ZETA",
    "Matrix",
    "NONEXISTENT",
    "PairReport",
    "SPECIAL_THREE_POINTS",
    "ZETA",
    "build",
    "classification_keys",
    "complement_exists",
    "cyclotomic_polynomial",
    "det",
    "determinant",
    "direct_sum",
    "discriminant_action",
    "discriminant_form",
    "discriminant_group",
    "enumerate_isometries",
    "enumerate_table1",
    "enumerate_table2",
    "errors",
    "euler_fiber_sum",
    "fiber_counts",
    "fixed_locus_from_invariants",
    "fixed_locus_of",
    "forms_match_opposite",
    "has_order3_trivial_on_A",
    "holomorphic_lefschetz",
    "hurwitz_genus",
    "index_determinant_identity",
    "is_even",
    "is_isometry",
    "is_p_elementary",
    "kodaira_euler",
    "lattice_from_dict",
    "matrix_from_dict",
    "milgram_holds",
    "order3_isometry_u3_u",
    "order3_isometry_u_u",
    "order_of",
    "pair_value",
    "parse_expr",
    "point_count",
    "rational_inverse",
    "rescale",
    "rs_exists",
    "short_vectors",
    "signature",
    "smith_normal_form",
    "table1_rows",
    "table2_rows",
    "topological_check",
    "verify_pair",
]
