"""Invariant features of multidimensional paths from their iterated-integral signature."""

from .build import descriptor_from_dict, from_generator, matches_generator
from .descriptors import InvariantDescriptor, VerificationReport
from .free_algebra import (
    AlphabetError,
    Polynomial,
    TensorSeries,
    apply_matrix,
    concat_product,
    format_polynomial,
    insert_after,
    insert_z,
    pair,
    parse_compact,
    parse_polynomial,
    remove_zero,
    shuffle_product,
)
from .geometry import (
    check_moment_invariant_span,
    check_pfaffian,
    check_recursion,
    closing_invariance,
    integral_moment,
    inv_d,
    lag_one_correlation_identity,
    lemniscate_path,
    signed_volume,
    signed_volume_determinant_sum,
    triangulation_indices,
)
from .gl import gl_basis, verify_gl_invariance
from .perm import enumerate_partitions, nabla, perm_basis, verify_perm_invariance
from .signature import chen_concat, segment_signature, signature, time_augment_path, transform_path
from .so import enumerate_index_families, so2_basis, so_basis, so_basis_general, verify_so_invariance
from .tableaux import RectTableau, enumerate_standard
from .time_augment import augmented_basis, enumerate_compositions, verify_augmented_invariance, verify_gl0_invariance

__version__ = "0.1.0"
