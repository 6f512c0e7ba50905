"""Structure and isomorphism tools for finite rings given by presentations.

Rings enter as additive groups Z_{d_1} x ... x Z_{d_k} with a structure
constant tensor.  On top of that sit idempotent calculus (semicentral tests,
complete left-triangulating sets), Peirce decompositions, and a synthesis /
decomposition correspondence between ring isomorphisms and per-level corner
data, which also drives isomorphism search and automorphism groups.
"""

from .automorphisms import AutomorphismGroup, aut_group, aut_order
from .corners import CornerRing, corner_ring, peirce_component
from .errors import (
    AmbientMismatch,
    CapExceeded,
    DomainError,
    InadmissiblePermutation,
    InconsistentQuadruple,
    InvalidSequence,
    LocationMismatch,
    NonAssociative,
    NotBijective,
    NotIdempotent,
    NotIsomorphism,
    NotSemicentral,
    NotSemicentralReduced,
    OrderViolation,
    PreconditionViolated,
    ShapeMismatch,
    StructureViolation,
    TooManyBlocks,
    ToolkitError,
    UnitFailure,
    ValidationError,
)
from .idempotents import enumerate_idempotents, is_semicentral, is_semicentral_reduced
from .jsonio import (
    check_ring_ref,
    decomposition_from_obj,
    decomposition_to_obj,
    dumps_canonical,
    map_from_obj,
    map_to_obj,
    ring_from_obj,
    ring_hash,
    ring_ref,
    ring_to_obj,
)
from .maps import (
    AdditiveMap,
    BimoduleIsomorphism,
    RingIsomorphism,
    compose_maps,
    identity_iso,
    identity_map,
    inner_automorphism,
    invert_map,
    ring_iso_failure,
    ring_units,
    unit_inverse,
    verify_ring_iso,
)
from .morphisms import (
    CornerQuadruple,
    IsoDecomposition,
    IsoLayer,
    check_corner_quadruple,
    corner_decompose,
    corner_synthesize,
    enumerate_isomorphisms,
    iso_decompose,
    iso_search,
    iso_synthesize,
)
from .oracle import (
    brute_aut_count,
    brute_isos,
    brute_semicentral,
    brute_semicentral_list,
    brute_triangular_check,
)
from .presentation import (
    DEFAULT_ENUMERATION_CAP,
    Element,
    RingPresentation,
    validate_presentation,
)
from .sequences import TriangularSequence, is_strongly_triangular, triangularity_failure
from .structure import (
    PeirceDecomposition,
    admissible_orders,
    detect_direct_sum,
    peirce_decompose,
    reorder_front,
)
from .subgroups import Subgroup
from .triangulate import complete_triangulating_set, extend_semicentral, locate_reduced

__all__ = [
    "AdditiveMap",
    "AmbientMismatch",
    "AutomorphismGroup",
    "BimoduleIsomorphism",
    "CapExceeded",
    "CornerQuadruple",
    "CornerRing",
    "DEFAULT_ENUMERATION_CAP",
    "DomainError",
    "Element",
    "InadmissiblePermutation",
    "InconsistentQuadruple",
    "InvalidSequence",
    "IsoDecomposition",
    "IsoLayer",
    "LocationMismatch",
    "NonAssociative",
    "NotBijective",
    "NotIdempotent",
    "NotIsomorphism",
    "NotSemicentral",
    "NotSemicentralReduced",
    "OrderViolation",
    "PeirceDecomposition",
    "PreconditionViolated",
    "RingIsomorphism",
    "RingPresentation",
    "ShapeMismatch",
    "StructureViolation",
    "Subgroup",
    "TooManyBlocks",
    "ToolkitError",
    "TriangularSequence",
    "UnitFailure",
    "ValidationError",
    "admissible_orders",
    "aut_group",
    "aut_order",
    "brute_aut_count",
    "brute_isos",
    "brute_semicentral",
    "brute_semicentral_list",
    "brute_triangular_check",
    "check_corner_quadruple",
    "check_ring_ref",
    "complete_triangulating_set",
    "compose_maps",
    "corner_decompose",
    "corner_ring",
    "corner_synthesize",
    "decomposition_from_obj",
    "decomposition_to_obj",
    "detect_direct_sum",
    "dumps_canonical",
    "enumerate_idempotents",
    "enumerate_isomorphisms",
    "extend_semicentral",
    "identity_iso",
    "identity_map",
    "inner_automorphism",
    "invert_map",
    "is_semicentral",
    "is_semicentral_reduced",
    "is_strongly_triangular",
    "iso_decompose",
    "iso_search",
    "iso_synthesize",
    "locate_reduced",
    "map_from_obj",
    "map_to_obj",
    "peirce_component",
    "peirce_decompose",
    "reorder_front",
    "ring_from_obj",
    "ring_hash",
    "ring_iso_failure",
    "ring_ref",
    "ring_to_obj",
    "ring_units",
    "triangularity_failure",
    "unit_inverse",
    "validate_presentation",
    "verify_ring_iso",
]
