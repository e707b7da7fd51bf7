"""Graphs with certified cospectral vertex pairs.

Exact construction and verification of adjacency-cospectral, Laplacian-
cospectral, and strongly cospectral vertex pairs via orbit-respecting gluing
of two copies of a base graph.
"""

__version__ = "0.1.0"

from .construct import (
    AttachmentEdge,
    AttachmentValidation,
    ConstructedGraph,
    CrossEdge,
    InvalidConstructionError,
    build_a_cospectral,
    build_l_cospectral,
    check_a_claims,
    check_l_claims,
    connect_orbits,
    random_instance,
    validate_attachments,
)
from .exact import (
    IntPolynomial,
    MultiplicityStructure,
    char_poly,
    first_krylov_mismatch,
    first_power_diagonal_mismatch,
    krylov_orthogonal,
    multiplicity_structure,
    power_diagonal_equal,
    power_vector,
)
from .fixtures import FIXTURE_NAMES, Fixture, FixtureError, fixture_catalog, load_fixture
from .graph import (
    CospectraError,
    EdgeListParseError,
    Graph,
    adjacency_matrix,
    delete_vertex,
    format_edge_list,
    is_connected,
    laplacian_matrix,
    parse_edge_list,
    to_dot,
)
from .orbits import (
    OrbitPartition,
    SearchLimitError,
    automorphism_orbits,
    automorphism_witness,
    same_orbit,
)
from .spectral import (
    COSPECTRAL_ONLY,
    DEFAULT_TOLERANCES,
    INCONCLUSIVE,
    NOT_COSPECTRAL,
    STRONG,
    STRONG_CERTIFIED,
    ClusteringError,
    EigenCluster,
    InducedEigenpair,
    PendantReductionReport,
    SimplicityVerdict,
    SpectralDecomposition,
    SpectralNumericError,
    StrongCospectralityResult,
    Tolerances,
    attach_pendant_reduce,
    check_strong_cospectrality,
    eigendecompose_symmetric,
    induced_eigenpairs,
    jacobi_eigh,
    lifted_span_residual,
    projection_diagonal_equal,
    strong_via_simplicity,
)
from .verify import (
    ADJACENCY,
    LAPLACIAN,
    LAPLACIAN_NOTE,
    CospectralityReport,
    InternalCheckError,
    PairReport,
    verify_a_cospectral,
    verify_l_cospectral,
    verify_pair_full,
)

__all__ = [
    "AttachmentEdge",
    "AttachmentValidation",
    "COSPECTRAL_ONLY",
    "DEFAULT_TOLERANCES",
    "INCONCLUSIVE",
    "NOT_COSPECTRAL",
    "STRONG",
    "STRONG_CERTIFIED",
    "ClusteringError",
    "ConstructedGraph",
    "CospectraError",
    "ADJACENCY",
    "LAPLACIAN",
    "LAPLACIAN_NOTE",
    "CospectralityReport",
    "CrossEdge",
    "EdgeListParseError",
    "EigenCluster",
    "Fixture",
    "FixtureError",
    "FIXTURE_NAMES",
    "Graph",
    "InducedEigenpair",
    "IntPolynomial",
    "InternalCheckError",
    "InvalidConstructionError",
    "MultiplicityStructure",
    "OrbitPartition",
    "PairReport",
    "PendantReductionReport",
    "SearchLimitError",
    "SimplicityVerdict",
    "SpectralDecomposition",
    "SpectralNumericError",
    "StrongCospectralityResult",
    "Tolerances",
    "adjacency_matrix",
    "attach_pendant_reduce",
    "automorphism_orbits",
    "automorphism_witness",
    "build_a_cospectral",
    "build_l_cospectral",
    "char_poly",
    "check_a_claims",
    "check_l_claims",
    "check_strong_cospectrality",
    "connect_orbits",
    "delete_vertex",
    "eigendecompose_symmetric",
    "first_krylov_mismatch",
    "first_power_diagonal_mismatch",
    "fixture_catalog",
    "format_edge_list",
    "induced_eigenpairs",
    "is_connected",
    "jacobi_eigh",
    "krylov_orthogonal",
    "laplacian_matrix",
    "lifted_span_residual",
    "load_fixture",
    "multiplicity_structure",
    "parse_edge_list",
    "power_diagonal_equal",
    "power_vector",
    "projection_diagonal_equal",
    "random_instance",
    "same_orbit",
    "strong_via_simplicity",
    "to_dot",
    "validate_attachments",
    "verify_a_cospectral",
    "verify_l_cospectral",
    "verify_pair_full",
]
