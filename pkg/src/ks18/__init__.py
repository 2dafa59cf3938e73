"""State-independent contextuality toolkit for the 18-test set.

Exposes the vector catalog and its orthogonality graph, exact graph
invariants (independence number, fractional packing, Lovasz number,
clique edge cover of the complement), a quantum simulator for the
figures of merit sigma and xi, classical ball-in-box strategies, and
noise-corrected certification of measured tables.
"""

from .algebra import (
    DensityMatrix,
    HermitianOperator,
    Projector,
    PureState,
    TOL_ALG,
    convex_mix,
    eigenprojectors_pm,
    expectation,
    is_density_matrix,
    projector_from_vector,
)
from .certify import (
    CertificationReport,
    EXACT_ADVANTAGE_THRESHOLD,
    NoiseParams,
    StateVerdict,
    TableSummary,
    XiRecomputation,
    advantage_threshold,
    band_chart_svg,
    certify,
    corrected_classical_bound,
    estimate_epsilon,
    expected_band,
    recompute_xi_from_terms,
    summary_statistics,
)
from .classical import (
    Assignment,
    BoxStrategy,
    StrategyReport,
    classical_sigma,
    construct_box_strategy,
    max_classical_sigma,
    validate_box_strategy,
    violated_edge,
)
from .datasets import (
    ENV_FIXTURES_DIR,
    FIXTURE_FILES,
    MeasurementRecord,
    dedupe_records,
    dump_fixtures,
    duplicate_keys,
    export_table,
    fixture_text,
    load_table,
    parse_table_text,
)
from .exact import ComplexFraction, ExactMatrix
from .graphs import ExclusivityGraph
from .invariants import (
    CoverResult,
    FractionalPackingResult,
    IndependenceResult,
    ThetaResult,
    TOL_LP,
    TOL_SDP,
    classical_quantum_gap,
    clique_edge_cover_complement,
    fractional_packing,
    independence_number,
    lovasz_theta,
    maximal_cliques,
    validate_clique_cover,
)
from .ksets import (
    Basis,
    ColoringSearchResult,
    KsCatalogEntry,
    KsVector,
    catalog_state,
    discrepancy_flags,
    find_bases,
    ks18_vectors,
    ks_set_dict,
    omitted_vectors,
    operator_completeness,
    orthogonality_graph,
    state_catalog,
    verify_ks_uncolorability,
)
from .quantum import (
    AuditReport,
    CANONICAL_CONTEXT_IDS,
    Context,
    NoiseChannel,
    Observable,
    Proposition,
    apply_noise,
    canonical_contexts,
    compatibility_audit,
    ideal_probability_table,
    omitted_propositions,
    omitted_vertex_map,
    outcome_projector,
    proposition_projector,
    proposition_vertex_map,
    random_density_matrix,
    random_pure_state,
    sequential_probability,
    sigma,
    xi,
    xi_terms,
)

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "AuditReport",
    "Basis",
    "BoxStrategy",
    "CANONICAL_CONTEXT_IDS",
    "CertificationReport",
    "ColoringSearchResult",
    "ComplexFraction",
    "Context",
    "CoverResult",
    "DensityMatrix",
    "ENV_FIXTURES_DIR",
    "EXACT_ADVANTAGE_THRESHOLD",
    "ExactMatrix",
    "ExclusivityGraph",
    "FIXTURE_FILES",
    "FractionalPackingResult",
    "HermitianOperator",
    "IndependenceResult",
    "KsCatalogEntry",
    "KsVector",
    "MeasurementRecord",
    "NoiseChannel",
    "NoiseParams",
    "Observable",
    "Projector",
    "Proposition",
    "PureState",
    "StateVerdict",
    "StrategyReport",
    "TOL_ALG",
    "TOL_LP",
    "TOL_SDP",
    "TableSummary",
    "ThetaResult",
    "XiRecomputation",
    "advantage_threshold",
    "apply_noise",
    "band_chart_svg",
    "canonical_contexts",
    "catalog_state",
    "certify",
    "classical_quantum_gap",
    "classical_sigma",
    "clique_edge_cover_complement",
    "compatibility_audit",
    "construct_box_strategy",
    "convex_mix",
    "corrected_classical_bound",
    "dedupe_records",
    "discrepancy_flags",
    "dump_fixtures",
    "duplicate_keys",
    "eigenprojectors_pm",
    "estimate_epsilon",
    "expectation",
    "expected_band",
    "export_table",
    "find_bases",
    "fixture_text",
    "fractional_packing",
    "ideal_probability_table",
    "independence_number",
    "is_density_matrix",
    "ks18_vectors",
    "ks_set_dict",
    "load_table",
    "lovasz_theta",
    "max_classical_sigma",
    "maximal_cliques",
    "omitted_propositions",
    "omitted_vectors",
    "omitted_vertex_map",
    "operator_completeness",
    "orthogonality_graph",
    "outcome_projector",
    "parse_table_text",
    "projector_from_vector",
    "proposition_projector",
    "proposition_vertex_map",
    "random_density_matrix",
    "random_pure_state",
    "recompute_xi_from_terms",
    "sequential_probability",
    "sigma",
    "state_catalog",
    "summary_statistics",
    "validate_box_strategy",
    "validate_clique_cover",
    "verify_ks_uncolorability",
    "violated_edge",
    "xi",
    "xi_terms",
]
