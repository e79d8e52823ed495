"""netgame: a network-formation game on Katz centrality.

Players earn reward * (component size - 1) * scaled Katz centrality and pay
a per-link cost.  The package computes those payoffs, evaluates closed-form
stability conditions for complete and star networks, and runs randomized
best-response link dynamics to pairwise-stable networks, with a CLI for
simulations, sweeps, and closed-form verification.
"""
from .centrality import (
    AlphaGuardError,
    CentralityReport,
    alpha_guard,
    raw_katz,
    scaled_component_katz,
)
from .closed_forms import (
    StarWindow,
    VerificationReport,
    VerificationRow,
    complete_is_stable,
    complete_scaled,
    complete_stable_threshold,
    nearly_complete_scaled,
    printed_nearly_complete_intact,
    star_leaf_link_scaled,
    star_scaled,
    star_window,
    verify_closed_forms,
)
from .core import backend_name
from .dynamics import (
    DynamicsConfig,
    ProposalEvent,
    RunSummary,
    SimulationTrace,
    StabilityCertificate,
    StabilityWitness,
    is_pairwise_stable,
    propose_step,
    run_batch,
    run_to_stability,
    summarize,
    unrank_pair,
)
from .graph import (
    ComponentLabeling,
    EdgeAbsentError,
    EdgeExistsError,
    EdgeListFormatError,
    Graph,
    GraphError,
    SelfLoopError,
    VertexRangeError,
    make_complete,
    make_nearly_complete,
    make_star,
    read_edge_list,
    spectral_radius,
    write_edge_list,
)
from .payoff import (
    GameConfig,
    PayoffReport,
    benefit,
    cost,
    marginal_add,
    marginal_delete,
    payoff_vector,
    payoffs_from_report,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaGuardError",
    "CentralityReport",
    "ComponentLabeling",
    "DynamicsConfig",
    "EdgeAbsentError",
    "EdgeExistsError",
    "EdgeListFormatError",
    "GameConfig",
    "Graph",
    "GraphError",
    "PayoffReport",
    "ProposalEvent",
    "RunSummary",
    "SelfLoopError",
    "SimulationTrace",
    "StabilityCertificate",
    "StabilityWitness",
    "StarWindow",
    "VerificationReport",
    "VerificationRow",
    "VertexRangeError",
    "alpha_guard",
    "backend_name",
    "benefit",
    "complete_is_stable",
    "complete_scaled",
    "complete_stable_threshold",
    "cost",
    "is_pairwise_stable",
    "make_complete",
    "make_nearly_complete",
    "make_star",
    "marginal_add",
    "marginal_delete",
    "nearly_complete_scaled",
    "payoff_vector",
    "payoffs_from_report",
    "printed_nearly_complete_intact",
    "propose_step",
    "raw_katz",
    "read_edge_list",
    "run_batch",
    "run_to_stability",
    "scaled_component_katz",
    "spectral_radius",
    "star_leaf_link_scaled",
    "star_scaled",
    "star_window",
    "summarize",
    "unrank_pair",
    "verify_closed_forms",
    "write_edge_list",
    "__version__",
]
