"""k-forcing and k-power domination: propagation, exact solvers, graph
transformations, tight-example generators and an inequality verifier."""

from .exceptions import (
    BudgetExceededError,
    EmptyGraphError,
    EmptySetError,
    HypothesisNotMetError,
    InvalidVertexError,
    KForcingError,
    PreconditionError,
)
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    gadget_gpr,
    gadget_lq,
    gadget_tkc,
    gadget_uq,
    path,
    prefix_block,
    prefix_partition,
    random_connected,
    sierpinski,
    star,
)
from .graph import (
    ContractionResult,
    Graph,
    closed_neighborhood,
    components,
    contract,
    degree_stats,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
    neighbors,
    open_neighborhood,
)
from .io import format_graph, parse_graph, read_graph, write_graph
from .propagation import (
    PropagationTrace,
    forcing_closure,
    is_k_forcing_set,
    is_k_forcing_set_of,
    is_k_power_dominating_set,
    is_k_power_dominating_set_of,
    power_closure,
)
from .solvers import (
    DominationSolver,
    KForcingSolver,
    KPowerDominationSolver,
    SolveResult,
    external_private_neighbors,
    forcing_set_from_pds,
    min_dominating,
    min_k_forcing,
    min_k_pds_with_external_privates,
    min_k_power_dominating,
)
from .transforms import (
    Contraction,
    PartitionBound,
    XHat,
    build_xhat,
    pd_contraction_bounds,
    pd_low_degree_bounds,
    pd_partition_bound,
    zf_contraction_bounds,
    zf_partition_bound,
)
from .verifier import (
    BoundReport,
    check_named_families,
    check_sierpinski_formula,
    check_surgery_equivalences,
    run_inequality_suite,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
