"""paritylab: decide, construct, and certify parity factors in undirected graphs."""

__version__ = "0.1.0"

from .connectivity import CutCertificate, edge_connectivity, is_k_edge_connected
from .experiment import ExperimentConfig, run_verification_experiment
from .generators import (
    ExtremalParams,
    complete_graph,
    cycle,
    extremal_construction,
    j_block,
    petersen,
    random_regular,
)
from .graph import (
    Graph,
    VertexSet,
    build_graph,
    components_after_removal,
    edges_between,
    emit_graph,
    parse_graph,
)
from .lovasz import (
    Decision,
    DeficiencyWitness,
    ParitySpec,
    decide_by_enumeration,
    deficiency,
    f_odd_components,
    verify_witness,
)
from .matching import Matching, has_perfect_matching, max_matching
from .solver import (
    Factor,
    GadgetMap,
    brute_force_factor,
    build_parity_gadget,
    find_parity_factor,
    verify_factor,
)
from .theorems import (
    ConditionReport,
    check_bsw_conditions,
    check_gallai_conditions,
    check_main_conditions,
    component_inequality_check,
    m_star,
)

__all__ = [
    "CutCertificate",
    "ConditionReport",
    "Decision",
    "DeficiencyWitness",
    "ExperimentConfig",
    "ExtremalParams",
    "Factor",
    "GadgetMap",
    "Graph",
    "Matching",
    "ParitySpec",
    "VertexSet",
    "brute_force_factor",
    "build_graph",
    "build_parity_gadget",
    "check_bsw_conditions",
    "check_gallai_conditions",
    "check_main_conditions",
    "complete_graph",
    "component_inequality_check",
    "components_after_removal",
    "cycle",
    "decide_by_enumeration",
    "deficiency",
    "edge_connectivity",
    "edges_between",
    "emit_graph",
    "extremal_construction",
    "f_odd_components",
    "find_parity_factor",
    "has_perfect_matching",
    "is_k_edge_connected",
    "j_block",
    "m_star",
    "max_matching",
    "parse_graph",
    "petersen",
    "random_regular",
    "run_verification_experiment",
    "verify_factor",
    "verify_witness",
]
