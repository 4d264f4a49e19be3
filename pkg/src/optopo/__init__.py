"""Finite-model toolkit for operator topological spaces.

Build small topologies, attach an associated operator, decide membership
in generalized open-set and continuity classes, define new classes in a
small DSL, and exhaustively verify or refute implications over every
instance within size bounds.
"""

from .core import (
    AxiomViolation,
    BoundsExceeded,
    GroundSet,
    Topology,
    closure,
    count_topologies,
    enumerate_topologies,
    interior,
    make_topology,
    topology_from_dict,
)
from .setclasses import (
    SetClassId,
    class_closure,
    class_interior,
    is_extremally_disconnected,
    is_in_class,
    is_r_compact,
    is_sigma_space,
    is_urysohn,
    members_of_class,
)
from .operators import (
    NotAssociated,
    Operator,
    OperatorKind,
    OperatorSpace,
    apply_operator,
    bind_operator,
    is_tstar_closed,
    is_tstar_open,
    operator_from_name,
    tstar_closure,
)
from .functions import (
    FunctionClassId,
    FunctionInstance,
    GraphPropertyId,
    function_instance_from_dict,
    graph_has,
    is_contra_tstar_compact,
    is_gtsr_closed,
    preimage,
    satisfies,
)
from .dsl import (
    Definition,
    DslSyntaxError,
    DslTypeError,
    eval_funclass,
    eval_setclass,
    parse,
    parse_target,
    pretty,
    stdlib,
)
from .search import (
    Outcome,
    PropositionId,
    SearchBounds,
    Verdict,
    find_counterexample,
    total_instances,
    verify_implication,
    verify_proposition,
)

__all__ = [
    "AxiomViolation", "BoundsExceeded", "GroundSet", "Topology",
    "closure", "count_topologies", "enumerate_topologies", "interior",
    "make_topology", "topology_from_dict",
    "SetClassId", "class_closure", "class_interior",
    "is_extremally_disconnected", "is_in_class", "is_r_compact",
    "is_sigma_space", "is_urysohn", "members_of_class",
    "NotAssociated", "Operator", "OperatorKind", "OperatorSpace",
    "apply_operator", "bind_operator", "is_tstar_closed", "is_tstar_open",
    "operator_from_name", "tstar_closure",
    "FunctionClassId", "FunctionInstance", "GraphPropertyId",
    "function_instance_from_dict", "graph_has", "is_contra_tstar_compact",
    "is_gtsr_closed", "preimage", "satisfies",
    "Definition", "DslSyntaxError", "DslTypeError", "eval_funclass",
    "eval_setclass", "parse", "parse_target", "pretty", "stdlib",
    "Outcome", "PropositionId", "SearchBounds", "Verdict",
    "find_counterexample", "total_instances", "verify_implication",
    "verify_proposition",
]

__version__ = "0.1.0"
