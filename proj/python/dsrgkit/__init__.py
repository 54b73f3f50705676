"""Directed strongly regular graphs from association schemes and Cayley digraphs.

Thin Python layer over the C++ core. Vertex and point indices are 1-based.
"""

from ._core import (
    AxiomError,
    Digraph,
    Error,
    InputError,
    LimitError,
    Params,
    Scheme,
    appendix_scheme,
    are_isomorphic,
    aut_order,
    case_names,
    cayley,
    coherent_closure,
    complement_params,
    enumerate_feasible,
    equivalence_classes,
    group_ring_test,
    is_feasible,
    reproduce,
    schurian,
    search,
    verify,
    verify_reason,
)

__all__ = [
    "AxiomError",
    "Digraph",
    "Error",
    "InputError",
    "LimitError",
    "Params",
    "Scheme",
    "appendix_scheme",
    "are_isomorphic",
    "aut_order",
    "case_names",
    "cayley",
    "coherent_closure",
    "complement_params",
    "enumerate_feasible",
    "equivalence_classes",
    "group_ring_test",
    "is_feasible",
    "reproduce",
    "schurian",
    "search",
    "verify",
    "verify_reason",
]
