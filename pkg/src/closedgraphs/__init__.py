"""Closed graphs, clique-complex structure, and quadratic Groebner bases.

A graph is closed when some vertex labelling makes every split
neighbourhood a pair of cliques; equivalently its clique complex is a
closed linear quasi-tree, and equivalently the binomial ideal generated by
its edge determinants has a quadratic Groebner basis for some term order.
This package decides closedness, constructs witness labellings, and
certifies verdicts through the Groebner route.
"""

from .complexes import (
    ComplexViolation,
    IntersectionTable,
    OrderedComplex,
    SimplicialComplex,
    clique_complex,
    complex_from_json,
    facets_are_intervals,
    intersection_table,
    is_closed_complex,
    is_leaf,
    leaf_branches,
    linear_quasi_tree_order,
)
from .errors import (
    CapExceededError,
    ClosedGraphsError,
    EdgeListParseError,
    InternalInvariantError,
    LabellingError,
    NotClosedComplexError,
    OrderSpecError,
    UnknownVertexError,
)
from .graphs import (
    ClosednessWitness,
    Graph,
    Labelling,
    NeighborhoodSplit,
    connected_components,
    find_induced_claw,
    is_clique,
    is_closed_wrt,
    is_closed_wrt_pairs,
    load_graph,
    split_neighborhood,
)
from .groebner import (
    Binomial,
    GroebnerBasis,
    TermOrder,
    buchberger,
    certify_basis,
    edge_binomials,
    is_quadratic,
    monomial,
    monomial_multidegree,
    multidegree,
    normal_form,
    oriented_binomial,
    oriented_generators,
    reduce_basis,
    s_polynomial,
)
from .labelling import (
    BlockPartition,
    BorderChain,
    ClosednessResult,
    ComponentCertificate,
    ResidualBlock,
    StageFailure,
    border_chain,
    closed_labelling,
    find_closed_labelling,
    residual_blocks,
)
from .oracle import (
    DEFAULT_CAP,
    EquivalenceReport,
    RandomSource,
    all_connected_graphs,
    brute_force_closed,
    equivalence_suite,
    random_closed_graph,
    random_term_order,
)
from .orientation import (
    OrientedGraph,
    find_directed_cycle,
    orient,
    orientation_to_json_dict,
    topological_labelling,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
