"""tokenham: token graphs, Hamiltonian certificates for fans and joins, Gray codes."""

__version__ = "0.1.0"

from .certificates import (
    CycleCertificate,
    FanFeasibility,
    NonHamWitness,
    HAMILTONIAN,
    NOT_HAMILTONIAN,
    UNKNOWN,
)
from .errors import CapExceeded, ConstructionError, ContractViolation, ParameterError
from .fan_ham import (
    double_cycle,
    double_cycle_m1,
    double_cycle_max,
    double_cycle_mid,
    fan_cycle,
    fan_feasibility,
    hub_pair_owner,
    join_cycle,
    normalize_certificate,
    single_hub_cycle,
    star_double_cycle,
    witness_over,
)
from .graph_core import (
    Graph,
    build_family,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    fan_graph,
    from_edges,
    join,
    parse_edge_list,
    path_graph,
    square_of_path_graph,
    star_graph,
    to_dot,
    to_edge_list,
)
from .graycode import (
    ClosenessRelation,
    GrayCodeListing,
    closeness_graph,
    code_from_cycle,
    fan_gray_code,
    fan_relation,
    search_gray_code,
    verify_code,
)
from .tokens import (
    TokenGraph,
    complement_vertex,
    format_token,
    rank,
    token_adjacent,
    token_graph,
    token_neighbors,
    unrank,
)
from .verification import (
    SearchResult,
    Verdict,
    WitnessCheck,
    brute_ham_cycle,
    brute_ham_path,
    check_complement_iso,
    check_witness,
    numba_enabled,
    verify_cycle,
)
