"""distgraph: the 2-distance graph operator, self 2-distance graphs, and
an exhaustive verification suite for their small-order classifications."""

from .graph import (
    INFINITY,
    Graph,
    GraphError,
    MetricsReport,
    bfs_distances,
    build_graph,
    complement,
    component_masks,
    induced_subgraph,
    is_connected,
    is_two_connected,
    metrics,
)
from .canon import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_key,
    find_subgraph,
)
from .distance import (
    EdgeIdentityReport,
    distance_graph,
    edge_identity_report,
    is_self_two_distance,
)
from .patterns import (
    PatternReport,
    has_c4_subgraph,
    has_diamond,
    pattern_report,
    triangle_provenance,
    triangles,
    triangles_pairwise_disjoint,
)
from .families import (
    basic_family,
    edged_product,
    named_graph,
    paley,
    prop23_construction,
    random_graph,
)
from .cayley import (
    GroupTable,
    cayley_graph,
    distance_identity_check,
    group_table,
    product_set,
)
from .enumeration import (
    EnumerationError,
    SearchCertificate,
    SearchFilter,
    enumerate_graphs,
    search_self_two_distance,
)
from .verify import (
    SrgParams,
    VerificationReport,
    conjecture_scan,
    srg_parameters,
    verify_classification,
    verify_no_cubic,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6

__version__ = "0.1.0"
