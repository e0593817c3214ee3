"""spexkit: spectral extremal graph computations.

Constructions and invariants for small dense graphs, closed-form
spectral radii of complete multipartite families, extremal edge counts
and spectral extremal values under clique and matching constraints, and
an exhaustive small-n search oracle that certifies the formulas.
"""

from .errors import (
    CapacityError,
    DomainError,
    Graph6Error,
    NumericalError,
    SpexError,
)
from .extremal import (
    ExtremalValue,
    balance_move,
    crossover_threshold,
    edges_gkns,
    edges_turan,
    ex_alon_frankl,
    ex_erdos_gallai,
    spex_main,
    spex_matching,
    spex_turan,
)
from .graph6 import graph6_decode, graph6_encode
from .graphs import (
    Graph,
    PartSizes,
    complete_graph,
    complete_multipartite,
    disjoint_union,
    empty_graph,
    gkns_parts,
    join,
    join_family,
    shift_vertex,
    switch,
    switch_sets,
    turan_parts,
)
from .invariants import (
    TutteBergeWitness,
    components,
    has_clique,
    is_family_free,
    matching_number,
    matching_number_bruteforce,
    tutte_berge_min,
)
from .oracle import SearchReport, enumerate_extremal, enumerate_matching_extremal
from .spectral import (
    QuotientMatrix,
    SpectralResult,
    f0_eval,
    f0_largest_root,
    h_eval,
    join_family_lambda,
    multipartite_charpoly_eval,
    multipartite_lambda,
    perron_root,
    quotient_matrix,
    spectral_radius_dense,
)

__version__ = "0.1.0"
