"""Staircase permutation words, layered graphs, and toric ideal audits."""

from .binomial import Binomial, grevlex_greater, normal_form, s_binomial
from .chroma import (
    ColourSeparation,
    balance_bound_check,
    chromatic_number,
    chromatic_polynomial,
    closed_form_report,
    colour_separation,
    layered_closed_form,
    shared_balance_check,
    square_chain,
    square_chain_closed_form,
)
from .errors import (
    DomainError,
    InvalidIdentityError,
    MalformedPermutationError,
    ResourceLimitError,
    StaircaseError,
)
from .graphs import SimpleGraph
from .identities import (
    PartitionIdentity,
    colour_separation_identity,
    graver_basis,
    is_primitive,
    make_identity,
    parity_split,
    primitive_subidentities,
    proper_subidentities,
    subidentity_report,
)
from .layered import (
    BalanceMatrix,
    LayeredGraph,
    balance_matrix,
    balance_matrix_report,
    build_layered_graph,
    family_series_report,
    is_isomorphic,
    is_parity_pair,
    is_subgraph_order,
    missing_edge_polynomial,
    parity_pair_report,
    vertex_parity_report,
)
from .partition import (
    Partition,
    checkerboard,
    distinct_odd_parts,
    is_staircase,
    staircase,
    triangular_gf_report,
)
from .perm import (
    apply_word,
    enumerate_reduced_words,
    inversions,
    reduced_word_count,
    staircase_permutation,
    word_to_str,
)
from .poly import IntPolynomial
from .report import Report
from .rwgraph import (
    WordGraph,
    build_word_graph,
    count_four_cycles,
    euler_like_invariant,
    structure_report,
)
from .toric import (
    BinomialIdeal,
    HilbertData,
    MonomialIdeal,
    WeightChain,
    audit_quadric_chain_ideal,
    audit_separation_ideal,
    consecutive_quadric_ideal,
    groebner_basis,
    hilbert,
    identity_binomial,
    initial_ideal,
    separation_ideal,
    standard_monomial_counts,
    weight_chain_diagram,
)

__version__ = "0.1.0"
