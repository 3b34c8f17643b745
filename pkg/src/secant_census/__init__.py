"""Exact counts of secant planes to linear series on general curves.

Two independent engines compute the same numbers: coefficient extraction
from a symmetrized generating function (``macdonald``) and traversal
counts of prohibition grids arising from degenerations to elliptic chains
(``census``, ``plucker``).  The ``chains`` module provides the word,
tableau, and vanishing-order machinery on elliptic chains together with
exhaustively verified shift bounds, and ``iecf`` re-derives the grid
stratification from closed-form inclusion-exclusion.
"""

from .algebra import (
    Partition,
    TruncatedMultiPoly,
    binom,
    multinomial,
    partitions_of,
    poly_coefficient,
)
from .census import (
    GridSpec,
    ProhibitionSequence,
    count_r1,
    count_set_S,
    count_traversals_brute,
    count_traversals_dp,
    enumerate_W,
    path_count_gamma,
    r1_grid,
    word_descent_strata,
)
from .chains import (
    ClaimReport,
    NearConsecSeq,
    VanishingTable,
    Word,
    canonical_word,
    eh_compatible,
    enumerate_tableaux,
    gap_sequence,
    load_packaged_table,
    load_vanishing_table,
    shift,
    tableau_to_word,
    vanishing_sequences,
    verify_claim_A,
    verify_claim_B,
    word_to_tableau,
)
from .iecf import c_d, load_gamma_table, m_d, n_exact_closed, n_plus, n_top
from .macdonald import (
    SecantParams,
    eta,
    macdonald_general,
    macdonald_r1,
    macdonald_rs1,
    mu,
    rho,
)
from .plucker import (
    PluckerChain,
    chain_strata,
    count_over_prohibitions,
    count_rs1,
    count_rs1_brute,
    count_rs1_stratified,
    maximal_chains,
    plucker_poset,
    prohibition_of_chain,
)

__version__ = "0.1.0"

__all__ = [
    "ClaimReport",
    "GridSpec",
    "NearConsecSeq",
    "Partition",
    "PluckerChain",
    "ProhibitionSequence",
    "SecantParams",
    "TruncatedMultiPoly",
    "VanishingTable",
    "Word",
    "binom",
    "c_d",
    "canonical_word",
    "chain_strata",
    "count_over_prohibitions",
    "count_r1",
    "count_rs1",
    "count_rs1_brute",
    "count_rs1_stratified",
    "count_set_S",
    "count_traversals_brute",
    "count_traversals_dp",
    "eh_compatible",
    "enumerate_W",
    "enumerate_tableaux",
    "eta",
    "gap_sequence",
    "load_gamma_table",
    "load_packaged_table",
    "load_vanishing_table",
    "m_d",
    "macdonald_general",
    "macdonald_r1",
    "macdonald_rs1",
    "maximal_chains",
    "mu",
    "multinomial",
    "n_exact_closed",
    "n_plus",
    "n_top",
    "partitions_of",
    "path_count_gamma",
    "plucker_poset",
    "poly_coefficient",
    "prohibition_of_chain",
    "r1_grid",
    "rho",
    "shift",
    "tableau_to_word",
    "vanishing_sequences",
    "verify_claim_A",
    "verify_claim_B",
    "word_descent_strata",
    "word_to_tableau",
]
