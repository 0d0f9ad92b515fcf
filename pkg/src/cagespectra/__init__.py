"""Minimal (k,g)-cages, subdivisions, and exact distance-spectral formulas.

The package constructs every realizable minimal cage family, derives the
closed-form distance spectra of the cages and of their subdivision graphs in
exact rational / quadratic-surd arithmetic, and verifies everything against
brute-force oracles: BFS distance matrices, a cyclic-Jacobi eigensolver, and
an exact integer characteristic-polynomial engine.
"""

from .cages import (
    CageFamily,
    ConstructionError,
    InadmissibleParametersError,
    MooreStatus,
    construct,
    construct_cage,
    family_for,
    moore_bound,
    moore_exists,
    parse_family,
)
from .closedforms import (
    BlockIdentityError,
    cage_adjacency_spectrum,
    cage_distance_spectrum,
    coefficient_table,
    distance_polynomial,
    distinct_count,
    dr_radius,
    shell_polynomials,
    sub_complete_bipartite_spectrum,
    sub_complete_spectrum,
    subdivision_distance_blocks,
    subdivision_quotient,
    subdivision_radius,
)
from .exactmath import (
    CharPolyCapError,
    ExactSpectrum,
    RationalPolynomial,
    Surd,
    char_poly_exact,
    divides,
    eval_poly_matrix,
)
from .graphs import (
    DisconnectedGraphError,
    EdgeListError,
    Graph,
    adjacency_matrix,
    diameter,
    distance_matrix,
    from_edge_list,
    girth,
    incidence_matrix,
    line_graph,
    regularity,
    shell_matrix,
    subdivision,
    to_edge_list,
)
from .regularity import (
    DBRArrays,
    IntersectionArray,
    QuotientMatrix,
    dbr_arrays,
    dbr_quotient_from_arrays,
    dr_intersection_array,
    is_transmission_regular,
    quotient_matrix,
    transmission,
)
from .spectra import Spectrum, eig_symmetric, group_spectrum, spectrum_matches
from .verify import VerificationReport, verification_corpus, verify_cage

__version__ = "0.1.0"
