"""Exact R- and R-tilde polynomials on symmetric groups.

Everything is exact integer arithmetic on immutable values: permutations
in one-line notation, polynomials in q with Python-int coefficients,
labeled Bruhat paths, and the sign-reversing pairings that prove the
alternating-sum identities this package verifies.  See the README for
the command-line interface.
"""

from klrpoly.bruhat import (
    BruhatArc,
    arcs_from,
    bruhat_leq,
    interval,
    interval_ending_with,
)
from klrpoly.involution import (
    FIXED,
    RefinementReport,
    SIntervalReport,
    canonical_fixed_point,
    classify_s_interval,
    interval_pairing,
    parity_census,
    refined_reflect,
    refinement_sum,
    reflect,
)
from klrpoly.paths import (
    BruhatPath,
    VPath,
    format_path,
    format_vpath,
    lex_compare,
    monotone_paths,
    path_to_json,
    unique_maximal_path,
    vpath_signed_sum,
    vpaths,
)
from klrpoly.perm import (
    Permutation,
    Transposition,
    format_permutation,
    identity,
    length,
    multiply_right,
    parse_permutation,
    right_descents,
    symmetric_group,
    transpositions,
)
from klrpoly.poly import ONE, Q, ZERO, IntPolynomial, LaurentPolynomial, substitute_shift
from klrpoly.rpoly import (
    RTable,
    inversion_sum,
    rpoly_from_rtilde,
    rpoly_r,
    rtilde,
    rtilde_by_paths,
)

__version__ = "0.1.0"
