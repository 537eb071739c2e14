"""Exact enumeration of patterns in permutations written in standard cycle form.

The package computes joint distributions of cycle counts and pattern
occurrences (classical, dashed and partially ordered patterns), their
generating functions via brute force and via weighted-lattice-path
continued fractions, closed-form counting identities, and the growth
bijections that transport Dyck-path statistics to pattern avoiders.
Everything is exact integer arithmetic, verifiable by desk-scale
exhaustive enumeration.
"""

from .exceptions import CapExceeded, ParseError
from .patterns import (
    BoundaryWord,
    Pattern,
    avoids,
    boundary_word,
    count_cyclic_occurrences,
    count_occurrences,
    parse_pattern,
)
from .permutations import (
    ArcDiagram,
    CycleForm,
    Permutation,
    arc_diagram,
    cycle_tail,
    enumerate_permutations,
    flatten,
    invert,
    left_to_right_minima,
    parse_permutation,
    reduce_word,
    standard_cycle_form,
    unflatten,
)
from .polynomials import MultiPoly, SeriesZ, format_poly, format_series
from .series import (
    avoidance_table,
    brute_force_series,
    catalan,
    catalan_triangle,
    classical_distribution,
    classical_series,
    inversion_product_series,
    joint_distribution,
    narayana,
    qnumber,
    single_cycle_distribution,
    stirling2,
)
from .paths import (
    ContinuedFractionScheme,
    WeightScheme,
    arc_path,
    builtin_scheme,
    cf_series,
    enumerate_dyck,
    enumerate_motzkin,
    evaluate_continued_fraction,
    parse_path,
    path_stats,
    path_weight,
    verify_phi_weights,
    weighted_sum_series,
)
from .operators import (
    FAMILIES,
    NotInClassError,
    OperatorFamily,
    apply_operator,
    apply_sequence,
    check_321_two_cycle,
    flattened_inverse,
    generate,
    get_family,
    operator_sequence,
    transport,
)

__version__ = "0.1.0"
