"""Exact computation on simplicial complexes and their Stanley-Reisner rings.

The package computes face/h/g-vectors, tests M-sequences, builds Artinian
reductions by linear systems of parameters over Q or a large prime field,
searches and certifies weak Lefschetz elements, walks complexes through
bistellar moves while tracking the g-vector ledger, classifies complexes by
reduced homology, corrects manifold h-vectors through their Betti numbers,
and evaluates the even cohomology of complete simplicial fans.
"""

from .complexes import (
    BistellarMove,
    SimplicialComplex,
    apply_bistellar,
    boundary_simplex,
    complex_from_json,
    complex_to_json,
    cone,
    cross_polytope_boundary,
    deletion,
    find_bistellar_moves,
    format_facets,
    join,
    kuehnel_torus,
    link,
    load_complex,
    parse_facets,
    projective_plane,
    random_pachner_walk,
    relabel,
    reverse_move,
    simplex,
    star,
    stellar_subdivision,
)
from .errors import LefschetzError
from .exactla import (
    DEFAULT_PRIME,
    GF,
    Matrix,
    QQ,
    default_prime_field,
    parse_field,
    spawn_rng,
    symmetric_lift,
)
from .facering import (
    GradedQuotient,
    HilbertSeries,
    LinearSystem,
    artinian_reduction,
    face_monomial_class,
    hilbert_function,
    hilbert_series,
    is_generic,
    is_lsop,
    multiplication_map,
    random_lsop,
    socle,
)
from .homology import (
    BettiProfile,
    boundary_matrix,
    classify,
    is_buchsbaum,
    is_cohen_macaulay,
    is_connected,
    is_gorenstein_star,
    is_homology_manifold,
    is_homology_sphere,
    is_orientable,
    reduced_betti,
)
from .toric import (
    Fan,
    fan_from_json,
    fan_to_json,
    format_fan,
    load_fan,
    parse_fan,
    product_of_lines_fan,
    projective_plane_fan,
    ray_system,
    stellar_refine,
    toric_betti,
    toric_m_check,
    toric_wle,
    underlying_complex,
)
from .vectors import (
    GradedVector,
    check_g_conditions,
    expected_g_after_move,
    f_to_h,
    f_vector,
    g_vector,
    gks_inequality,
    h_to_f,
    h_vector,
    is_m_sequence,
    macaulay_expansion,
    pachner_g_delta,
    pseudopower,
)
from .wlp import (
    WlpCertificate,
    certify_over_q,
    check_wle,
    check_wle_middle,
    find_wle,
    g_doubleprime,
    h_doubleprime,
    h_prime,
    kalai_g_check,
    lemma35_check,
    lemma36_check,
    novik_swartz_check,
    rigidity_check,
    wle_transfer,
)

__version__ = "0.1.0"
