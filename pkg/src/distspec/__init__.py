"""Certified distance spectra of graphs and the structural characterization of
connected graphs whose second distance eigenvalue is below -0.5858."""

from .census import anchor_eigenvalues, enumerate_connected, reproduce_tables, verify_theorem
from .classifier import StructuralForm, Verdict, classify, classify_structural, recognize_structure, theorem_condition
from .families import (
    CliqueJoinSpec,
    FamilyPolynomial,
    build_graph,
    eval_at,
    factorization_identity_check,
    poly_f,
    poly_g,
    poly_h,
    poly_r,
    poly_s,
)
from .graph import (
    DistanceMatrix,
    Graph,
    complement,
    complete,
    cycle,
    delete_edge,
    disjoint_union,
    distance_matrix,
    join,
    path,
    scalar_union,
    star,
)
from .graph6 import emit_graph6, parse_graph6
from .polynomial import IntPolynomial
from .spectra import (
    THRESHOLD,
    CertifiedSpectrum,
    Inertia,
    Lambda2Position,
    char_poly_exact,
    compare_lambda2_threshold,
    float_spectrum,
    inertia_shifted,
    interlacing_check,
    lambda_k_enclosure,
    sturm_count_greater,
)

__version__ = "0.1.0"
