"""Exact tools for f-vectors of simplicial complexes and real-rooted polynomials."""

from .combinatorics import Cascade, binom_int, cascade, kappa, mu, shadow_size_oracle
from .polynomials import (
    IntPolynomial,
    is_real_rooted,
    is_ultra_log_concave,
    poly_add_tderiv,
    poly_dilate,
    poly_hadamard,
    poly_product,
)
from .binomial_rep import RealBinRep, binom_real, binrep, check_ceiling_condition, check_monotone, solve_binrep
from .decomposition import (
    Decomposition,
    check_conjecture_second,
    check_question_second,
    recursive_decompose,
)
from .fvectors import (
    check_admissible_chain,
    check_cor_fvector,
    check_kk,
    check_macaulay,
    f_plus_tfprime_vector,
    f_to_h,
    is_basic_admissible,
    veronese_subsequence,
)
from .complexes import (
    SimplicialComplex,
    compressed_realize,
    dilate_complex,
    f_vector,
    from_facets,
    hadamard_complex,
    join,
    link,
    link_sum_decomposition,
    random_complex,
)
from .triangles import TriangleSpec, check_rows_kk, rows, validate_spec
from .harness import CampaignReport, CorpusSpec, generate_corpus, run_campaign

__version__ = "0.1.0"
