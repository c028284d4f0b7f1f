from .gaussian import gaussian_binomial, q_int
from .classical import ClassicalParameters, classical_to_ia
from .eberlein import eberlein, eberlein_odd, odd_smallest_eigenvalue_indices, odd_cosine_distance
from .hermitian import hermitian_eigenvalues, hermitian_eigenmatrix, hermitian_cosines, hermitian_w_d
from .families import (
    Family,
    ClosedFormRow,
    list_families,
    get_family,
    parse_param,
    family_ia,
    classical_parameters,
    closed_form_c2_sq,
    closed_form_row,
    unitary_dual_polar_negative,
    hadamard_closed_form,
    hadamard_counterexample_threshold,
    odd_closed_form_ratio,
    hermitian_closed_form_ratio,
)
