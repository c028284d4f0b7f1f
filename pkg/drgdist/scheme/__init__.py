from .intersection_array import (
    IntersectionArray,
    CorpusLine,
    FeasibilityReport,
    format_intersection_array,
    parse_intersection_array,
    read_corpus,
    is_feasible,
    is_antipodal,
    is_bipartite,
)
from .spectrum import (
    Spectrum,
    eigenvalues,
    cosine_sequence,
    spectrum,
    characteristic_polynomial,
    recurrence_residuals,
)
from .distortion import (
    DistortionReport,
    AntipodalRow,
    embedding_distortion_sq,
    vallentin_bound_sq,
    analyze,
    antipodal_counterexample_check,
    antipodal_ratio_table,
    diameter3_closed_form,
    diameter3_ratio,
    srg_closed_form,
)
from .conjectures import (
    ConjectureVerdict,
    CorpusEntry,
    CorpusSummary,
    check_conjecture1,
    check_conjecture2,
    verdict,
    check_corpus,
)
