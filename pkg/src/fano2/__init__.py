"""Exact enumeration and graded-ring analysis of the candidate Hilbert
series of Fano 3-folds polarised by -K = 2A."""

from .basket import (
    Basket,
    BasketParseError,
    EvenIndexError,
    InvalidSingularityError,
    NotCoprimeError,
    SingularityType,
    ZeroWeightError,
    enumerate_baskets,
    normalize,
    parse_basket,
    singular_rank,
    singularity_universe,
)
from .classify import (
    Candidate,
    K3_RANK_BOUND,
    anticanonical_sections,
    candidate_from_record,
    candidate_record,
    degree_extremes,
    distinct_series_count,
    enumerate_candidates,
    genus_histogram,
    k3_obstruction,
)
from .graded_rings import (
    CODIM2_CI,
    CODIM3_PFAFFIAN,
    CODIM_GE4,
    CutoffExhaustedError,
    GradedModel,
    HYPERSURFACE,
    UNKNOWN,
    classify_shape,
    corrected_inference,
    infer_generators,
    pfaffian_degrees_of,
    polarization_gaps,
)
from .riemann_roch import (
    BasketBoundError,
    FANO_INDEX,
    NonpositiveDegreeError,
    REJECTED,
    STABLE,
    UNSTABLE,
    acz12_from_basket,
    base_degree,
    hilbert_series,
    kawamata_status,
    periodic_term,
    periodic_term_raw,
    plurigenus,
    polarisation_residual,
)
from .series import (
    CutoffTooSmallError,
    DEFAULT_CUTOFF,
    NonIntegerSeriesError,
    RationalForm,
    TruncatedSeries,
    WrongPoleOrderError,
    degree_from_form,
    expand,
    numerator_wrt_weights,
    palindromy_sign,
    poly_str,
)
from .tables import (
    CheckReport,
    FixtureIntegrityError,
    TableEntry,
    load_table_entries,
    verify_all,
    verify_table_entry,
)

__version__ = "0.1.0"
