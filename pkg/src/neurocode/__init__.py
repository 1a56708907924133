"""Neural codes, pseudomonomial ideals, and their simplicial complexes.

The library decides whether a code is intersection-complete or
max-intersection-complete in three mutually independent ways per
property (brute-force closure, a canonical-form criterion, and a
criterion on the factor complex of the complement code), and exposes the
full dictionary between codes, neural ideals, Stanley-Reisner ideals,
and the factor and polar complexes obtained by polarization.

Everything is exact, deterministic combinatorics on subset bitmasks.
"""

from .classify import (
    ClassificationReport,
    DictionaryCheck,
    DictionaryReport,
    FacetWitness,
    IntersectionWitness,
    MicCertificate,
    MicCertificateEntry,
    PseudomonomialWitness,
    is_intersection_complete_bruteforce,
    is_intersection_complete_cf,
    is_intersection_complete_facets,
    is_mic_algebraic,
    is_mic_bruteforce,
    is_mic_facets,
    verify_dictionary,
)
from .codes import (
    MAX_NEURONS,
    Code,
    Interval,
    InvalidCodeError,
    full_mask,
    mask_from_neurons,
    neurons_from_mask,
    submasks,
)
from .complexes import (
    ENUM_MAX_N,
    PolarFace,
    SimplicialComplex,
    SquarefreeMonomialIdeal,
    Universe,
    complex_of_ideal,
    downward_closure,
    face_to_interval,
    factor_complex,
    factor_ideal,
    ideal_of_complex,
    is_effective,
    minimal_transversals,
    polar_complex,
    polar_ideal,
    polarize,
    prime_sets,
    sr_minimal_primes,
)
from .ideals import (
    CF_MAX_N,
    CanonicalForm,
    CapExceededError,
    PrimePseudomonomialIdeal,
    Pseudomonomial,
    canonical_form,
    cf_monomials,
    divides,
    evaluate,
    in_neural_ideal,
    indicator,
    interval_to_pm,
    primary_decomposition,
)
from .io import (
    CodeDocument,
    ParseError,
    ParseWarning,
    parse_code,
    parse_document,
    render_code_document,
)
from .survey import (
    SURVEY_MAX_N,
    MethodDisagreement,
    SurveyRow,
    SurveySummary,
    SurveyTooLargeError,
    code_from_id,
    summarize,
    survey,
)

__version__ = "0.1.0"

__all__ = [
    "CF_MAX_N",
    "ENUM_MAX_N",
    "MAX_NEURONS",
    "SURVEY_MAX_N",
    "CanonicalForm",
    "CapExceededError",
    "ClassificationReport",
    "Code",
    "CodeDocument",
    "DictionaryCheck",
    "DictionaryReport",
    "FacetWitness",
    "IntersectionWitness",
    "Interval",
    "InvalidCodeError",
    "MethodDisagreement",
    "MicCertificate",
    "MicCertificateEntry",
    "ParseError",
    "ParseWarning",
    "PolarFace",
    "PrimePseudomonomialIdeal",
    "Pseudomonomial",
    "PseudomonomialWitness",
    "SimplicialComplex",
    "SquarefreeMonomialIdeal",
    "SurveyRow",
    "SurveySummary",
    "SurveyTooLargeError",
    "Universe",
    "canonical_form",
    "cf_monomials",
    "code_from_id",
    "complex_of_ideal",
    "divides",
    "downward_closure",
    "evaluate",
    "face_to_interval",
    "factor_complex",
    "factor_ideal",
    "full_mask",
    "ideal_of_complex",
    "in_neural_ideal",
    "indicator",
    "interval_to_pm",
    "is_effective",
    "is_intersection_complete_bruteforce",
    "is_intersection_complete_cf",
    "is_intersection_complete_facets",
    "is_mic_algebraic",
    "is_mic_bruteforce",
    "is_mic_facets",
    "mask_from_neurons",
    "minimal_transversals",
    "neurons_from_mask",
    "parse_code",
    "parse_document",
    "polar_complex",
    "polar_ideal",
    "polarize",
    "primary_decomposition",
    "prime_sets",
    "render_code_document",
    "sr_minimal_primes",
    "submasks",
    "summarize",
    "survey",
    "verify_dictionary",
]
