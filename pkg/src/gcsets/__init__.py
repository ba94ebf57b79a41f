"""Simplicial complexes, squarefree monomial ideals and GC interpolation node sets."""

from .chung_yao import chung_yao_ideal, determinantal_check, generic_forms, generic_matrix
from .cm import (
    bicm_fvector_factorization,
    bicm_report,
    fv_duality_check,
    is_bicm,
    is_cohen_macaulay,
    reduced_homology,
)
from .complex import (
    SimplicialComplex,
    alexander_dual,
    f_vector,
    from_facets,
    is_pure,
    link,
    minimal_nonfaces,
    skeleton,
)
from .errors import (
    DegreeMismatchError,
    GCSetsError,
    InvalidInputError,
    MixedDegreeError,
    NonGenericError,
    NonPureError,
    ParameterError,
    PreconditionError,
)
from .gc import GCParameters, GCWitness, infer_parameters, monomial_gc_report, monomial_gc_witness
from .geometry import (
    LinearForm,
    PointConfiguration,
    ProjectivePoint,
    SpecializationMap,
    gc_certificates,
    generators_from_certificates,
    is_n_correct,
    maximal_hyperplanes,
    resolution_profile,
    spanned_hyperplanes,
    specialize,
    verify,
)
from .ideal import (
    PrimeComponent,
    SquarefreeMonomialIdeal,
    codim_degree,
    complex_of,
    contains_monomial,
    dual_ideal,
    primary_decomposition,
    sr_ideal,
)

__version__ = "0.1.0"
