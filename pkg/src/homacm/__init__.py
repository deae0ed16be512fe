"""homacm: exact decisions about homogeneous bundles on flag varieties.

The core answers, in exact rational arithmetic, whether the irreducible
homogeneous bundle attached to a highest weight on a generalized flag
variety has intermediate cohomology in some twist, whether its twist
table is the maximal one, and enumerates the finitely many weights with
these properties.  A FastAPI service and a thin CLI wrap the library.
"""

from .classify import (
    CanonicalBundle,
    EnumerationCapExceeded,
    candidate_box,
    canonical_twist,
    enumerate_acm,
    enumerate_ulrich,
)
from .closed_forms import DatumBlocks, closed_max, datum_closed_form, verify_closed_form
from .criteria import MuNu, line_bundle_acm, mu_nu, sufficient_acm, universal_weights
from .datum import (
    AssociatedDatum,
    CohomologyRecord,
    PolarizedSpace,
    associated_datum,
    bundle_rank,
    cohomology,
    is_acm,
    is_acm_by_twists,
    is_ulrich,
    space,
)
from .roots import LieType, RootSystem, build, lie_type, weyl_dimension

__version__ = "0.1.0"

__all__ = [
    "AssociatedDatum",
    "CanonicalBundle",
    "CohomologyRecord",
    "DatumBlocks",
    "EnumerationCapExceeded",
    "LieType",
    "MuNu",
    "PolarizedSpace",
    "RootSystem",
    "associated_datum",
    "build",
    "bundle_rank",
    "candidate_box",
    "canonical_twist",
    "closed_max",
    "cohomology",
    "datum_closed_form",
    "enumerate_acm",
    "enumerate_ulrich",
    "is_acm",
    "is_acm_by_twists",
    "is_ulrich",
    "lie_type",
    "line_bundle_acm",
    "mu_nu",
    "space",
    "sufficient_acm",
    "universal_weights",
    "verify_closed_form",
    "weyl_dimension",
]
