"""Exact-arithmetic non-existence certificates for strongly regular graph
parameter tuples."""

from .cliquebound import K4Bound, PairClass, PairProfile, gegenbauer_eval, k4_lower_bound, pair_profile
from .gramtest import (
    Certificate,
    MRange,
    Verdict,
    WSplitWitness,
    alpha_min,
    decide,
    m_lower,
    m_upper,
    m_upper_exact,
    wsplit_contradiction,
)
from .params import (
    FeasibilityReport,
    InvalidParamsError,
    Spectrum,
    SrgParams,
    classical_feasibility,
    derive_spectrum,
    krein_parameters,
    krein_q22_zero,
    subconstituent_scan,
)
from .representation import (
    BivariateQuadratic,
    LinPoly,
    ReprConstants,
    SymbolicGram2,
    gram2,
    gram3_det,
    gram3_entries,
    repr_constants,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateQuadratic",
    "Certificate",
    "FeasibilityReport",
    "InvalidParamsError",
    "K4Bound",
    "LinPoly",
    "MRange",
    "PairClass",
    "PairProfile",
    "ReprConstants",
    "Spectrum",
    "SrgParams",
    "SymbolicGram2",
    "Verdict",
    "WSplitWitness",
    "alpha_min",
    "classical_feasibility",
    "decide",
    "derive_spectrum",
    "gegenbauer_eval",
    "gram2",
    "gram3_det",
    "gram3_entries",
    "k4_lower_bound",
    "krein_parameters",
    "krein_q22_zero",
    "m_lower",
    "m_upper",
    "m_upper_exact",
    "pair_profile",
    "repr_constants",
    "subconstituent_scan",
    "wsplit_contradiction",
    "__version__",
]
